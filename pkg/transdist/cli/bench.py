import logging
import random
import time
from dataclasses import asdict, dataclass
from typing import Any

from transdist.cli.config import RunConfig
from transdist.cli.io import table
from transdist.solver.cycle import decompose_cycle
from transdist.solver.models import StepCounter
from transdist.tree.generate import random_cycle, random_y_tree


@dataclass
class BenchRow:
    """
    Timing of `decompose_cycle` on one random cycle.

    Attributes:
        length (int): Cycle length.
        seconds (float): Fastest wall time over the repetitions.
        steps (int): Elementary steps counted by the solver.
        steps_per_element (float): steps / length, flat when the work is linear.
        time_ratio (Optional[float]): seconds divided by the previous row's seconds.
    """

    length: int
    seconds: float
    steps: int
    steps_per_element: float
    time_ratio: float | None = None

    def to_dict(self) -> dict[str, Any]:
        return asdict(self)


def run_bench(config: RunConfig, logger: logging.Logger | None = None) -> list[BenchRow]:
    """
    Builds one random Y-tree of `config.tree_size` vertices with weights in [1, 9] and times the cycle
    decomposition of a random cycle for every requested length. Instances depend only on `config.seed`.
    """

    logger = logger or logging.getLogger(__name__)
    rng = random.Random(config.seed)
    t = random_y_tree(config.tree_size, rng, 1, 9)
    logger.info("bench tree built: %r", t)

    rows: list[BenchRow] = []
    for length in config.lengths:
        c = random_cycle(t.n, length, rng)
        best = None
        steps = 0
        for _ in range(config.repeat):
            counter = StepCounter()
            start = time.perf_counter()
            decompose_cycle(t, c, counter)
            elapsed = time.perf_counter() - start
            best = elapsed if best is None else min(best, elapsed)
            steps = counter.steps

        ratio = best / rows[-1].seconds if rows and rows[-1].seconds > 0 else None
        rows.append(BenchRow(length, best, steps, steps / length, ratio))
        logger.info("length %d: %.4fs, %d steps", length, best, steps)
    return rows


def bench_lines(rows: list[BenchRow], csv: bool = False) -> list[str]:
    header = ["length", "seconds", "steps", "steps_per_element", "time_ratio"]
    cells = [header]
    for row in rows:
        cells.append(
            [
                str(row.length),
                f"{row.seconds:.6f}",
                str(row.steps),
                f"{row.steps_per_element:.3f}",
                "" if row.time_ratio is None else f"{row.time_ratio:.3f}",
            ]
        )
    if csv:
        return [",".join(line) for line in cells]

    return table(cells)

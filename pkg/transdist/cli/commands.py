import logging
from collections.abc import Callable
from pathlib import Path
from typing import Any, TextIO

from transdist.cli.batch import run_batch_sync
from transdist.cli.bench import bench_lines, run_bench
from transdist.cli.config import Mode, OutputFormat, RunConfig
from transdist.cli.io import content_lines, emit, read_text, read_transform, table
from transdist.exceptions import PermutationError
from transdist.oracle.search import SearchBudget, UniformCostSearch
from transdist.oracle.weights import TreeWeights
from transdist.perm.models import Permutation, Transposition
from transdist.perm.parse import format_cycles, parse_permutation
from transdist.solver.models import Transform
from transdist.solver.permutation import MergeConfig, decompose, decompose_merged, lower_bound
from transdist.solver.verify import verify_transform
from transdist.tree.loader import load_tree
from transdist.tree.metric import Shape, TreeMetric, check_size, displacement
from transdist.utils.weight import format_weight

EXIT_OK = 0
EXIT_VERIFY_FAILED = 1
EXIT_INPUT_ERROR = 2
EXIT_BUDGET_EXCEEDED = 3

APPROXIMATE = "<= 4/3 * optimal"

Entry = tuple[dict[str, Any], list[str]]


def describe_shape(t: TreeMetric) -> str:
    if t.shape is Shape.YTREE:
        return f"YTree center={t.center}"
    return "Path"


def tree_summary(t: TreeMetric) -> dict[str, Any]:
    return {
        "shape": str(t.shape),
        "center": t.center if t.shape is Shape.YTREE else None,
        "n": t.n,
        "total_weight": t.total_weight,
    }


def pairs(taus: list[Transposition] | Transform) -> list[list[int]]:
    return [[tau.a, tau.b] for tau in taus]


def load_permutations(config: RunConfig, n: int) -> list[tuple[str, Permutation]]:
    """
    Parses the inline permutations, or every non-blank line of the permutation file.

    Raises:
        PermutationError: With the file's line number prefixed to the message for file input.
    """

    if not config.perm_file:
        return [(text, parse_permutation(text, n)) for text in config.perm_inputs]

    entries = []
    for number, line in content_lines(read_text(config.perm_file, PermutationError)):
        try:
            entries.append((line, parse_permutation(line, n)))
        except PermutationError as exc:
            raise type(exc)(f"{Path(config.perm_file).name}, line {number}: {exc}")
    if not entries:
        raise PermutationError(f"{config.perm_file} holds no permutation")
    return entries


def _run_entries(
    config: RunConfig,
    out: TextIO,
    entries: list[tuple[str, Permutation]],
    solve: Callable[[tuple[str, Permutation]], Entry],
) -> None:
    if len(entries) == 1:
        results = [solve(entries[0])]
    else:
        results = run_batch_sync(solve, entries, config.workers)

    if len(results) == 1:
        payload, lines = results[0]
        emit(out, config.output_format, {"mode": str(config.mode), **payload}, lines)
        return

    lines = []
    for _, entry_lines in results:
        if lines:
            lines.append("")
        lines.extend(entry_lines)
    emit(out, config.output_format, {"mode": str(config.mode), "results": [payload for payload, _ in results]}, lines)


def cmd_validate_tree(config: RunConfig, out: TextIO, logger: logging.Logger | None = None) -> int:
    t = load_tree(config.tree_path, logger)
    summary = tree_summary(t)
    lines = [
        describe_shape(t),
        f"n: {t.n}",
        f"total weight: {format_weight(t.total_weight)}",
    ]
    emit(out, config.output_format, {"mode": str(Mode.VALIDATE_TREE), "tree": summary}, lines)
    return EXIT_OK


def dist_entry(
    t: TreeMetric,
    text: str,
    p: Permutation,
    target: tuple[str, Permutation] | None = None,
    merge: MergeConfig | None = None,
    logger: logging.Logger | None = None,
) -> Entry:
    """
    Distance report of one permutation, or of the pair (p, target) through the relative permutation target⁻¹ p.
    """

    check_size(t, p)
    relative = p
    if target is not None:
        check_size(t, target[1])
        relative = target[1].inverse() * p

    if merge is None:
        report = decompose(t, relative)
    else:
        report = decompose_merged(t, relative, merge, logger)
    guarantee = "exact" if report.is_exact else APPROXIMATE

    rows = [
        {
            "cycle": repr(row.cycle),
            "kind": str(row.cls.kind),
            "branches": sorted(row.cls.branches),
            "weight": row.weight,
        }
        for row in report.per_cycle
    ]
    payload = {
        "permutation": text,
        "target": target[0] if target is not None else None,
        "relative": format_cycles(relative),
        "distance": report.distance_upper,
        "lower_bound": report.lower_bound,
        "displacement": report.displacement,
        "exact": report.is_exact,
        "guarantee": guarantee,
        "method": str(report.method),
        "strategy": report.strategy,
        "merges": pairs(report.merges),
        "cycles": rows,
    }

    lines = [f"permutation: {text}"]
    if target is not None:
        lines.append(f"target: {target[0]}")
        lines.append(f"relative: {payload['relative']}")
    lines += [
        f"distance: {format_weight(report.distance_upper)} ({guarantee})",
        f"lower bound: {format_weight(report.lower_bound)}",
        f"displacement: {format_weight(report.displacement)}",
        f"strategy: {report.strategy}",
    ]
    if report.merges:
        lines.append("merges: " + " ".join(repr(tau) for tau in report.merges))
    if rows:
        lines += table(
            [["cycle", "kind", "branches", "weight"]]
            + [[r["cycle"], r["kind"], ",".join(map(str, r["branches"])), format_weight(r["weight"])] for r in rows]
        )
    return payload, lines


def cmd_dist(config: RunConfig, out: TextIO, logger: logging.Logger | None = None) -> int:
    t = load_tree(config.tree_path, logger)
    entries = load_permutations(config, t.n)
    target = (config.target, parse_permutation(config.target, t.n)) if config.target is not None else None
    merge = MergeConfig() if config.merge else None

    def solve(entry: tuple[str, Permutation]) -> Entry:
        return dist_entry(t, entry[0], entry[1], target, merge, logger)

    _run_entries(config, out, entries, solve)
    return EXIT_OK


def decompose_entry(
    t: TreeMetric,
    text: str,
    p: Permutation,
    merge: MergeConfig | None = None,
    products: bool = True,
    logger: logging.Logger | None = None,
) -> Entry:
    """
    Lists a decomposition of p step by step: each transposition with its weight, the running weight and
    optionally the running product (which ends at p).
    """

    check_size(t, p)
    report = decompose(t, p) if merge is None else decompose_merged(t, p, merge, logger)

    steps = []
    running = Permutation.identity(t.n)
    spent = 0
    for tau in report.transform:
        cost = t.phi(tau.a, tau.b)
        spent += cost
        step = {"a": tau.a, "b": tau.b, "weight": cost, "running_weight": spent}
        if products:
            running = running.swap(tau.a, tau.b)
            step["product"] = format_cycles(running)
        steps.append(step)

    payload = {
        "permutation": text,
        "total_weight": report.distance_upper,
        "lower_bound": report.lower_bound,
        "exact": report.is_exact,
        "strategy": report.strategy,
        "transform": pairs(report.transform),
        "steps": steps,
    }

    guarantee = "exact" if report.is_exact else APPROXIMATE
    lines = [
        f"permutation: {text}",
        f"total weight: {format_weight(report.distance_upper)} ({guarantee})",
        f"transpositions: {len(steps)}",
    ]
    if steps:
        header = ["step", "transposition", "weight", "running"]
        if products:
            header.append("product")
        rows = [header]
        for index, step in enumerate(steps, start=1):
            row = [str(index), f"({step['a']} {step['b']})", format_weight(step["weight"])]
            row.append(format_weight(step["running_weight"]))
            if products:
                row.append(step["product"])
            rows.append(row)
        lines += table(rows)
    return payload, lines


def cmd_decompose(config: RunConfig, out: TextIO, logger: logging.Logger | None = None) -> int:
    t = load_tree(config.tree_path, logger)
    entries = load_permutations(config, t.n)
    merge = MergeConfig() if config.merge else None

    def solve(entry: tuple[str, Permutation]) -> Entry:
        return decompose_entry(t, entry[0], entry[1], merge, config.products, logger)

    _run_entries(config, out, entries, solve)
    return EXIT_OK


def cmd_verify(config: RunConfig, out: TextIO, logger: logging.Logger | None = None) -> int:
    t = load_tree(config.tree_path, logger)
    if len(config.perm_inputs) != 1:
        raise PermutationError("verify checks exactly one permutation")
    text = config.perm_inputs[0]
    p = parse_permutation(text, t.n)
    taus = read_transform(config.transform_path)
    report = verify_transform(t, p, taus)

    payload = {
        "mode": str(Mode.VERIFY),
        "permutation": text,
        "product_matches": report.product_matches,
        "total_weight": report.total_weight,
        "displacement": report.displacement,
        "gap": report.gap,
        "inefficiency_sum": report.inefficiency_sum,
        "residual": report.residual,
        "identity_holds": report.identity_holds,
        "gap_is_half_inefficiency": report.gap * 2 == report.inefficiency_sum,
        "steps": report.steps,
        "efficient_steps": report.efficient_steps,
    }
    lines = [
        f"permutation: {text}",
        f"product matches: {'yes' if report.product_matches else 'no'}",
        f"total weight: {format_weight(report.total_weight)}",
        f"displacement: {format_weight(report.displacement)}",
        f"gap: {format_weight(report.gap)}",
        f"inefficiency sum: {format_weight(report.inefficiency_sum)}",
        f"gap = inefficiency sum / 2: {'holds' if payload['gap_is_half_inefficiency'] else 'fails'}",
        f"steps: {report.steps} ({report.efficient_steps} efficient)",
    ]
    if not report.product_matches:
        lines.append(f"residual displacement: {format_weight(report.residual)}")
    emit(out, config.output_format, payload, lines)

    if not report.product_matches:
        (logger or logging.getLogger(__name__)).info("transform does not multiply to %s", text)
        return EXIT_VERIFY_FAILED
    return EXIT_OK


def oracle_entry(
    t: TreeMetric,
    text: str,
    p: Permutation,
    budget: SearchBudget,
    logger: logging.Logger | None = None,
) -> Entry:
    """
    Exact distance of p by exhaustive search, compared with the lower bound and the merged decomposition.

    Raises:
        BudgetExceeded: If n or the number of settled states goes over the budget.
    """

    logger = logger or logging.getLogger(__name__)
    check_size(t, p)
    search = UniformCostSearch(TreeWeights(t), budget, logger)
    exact, sorting = search.sort(p)
    transform = Transform(reversed(sorting), exact)

    bound = lower_bound(t, p)
    upper = decompose_merged(t, p, logger=logger).distance_upper
    if exact < bound:
        logger.warning("exact distance %s of %s is below the lower bound %s", exact, text, bound)
    if upper < exact:
        logger.warning("decomposition weight %s of %s is below the exact distance %s", upper, text, exact)

    payload = {
        "permutation": text,
        "distance": exact,
        "lower_bound": bound,
        "upper_bound": upper,
        "displacement": displacement(t, p),
        "transform": pairs(transform),
        "states_settled": search.nodes_expanded,
        "states_generated": search.nodes_generated,
    }
    lines = [
        f"permutation: {text}",
        f"exact distance: {format_weight(exact)}",
        f"lower bound: {format_weight(bound)}",
        f"upper bound: {format_weight(upper)}",
        "transform: " + (" ".join(repr(tau) for tau in transform) or "(empty)"),
        f"states settled: {search.nodes_expanded}",
    ]
    return payload, lines


def cmd_oracle(config: RunConfig, out: TextIO, logger: logging.Logger | None = None) -> int:
    t = load_tree(config.tree_path, logger)
    entries = load_permutations(config, t.n)
    budget = SearchBudget(max_n=config.max_n, max_states=config.max_states)

    def solve(entry: tuple[str, Permutation]) -> Entry:
        return oracle_entry(t, entry[0], entry[1], budget, logger)

    _run_entries(config, out, entries, solve)
    return EXIT_OK


def cmd_bench(config: RunConfig, out: TextIO, logger: logging.Logger | None = None) -> int:
    rows = run_bench(config, logger)
    payload = {
        "mode": str(Mode.BENCH),
        "tree_size": config.tree_size,
        "seed": config.seed,
        "repeat": config.repeat,
        "rows": [row.to_dict() for row in rows],
    }
    emit(out, config.output_format, payload, bench_lines(rows, csv=config.output_format is OutputFormat.CSV))
    return EXIT_OK


COMMANDS: dict[Mode, Callable[[RunConfig, TextIO, logging.Logger | None], int]] = {
    Mode.VALIDATE_TREE: cmd_validate_tree,
    Mode.DIST: cmd_dist,
    Mode.DECOMPOSE: cmd_decompose,
    Mode.VERIFY: cmd_verify,
    Mode.ORACLE: cmd_oracle,
    Mode.BENCH: cmd_bench,
}

import logging
from dataclasses import asdict, dataclass
from fractions import Fraction
from typing import Any

from transdist.perm.models import Cycle, Permutation, Transposition
from transdist.solver.cycle import center_gap_units, classify_cycle, decompose_cycle, delta_cycle
from transdist.solver.models import (
    BalanceCounts,
    CycleKind,
    CycleResult,
    DistanceReport,
    Method,
    StepCounter,
    Transform,
)
from transdist.tree.metric import TreeMetric, check_size, displacement, displacement_units

logger = logging.getLogger(__name__)


@dataclass
class MergeConfig:
    """
    Settings for `decompose_merged`.

    Parameters:
        center_merge (bool): Try merging every unbalanced cycle into the cycle through the center.
        pair_merge (bool): Try joining unbalanced cycles with efficient transpositions.
        pair_merge_limit (int): Skip pair merging when more elements than this lie on unbalanced cycles.

    Methods:
        to_dict() -> dict[str, Any]: Converts the configuration fields to a dictionary.
    """

    center_merge: bool = True
    pair_merge: bool = True
    pair_merge_limit: int = 512

    def to_dict(self) -> dict[str, Any]:
        return asdict(self)


def lower_bound(t: TreeMetric, p: Permutation) -> Fraction:
    """
    Lower bound on the distance of p to the identity.

    D(p) / 2, raised by the distance from the center to the nearest moved element when p avoids
    the center and its arc counts, summed over all cycles, are unbalanced.

    Raises:
        SizeMismatch: If p does not act on the tree's vertex set.
    """

    units = displacement_units(t, p)
    if not t.is_y_tree or units == 0:
        return Fraction(units, 2 * t.scale)

    moved = p.support()
    if t.center not in moved:
        counts = BalanceCounts()
        for c in p.cycles():
            counts = counts + classify_cycle(t, c).counts
        if not counts.is_balanced:
            units += 2 * center_gap_units(t, moved)
    return Fraction(units, 2 * t.scale)


def _per_cycle(t: TreeMetric, p: Permutation, counter: StepCounter | None) -> tuple[list[Transposition], list[CycleResult]]:
    taus: list[Transposition] = []
    rows = []
    for c in p.cycles():
        cls = classify_cycle(t, c)
        transform = decompose_cycle(t, c, counter)
        taus.extend(transform.taus)
        rows.append(CycleResult(c, cls, transform.total_weight))
    return taus, rows


def decompose(t: TreeMetric, p: Permutation, counter: StepCounter | None = None) -> DistanceReport:
    """
    Decomposes every cycle of p on its own and concatenates the results in canonical cycle order.

    The cost is at most 4/3 of the optimum and at most 2/3 of D(p).

    Parameters:
        t: The tree metric.
        p: The permutation, over the tree's vertex set.
        counter: Optional step counter.

    Returns:
        DistanceReport: With method PerCycle.

    Raises:
        SizeMismatch: If p does not act on the tree's vertex set.
    """

    check_size(t, p)
    taus, rows = _per_cycle(t, p, counter)
    return DistanceReport(
        transform=Transform.of(t, taus),
        lower_bound=lower_bound(t, p),
        per_cycle=rows,
        displacement=displacement(t, p),
    )


def _nearest_to_center(t: TreeMetric, c: Cycle) -> int:
    depth = t.depth_units
    return min(c.elements, key=lambda v: (depth(v), v))


def _center_merge(t: TreeMetric, p: Permutation, unbalanced: list[Cycle]) -> tuple[list[Transposition], list[Transposition]]:
    """
    Merges the unbalanced cycles, longest first, into the cycle through the center.

    Returns the decomposition and the merging transpositions in the order they were applied.
    """

    cv = t.center
    cycles = p.cycles()
    through_center = next((c for c in cycles if cv in c.elements), None)
    skipped = set(unbalanced)
    succ = through_center.successor() if through_center is not None else {}

    merges = []
    for kappa in sorted(unbalanced, key=lambda c: (-len(c), c.head)):
        vj = _nearest_to_center(t, kappa)
        run = kappa.rotated(vj)
        after = succ.get(cv, cv)
        chain = [cv, *run[1:], vj, after]
        for u, v in zip(chain, chain[1:], strict=False):
            succ[u] = v
        merges.append(Transposition(vj, cv))

    merged = [cv]
    x = succ[cv]
    while x != cv:
        merged.append(x)
        x = succ[x]

    taus: list[Transposition] = []
    for c in cycles:
        if c in skipped or c is through_center:
            continue
        taus.extend(decompose_cycle(t, c).taus)
    taus.extend(decompose_cycle(t, Cycle(merged)).taus)
    taus.extend(reversed(merges))
    return taus, merges


def _pair_merge(t: TreeMetric, p: Permutation, limit: int) -> tuple[list[Transposition], list[Transposition]] | None:
    """
    Joins unbalanced cycles with efficient transpositions while any exist, then solves per cycle.

    Among the efficient joining transpositions the lightest is taken, ties by labels.
    Returns None when no merge was possible or the candidate set exceeds `limit`.
    """

    q = p
    merges: list[Transposition] = []
    phi = t.phi_units

    while True:
        unbalanced = [c for c in q.cycles() if classify_cycle(t, c).kind is CycleKind.UNBALANCED]
        if len(unbalanced) < 2:
            break

        owner = {v: i for i, c in enumerate(unbalanced) for v in c.elements}
        if len(owner) > limit:
            logger.info("pair merging skipped: %d elements on unbalanced cycles exceed %d", len(owner), limit)
            return None

        elements = sorted(owner)
        best: tuple[int, int, int] | None = None
        for i, a in enumerate(elements):
            qa = q(a)
            for b in elements[i + 1 :]:
                if owner[a] == owner[b]:
                    continue
                qb = q(b)
                if phi(b, a) + phi(a, qb) != phi(b, qb) or phi(a, b) + phi(b, qa) != phi(a, qa):
                    continue
                key = (phi(a, b), a, b)
                if best is None or key < best:
                    best = key
        if best is None:
            break

        _, a, b = best
        merges.append(Transposition(a, b))
        q = q.swap(a, b)

    if not merges:
        return None

    taus, _ = _per_cycle(t, q, None)
    taus.extend(reversed(merges))
    return taus, merges


def decompose_merged(
    t: TreeMetric,
    p: Permutation,
    config: MergeConfig | None = None,
    logger: logging.Logger | None = None,
) -> DistanceReport:
    """
    Improves on `decompose` by merging unbalanced cycles before solving.

    Two merging strategies are tried: merging every unbalanced cycle into the cycle through the
    center via its cheapest center transposition, and joining unbalanced cycles with efficient
    transpositions. The cheapest of per-cycle, center merge and pair merge is returned, in that
    order of preference on ties.

    Parameters:
        t: The tree metric.
        p: The permutation.
        config: Strategy switches, defaults to `MergeConfig()`.
        logger: Optional logger, defaults to the module logger.

    Returns:
        DistanceReport: With method Merged when a merging strategy won.

    Raises:
        SizeMismatch: If p does not act on the tree's vertex set.
    """

    config = config or MergeConfig()
    logger = logger or logging.getLogger(__name__)

    report = decompose(t, p)
    unbalanced = [row.cycle for row in report.per_cycle if row.cls.kind is CycleKind.UNBALANCED]
    if not unbalanced:
        return report

    candidates: list[tuple[str, list[Transposition], list[Transposition]]] = []
    if config.center_merge:
        candidates.append(("center", *_center_merge(t, p, unbalanced)))
    if config.pair_merge and len(unbalanced) > 1:
        merged = _pair_merge(t, p, config.pair_merge_limit)
        if merged is not None:
            candidates.append(("pair", *merged))

    best = report
    for strategy, taus, merges in candidates:
        transform = Transform.of(t, taus)
        if transform.total_weight < best.distance_upper:
            best = DistanceReport(
                transform=transform,
                lower_bound=report.lower_bound,
                per_cycle=report.per_cycle,
                displacement=report.displacement,
                method=Method.MERGED,
                strategy=strategy,
                merges=merges,
            )

    logger.info(
        "strategy %s chosen for %d unbalanced cycles (per-cycle %s, best %s)",
        best.strategy,
        len(unbalanced),
        report.distance_upper,
        best.distance_upper,
    )
    return best


def per_cycle_bound(t: TreeMetric, p: Permutation) -> Fraction:
    """
    Sum of the exact single-cycle distances, equal to the cost of `decompose` without building it.
    """

    check_size(t, p)
    return sum((delta_cycle(t, c) for c in p.cycles()), Fraction(0))

from collections.abc import Iterable, Iterator
from enum import StrEnum
from fractions import Fraction

from transdist.perm.models import Cycle, Permutation, Transposition
from transdist.tree.metric import TreeMetric


class CycleKind(StrEnum):
    ON_PATH = "OnPath"
    CONTAINS_CENTER = "ContainsCenter"
    BALANCED = "Balanced"
    UNBALANCED = "Unbalanced"


class Method(StrEnum):
    PER_CYCLE = "PerCycle"
    MERGED = "Merged"


class BalanceCounts:
    """
    Arc counts between branches: `arcs(i, j)` is the number of arcs of the cycle digraph leading
    from branch i to branch j (i != j, both in 1..3). Arcs touching the central vertex are not counted.
    """

    __slots__ = ("_l",)

    def __init__(self, matrix: Iterable[Iterable[int]] | None = None):
        if matrix is None:
            self._l = [[0, 0, 0], [0, 0, 0], [0, 0, 0]]
        else:
            self._l = [list(row) for row in matrix]

    def arcs(self, i: int, j: int) -> int:
        return self._l[i - 1][j - 1]

    @property
    def is_balanced(self) -> bool:
        l = self._l  # noqa: E741
        return l[0][1] == l[1][0] and l[0][2] == l[2][0] and l[1][2] == l[2][1]

    @property
    def crossing(self) -> int:
        return sum(map(sum, self._l))

    def __add__(self, other: "BalanceCounts") -> "BalanceCounts":
        return BalanceCounts([[a + b for a, b in zip(r, s, strict=True)] for r, s in zip(self._l, other._l, strict=True)])

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, BalanceCounts):
            return NotImplemented
        return self._l == other._l

    def as_matrix(self) -> list[list[int]]:
        return [row[:] for row in self._l]

    def __repr__(self) -> str:
        return f"BalanceCounts({self._l})"


class CycleClass:
    __slots__ = ("kind", "counts", "branches", "contains_center")

    def __init__(self, kind: CycleKind, counts: BalanceCounts, branches: frozenset[int], contains_center: bool):
        self.kind = kind
        self.counts = counts
        self.branches = branches
        self.contains_center = contains_center

    def __repr__(self) -> str:
        return f"CycleClass({self.kind}, branches={sorted(self.branches)})"


class StepCounter:
    """
    Counts elementary steps (vertex visits, stack operations, emitted transpositions) of the cycle procedures.
    """

    __slots__ = ("steps",)

    def __init__(self):
        self.steps = 0

    def tick(self, amount: int = 1) -> None:
        self.steps += amount


class Transform:
    """
    An ordered sequence of transpositions together with its exact total weight.

    Read as a decomposition, the sequence multiplies (left to right) to the permutation it was built for.
    `sorting()` returns the same transpositions in reverse, which sort that permutation.
    """

    __slots__ = ("taus", "total_weight")

    def __init__(self, taus: Iterable[Transposition], total_weight: Fraction):
        self.taus = list(taus)
        self.total_weight = Fraction(total_weight)

    @classmethod
    def of(cls, t: TreeMetric, taus: Iterable[Transposition]) -> "Transform":
        taus = list(taus)
        return cls(taus, t.weight(sum(t.phi_units(tau.a, tau.b) for tau in taus)))

    @classmethod
    def empty(cls) -> "Transform":
        return cls([], Fraction(0))

    def __len__(self) -> int:
        return len(self.taus)

    def __iter__(self) -> Iterator[Transposition]:
        return iter(self.taus)

    def __add__(self, other: "Transform") -> "Transform":
        return Transform(self.taus + other.taus, self.total_weight + other.total_weight)

    def __repr__(self) -> str:
        return f"Transform({''.join(map(repr, self.taus))}, weight={self.total_weight})"

    def sorting(self) -> list[Transposition]:
        return self.taus[::-1]

    def product(self, n: int) -> Permutation:
        return Permutation.from_transpositions(n, self.taus)


class CycleResult:
    """
    One row of a distance report: a cycle, its class and the weight spent on it.
    """

    __slots__ = ("cycle", "cls", "weight")

    def __init__(self, cycle: Cycle, cls: CycleClass, weight: Fraction):
        self.cycle = cycle
        self.cls = cls
        self.weight = weight

    def __iter__(self):
        yield self.cycle
        yield self.cls
        yield self.weight


class DistanceReport:
    """
    Result of decomposing a permutation.

    Attributes:
        distance_upper: Weight of `transform`, an upper bound on the distance to the identity.
        lower_bound: A lower bound on the same distance.
        transform: The decomposition found.
        per_cycle: Cycles of the input with their class and individually optimal weight.
        displacement: D of the input.
        method: Whether cycles were solved one by one or merged first.
        strategy: Name of the merging strategy that produced `transform` ("per-cycle", "center", "pair").
        merges: Transpositions used to merge cycles before solving, in the order they were applied.
    """

    __slots__ = ("distance_upper", "lower_bound", "transform", "per_cycle", "displacement", "method", "strategy", "merges")

    def __init__(
        self,
        transform: Transform,
        lower_bound: Fraction,
        per_cycle: list[CycleResult],
        displacement: Fraction,
        method: Method = Method.PER_CYCLE,
        strategy: str = "per-cycle",
        merges: list[Transposition] | None = None,
    ):
        self.transform = transform
        self.distance_upper = transform.total_weight
        self.lower_bound = lower_bound
        self.per_cycle = per_cycle
        self.displacement = displacement
        self.method = method
        self.strategy = strategy
        self.merges = merges or []

    @property
    def is_exact(self) -> bool:
        """
        True when the bounds meet, or the input is a single cycle (solved optimally).
        """

        return self.distance_upper == self.lower_bound or len(self.per_cycle) <= 1

    def __repr__(self) -> str:
        return (
            f"DistanceReport(upper={self.distance_upper}, lower={self.lower_bound}, "
            f"cycles={len(self.per_cycle)}, method={self.method})"
        )

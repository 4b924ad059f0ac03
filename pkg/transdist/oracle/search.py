import heapq
import logging
from dataclasses import asdict, dataclass
from fractions import Fraction
from typing import Any

from transdist.exceptions import BudgetExceeded, SizeMismatch
from transdist.oracle.weights import BaseWeights, TreeWeights
from transdist.perm.models import Permutation, Transposition
from transdist.solver.models import Transform
from transdist.tree.metric import TreeMetric

State = tuple[int, ...]

WARN_N = 8


@dataclass
class SearchBudget:
    """
    Limits of the exhaustive search.

    Parameters:
        max_n (int): Largest ground set the search accepts.
        max_states (int): Largest number of settled states before giving up.
        max_weight (Optional[Fraction]): Give up once every remaining state is farther than this.

    Methods:
        to_dict() -> dict[str, Any]: Converts the configuration fields to a dictionary.
    """

    max_n: int = 8
    max_states: int = 10_000_000
    max_weight: Fraction | None = None

    def to_dict(self) -> dict[str, Any]:
        return asdict(self)


class DistanceTable:
    """
    Exact distance to the identity for every permutation reached by a search.
    """

    __slots__ = ("n", "scale", "units")

    def __init__(self, n: int, scale: int, units: dict[State, int]):
        self.n = n
        self.scale = scale
        self.units = units

    def __getitem__(self, p: Permutation) -> Fraction:
        return Fraction(self.units[p.images], self.scale)

    def __contains__(self, p: Permutation) -> bool:
        return p.images in self.units

    def __len__(self) -> int:
        return len(self.units)

    def items(self):
        for state, units in self.units.items():
            yield Permutation(state), Fraction(units, self.scale)


class UniformCostSearch:
    """
    Dijkstra search over the Cayley graph of S_n, where the move (a b) right-multiplies a permutation
    by the transposition and costs `weights.cost_units(a, b)`.

    Ties in the priority queue are broken by the one-line form, so optimal sortings are reproducible.
    """

    def __init__(
        self,
        weights: BaseWeights,
        budget: SearchBudget | None = None,
        logger: logging.Logger | None = None,
    ):
        self.logger = logger or logging.getLogger(__name__)
        self.weights = weights
        self.budget = budget or SearchBudget()

        n = weights.n
        if n > self.budget.max_n:
            raise BudgetExceeded(f"n={n} exceeds the search limit max_n={self.budget.max_n}")
        if n > WARN_N:
            self.logger.warning("exhaustive search on n=%d explores up to %d! states", n, n)

        self.moves = [(a - 1, b - 1, weights.cost_units(a, b)) for a in range(1, n + 1) for b in range(a + 1, n + 1)]
        self.nodes_generated = 0
        self.nodes_expanded = 0

    def _over_cutoff(self, units: int) -> bool:
        cutoff = self.budget.max_weight
        if cutoff is None:
            return False
        cutoff = Fraction(cutoff)
        return units * cutoff.denominator > cutoff.numerator * self.weights.scale

    def _run(self, source: State, target: State | None) -> tuple[dict[State, int], dict[State, tuple[State, int, int]]]:
        settled: dict[State, int] = {}
        best = {source: 0}
        pred: dict[State, tuple[State, int, int]] = {}
        fringe = [(0, source)]
        max_states = self.budget.max_states

        while fringe:
            d, state = heapq.heappop(fringe)
            if state in settled:
                continue
            if self._over_cutoff(d):
                raise BudgetExceeded(f"No solution within weight {self.budget.max_weight}")

            settled[state] = d
            self.nodes_expanded += 1
            if self.nodes_expanded > max_states:
                raise BudgetExceeded(f"Search settled more than {max_states} states")
            if state == target:
                break

            for a, b, cost in self.moves:
                nxt = list(state)
                nxt[a], nxt[b] = nxt[b], nxt[a]
                nxt = tuple(nxt)
                nd = d + cost
                if nd < best.get(nxt, nd + 1):
                    best[nxt] = nd
                    pred[nxt] = (state, a + 1, b + 1)
                    heapq.heappush(fringe, (nd, nxt))
                    self.nodes_generated += 1

        return settled, pred

    def sort(self, p: Permutation) -> tuple[Fraction, list[Transposition]]:
        """
        A minimum-weight sorting of p.

        Returns:
            tuple[Fraction, list[Transposition]]: The exact distance and transpositions that, applied
            to p on the right in order, give the identity.

        Raises:
            SizeMismatch: If p does not act on [n].
            BudgetExceeded: If a budget limit is hit.
        """

        if p.n != self.weights.n:
            raise SizeMismatch(f"Permutation on [{p.n}] does not match weights on [{self.weights.n}]")

        source = p.images
        target = tuple(range(1, p.n + 1))
        settled, pred = self._run(source, target)

        moves = []
        state = target
        while state != source:
            state, a, b = pred[state]
            moves.append(Transposition(a, b))
        moves.reverse()

        self.logger.debug(
            "search settled %d states, generated %d, distance %s",
            self.nodes_expanded,
            self.nodes_generated,
            self.weights.weight(settled[target]),
        )
        return self.weights.weight(settled[target]), moves

    def table(self) -> DistanceTable:
        """
        Distances to the identity of every permutation of S_n, from a single search started at the identity.
        """

        source = tuple(range(1, self.weights.n + 1))
        settled, _ = self._run(source, None)
        return DistanceTable(self.weights.n, self.weights.scale, settled)


def _weights(t: TreeMetric | BaseWeights) -> BaseWeights:
    return TreeWeights(t) if isinstance(t, TreeMetric) else t


def exact_distance(
    t: TreeMetric | BaseWeights,
    p: Permutation,
    budget: SearchBudget | None = None,
    logger: logging.Logger | None = None,
) -> tuple[Fraction, Transform]:
    """
    Exact distance of p to the identity, with one optimal decomposition.

    Parameters:
        t: A tree metric, or any other transposition cost function.
        p: The permutation.
        budget: Search limits, defaults to `SearchBudget()`.
        logger: Optional logger.

    Returns:
        tuple[Fraction, Transform]: The distance and an optimal decomposition of p (the sorting, reversed).

    Raises:
        BudgetExceeded: If n exceeds budget.max_n or another limit is hit.
    """

    search = UniformCostSearch(_weights(t), budget, logger)
    distance, sorting = search.sort(p)
    return distance, Transform(reversed(sorting), distance)


def exact_distance_pair(
    t: TreeMetric | BaseWeights,
    p: Permutation,
    q: Permutation,
    budget: SearchBudget | None = None,
) -> Fraction:
    """
    d(p, q), the distance of the permutation r with q r = p to the identity.
    """

    distance, _ = exact_distance(t, q.inverse() * p, budget)
    return distance


def distance_table(t: TreeMetric | BaseWeights, budget: SearchBudget | None = None) -> DistanceTable:
    return UniformCostSearch(_weights(t), budget).table()

import math
from abc import ABC, abstractmethod
from collections.abc import Mapping
from fractions import Fraction

from transdist.exceptions import NonPositiveWeight, VertexOutOfRange
from transdist.tree.metric import TreeMetric
from transdist.utils.weight import as_weight


class BaseWeights(ABC):
    """
    Abstract base class for transposition cost functions used by the exhaustive search.
    Costs are exchanged as integers scaled by `scale`.
    """

    n: int
    scale: int

    @abstractmethod
    def cost_units(self, a: int, b: int) -> int:
        """
        Scaled cost of the transposition (a b).

        Parameters:
            a: First element, in [1, n].
            b: Second element, in [1, n], different from a.

        Returns:
            int: The cost multiplied by `scale`.

        Raises:
            NotImplementedError: If the method is not implemented in a subclass.
        """

        raise NotImplementedError

    def weight(self, units: int) -> Fraction:
        return Fraction(units, self.scale)


class TreeWeights(BaseWeights):
    """
    Costs φ(a, b) of a path or Y-tree metric.
    """

    __slots__ = ("tree", "n", "scale")

    def __init__(self, tree: TreeMetric):
        self.tree = tree
        self.n = tree.n
        self.scale = tree.scale

    def cost_units(self, a: int, b: int) -> int:
        return self.tree.phi_units(a, b)


class TableWeights(BaseWeights):
    """
    Explicit cost table keyed by unordered pairs, for cost functions that do not come from a tree.
    """

    __slots__ = ("n", "scale", "_units")

    def __init__(self, n: int, table: Mapping[tuple[int, int], int | Fraction]):
        self.n = n
        costs = {}
        for a in range(1, n + 1):
            for b in range(a + 1, n + 1):
                if (a, b) in table:
                    costs[a, b] = as_weight(table[a, b])
                elif (b, a) in table:
                    costs[a, b] = as_weight(table[b, a])
                else:
                    raise VertexOutOfRange(f"No cost given for the transposition ({a} {b})")
                if costs[a, b] <= 0:
                    raise NonPositiveWeight(f"Cost of ({a} {b}) must be positive, got {costs[a, b]}")

        self.scale = math.lcm(*(w.denominator for w in costs.values())) if costs else 1
        self._units = {pair: w.numerator * (self.scale // w.denominator) for pair, w in costs.items()}

    @classmethod
    def complete(cls, n: int, weight: int | Fraction = 1) -> "TableWeights":
        """
        Every transposition costs `weight`; with weight 1 this gives the Cayley distance.
        """

        return cls(n, {(a, b): weight for a in range(1, n + 1) for b in range(a + 1, n + 1)})

    def cost_units(self, a: int, b: int) -> int:
        if a > b:
            a, b = b, a
        return self._units[a, b]

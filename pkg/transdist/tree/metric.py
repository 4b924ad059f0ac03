import logging
import math
from collections import deque
from collections.abc import Iterable
from enum import StrEnum
from fractions import Fraction

from transdist.exceptions import (
    CenterHasNoBranch,
    DegreeTooHigh,
    HasCycle,
    NonPositiveWeight,
    NotAYTree,
    NotConnected,
    SizeMismatch,
    TreeError,
    VertexOutOfRange,
)
from transdist.perm.models import Permutation, Transposition
from transdist.utils.weight import as_weight

Edge = tuple[int, int, int | Fraction]


class Shape(StrEnum):
    PATH = "Path"
    YTREE = "YTree"


class TreeMetric:
    """
    Positive edge-weighted tree on [n] that is either a path or a Y-tree.

    The tree is rooted at the central vertex (Y-tree) or at the smallest-label endpoint (path).
    Every vertex stores its weighted depth and the branch it hangs from, so φ and path-membership
    queries take constant time. Weights are kept as integers scaled by the common denominator
    `scale` of the input weights; public queries return exact Fractions.

    Branches of a Y-tree are numbered 1, 2, 3 by the smallest vertex label they contain. On a path
    every vertex except the root is placed on branch 1. The root always has branch 0.
    """

    __slots__ = ("n", "edges", "scale", "shape", "center", "root", "logger", "_depth", "_branch", "_parent", "_degree")

    def __init__(self, n: int, edges: Iterable[Edge], logger: logging.Logger | None = None):
        self.logger = logger or logging.getLogger(__name__)
        if n < 1:
            raise VertexOutOfRange(f"A tree needs n >= 1 vertices, got {n}")

        self.n = n
        self.edges = self._validate_edges(n, edges)

        self.scale = math.lcm(*(w.denominator for _, _, w in self.edges)) if self.edges else 1
        adjacency: list[list[tuple[int, int]]] = [[] for _ in range(n + 1)]
        for u, v, w in self.edges:
            units = w.numerator * (self.scale // w.denominator)
            adjacency[u].append((v, units))
            adjacency[v].append((u, units))

        self._degree = [len(neighbours) for neighbours in adjacency]
        self._classify(adjacency)
        self._root_at(adjacency)

        self.logger.debug(
            "built %s tree on %d vertices%s",
            self.shape,
            n,
            f" with center {self.center}" if self.center is not None else "",
        )

    @staticmethod
    def _validate_edges(n: int, edges: Iterable[Edge]) -> list[tuple[int, int, Fraction]]:
        edges = list(edges)
        result = []

        for u, v, w in edges:
            for vertex in (u, v):
                if not 1 <= vertex <= n:
                    raise VertexOutOfRange(f"Vertex {vertex} of edge ({u}, {v}) is outside [1, {n}]")

        for u, v, w in edges:
            try:
                weight = as_weight(w)
            except (TypeError, ValueError) as exc:
                raise TreeError(f"Edge ({u}, {v}) has an invalid weight: {exc}")
            if weight <= 0:
                raise NonPositiveWeight(f"Edge ({u}, {v}) has non-positive weight {w}")
            result.append((u, v, weight))

        parent = list(range(n + 1))

        def find(x: int) -> int:
            while parent[x] != x:
                parent[x] = parent[parent[x]]
                x = parent[x]
            return x

        components = n
        for u, v, _ in result:
            ru, rv = find(u), find(v)
            if ru == rv:
                raise HasCycle(f"Edge ({u}, {v}) closes a cycle")
            parent[ru] = rv
            components -= 1

        if components > 1:
            raise NotConnected(f"The edges leave {components} connected components")

        return result

    def _classify(self, adjacency: list[list[tuple[int, int]]]) -> None:
        degree = self._degree
        for v in range(1, self.n + 1):
            if degree[v] >= 4:
                raise DegreeTooHigh(f"Vertex {v} has degree {degree[v]}; only paths and Y-trees are supported")

        centers = [v for v in range(1, self.n + 1) if degree[v] == 3]
        if len(centers) > 1:
            raise DegreeTooHigh(f"Vertices {centers} all have degree 3; a Y-tree has exactly one")

        if centers:
            self.shape = Shape.YTREE
            self.center = centers[0]
            self.root = self.center
        else:
            self.shape = Shape.PATH
            self.center = None
            self.root = min(v for v in range(1, self.n + 1) if degree[v] <= 1)

    def _root_at(self, adjacency: list[list[tuple[int, int]]]) -> None:
        n, root = self.n, self.root
        depth = [0] * (n + 1)
        parent = [0] * (n + 1)
        branch = [0] * (n + 1)

        # first neighbour of the root on each branch, relabelled once the branch minima are known
        first = [0] * (n + 1)
        order = []
        queue = deque([root])
        seen = [False] * (n + 1)
        seen[root] = True
        while queue:
            u = queue.popleft()
            order.append(u)
            for v, units in adjacency[u]:
                if seen[v]:
                    continue
                seen[v] = True
                parent[v] = u
                depth[v] = depth[u] + units
                first[v] = v if u == root else first[u]
                queue.append(v)

        if self.shape is Shape.YTREE:
            minimum: dict[int, int] = {}
            for v in order[1:]:
                minimum[first[v]] = min(minimum.get(first[v], v), v)
            index = {head: i for i, head in enumerate(sorted(minimum, key=minimum.__getitem__), start=1)}
            for v in order[1:]:
                branch[v] = index[first[v]]
        else:
            for v in order[1:]:
                branch[v] = 1

        self._depth = depth
        self._parent = parent
        self._branch = branch

    def _check(self, *vertices: int) -> None:
        for v in vertices:
            if not 1 <= v <= self.n:
                raise VertexOutOfRange(f"Vertex {v} is outside [1, {self.n}]")

    def weight(self, units: int) -> Fraction:
        """
        Converts a scaled integer weight back to its exact value.
        """

        return Fraction(units, self.scale)

    @property
    def is_y_tree(self) -> bool:
        return self.shape is Shape.YTREE

    @property
    def total_weight(self) -> Fraction:
        return sum((w for _, _, w in self.edges), Fraction(0))

    def degree(self, v: int) -> int:
        self._check(v)
        return self._degree[v]

    def parent(self, v: int) -> int | None:
        self._check(v)
        return self._parent[v] or None

    def depth_units(self, v: int) -> int:
        return self._depth[v]

    def branch_index(self, v: int) -> int:
        """
        Branch of v without validation; 0 for the root.
        """

        return self._branch[v]

    def phi_units(self, a: int, b: int) -> int:
        branch, depth = self._branch, self._depth
        if branch[a] == branch[b] or not branch[a] or not branch[b]:
            return abs(depth[a] - depth[b])
        return depth[a] + depth[b]

    def phi(self, a: int, b: int) -> Fraction:
        """
        Sum of the edge weights on the unique a, b-path.

        Raises:
            VertexOutOfRange: If a or b is outside [1, n].
        """

        self._check(a, b)
        return Fraction(self.phi_units(a, b), self.scale)

    def on_path(self, c: int, a: int, b: int) -> bool:
        """
        Whether c lies on the a, b-path, endpoints included.
        """

        self._check(a, b, c)
        return self.phi_units(a, c) + self.phi_units(c, b) == self.phi_units(a, b)

    def branch_of(self, v: int) -> int:
        """
        Branch index 1, 2 or 3 of a non-central vertex of a Y-tree.

        Raises:
            NotAYTree: If the tree is a path.
            CenterHasNoBranch: If v is the central vertex.
        """

        self._check(v)
        if self.shape is not Shape.YTREE:
            raise NotAYTree("Branches are only defined on Y-trees")
        if v == self.center:
            raise CenterHasNoBranch(f"Vertex {v} is the central vertex")
        return self._branch[v]

    def branch_vertices(self, index: int) -> list[int]:
        """
        Vertices of a branch ordered by distance from the root.
        """

        return sorted((v for v in range(1, self.n + 1) if self._branch[v] == index), key=self._depth.__getitem__)

    def coordinate(self, v: int, negative_branch: int) -> int:
        """
        Signed scaled position of v on the line formed by `negative_branch`, the root and one other branch.
        """

        if self._branch[v] == negative_branch:
            return -self._depth[v]
        return self._depth[v]

    def coordinates(self, vertices: Iterable[int], negative_branch: int) -> list[int]:
        """
        `coordinate` for several vertices at once, without validation.
        """

        branch, depth = self._branch, self._depth
        return [-depth[v] if branch[v] == negative_branch else depth[v] for v in vertices]

    def branch_indices(self, vertices: Iterable[int]) -> list[int]:
        branch = self._branch
        return [branch[v] for v in vertices]

    def __repr__(self) -> str:
        if self.center is not None:
            return f"TreeMetric(n={self.n}, shape={self.shape}, center={self.center})"
        return f"TreeMetric(n={self.n}, shape={self.shape})"


def build_tree(n: int, edges: Iterable[Edge], logger: logging.Logger | None = None) -> TreeMetric:
    """
    Validates the edge list and returns the tree metric it defines.

    Parameters:
        n: Number of vertices, labelled 1..n.
        edges: Triples (u, v, w) with an exact positive weight w (int, Fraction or "p/q").
        logger: Optional logger, defaults to the module logger.

    Returns:
        TreeMetric: With its shape classified and path structures precomputed.

    Raises:
        VertexOutOfRange: If an endpoint lies outside [1, n].
        NonPositiveWeight: If a weight is zero or negative.
        HasCycle: If an edge closes a cycle (self-loops and repeated edges included).
        NotConnected: If the edges leave more than one component.
        DegreeTooHigh: If a vertex has degree 4 or more, or two vertices have degree 3.
    """

    return TreeMetric(n, edges, logger=logger)


def phi(t: TreeMetric, a: int, b: int) -> Fraction:
    return t.phi(a, b)


def on_path(t: TreeMetric, c: int, a: int, b: int) -> bool:
    return t.on_path(c, a, b)


def branch_of(t: TreeMetric, v: int) -> int:
    return t.branch_of(v)


def check_size(t: TreeMetric, p: Permutation) -> None:
    if p.n != t.n:
        raise SizeMismatch(f"Permutation on [{p.n}] does not match a tree on {t.n} vertices")


def displacement_units(t: TreeMetric, p: Permutation) -> int:
    check_size(t, p)
    phi_units = t.phi_units
    return sum(phi_units(i, v) for i, v in enumerate(p.images, start=1))


def displacement(t: TreeMetric, p: Permutation) -> Fraction:
    """
    D(p), the sum over i of φ(i, p(i)).
    """

    return t.weight(displacement_units(t, p))


def displacement_between(t: TreeMetric, p: Permutation, q: Permutation) -> Fraction:
    """
    Displacement of p relative to q: the sum over i of φ(p⁻¹(i), q⁻¹(i)).
    """

    check_size(t, p)
    check_size(t, q)
    p_inv, q_inv = p.inverse().images, q.inverse().images
    return t.weight(sum(t.phi_units(a, b) for a, b in zip(p_inv, q_inv, strict=True)))


def inefficiency_bounds_units(t: TreeMetric, p: Permutation, tau: Transposition) -> tuple[int, int]:
    check_size(t, p)
    a, b = tau.a, tau.b
    pa, pb = p(a), p(b)
    f = t.phi_units
    return f(b, a) + f(a, pb) - f(b, pb), f(a, b) + f(b, pa) - f(a, pa)


def inefficiency_bounds(t: TreeMetric, p: Permutation, tau: Transposition) -> tuple[Fraction, Fraction]:
    """
    The two triangle slacks whose sum is the inefficiency of tau on p.

    The first is zero exactly when a lies on the (b, p(b))-path, the second when b lies on the
    (a, p(a))-path. Both are non-negative.
    """

    first, second = inefficiency_bounds_units(t, p, tau)
    return t.weight(first), t.weight(second)


def inefficiency_units(t: TreeMetric, p: Permutation, tau: Transposition) -> int:
    return sum(inefficiency_bounds_units(t, p, tau))


def inefficiency(t: TreeMetric, p: Permutation, tau: Transposition) -> Fraction:
    """
    2φ(a, b) minus the drop in displacement caused by right-multiplying p with tau = (a b).

    Raises:
        SizeMismatch: If p does not act on the tree's vertex set.
    """

    return t.weight(inefficiency_units(t, p, tau))


def is_efficient(t: TreeMetric, p: Permutation, tau: Transposition) -> bool:
    check_size(t, p)
    a, b = tau.a, tau.b
    return t.on_path(a, b, p(b)) and t.on_path(b, a, p(a))

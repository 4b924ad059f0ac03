import random
from collections.abc import Iterator, Sequence

from transdist.perm.models import Cycle
from transdist.tree.metric import TreeMetric, build_tree


def y_tree(
    branch_lengths: Sequence[int],
    weights: Sequence[int] | None = None,
    labels: Sequence[int] | None = None,
) -> TreeMetric:
    """
    Builds a Y-tree from three branch lengths.

    Without relabelling, branch i occupies consecutive labels starting at 1, each branch listed from
    the center outwards, and the center is labelled n.

    Parameters:
        branch_lengths: Three positive lengths.
        weights: Optional edge weights in construction order (branch by branch, center outwards); unit weights by default.
        labels: Optional relabelling, `labels[v - 1]` being the new label of v.
    """

    if len(branch_lengths) != 3 or min(branch_lengths) < 1:
        raise ValueError(f"A Y-tree needs three positive branch lengths, got {tuple(branch_lengths)}")

    n = sum(branch_lengths) + 1
    center = n
    edges = []
    label = 1
    for length in branch_lengths:
        previous = center
        for _ in range(length):
            edges.append((previous, label))
            previous = label
            label += 1

    return _build(n, edges, weights, labels)


def path_tree(n: int, weights: Sequence[int] | None = None, labels: Sequence[int] | None = None) -> TreeMetric:
    """
    Builds the path 1 - 2 - ... - n, optionally weighted and relabelled.
    """

    return _build(n, [(v, v + 1) for v in range(1, n)], weights, labels)


def _build(
    n: int,
    edges: list[tuple[int, int]],
    weights: Sequence[int] | None,
    labels: Sequence[int] | None,
) -> TreeMetric:
    if weights is None:
        weights = [1] * len(edges)
    if len(weights) != len(edges):
        raise ValueError(f"Expected {len(edges)} weights, got {len(weights)}")

    if labels is not None:
        if sorted(labels) != list(range(1, n + 1)):
            raise ValueError(f"Labels must be a permutation of 1..{n}")
        edges = [(labels[u - 1], labels[v - 1]) for u, v in edges]

    return build_tree(n, [(u, v, w) for (u, v), w in zip(edges, weights, strict=True)])


def branch_shapes(n: int) -> Iterator[tuple[int, int, int]]:
    """
    All branch length triples l1 >= l2 >= l3 >= 1 of Y-trees on n vertices.
    """

    for l1 in range(n - 3, 0, -1):
        for l2 in range(min(l1, n - 2 - l1), 0, -1):
            l3 = n - 1 - l1 - l2
            if 1 <= l3 <= l2:
                yield l1, l2, l3


def random_y_tree(
    n: int,
    rng: random.Random,
    min_weight: int = 1,
    max_weight: int = 1,
    relabel: bool = True,
) -> TreeMetric:
    """
    A Y-tree on n >= 4 vertices with random branch lengths and integer weights in [min_weight, max_weight].
    """

    if n < 4:
        raise ValueError(f"A Y-tree needs at least 4 vertices, got {n}")

    cuts = sorted(rng.sample(range(1, n - 1), 2))
    lengths = (cuts[0], cuts[1] - cuts[0], n - 1 - cuts[1])
    weights = [rng.randint(min_weight, max_weight) for _ in range(n - 1)]
    labels = None
    if relabel:
        labels = list(range(1, n + 1))
        rng.shuffle(labels)
    return y_tree(lengths, weights, labels)


def random_path(
    n: int,
    rng: random.Random,
    min_weight: int = 1,
    max_weight: int = 1,
    relabel: bool = True,
) -> TreeMetric:
    weights = [rng.randint(min_weight, max_weight) for _ in range(n - 1)]
    labels = None
    if relabel:
        labels = list(range(1, n + 1))
        rng.shuffle(labels)
    return path_tree(n, weights, labels)


def random_cycle(vertices: Sequence[int] | int, length: int, rng: random.Random) -> Cycle:
    """
    A uniformly random cycle of the given length on a subset of `vertices` (or of 1..vertices).
    """

    if isinstance(vertices, int):
        vertices = range(1, vertices + 1)
    if not 2 <= length <= len(vertices):
        raise ValueError(f"Cycle length must lie in [2, {len(vertices)}], got {length}")
    return Cycle(rng.sample(vertices, length))

import logging
from collections.abc import Iterable

from transdist.exceptions import NonSortingInput, NoProgress
from transdist.perm.models import Permutation, Transposition
from transdist.tree.metric import TreeMetric, check_size

logger = logging.getLogger(__name__)


def is_sorting(p: Permutation, taus: Iterable[Transposition]) -> bool:
    """
    Whether p multiplied on the right by taus, in order, gives the identity.
    """

    return (p * Permutation.from_transpositions(p.n, taus)).is_identity()


def leftmost_bad(n: int, taus: list[Transposition]) -> int | None:
    """
    Index of the leftmost transposition whose suffix product fixes both of its elements.

    The suffix products are built right to left with an image and an inverse array, so one scan is linear.
    """

    images = list(range(n + 1))
    where = list(range(n + 1))
    found = None
    for i in range(len(taus) - 1, -1, -1):
        a, b = taus[i].a, taus[i].b
        # left multiplication swaps the values a and b
        x, y = where[a], where[b]
        images[x], images[y] = b, a
        where[a], where[b] = y, x
        if images[a] == a and images[b] == b:
            found = i
    return found


def normalize_sorting(t: TreeMetric, p: Permutation, taus: Iterable[Transposition]) -> list[Transposition]:
    """
    Reorders a sorting of p so that no transposition is bad.

    A transposition is bad when the product of it and everything after it fixes both of its elements.
    The leftmost bad transposition is moved to the end until none is left; product and cost are preserved.

    Parameters:
        t: The tree metric.
        p: The permutation being sorted.
        taus: A sorting of p.

    Returns:
        list[Transposition]: The same transpositions, reordered.

    Raises:
        NonSortingInput: If taus does not sort p.
        NoProgress: If the same position is chosen more than len(taus) times, which only happens
            when taus is not a minimum-cost sorting.
    """

    check_size(t, p)
    taus = list(taus)
    if not is_sorting(p, taus):
        raise NonSortingInput("The transpositions do not sort the permutation")

    last, repeats = None, 0
    while (bad := leftmost_bad(p.n, taus)) is not None:
        repeats = repeats + 1 if bad == last else 1
        if repeats > len(taus):
            raise NoProgress(f"Position {bad + 1} stays bad; the sorting is not of minimum cost")
        last = bad
        taus.append(taus.pop(bad))
        logger.debug("moved bad transposition at position %d to the end", bad + 1)

    return taus

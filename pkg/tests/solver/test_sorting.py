import itertools
from collections import Counter

import pytest

from transdist.exceptions import NonSortingInput, NoProgress
from transdist.oracle import TreeWeights, UniformCostSearch
from transdist.perm import Permutation, Transposition, parse_cycles
from transdist.solver import is_sorting, normalize_sorting
from transdist.solver.sorting import leftmost_bad
from transdist.tree import path_tree, y_tree


def taus_of(*pairs):
    return [Transposition(a, b) for a, b in pairs]


def test_is_sorting():
    p = parse_cycles("(1 2 3)", 3)

    assert is_sorting(p, taus_of((1, 2), (1, 3)))
    assert not is_sorting(p, taus_of((1, 3), (1, 2)))


def test_bad_transposition_moves_to_the_end():
    t = path_tree(5)
    p = parse_cycles("(3 5 4)", 5)
    taus = taus_of((1, 2), (1, 3), (2, 3), (1, 3), (3, 4), (4, 5))

    assert is_sorting(p, taus)
    assert leftmost_bad(5, taus) == 0

    result = normalize_sorting(t, p, taus)
    assert result == taus_of((1, 3), (2, 3), (1, 3), (3, 4), (4, 5), (1, 2))
    assert is_sorting(p, result)
    assert leftmost_bad(5, result) is None


def test_sorting_without_bad_transpositions_is_unchanged():
    t = path_tree(3)
    p = parse_cycles("(1 2 3)", 3)
    taus = taus_of((1, 2), (1, 3))

    assert normalize_sorting(t, p, taus) == taus


def test_rejects_non_sortings():
    t = path_tree(3)
    with pytest.raises(NonSortingInput):
        normalize_sorting(t, parse_cycles("(1 2 3)", 3), taus_of((1, 2)))


def test_no_progress_on_redundant_sorting():
    t = path_tree(4)
    p = parse_cycles("(3 4)", 4)
    with pytest.raises(NoProgress):
        normalize_sorting(t, p, taus_of((1, 2), (3, 4), (1, 2)))


def test_optimal_sortings_normalize():
    t = y_tree((2, 1, 1))
    search = UniformCostSearch(TreeWeights(t))
    for images in itertools.permutations(range(1, 6)):
        p = Permutation(images)
        _, sorting = search.sort(p)
        result = normalize_sorting(t, p, sorting)

        assert Counter(result) == Counter(sorting)
        assert is_sorting(p, result)
        assert leftmost_bad(5, result) is None

import itertools
import logging
import random
from fractions import Fraction

import pytest

from transdist.exceptions import BudgetExceeded, SizeMismatch
from transdist.oracle import (
    SearchBudget,
    TableWeights,
    UniformCostSearch,
    distance_table,
    exact_distance,
    exact_distance_pair,
)
from transdist.perm import Permutation, parse_cycles
from transdist.solver import decompose, verify_transform
from transdist.tree import displacement, path_tree, random_path, y_tree


def s(n):
    return [Permutation(images) for images in itertools.permutations(range(1, n + 1))]


def test_star_cycle(star):
    p = parse_cycles("(1 2 3)", 4)
    distance, transform = exact_distance(star, p)

    assert distance == 4
    assert transform.total_weight == 4
    assert transform.product(4) == p

    report = verify_transform(star, p, transform)
    assert report.ok
    assert report.gap * 2 == report.inefficiency_sum


def test_identity(star):
    distance, transform = exact_distance(star, Permutation.identity(4))

    assert distance == 0
    assert len(transform) == 0


def test_path_trees_reach_half_displacement():
    rng = random.Random(3)
    for t in (path_tree(5), random_path(5, rng, 1, 6)):
        table = distance_table(t)
        assert len(table) == 120
        for p in s(5):
            assert table[p] == displacement(t, p) / 2


def test_cayley_distance():
    weights = TableWeights.complete(4)
    table = distance_table(weights)
    for p in s(4):
        assert table[p] == 4 - p.cycle_count()
        distance, _ = exact_distance(weights, p)
        assert distance == table[p]


def test_oracle_is_bounded_by_decompose(trees):
    for t in trees:
        table = distance_table(t)
        for p in s(4):
            assert displacement(t, p) / 2 <= table[p] <= decompose(t, p).distance_upper


def test_pair_distance(star):
    rng = random.Random(12)
    t = y_tree((2, 1, 1))
    p = parse_cycles("(1 2 3)", 4)

    assert exact_distance_pair(star, p, p) == 0
    assert exact_distance_pair(star, p, Permutation.identity(4)) == exact_distance(star, p)[0]

    for _ in range(20):
        a = Permutation(rng.sample(range(1, 6), 5))
        b = Permutation(rng.sample(range(1, 6), 5))
        assert exact_distance_pair(t, a, b) == exact_distance_pair(t, b, a)


def test_metric_axioms(trees):
    perms = s(4)
    for t in trees:
        table = distance_table(t)
        d = {(p, q): table[q.inverse() * p] for p, q in itertools.product(perms, repeat=2)}

        for p, q in itertools.product(perms, repeat=2):
            assert d[p, q] == d[q, p]
            assert (d[p, q] == 0) == (p == q)

        rng = random.Random(t.n)
        for _ in range(300):
            p, q, r = rng.sample(perms, 3)
            assert d[p, r] <= d[p, q] + d[q, r]


def test_budget_limits(star):
    p = parse_cycles("(1 2 3)", 4)

    with pytest.raises(BudgetExceeded):
        exact_distance(star, p, SearchBudget(max_n=3))
    with pytest.raises(BudgetExceeded):
        exact_distance(star, p, SearchBudget(max_states=2))
    with pytest.raises(BudgetExceeded):
        exact_distance(star, p, SearchBudget(max_weight=Fraction(3)))

    distance, _ = exact_distance(star, p, SearchBudget(max_weight=Fraction(4)))
    assert distance == 4


def test_size_mismatch(star):
    with pytest.raises(SizeMismatch):
        UniformCostSearch(TableWeights.complete(4)).sort(Permutation.identity(5))


def test_large_n_warns(caplog):
    t = path_tree(9)
    with caplog.at_level(logging.WARNING, logger="transdist.oracle.search"):
        distance, _ = exact_distance(t, Permutation.identity(9), SearchBudget(max_n=9))

    assert distance == 0
    assert "n=9" in caplog.text


def test_budget_to_dict():
    assert SearchBudget().to_dict() == {"max_n": 8, "max_states": 10_000_000, "max_weight": None}

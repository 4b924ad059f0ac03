import itertools
import random
from fractions import Fraction

import pytest

from transdist.exceptions import SizeMismatch
from transdist.oracle import distance_table
from transdist.perm import Permutation, Transposition, parse_cycles
from transdist.solver import (
    MergeConfig,
    Method,
    decompose,
    decompose_cycle,
    decompose_merged,
    lower_bound,
    per_cycle_bound,
)
from transdist.tree import displacement, random_y_tree, y_tree


def test_identity(star):
    report = decompose(star, Permutation.identity(4))

    assert report.distance_upper == 0
    assert len(report.transform) == 0
    assert report.lower_bound == 0
    assert report.per_cycle == []
    assert report.is_exact


def test_single_cycle_matches_decompose_cycle(unbalanced):
    p = parse_cycles("(2 3 5 7)", 8)
    report = decompose(unbalanced, p)

    assert report.transform.taus == decompose_cycle(unbalanced, p.cycles()[0]).taus
    assert report.is_exact
    assert report.lower_bound == report.distance_upper == 9


def test_star_lower_bound(star):
    p = parse_cycles("(1 2 3)", 4)

    assert lower_bound(star, p) == 4
    assert decompose(star, p).distance_upper == 4
    assert displacement(star, p) == 6


def test_lower_bound_balanced_is_half_displacement(central):
    p = parse_cycles("(7 4 6 5 2 3)", 7)
    assert lower_bound(central, p) == displacement(central, p) / 2


def test_size_mismatch(star):
    with pytest.raises(SizeMismatch):
        decompose(star, Permutation.identity(5))
    with pytest.raises(SizeMismatch):
        lower_bound(star, Permutation.identity(3))


def test_merging_joins_the_two_unbalanced_cycles(merge_tree):
    p = Permutation([4, 6, 2, 5, 1, 3, 7])

    per_cycle = decompose(merge_tree, p)
    assert displacement(merge_tree, p) == 18
    assert per_cycle.distance_upper == 11
    assert per_cycle.method is Method.PER_CYCLE
    assert [row.weight for row in per_cycle.per_cycle] == [5, 6]

    merged = decompose_merged(merge_tree, p)
    assert merged.method is Method.MERGED
    assert merged.strategy == "pair"
    assert merged.merges == [Transposition(1, 3)]
    assert merged.distance_upper == 9 == merged.lower_bound
    assert merged.is_exact
    assert merged.transform.product(7) == p

    center_only = decompose_merged(merge_tree, p, MergeConfig(pair_merge=False))
    assert center_only.strategy == "center"
    assert center_only.distance_upper == 10
    assert center_only.transform.product(7) == p


def test_merging_without_unbalanced_cycles(central):
    p = parse_cycles("(7 4 6 5 2 3)", 7)
    merged = decompose_merged(central, p)

    assert merged.method is Method.PER_CYCLE
    assert merged.transform.taus == decompose(central, p).transform.taus


def test_merge_config_to_dict():
    assert MergeConfig().to_dict() == {"center_merge": True, "pair_merge": True, "pair_merge_limit": 512}


def test_per_cycle_bound(merge_tree):
    p = Permutation([4, 6, 2, 5, 1, 3, 7])
    assert per_cycle_bound(merge_tree, p) == decompose(merge_tree, p).distance_upper


def check_envelope(t, p, exact):
    per_cycle = decompose(t, p)
    merged = decompose_merged(t, p)
    half = displacement(t, p) / 2

    assert per_cycle.transform.product(t.n) == p
    assert merged.transform.product(t.n) == p
    assert per_cycle.lower_bound <= exact
    assert half <= exact <= merged.distance_upper <= per_cycle.distance_upper
    assert per_cycle.distance_upper <= Fraction(4, 3) * exact
    assert per_cycle.distance_upper <= Fraction(4, 3) * half
    if len(p.cycles()) <= 1:
        assert per_cycle.lower_bound == exact == per_cycle.distance_upper


def test_envelope_on_all_of_s6():
    for lengths in ((3, 1, 1), (2, 2, 1)):
        t = y_tree(lengths)
        table = distance_table(t)
        for images in itertools.permutations(range(1, 7)):
            p = Permutation(images)
            check_envelope(t, p, table[p])


@pytest.mark.parametrize("seed", [3, 41, 2024])
def test_envelope_on_all_of_s6_weighted(seed):
    t = random_y_tree(6, random.Random(seed), 1, 5)
    table = distance_table(t)
    for images in itertools.permutations(range(1, 7)):
        p = Permutation(images)
        check_envelope(t, p, table[p])


def test_envelope_on_all_of_s6_uneven_weights():
    t = y_tree((2, 2, 1), weights=[1, 4, 3, 1, 5])
    table = distance_table(t)
    for images in itertools.permutations(range(1, 7)):
        p = Permutation(images)
        check_envelope(t, p, table[p])


def test_envelope_on_random_weighted_trees():
    rng = random.Random(77)
    for _ in range(20):
        t = random_y_tree(7, rng, 1, 5)
        table = distance_table(t)
        for _ in range(30):
            p = Permutation(rng.sample(range(1, 8), 7))
            check_envelope(t, p, table[p])

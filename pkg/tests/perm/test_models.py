import itertools
import random

import pytest

from transdist.exceptions import ElementOutOfRange, MalformedCycle, NotABijection, PermutationError, SizeMismatch
from transdist.perm import Cycle, Permutation, Transposition, compose, cycle_decomposition, inverse, support


def test_images_and_call(sample):
    assert sample(1) == 6
    assert sample(2) == 1
    assert sample(4) == 5
    assert sample.n == 6
    assert sample.images == (6, 1, 2, 5, 4, 3)


def test_constructor_rejects_non_bijections():
    with pytest.raises(NotABijection):
        Permutation([2, 2, 1])
    with pytest.raises(NotABijection):
        Permutation([1, 4, 2])
    with pytest.raises(PermutationError):
        Permutation([])


def test_call_out_of_range(sample):
    with pytest.raises(ElementOutOfRange):
        sample(7)


def test_compose_with_transposition(sample):
    tau = Transposition(2, 3).to_permutation(6)

    assert compose(sample, tau) == Permutation([6, 2, 1, 5, 4, 3])
    assert compose(tau, sample) == Permutation([6, 1, 3, 5, 4, 2])
    assert sample.swap(2, 3) == compose(sample, tau)


def test_compose_size_mismatch(sample):
    with pytest.raises(SizeMismatch):
        compose(sample, Permutation.identity(5))


def test_compose_is_associative():
    rng = random.Random(3)
    for _ in range(200):
        n = rng.randint(1, 8)
        p, q, r = (Permutation(rng.sample(range(1, n + 1), n)) for _ in range(3))
        assert (p * q) * r == p * (q * r)


def test_inverse(sample):
    assert inverse(sample) == Permutation([2, 3, 6, 5, 4, 1])
    assert compose(sample, inverse(sample)).is_identity()
    assert inverse(Permutation.identity(4)) == Permutation.identity(4)

    tau = Transposition(1, 4).to_permutation(5)
    assert inverse(tau) == tau


def test_cycle_decomposition(sample, merge_sample):
    assert cycle_decomposition(sample) == [Cycle([1, 6, 3, 2]), Cycle([4, 5])]
    assert cycle_decomposition(Permutation.identity(5)) == []
    assert cycle_decomposition(merge_sample) == [Cycle([1, 4, 5]), Cycle([2, 6, 3])]


def test_cycle_decomposition_recomposes_all_of_s5():
    for images in itertools.permutations(range(1, 6)):
        p = Permutation(images)
        cycles = p.cycles()
        assert all(len(c) >= 2 for c in cycles)
        assert [c.head for c in cycles] == sorted(c.head for c in cycles)
        assert Permutation.from_cycles(5, cycles) == p
        assert p.cycle_count() == len(cycles) + 5 - len(p.support())


def test_support(sample):
    assert support(Permutation.identity(3)) == frozenset()
    assert support(sample) == frozenset(range(1, 7))
    assert support(Permutation([1, 2, 4, 3])) == frozenset({3, 4})


def test_support_after_transposition():
    rng = random.Random(11)
    for _ in range(200):
        n = rng.randint(2, 8)
        p = Permutation(rng.sample(range(1, n + 1), n))
        a, b = rng.sample(range(1, n + 1), 2)
        assert p.swap(a, b).support() <= p.support() | {a, b}


def test_cycle_canonical_rotation():
    c = Cycle([5, 2, 7])

    assert c.elements == (2, 7, 5)
    assert c == Cycle([7, 5, 2])
    assert c.successor() == {2: 7, 7: 5, 5: 2}
    assert c.rotated(7) == (7, 5, 2)
    assert repr(c) == "(2 7 5)"


def test_cycle_rejects_bad_input():
    with pytest.raises(MalformedCycle):
        Cycle([3])
    with pytest.raises(MalformedCycle):
        Cycle([1, 2, 1])
    with pytest.raises(ElementOutOfRange):
        Cycle([1, 9]).to_permutation(4)


def test_transposition_normalizes_order():
    assert Transposition(5, 2) == Transposition(2, 5)
    assert tuple(Transposition(5, 2)) == (2, 5)
    assert repr(Transposition(5, 2)) == "(2 5)"
    with pytest.raises(MalformedCycle):
        Transposition(3, 3)


def test_from_transpositions_multiplies_left_to_right():
    taus = [Transposition(1, 2), Transposition(2, 3)]
    expected = Transposition(1, 2).to_permutation(3) * Transposition(2, 3).to_permutation(3)

    assert Permutation.from_transpositions(3, taus) == expected
    with pytest.raises(ElementOutOfRange):
        Permutation.from_transpositions(3, [Transposition(1, 4)])


def test_transposition_rejects_elements_below_one():
    with pytest.raises(ElementOutOfRange):
        Transposition(0, 1)
    with pytest.raises(ElementOutOfRange):
        Transposition(3, -2)


def test_swap_rejects_positions_outside_the_ground_set():
    identity = Permutation.identity(3)

    assert identity.swap(3, 1) == Transposition(1, 3).to_permutation(3)
    with pytest.raises(ElementOutOfRange):
        identity.swap(0, 1)
    with pytest.raises(ElementOutOfRange):
        identity.swap(1, 4)

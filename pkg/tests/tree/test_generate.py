import random

import pytest

from transdist.tree import Shape, branch_of, branch_shapes, path_tree, random_cycle, random_path, random_y_tree, y_tree


def test_y_tree_layout():
    t = y_tree((2, 1, 1))

    assert t.n == 5
    assert t.center == 5
    assert t.parent(2) == 1
    assert t.parent(1) == 5
    assert branch_of(t, 1) == branch_of(t, 2) == 1
    assert branch_of(t, 3) == 2
    assert branch_of(t, 4) == 3


def test_y_tree_weights_and_labels():
    t = y_tree((1, 1, 1), weights=[1, 2, 3], labels=[4, 3, 2, 1])

    assert t.center == 1
    assert t.phi(4, 3) == 3
    assert t.phi(2, 1) == 3


def test_y_tree_rejects_bad_shapes():
    with pytest.raises(ValueError):
        y_tree((2, 1))
    with pytest.raises(ValueError):
        y_tree((2, 0, 1))
    with pytest.raises(ValueError):
        y_tree((1, 1, 1), weights=[1, 1])


def test_path_tree():
    t = path_tree(4, weights=[1, 2, 3])

    assert t.shape is Shape.PATH
    assert t.phi(1, 4) == 6


def test_branch_shapes():
    assert list(branch_shapes(4)) == [(1, 1, 1)]
    shapes = list(branch_shapes(7))
    assert (4, 1, 1) in shapes and (2, 2, 2) in shapes
    for l1, l2, l3 in shapes:
        assert l1 >= l2 >= l3 >= 1
        assert l1 + l2 + l3 == 6
    assert len(shapes) == len(set(shapes)) == 3


def test_random_generators_are_seeded():
    a = random_y_tree(9, random.Random(5), 1, 7)
    b = random_y_tree(9, random.Random(5), 1, 7)
    assert a.edges == b.edges
    assert a.shape is Shape.YTREE

    t = random_path(6, random.Random(1), 2, 2)
    assert t.shape is Shape.PATH
    assert t.total_weight == 10

    with pytest.raises(ValueError):
        random_y_tree(3, random.Random(0))


def test_random_cycle():
    rng = random.Random(8)
    c = random_cycle(10, 4, rng)
    assert len(c) == 4
    assert c.support() <= set(range(1, 11))

    c = random_cycle([3, 5, 9], 3, rng)
    assert c.support() == {3, 5, 9}

    with pytest.raises(ValueError):
        random_cycle(3, 4, rng)

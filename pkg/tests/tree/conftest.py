import random

import pytest

from transdist.tree import build_tree, random_path, random_y_tree


@pytest.fixture(scope="session")
def star():
    return build_tree(4, [(1, 4, 1), (2, 4, 1), (3, 4, 1)])


@pytest.fixture(scope="session")
def path3():
    return build_tree(3, [(1, 2, 1), (2, 3, 1)])


@pytest.fixture(scope="session")
def random_trees():
    rng = random.Random(2024)
    trees = [random_y_tree(rng.randint(4, 8), rng, 1, 5) for _ in range(6)]
    trees += [random_path(rng.randint(2, 8), rng, 1, 5) for _ in range(3)]
    return trees


@pytest.fixture(scope="session")
def small_trees():
    rng = random.Random(7)
    return [random_y_tree(4, rng, 1, 4), random_y_tree(4, rng, 1, 4), random_path(4, rng, 1, 4)]

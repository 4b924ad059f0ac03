import random

import pytest

from transdist.tree import random_y_tree


@pytest.fixture(scope="session")
def star(fixture_tree):
    return fixture_tree("star")


@pytest.fixture(scope="session")
def trees():
    rng = random.Random(31)
    return [random_y_tree(4, rng, 1, 5) for _ in range(3)]

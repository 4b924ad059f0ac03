import pytest

from transdist.tree import build_tree, path_tree


@pytest.fixture(scope="session")
def star(fixture_tree):
    return fixture_tree("star")


@pytest.fixture(scope="session")
def path6():
    return path_tree(6)


@pytest.fixture(scope="session")
def central(fixture_tree):
    return fixture_tree("central")


@pytest.fixture(scope="session")
def unbalanced(fixture_tree):
    return fixture_tree("unbalanced")


@pytest.fixture(scope="session")
def merge_tree(fixture_tree):
    return fixture_tree("merge")


@pytest.fixture(scope="session")
def balanced_excursion_right():
    # center 9; branches 9-1-2, 9-3-5-6, 9-7-4-8
    edges = [(9, 1), (1, 2), (9, 3), (3, 5), (5, 6), (9, 7), (7, 4), (4, 8)]
    return build_tree(9, [(u, v, 1) for u, v in edges])


@pytest.fixture(scope="session")
def balanced_excursion_left():
    # center 9; branches 9-1-2-3-5, 9-4-6, 9-7-8
    edges = [(9, 1), (1, 2), (2, 3), (3, 5), (9, 4), (4, 6), (9, 7), (7, 8)]
    return build_tree(9, [(u, v, 1) for u, v in edges])

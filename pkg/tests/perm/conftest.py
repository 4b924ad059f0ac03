import pytest

from transdist.perm import Permutation


@pytest.fixture(scope="session")
def sample():
    return Permutation([6, 1, 2, 5, 4, 3])


@pytest.fixture(scope="session")
def merge_sample():
    return Permutation([4, 6, 2, 5, 1, 3, 7])

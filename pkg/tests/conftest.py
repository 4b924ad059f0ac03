from pathlib import Path

import pytest

from transdist.tree import load_tree

FIXTURES = Path(__file__).parent / "fixtures"


@pytest.fixture(scope="session")
def fixtures_dir():
    return FIXTURES


@pytest.fixture(scope="session")
def fixture_tree():
    def load(name: str):
        return load_tree(FIXTURES / f"{name}.tree")

    return load

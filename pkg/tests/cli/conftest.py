import io
import logging

import pytest

from transdist.cli import main
from transdist.utils.json import ORJSONDecoder


@pytest.fixture(scope="session")
def tree_path(fixtures_dir):
    def path(name: str) -> str:
        return str(fixtures_dir / f"{name}.tree")

    return path


@pytest.fixture
def run():
    """
    Runs the command line and returns the exit code with everything written to stdout.
    """

    def invoke(*argv: str) -> tuple[int, str]:
        out = io.StringIO()
        code = main(list(argv), out=out)
        return code, out.getvalue()

    return invoke


@pytest.fixture
def run_json(run):
    def invoke(*argv: str):
        code, text = run(*argv, "--format", "json")
        return code, ORJSONDecoder.decode(text) if text else None

    return invoke


@pytest.fixture(autouse=True)
def restore_root_logger():
    root = logging.getLogger()
    handlers, level = root.handlers[:], root.level
    yield
    root.handlers[:] = handlers
    root.setLevel(level)

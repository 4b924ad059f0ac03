import pytest

from transdist.cli import Mode, OutputFormat, RunConfig, build_parser
from transdist.cli.io import content_lines, parse_transform
from transdist.cli.main import config_from_args
from transdist.exceptions import ConfigError, TransformFileError
from transdist.perm import Transposition


@pytest.mark.parametrize(
    "config",
    [
        RunConfig(Mode.VALIDATE_TREE),
        RunConfig(Mode.DIST, tree_path="t.tree"),
        RunConfig(Mode.DIST, tree_path="t.tree", perm_inputs=["(1 2)"], perm_file="perms.txt"),
        RunConfig(Mode.VERIFY, tree_path="t.tree", perm_inputs=["(1 2)"]),
        RunConfig(Mode.DECOMPOSE, tree_path="t.tree", perm_inputs=["(1 2)"], target="(1 3)"),
        RunConfig(Mode.DIST, tree_path="t.tree", perm_inputs=["(1 2)"], output_format=OutputFormat.CSV),
        RunConfig(Mode.ORACLE, tree_path="t.tree", perm_inputs=["(1 2)"], max_n=0),
        RunConfig(Mode.BENCH, tree_size=3, lengths=[2]),
        RunConfig(Mode.BENCH, tree_size=10, lengths=[]),
        RunConfig(Mode.BENCH, tree_size=10, lengths=[1]),
        RunConfig(Mode.BENCH, tree_size=10, lengths=[5], repeat=0),
        RunConfig(Mode.DIST, tree_path="t.tree", perm_inputs=["(1 2)"], workers=0),
    ],
)
def test_invalid_configs(config):
    with pytest.raises(ConfigError):
        config.validate()


def test_config_from_args():
    args = build_parser().parse_args(["dist", "t.tree", "(1 2)", "(2 3)", "--no-merge", "--format", "json"])
    config = config_from_args(args)

    assert config.mode is Mode.DIST
    assert config.perm_inputs == ["(1 2)"]
    assert config.target == "(2 3)"
    assert config.merge is False
    assert config.output_format is OutputFormat.JSON
    assert config.to_dict()["workers"] == 4


def test_bench_lengths_argument():
    args = build_parser().parse_args(["bench", "--lengths", "10,100", "--tree-size", "200"])
    config = config_from_args(args)

    assert config.lengths == [10, 100]
    assert config.tree_path is None


def test_content_lines():
    assert content_lines("a\n  # note\n\nb # tail\n") == [(1, "a"), (4, "b")]


def test_parse_transform_formats():
    expected = [Transposition(1, 2), Transposition(3, 4)]

    assert parse_transform("1 2\n(3, 4)\n") == expected
    assert parse_transform("[[1, 2], [3, 4]]") == expected
    assert parse_transform('{"transform": [{"a": 1, "b": 2}, [3, 4]]}') == expected
    assert parse_transform("") == []


@pytest.mark.parametrize(
    "text, line",
    [
        ("1 2\n1 2 3\n", 2),
        ("1 x\n", 1),
        ("# header\n\n2 2\n", 3),
        ("0 1\n", 1),
        ("[[1, 2], [-1, 3]]", None),
        ("[[1, 2], [3]]", None),
        ('{"steps": []}', None),
        ("[1, 2", None),
    ],
)
def test_parse_transform_errors(text, line):
    with pytest.raises(TransformFileError) as info:
        parse_transform(text)

    assert info.value.line == line


def test_parse_transform_reports_out_of_range_elements():
    with pytest.raises(TransformFileError, match="at least 1"):
        parse_transform("1 2\n0 1\n")

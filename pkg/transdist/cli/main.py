import argparse
import logging
import sys
from collections.abc import Sequence
from typing import TextIO

from transdist.cli.commands import COMMANDS, EXIT_BUDGET_EXCEEDED, EXIT_INPUT_ERROR
from transdist.cli.config import Mode, OutputFormat, RunConfig
from transdist.exceptions import BudgetExceeded, TransDistError
from transdist.logger import ConsoleHandler, FileHandler, setup_logger

logger = logging.getLogger("transdist.cli")


def _lengths(value: str) -> list[int]:
    try:
        return [int(part) for part in value.replace(",", " ").split()]
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma separated integers, got '{value}'")


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", dest="output_format", choices=[f.value for f in OutputFormat], default="text")
    common.add_argument("--log-level", type=str.upper, choices=["DEBUG", "INFO", "WARNING", "ERROR"], default="WARNING")
    common.add_argument("--log-file", default=None, help="Also append log records to this file")

    parser = argparse.ArgumentParser(
        prog="transdist",
        description="Weighted transposition distances under path and Y-tree metrics",
    )
    subparsers = parser.add_subparsers(dest="mode", required=True)

    validate = subparsers.add_parser(Mode.VALIDATE_TREE.value, parents=[common], help="Check a tree file")
    validate.add_argument("tree_path")

    dist = subparsers.add_parser(Mode.DIST.value, parents=[common], help="Distance of a permutation")
    dist.add_argument("tree_path")
    dist.add_argument("perm_inputs", nargs="?", metavar="perm")
    dist.add_argument("target", nargs="?", metavar="perm2", help="Report d(perm, perm2) instead of d(perm, e)")
    dist.add_argument("--perm-file", default=None, help="One permutation per line, processed concurrently")
    dist.add_argument("--workers", type=int, default=4)
    dist.add_argument("--no-merge", dest="merge", action="store_false", help="Solve cycles one by one")

    decompose = subparsers.add_parser(Mode.DECOMPOSE.value, parents=[common], help="List a decomposition")
    decompose.add_argument("tree_path")
    decompose.add_argument("perm_inputs", nargs="?", metavar="perm")
    decompose.add_argument("--perm-file", default=None)
    decompose.add_argument("--workers", type=int, default=4)
    decompose.add_argument("--no-merge", dest="merge", action="store_false")
    decompose.add_argument("--no-products", dest="products", action="store_false", help="Omit running products")

    verify = subparsers.add_parser(Mode.VERIFY.value, parents=[common], help="Check a transform file")
    verify.add_argument("tree_path")
    verify.add_argument("perm_inputs", metavar="perm")
    verify.add_argument("transform_path", metavar="transform")

    oracle = subparsers.add_parser(Mode.ORACLE.value, parents=[common], help="Exact distance by exhaustive search")
    oracle.add_argument("tree_path")
    oracle.add_argument("perm_inputs", nargs="?", metavar="perm")
    oracle.add_argument("--perm-file", default=None)
    oracle.add_argument("--workers", type=int, default=4)
    oracle.add_argument("--max-n", type=int, default=8)
    oracle.add_argument("--max-states", type=int, default=10_000_000)

    bench = subparsers.add_parser(Mode.BENCH.value, parents=[common], help="Time cycle decomposition")
    bench.add_argument("--tree-size", type=int, default=1_000_000)
    bench.add_argument("--lengths", type=_lengths, default=[10_000, 100_000, 1_000_000])
    bench.add_argument("--seed", type=int, default=0)
    bench.add_argument("--repeat", type=int, default=1)

    return parser


def config_from_args(args: argparse.Namespace) -> RunConfig:
    values = vars(args)
    perm = values.get("perm_inputs")
    config = RunConfig(
        mode=Mode(args.mode),
        tree_path=values.get("tree_path"),
        perm_inputs=[perm] if perm is not None else [],
        perm_file=values.get("perm_file"),
        target=values.get("target"),
        transform_path=values.get("transform_path"),
        output_format=OutputFormat(args.output_format),
        seed=values.get("seed", 0),
        max_n=values.get("max_n", 8),
        max_states=values.get("max_states", 10_000_000),
        tree_size=values.get("tree_size", 1_000_000),
        lengths=values.get("lengths", [10_000, 100_000, 1_000_000]),
        repeat=values.get("repeat", 1),
        workers=values.get("workers", 4),
        merge=values.get("merge", True),
        products=values.get("products", True),
    )
    config.validate()
    return config


def main(argv: Sequence[str] | None = None, out: TextIO | None = None) -> int:
    """
    Runs one subcommand and returns its exit code: 0 on success, 1 when a transform fails verification,
    2 for invalid input and 3 when the exhaustive search runs out of budget.
    """

    out = out or sys.stdout
    args = build_parser().parse_args(argv)

    handlers = [ConsoleHandler()]
    if args.log_file:
        handlers.append(FileHandler(args.log_file))
    setup_logger(args.log_level, handlers)

    try:
        config = config_from_args(args)
        logger.debug("run configuration: %s", config.to_dict())
        return COMMANDS[config.mode](config, out, logger)
    except BudgetExceeded as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_BUDGET_EXCEEDED
    except TransDistError as exc:
        logger.debug("input error", exc_info=True)
        print(f"error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return EXIT_INPUT_ERROR


if __name__ == "__main__":
    raise SystemExit(main())

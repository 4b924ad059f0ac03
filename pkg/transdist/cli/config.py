from dataclasses import asdict, dataclass, field
from enum import StrEnum
from typing import Any

from transdist.exceptions import ConfigError


class Mode(StrEnum):
    VALIDATE_TREE = "validate-tree"
    DIST = "dist"
    DECOMPOSE = "decompose"
    VERIFY = "verify"
    ORACLE = "oracle"
    BENCH = "bench"


class OutputFormat(StrEnum):
    TEXT = "text"
    JSON = "json"
    CSV = "csv"


_NEEDS_TREE = {Mode.VALIDATE_TREE, Mode.DIST, Mode.DECOMPOSE, Mode.VERIFY, Mode.ORACLE}
_NEEDS_PERM = {Mode.DIST, Mode.DECOMPOSE, Mode.VERIFY, Mode.ORACLE}
_ACCEPTS_FILE = {Mode.DIST, Mode.DECOMPOSE, Mode.ORACLE}


@dataclass
class RunConfig:
    """
    Settings of one command-line run.

    Parameters:
        mode (Mode): Subcommand.
        tree_path (Optional[str]): Tree file, required by every mode except bench.
        perm_inputs (list[str]): Permutations given inline, in one-line or cycle notation.
        perm_file (Optional[str]): File with one permutation per line (batch mode).
        target (Optional[str]): Second permutation for `dist`; the distance between the two is reported.
        transform_path (Optional[str]): Transform file for `verify`.
        output_format (OutputFormat): text, json, or csv (bench only).
        seed (int): Seed of the random instances generated by bench.
        max_n (int): Largest n the oracle accepts.
        max_states (int): Largest number of states the oracle settles.
        tree_size (int): Vertex count of the bench tree.
        lengths (list[int]): Cycle lengths measured by bench.
        repeat (int): Timing repetitions per bench length; the fastest is kept.
        workers (int): Concurrent workers in batch mode.
        merge (bool): Use cycle merging in `dist` and `decompose`.
        products (bool): List running products in `decompose`.

    Methods:
        validate() -> None: Raises ConfigError if the mode's required arguments are missing.
        to_dict() -> dict[str, Any]: Converts the configuration fields to a dictionary.
    """

    mode: Mode
    tree_path: str | None = None
    perm_inputs: list[str] = field(default_factory=list)
    perm_file: str | None = None
    target: str | None = None
    transform_path: str | None = None
    output_format: OutputFormat = OutputFormat.TEXT
    seed: int = 0
    max_n: int = 8
    max_states: int = 10_000_000
    tree_size: int = 1_000_000
    lengths: list[int] = field(default_factory=lambda: [10_000, 100_000, 1_000_000])
    repeat: int = 1
    workers: int = 4
    merge: bool = True
    products: bool = True

    def validate(self) -> None:
        mode = self.mode
        if mode in _NEEDS_TREE and not self.tree_path:
            raise ConfigError(f"{mode} needs a tree file")

        if mode in _NEEDS_PERM:
            if self.perm_file and mode not in _ACCEPTS_FILE:
                raise ConfigError(f"{mode} does not accept a permutation file")
            if self.perm_file and self.perm_inputs:
                raise ConfigError("Give permutations inline or with --perm-file, not both")
            if not self.perm_file and not self.perm_inputs:
                raise ConfigError(f"{mode} needs a permutation")

        if mode is Mode.VERIFY and not self.transform_path:
            raise ConfigError("verify needs a transform file")
        if self.target is not None and mode is not Mode.DIST:
            raise ConfigError("A second permutation is only accepted by dist")
        if self.output_format is OutputFormat.CSV and mode is not Mode.BENCH:
            raise ConfigError("CSV output is only available for bench")

        if mode is Mode.ORACLE and (self.max_n < 1 or self.max_states < 1):
            raise ConfigError("--max-n and --max-states must be positive")
        if mode is Mode.BENCH:
            if self.tree_size < 4:
                raise ConfigError("The bench tree needs at least 4 vertices")
            if not self.lengths:
                raise ConfigError("bench needs at least one cycle length")
            for length in self.lengths:
                if not 2 <= length <= self.tree_size:
                    raise ConfigError(f"Cycle length {length} must lie in [2, {self.tree_size}]")
            if self.repeat < 1:
                raise ConfigError("--repeat must be at least 1")
        if self.workers < 1:
            raise ConfigError("--workers must be at least 1")

    def to_dict(self) -> dict[str, Any]:
        return asdict(self)

from pathlib import Path
from typing import Any, TextIO

from transdist.cli.config import OutputFormat
from transdist.exceptions import TransDistError, TransformFileError
from transdist.perm.models import Transposition
from transdist.utils.json import ORJSONDecoder, ORJSONEncoder


def read_text(path: str | Path, error: type[Exception]) -> str:
    try:
        return Path(path).read_text(encoding="utf-8")
    except OSError as exc:
        raise error(f"cannot read {path}: {exc.strerror or exc}")


def content_lines(text: str) -> list[tuple[int, str]]:
    """
    Non-blank lines with comments ('#' to the end of the line) removed, paired with their 1-based number.
    """

    lines = []
    for number, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if line:
            lines.append((number, line))
    return lines


def _transposition(value: Any, line: int | None) -> Transposition:
    try:
        if isinstance(value, dict):
            a, b = value["a"], value["b"]
        else:
            a, b = value
        if not isinstance(a, int) or not isinstance(b, int):
            raise TypeError
        return Transposition(a, b)
    except (KeyError, TypeError, ValueError) as exc:
        if isinstance(exc, TransDistError):
            raise TransformFileError(str(exc), line)
        raise TransformFileError(f"expected a pair of integers, got {value!r}", line)


def parse_transform(text: str) -> list[Transposition]:
    """
    Reads a transform either as "a b" lines (parentheses and commas allowed) or as a JSON document:
    a list of pairs, or an object holding such a list under "transform" (the output of `decompose --format json`).

    Raises:
        TransformFileError: For malformed content, with the line number when known.
    """

    stripped = text.lstrip()
    if stripped.startswith(("{", "[")):
        try:
            data = ORJSONDecoder.decode(stripped)
        except ValueError as exc:
            raise TransformFileError(f"invalid JSON: {exc}")
        if isinstance(data, dict):
            data = data.get("transform")
        if not isinstance(data, list):
            raise TransformFileError("the JSON document holds no transform list")
        return [_transposition(item, None) for item in data]

    taus = []
    for number, line in content_lines(text):
        tokens = line.replace("(", " ").replace(")", " ").replace(",", " ").split()
        if len(tokens) != 2:
            raise TransformFileError(f"expected 'a b', got '{line}'", number)
        try:
            pair = [int(token) for token in tokens]
        except ValueError:
            raise TransformFileError(f"expected two integers, got '{line}'", number)
        taus.append(_transposition(pair, number))
    return taus


def read_transform(path: str | Path) -> list[Transposition]:
    return parse_transform(read_text(path, TransformFileError))


def emit(out: TextIO, output_format: OutputFormat, payload: dict[str, Any], lines: list[str]) -> None:
    """
    Writes either the JSON payload or the text lines, which carry the same numbers.
    """

    if output_format is OutputFormat.JSON:
        out.write(ORJSONEncoder.encode_str(payload, indent=True))
        out.write("\n")
    else:
        out.write("\n".join(lines))
        out.write("\n")


def table(rows: list[list[str]]) -> list[str]:
    """
    Left-aligned columns separated by two spaces.
    """

    if not rows:
        return []
    widths = [max(len(row[i]) for row in rows) for i in range(len(rows[0]))]
    return ["  ".join(cell.ljust(width) for cell, width in zip(row, widths, strict=True)).rstrip() for row in rows]

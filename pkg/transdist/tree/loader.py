import logging
from pathlib import Path

from transdist.exceptions import NonPositiveWeight, TreeFileError, VertexOutOfRange
from transdist.tree.metric import TreeMetric, build_tree
from transdist.utils.weight import as_weight, format_weight


def _content(line: str) -> str:
    return line.split("#", 1)[0].strip()


def parse_tree(text: str, logger: logging.Logger | None = None) -> TreeMetric:
    """
    Reads a tree from text: a line holding n, then n - 1 lines "u v w".

    Blank lines and everything after '#' are ignored. Weights are positive integers or fractions "p/q".

    Raises:
        TreeFileError: For malformed lines, with the line number attached.
        TreeError: For edge lists that do not form a path or a Y-tree.
    """

    n = None
    edges = []
    for number, raw in enumerate(text.splitlines(), start=1):
        line = _content(raw)
        if not line:
            continue

        tokens = line.split()
        if n is None:
            if len(tokens) != 1 or not tokens[0].isdigit() or int(tokens[0]) < 1:
                raise TreeFileError(f"expected the vertex count, got '{line}'", number)
            n = int(tokens[0])
            continue

        if len(tokens) != 3:
            raise TreeFileError(f"expected 'u v w', got '{line}'", number)
        try:
            u, v = int(tokens[0]), int(tokens[1])
            w = as_weight(tokens[2])
        except (TypeError, ValueError):
            raise TreeFileError(f"expected integer vertices and an exact weight, got '{line}'", number)
        if not (1 <= u <= n and 1 <= v <= n):
            raise TreeFileError(str(VertexOutOfRange(f"edge ({u}, {v}) leaves [1, {n}]")), number)
        if w <= 0:
            raise TreeFileError(str(NonPositiveWeight(f"edge ({u}, {v}) has non-positive weight {tokens[2]}")), number)
        edges.append((u, v, w))

    if n is None:
        raise TreeFileError("the file holds no vertex count")
    if len(edges) != n - 1:
        raise TreeFileError(f"expected {n - 1} edges for {n} vertices, got {len(edges)}")

    return build_tree(n, edges, logger=logger)


def load_tree(path: str | Path, logger: logging.Logger | None = None) -> TreeMetric:
    """
    Reads a tree file.

    Raises:
        TreeFileError: If the file cannot be read or is malformed.
        TreeError: If the edges do not form a path or a Y-tree.
    """

    try:
        text = Path(path).read_text(encoding="utf-8")
    except OSError as exc:
        raise TreeFileError(f"cannot read {path}: {exc.strerror or exc}")
    return parse_tree(text, logger=logger)


def format_tree(t: TreeMetric) -> str:
    lines = [str(t.n)]
    lines.extend(f"{u} {v} {format_weight(w)}" for u, v, w in t.edges)
    return "\n".join(lines) + "\n"

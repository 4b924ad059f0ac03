import re

from transdist.exceptions import ElementOutOfRange, LengthMismatch, MalformedCycle, NotABijection, PermutationError
from transdist.perm.models import Cycle, Permutation

_SEPARATORS = re.compile(r"[\s,]+")
_CYCLE = re.compile(r"\(([^()]*)\)")


def _tokens(text: str) -> list[str]:
    return [token for token in _SEPARATORS.split(text.strip()) if token]


def _to_int(token: str, error: type[PermutationError]) -> int:
    try:
        return int(token)
    except ValueError:
        raise error(f"'{token}' is not an integer")


def parse_one_line(text: str, n: int) -> Permutation:
    """
    Parses a permutation written in one-line form, e.g. "6 1 2 5 4 3" or "6, 1, 2, 5, 4, 3".

    Parameters:
        text: n integers separated by whitespace and/or commas, optionally wrapped in square brackets.
        n: Size of the ground set.

    Returns:
        Permutation: The permutation with π(i) equal to the i-th listed value.

    Raises:
        LengthMismatch: If the number of values differs from n.
        NotABijection: If a value repeats, is not an integer or lies outside [1, n].
    """

    values = [_to_int(token, NotABijection) for token in _tokens(text.strip().strip("[]"))]
    if len(values) != n:
        raise LengthMismatch(f"Expected {n} values, got {len(values)}")
    return Permutation(values)


def parse_cycles(text: str, n: int) -> Permutation:
    """
    Parses a product of cycles such as "(1 6 3 2)(4 5)".

    Cycles are multiplied left to right, so "(2 1 6)(3 6)" applies (3 6) first.
    Singleton cycles are accepted and ignored. An empty string is the identity.

    Raises:
        MalformedCycle: On unbalanced parentheses, stray characters, empty or repeating cycles.
        ElementOutOfRange: If an element lies outside [1, n].
    """

    if n < 1:
        raise PermutationError("A permutation needs n >= 1")
    if text.strip() == "()":
        return Permutation.identity(n)
    if _CYCLE.sub("", text).strip(" \t\r\n,"):
        raise MalformedCycle(f"'{text}' is not a product of parenthesized cycles")

    cycles = []
    for group in _CYCLE.findall(text):
        elements = [_to_int(token, MalformedCycle) for token in _tokens(group)]
        if not elements:
            raise MalformedCycle("Empty cycle '()'")
        for v in elements:
            if not 1 <= v <= n:
                raise ElementOutOfRange(f"{v} is outside [1, {n}]")
        if len(set(elements)) != len(elements):
            raise MalformedCycle(f"Cycle ({' '.join(map(str, elements))}) repeats an element")
        if len(elements) > 1:
            cycles.append(Cycle(elements))

    return Permutation.from_cycles(n, cycles)


def parse_permutation(text: str, n: int) -> Permutation:
    """
    Dispatches on the first non-blank character: '(' selects cycle notation, anything else one-line form.
    A blank string is read as the identity.
    """

    stripped = text.strip()
    if not stripped or stripped.startswith("("):
        return parse_cycles(stripped, n)
    return parse_one_line(stripped, n)


def format_one_line(p: Permutation) -> str:
    return " ".join(map(str, p.images))


def format_cycles(p: Permutation) -> str:
    """
    Cycle notation of p; the identity is written "()".
    """

    cycles = p.cycles()
    if not cycles:
        return "()"
    return "".join(map(repr, cycles))

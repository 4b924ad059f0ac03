from .models import Cycle, Permutation, Transposition, compose, cycle_decomposition, inverse, support
from .parse import format_cycles, format_one_line, parse_cycles, parse_one_line, parse_permutation

__all__ = [
    "Cycle",
    "Permutation",
    "Transposition",
    "compose",
    "cycle_decomposition",
    "format_cycles",
    "format_one_line",
    "inverse",
    "parse_cycles",
    "parse_one_line",
    "parse_permutation",
    "support",
]

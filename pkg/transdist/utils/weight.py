from fractions import Fraction

Weight = Fraction
"""Exact edge and path weight. Integral weights have denominator 1."""


def as_weight(value: int | Fraction | str) -> Fraction:
    """
    Converts an integer, a Fraction or a "p/q" string into an exact weight.

    Raises:
        TypeError: For floats and booleans, which have no exact reading.
        ValueError: For strings that are not integers or fractions.
    """

    if isinstance(value, bool) or isinstance(value, float):
        raise TypeError(f"Weights must be exact, got {type(value).__name__} {value!r}")
    if isinstance(value, str):
        value = value.strip()
        if "." in value or "e" in value.lower():
            raise ValueError(f"'{value}' is not an integer or a fraction p/q")
    return Fraction(value)


def format_weight(value: Fraction | int) -> str:
    value = Fraction(value)
    if value.denominator == 1:
        return str(value.numerator)
    return f"{value.numerator}/{value.denominator}"


def weight_to_json(value: Fraction | int) -> int | str:
    """
    JSON representation of a weight: an integer when integral, otherwise a "p/q" string.
    """

    value = Fraction(value)
    if value.denominator == 1:
        return value.numerator
    return f"{value.numerator}/{value.denominator}"

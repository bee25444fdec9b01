"""Scalar helpers shared by the float and exact-rational code paths.

Game tables hold either ``float`` or ``fractions.Fraction`` entries; the same
arithmetic runs on both. Exact mode is simply "every input is a Fraction".
"""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Union

Scalar = Union[int, float, Fraction]

DEFAULT_TOLERANCE = 1e-9


def parse_scalar(text: str, *, exact: bool) -> Scalar:
    """Parse a decimal or ``p/q`` literal into a scalar.

    Raises:
        ValueError: If the text is not a finite number.
    """

    cleaned = text.strip()
    if exact:
        return Fraction(cleaned)
    if "/" in cleaned:
        return float(Fraction(cleaned))
    value = float(cleaned)
    if value != value or value in (float("inf"), float("-inf")):
        raise ValueError(f"non-finite value: {text!r}")
    return value


def is_exact(values: Iterable[Scalar]) -> bool:
    """Return True when every value is an int or a Fraction."""

    return all(isinstance(value, (int, Fraction)) for value in values)


def as_exact(value: Scalar) -> Fraction:
    return value if isinstance(value, Fraction) else Fraction(value)


def divide(value: Scalar, divisor: int | Fraction) -> Scalar:
    """Divide without leaving exact arithmetic when the numerator is rational."""

    if isinstance(value, (int, Fraction)):
        return Fraction(value) / divisor
    return value / divisor


def close(left: Scalar, right: Scalar, tol: float = DEFAULT_TOLERANCE) -> bool:
    """Absolute-tolerance comparison; exact for two rationals."""

    if isinstance(left, (int, Fraction)) and isinstance(right, (int, Fraction)):
        return left == right
    return abs(left - right) <= tol


def format_scalar(value: Scalar, *, digits: int = 12, exact: bool = False) -> str:
    """Render a scalar for output files and the terminal."""

    if exact and isinstance(value, Fraction):
        return str(value)
    number = float(value)
    if number == 0:
        return "0"
    return f"{number:.{digits}g}"

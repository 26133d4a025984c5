"""Exact rational scalars.

Every quantity in this package is an exact rational number: a Python int or a
``fractions.Fraction`` (always stored in lowest terms with positive
denominator).  Floats are rejected everywhere; no rounding ever occurs.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Union

Scalar = Union[int, Fraction]

ZERO = Fraction(0)
ONE = Fraction(1)


def as_fraction(x: Scalar) -> Fraction:
    """Coerce an exact scalar to Fraction, rejecting floats."""
    if isinstance(x, Fraction):
        return x
    if isinstance(x, int):
        return Fraction(x)
    raise TypeError(f"exact scalar expected, got {type(x).__name__}")


def is_scalar(x: object) -> bool:
    return isinstance(x, (int, Fraction)) and not isinstance(x, bool)


def parse_rational(text: str) -> Fraction:
    """Parse "p/q" or plain integer strings into an exact rational."""
    try:
        return Fraction(text.strip())
    except (ValueError, ZeroDivisionError) as exc:
        raise ValueError(f"not a rational number: {text!r}") from exc


def format_rational(x: Scalar) -> str:
    """Render an exact rational as "p/q", or "p" when the denominator is 1."""
    return str(as_fraction(x))

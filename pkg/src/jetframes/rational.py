"""Exact rational scalars.

All coordinates in this package are ``fractions.Fraction`` values: arbitrary
precision, always in lowest terms with a positive denominator, with exact
arithmetic.  This module adds the string form used by every JSON document:
``"p/q"``, or just ``"p"`` when the denominator is 1.
"""

from __future__ import annotations

from fractions import Fraction

from .errors import ParseError

Rational = Fraction


def rat(value: int | str | Fraction, den: int | None = None) -> Fraction:
    """Coerce to an exact rational; ``rat(3, 4)`` is shorthand for 3/4."""
    if den is not None:
        return Fraction(value, den)
    return Fraction(value)


def rat_to_str(value: Fraction) -> str:
    if value.denominator == 1:
        return str(value.numerator)
    return f"{value.numerator}/{value.denominator}"


def rat_from_str(text: str) -> Fraction:
    if not isinstance(text, str):
        raise ParseError(f"rational must be a string, got {type(text).__name__}")
    parts = text.split("/")
    try:
        if len(parts) == 1:
            return Fraction(int(parts[0]))
        if len(parts) == 2:
            num, den = int(parts[0]), int(parts[1])
            if den <= 0:
                raise ParseError(f"denominator must be positive in {text!r}")
            return Fraction(num, den)
    except ValueError as exc:
        raise ParseError(f"malformed rational {text!r}") from exc
    raise ParseError(f"malformed rational {text!r}")

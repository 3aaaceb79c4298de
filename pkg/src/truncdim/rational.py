"""Exact rational arithmetic helpers.

All dimension values in this package are exact fractions (gmpy2.mpq):
arbitrary-precision numerator/denominator, always in lowest terms, no
rounding anywhere.  Floats are never accepted.
"""

from __future__ import annotations

from gmpy2 import mpq

Rational = mpq


def rat(num, den=1) -> Rational:
    """Exact rational from integers (or from an existing rational)."""
    if isinstance(num, float) or isinstance(den, float):
        raise TypeError("floats are not accepted; use exact integers")
    return mpq(num, den)


def rat_floor(q) -> int:
    return q.numerator // q.denominator


def rat_ceil(q) -> int:
    return -((-q.numerator) // q.denominator)


def fmt(q) -> str:
    """Canonical ``num/den`` rendering in lowest terms (``2`` prints as ``2/1``)."""
    q = mpq(q)
    return f"{q.numerator}/{q.denominator}"


def parse_rat(text: str) -> Rational:
    """Parse ``num/den`` or a bare integer string."""
    text = text.strip()
    if "/" in text:
        num, den = text.split("/", 1)
        return mpq(int(num), int(den))
    return mpq(int(text))


def rat_to_json(q) -> dict:
    q = mpq(q)
    return {"num": int(q.numerator), "den": int(q.denominator)}

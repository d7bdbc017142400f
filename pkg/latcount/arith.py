"""
Exact arithmetic kernel

Python ints are the unbounded integers of every count; ``fractions.Fraction``
is the canonical rational (always reduced, positive denominator, zero as 0/1).
"""

import math
from fractions import Fraction

from .exceptions import InvalidArgumentError, ZeroDenominatorError

Rational = Fraction

__all__ = [
    "Rational",
    "rational",
    "binomial",
    "factorial",
    "to_decimal",
    "from_decimal",
    "format_rational",
]


def rational(num: int, den: int = 1) -> Fraction:
    """Canonical rational ``num/den``"""
    if den == 0:
        raise ZeroDenominatorError(num)
    return Fraction(num, den)


def binomial(n: int, k: int) -> int:
    """C(n, k), zero when k is outside 0..n"""
    if n < 0:
        raise InvalidArgumentError(f"binomial requires n >= 0, got {n}", field_name="n", received_value=n)
    if k < 0 or k > n:
        return 0
    return math.comb(n, k)


def factorial(n: int) -> int:
    """n!"""
    if n < 0:
        raise InvalidArgumentError(f"factorial requires n >= 0, got {n}", field_name="n", received_value=n)
    return math.factorial(n)


def to_decimal(value: int) -> str:
    """Decimal string of an integer (the external form of every count)"""
    return str(int(value))


def from_decimal(text: str) -> int:
    """Parse a decimal integer string; rejects anything but an optional sign and digits"""
    stripped = text.strip()
    digits = stripped[1:] if stripped[:1] in "+-" else stripped
    if not digits.isdigit() or not digits.isascii():
        raise InvalidArgumentError(f"not a decimal integer: {text!r}", received_value=text)
    return int(stripped)


def format_rational(value: Fraction) -> str:
    """``"p/q"``, or ``"p"`` when the denominator is 1"""
    value = Fraction(value)
    if value.denominator == 1:
        return to_decimal(value.numerator)
    return f"{value.numerator}/{value.denominator}"

"""Exact integer and rational primitives.

Everything in the package that holds a slope or an alpha value uses
:class:`fractions.Fraction`, which is always kept in lowest terms with a
positive denominator. Nothing here ever touches floating point.
"""

from __future__ import annotations

import math
from fractions import Fraction
from typing import Union

Rational = Fraction
RationalLike = Union[int, Fraction, str]


class DomainError(ValueError):
    """An input violates a mathematical precondition of an operation."""


def rat(x: RationalLike, y: int = 1) -> Fraction:
    if isinstance(x, str):
        if y != 1:
            raise TypeError("string input takes no denominator")
        return parse_rational(x)
    return Fraction(x, y)


def rational_cmp(x: RationalLike, y: RationalLike) -> int:
    """Return -1, 0 or 1 as x <, ==, > y, by exact cross-multiplication."""
    x, y = rat(x), rat(y)
    lhs = x.numerator * y.denominator
    rhs = y.numerator * x.denominator
    return (lhs > rhs) - (lhs < rhs)


def isqrt(x: int) -> int:
    if x < 0:
        raise DomainError(f"isqrt of negative integer {x}")
    return math.isqrt(x)


def floor_half_sum_sqrt(A: int, D: int) -> int:
    """Exact floor of (A + sqrt(D)) / 2 for an integer A and integer D >= 0.

    With s = isqrt(D) the true value lies in [(A+s)/2, (A+s+1)/2), and that
    half-open interval never contains an integer strictly above (A+s)//2.
    """
    return (A + isqrt(D)) // 2


def floor_div(a: int, b: int) -> int:
    if b <= 0:
        raise DomainError("floor_div needs a positive divisor")
    return a // b


def ceil_div(a: int, b: int) -> int:
    if b <= 0:
        raise DomainError("ceil_div needs a positive divisor")
    return -((-a) // b)


def format_rational(x: RationalLike) -> str:
    x = rat(x)
    if x.denominator == 1:
        return str(x.numerator)
    return f"{x.numerator}/{x.denominator}"


def parse_rational(text: str) -> Fraction:
    """Parse "p/q" or "p" (integers only, no decimals)."""
    s = text.strip()
    num, sep, den = s.partition("/")
    try:
        p = int(num)
        q = int(den) if sep else 1
    except ValueError:
        raise DomainError(f"not a rational of the form p/q: {text!r}") from None
    if q == 0:
        raise DomainError(f"zero denominator in {text!r}")
    return Fraction(p, q)

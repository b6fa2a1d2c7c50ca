"""The (n, d, k) data model, its derived coordinates and alpha windows."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Optional

from .exact import DomainError, ceil_div, format_rational


@dataclass(frozen=True, order=True)
class SystemType:
    """Type (n, d, k): rank n, degree d, k sections."""

    n: int
    d: int
    k: int

    def __post_init__(self):
        if self.n < 1:
            raise DomainError(f"rank must be positive, got n={self.n}")
        if self.k < 0:
            raise DomainError(f"k must be nonnegative, got k={self.k}")

    @property
    def a(self) -> int:
        return ceil_div(self.d, self.n)

    @property
    def t(self) -> int:
        return self.n * self.a - self.d

    def to_json(self) -> dict:
        return {"n": self.n, "d": self.d, "k": self.k}


@dataclass(frozen=True)
class Coordinates:
    a: int
    t: int
    l: int
    m: int

    def to_json(self) -> dict:
        return {"a": self.a, "t": self.t, "l": self.l, "m": self.m}


@dataclass(frozen=True)
class AlphaRange:
    """Open interval (lower, upper); upper=None means +infinity."""

    lower: Fraction
    upper: Optional[Fraction] = None

    @property
    def is_empty(self) -> bool:
        return self.upper is not None and self.lower >= self.upper

    def contains(self, alpha: Fraction) -> bool:
        return alpha > self.lower and (self.upper is None or alpha < self.upper)

    def issubset(self, other: "AlphaRange") -> bool:
        if self.is_empty:
            return True
        if self.lower < other.lower:
            return False
        if other.upper is None:
            return True
        return self.upper is not None and self.upper <= other.upper

    def to_json(self) -> dict:
        return {
            "lower": format_rational(self.lower),
            "upper": "inf" if self.upper is None else format_rational(self.upper),
        }

    def __str__(self) -> str:
        up = "inf" if self.upper is None else format_rational(self.upper)
        return f"({format_rational(self.lower)}, {up})"


def as_system(sys_or_n, d: Optional[int] = None, k: Optional[int] = None) -> SystemType:
    if isinstance(sys_or_n, SystemType):
        return sys_or_n
    return SystemType(sys_or_n, d, k)


def _require_proper(sys: SystemType, what: str) -> None:
    if not 0 < sys.k < sys.n:
        raise DomainError(f"{what} requires 0 < k < n, got (n,d,k)=({sys.n},{sys.d},{sys.k})")


def beta(sys: SystemType) -> int:
    """Brill-Noether number -n^2 + 1 - k(k - d - n)."""
    n, d, k = sys.n, sys.d, sys.k
    return -n * n + 1 - k * (k - d - n)


def decompose(sys: SystemType) -> Coordinates:
    """Return (a, t, l, m) with d = na - t and ka = l(n-k) + t + m."""
    _require_proper(sys, "decompose")
    a, t = sys.a, sys.t
    l, m = divmod(sys.k * a - t, sys.n - sys.k)
    return Coordinates(a, t, l, m)


def necessary_range(sys: SystemType) -> AlphaRange:
    """The open window t/k < alpha < (ln + t)/k outside which G(alpha) is empty."""
    c = decompose(sys)
    return AlphaRange(Fraction(c.t, sys.k), Fraction(c.l * sys.n + c.t, sys.k))


def necessary_upper_alt(sys: SystemType) -> Fraction:
    """The same upper endpoint written as d/(n-k) - mn/(k(n-k))."""
    c = decompose(sys)
    n, d, k = sys.n, sys.d, sys.k
    return Fraction(d, n - k) - Fraction(c.m * n, k * (n - k))


def mu_alpha(d: int, n: int, k: int, alpha: Fraction) -> Fraction:
    if n < 1:
        raise DomainError(f"rank must be positive, got n={n}")
    return Fraction(d, n) + Fraction(alpha) * Fraction(k, n)

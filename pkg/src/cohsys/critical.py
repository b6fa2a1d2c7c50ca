"""Critical data sets (walls), allowability and the flip numbers C12, C21."""

from __future__ import annotations

from collections import defaultdict
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from typing import Dict, List, Optional, Tuple

from .exact import DomainError, ceil_div, format_rational
from .systems import SystemType, decompose

SLOPE_ORDER = "slope-order"
ALPHA_WINDOW = "alpha-window"
BN_PARENT = "bn-parent"
BN_SUB1 = "bn-sub1"
BN_SUB2 = "bn-sub2"

BIRATIONAL = "birational"
NO_WALL = "no-wall"
MINUS_EMPTY = "minus-side-empty"
PLUS_EMPTY = "plus-side-empty"
NEGATIVE = "negative-flip-number"
# Both minima zero on different data sets; the flip analysis rules this out
# whenever the sub-systems exist, so it only flags that they cannot all exist.
BOTH_ZERO = "both-minima-zero"


class InvalidDataSet(DomainError):
    pass


@dataclass(frozen=True)
class CriticalDataSet:
    parent: SystemType
    n1: int
    d1: int
    k1: int
    n2: int
    d2: int
    k2: int

    def __post_init__(self):
        p = self.parent
        if (self.n1 + self.n2, self.d1 + self.d2, self.k1 + self.k2) != (p.n, p.d, p.k):
            raise InvalidDataSet("sub-types do not add up to the parent type")
        if self.n1 < 1 or self.n2 < 1 or self.k1 < 0 or self.k2 < 0:
            raise InvalidDataSet("need n1, n2 >= 1 and k1, k2 >= 0")

    @classmethod
    def from_quotient(cls, parent: SystemType, n2: int, d2: int, k2: int) -> "CriticalDataSet":
        return cls(parent, parent.n - n2, parent.d - d2, parent.k - k2, n2, d2, k2)

    @property
    def denominator(self) -> int:
        """n2*k - n*k2; positive exactly when k1/n1 > k2/n2."""
        return self.n2 * self.parent.k - self.parent.n * self.k2

    @property
    def alpha_c(self) -> Fraction:
        return alpha_c_of(self)

    @property
    def e(self) -> int:
        return self.d2 - self.n2 * self.parent.a

    @property
    def f(self) -> Optional[int]:
        p = self.parent
        if not 0 < p.k < p.n:
            return None
        c = decompose(p)
        return -self.k2 * c.t + c.l * (p.k * self.n2 - self.k2 * p.n) - p.k * self.e

    @property
    def shape(self) -> Tuple[int, int, int, int, int, int]:
        return (self.n1, self.d1, self.k1, self.n2, self.d2, self.k2)

    def swapped(self) -> "CriticalDataSet":
        """The same split with the two sub-types exchanged (not a wall in general)."""
        return CriticalDataSet(self.parent, self.n2, self.d2, self.k2, self.n1, self.d1, self.k1)

    def to_json(self) -> dict:
        flips = flip_numbers(self)
        report = is_allowable(self)
        try:
            alpha = format_rational(self.alpha_c)
        except InvalidDataSet:
            alpha = None
        return {
            "parent": self.parent.to_json(),
            "n1": self.n1, "d1": self.d1, "k1": self.k1,
            "n2": self.n2, "d2": self.d2, "k2": self.k2,
            "alpha_c": alpha,
            "e": self.e,
            "f": self.f,
            "c12": flips.c12,
            "c21": flips.c21,
            "allowable": report.allowable,
            "failed_conditions": list(report.failed_conditions),
        }


@dataclass(frozen=True)
class FlipNumbers:
    c12: int
    c21: int


@dataclass(frozen=True)
class AllowabilityReport:
    failed_conditions: Tuple[str, ...] = ()

    @property
    def allowable(self) -> bool:
        return not self.failed_conditions


def flip_numbers(A: CriticalDataSet) -> FlipNumbers:
    n1, d1, k1, n2, d2, k2 = A.shape
    c12 = -n1 * n2 - d2 * n1 + d1 * n2 + k1 * (d2 + n2 - k2)
    c21 = -n1 * n2 + d2 * n1 - d1 * n2 + k2 * (d1 + n1 - k1)
    return FlipNumbers(c12, c21)


def alpha_c_of(A: CriticalDataSet) -> Fraction:
    """Critical value, computed from the degrees and again from e; both must agree."""
    p = A.parent
    den = A.denominator
    if den <= 0:
        raise InvalidDataSet(f"n2*k - n*k2 = {den} is not positive")
    direct = Fraction(A.d2 * p.n - p.d * A.n2, den)
    via_e = Fraction(p.n * A.e + A.n2 * p.t, den)
    if direct != via_e:  # pragma: no cover - algebraic identity
        raise AssertionError(f"alpha_c formulas disagree: {direct} vs {via_e}")
    return direct


def _bn_ok(n: int, d: int, k: int) -> bool:
    # d >= (n^2-1)/k - (n-k), cleared of the denominator
    return k * d >= n * n - 1 - k * (n - k)


def is_allowable(A: CriticalDataSet) -> AllowabilityReport:
    p = A.parent
    if not 0 < p.k < p.n:
        raise DomainError("allowability is defined only for 0 < k < n")
    n1, d1, k1, n2, d2, k2 = A.shape
    failed = []
    if not (d2 * n1 > d1 * n2 and k1 * n2 > k2 * n1):
        failed.append(SLOPE_ORDER)
    if A.denominator <= 0:
        failed.append(ALPHA_WINDOW)
    else:
        c = decompose(p)
        alpha = A.alpha_c
        if not Fraction(c.t, p.k) < alpha < Fraction(c.l * p.n + c.t, p.k):
            failed.append(ALPHA_WINDOW)
    if not _bn_ok(p.n, p.d, p.k):
        failed.append(BN_PARENT)
    # k1 = 0 is already a slope-order failure and the inequality is undefined
    if k1 >= 1 and not _bn_ok(n1, d1, k1):
        failed.append(BN_SUB1)
    if k2 == 0:
        if n2 != 1:
            failed.append(BN_SUB2)
    elif not _bn_ok(n2, d2, k2):
        failed.append(BN_SUB2)
    return AllowabilityReport(tuple(failed))


def c12_rearranged(A: CriticalDataSet) -> int:
    """Right-hand side of the expansion of k*C12 in terms of l, t, m and f."""
    p = A.parent
    if not 0 < p.k < p.n:
        raise DomainError("rearranged C12 needs 0 < k < n")
    c = decompose(p)
    n, k = p.n, p.k
    n1, _, k1, n2, _, k2 = A.shape
    return ((n1 - k1) * (n * k2 * c.l + k2 * c.t - k * n2)
            + (n - k1) * A.f + k1 * n2 * c.m - k * k1 * k2)


def _d2_window(sys: SystemType, n2: int, k2: int) -> Tuple[int, int]:
    """Integer d2 with t/k < alpha_c < (ln+t)/k, for a positive denominator."""
    c = decompose(sys)
    n, d, k = sys.n, sys.d, sys.k
    den = n2 * k - n * k2
    # alpha_c = (d2*n - d*n2)/den, so d2 lies strictly between these over n*k
    base = d * n2 * k
    lo = (base + den * c.t) // (n * k) + 1
    hi = ceil_div(base + den * (c.l * n + c.t), n * k) - 1
    return lo, hi


def _bn_min_degree(n: int, k: int) -> int:
    """Least d with k*d >= n^2 - 1 - k(n-k)."""
    return ceil_div(n * n - 1 - k * (n - k), k)


@lru_cache(maxsize=4096)
def _walls_cached(sys: SystemType) -> Tuple[CriticalDataSet, ...]:
    n, d, k = sys.n, sys.d, sys.k
    if decompose(sys).l < 1 or not _bn_ok(n, d, k):
        return ()
    out = []
    for n2 in range(1, n):
        n1 = n - n2
        for k2 in range(0, k + 1):
            k1 = k - k2
            if n2 * k - n * k2 <= 0:
                continue
            if k2 == 0 and n2 != 1:
                continue
            lo, hi = _d2_window(sys, n2, k2)
            # the Brill-Noether conditions on both pieces cut the window further
            if k2 >= 1:
                lo = max(lo, _bn_min_degree(n2, k2))
            hi = min(hi, d - _bn_min_degree(n1, k1))
            for d2 in range(lo, hi + 1):
                A = CriticalDataSet(sys, n1, d - d2, k1, n2, d2, k2)
                if is_allowable(A).allowable:
                    out.append(A)
    return tuple(out)


def enumerate_walls(sys: SystemType) -> List[CriticalDataSet]:
    """All allowable critical data sets of sys, sorted by (n2, k2, d2)."""
    if not 0 < sys.k < sys.n:
        raise DomainError("walls are enumerated only for 0 < k < n")
    return list(_walls_cached(sys))


def walls_by_alpha(sys: SystemType) -> Dict[Fraction, List[CriticalDataSet]]:
    groups: Dict[Fraction, List[CriticalDataSet]] = defaultdict(list)
    for A in enumerate_walls(sys):
        groups[A.alpha_c].append(A)
    return dict(sorted(groups.items()))


@dataclass(frozen=True)
class FlipOutcome:
    alpha: Fraction
    outcome: str
    min_c12: Optional[int]
    min_c21: Optional[int]
    walls: Tuple[CriticalDataSet, ...] = field(default=(), compare=False)

    def to_json(self) -> dict:
        return {
            "alpha": format_rational(self.alpha),
            "outcome": self.outcome,
            "min_c12": self.min_c12,
            "min_c21": self.min_c21,
            "walls": [list(A.shape) for A in self.walls],
        }


def outcome_of(alpha: Fraction, walls: List[CriticalDataSet]) -> FlipOutcome:
    if not walls:
        raise DomainError(f"no allowable wall at alpha = {format_rational(alpha)}")
    flips = [flip_numbers(A) for A in walls]
    live = [fl for fl in flips if (fl.c12, fl.c21) != (0, 0)]
    if not live:
        return FlipOutcome(alpha, NO_WALL, None, None, tuple(walls))
    m12 = min(fl.c12 for fl in live)
    m21 = min(fl.c21 for fl in live)
    if m12 < 0 or m21 < 0:
        label = NEGATIVE
    elif m12 > 0 and m21 > 0:
        label = BIRATIONAL
    elif m21 == 0 and m12 > 0:
        label = MINUS_EMPTY
    elif m12 == 0 and m21 > 0:
        label = PLUS_EMPTY
    else:
        label = BOTH_ZERO
    return FlipOutcome(alpha, label, m12, m21, tuple(walls))


def flip_outcome(sys: SystemType, alpha_c: Fraction) -> FlipOutcome:
    """Net effect of crossing the critical value alpha_c, over all its walls."""
    alpha_c = Fraction(alpha_c)
    return outcome_of(alpha_c, [A for A in enumerate_walls(sys) if A.alpha_c == alpha_c])


def flip_outcomes(sys: SystemType) -> List[FlipOutcome]:
    return [outcome_of(alpha, group) for alpha, group in walls_by_alpha(sys).items()]

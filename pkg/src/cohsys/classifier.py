"""For which alpha is G(alpha; n, d, k) non-empty?

Settled regimes are answered exactly; everything else gets NECESSARY_ONLY
together with the window outside which the moduli space is known to be
empty.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import List, Optional, Tuple

from .critical import BIRATIONAL, FlipOutcome, enumerate_walls, flip_numbers, flip_outcomes
from .exact import DomainError, format_rational
from .segre import zero_plus_exists
from .systems import AlphaRange, SystemType, beta, decompose, necessary_range

EMPTY_ALL_ALPHA = "EMPTY_ALL_ALPHA"
NONEMPTY = "NONEMPTY"
NECESSARY_ONLY = "NECESSARY_ONLY"

# construction routes to a (t/k)^+-stable system
ROUTE_T0 = "t=0"
ROUTE_T1 = "t=1,a>=k"
ROUTE_TK1 = "t=k-1,a>=2"
ROUTE_TK = "t=k,a>=3"
ROUTE_TGK = "t>k"
ROUTE_SPLIT = "t=k,a=2,split-quotient"
ROUTE_NONE = "none"

# k = 3, n >= 4 pairs whose range starts above t/3, keyed by (n, d)
K3_EXCEPTIONS = {
    (4, 7): (Fraction(3, 5), Fraction(7)),
    (5, 9): (Fraction(3, 4), Fraction(11, 3)),
    (6, 11): (Fraction(1), Fraction(7, 3)),
    (7, 13): (Fraction(3, 2), Fraction(8, 3)),
}


@dataclass(frozen=True)
class Evidence:
    label: str
    alpha: Optional[Fraction] = None
    outcome: Optional[str] = None

    def to_json(self) -> dict:
        return {
            "label": self.label,
            "alpha": None if self.alpha is None else format_rational(self.alpha),
            "outcome": self.outcome,
        }


@dataclass(frozen=True)
class ExistenceVerdict:
    system: SystemType
    status: str
    necessary: AlphaRange
    range: Optional[AlphaRange] = None
    evidence: Tuple[Evidence, ...] = field(default=())

    def to_json(self) -> dict:
        return {
            "system": self.system.to_json(),
            "status": self.status,
            "range": None if self.range is None else self.range.to_json(),
            "necessary": self.necessary.to_json(),
            "evidence": [e.to_json() for e in self.evidence],
        }


def alpha_window(sys: SystemType) -> AlphaRange:
    """Necessary window for any k; for k >= n there is no upper bound."""
    if 0 < sys.k < sys.n:
        return necessary_range(sys)
    if sys.k == 0:
        return AlphaRange(Fraction(0))
    return AlphaRange(Fraction(sys.t, sys.k))


def necessary_conditions_hold(sys: SystemType) -> bool:
    """l >= 1 and beta >= 0 (the Brill-Noether inequality), for 0 < k < n."""
    return decompose(sys).l >= 1 and beta(sys) >= 0


def _wall_evidence(outcomes: List[FlipOutcome]) -> List[Evidence]:
    return [Evidence("wall", o.alpha, o.outcome) for o in outcomes]


def construction_route(sys: SystemType) -> str:
    """Which sufficient condition gives a (t/k)^+-stable system of type sys."""
    n, k = sys.n, sys.k
    if not 0 < k < n:
        raise DomainError(f"construction_route requires 0 < k < n, got k={k}, n={n}")
    if k < 2:
        raise DomainError("construction_route requires k >= 2")
    c = decompose(sys)
    a, t = c.a, c.t
    if k * a < n - k + t:
        raise DomainError(f"construction_route requires ka >= n-k+t, got ka={k * a}, n-k+t={n - k + t}")
    if t == 0:
        return ROUTE_T0 if zero_plus_exists(n, a, k) else ROUTE_NONE
    if t == 1 and a >= k:
        return ROUTE_T1
    if t == k - 1 and a >= 2:
        return ROUTE_TK1
    if t == k and a >= 3:
        return ROUTE_TK
    if t > k and k * a * t >= t * t + k * k - 1:
        sub = SystemType(t, t * (a - 1), k)
        if all(flip_numbers(A).c12 > 0 for A in enumerate_walls(sub)):
            return ROUTE_TGK
        return ROUTE_NONE
    # quotient split into k copies of (O(a-1), one section); needs k(a-1) > n-k
    if t == k and a == 2 and k > n - k:
        return ROUTE_SPLIT
    return ROUTE_NONE


def _settled_by_flips(sys: SystemType, label: str, window: AlphaRange, outcomes) -> ExistenceVerdict:
    return ExistenceVerdict(sys, NONEMPTY, window, window,
                            (Evidence(label),) + tuple(_wall_evidence(outcomes)))


def _classify_k_small(sys: SystemType) -> ExistenceVerdict:
    """0 < k < n with k in {1, 2, 3}."""
    n, d, k = sys.n, sys.d, sys.k
    window = necessary_range(sys)
    outcomes = flip_outcomes(sys)
    walls = tuple(_wall_evidence(outcomes))
    label = f"k={k}-existence"
    if not necessary_conditions_hold(sys) or (k, n, d) in {(2, 4, 6), (3, 6, 9)}:
        return ExistenceVerdict(sys, EMPTY_ALL_ALPHA, window, None, (Evidence(label),) + walls)
    if k == 3 and (n, d) in K3_EXCEPTIONS:
        lo, hi = K3_EXCEPTIONS[(n, d)]
        return ExistenceVerdict(sys, NONEMPTY, window, AlphaRange(lo, hi), (Evidence(label),) + walls)
    return ExistenceVerdict(sys, NONEMPTY, window, window, (Evidence(label),) + walls)


def _classify_small_rank(sys: SystemType) -> Optional[ExistenceVerdict]:
    """k >= n cases with a known answer: (n, d, 3) for n <= 3 and (n, na, n)."""
    n, d, k = sys.n, sys.d, sys.k
    window = alpha_window(sys)
    if k == 3 and n <= 3:
        label = f"small-rank-k=3,n={n}"
        min_d = {1: 2, 2: 2, 3: 4}[n]
        if d < min_d:
            return ExistenceVerdict(sys, EMPTY_ALL_ALPHA, window, None, (Evidence(label),))
        special = {(2, 3): Fraction(1), (3, 5): Fraction(2, 3)}
        lower = special.get((n, d), Fraction(sys.t, 3))
        return ExistenceVerdict(sys, NONEMPTY, window, AlphaRange(lower), (Evidence(label),))
    if k == n and n >= 2 and sys.t == 0:
        label = "k=n,d=na"
        if sys.a >= 2:
            return ExistenceVerdict(sys, NONEMPTY, window, AlphaRange(Fraction(0)), (Evidence(label),))
        return ExistenceVerdict(sys, EMPTY_ALL_ALPHA, window, None, (Evidence(label),))
    return None


def classify(sys: SystemType) -> ExistenceVerdict:
    n, d, k = sys.n, sys.d, sys.k
    if k == 0 or k >= n:
        verdict = _classify_small_rank(sys)
        if verdict is not None:
            return verdict
        return ExistenceVerdict(sys, NECESSARY_ONLY, alpha_window(sys), None, (Evidence("unsettled"),))

    if k <= 3:
        return _classify_k_small(sys)

    window = necessary_range(sys)
    if not necessary_conditions_hold(sys):
        return ExistenceVerdict(sys, EMPTY_ALL_ALPHA, window, None, (Evidence("necessary-conditions"),))
    outcomes = flip_outcomes(sys)
    walls = tuple(_wall_evidence(outcomes))
    if (n, d, k) == (6, 7, 4):
        # the wall at 2 has C12 = 0: nothing survives past it
        return ExistenceVerdict(sys, NONEMPTY, window, AlphaRange(Fraction(5, 4), Fraction(2)),
                                (Evidence("k=4-example"),) + walls)
    route = construction_route(sys)
    if route != ROUTE_NONE and all(o.outcome == BIRATIONAL for o in outcomes):
        return _settled_by_flips(sys, f"route:{route}", window, outcomes)
    return ExistenceVerdict(sys, NECESSARY_ONLY, window, None, (Evidence(f"route:{route}"),) + walls)

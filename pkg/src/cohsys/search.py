"""Bounded sweeps over (n, d) for a fixed k."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator, List, Optional

from .classifier import EMPTY_ALL_ALPHA, NONEMPTY, ExistenceVerdict, classify, necessary_conditions_hold
from .critical import CriticalDataSet, FlipNumbers, enumerate_walls, flip_numbers, flip_outcomes
from .exact import DomainError, ceil_div
from .systems import AlphaRange, SystemType, decompose

DEFAULT_L_MAX = 6


@dataclass(frozen=True)
class SearchWindow:
    """n in [n_min, n_max]; d either in [0, d_max] or all d with l <= l_max."""

    k: int
    n_min: int
    n_max: int
    d_max: Optional[int] = None
    l_max: Optional[int] = DEFAULT_L_MAX

    def __post_init__(self):
        if self.k < 1:
            raise DomainError("search needs k >= 1")
        if not self.k < self.n_min <= self.n_max:
            raise DomainError(f"need k < n_min <= n_max, got k={self.k}, [{self.n_min}, {self.n_max}]")
        if self.d_max is None and self.l_max is None:
            raise DomainError("give either d_max or l_max")
        if self.d_max is not None and self.d_max < 0:
            raise DomainError("d_max must be nonnegative")

    def degrees(self, n: int) -> Iterator[int]:
        if self.d_max is not None:
            yield from range(0, self.d_max + 1)
            return
        k = self.k
        # l <= L forces ka - t < (L+1)(n-k), and t <= n-1
        a_max = ceil_div((self.l_max + 1) * (n - k) + n, k)
        for d in range(0, n * a_max + 1):
            if decompose(SystemType(n, d, k)).l <= self.l_max:
                yield d

    def systems(self) -> Iterator[SystemType]:
        for n in range(self.n_min, self.n_max + 1):
            for d in self.degrees(n):
                yield SystemType(n, d, self.k)


@dataclass(frozen=True)
class NonpositiveWall:
    wall: CriticalDataSet
    flips: FlipNumbers

    @property
    def flag(self) -> str:
        bad = []
        if self.flips.c12 <= 0:
            bad.append("c12<=0")
        if self.flips.c21 <= 0:
            bad.append("c21<=0")
        return ",".join(bad)

    def to_json(self) -> dict:
        out = self.wall.to_json()
        out["flag"] = self.flag
        return out


def search_nonpositive(w: SearchWindow) -> List[NonpositiveWall]:
    """Every allowable wall in the window with C12 <= 0 or C21 <= 0."""
    found = []
    for sys in w.systems():
        for A in enumerate_walls(sys):
            fl = flip_numbers(A)
            if fl.c12 <= 0 or fl.c21 <= 0:
                found.append(NonpositiveWall(A, fl))
    return found


@dataclass(frozen=True)
class ReportRow:
    system: SystemType
    verdict: ExistenceVerdict
    outcomes: tuple

    @property
    def necessary(self) -> AlphaRange:
        return self.verdict.necessary

    @property
    def flagged(self) -> bool:
        """Verdict narrower than the necessary window although l >= 1 and beta >= 0."""
        v = self.verdict
        if v.status == NONEMPTY:
            return v.range != v.necessary
        if v.status == EMPTY_ALL_ALPHA:
            return necessary_conditions_hold(self.system)
        return False

    def to_json(self) -> dict:
        return {
            "system": self.system.to_json(),
            "necessary": self.necessary.to_json(),
            "status": self.verdict.status,
            "range": None if self.verdict.range is None else self.verdict.range.to_json(),
            "walls": [{"alpha": o.to_json()["alpha"], "outcome": o.outcome} for o in self.outcomes],
            "flag": self.flagged,
        }


def stability_window_report(w: SearchWindow) -> List[ReportRow]:
    rows = []
    for sys in w.systems():
        outcomes: tuple = tuple(flip_outcomes(sys))
        rows.append(ReportRow(sys, classify(sys), outcomes))
    return rows


def flagged_pairs(rows: List[ReportRow]) -> List[tuple]:
    return [(r.system.n, r.system.d) for r in rows if r.flagged]

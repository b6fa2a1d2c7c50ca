from fractions import Fraction

import pytest

from cohsys.classifier import (
    EMPTY_ALL_ALPHA,
    K3_EXCEPTIONS,
    NECESSARY_ONLY,
    NONEMPTY,
    ROUTE_NONE,
    ROUTE_SPLIT,
    ROUTE_T0,
    ROUTE_TGK,
    ROUTE_TK1,
    classify,
    construction_route,
    necessary_conditions_hold,
)
from cohsys.critical import BIRATIONAL, MINUS_EMPTY, PLUS_EMPTY, flip_outcomes
from cohsys.exact import DomainError
from cohsys.systems import AlphaRange, SystemType, beta, necessary_range

S = SystemType
F = Fraction


@pytest.mark.parametrize("ndk, status, rng", [
    ((6, 11, 3), NONEMPTY, (F(1), F(7, 3))),
    ((6, 9, 3), EMPTY_ALL_ALPHA, None),
    ((4, 6, 2), EMPTY_ALL_ALPHA, None),
    ((3, 5, 3), NONEMPTY, (F(2, 3), None)),
    ((6, 7, 4), NONEMPTY, (F(5, 4), F(2))),
    ((2, 3, 3), NONEMPTY, (F(1), None)),
    ((1, 1, 3), EMPTY_ALL_ALPHA, None),
    ((3, 3, 3), EMPTY_ALL_ALPHA, None),
    ((4, 8, 4), NONEMPTY, (F(0), None)),
])
def test_examples(ndk, status, rng):
    v = classify(S(*ndk))
    assert v.status == status
    assert v.range == (None if rng is None else AlphaRange(*rng))


def test_six_seven_four_evidence():
    v = classify(S(6, 7, 4))
    walls = [(e.alpha, e.outcome) for e in v.evidence if e.alpha is not None]
    assert (F(2), PLUS_EMPTY) in walls


@pytest.mark.parametrize("ndk", [(5, 9, 4), (2, 3, 2), (1, 4, 1), (3, 7, 0), (2, 7, 5)])
def test_unsettled_regimes(ndk):
    v = classify(S(*ndk))
    assert v.status == NECESSARY_ONLY and v.range is None


def test_k2_and_k3_lower_bounds_match_beta():
    # the degree bounds d >= n(n-2)/2 + 3/2 and d >= n(n-3)/3 + 8/3 are beta >= 0
    for n in range(3, 15):
        for d in range(0, 80):
            assert (2 * d >= n * (n - 2) + 3) == (beta(S(n, d, 2)) >= 0)
            if n >= 4:
                assert (3 * d >= n * (n - 3) + 8) == (beta(S(n, d, 3)) >= 0)


def small_k_sweep():
    for k in (1, 2, 3):
        for n in range(k + 1, 9):
            for d in range(0, 61):
                yield S(n, d, k)


def test_verdict_consistent_with_flips():
    checked_lower = 0
    for s in small_k_sweep():
        v = classify(s)
        if v.status != NONEMPTY:
            continue
        floor = F(s.t, s.k)
        for o in flip_outcomes(s):
            if v.range.contains(o.alpha):
                assert o.outcome == BIRATIONAL, (s, o.alpha)
            elif o.alpha == v.range.lower and v.range.lower > floor:
                checked_lower += 1
                assert o.outcome == MINUS_EMPTY, (s, o.alpha)
    assert checked_lower == len(K3_EXCEPTIONS)


def test_upper_endpoint_never_moves():
    for s in small_k_sweep():
        v = classify(s)
        if v.status == NONEMPTY:
            assert v.range.upper == necessary_range(s).upper
            assert v.range.issubset(v.necessary)


def test_empty_exactly_when_conditions_fail_or_listed():
    for s in small_k_sweep():
        v = classify(s)
        listed = (s.k, s.n, s.d) in {(2, 4, 6), (3, 6, 9)}
        assert (v.status == EMPTY_ALL_ALPHA) == (listed or not necessary_conditions_hold(s))


def test_nonempty_inside_necessary_everywhere():
    for n in range(1, 9):
        for k in range(0, 9):
            for d in range(0, 40):
                v = classify(S(n, d, k))
                if v.status == NONEMPTY:
                    assert v.range.issubset(v.necessary)


def test_deterministic():
    assert classify(S(7, 13, 3)) == classify(S(7, 13, 3))
    assert classify(S(7, 13, 3)).to_json() == classify(S(7, 13, 3)).to_json()


@pytest.mark.parametrize("ndk, route", [
    ((7, 13, 3), ROUTE_NONE),
    ((5, 7, 3), ROUTE_SPLIT),
    ((4, 6, 3), ROUTE_TK1),
    ((7, 12, 3), ROUTE_TK1),
    ((4, 8, 3), ROUTE_T0),
    ((5, 12, 2), ROUTE_TGK),
])
def test_construction_route(ndk, route):
    assert construction_route(S(*ndk)) == route


@pytest.mark.parametrize("ndk", [(4, 9, 1), (7, 7, 3), (3, 3, 3)])
def test_construction_route_preconditions(ndk):
    with pytest.raises(DomainError):
        construction_route(S(*ndk))

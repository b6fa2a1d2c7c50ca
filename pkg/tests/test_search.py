from fractions import Fraction

import pytest

from cohsys.critical import flip_numbers, is_allowable
from cohsys.exact import DomainError
from cohsys.search import SearchWindow, flagged_pairs, search_nonpositive, stability_window_report
from cohsys.systems import SystemType, decompose

K3_EXCEPTIONAL = [
    ((4, 7), (1, 1, 2, 3, 6, 1), Fraction(3, 5)),
    ((5, 9), (2, 3, 2, 3, 6, 1), Fraction(3, 4)),
    ((6, 11), (3, 5, 2, 3, 6, 1), Fraction(1)),
    ((7, 13), (4, 7, 2, 3, 6, 1), Fraction(3, 2)),
]


def summary(found):
    return [((x.wall.parent.n, x.wall.parent.d), x.wall.shape, x.wall.alpha_c) for x in found]


def test_k3_exceptional_walls():
    found = search_nonpositive(SearchWindow(3, 4, 12, l_max=6))
    assert summary(found) == K3_EXCEPTIONAL
    assert all(x.flips.c21 == 0 and x.flips.c12 > 0 for x in found)
    assert all(x.flag == "c21<=0" for x in found)


def test_k3_degree_window_agrees():
    found = search_nonpositive(SearchWindow(3, 4, 12, d_max=80))
    assert summary(found) == K3_EXCEPTIONAL


def test_k2_has_no_nonpositive_walls():
    assert search_nonpositive(SearchWindow(2, 3, 12, l_max=6)) == []


def test_k4_smallest_rank_zero_flip():
    found = [x for x in search_nonpositive(SearchWindow(4, 5, 6, d_max=80)) if x.flips.c12 <= 0]
    assert [(x.wall.parent.n, x.wall.parent.d, x.wall.shape) for x in found] == [(6, 7, (4, 4, 3, 2, 3, 1))]
    assert found[0].flag == "c12<=0"


def test_k4_zero_flip_recurs_in_higher_rank():
    found = [x for x in search_nonpositive(SearchWindow(4, 7, 7, d_max=40)) if x.flips.c12 == 0]
    assert ((7, 10), (4, 4, 3, 3, 6, 1)) in [((x.wall.parent.n, x.wall.parent.d), x.wall.shape) for x in found]


def test_returned_walls_are_allowable():
    for k in (3, 4):
        for x in search_nonpositive(SearchWindow(k, k + 1, 9, d_max=50)):
            assert is_allowable(x.wall).allowable
            assert flip_numbers(x.wall) == x.flips


def test_l_window_is_exact():
    w = SearchWindow(3, 4, 9, l_max=4)
    for n in range(4, 10):
        got = set(w.degrees(n))
        want = {d for d in range(0, 400) if decompose(SystemType(n, d, 3)).l <= 4}
        assert got == want


@pytest.mark.parametrize("k, n_max, want", [
    (3, 12, [(4, 7), (5, 9), (6, 9), (6, 11), (7, 13)]),
    (2, 12, [(4, 6)]),
    (1, 10, []),
])
def test_flagged_rows(k, n_max, want):
    rows = stability_window_report(SearchWindow(k, k + 1, n_max, d_max=80))
    assert flagged_pairs(rows) == want


def test_report_rows_serialise():
    rows = stability_window_report(SearchWindow(3, 4, 4, d_max=8))
    row = [r for r in rows if (r.system.n, r.system.d) == (4, 7)][0]
    j = row.to_json()
    assert j["flag"] is True and j["range"] == {"lower": "3/5", "upper": "7"}
    assert {"alpha": "3/5", "outcome": "minus-side-empty"} in j["walls"]


@pytest.mark.parametrize("args", [(0, 2, 3), (3, 3, 5), (3, 6, 5)])
def test_window_validation(args):
    with pytest.raises(DomainError):
        SearchWindow(*args)

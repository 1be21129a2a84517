from fractions import Fraction as F

import pytest

from admperm import crosscheck
from admperm.crosscheck import facets, run_crosscheck, suite_bruhat, suite_hull, suite_lattice


def test_facets_of_a_square():
    pts = [(F(a), F(b)) for a in (-1, 1) for b in (-1, 1)]
    ineqs = facets(pts)
    assert len(ineqs) == 4
    assert all(b == 1 for _, b in ineqs)


def test_suites_small():
    assert suite_bruhat(["A2"]).passed
    assert suite_hull(["A2"], samples=100).passed
    assert suite_lattice(["A2", "C2"]).passed


def test_oracle_catches_a_broken_test(monkeypatch):
    # a Bruhat test that ignores the order entirely must be caught
    monkeypatch.setattr(crosscheck, "bruhat_le", lambda u, w: u.length() <= w.length())
    r = suite_bruhat(["A2"])
    assert not r.passed and r.failure


def test_hull_oracle_catches_a_broken_test(monkeypatch):
    monkeypatch.setattr(crosscheck, "in_hull", lambda d, v, mu: True)
    assert not suite_hull(["A2"], samples=50).passed


def test_rank_guard():
    with pytest.raises(ValueError):
        run_crosscheck(5)


@pytest.mark.slow
def test_deterministic_reports():
    a = [r.to_json() for r in run_crosscheck(2)]
    b = [r.to_json() for r in run_crosscheck(2)]
    assert a == b and all(r["passed"] for r in a)

import itertools
from fractions import Fraction as F

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from admperm import qq
from admperm.crosscheck import bruhat_oracle
from admperm.finite_weyl import (
    act,
    all_elements,
    bruhat_le,
    from_word,
    identity,
    length,
    longest_element,
    matrix_of,
    min_coset_rep,
    orbit,
    orbit_witness,
    parabolic_elements,
    reduced_word,
    simple_reflection,
    stabilizer_simple_indices,
)
from admperm.group_index import weyl_group_order
from admperm.rootdata import get_root_datum

from .conftest import E6_W1, E6_W2, E7_W1, E7_W2

words = st.lists(st.integers(1, 6), max_size=30)


def test_words_and_lengths(e6, e7):
    w1 = from_word(e6, E6_W1)
    assert length(w1) == 11 and length(from_word(e6, E6_W2)) == 6
    assert length(from_word(e7, E7_W1)) == 12 and length(from_word(e7, E7_W2)) == 6
    assert from_word(e6, []).is_identity()
    for i in range(1, 7):
        assert from_word(e6, [i, i]).is_identity()
        assert length(simple_reflection(e6, i)) == 1
    with pytest.raises(ValueError):
        from_word(e6, [7])
    with pytest.raises(ValueError):
        from_word(e6, [0])


def test_longest_elements(e6, e7):
    assert length(longest_element(e6)) == 36
    assert length(longest_element(e7)) == 63


@settings(max_examples=80, deadline=None)
@given(words, words)
def test_length_properties_e6(a, b):
    d = get_root_datum("E6")
    u, w = from_word(d, a), from_word(d, b)
    assert length(u) == len(reduced_word(u))
    assert from_word(d, reduced_word(u)) == u
    assert length(u.inverse()) == length(u)
    assert (length(u * w) - length(u) - length(w)) % 2 == 0
    neg = sum(1 for k in range(d.npos) if u.perm[k] >= d.npos)
    assert neg == length(u)
    for k in range(len(d.roots)):
        assert u.perm[d.negate(k)] == d.negate(u.perm[k])


@settings(max_examples=30, deadline=None)
@given(words, words)
def test_action_is_linear_and_matches_matrix(a, b):
    d = get_root_datum("E6")
    u, w = from_word(d, a), from_word(d, b)
    v = d.rho(3)
    assert act(u * w, v) == act(u, act(w, v))
    assert qq.mat_vec(matrix_of(u), v) == act(u, v)


def test_action_examples(e6):
    mu = e6.rho(1)
    for i in (2, 3, 4, 5, 6):
        assert act(simple_reflection(e6, i), mu) == mu
    assert act(identity(e6), mu) == mu
    assert matrix_of(identity(e6)) == qq.identity_matrix(8)


def test_e6_matrix_first_row(e6):
    M = matrix_of(from_word(e6, E6_W2) * from_word(e6, E6_W1).inverse())
    assert M[0] == tuple(F(x, 4) for x in (-1, 3, -1, -1, -1, 1, 1, -1))


def test_bruhat_e6_e7_pairs(e6, e7):
    for d, w1w, w2w in ((e6, E6_W1, E6_W2), (e7, E7_W1, E7_W2)):
        w1, w2 = from_word(d, w1w), from_word(d, w2w)
        assert not bruhat_le(w2, w1)
        assert not bruhat_le(w2.inverse(), w1.inverse())
        assert bruhat_le(identity(d), w1)
        assert bruhat_le(w1, w1)


@pytest.mark.parametrize("label", ["A2", "C2"])
def test_bruhat_partial_order(label):
    d = get_root_datum(label)
    W = all_elements(d)
    le = {(u, w): bruhat_le(u, w) for u in W for w in W}
    for u, w in itertools.product(W, W):
        if le[u, w]:
            assert length(u) <= length(w)
            if le[w, u]:
                assert u == w
    for u, w, v in itertools.product(W, W, W):
        if le[u, w] and le[w, v]:
            assert le[u, v]


@pytest.mark.parametrize("label", ["A2", "A3", "B3", "C3"])
def test_bruhat_matches_oracle_and_inverse_symmetry(label):
    d = get_root_datum(label)
    above = bruhat_oracle(d)
    for u in above:
        for w in above:
            got = bruhat_le(u, w)
            assert got == (w in above[u])
            assert got == bruhat_le(u.inverse(), w.inverse())


def _all_reduced_words(w):
    if w.is_identity():
        return [()]
    d = w.datum
    out = []
    for i in range(1, d.rank + 1):
        if w.has_left_descent(i):
            rest = simple_reflection(d, i) * w
            out += [(i,) + r for r in _all_reduced_words(rest)]
    return out


def _greedy(u, word):
    v = u
    d = u.datum
    for i in word:
        if v.has_left_descent(i):
            v = simple_reflection(d, i) * v
    return v.is_identity()


@pytest.mark.parametrize("label", ["A2", "C2"])
def test_bruhat_independent_of_reduced_word(label):
    d = get_root_datum(label)
    W = all_elements(d)
    for w in W:
        rws = _all_reduced_words(w)
        assert all(from_word(d, r) == w and len(r) == length(w) for r in rws)
        for u in W:
            verdicts = {_greedy(u, r) for r in rws}
            assert verdicts == {bruhat_le(u, w)}


def test_min_coset_rep_examples(e6, e7):
    I6 = {2, 3, 4, 5, 6}
    assert min_coset_rep(from_word(e6, E6_W1), I6, "left") == from_word(e6, E6_W1)
    assert min_coset_rep(simple_reflection(e6, 2), I6, "left").is_identity()
    I7 = {1, 2, 3, 4, 5, 6}
    assert min_coset_rep(from_word(e7, E7_W1), I7, "left") == from_word(e7, E7_W1)
    assert min_coset_rep(from_word(e7, E7_W1).inverse(), I7, "right") == from_word(e7, E7_W1).inverse()
    with pytest.raises(ValueError):
        min_coset_rep(identity(e6), I6, "middle")


@pytest.mark.parametrize("label,I", [("A3", {1, 3}), ("B3", {2, 3}), ("D4", {1, 3, 4})])
def test_min_coset_rep_properties(label, I):
    d = get_root_datum(label)
    WI = set(parabolic_elements(d, I))
    for w in all_elements(d):
        m = min_coset_rep(w, I, "left")
        assert not any(m.has_right_descent(i) for i in I)
        h = m.inverse() * w
        assert h in WI and length(m) + length(h) == length(w)
        r = min_coset_rep(w, I, "right")
        assert not any(r.has_left_descent(i) for i in I)


@pytest.mark.parametrize("label", ["A3", "B3", "C3", "D4", "E6"])
def test_orbit_stabilizer(label):
    d = get_root_datum(label)
    for i in range(1, d.rank + 1):
        mu = d.rho(i)
        I = stabilizer_simple_indices(d, mu)
        assert len(orbit(d, mu)) * len(parabolic_elements(d, I)) == weyl_group_order(d)


def test_orbits_and_witnesses(e6, e7):
    o6 = orbit(e6, e6.rho(1))
    assert len(o6) == 27 and len(orbit(e7, e7.rho(7))) == 56
    p = tuple(F(-1, 2) for _ in range(5)) + (F(-1, 6), F(-1, 6), F(1, 6))
    assert p in o6
    for lam in o6:
        assert act(orbit_witness(e6, e6.rho(1), lam), e6.rho(1)) == lam
    assert orbit(e6, qq.zero(8)) == [qq.zero(8)]
    with pytest.raises(ValueError):
        orbit_witness(e6, e6.rho(1), qq.zero(8))
    assert stabilizer_simple_indices(e6, e6.rho(1)) == {2, 3, 4, 5, 6}
    assert stabilizer_simple_indices(e7, e7.rho(7)) == {1, 2, 3, 4, 5, 6}
    rho = qq.combo([1] * 6, e6.fundamental_coweights)
    assert stabilizer_simple_indices(e6, rho) == frozenset()

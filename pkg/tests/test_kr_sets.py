import random

import pytest

from admperm import qq
from admperm.affine_weyl import ExtAffElt, aff_from_word, finite, omega_rep, translation
from admperm.finite_weyl import act, all_elements, from_word, min_coset_rep, stabilizer_simple_indices
from admperm.kr_sets import (
    admissible_set,
    double_coset,
    haines_necessary,
    helam_pair,
    is_admissible_direct,
    is_admissible_helam,
    is_permissible,
    permissible_set,
)
from admperm.enumeration import adm_elements, build_context, to_ext_aff
from admperm.rootdata import get_root_datum

from .conftest import E6_W1, E6_W2, E7_W1, E7_W2


def _x(d, w2, w1, mu):
    return finite(from_word(d, w2)) * translation(d, mu) * finite(from_word(d, w1).inverse())


def test_e6_counterexample(e6):
    mu = e6.rho(1)
    x = _x(e6, E6_W2, E6_W1, mu)
    ok, cert = is_permissible(e6, mu, x)
    assert ok
    assert cert.vertices[0][1] == qq.vec(["-1/2", "1/2", "1/2", "1/2", "1/2", "-1/6", "-1/6", "1/6"])
    pair = helam_pair(e6, mu, x)
    assert pair.z1 == from_word(e6, E6_W1) and pair.z2 == from_word(e6, E6_W2)
    assert not pair.admissible and not pair.residue().is_identity()
    assert not is_admissible_direct(e6, mu, x)
    assert not haines_necessary(e6, mu, x)


def test_e7_counterexample(e7):
    mu = e7.rho(7)
    x = _x(e7, E7_W2, E7_W1, mu)
    ok, cert = is_permissible(e7, mu, x)
    assert ok
    assert cert.vertices[5][1] == qq.vec(["0", "0", "0", "1/2", "0", "1/2", "-1/2", "1/2"])
    assert not is_admissible_helam(e7, mu, x)
    assert not haines_necessary(e7, mu, x)


def test_translations(e6):
    mu = e6.rho(1)
    tmu = translation(e6, mu)
    ok, cert = is_permissible(e6, mu, tmu)
    assert ok and all(v == mu for _, v, _ in cert.vertices)
    pair = helam_pair(e6, mu, tmu)
    assert pair.z1.is_identity() and pair.z2.is_identity() and pair.admissible
    assert is_admissible_direct(e6, mu, tmu) and haines_necessary(e6, mu, tmu)
    I = stabilizer_simple_indices(e6, mu)
    rng = random.Random(3)
    for _ in range(10):
        w = min_coset_rep(from_word(e6, [rng.randint(1, 6) for _ in range(15)]), I, "left")
        x = translation(e6, act(w, mu))
        assert x == finite(w) * tmu * finite(w.inverse())
        p = helam_pair(e6, mu, x)
        assert p.z1 == w and p.z2 == w and p.admissible


def test_failures(e6):
    mu = e6.rho(1)
    ok, reason = is_permissible(e6, mu, translation(e6, qq.scale(2, mu)))
    assert not ok and "a_{7} = 0" in reason
    # x(0) = rho6 lies outside conv(W rho1)
    ok, reason = is_permissible(e6, mu, translation(e6, e6.rho(6)))
    assert not ok and "condition (ii)" in reason
    # W t_mu W membership is required for the pair
    with pytest.raises(ValueError):
        helam_pair(e6, mu, translation(e6, qq.zero(8)))


def test_condition_i_alone():
    # the identity moves no vertex, so (ii) holds, but 0 - mu is not in Q^vee
    d = get_root_datum("A1")
    mu = d.rho(1)
    ok, reason = is_permissible(d, mu, aff_from_word(d, []))
    assert not ok and reason.startswith("condition (i)")
    om = omega_rep(d, (qq.frac("1/2"),))
    assert is_permissible(d, mu, om)[0]


@pytest.mark.parametrize("label", ["A2", "A3", "C2"])
def test_criteria_agree_exhaustively(label):
    d = get_root_datum(label)
    for i in d.minuscule_indices:
        mu = d.rho(i)
        for x in double_coset(d, mu):
            assert is_admissible_helam(d, mu, x) == is_admissible_direct(d, mu, x)


@pytest.mark.parametrize("label", ["A2", "A3", "C2", "C3", "B3"])
def test_containment_and_haines_small(label):
    d = get_root_datum(label)
    for i in d.minuscule_indices:
        mu = d.rho(i)
        adm = admissible_set(d, mu)
        assert adm == permissible_set(d, mu)
        for x in adm:
            assert is_permissible(d, mu, x)[0]
            assert haines_necessary(d, mu, x)


def test_rank_one_brute_force():
    """Every element of affine A1 near the identity, tested directly."""
    d = get_root_datum("A1")
    mu = d.rho(1)
    om = omega_rep(d, (qq.frac("1/2"),))
    found = set()
    for n in range(7):
        for word in {tuple((k + j) % 2 for j in range(n)) for k in range(2)}:
            x = aff_from_word(d, word) * om
            if is_admissible_direct(d, mu, x):
                found.add(x)
    assert found == admissible_set(d, mu) and len(found) == 3


@pytest.mark.slow
def test_haines_on_sampled_e6_admissible(e6):
    mu = e6.rho(1)
    ctx = build_context(e6, mu)
    elts = adm_elements(ctx)
    rng = random.Random(11)
    for a, b in rng.sample(elts, 1000):
        x = to_ext_aff(ctx, a, b)
        assert haines_necessary(e6, mu, x)


def test_double_coset_shape():
    d = get_root_datum("A2")
    mu = d.rho(1)
    dc = double_coset(d, mu)
    assert len(dc) == 3 * 6 and len(set(dc)) == len(dc)
    assert all(isinstance(x, ExtAffElt) for x in dc)
    assert len(all_elements(d)) == 6

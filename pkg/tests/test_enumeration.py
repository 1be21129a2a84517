import json
import random

import numpy as np
import pytest

from admperm import qq
from admperm.enumeration import (
    EnumOptions,
    adm_elements,
    build_context,
    dominant_omega,
    enumerate_adm,
    enumerate_both,
    enumerate_perm,
    hull_mask,
    omega_int,
    perm_elements,
    to_ext_aff,
)
from admperm.finite_weyl import orbit
from admperm.kr_sets import admissible_set, is_permissible, permissible_set
from admperm.rootdata import dominant_representative, get_root_datum, in_hull


@pytest.mark.parametrize("label,i,count", [("A1", 1, 3), ("A2", 1, 7), ("A3", 2, 33), ("C2", 2, 13), ("B3", 1, 47), ("D4", 4, 115)])
def test_small_counts(label, i, count):
    d = get_root_datum(label)
    a = enumerate_adm(d, d.rho(i))
    p = enumerate_perm(d, d.rho(i))
    assert a.cardinality == p.cardinality == count


@pytest.mark.parametrize("label", ["A3", "C3", "D4"])
def test_elements_match_exact_sets(label):
    d = get_root_datum(label)
    for i in d.minuscule_indices:
        mu = d.rho(i)
        ctx = build_context(d, mu)
        assert {to_ext_aff(ctx, a, b) for a, b in adm_elements(ctx)} == admissible_set(d, mu)
        assert {to_ext_aff(ctx, a, b) for a, b in perm_elements(ctx)} == permissible_set(d, mu)


def test_zero_coweight():
    d = get_root_datum("A2")
    assert enumerate_adm(d, qq.zero(3)).cardinality == 1
    rep = enumerate_both(d, qq.zero(3))
    assert rep.perm.cardinality == 1 and rep.difference == 0


def test_rejects_non_dominant():
    d = get_root_datum("A2")
    with pytest.raises(ValueError):
        enumerate_adm(d, qq.neg(d.rho(1)))


@pytest.mark.parametrize("label", ["A3", "E6"])
def test_vectorized_hull_agrees_with_exact(label):
    d = get_root_datum(label)
    mu = d.rho(d.minuscule_indices[0])
    rng = random.Random(5)
    vecs = [qq.combo([qq.frac(rng.randint(-12, 12)) / 6 for _ in range(d.rank)], d.fundamental_coweights) for _ in range(400)]
    vecs += orbit(d, mu)
    om = np.array([omega_int(d, qq.scale(6, v)) for v in vecs], dtype=np.int64)
    mask = hull_mask(d, om, 6 * np.array(omega_int(d, mu), dtype=np.int64))
    for v, m in zip(vecs, mask):
        assert bool(m) == (in_hull(d, v, mu) is not None)
    dom = dominant_omega(d, om)
    for v, row in zip(vecs[:50], dom):
        assert tuple(row) == omega_int(d, qq.scale(6, dominant_representative(d, v)[0]))


def test_e6_perm_matches_is_permissible_on_samples(e6):
    """The tabulated test agrees with the exact one, including on all Perm minus Adm."""
    mu = e6.rho(1)
    ctx = build_context(e6, mu)
    perm = set(perm_elements(ctx))
    rng = random.Random(2)
    sample = [(rng.randrange(27), rng.randrange(ctx.index.order)) for _ in range(300)]
    sample += rng.sample(sorted(perm), 100)
    for a, b in sample:
        assert ((a, b) in perm) == is_permissible(e6, mu, to_ext_aff(ctx, a, b))[0]
    rep = enumerate_both(e6, mu, list_difference=True)
    assert len(rep.extras) == 144
    for e in rep.extras[:20]:
        from admperm.serialize import elt_from_json

        assert is_permissible(e6, mu, elt_from_json(e6, e))[0]


def test_workers_are_deterministic():
    d = get_root_datum("D4")
    mu = d.rho(1)
    counts = set()
    for w in (1, 2, 3):
        rep = enumerate_both(d, mu, EnumOptions(workers=w))
        counts.add((rep.adm.cardinality, rep.perm.cardinality, rep.subset))
    assert counts == {(115, 115, True)}


def test_interval_cache(tmp_path):
    d = get_root_datum("B3")
    mu = d.rho(1)
    opts = EnumOptions(cache_dir=str(tmp_path))
    first = enumerate_adm(d, mu, opts)
    files = list(tmp_path.glob("adm_counts_*.json"))
    assert len(files) == 1
    doc = json.loads(files[0].read_text())
    assert sum(doc["counts"].values()) == first.cardinality == 47
    doc["counts"] = {k: 0 for k in doc["counts"]}
    files[0].write_text(json.dumps(doc))
    # the cached counts are trusted as written
    assert enumerate_adm(d, mu, opts).cardinality == 0


def test_stream(tmp_path):
    d = get_root_datum("A3")
    mu = d.rho(2)
    out = tmp_path / "adm.jsonl"
    rep = enumerate_adm(d, mu, EnumOptions(stream=str(out)))
    lines = [json.loads(s) for s in out.read_text().splitlines()]
    assert len(lines) == rep.cardinality == 33
    assert all(set(e) == {"lambda", "word"} for e in lines)

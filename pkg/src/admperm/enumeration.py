"""Counting Adm(mu) and Perm(mu) over a whole indexed Weyl group.

Both counts use integer arithmetic on "omega coordinates" (pairings with
the simple roots), which is exact.

Admissible set: writing x = z2 t_mu z1^-1 with z1 a
minimal coset representative, |Adm(mu)| = sum over z1 of the size of the
lower Bruhat interval [e, z1].  The interval is the set of subword products
of a reduced word of z1, built one letter at a time with the right
multiplication table.

Permissible set: for minuscule mu the candidates are t_lam w with lam in
W.mu.  The vertex condition at a_i only depends on the pair (w(a_i), lam),
so it is tabulated once per vertex over (orbit of a_i) x (W.mu) and then
looked up for every w.
"""

from __future__ import annotations

import json
import logging
import multiprocessing as mp
import os
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import asdict, dataclass, field
from fractions import Fraction
from pathlib import Path

import numpy as np

from . import qq
from .finite_weyl import from_word, min_coset_rep, orbit_with_words, stabilizer_simple_indices
from .group_index import DEFAULT_BUDGET, GroupIndex, get_group_index
from .qq import Vec
from .rootdata import RootDatum, in_coroot_lattice, is_dominant, is_minuscule

log = logging.getLogger(__name__)

CACHE_VERSION = 1


@dataclass
class EnumOptions:
    workers: int = 1
    budget: int | None = DEFAULT_BUDGET
    cache_dir: str | None = None
    stream: str | None = None  # JSON-lines output path for the elements


@dataclass
class EnumReport:
    type_label: str
    mu: list
    kind: str
    cardinality: int
    wall_time: float
    workers: int
    stream: str | None = None
    extra: dict = field(default_factory=dict)

    def to_json(self) -> dict:
        return asdict(self)


def mu_label(datum: RootDatum, mu: Vec) -> str:
    for i, rho in enumerate(datum.fundamental_coweights, start=1):
        if rho == tuple(mu):
            return f"rho{i}"
    return "mu_" + "_".join(f"{a.numerator}o{a.denominator}" for a in mu)


# -- vectorized geometry in omega coordinates -------------------------------

def _cartan(datum: RootDatum) -> np.ndarray:
    return np.array(datum.cartan, dtype=np.int64)


def _adjugate(datum: RootDatum):
    """(adj, det) with adj = det * A^-1 for A[j][k] = <alpha_j, alpha_k^vee>."""
    A = [[Fraction(x) for x in row] for row in datum.cartan]
    inv = qq.mat_inverse(A)
    det = 1
    for row in inv:
        for x in row:
            det = det * x.denominator // np.gcd(det, x.denominator)
    adj = np.array([[int(x * det) for x in row] for row in inv], dtype=np.int64)
    return adj, det


def dominant_omega(datum: RootDatum, vecs: np.ndarray) -> np.ndarray:
    """Dominant representatives, smallest-index descent, all rows at once."""
    cT = _cartan(datum).T
    c = np.array(vecs, dtype=np.int64, copy=True)
    active = np.nonzero((c < 0).any(axis=1))[0]
    while active.size:
        sub = c[active]
        i = (sub < 0).argmax(axis=1)
        ci = sub[np.arange(len(sub)), i]
        sub = sub - ci[:, None] * cT[i]
        c[active] = sub
        active = active[(sub < 0).any(axis=1)]
    return c


def hull_mask(datum: RootDatum, vecs: np.ndarray, bound: np.ndarray) -> np.ndarray:
    """Rows v (omega coordinates, integers) with v in conv(W.bound)."""
    adj, _ = _adjugate(datum)
    plus = dominant_omega(datum, vecs)
    diff = np.asarray(bound, dtype=np.int64)[None, :] - plus
    return (diff @ adj.T >= 0).all(axis=1)


def omega_int(datum: RootDatum, v: Vec) -> tuple:
    om = datum.omega_coords(v)
    if not qq.is_integral(om):
        raise ValueError(f"{qq.fmt_vec(v)} has non-integral pairings with the simple roots")
    return tuple(int(x) for x in om)


def orbit_table(datum: RootDatum, start: tuple):
    """Orbit of an integral omega vector: (points K x l, action table K x l)."""
    cT = [list(r) for r in zip(*datum.cartan)]
    l = datum.rank
    pts = [tuple(start)]
    where = {pts[0]: 0}
    k = 0
    while k < len(pts):
        p = pts[k]
        for i in range(l):
            if p[i]:
                q = tuple(p[j] - p[i] * cT[i][j] for j in range(l))
                if q not in where:
                    where[q] = len(pts)
                    pts.append(q)
        k += 1
    act = np.empty((len(pts), l), dtype=np.int32)
    for k, p in enumerate(pts):
        for i in range(l):
            q = tuple(p[j] - p[i] * cT[i][j] for j in range(l)) if p[i] else p
            act[k, i] = where[q]
    return np.array(pts, dtype=np.int64), act


def orbit_positions(index: GroupIndex, act: np.ndarray) -> np.ndarray:
    """pos[w] = orbit index of w(p0), with p0 at position 0."""
    pos = np.empty(index.order, dtype=np.int32)
    pos[0] = 0
    for k in range(1, len(index.layer_starts) - 1):
        sl = index.layer(k)
        pos[sl] = act[pos[index.parent[sl]], index.gen[sl]]
    return pos


# -- shared context for workers ----------------------------------------------

@dataclass
class _Context:
    datum: RootDatum
    mu: Vec
    index: GroupIndex
    lam_pts: np.ndarray  # K x l omega coordinates of W.mu
    lam_pos: np.ndarray  # orbit position of w(mu) for every w
    vertex_pos: list  # per vertex i: position of w(rho_i) in its orbit
    vertex_good: list  # per vertex i: bool (orbit size x K)
    z1_ids: list
    z1_words: list


_CTX: _Context | None = None


def _vertex_tables(datum: RootDatum, index: GroupIndex, lam_pts: np.ndarray, mu_om: np.ndarray):
    pos_list, good_list = [], []
    l = datum.rank
    for i in range(l):
        n_i = datum.marks[i]
        e_i = tuple(int(j == i) for j in range(l))
        pts, act = orbit_table(datum, e_i)
        # n_i * (w(a_i) - a_i + lam) = w(rho_i) - rho_i + n_i * lam
        cand = (pts - np.array(e_i))[:, None, :] + n_i * lam_pts[None, :, :]
        good = hull_mask(datum, cand.reshape(-1, l), n_i * mu_om).reshape(len(pts), len(lam_pts))
        pos_list.append(orbit_positions(index, act))
        good_list.append(good)
    return pos_list, good_list


def build_context(datum: RootDatum, mu: Vec, options: EnumOptions | None = None, need_vertices: bool = True) -> _Context:
    options = options or EnumOptions()
    if not is_dominant(datum, mu):
        raise ValueError("mu must be dominant")
    index = get_group_index(datum, with_tables=True, budget=options.budget, cache_dir=options.cache_dir)
    mu_om = np.array(omega_int(datum, mu), dtype=np.int64)
    lam_pts, lam_act = orbit_table(datum, tuple(mu_om))
    lam_pos = orbit_positions(index, lam_act)
    for p in lam_pts:
        lam = qq.combo([Fraction(int(c)) for c in p], datum.fundamental_coweights)
        if not in_coroot_lattice(datum, qq.sub(lam, mu)):
            raise AssertionError("orbit point outside mu + Q(R^vee)")
    vpos, vgood = _vertex_tables(datum, index, lam_pts, mu_om) if need_vertices else ([], [])
    I = stabilizer_simple_indices(datum, mu)
    z1_ids = []
    for lam, word in orbit_with_words(datum, mu):
        z1 = min_coset_rep(from_word(datum, word), I, "left")
        z1_ids.append(index.id_of(z1))
    z1_words = [index.word(i) for i in z1_ids]
    return _Context(datum, qq.vec(mu), index, lam_pts, lam_pos, vpos, vgood, z1_ids, z1_words)


def lower_interval_mask(index: GroupIndex, word) -> np.ndarray:
    """Boolean mask over the first prefix(len(word)) ids: the interval [e, s_word]."""
    P = index.prefix(len(word))
    mask = np.zeros(P, dtype=bool)
    mask[0] = True
    for i in word:
        tgt = index.rtab[:P, i - 1]
        inside = tgt < P
        mask |= inside & mask[np.where(inside, tgt, 0)]
    return mask


def _perm_ok(ctx: _Context, lam_idx: np.ndarray, wid: np.ndarray) -> np.ndarray:
    ok = np.ones(len(wid), dtype=bool)
    for pos, good in zip(ctx.vertex_pos, ctx.vertex_good):
        ok &= good[pos[wid], lam_idx]
    return ok


def _adm_task(k: int, with_elements: bool):
    ctx = _CTX
    idx = ctx.index
    word = ctx.z1_words[k]
    mask = lower_interval_mask(idx, word)
    z2 = np.nonzero(mask)[0]
    out = {"k": k, "count": int(len(z2))}
    if with_elements:
        lam_idx = ctx.lam_pos[z2]
        wid = idx.right_mul_word(z2, word[::-1])
        out["lam_idx"] = lam_idx.astype(np.int32)
        out["wid"] = wid.astype(np.int32)
        if ctx.vertex_good:
            out["perm_ok"] = bool(_perm_ok(ctx, lam_idx, wid).all())
    return out


def _perm_task(k: int, with_elements: bool):
    ctx = _CTX
    n = ctx.index.order
    wid = np.arange(n)
    ok = _perm_ok(ctx, np.full(n, k), wid)
    out = {"k": k, "count": int(ok.sum())}
    if with_elements:
        out["wid"] = np.nonzero(ok)[0].astype(np.int32)
    return out


def _run(tasks, fn, workers: int, with_elements: bool):
    if workers <= 1:
        results = [fn(k, with_elements) for k in tasks]
    else:
        ctx = mp.get_context("fork")
        with ProcessPoolExecutor(max_workers=workers, mp_context=ctx) as ex:
            results = list(ex.map(fn, tasks, [with_elements] * len(tasks)))
    return sorted(results, key=lambda r: r["k"])


def _lam_vector(ctx: _Context, k: int) -> Vec:
    return qq.combo([Fraction(int(c)) for c in ctx.lam_pts[k]], ctx.datum.fundamental_coweights)


def element_json(ctx: _Context, lam_idx: int, wid: int) -> dict:
    return {"lambda": qq.fmt_vec(_lam_vector(ctx, int(lam_idx))), "word": list(ctx.index.word(int(wid)))}


def _write_stream(path, ctx: _Context, pairs) -> None:
    path = Path(path)
    path.parent.mkdir(parents=True, exist_ok=True)
    with open(path, "w") as fh:
        for lam_idx, wid in pairs:
            fh.write(json.dumps(element_json(ctx, lam_idx, wid)) + "\n")


def _counts_cache_file(ctx: _Context, cache_dir) -> Path | None:
    cache_dir = cache_dir or os.environ.get("ADMPERM_CACHE")
    if not cache_dir:
        return None
    return Path(cache_dir) / f"adm_counts_{ctx.datum.type_label}_{mu_label(ctx.datum, ctx.mu)}_v{CACHE_VERSION}.json"


def _load_counts(path: Path | None) -> dict:
    if path is None or not path.exists():
        return {}
    doc = json.loads(path.read_text())
    if doc.get("format") != CACHE_VERSION:
        return {}
    return doc.get("counts", {})


def _save_counts(path: Path | None, ctx: _Context, counts: dict) -> None:
    if path is None:
        return
    path.parent.mkdir(parents=True, exist_ok=True)
    doc = {"format": CACHE_VERSION, "type": ctx.datum.type_label, "mu": qq.fmt_vec(ctx.mu), "counts": counts}
    tmp = path.with_name(path.name + ".tmp")
    tmp.write_text(json.dumps(doc, indent=1, sort_keys=True))
    tmp.replace(path)


def _trivial(datum: RootDatum, mu: Vec) -> bool:
    return not any(mu)


def _check_mu(datum: RootDatum, mu: Vec) -> None:
    if not is_dominant(datum, mu):
        raise ValueError(f"{qq.fmt_vec(mu)} is not dominant")
    if not is_minuscule(datum, mu):
        log.warning("mu = %s is not minuscule; the permissible count uses W.mu translations only", qq.fmt_vec(mu))


def enumerate_adm(datum: RootDatum, mu: Vec, options: EnumOptions | None = None, ctx: _Context | None = None) -> EnumReport:
    global _CTX
    options = options or EnumOptions()
    mu = qq.vec(mu)
    _check_mu(datum, mu)
    t0 = time.perf_counter()
    if _trivial(datum, mu):
        if options.stream:
            Path(options.stream).write_text(json.dumps({"lambda": qq.fmt_vec(mu), "word": []}) + "\n")
        return EnumReport(datum.type_label, qq.fmt_vec(mu), "adm", 1, time.perf_counter() - t0, options.workers, options.stream)
    ctx = ctx or build_context(datum, mu, options, need_vertices=False)
    cache = _counts_cache_file(ctx, options.cache_dir)
    counts = _load_counts(cache)
    keys = [",".join(map(str, w)) for w in ctx.z1_words]
    with_elements = bool(options.stream)
    if not with_elements and all(k in counts for k in keys):
        total = sum(counts[k] for k in keys)
    else:
        _CTX = ctx
        results = _run(list(range(len(ctx.z1_ids))), _adm_task, options.workers, with_elements)
        for r in results:
            log.info("adm %s: z1 %d/%d (length %d): %d", datum.type_label, r["k"] + 1, len(results),
                     len(ctx.z1_words[r["k"]]), r["count"])
            counts[keys[r["k"]]] = r["count"]
        _save_counts(cache, ctx, counts)
        total = sum(r["count"] for r in results)
        if with_elements:
            _write_stream(options.stream, ctx, ((a, b) for r in results for a, b in zip(r["lam_idx"], r["wid"])))
    return EnumReport(datum.type_label, qq.fmt_vec(mu), "adm", int(total), time.perf_counter() - t0, options.workers, options.stream)


def enumerate_perm(datum: RootDatum, mu: Vec, options: EnumOptions | None = None, ctx: _Context | None = None) -> EnumReport:
    global _CTX
    options = options or EnumOptions()
    mu = qq.vec(mu)
    _check_mu(datum, mu)
    t0 = time.perf_counter()
    if _trivial(datum, mu):
        if options.stream:
            Path(options.stream).write_text(json.dumps({"lambda": qq.fmt_vec(mu), "word": []}) + "\n")
        return EnumReport(datum.type_label, qq.fmt_vec(mu), "perm", 1, time.perf_counter() - t0, options.workers, options.stream)
    ctx = ctx or build_context(datum, mu, options)
    _CTX = ctx
    with_elements = bool(options.stream)
    results = _run(list(range(len(ctx.lam_pts))), _perm_task, options.workers, with_elements)
    for r in results:
        log.info("perm %s: lambda %d/%d: %d", datum.type_label, r["k"] + 1, len(results), r["count"])
    total = sum(r["count"] for r in results)
    if with_elements:
        _write_stream(options.stream, ctx, ((r["k"], w) for r in results for w in r["wid"]))
    return EnumReport(datum.type_label, qq.fmt_vec(mu), "perm", int(total), time.perf_counter() - t0, options.workers, options.stream)


@dataclass
class BothReport:
    adm: EnumReport
    perm: EnumReport
    subset: bool
    distinct: bool
    difference: int
    extras: list = field(default_factory=list)  # Perm \ Adm as element dicts, when requested

    def to_json(self) -> dict:
        return {
            "adm": self.adm.to_json(),
            "perm": self.perm.to_json(),
            "subset": self.subset,
            "adm_elements_distinct": self.distinct,
            "difference": self.difference,
            "perm_minus_adm": self.extras,
        }


def enumerate_both(datum: RootDatum, mu: Vec, options: EnumOptions | None = None, list_difference: bool = False) -> BothReport:
    """Both counts plus the containment Adm(mu) in Perm(mu), checked element by element."""
    global _CTX
    options = options or EnumOptions()
    mu = qq.vec(mu)
    _check_mu(datum, mu)
    if _trivial(datum, mu):
        a = enumerate_adm(datum, mu, options)
        p = enumerate_perm(datum, mu, options)
        return BothReport(a, p, True, True, 0, [])
    t0 = time.perf_counter()
    ctx = build_context(datum, mu, options)
    _CTX = ctx
    results = _run(list(range(len(ctx.z1_ids))), _adm_task, options.workers, True)
    adm_total = sum(r["count"] for r in results)
    subset = all(r["perm_ok"] for r in results)
    n = ctx.index.order
    adm_keys = np.concatenate([r["lam_idx"].astype(np.int64) * n + r["wid"] for r in results])
    adm_keys.sort()
    distinct = bool(len(adm_keys) == 0 or (np.diff(adm_keys) > 0).all())
    t_adm = time.perf_counter() - t0
    for r in results:
        log.info("adm %s: z1 %d/%d: %d", datum.type_label, r["k"] + 1, len(results), r["count"])
    if options.stream:
        _write_stream(options.stream + ".adm.jsonl", ctx, ((a, b) for r in results for a, b in zip(r["lam_idx"], r["wid"])))
    del results

    t1 = time.perf_counter()
    want = list_difference or bool(options.stream)
    presults = _run(list(range(len(ctx.lam_pts))), _perm_task, options.workers, want)
    perm_total = sum(r["count"] for r in presults)
    extras = []
    if want:
        perm_pairs = [(r["k"], w) for r in presults for w in r["wid"]]
        if options.stream:
            _write_stream(options.stream + ".perm.jsonl", ctx, perm_pairs)
        if list_difference:
            keys = np.array([k * n + int(w) for k, w in perm_pairs], dtype=np.int64)
            missing = np.setdiff1d(keys, adm_keys, assume_unique=True)
            extras = [element_json(ctx, int(m // n), int(m % n)) for m in missing]
    t_perm = time.perf_counter() - t1
    a = EnumReport(datum.type_label, qq.fmt_vec(mu), "adm", int(adm_total), t_adm, options.workers)
    p = EnumReport(datum.type_label, qq.fmt_vec(mu), "perm", int(perm_total), t_perm, options.workers)
    return BothReport(a, p, subset, distinct, int(perm_total - adm_total), extras)


def adm_elements(ctx: _Context) -> list:
    """All (lam_idx, wid) pairs of Adm(mu) for a built context."""
    global _CTX
    _CTX = ctx
    results = _run(list(range(len(ctx.z1_ids))), _adm_task, 1, True)
    return [(int(a), int(b)) for r in results for a, b in zip(r["lam_idx"], r["wid"])]


def perm_elements(ctx: _Context) -> list:
    global _CTX
    _CTX = ctx
    results = _run(list(range(len(ctx.lam_pts))), _perm_task, 1, True)
    return [(r["k"], int(w)) for r in results for w in r["wid"]]


def to_ext_aff(ctx: _Context, lam_idx: int, wid: int):
    from .affine_weyl import ExtAffElt

    return ExtAffElt(_lam_vector(ctx, lam_idx), ctx.index.element(wid))

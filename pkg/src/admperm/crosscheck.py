"""Independent oracles for the core algorithms.

Each suite recomputes a fact by a different, slower route and compares.
Results are deterministic; timings are kept out of the comparison data.
"""

from __future__ import annotations

import itertools
import logging
import math
import random
import time
from dataclasses import dataclass, field
from fractions import Fraction

from . import qq
from .affine_weyl import aff_identity, aff_simple, im_length
from .enumeration import adm_elements, build_context, perm_elements, to_ext_aff
from .finite_weyl import all_elements, bruhat_le, orbit, reflection
from .kr_sets import admissible_set, double_coset, helam_pair, is_admissible_direct, permissible_set
from .rootdata import get_root_datum, in_hull

log = logging.getLogger(__name__)

MAX_RANK = 4
MINUSCULE_TYPES = ("A1", "A2", "A3", "A4", "C2", "C3", "B3", "D4")


@dataclass
class SuiteResult:
    name: str
    passed: bool = True
    cases: int = 0
    failure: str | None = None
    seconds: float = 0.0
    notes: list = field(default_factory=list)

    def fail(self, msg: str) -> None:
        if self.passed:
            self.passed, self.failure = False, msg

    def to_json(self) -> dict:
        return {"name": self.name, "passed": self.passed, "cases": self.cases, "failure": self.failure, "notes": self.notes}


# -- (a) Bruhat order versus the closure of reflection covers ------------------

def bruhat_oracle(datum) -> dict:
    """u -> {w : u <= w}, from the relation u < u t whenever l(u t) > l(u)."""
    W = all_elements(datum)
    refl = [reflection(datum, k) for k in range(datum.npos)]
    up = {u: [u * t for t in refl if (u * t).length() > u.length()] for u in W}
    above = {}
    for u in sorted(W, key=lambda w: -w.length()):
        s = {u}
        for v in up[u]:
            s |= above[v]
        above[u] = frozenset(s)
    return above


def suite_bruhat(types) -> SuiteResult:
    res = SuiteResult("bruhat order = reflection-cover closure")
    for t in types:
        d = get_root_datum(t)
        above = bruhat_oracle(d)
        W = list(above)
        for u, w in itertools.product(W, W):
            res.cases += 1
            if bruhat_le(u, w) != (w in above[u]):
                res.fail(f"{t}: u={list(u.reduced_word())} w={list(w.reduced_word())}")
                return res
    return res


# -- (b) dominance test versus facet inequalities ------------------------------

def _nullspace_vector(rows):
    """A nonzero vector orthogonal to every row, or None if the rows have full rank."""
    m = [list(r) for r in rows]
    n = len(m[0])
    pivots = []
    r = 0
    for c in range(n):
        p = next((i for i in range(r, len(m)) if m[i][c] != 0), None)
        if p is None:
            continue
        m[r], m[p] = m[p], m[r]
        inv = 1 / m[r][c]
        m[r] = [x * inv for x in m[r]]
        for i in range(len(m)):
            if i != r and m[i][c] != 0:
                f = m[i][c]
                m[i] = [a - f * b for a, b in zip(m[i], m[r])]
        pivots.append(c)
        r += 1
    free = [c for c in range(n) if c not in pivots]
    if len(free) != 1:
        return None
    f = free[0]
    v = [Fraction(0)] * n
    v[f] = Fraction(1)
    for i, c in enumerate(pivots):
        v[c] = -m[i][f]
    return v


def facets(points):
    """Inequalities (normal, offset), normal . p <= offset, of the hull of full-dimensional points."""
    dim = len(points[0])
    out = set()
    for sub in itertools.combinations(points, dim):
        base = sub[0]
        n = _nullspace_vector([qq.sub(p, base) for p in sub[1:]]) if dim > 1 else [Fraction(1)]
        if n is None:
            continue
        b = qq.dot(n, base)
        vals = [qq.dot(n, p) for p in points]
        if all(v <= b for v in vals):
            out.add((tuple(n), b))
        elif all(v >= b for v in vals):
            out.add((tuple(-x for x in n), -b))
    return out


def suite_hull(types, samples: int = 1000, seed: int = 20240521) -> SuiteResult:
    res = SuiteResult("hull dominance test = facet inequalities")
    rng = random.Random(seed)
    for t in types:
        d = get_root_datum(t)
        for i in range(1, d.rank + 1):
            mu = d.rho(i)
            pts = [d.coroot_coords(p) for p in orbit(d, mu)]
            ineqs = facets(pts)
            box = math.ceil(max(abs(x) for p in pts for x in p)) + 1
            grid = []
            for _ in range(samples):
                grid.append(tuple(Fraction(rng.randint(-6 * box, 6 * box), 6) for _ in range(d.rank)))
            grid += pts + [qq.scale(Fraction(1, 2), qq.add(p, q)) for p, q in itertools.combinations(pts, 2)]
            for c in grid:
                v = qq.combo(c, d.simple_coroots)
                want = all(qq.dot(n, c) <= b for n, b in ineqs)
                res.cases += 1
                if (in_hull(d, v, mu) is not None) != want:
                    res.fail(f"{t} rho{i}: point {qq.fmt_vec(c)} (coroot coordinates)")
                    return res
            res.notes.append(f"{t} rho{i}: {len(ineqs)} facets")
    return res


# -- (c) pair criterion versus direct search ------------------------------------

def suite_criterion(types) -> SuiteResult:
    res = SuiteResult("pair criterion = direct Bruhat search")
    for t in types:
        d = get_root_datum(t)
        for i in d.minuscule_indices:
            mu = d.rho(i)
            for x in double_coset(d, mu):
                res.cases += 1
                if helam_pair(d, mu, x).admissible != is_admissible_direct(d, mu, x):
                    res.fail(f"{t} rho{i}: {x!r}")
                    return res
    return res


# -- (d) Iwahori-Matsumoto length versus Cayley graph distance -----------------

def suite_length(types, radius: int = 8) -> SuiteResult:
    res = SuiteResult(f"IM length = Cayley distance up to {radius}")
    for t in types:
        d = get_root_datum(t)
        gens = [aff_simple(d, j) for j in range(d.rank + 1)]
        e = aff_identity(d)
        dist = {e: 0}
        frontier = [e]
        for k in range(1, radius + 1):
            nxt = []
            for x in frontier:
                for s in gens:
                    y = x * s
                    if y not in dist:
                        dist[y] = k
                        nxt.append(y)
            frontier = nxt
        for x, k in dist.items():
            res.cases += 1
            if im_length(x) != k:
                res.fail(f"{t}: {x!r} has IM length {im_length(x)}, distance {k}")
                return res
        res.notes.append(f"{t}: {len(dist)} elements")
    return res


# -- (e) lattice points of the hull ----------------------------------------------

def suite_lattice(types) -> SuiteResult:
    """Points of conv(W.mu) in mu + Q^vee are exactly W.mu, mu minuscule."""
    res = SuiteResult("hull points in mu + Q^vee = W.mu")
    for t in types:
        d = get_root_datum(t)
        for i in d.minuscule_indices:
            mu = d.rho(i)
            orb = set(orbit(d, mu))
            mu_c = d.coroot_coords(mu)
            spread = [d.coroot_coords(p) for p in orb]
            lo = [int(min(p[j] - mu_c[j] for p in spread)) - 1 for j in range(d.rank)]
            hi = [int(max(p[j] - mu_c[j] for p in spread)) + 1 for j in range(d.rank)]
            for c in itertools.product(*[range(a, b + 1) for a, b in zip(lo, hi)]):
                lam = qq.add(mu, qq.combo(c, d.simple_coroots))
                res.cases += 1
                if (in_hull(d, lam, mu) is not None) != (lam in orb):
                    res.fail(f"{t} rho{i}: {qq.fmt_vec(lam)}")
                    return res
    return res


# -- (f) Adm = Perm in classical types, and fast = exact -------------------------

def suite_classical(types) -> SuiteResult:
    res = SuiteResult("Adm = Perm (classical, minuscule) and indexed enumeration = exact sets")
    for t in types:
        d = get_root_datum(t)
        for i in d.minuscule_indices:
            mu = d.rho(i)
            adm, perm = admissible_set(d, mu), permissible_set(d, mu)
            ctx = build_context(d, mu)
            fast_adm = {to_ext_aff(ctx, a, b) for a, b in adm_elements(ctx)}
            fast_perm = {to_ext_aff(ctx, a, b) for a, b in perm_elements(ctx)}
            res.cases += 1
            if adm != perm:
                res.fail(f"{t} rho{i}: |Adm| = {len(adm)}, |Perm| = {len(perm)}")
                return res
            if fast_adm != adm or fast_perm != perm:
                res.fail(f"{t} rho{i}: indexed enumeration disagrees with the exact sets")
                return res
            res.notes.append(f"{t} rho{i}: {len(adm)}")
    return res


def run_crosscheck(max_rank: int = 3) -> list:
    """Run every suite; max_rank bounds the exhaustive pairwise suites (a)-(d).

    The lattice and classical-equality suites always cover their fixed lists
    up to rank 4, which are cheap.
    """
    if not 1 <= max_rank <= MAX_RANK:
        raise ValueError(f"max_rank must be between 1 and {MAX_RANK}")

    def upto(types):
        return [t for t in types if get_root_datum(t).rank <= max_rank]

    plan = [
        (suite_bruhat, (upto(["A2", "A3", "B3", "C3"]),)),
        (suite_hull, (upto(["A2", "A3", "C2"]),)),
        (suite_criterion, (upto(["A2", "A3", "C2"]),)),
        (suite_length, (upto(["A2", "C2"]),)),
        (suite_lattice, (list(MINUSCULE_TYPES),)),
        (suite_classical, (list(MINUSCULE_TYPES),)),
    ]
    out = []
    for fn, args in plan:
        t0 = time.perf_counter()
        r = fn(*args)
        r.seconds = time.perf_counter() - t0
        log.info("%s: %s (%d cases, %.1fs)", r.name, "ok" if r.passed else "FAILED", r.cases, r.seconds)
        out.append(r)
    return out

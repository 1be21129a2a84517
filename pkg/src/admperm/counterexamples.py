"""The E6 and E7 elements that are mu-permissible but not mu-admissible.

``verify_counterexample`` rebuilds x = w2 t_mu w1^-1 from the published
words and compares every intermediate object with the published data:
orbit, matrix of w2 w1^-1, alcove vertices and their displacements,
convex-combination witnesses, and the affine reduced words.  Sub-check
failures are collected in the report, never raised.
"""

from __future__ import annotations

import time
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import product

from . import qq
from .affine_weyl import aff_from_word, finite, omega_class, translation, wa_part
from .finite_weyl import act, bruhat_le, from_word, matrix_of, min_coset_rep, orbit, stabilizer_simple_indices
from .kr_sets import haines_necessary, helam_pair, is_admissible_direct, is_permissible
from .rootdata import alcove_vertices, get_root_datum, is_dominant, is_minuscule
from .serialize import certificate

F = Fraction
h, q, t, s6, t3 = F(1, 2), F(1, 4), F(1, 3), F(1, 6), F(2, 3)


def _v(*xs):
    return tuple(F(x) for x in xs)


def _e6_orbit() -> set:
    pts = {_v(0, 0, 0, 0, 0, -t3, -t3, t3)}
    for d in product((0, 1), repeat=5):
        if sum(d) % 2 == 0:
            pts.add(tuple(-h * (-1) ** k for k in d) + _v(-s6, -s6, s6))
    for i in range(5):
        for sgn in (1, -1):
            p = [F(0)] * 5
            p[i] = F(sgn)
            pts.add(tuple(p) + _v(t, t, -t))
    return pts


def _e7_orbit() -> set:
    pts = set()
    for i in range(6):
        for a, b in product((1, -1), repeat=2):
            p = [F(0)] * 8
            p[7], p[6] = a * h, -a * h
            p[i] = F(b)
            pts.add(tuple(p))
    for d in product((0, 1), repeat=6):
        if sum(d) % 2 == 0:
            pts.add(tuple(h * (-1) ** k for k in d) + _v(0, 0))
    return pts


def _tail6(*xs):
    return _v(*xs) + _v(-s6, -s6, s6)


E7_MU = _v(0, 0, 0, 0, 0, 1, -h, h)


def _e7p(*xs):
    return _v(*xs)


CASES = {
    "e6": dict(
        type="E6",
        mu_index=1,
        w1=(2, 4, 5, 6, 3, 4, 5, 2, 4, 3, 1),
        w2=(4, 5, 6, 2, 4, 5),
        I=(2, 3, 4, 5, 6),
        orbit_size=27,
        orbit=_e6_orbit,
        finite_word=(4, 5, 6, 2, 4, 5, 1, 3, 4, 2, 5, 4, 3, 6, 5, 4, 2),
        M=(
            (-1, 3, -1, -1, -1, 1, 1, -1),
            (-3, 1, 1, 1, 1, -1, -1, 1),
            (1, 1, 1, 1, -3, -1, -1, 1),
            (1, 1, 1, -3, 1, -1, -1, 1),
            (1, 1, -3, 1, 1, -1, -1, 1),
            (1, 1, 1, 1, 1, 3, -1, 1),
            (1, 1, 1, 1, 1, -1, 3, 1),
            (-1, -1, -1, -1, -1, 1, 1, 3),
        ),
        vertices=(
            _v(0, 0, 0, 0, 0, -t3, -t3, t3),
            _v(q, q, q, q, q, -q, -q, q),
            _v(-q, q, q, q, q, F(-5, 12), F(-5, 12), F(5, 12)),
            _v(0, 0, t, t, t, -t, -t, t),
            _v(0, 0, 0, h, h, -t, -t, t),
            _v(0, 0, 0, 0, 1, -t, -t, t),
            _v(0, 0, 0, 0, 0, 0, 0, 0),
        ),
        displacements=(
            _tail6(-h, h, h, h, h),
            _tail6(-h, 0, 0, 0, 0),
            _tail6(0, h, 0, 0, 0),
            _tail6(-h, h, -s6, -s6, -s6),
            _tail6(-h, h, 0, -h, 0),
            _tail6(-h, h, -h, h, -h),
            _v(0, 0, 0, 0, 0, -t3, -t3, t3),
        ),
        combinations=(
            ((1, _tail6(-h, h, h, h, h)),),
            ((h, _tail6(-h, h, h, h, h)), (h, _tail6(-h, -h, -h, -h, -h))),
            ((h, _tail6(-h, h, h, h, h)), (h, _tail6(h, h, -h, -h, -h))),
            ((t, _tail6(-h, h, -h, -h, h)), (t, _tail6(-h, h, -h, h, -h)), (t, _tail6(-h, h, h, -h, -h))),
            ((h, _tail6(-h, h, -h, -h, h)), (h, _tail6(-h, h, h, -h, -h))),
            ((1, _tail6(-h, h, -h, h, -h)),),
            ((1, _v(0, 0, 0, 0, 0, -t3, -t3, t3)),),
        ),
        y1=(0, 2, 4, 3, 5, 4, 2, 0, 6, 5, 4, 2, 3, 4, 5, 6),
        y_prime=(2, 4, 3, 5, 4, 2, 0, 6, 5, 4, 2, 3, 1, 4, 5, 6),
    ),
    "e7": dict(
        type="E7",
        mu_index=7,
        w1=(2, 4, 5, 3, 4, 1, 3, 2, 4, 5, 6, 7),
        w2=(4, 3, 2, 4, 1, 3),
        I=(1, 2, 3, 4, 5, 6),
        orbit_size=56,
        orbit=_e7_orbit,
        finite_word=(4, 3, 2, 4, 1, 3, 7, 6, 5, 4, 2, 3, 1, 4, 3, 5, 4, 2),
        M=(
            (-1, 1, -1, 3, 1, 1, 1, -1),
            (1, -1, -3, 1, -1, -1, -1, 1),
            (3, 1, -1, -1, 1, 1, 1, -1),
            (1, -1, 1, 1, 3, -1, -1, 1),
            (1, -1, 1, 1, -1, 3, -1, 1),
            (-1, -3, -1, -1, 1, 1, 1, -1),
            (1, -1, 1, 1, -1, -1, 3, 1),
            (-1, 1, -1, -1, 1, 1, 1, 3),
        ),
        vertices=(
            _v(0, 0, 0, 0, 0, 0, -h, h),
            _v(q, q, q, q, q, q, -h, h),
            _v(-s6, s6, s6, s6, s6, s6, -h, h),
            _v(0, 0, q, q, q, q, -h, h),
            _v(0, 0, 0, t, t, t, -h, h),
            _v(0, 0, 0, 0, h, h, -h, h),
            E7_MU,
            _v(0, 0, 0, 0, 0, 0, 0, 0),
        ),
        displacements=(
            _v(-q, q, -q, q, q, 3 * q, -q, q),
            _v(-q, -q, -q, q, q, q, -q, q),
            _v(s6, -s6, -h, s6, s6, h, -t, t),
            _v(0, 0, -h, q, q, h, -q, q),
            _v(s6, s6, -s6, s6, s6, h, -t, t),
            _v(0, 0, 0, h, 0, h, -h, h),
            _v(0, 0, 0, 0, 1, 0, -h, h),
            E7_MU,
        ),
        combinations=(
            ((h, _v(-h, h, -h, h, h, h, 0, 0)), (h, E7_MU)),
            ((h, _v(-h, -h, -h, h, h, -h, 0, 0)), (h, E7_MU)),
            ((t, _v(h, -h, -h, h, h, h, 0, 0)), (t, _v(0, 0, -1, 0, 0, 0, -h, h)), (t, E7_MU)),
            ((q, _v(-h, h, -h, h, h, h, 0, 0)), (q, _v(h, -h, -h, h, h, h, 0, 0)),
             (q, _v(0, 0, -1, 0, 0, 0, -h, h)), (q, E7_MU)),
            ((t, _v(h, h, -h, h, -h, h, 0, 0)), (t, _v(0, 0, 0, 0, 1, 0, -h, h)), (t, E7_MU)),
            ((h, _v(0, 0, 0, 1, 0, 0, -h, h)), (h, E7_MU)),
            ((1, _v(0, 0, 0, 0, 1, 0, -h, h)),),
            ((1, E7_MU),),
        ),
        y1=(0, 1, 3, 4, 2, 5, 4, 3, 1, 0, 6, 5, 4, 2, 3, 1, 4, 3, 5, 4, 2, 6, 5, 4, 3, 1, 0),
        y_prime=(2, 4, 3, 1, 0, 5, 4, 2, 3, 1, 4, 3, 5, 4, 2, 6, 5, 4, 3, 1, 0, 7, 6, 5, 4, 3, 1),
    ),
}


@dataclass
class SubCheck:
    name: str
    passed: bool
    detail: str = ""


@dataclass
class VerifyReport:
    case: str
    checks: list = field(default_factory=list)
    verdicts: dict = field(default_factory=dict)
    certificate: dict | None = None
    wall_time: float = 0.0

    @property
    def passed(self) -> bool:
        return all(c.passed for c in self.checks)

    def add(self, name: str, passed: bool, detail: str = "") -> None:
        self.checks.append(SubCheck(name, bool(passed), detail))

    def failed(self) -> list:
        return [c for c in self.checks if not c.passed]

    def to_json(self) -> dict:
        return {
            "case": self.case,
            "passed": self.passed,
            "checks": [{"name": c.name, "passed": c.passed, "detail": c.detail} for c in self.checks],
            "verdicts": self.verdicts,
            "certificate": self.certificate,
            "wall_time": self.wall_time,
        }


def verify_counterexample(case: str, w2_word=None, w1_word=None) -> VerifyReport:
    """Rebuild the published counterexample and check it piece by piece.

    ``w2_word``/``w1_word`` replace the published words; the comparisons
    against published data are kept, which is what makes this usable as a
    negative control.
    """
    key = case.lower()
    if key not in CASES:
        raise ValueError(f"unknown case {case!r}; expected one of {sorted(CASES)}")
    c = CASES[key]
    t0 = time.perf_counter()
    rep = VerifyReport(key)
    d = get_root_datum(c["type"])
    mu = d.rho(c["mu_index"])
    w1 = from_word(d, c["w1"] if w1_word is None else w1_word)
    w2 = from_word(d, c["w2"] if w2_word is None else w2_word)
    tmu = translation(d, mu)
    x = finite(w2) * tmu * finite(w1.inverse())

    rep.add("mu dominant minuscule", is_dominant(d, mu) and is_minuscule(d, mu))
    orb = orbit(d, mu)
    rep.add("orbit size", len(orb) == c["orbit_size"], f"{len(orb)} points")
    rep.add("orbit matches published list", set(orb) == c["orbit"]())
    I = stabilizer_simple_indices(d, mu)
    rep.add("I(mu)", I == frozenset(c["I"]), f"{sorted(I)}")

    u = w2 * w1.inverse()
    rep.add("x = t_mu w2 w1^-1 with published finite word", x.lam == mu and x.w == from_word(d, c["finite_word"]))
    M = matrix_of(u)
    expected = tuple(tuple(F(a, 4) for a in row) for row in c["M"])
    rep.add("matrix of w2 w1^-1", M == expected)

    verts = alcove_vertices(d)
    rep.add("alcove vertices", tuple(verts) == c["vertices"])
    disp = [qq.sub(x(a), a) for a in verts]
    via_matrix = [qq.sub(qq.add(qq.mat_vec(M, a), mu), a) for a in verts]
    rep.add("vertex displacements via matrix", disp == via_matrix)
    for i, (got, want) in enumerate(zip(disp, c["displacements"]), start=1):
        rep.add(f"x(a_{i}) - a_{i}", got == want, " ".join(qq.fmt_vec(got)))
    orbit_set = set(orb)
    for i, (combo_, want) in enumerate(zip(c["combinations"], c["displacements"]), start=1):
        weights = [w for w, _ in combo_]
        ok = sum(weights) == 1 and all(p in orbit_set for _, p in combo_) and qq.combo(weights, [p for _, p in combo_]) == want
        rep.add(f"published convex combination for vertex {i}", ok)

    perm_ok, perm_cert = is_permissible(d, mu, x)
    rep.add("x is mu-permissible", perm_ok, "" if perm_ok else str(perm_cert))

    rep.add("w1 minimal in w1 W_I(mu)", min_coset_rep(w1, I, "left") == w1)
    rep.add("w1^-1 minimal in W_I(mu) w1^-1", min_coset_rep(w1.inverse(), I, "right") == w1.inverse())
    le = bruhat_le(w2, w1)
    rep.add("w2 not <= w1", not le)
    rep.add("w2^-1 not <= w1^-1", not bruhat_le(w2.inverse(), w1.inverse()))
    pair = helam_pair(d, mu, x)
    rep.add("canonical pair is (w1, w2)", pair.z1 == w1 and pair.z2 == w2)
    rep.add("not admissible (pair criterion)", not pair.admissible)
    direct = is_admissible_direct(d, mu, x)
    rep.add("not admissible (x <= t_lam search)", not direct)

    y1 = wa_part(tmu)
    rep.add("W_a part of t_mu has published reduced word", aff_from_word(d, c["y1"]) == y1)
    yp = wa_part(translation(d, act(w1, mu)))
    rep.add("W_a part of t_w1(mu) has published reduced word", aff_from_word(d, c["y_prime"]) == yp)
    y2 = finite(w2 * w1.inverse()) * aff_from_word(d, c["y_prime"])
    rep.add("y2 is the W_a part of x", wa_part(x) == y2 and omega_class(x) == omega_class(tmu))
    hn = haines_necessary(d, mu, x)
    rep.add("x not <= t_x(0)", not hn)

    rep.verdicts = {"permissible": perm_ok, "admissible": pair.admissible, "admissible_direct": direct, "haines": hn}
    rep.certificate = certificate(d, mu, x, case=key)
    rep.wall_time = time.perf_counter() - t0
    return rep

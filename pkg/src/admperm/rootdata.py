"""Root data in explicit (Bourbaki-style) coordinates.

Characters and cocharacters live in the same ambient R^n; the pairing is
the standard dot product.  ``X_*`` is always the coweight lattice
``P(R^vee)`` and ``X^*`` the root lattice ``Q(R)``, so the fundamental
coweights form a basis of the cocharacter lattice.
"""

from __future__ import annotations

import itertools
import json
import re
from dataclasses import dataclass, field
from fractions import Fraction
from functools import cached_property

from . import qq
from .qq import Vec

SUPPORTED = ("A1", "A2", "A3", "A4", "B3", "C2", "C3", "D4", "E6", "E7")

_HALF = Fraction(1, 2)


def normalize_label(label: str) -> str:
    m = re.fullmatch(r"\s*([A-Ea-e])_?(\d+)\s*", str(label))
    if not m:
        raise ValueError(f"unsupported root datum type: {label!r}")
    lab = m.group(1).upper() + m.group(2)
    if lab not in SUPPORTED:
        raise ValueError(f"unsupported root datum type: {label!r} (supported: {', '.join(SUPPORTED)})")
    return lab


@dataclass(frozen=True, eq=False)
class RootDatum:
    """Immutable realization of (X^*, X_*, R, R^vee) with a chosen base.

    ``roots`` lists the positive roots first (sorted by height, then
    coordinates) followed by the negatives in the same order, so root ``k``
    and root ``k + npos`` are negatives of each other.
    """

    type_label: str
    ambient_dim: int
    roots: tuple
    coroots: tuple
    base: tuple  # indices of alpha_1..alpha_l in ``roots``
    marks: tuple
    fundamental_coweights: tuple
    fundamental_weights: tuple
    root_coeffs: tuple  # coefficients of each root in the simple roots
    cartan: tuple  # cartan[i][j] = <alpha_i, alpha_j^vee>
    index: dict = field(repr=False)
    simple_perms: tuple = field(repr=False)  # s_i as a permutation of root indices

    @property
    def rank(self) -> int:
        return len(self.base)

    @property
    def npos(self) -> int:
        return len(self.roots) // 2

    @property
    def simple_roots(self) -> tuple:
        return tuple(self.roots[k] for k in self.base)

    @property
    def simple_coroots(self) -> tuple:
        return tuple(self.coroots[k] for k in self.base)

    @property
    def highest_root(self) -> Vec:
        return self.roots[self.npos - 1]

    @property
    def highest_coroot(self) -> Vec:
        return self.coroots[self.npos - 1]

    @property
    def coroot_lattice_basis(self) -> tuple:
        return self.simple_coroots

    @property
    def cochar_lattice_basis(self) -> tuple:
        return self.fundamental_coweights

    def is_positive(self, k: int) -> bool:
        return k < self.npos

    def negate(self, k: int) -> int:
        return k + self.npos if k < self.npos else k - self.npos

    def height(self, k: int) -> int:
        return sum(self.root_coeffs[k])

    @cached_property
    def minuscule_indices(self) -> tuple:
        """Indices i (1-based) whose fundamental coweight is minuscule."""
        return tuple(i + 1 for i, n in enumerate(self.marks) if n == 1)

    def rho(self, i: int) -> Vec:
        """Fundamental coweight rho_i, 1-based."""
        if not 1 <= i <= self.rank:
            raise ValueError(f"rho index {i} out of range 1..{self.rank}")
        return self.fundamental_coweights[i - 1]

    def coroot_coords(self, v: Vec) -> Vec:
        """Coefficients of ``v`` in the simple coroots (v assumed in V)."""
        return tuple(qq.dot(w, v) for w in self.fundamental_weights)

    def in_span(self, v: Vec) -> bool:
        if len(v) != self.ambient_dim:
            return False
        return qq.combo(self.coroot_coords(v), self.simple_coroots) == tuple(v)

    def check_vector(self, v: Vec) -> Vec:
        v = qq.vec(v)
        if len(v) != self.ambient_dim:
            raise ValueError(f"expected {self.ambient_dim} coordinates, got {len(v)}")
        if not self.in_span(v):
            raise ValueError(f"vector {qq.fmt_vec(v)} does not lie in the coweight space of {self.type_label}")
        return v

    def omega_coords(self, v: Vec) -> tuple:
        """Pairings <alpha_i, v> with the simple roots."""
        return tuple(qq.dot(a, v) for a in self.simple_roots)

    def __repr__(self) -> str:
        return f"RootDatum({self.type_label}, rank={self.rank}, roots={len(self.roots)})"


def _coroot(alpha: Vec) -> Vec:
    return qq.scale(Fraction(2) / qq.dot(alpha, alpha), alpha)


def _e(n: int, *terms) -> Vec:
    v = [Fraction(0)] * n
    for c, i in terms:
        v[i - 1] += Fraction(c)
    return tuple(v)


def _pm_pairs(n: int, dims: range) -> list:
    roots = []
    for i, j in itertools.combinations(dims, 2):
        for a, b in itertools.product((1, -1), repeat=2):
            roots.append(_e(n, (a, i), (b, j)))
    return roots


def _raw_system(label: str):
    """Return (ambient_dim, all roots, simple roots) for a supported label."""
    kind, l = label[0], int(label[1:])
    if kind == "A":
        n = l + 1
        roots = [_e(n, (1, i), (-1, j)) for i in range(1, n + 1) for j in range(1, n + 1) if i != j]
        base = [_e(n, (1, i), (-1, i + 1)) for i in range(1, l + 1)]
        return n, roots, base
    if kind == "B":
        n = l
        roots = _pm_pairs(n, range(1, n + 1)) + [_e(n, (s, i)) for i in range(1, n + 1) for s in (1, -1)]
        base = [_e(n, (1, i), (-1, i + 1)) for i in range(1, l)] + [_e(n, (1, l))]
        return n, roots, base
    if kind == "C":
        n = l
        roots = _pm_pairs(n, range(1, n + 1)) + [_e(n, (2 * s, i)) for i in range(1, n + 1) for s in (1, -1)]
        base = [_e(n, (1, i), (-1, i + 1)) for i in range(1, l)] + [_e(n, (2, l))]
        return n, roots, base
    if kind == "D":
        n = l
        roots = _pm_pairs(n, range(1, n + 1))
        base = [_e(n, (1, i), (-1, i + 1)) for i in range(1, l)] + [_e(n, (1, l - 1), (1, l))]
        return n, roots, base
    if label == "E6":
        n = 8
        roots = _pm_pairs(n, range(1, 6))
        for signs in itertools.product((0, 1), repeat=5):
            if sum(signs) % 2:
                continue
            v = _e(n, (_HALF, 8), (-_HALF, 7), (-_HALF, 6), *[((-1) ** d * _HALF, i + 1) for i, d in enumerate(signs)])
            roots += [v, qq.neg(v)]
        a1 = _e(n, (_HALF, 1), (_HALF, 8), *[(-_HALF, i) for i in range(2, 8)])
        base = [a1, _e(n, (1, 1), (1, 2)), _e(n, (-1, 1), (1, 2)), _e(n, (-1, 2), (1, 3)),
                _e(n, (-1, 3), (1, 4)), _e(n, (-1, 4), (1, 5))]
        return n, roots, base
    if label == "E7":
        n = 8
        roots = _pm_pairs(n, range(1, 7)) + [_e(n, (1, 7), (-1, 8)), _e(n, (-1, 7), (1, 8))]
        for signs in itertools.product((0, 1), repeat=6):
            if sum(signs) % 2 == 0:
                continue
            v = _e(n, (_HALF, 7), (-_HALF, 8), *[((-1) ** d * _HALF, i + 1) for i, d in enumerate(signs)])
            roots += [v, qq.neg(v)]
        a1 = _e(n, (_HALF, 1), (_HALF, 8), *[(-_HALF, i) for i in range(2, 8)])
        base = [a1, _e(n, (1, 1), (1, 2))] + [_e(n, (-1, i - 1), (1, i)) for i in range(2, 7)]
        return n, roots, base
    raise ValueError(f"unsupported root datum type: {label!r}")


def build_root_datum(type_label: str) -> RootDatum:
    label = normalize_label(type_label)
    n, raw, simple = _raw_system(label)
    if len(set(raw)) != len(raw):
        raise AssertionError("duplicate roots in construction")
    l = len(simple)

    coeffs = {}
    for r in raw:
        c = qq.solve(simple, r)
        if c is None or not qq.is_integral(c):
            raise AssertionError(f"root {r} is not an integral combination of the base")
        if not (all(x >= 0 for x in c) or all(x <= 0 for x in c)):
            raise AssertionError(f"root {r} is neither positive nor negative")
        coeffs[r] = tuple(int(x) for x in c)

    pos = sorted((r for r in raw if sum(coeffs[r]) > 0), key=lambda r: (sum(coeffs[r]), r))
    roots = tuple(pos) + tuple(qq.neg(r) for r in pos)
    if set(roots) != set(raw):
        raise AssertionError("root list is not closed under negation")
    coroots = tuple(_coroot(r) for r in roots)
    index = {r: k for k, r in enumerate(roots)}
    base = tuple(index[s] for s in simple)
    root_coeffs = tuple(coeffs[r] for r in roots)
    marks = root_coeffs[len(pos) - 1]

    simple_coroots = [coroots[k] for k in base]
    cartan = tuple(tuple(int(qq.dot(simple[i], simple_coroots[j])) for j in range(l)) for i in range(l))

    # rho_j in span(coroots) with <alpha_i, rho_j> = delta_ij
    pair_cols = [tuple(qq.dot(simple[i], simple_coroots[k]) for i in range(l)) for k in range(l)]
    fcw = tuple(qq.combo(qq.solve(pair_cols, qq.unit(l, j)), simple_coroots) for j in range(l))
    wt_cols = [tuple(qq.dot(simple[k], simple_coroots[i]) for i in range(l)) for k in range(l)]
    fw = tuple(qq.combo(qq.solve(wt_cols, qq.unit(l, j)), simple) for j in range(l))

    perms = []
    for i in range(l):
        a, av = simple[i], simple_coroots[i]
        perms.append(tuple(index[qq.sub(r, qq.scale(qq.dot(r, av), a))] for r in roots))

    datum = RootDatum(
        type_label=label,
        ambient_dim=n,
        roots=roots,
        coroots=coroots,
        base=base,
        marks=tuple(marks),
        fundamental_coweights=fcw,
        fundamental_weights=fw,
        root_coeffs=root_coeffs,
        cartan=cartan,
        index=index,
        simple_perms=tuple(perms),
    )
    _validate(datum)
    return datum


def _validate(d: RootDatum) -> None:
    for a, av in zip(d.roots, d.coroots):
        assert qq.dot(a, av) == 2
    for i, a in enumerate(d.simple_roots):
        for j, rho in enumerate(d.fundamental_coweights):
            assert qq.dot(a, rho) == (1 if i == j else 0)
    assert qq.combo(d.marks, d.simple_roots) == d.highest_root


_DATUM_CACHE: dict = {}


def get_root_datum(type_label: str) -> RootDatum:
    """Memoized :func:`build_root_datum`."""
    label = normalize_label(type_label)
    if label not in _DATUM_CACHE:
        _DATUM_CACHE[label] = build_root_datum(label)
    return _DATUM_CACHE[label]


def pairing(datum: RootDatum, char: Vec, cochar: Vec) -> Fraction:
    if len(char) != datum.ambient_dim or len(cochar) != datum.ambient_dim:
        raise ValueError(f"dimension mismatch for {datum.type_label}: expected {datum.ambient_dim}")
    return qq.dot(char, cochar)


def alcove_vertices(datum: RootDatum) -> list:
    """a_i = rho_i / n_i for i = 1..l, followed by a_{l+1} = 0."""
    verts = [qq.scale(Fraction(1, n), rho) for n, rho in zip(datum.marks, datum.fundamental_coweights)]
    verts.append(qq.zero(datum.ambient_dim))
    return verts


def is_integral_coweight(datum: RootDatum, v: Vec) -> bool:
    """True iff v lies in X_* = P(R^vee)."""
    return datum.in_span(v) and qq.is_integral(datum.omega_coords(v))


def is_dominant(datum: RootDatum, v: Vec) -> bool:
    return all(c >= 0 for c in datum.omega_coords(v))


def is_minuscule(datum: RootDatum, mu: Vec) -> bool:
    return all(qq.dot(a, mu) in (-1, 0, 1) for a in datum.roots)


def reflect(datum: RootDatum, i: int, v: Vec) -> Vec:
    """Simple reflection s_i (1-based) applied to a cocharacter-side vector."""
    a = datum.roots[datum.base[i - 1]]
    av = datum.coroots[datum.base[i - 1]]
    c = qq.dot(a, v)
    return qq.sub(v, qq.scale(c, av)) if c else v


def _dominance_word(datum: RootDatum, v: Vec) -> tuple:
    applied = []
    while True:
        for i, a in enumerate(datum.simple_roots, start=1):
            if qq.dot(a, v) < 0:
                v = reflect(datum, i, v)
                applied.append(i)
                break
        else:
            return v, applied


def dominant_representative(datum: RootDatum, v: Vec):
    """Return (v_plus, w) with v_plus = w(v) dominant.

    Uses the smallest-index descent rule, so ``w`` is deterministic.
    """
    from .finite_weyl import from_word

    v_plus, applied = _dominance_word(datum, qq.vec(v))
    return v_plus, from_word(datum, applied[::-1])


@dataclass(frozen=True)
class DominanceCertificate:
    """Evidence that ``vector`` lies in the convex hull of W.mu.

    ``word`` is a word for w with w(vector) = v_plus, and
    mu - v_plus = sum_i coefficients[i] * alpha_i^vee with all coefficients >= 0.
    """

    vector: Vec
    v_plus: Vec
    word: tuple
    coefficients: tuple

    def to_json(self) -> dict:
        return {
            "vector": qq.fmt_vec(self.vector),
            "dominant_rep": qq.fmt_vec(self.v_plus),
            "word": list(self.word),
            "coefficients": qq.fmt_vec(self.coefficients),
        }


def in_hull(datum: RootDatum, v: Vec, mu: Vec) -> DominanceCertificate | None:
    """Membership of v in P_mu = conv(W.mu) for dominant mu.

    v lies in P_mu iff mu - v_plus is a nonnegative combination of simple
    coroots, where v_plus is the dominant representative of v.
    """
    v = qq.vec(v)
    if not datum.in_span(v):
        raise ValueError(f"vector {qq.fmt_vec(v)} is outside the span of the coroots")
    v_plus, applied = _dominance_word(datum, v)
    coeffs = datum.coroot_coords(qq.sub(mu, v_plus))
    if any(c < 0 for c in coeffs):
        return None
    return DominanceCertificate(v, v_plus, tuple(applied[::-1]), coeffs)


def in_coroot_lattice(datum: RootDatum, v: Vec) -> bool:
    v = qq.vec(v)
    return datum.in_span(v) and qq.is_integral(datum.coroot_coords(v))


def resolve_coweight(datum: RootDatum, spec) -> Vec:
    """Turn 'rho3', an int index, or a list of rationals into a coweight."""
    if isinstance(spec, str):
        m = re.fullmatch(r"\s*rho_?(\d+)\s*", spec)
        if m:
            return datum.rho(int(m.group(1)))
        if spec.strip() in ("0", "zero"):
            return qq.zero(datum.ambient_dim)
        spec = [s for s in re.split(r"[,\s]+", spec.strip().strip("[]")) if s]
    if isinstance(spec, int):
        return datum.rho(spec)
    v = datum.check_vector(qq.vec(spec))
    if not is_integral_coweight(datum, v):
        raise ValueError(f"{qq.fmt_vec(v)} is not in the coweight lattice")
    return v


def datum_to_json(datum: RootDatum) -> dict:
    return {
        "type": datum.type_label,
        "ambient_dim": datum.ambient_dim,
        "roots": [qq.fmt_vec(r) for r in datum.roots],
        "coroots": [qq.fmt_vec(r) for r in datum.coroots],
        "base": list(datum.base),
        "marks": list(datum.marks),
        "fundamental_coweights": [qq.fmt_vec(r) for r in datum.fundamental_coweights],
    }


def dump_datum(datum: RootDatum) -> str:
    return json.dumps(datum_to_json(datum), indent=1)

"""Membership in Adm(mu) and Perm(mu), with certificates.

Every function here works one element at a time in exact arithmetic.  The
bulk counting lives in :mod:`admperm.enumeration`.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from . import qq
from .affine_weyl import ExtAffElt, aff_bruhat_le, finite, translation
from .finite_weyl import (
    WeylElt,
    all_elements,
    bruhat_le,
    min_coset_rep,
    orbit_with_words,
    from_word,
    stabilizer_simple_indices,
)
from .qq import Vec
from .rootdata import RootDatum, alcove_vertices, in_hull


@dataclass(frozen=True)
class PermCertificate:
    """Vertex-by-vertex evidence that x is mu-permissible."""

    vertices: tuple  # (a_i, x(a_i) - a_i, DominanceCertificate)
    lattice_coeffs: tuple  # x(0) - mu in the simple coroots, all integers


@dataclass(frozen=True)
class HeLamPair:
    z1: WeylElt
    z2: WeylElt
    admissible: bool
    trace: tuple = field(default=())

    def residue(self) -> WeylElt:
        """What is left of z2 after the greedy walk along z1."""
        d = self.z2.datum
        v = self.z2
        for i, hit in self.trace:
            if hit:
                v = from_word(d, [i]) * v
        return v


def is_permissible(datum: RootDatum, mu: Vec, x: ExtAffElt):
    """Return (True, PermCertificate) or (False, reason).

    The origin is tested first: x(0) = lam must lie in conv(W.mu) before
    anything else is worth computing.
    """
    verts = alcove_vertices(datum)
    n = len(verts)
    entries = [None] * n
    for i in [n - 1] + list(range(n - 1)):
        a = verts[i]
        v = qq.sub(x(a), a)
        if not datum.in_span(v):
            return False, f"condition (ii) fails at vertex a_{i + 1}: x(a) - a = {qq.fmt_vec(v)} leaves the span of the coroots"
        cert = in_hull(datum, v, mu)
        if cert is None:
            where = "a_{%d} = 0" % n if i == n - 1 else f"a_{i + 1}"
            return False, f"condition (ii) fails at vertex {where}: x(a) - a = {qq.fmt_vec(v)}"
        entries[i] = (a, v, cert)
    diff = qq.sub(x.lam, mu)
    coeffs = datum.coroot_coords(diff)
    if not datum.in_span(diff) or not qq.is_integral(coeffs):
        return False, "condition (i): x(0) - mu is not in the coroot lattice"
    return True, PermCertificate(tuple(entries), tuple(int(c) for c in coeffs))


def _orbit_words(datum: RootDatum, mu: Vec) -> dict:
    return {p: word for p, word in orbit_with_words(datum, mu)}


def helam_pair(datum: RootDatum, mu: Vec, x: ExtAffElt, orbit_words: dict | None = None) -> HeLamPair:
    """Canonical (z1, z2) with x = z2 t_mu z1^-1 and z1 in W^{I(mu)}."""
    words = orbit_words if orbit_words is not None else _orbit_words(datum, mu)
    if x.lam not in words:
        raise ValueError(f"x is not in W t_mu W: translation part {qq.fmt_vec(x.lam)} is not in W.mu")
    u = from_word(datum, words[x.lam])
    I = stabilizer_simple_indices(datum, mu)
    z1 = min_coset_rep(x.w.inverse() * u, I, "left")
    z2 = x.w * z1
    assert finite(z2) * translation(datum, mu) * finite(z1.inverse()) == x
    trace = []
    ok = bruhat_le(z2, z1, trace)
    return HeLamPair(z1, z2, ok, tuple(trace))


def is_admissible_helam(datum: RootDatum, mu: Vec, x: ExtAffElt) -> bool:
    return helam_pair(datum, mu, x).admissible


def is_admissible_direct(datum: RootDatum, mu: Vec, x: ExtAffElt) -> bool:
    """x <= t_lam in the extended Bruhat order for some lam in W.mu."""
    return any(aff_bruhat_le(x, translation(datum, lam)) for lam, _ in orbit_with_words(datum, mu))


def haines_necessary(datum: RootDatum, mu: Vec, x: ExtAffElt) -> bool:
    """x <= t_{x(0)}; every admissible element satisfies this."""
    return aff_bruhat_le(x, translation(datum, x.lam))


def admissible_set(datum: RootDatum, mu: Vec) -> set:
    """Adm(mu) element by element from the pair parametrization.  Small ranks only."""
    I = stabilizer_simple_indices(datum, mu)
    W = all_elements(datum)
    tmu = translation(datum, mu)
    reps = {min_coset_rep(from_word(datum, w), I, "left") for _, w in orbit_with_words(datum, mu)}
    out = set()
    for z1 in reps:
        for z2 in W:
            if bruhat_le(z2, z1):
                out.add(finite(z2) * tmu * finite(z1.inverse()))
    return out


def permissible_set(datum: RootDatum, mu: Vec) -> set:
    """Perm(mu) by testing every t_lam w with lam in W.mu.  Small ranks only."""
    W = all_elements(datum)
    out = set()
    for lam, _ in orbit_with_words(datum, mu):
        for w in W:
            x = ExtAffElt(lam, w)
            if is_permissible(datum, mu, x)[0]:
                out.add(x)
    return out


def double_coset(datum: RootDatum, mu: Vec) -> list:
    """All of W t_mu W, as t_lam w with lam in W.mu."""
    W = all_elements(datum)
    return [ExtAffElt(lam, w) for lam, _ in orbit_with_words(datum, mu) for w in W]



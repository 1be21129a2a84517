"""Extended affine Weyl group X_* x| W.

An element t_lam * w acts on V by p -> w(p) + lam.  Lengths follow the
Iwahori-Matsumoto formula relative to the base alcove in the dominant
chamber, and the Omega-component is read off in X_*/Q(R^vee).
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Iterable

from . import qq
from .finite_weyl import (
    WeylElt,
    act,
    from_word,
    identity,
    longest_element,
    reflection,
    stabilizer_simple_indices,
)
from .qq import Vec
from .rootdata import RootDatum, is_integral_coweight


@dataclass(frozen=True)
class ExtAffElt:
    """t_lam * w."""

    lam: Vec
    w: WeylElt

    @property
    def datum(self) -> RootDatum:
        return self.w.datum

    def __mul__(self, other: "ExtAffElt") -> "ExtAffElt":
        if not isinstance(other, ExtAffElt):
            return NotImplemented
        return ExtAffElt(qq.add(self.lam, act(self.w, other.lam)), self.w * other.w)

    def inverse(self) -> "ExtAffElt":
        winv = self.w.inverse()
        return ExtAffElt(qq.neg(act(winv, self.lam)), winv)

    def __call__(self, p: Vec) -> Vec:
        return qq.add(act(self.w, p), self.lam)

    def __repr__(self) -> str:
        return f"ExtAffElt(lam={qq.fmt_vec(self.lam)}, word={list(self.w.reduced_word())})"


def aff_make(datum: RootDatum, lam: Vec, w: WeylElt | None = None) -> ExtAffElt:
    lam = qq.vec(lam)
    if not is_integral_coweight(datum, lam):
        raise ValueError(f"translation {qq.fmt_vec(lam)} is not in X_*")
    return ExtAffElt(lam, identity(datum) if w is None else w)


def translation(datum: RootDatum, lam: Vec) -> ExtAffElt:
    return aff_make(datum, lam)


def finite(w: WeylElt) -> ExtAffElt:
    return ExtAffElt(qq.zero(w.datum.ambient_dim), w)


def aff_mul(x: ExtAffElt, y: ExtAffElt) -> ExtAffElt:
    return x * y


def aff_inv(x: ExtAffElt) -> ExtAffElt:
    return x.inverse()


def aff_act(x: ExtAffElt, p: Vec) -> Vec:
    return x(p)


def aff_identity(datum: RootDatum) -> ExtAffElt:
    return finite(identity(datum))


def is_identity(x: ExtAffElt) -> bool:
    return not any(x.lam) and x.w.is_identity()


def im_length(x: ExtAffElt) -> int:
    """Iwahori-Matsumoto length of t_lam w.

    sum over alpha > 0 of |<alpha, lam>| if w^-1 alpha > 0, else |<alpha, lam> - 1|.
    """
    d = x.datum
    om = [int(c) for c in d.omega_coords(x.lam)]
    winv = x.w.inverse().perm
    npos = d.npos
    total = 0
    for k in range(npos):
        c = sum(a * b for a, b in zip(d.root_coeffs[k], om))
        if winv[k] >= npos:
            c -= 1
        total += abs(c)
    return int(total)


@lru_cache(maxsize=None)
def aff_simple(datum: RootDatum, j: int) -> ExtAffElt:
    """Affine simple reflection s_j, j = 0..l; s_0 = t_{highest coroot} s_{highest root}."""
    if not 0 <= j <= datum.rank:
        raise ValueError(f"affine simple reflection index {j} out of range 0..{datum.rank}")
    if j == 0:
        return ExtAffElt(datum.highest_coroot, reflection(datum, datum.npos - 1))
    return finite(from_word(datum, [j]))


def aff_from_word(datum: RootDatum, word: Iterable[int], omega: ExtAffElt | None = None) -> ExtAffElt:
    x = aff_identity(datum)
    for j in word:
        x = x * aff_simple(datum, int(j))
    return x if omega is None else x * omega


def omega_class(x: ExtAffElt) -> tuple:
    """Class of x in X_*/Q(R^vee), as coroot coordinates reduced mod 1."""
    return tuple(c - (c.numerator // c.denominator) for c in x.datum.coroot_coords(x.lam))


@lru_cache(maxsize=None)
def _omega_table(datum: RootDatum) -> dict:
    w0 = longest_element(datum)
    table = {}
    for mu in [qq.zero(datum.ambient_dim)] + [datum.rho(i) for i in datum.minuscule_indices]:
        w0_I = longest_element(datum, stabilizer_simple_indices(datum, mu))
        omega = ExtAffElt(mu, w0_I * w0)
        if im_length(omega) != 0:
            raise AssertionError(f"candidate Omega element for {qq.fmt_vec(mu)} has nonzero length")
        table.setdefault(omega_class(omega), omega)
    return table


def omega_rep(datum: RootDatum, c: tuple) -> ExtAffElt:
    """The unique length-zero element in Omega-class c."""
    c = tuple(qq.frac(a) for a in c)
    table = _omega_table(datum)
    if c not in table:
        raise AssertionError(f"no minuscule representative for Omega-class {qq.fmt_vec(c)}")
    return table[c]


def omega_of(x: ExtAffElt) -> ExtAffElt:
    return omega_rep(x.datum, omega_class(x))


def wa_part(x: ExtAffElt) -> ExtAffElt:
    """y in W_a with x = y * omega, omega in Omega."""
    y = x * omega_of(x).inverse()
    assert not any(omega_class(y))
    return y


def _left_descent(y: ExtAffElt, j: int, ly: int) -> bool:
    return im_length(aff_simple(y.datum, j) * y) < ly


def aff_reduced_word(y: ExtAffElt) -> tuple:
    """Reduced word over s_0..s_l for y in W_a, smallest-index left descent first."""
    if any(omega_class(y)):
        raise ValueError("aff_reduced_word needs an element of W_a (trivial Omega-class)")
    d = y.datum
    word = []
    ly = im_length(y)
    while ly:
        for j in range(d.rank + 1):
            z = aff_simple(d, j) * y
            lz = im_length(z)
            if lz < ly:
                word.append(j)
                y, ly = z, lz
                break
        else:
            raise AssertionError("no descent found for an element of positive length")
    return tuple(word)


def aff_bruhat_le(x: ExtAffElt, xp: ExtAffElt, trace: list | None = None) -> bool:
    """Extended Bruhat order: equal Omega-parts and y <= y' in W_a."""
    if omega_class(x) != omega_class(xp):
        return False
    y, yp = wa_part(x), wa_part(xp)
    d = x.datum
    v, lv = y, im_length(y)
    for j in aff_reduced_word(yp):
        z = aff_simple(d, j) * v
        lz = im_length(z)
        hit = lz < lv
        if hit:
            v, lv = z, lz
        if trace is not None:
            trace.append((j, hit))
    return lv == 0

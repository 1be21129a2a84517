"""Finite Weyl groups with elements stored as permutations of the roots."""

from __future__ import annotations

from collections import deque
from fractions import Fraction
from typing import Iterable, Sequence

from . import qq
from .qq import Vec
from .rootdata import RootDatum


class WeylElt:
    """Element of W, given by the image of every root index.

    ``perm[k]`` is the index of w(roots[k]).  Equality and hashing use the
    permutation, so two words for the same element compare equal.
    """

    __slots__ = ("datum", "perm", "_inv", "_word")

    def __init__(self, datum: RootDatum, perm: Sequence[int]):
        self.datum = datum
        self.perm = tuple(perm)
        self._inv = None
        self._word = None

    def __mul__(self, other: "WeylElt") -> "WeylElt":
        if not isinstance(other, WeylElt):
            return NotImplemented
        p = self.perm
        return WeylElt(self.datum, [p[k] for k in other.perm])

    def __eq__(self, other) -> bool:
        return isinstance(other, WeylElt) and self.datum is other.datum and self.perm == other.perm

    def __hash__(self) -> int:
        return hash(self.perm)

    def __repr__(self) -> str:
        return f"WeylElt({self.datum.type_label}, {list(self.reduced_word())})"

    def inverse(self) -> "WeylElt":
        if self._inv is None:
            inv = [0] * len(self.perm)
            for k, j in enumerate(self.perm):
                inv[j] = k
            self._inv = WeylElt(self.datum, inv)
            self._inv._inv = self
        return self._inv

    def length(self) -> int:
        npos = self.datum.npos
        return sum(1 for j in self.perm[:npos] if j >= npos)

    def is_identity(self) -> bool:
        return all(j == k for k, j in enumerate(self.perm))

    def has_left_descent(self, i: int) -> bool:
        """l(s_i w) < l(w), i.e. w^-1(alpha_i) is negative."""
        return self.inverse().perm[self.datum.base[i - 1]] >= self.datum.npos

    def has_right_descent(self, i: int) -> bool:
        """l(w s_i) < l(w), i.e. w(alpha_i) is negative."""
        return self.perm[self.datum.base[i - 1]] >= self.datum.npos

    def reduced_word(self) -> tuple:
        if self._word is None:
            self._word = _greedy_reduced_word(self)
        return self._word

    def act(self, v: Vec) -> Vec:
        return act(self, v)


def identity(datum: RootDatum) -> WeylElt:
    return WeylElt(datum, range(len(datum.roots)))


def simple_reflection(datum: RootDatum, i: int) -> WeylElt:
    if not 1 <= i <= datum.rank:
        raise ValueError(f"simple reflection index {i} out of range 1..{datum.rank}")
    return WeylElt(datum, datum.simple_perms[i - 1])


def reflection(datum: RootDatum, k: int) -> WeylElt:
    """The reflection s_alpha for root index k, built from its formula."""
    a, av = datum.roots[k], datum.coroots[k]
    return WeylElt(datum, [datum.index[qq.sub(b, qq.scale(qq.dot(b, av), a))] for b in datum.roots])


def from_word(datum: RootDatum, word: Iterable[int]) -> WeylElt:
    """Product s_{i1} s_{i2} ... s_{ik} (left to right)."""
    perm = list(range(len(datum.roots)))
    for i in word:
        i = int(i)
        if not 1 <= i <= datum.rank:
            raise ValueError(f"simple reflection index {i} out of range 1..{datum.rank}")
        s = datum.simple_perms[i - 1]
        perm = [perm[j] for j in s]
    return WeylElt(datum, perm)


def _greedy_reduced_word(w: WeylElt) -> tuple:
    d = w.datum
    word = []
    cur = w
    while True:
        for i in range(1, d.rank + 1):
            if cur.has_left_descent(i):
                word.append(i)
                s = d.simple_perms[i - 1]
                cur = WeylElt(d, [s[j] for j in cur.perm])
                break
        else:
            return tuple(word)


def length(w: WeylElt) -> int:
    return w.length()


def reduced_word(w: WeylElt) -> tuple:
    return w.reduced_word()


def act(w: WeylElt, v: Vec) -> Vec:
    """Linear action on the ambient space; identity on the orthogonal complement of V."""
    d = w.datum
    coords = d.coroot_coords(v)
    v_par = qq.combo(coords, d.simple_coroots)
    image = qq.combo(coords, [d.coroots[w.perm[k]] for k in d.base])
    return qq.add(image, qq.sub(v, v_par))


def act_char(w: WeylElt, a: Vec) -> Vec:
    """Action on the character side (span of the roots)."""
    d = w.datum
    coords = tuple(qq.dot(a, cv) for cv in d.fundamental_coweights)
    a_par = qq.combo(coords, d.simple_roots)
    image = qq.combo(coords, [d.roots[w.perm[k]] for k in d.base])
    return qq.add(image, qq.sub(a, a_par))


def matrix_of(w: WeylElt) -> tuple:
    """Matrix (rows x columns) of w acting on the ambient coordinates."""
    n = w.datum.ambient_dim
    cols = [act(w, qq.unit(n, j)) for j in range(n)]
    return tuple(tuple(cols[j][i] for j in range(n)) for i in range(n))


def reflection_matrix(datum: RootDatum, i: int) -> tuple:
    """I - alpha_i^vee alpha_i^T, straight from s_i(v) = v - <alpha_i, v> alpha_i^vee."""
    a = datum.simple_roots[i - 1]
    av = datum.simple_coroots[i - 1]
    n = datum.ambient_dim
    return tuple(tuple(Fraction(int(r == c)) - av[r] * a[c] for c in range(n)) for r in range(n))


def bruhat_le(u: WeylElt, w: WeylElt, trace: list | None = None) -> bool:
    """Bruhat comparison u <= w via the greedy subword criterion.

    Walk a reduced word s_{i1}...s_{ik} of w from the left, replacing u by
    s_{ij} u whenever that shortens it; u <= w iff the residue is trivial.
    If ``trace`` is a list it receives (letter, applied) pairs.
    """
    if u.datum is not w.datum:
        raise ValueError("elements belong to different root data")
    d = u.datum
    v = u
    for i in w.reduced_word():
        hit = v.has_left_descent(i)
        if hit:
            s = d.simple_perms[i - 1]
            v = WeylElt(d, [s[j] for j in v.perm])
        if trace is not None:
            trace.append((i, hit))
    return v.is_identity()


def min_coset_rep(w: WeylElt, I: Iterable[int], side: str = "left") -> WeylElt:
    """Minimal-length element of w W_I (side='left') or W_I w (side='right')."""
    if side not in ("left", "right"):
        raise ValueError(f"side must be 'left' or 'right', not {side!r}")
    I = sorted(set(I))
    d = w.datum
    cur = w
    while True:
        for i in I:
            if side == "left" and cur.has_right_descent(i):
                cur = cur * simple_reflection(d, i)
                break
            if side == "right" and cur.has_left_descent(i):
                cur = simple_reflection(d, i) * cur
                break
        else:
            return cur


def longest_element(datum: RootDatum, I: Iterable[int] | None = None) -> WeylElt:
    I = range(1, datum.rank + 1) if I is None else sorted(set(I))
    cur = identity(datum)
    while True:
        for i in I:
            if not cur.has_right_descent(i):
                cur = cur * simple_reflection(datum, i)
                break
        else:
            return cur


def stabilizer_simple_indices(datum: RootDatum, mu: Vec) -> frozenset:
    return frozenset(i for i, a in enumerate(datum.simple_roots, start=1) if qq.dot(a, mu) == 0)


def orbit_with_words(datum: RootDatum, mu: Vec) -> list:
    """BFS over W.mu, smallest reflection index first.

    Returns a list of (point, word) where from_word(word)(mu) = point.
    """
    mu = qq.vec(mu)
    seen = {mu: ()}
    out = [(mu, ())]
    queue = deque([mu])
    while queue:
        p = queue.popleft()
        for i, (a, av) in enumerate(zip(datum.simple_roots, datum.simple_coroots), start=1):
            c = qq.dot(a, p)
            if c == 0:
                continue
            q = qq.sub(p, qq.scale(c, av))
            if q not in seen:
                seen[q] = (i,) + seen[p]
                out.append((q, seen[q]))
                queue.append(q)
    return out


def orbit(datum: RootDatum, mu: Vec) -> list:
    return [p for p, _ in orbit_with_words(datum, mu)]


def orbit_witness(datum: RootDatum, mu: Vec, lam: Vec) -> WeylElt:
    lam = qq.vec(lam)
    for p, word in orbit_with_words(datum, mu):
        if p == lam:
            return from_word(datum, word)
    raise ValueError(f"{qq.fmt_vec(lam)} is not in the W-orbit of {qq.fmt_vec(mu)}")


def all_elements(datum: RootDatum) -> list:
    """Every element of W, BFS by length.  Intended for small ranks."""
    e = identity(datum)
    seen = {e}
    layer = [e]
    out = [e]
    while layer:
        nxt = []
        for w in layer:
            for i in range(1, datum.rank + 1):
                if not w.has_right_descent(i):
                    v = w * simple_reflection(datum, i)
                    if v not in seen:
                        seen.add(v)
                        nxt.append(v)
        out.extend(nxt)
        layer = nxt
    return out


def parabolic_elements(datum: RootDatum, I: Iterable[int]) -> list:
    I = sorted(set(I))
    e = identity(datum)
    seen = {e}
    frontier = [e]
    while frontier:
        nxt = []
        for w in frontier:
            for i in I:
                v = w * simple_reflection(datum, i)
                if v not in seen:
                    seen.add(v)
                    nxt.append(v)
        frontier = nxt
    return list(seen)

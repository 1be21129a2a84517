"""Exact rational vectors and small dense linear algebra over Q.

Vectors are plain tuples of :class:`fractions.Fraction`.  Nothing in the
package touches floating point.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Sequence

Vec = tuple  # tuple[Fraction, ...]


def frac(x) -> Fraction:
    if isinstance(x, Fraction):
        return x
    if isinstance(x, str):
        return Fraction(x.strip())
    if isinstance(x, float):
        raise TypeError(f"floating point value {x!r}; pass an int, Fraction or 'p/q' string")
    return Fraction(x)


def vec(xs: Iterable) -> Vec:
    return tuple(frac(x) for x in xs)


def zero(n: int) -> Vec:
    return (Fraction(0),) * n


def unit(n: int, i: int) -> Vec:
    return tuple(Fraction(int(k == i)) for k in range(n))


def add(u: Vec, v: Vec) -> Vec:
    return tuple(a + b for a, b in zip(u, v))


def sub(u: Vec, v: Vec) -> Vec:
    return tuple(a - b for a, b in zip(u, v))


def neg(u: Vec) -> Vec:
    return tuple(-a for a in u)


def scale(c, u: Vec) -> Vec:
    c = frac(c)
    return tuple(c * a for a in u)


def dot(u: Vec, v: Vec) -> Fraction:
    if len(u) != len(v):
        raise ValueError(f"dimension mismatch: {len(u)} != {len(v)}")
    return sum((a * b for a, b in zip(u, v)), Fraction(0))


def combo(coeffs: Sequence, vectors: Sequence[Vec]) -> Vec:
    """Linear combination sum(c_k * v_k)."""
    n = len(vectors[0])
    out = [Fraction(0)] * n
    for c, v in zip(coeffs, vectors):
        if c:
            for k in range(n):
                out[k] += c * v[k]
    return tuple(out)


def fmt(q: Fraction) -> str:
    q = frac(q)
    return f"{q.numerator}/{q.denominator}"


def fmt_vec(v: Vec) -> list[str]:
    return [fmt(a) for a in v]


def parse_vec(xs: Sequence[str]) -> Vec:
    return tuple(Fraction(x) for x in xs)


def solve(columns: Sequence[Vec], target: Vec) -> Vec | None:
    """Exact solution x of sum_k x_k * columns[k] = target.

    Columns must be linearly independent.  Returns None if the system is
    inconsistent (target outside the span).
    """
    m = len(columns)
    n = len(target)
    # augmented n x (m+1) matrix, rows = coordinates
    rows = [[columns[k][r] for k in range(m)] + [target[r]] for r in range(n)]
    pivots = []
    r = 0
    for c in range(m):
        p = next((i for i in range(r, n) if rows[i][c] != 0), None)
        if p is None:
            raise ValueError("columns are linearly dependent")
        rows[r], rows[p] = rows[p], rows[r]
        pr = rows[r]
        inv = 1 / pr[c]
        for j in range(c, m + 1):
            pr[j] *= inv
        for i in range(n):
            if i != r and rows[i][c] != 0:
                f = rows[i][c]
                ri = rows[i]
                for j in range(c, m + 1):
                    ri[j] -= f * pr[j]
        pivots.append(c)
        r += 1
    if any(rows[i][m] != 0 for i in range(r, n)):
        return None
    return tuple(rows[i][m] for i in range(m))


def mat_mul(a: Sequence[Sequence], b: Sequence[Sequence]) -> tuple:
    bt = list(zip(*b))
    return tuple(tuple(sum((x * y for x, y in zip(row, col)), Fraction(0)) for col in bt) for row in a)


def mat_vec(a: Sequence[Sequence], v: Vec) -> Vec:
    return tuple(sum((x * y for x, y in zip(row, v)), Fraction(0)) for row in a)


def identity_matrix(n: int) -> tuple:
    return tuple(unit(n, i) for i in range(n))


def mat_inverse(a: Sequence[Sequence]) -> tuple:
    n = len(a)
    cols = [tuple(a[r][c] for r in range(n)) for c in range(n)]
    inv_cols = [solve(cols, unit(n, k)) for k in range(n)]
    return tuple(tuple(inv_cols[c][r] for c in range(n)) for r in range(n))


def is_integral(v: Iterable[Fraction]) -> bool:
    return all(frac(a).denominator == 1 for a in v)

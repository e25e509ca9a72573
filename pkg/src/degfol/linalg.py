"""Exact Gaussian elimination over Q (and over first-order jets for solving)."""

from __future__ import annotations

from fractions import Fraction
from typing import Sequence

from .polycore import JetScalar, MultiPoly, divmod_poly


class SingularSystem(ArithmeticError):
    pass


def _frac_matrix(rows) -> list[list[Fraction]]:
    return [[Fraction(x) for x in row] for row in rows]


def rref(rows: Sequence[Sequence]) -> tuple[list[list[Fraction]], list[int]]:
    """Reduced row echelon form and pivot columns."""
    m = _frac_matrix(rows)
    if not m:
        return m, []
    ncols = len(m[0])
    pivots: list[int] = []
    r = 0
    for c in range(ncols):
        piv = next((i for i in range(r, len(m)) if m[i][c]), None)
        if piv is None:
            continue
        m[r], m[piv] = m[piv], m[r]
        inv = 1 / m[r][c]
        m[r] = [x * inv for x in m[r]]
        for i in range(len(m)):
            if i != r and m[i][c]:
                f = m[i][c]
                m[i] = [a - f * b for a, b in zip(m[i], m[r])]
        pivots.append(c)
        r += 1
        if r == len(m):
            break
    return m, pivots


def rank(rows: Sequence[Sequence]) -> int:
    if not rows or not len(rows[0]):
        return 0
    m = _frac_matrix(rows)
    ncols = len(m[0])
    r = 0
    for c in range(ncols):
        piv = next((i for i in range(r, len(m)) if m[i][c]), None)
        if piv is None:
            continue
        m[r], m[piv] = m[piv], m[r]
        for i in range(r + 1, len(m)):
            if m[i][c]:
                f = m[i][c] / m[r][c]
                m[i] = [a - f * b for a, b in zip(m[i], m[r])]
        r += 1
        if r == len(m):
            break
    return r


def nullspace(rows: Sequence[Sequence], ncols: int | None = None) -> list[list[Fraction]]:
    """Basis of {v : M v = 0}, one vector per free column (canonical for M's row space)."""
    if ncols is None:
        ncols = len(rows[0])
    if not rows:
        return [[Fraction(int(i == j)) for i in range(ncols)] for j in range(ncols)]
    m, pivots = rref(rows)
    free = [c for c in range(ncols) if c not in pivots]
    basis = []
    for f in free:
        v = [Fraction(0)] * ncols
        v[f] = Fraction(1)
        for r, pc in enumerate(pivots):
            v[pc] = -m[r][f]
        basis.append(v)
    return basis


def transpose(m):
    return [list(col) for col in zip(*m)]


def matmul(a, b):
    bt = transpose(b)
    return [[sum((x * y for x, y in zip(row, col)), Fraction(0)) for col in bt] for row in a]


def matvec(a, v):
    return [sum((x * y for x, y in zip(row, v)), Fraction(0)) for row in a]


def dot(u, v):
    return sum((a * b for a, b in zip(u, v)), Fraction(0))


def solve(a: Sequence[Sequence], b: Sequence) -> list[Fraction]:
    """One solution of a consistent system ``a x = b`` (free variables set to 0)."""
    ncols = len(a[0])
    aug = [list(row) + [rhs] for row, rhs in zip(a, b)]
    m, pivots = rref(aug)
    if ncols in pivots:
        raise SingularSystem("inconsistent linear system")
    x = [Fraction(0)] * ncols
    for r, pc in enumerate(pivots):
        x[pc] = m[r][ncols]
    return x


def same_span(u: Sequence[Sequence], v: Sequence[Sequence]) -> bool:
    """Equality of the row spaces spanned by two lists of vectors."""
    if not u or not v:
        return not any(any(x) for x in u) and not any(any(x) for x in v)
    ru, rv = rank(u), rank(v)
    return ru == rv == rank(list(u) + list(v))


def independent_mod(candidates: Sequence[Sequence], base: Sequence[Sequence], count: int | None = None):
    """Greedy subset of ``candidates`` independent modulo ``span(base)``."""
    chosen: list = []
    current = [list(b) for b in base]
    r = rank(current) if current else 0
    for c in candidates:
        trial = current + [list(c)]
        rt = rank(trial)
        if rt > r:
            chosen.append(list(c))
            current, r = trial, rt
            if count is not None and len(chosen) == count:
                break
    return chosen


def canonical_vector(v: Sequence[Fraction]) -> list[int]:
    """Clear denominators, divide by the gcd, make the first nonzero entry positive."""
    from math import gcd, lcm

    v = [Fraction(x) for x in v]
    if not any(v):
        raise ValueError("zero vector has no projective class")
    den = lcm(*(x.denominator for x in v))
    ints = [int(x * den) for x in v]
    g = gcd(*ints)
    ints = [x // g for x in ints]
    first = next(x for x in ints if x)
    return [-x for x in ints] if first < 0 else ints


def canonical_basis(vectors: Sequence[Sequence]) -> list[list[int]]:
    """Canonical integer basis of a row space (from the RREF)."""
    if not vectors:
        return []
    m, pivots = rref(vectors)
    return [canonical_vector(m[i]) for i in range(len(pivots))]


# -- jets ---------------------------------------------------------------------


def solve_jet(a: list[list[JetScalar]], b: list[JetScalar]) -> list[JetScalar]:
    """Solve a consistent, full-column-rank system with jet entries.

    Pivots are chosen among entries with nonzero value. Rows left over after
    elimination must vanish to first order; otherwise the rank jumps in every
    neighbourhood of the base point and :class:`SingularSystem` is raised.
    """
    nrows, ncols = len(a), len(a[0])
    m = [list(row) + [rhs] for row, rhs in zip(a, b)]
    r = 0
    pivots = []
    for c in range(ncols):
        piv = next((i for i in range(r, nrows) if m[i][c].has_unit_value()), None)
        if piv is None:
            raise SingularSystem(f"no invertible pivot in column {c}")
        m[r], m[piv] = m[piv], m[r]
        inv = 1 / m[r][c]
        m[r] = [x * inv for x in m[r]]
        for i in range(nrows):
            if i != r and not m[i][c].is_zero():
                f = m[i][c]
                m[i] = [x - f * y for x, y in zip(m[i], m[r])]
        pivots.append(c)
        r += 1
    for i in range(r, nrows):
        if not all(x.is_zero() for x in m[i]):
            raise SingularSystem("jet system inconsistent at first order")
    return [m[i][ncols] for i in range(ncols)]


# -- polynomial matrices --------------------------------------------------------


def det_poly(m: list[list[MultiPoly]]) -> MultiPoly:
    """Fraction-free (Bareiss) determinant of a square polynomial matrix."""
    n = len(m)
    if n == 0:
        raise ValueError("empty matrix")
    nv = m[0][0].nvars
    a = [list(row) for row in m]
    sign = 1
    prev = MultiPoly.const(nv, 1)
    for k in range(n - 1):
        if a[k][k].is_zero():
            swap = next((i for i in range(k + 1, n) if not a[i][k].is_zero()), None)
            if swap is None:
                return MultiPoly.zero(nv)
            a[k], a[swap] = a[swap], a[k]
            sign = -sign
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                num = a[i][j] * a[k][k] - a[i][k] * a[k][j]
                q, r = divmod_poly(num, prev)
                assert r.is_zero(), "Bareiss division must be exact"
                a[i][j] = q
        prev = a[k][k]
    return a[n - 1][n - 1].scale(sign)

"""Exact linear algebra over the rationals: dense matrices, sparse vectors,
and the one quadratic system the eigenmatrix reconstruction needs."""
from __future__ import annotations

import math
from fractions import Fraction
from typing import Hashable, Iterable, Optional, Sequence

Rat = Fraction

Vec = dict  # sparse vector: hashable key -> nonzero Fraction


# -- sparse vectors ---------------------------------------------------------------


def vec_add(u: Vec, v: Vec, c: Rat = Fraction(1)) -> Vec:
    """u + c*v, dropping zeros."""
    out = dict(u)
    for k, x in v.items():
        s = out.get(k, 0) + c * x
        if s:
            out[k] = s
        else:
            out.pop(k, None)
    return out


def vec_scale(u: Vec, c: Rat) -> Vec:
    if not c:
        return {}
    return {k: c * x for k, x in u.items()}


def vec_dot(u: Vec, v: Vec) -> Rat:
    if len(v) < len(u):
        u, v = v, u
    return sum((x * v[k] for k, x in u.items() if k in v), Fraction(0))


def vec_primitive(u: Vec) -> Vec:
    """Scale to a primitive integer vector whose lexicographically-least key is positive."""
    if not u:
        return {}
    den = math.lcm(*(x.denominator for x in u.values()))
    num = math.gcd(*(x.numerator for x in u.values()))
    c = Fraction(den, num)
    if u[min(u)] < 0:
        c = -c
    return vec_scale(u, c)


def vec_proportional(u: Vec, v: Vec) -> Optional[Rat]:
    """c with u = c*v, or None."""
    if not u or not v:
        return Fraction(0) if not u else None
    if set(u) != set(v):
        return None
    k = next(iter(u))
    c = u[k] / v[k]
    return c if all(x == c * v[k2] for k2, x in u.items()) else None


class _SparseEliminator:
    """Incremental row reduction over sparse vectors, tracking expressions
    of each pivot row as a combination of the inserted vectors."""

    def __init__(self):
        self.pivots: dict[Hashable, tuple[Vec, Vec]] = {}  # pivot key -> (row, combo)
        self.count = 0

    def _reduce(self, row: Vec, combo: Vec):
        for key in sorted(self.pivots, key=repr):
            if key in row:
                prow, pcombo = self.pivots[key]
                c = -row[key]
                row = vec_add(row, prow, c)
                combo = vec_add(combo, pcombo, c)
        return row, combo

    def insert(self, row: Vec, tag: Hashable) -> bool:
        """Insert a vector; returns True if it increased the rank."""
        row, combo = self._reduce(dict(row), {tag: Fraction(1)})
        if not row:
            return False
        key = min(row, key=repr)
        c = Fraction(1) / row[key]
        self.pivots[key] = (vec_scale(row, c), vec_scale(combo, c))
        self.count += 1
        return True

    def express(self, target: Vec) -> Optional[Vec]:
        """Combination of inserted tags reproducing target, or None."""
        row, combo = self._reduce(dict(target), {})
        if row:
            return None
        return vec_scale(combo, Fraction(-1))


def sparse_rank(vectors: Iterable[Vec], stop_at: Optional[int] = None) -> int:
    """Rank of the vector family.  If stop_at is a known upper bound on the
    rank, iteration halts as soon as it is reached."""
    elim = _SparseEliminator()
    for i, v in enumerate(vectors):
        elim.insert(v, i)
        if stop_at is not None and elim.count >= stop_at:
            break
    return elim.count


def sparse_express(target: Vec, basis: Sequence[Vec]) -> Optional[list[Rat]]:
    """Coefficients c with sum c_i basis_i = target, or None if not in the span.

    The basis is required to be linearly independent.
    """
    elim = _SparseEliminator()
    for i, v in enumerate(basis):
        if not elim.insert(v, i):
            raise ValueError("basis is linearly dependent")
    combo = elim.express(target)
    if combo is None:
        return None
    return [combo.get(i, Fraction(0)) for i in range(len(basis))]


# -- dense matrices ----------------------------------------------------------------


def mat_det(rows: Sequence[Sequence[Rat]]) -> Rat:
    n = len(rows)
    a = [[Fraction(x) for x in r] for r in rows]
    if any(len(r) != n for r in a):
        raise ValueError("determinant needs a square matrix")
    det = Fraction(1)
    for col in range(n):
        piv = next((r for r in range(col, n) if a[r][col]), None)
        if piv is None:
            return Fraction(0)
        if piv != col:
            a[col], a[piv] = a[piv], a[col]
            det = -det
        det *= a[col][col]
        inv = Fraction(1) / a[col][col]
        for r in range(col + 1, n):
            if a[r][col]:
                c = a[r][col] * inv
                a[r] = [x - c * y for x, y in zip(a[r], a[col])]
    return det


def mat_rank(rows: Sequence[Sequence[Rat]]) -> int:
    a = [[Fraction(x) for x in r] for r in rows]
    rank, ncols = 0, (len(a[0]) if a else 0)
    for col in range(ncols):
        piv = next((r for r in range(rank, len(a)) if a[r][col]), None)
        if piv is None:
            continue
        a[rank], a[piv] = a[piv], a[rank]
        inv = Fraction(1) / a[rank][col]
        a[rank] = [x * inv for x in a[rank]]
        for r in range(len(a)):
            if r != rank and a[r][col]:
                c = a[r][col]
                a[r] = [x - c * y for x, y in zip(a[r], a[rank])]
        rank += 1
    return rank


def mat_solve_affine(a_rows: Sequence[Sequence[Rat]], b: Sequence[Rat]):
    """General solution of A x = b: (particular, nullspace_basis); None if inconsistent."""
    m = len(a_rows)
    ncols = len(a_rows[0])
    aug = [[Fraction(x) for x in row] + [Fraction(b[i])] for i, row in enumerate(a_rows)]
    pivcols = []
    rank = 0
    for col in range(ncols):
        piv = next((r for r in range(rank, m) if aug[r][col]), None)
        if piv is None:
            continue
        aug[rank], aug[piv] = aug[piv], aug[rank]
        inv = Fraction(1) / aug[rank][col]
        aug[rank] = [x * inv for x in aug[rank]]
        for r in range(m):
            if r != rank and aug[r][col]:
                c = aug[r][col]
                aug[r] = [x - c * y for x, y in zip(aug[r], aug[rank])]
        pivcols.append(col)
        rank += 1
    for r in range(rank, m):
        if aug[r][ncols]:
            return None
    particular = [Fraction(0)] * ncols
    for r, col in enumerate(pivcols):
        particular[col] = aug[r][ncols]
    free = [c for c in range(ncols) if c not in pivcols]
    null_basis = []
    for fc in free:
        v = [Fraction(0)] * ncols
        v[fc] = Fraction(1)
        for r, col in enumerate(pivcols):
            v[col] = -aug[r][fc]
        null_basis.append(v)
    return particular, null_basis


def rational_sqrt(x: Rat) -> Optional[Rat]:
    """Exact nonnegative square root of x, or None if x is not a rational square."""
    if x < 0:
        return None
    p, q = x.numerator, x.denominator
    rp, rq = math.isqrt(p), math.isqrt(q)
    if rp * rp != p or rq * rq != q:
        return None
    return Fraction(rp, rq)


def solve_linear_quadratic(a_rows: Sequence[Sequence[Rat]], b: Sequence[Rat],
                           quad_coeffs: Sequence[Rat], quad_rhs: Rat) -> list[tuple[Rat, ...]]:
    """Solve A x = b (affine solution space of dimension <= 1) together with
    sum_i quad_coeffs[i] * x_i^2 = quad_rhs.  Returns all rational solutions."""
    sol = mat_solve_affine(a_rows, b)
    if sol is None:
        return []
    x0, null = sol
    if len(null) > 1:
        raise ValueError("linear part is too degenerate (solution space dim > 1)")
    if not null:
        ok = sum(c * x * x for c, x in zip(quad_coeffs, x0)) == quad_rhs
        return [tuple(x0)] if ok else []
    d = null[0]
    # sum c_i (x0_i + t d_i)^2 = rhs
    q2 = sum(c * di * di for c, di in zip(quad_coeffs, d))
    q1 = 2 * sum(c * xi * di for c, xi, di in zip(quad_coeffs, x0, d))
    q0 = sum(c * xi * xi for c, xi in zip(quad_coeffs, x0)) - quad_rhs
    if q2 == 0:
        if q1 == 0:
            raise ValueError("quadratic condition is degenerate along the solution line")
        ts = [-q0 / q1]
    else:
        disc = q1 * q1 - 4 * q2 * q0
        root = rational_sqrt(disc)
        if root is None:
            return []
        ts = sorted({(-q1 + root) / (2 * q2), (-q1 - root) / (2 * q2)})
    return [tuple(x + t * di for x, di in zip(x0, d)) for t in ts]

"""Exact Specht-module computations over the rationals.

Vectors live in the permutation module on tabloids of a fixed shape: a
tabloid is a tuple of rows, each row a sorted tuple, with the row order
significant.  A vector is a dict mapping tabloids to Fractions.

Two module structures are used on the same underlying space:

* plain: g acts by relabelling entries;
* twisted: g acts by relabelling entries and multiplying by sign(g); the
  span of the polytabloids of shape mu then realizes the Specht module of
  the conjugate shape mu' tensored with the sign character.
"""

from __future__ import annotations

import itertools
from fractions import Fraction
from functools import lru_cache

from .perms import (
    Permutation,
    conjugator,
    group_elements,
    normalizer_small_threecycle_pair,
    parse_cycles,
)

Tabloid = tuple
Vec = dict


# ---------------------------------------------------------------------------
# Partitions
# ---------------------------------------------------------------------------


def conjugate_partition(lam: tuple[int, ...]) -> tuple[int, ...]:
    return tuple(sum(1 for part in lam if part >= j)
                 for j in range(1, lam[0] + 1))


@lru_cache(maxsize=None)
def dim_specht(lam: tuple[int, ...]) -> int:
    """Dimension by the hook length formula."""
    n = sum(lam)
    conj = conjugate_partition(lam)
    num = 1
    for k in range(2, n + 1):
        num *= k
    den = 1
    for i, row in enumerate(lam):
        for j in range(row):
            den *= (row - j) + (conj[j] - i) - 1
    assert num % den == 0
    return num // den


# ---------------------------------------------------------------------------
# Tabloids and the group action
# ---------------------------------------------------------------------------


def tabloid(rows) -> Tabloid:
    return tuple(tuple(sorted(row)) for row in rows)


def act_tabloid(t: Tabloid, g: Permutation) -> Tabloid:
    return tuple(tuple(sorted(g(x) for x in row)) for row in t)


def act_vec(v: Vec, g: Permutation, twisted: bool = False) -> Vec:
    s = g.sign() if twisted else 1
    return {act_tabloid(t, g): s * c for t, c in v.items()}


def kappa(u: Vec, v: Vec) -> Fraction:
    """The standard inner product making the tabloid basis orthonormal."""
    if len(u) > len(v):
        u, v = v, u
    return sum((c * v[t] for t, c in u.items() if t in v), Fraction(0))


def vec_iadd(target: Vec, v: Vec, c=1) -> None:
    for t, x in v.items():
        new = target.get(t, 0) + c * x
        if new:
            target[t] = new
        else:
            target.pop(t, None)


# ---------------------------------------------------------------------------
# Polytabloids
# ---------------------------------------------------------------------------


def _perm_sign(seq: tuple[int, ...]) -> int:
    sign = 1
    for i in range(len(seq)):
        for j in range(i + 1, len(seq)):
            if seq[i] > seq[j]:
                sign = -sign
    return sign


def polytabloid(rows) -> Vec:
    """Signed column-stabilizer sum of the tableau given by rows."""
    rows = [tuple(r) for r in rows]
    ncols = len(rows[0])
    columns = [tuple(rows[i][j] for i in range(len(rows)) if len(rows[i]) > j)
               for j in range(ncols)]
    out: Vec = {}
    for choice in itertools.product(
            *[itertools.permutations(range(len(col))) for col in columns]):
        sign = 1
        for pi in choice:
            sign *= _perm_sign(pi)
        new_rows = [list(r) for r in rows]
        for j, (col, pi) in enumerate(zip(columns, choice)):
            for i in range(len(col)):
                new_rows[i][j] = col[pi[i]]
        t = tabloid(new_rows)
        new = out.get(t, 0) + sign
        if new:
            out[t] = new
        else:
            out.pop(t, None)
    return out


def invariant_sum(v: Vec, elements, twisted: bool = False) -> Vec:
    """Sum of the translates of v over the given group elements."""
    out: Vec = {}
    for g in elements:
        vec_iadd(out, act_vec(v, g, twisted))
    return out


def is_invariant(v: Vec, gens, twisted: bool = False) -> bool:
    return all(act_vec(v, g, twisted) == v for g in gens)


# ---------------------------------------------------------------------------
# Standard tableaux (for dimension spot checks)
# ---------------------------------------------------------------------------


def standard_tableaux(lam: tuple[int, ...]):
    n = sum(lam)

    def fill(rows, k):
        if k > n:
            yield tuple(tuple(r) for r in rows)
            return
        for i, row in enumerate(rows):
            if len(row) >= lam[i]:
                continue
            j = len(row)
            if i > 0 and len(rows[i - 1]) <= j:
                continue
            row.append(k)
            yield from fill(rows, k + 1)
            row.pop()

    yield from fill([[] for _ in lam], 1)


# ---------------------------------------------------------------------------
# The distinguished invariant vectors w_n  (shape (6, 1^{n-6}), twisted;
# the span of their translates realizes S^{(n-5,1^5)})
# ---------------------------------------------------------------------------


def _w_seed_rows(n: int):
    return [(1, 2, 3, 4, 5, 7), (6,)] + [(i,) for i in range(8, n + 1)]


@lru_cache(maxsize=None)
def w_small(n: int) -> Vec:
    """Sum of the seed polytabloid's translates over the degree-6 normalizer
    of <e_1> (36 elements)."""
    seed = polytabloid(_w_seed_rows(n))
    small = normalizer_small_threecycle_pair(n)
    return invariant_sum(seed, group_elements(small.gens), twisted=True)


@lru_cache(maxsize=None)
def w_vector(n: int) -> Vec:
    """w_n: the tail-symmetrized invariant vector."""
    out: Vec = {}
    w7 = w_small(n)
    for i in range(7, n + 1):
        if i == 7:
            vec_iadd(out, w7)
        else:
            vec_iadd(out, act_vec(w7, parse_cycles(f"(7,{i})", n),
                                  twisted=True))
    return out


def zeta_project(point: Permutation, n: int) -> Vec:
    """Image of the 3-axis vector attached to <point> under the equivariant
    map into the twisted tabloid module, normalized so the base point maps
    to w_n.

    The raw translate map point -> w_n^g is made odd for the inverting
    involution of the class (antisymmetrization over it), so that the map
    factors through the sign-odd homogeneous component even at degrees where
    the same constituent also occurs in the fixed part."""
    from .invsets import base_point, beta, canonical_generator
    base = base_point("t", n)
    w = w_vector(n)
    out: Vec = {}
    for p, c in ((point, Fraction(1, 2)),
                 (beta(point), Fraction(-1, 2))):
        g = conjugator(base, canonical_generator(p))
        vec_iadd(out, act_vec(w, g, twisted=True), c)
    return out

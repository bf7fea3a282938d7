"""Involution and 3-cycle-pair classes, pair orbitals, and inner-product tables.

The group is the symmetric/alternating group of degree n (8 <= n <= 12).
Four classes of points are handled:

* kind "b": involutions of cycle type 2^2 (base point r_1 = (1,2)(3,4));
* kind "s": fixed-point-free involutions of cycle type 2^6, degree 12 only
  (base point s_1 = (1,2)(3,4)(5,6)(7,8)(9,10)(11,12));
* kind "r": subgroups generated by a 3-cycle;
* kind "t": subgroups generated by a permutation of cycle type 3^2
  (base point <e_1>, e_1 = (1,2,3)(4,5,6)), stored via the lexicographically
  least generator.

Ordered pairs of points are classified into orbitals of the degree-12
symmetric group by conjugating the first slot onto the fixed base point and
looking up the second slot in a precomputed position table.  Classification
at lower degree embeds into degree 12 (the orbital data is degree-stable for
supports inside {1..n}).
"""

from __future__ import annotations

import itertools
from fractions import Fraction
from functools import lru_cache

from . import data
from .perms import (
    GenSet,
    Permutation,
    base_bitransposition,
    base_matching,
    base_threecycle_pair,
    centralizer_bitransposition,
    centralizer_matching,
    conjugator,
    normalizer_threecycle_pair,
    orbit_partition,
    parse_cycles,
)

N_FULL = 12


# ---------------------------------------------------------------------------
# Points
# ---------------------------------------------------------------------------


def canonical_generator(p: Permutation) -> Permutation:
    """The lexicographically least generator of the cyclic group <p> (order 3)."""
    q = p * p
    return p if p.img <= q.img else q


def act_point(point: Permutation, g: Permutation, kind: str) -> Permutation:
    """Conjugation action on class points, canonicalized for subgroup kinds."""
    image = point.conj(g)
    if kind in ("r", "t"):
        return canonical_generator(image)
    return image


def embed(p: Permutation, n: int = N_FULL) -> Permutation:
    """Re-read a permutation at a (weakly) larger degree."""
    if p.degree == n:
        return p
    if p.degree > n:
        raise ValueError("cannot shrink a permutation's degree")
    return Permutation(p.img + tuple(range(p.degree + 1, n + 1)))


@lru_cache(maxsize=None)
def base_point(kind: str, n: int = N_FULL) -> Permutation:
    if kind == "b":
        return base_bitransposition(n)
    if kind == "s":
        if n != 12:
            raise ValueError("kind s exists at degree 12 only")
        return base_matching(n)
    if kind == "t":
        return base_threecycle_pair(n)
    raise ValueError(f"no base point for kind {kind!r}")


@lru_cache(maxsize=None)
def base_stabilizer(kind: str, n: int = N_FULL) -> GenSet:
    """The stabilizer of the base point used for suborbit computations."""
    if kind == "b":
        return centralizer_bitransposition(n)
    if kind == "s":
        if n != 12:
            raise ValueError("kind s exists at degree 12 only")
        return centralizer_matching(n)
    if kind == "t":
        return normalizer_threecycle_pair(n)
    raise ValueError(f"no stabilizer for kind {kind!r}")


def _matchings(points: tuple[int, ...]):
    if not points:
        yield ()
        return
    a = points[0]
    for i in range(1, len(points)):
        b = points[i]
        rest = points[1:i] + points[i + 1:]
        for sub in _matchings(rest):
            yield ((a, b),) + sub


@lru_cache(maxsize=None)
def enumerate_class(n: int, kind: str) -> tuple[Permutation, ...]:
    """All points of the class at degree n, in lexicographic image order."""
    out: set[Permutation] = set()
    if kind == "b":
        for four in itertools.combinations(range(1, n + 1), 4):
            for part in _matchings(four):
                out.add(parse_cycles("".join(f"({a},{b})" for a, b in part), n))
    elif kind == "s":
        if n != 12:
            raise ValueError("kind s exists at degree 12 only")
        for part in _matchings(tuple(range(1, 13))):
            out.add(parse_cycles("".join(f"({a},{b})" for a, b in part), n))
    elif kind == "r":
        for trip in itertools.combinations(range(1, n + 1), 3):
            a, b, c = trip
            out.add(canonical_generator(parse_cycles(f"({a},{b},{c})", n)))
    elif kind == "t":
        for six in itertools.combinations(range(1, n + 1), 6):
            first = six[0]
            rest = six[1:]
            for other in itertools.combinations(rest, 2):
                triple_a = (first,) + other
                triple_b = tuple(x for x in rest if x not in other)
                for a2, a3 in (triple_a[1:], triple_a[:0:-1]):
                    for b2, b3 in ((triple_b[1], triple_b[2]),
                                   (triple_b[2], triple_b[1])):
                        p = parse_cycles(
                            f"({triple_a[0]},{a2},{a3})"
                            f"({triple_b[0]},{b2},{b3})", n)
                        out.add(canonical_generator(p))
    else:
        raise ValueError(f"unknown kind {kind!r}")
    return tuple(sorted(out))


EXPECTED_SIZES_12 = data.CLASS_SIZES_12


# ---------------------------------------------------------------------------
# Pair orbitals (degree-12 position tables)
# ---------------------------------------------------------------------------

# Orbital representatives for each (base kind, target kind) at degree 12,
# listed in the fixed table order.  Entries are the partner point with the
# base in the first slot.

def _orbital_reps(pair_kind: str) -> list[Permutation]:
    if pair_kind == "bb":
        return [parse_cycles(c, 12) for c, _ in data.BB_ORBITS]
    if pair_kind == "ss":
        return [parse_cycles(reps[0], 12) for reps, _ in data.SS_ORBITS]
    if pair_kind == "sb":
        return [parse_cycles(c, 12) for c, _ in data.SB_ORBITS]
    if pair_kind == "st":
        return [canonical_generator(parse_cycles(c, 12))
                for c, _ in data.ST_ORBITS]
    if pair_kind == "bt":
        return [canonical_generator(parse_cycles(c, 12))
                for c, _ in data.BT_ORBITS]
    if pair_kind == "tt":
        return [canonical_generator(parse_cycles(c, 12))
                for c, _, _ in data.TT_ORBITS]
    raise ValueError(f"unknown pair kind {pair_kind!r}")


_PAIR_BASE = {"bb": ("b", "b"), "ss": ("s", "s"), "sb": ("s", "b"),
              "st": ("s", "t"), "bt": ("b", "t"), "tt": ("t", "t")}


@lru_cache(maxsize=None)
def position_table(pair_kind: str) -> dict[Permutation, int]:
    """Map each degree-12 point of the target class to its 1-based orbital
    index relative to the base point of the first slot's kind."""
    base_kind, target_kind = _PAIR_BASE[pair_kind]
    stab = base_stabilizer(base_kind)
    points = enumerate_class(12, target_kind)
    cells, index_of = orbit_partition(
        stab.gens, points, lambda x, g: act_point(x, g, target_kind))
    reps = _orbital_reps(pair_kind)
    if len(cells) > len(reps):
        raise RuntimeError(
            f"{pair_kind}: found {len(cells)} suborbits, expected "
            f"at most {len(reps)}")
    values = gamma_table(pair_kind)
    cell_to_orbital: dict[int, int] = {}
    for i, rep in enumerate(reps, start=1):
        cell = index_of[rep]
        if cell in cell_to_orbital:
            # a row refined under the even subgroup: tolerated when the
            # tabulated values agree, keeping the first index
            first = cell_to_orbital[cell]
            if values[first - 1] != values[i - 1]:
                raise RuntimeError(
                    f"{pair_kind}: representatives {i} and {first} lie in "
                    f"the same suborbit but carry different values")
            continue
        cell_to_orbital[cell] = i
    if len(cell_to_orbital) != len(cells):
        raise RuntimeError(f"{pair_kind}: some suborbit has no representative")
    return {p: cell_to_orbital[c] for p, c in index_of.items()}


def kind_of(p: Permutation) -> str:
    ct = p.cycle_type()
    if ct == (2, 2):
        return "b"
    if ct == (2, 2, 2, 2, 2, 2):
        return "s"
    if ct == (3,):
        return "r"
    if ct == (3, 3):
        return "t"
    raise ValueError(f"point {p} has unsupported cycle type {ct}")


def classify_pair(u: Permutation, v: Permutation) -> tuple[str, int]:
    """Orbital of the ordered pair (u, v): (pair kind, 1-based index).

    Mixed pairs are normalized to the tabulated slot order (sb, st, bt); the
    tables are symmetric in value, so consumers may classify either order.
    """
    ku, kv = kind_of(u), kind_of(v)
    if (ku, kv) in (("b", "s"), ("t", "s"), ("t", "b")):
        u, v, ku, kv = v, u, kv, ku
    pair_kind = {("b", "b"): "bb", ("s", "s"): "ss", ("s", "b"): "sb",
                 ("s", "t"): "st", ("b", "t"): "bt",
                 ("t", "t"): "tt"}[(ku, kv)]
    u12, v12 = embed(u), embed(v)
    g = conjugator(u12, base_point(ku))
    image = act_point(v12, g, kv)
    return pair_kind, position_table(pair_kind)[image]


# ---------------------------------------------------------------------------
# Suborbits at degree n
# ---------------------------------------------------------------------------


@lru_cache(maxsize=None)
def suborbit_index(n: int, base_kind: str, target_kind: str) \
        -> dict[Permutation, int]:
    """Map each degree-n point of the target class to its orbital index
    relative to the degree-n base point of base_kind."""
    out = {}
    for p in enumerate_class(n, target_kind):
        _, idx = classify_pair(base_point(base_kind, n), p)
        out[p] = idx
    return out


@lru_cache(maxsize=None)
def suborbit_cells(n: int, base_kind: str, target_kind: str) \
        -> dict[int, tuple[Permutation, ...]]:
    """Suborbits Delta_j(base) as tuples of degree-n points, keyed by index."""
    cells: dict[int, list[Permutation]] = {}
    for p, idx in suborbit_index(n, base_kind, target_kind).items():
        cells.setdefault(idx, []).append(p)
    return {j: tuple(sorted(ps)) for j, ps in sorted(cells.items())}


def valencies(n: int, base_kind: str, target_kind: str) -> dict[int, int]:
    return {j: len(ps)
            for j, ps in suborbit_cells(n, base_kind, target_kind).items()}


def tt_orbital_count(n: int) -> int:
    return data.TT_COUNT[n]


# ---------------------------------------------------------------------------
# beta involution on kind-t points
# ---------------------------------------------------------------------------


def beta(p: Permutation) -> Permutation:
    """<ab> -> <a b^-1> for the two disjoint 3-cycles a, b of the generator."""
    if kind_of(p) != "t":
        raise ValueError("beta is defined on kind-t points only")
    gen = canonical_generator(p)
    cyc_a, cyc_b = gen.cycles()
    n = p.degree
    a = parse_cycles("(" + ",".join(map(str, cyc_a)) + ")", n)
    b = parse_cycles("(" + ",".join(map(str, cyc_b)) + ")", n)
    return canonical_generator(a * b.inv())


@lru_cache(maxsize=None)
def beta_pairing(n: int) -> dict[int, int]:
    """The induced involution j -> j^beta on tt orbital indices at degree n."""
    out = {}
    for j in range(1, tt_orbital_count(n) + 1):
        rep = canonical_generator(
            parse_cycles(data.TT_ORBITS[j - 1][0], n))
        _, jb = classify_pair(base_point("t", n), beta(rep))
        out[j] = jb
    return out


# ---------------------------------------------------------------------------
# gamma: Majorana inner-product values on pair orbitals
# ---------------------------------------------------------------------------


@lru_cache(maxsize=None)
def gamma_table(pair_kind: str) -> tuple[Fraction, ...]:
    if pair_kind == "bb":
        return tuple(data.DIHEDRAL_PAIR_VALUE[t] for _, t in data.BB_ORBITS)
    if pair_kind == "ss":
        return tuple(data.DIHEDRAL_PAIR_VALUE[t] for _, t in data.SS_ORBITS)
    if pair_kind == "sb":
        return tuple(data.DIHEDRAL_PAIR_VALUE[t] for _, t in data.SB_ORBITS)
    if pair_kind == "st":
        return tuple(v for _, v in data.ST_ORBITS)
    if pair_kind == "bt":
        return tuple(v for _, v in data.BT_ORBITS)
    if pair_kind == "tt":
        return tuple(v for _, v, _ in data.TT_ORBITS)
    raise ValueError(f"unknown pair kind {pair_kind!r}")


def gamma(pair_kind: str, index: int) -> Fraction:
    return gamma_table(pair_kind)[index - 1]


def gamma_pair(u: Permutation, v: Permutation) -> Fraction:
    """The Majorana inner product of the vectors attached to u and v."""
    pair_kind, idx = classify_pair(u, v)
    return gamma(pair_kind, idx)


def gamma_vector(pair_kind: str, n: int = N_FULL) -> tuple[Fraction, ...]:
    """The gamma values over the orbitals present at degree n."""
    table = gamma_table(pair_kind)
    if pair_kind == "tt":
        return table[:tt_orbital_count(n)]
    return table


# ---------------------------------------------------------------------------
# Independent re-derivation of scalar-product table entries
# ---------------------------------------------------------------------------

# a 3-cycle-pair c factors as c = g*h with g, h of cycle type 2^2; then
#   (a_z, u_c) = (2^11/135) { (1/32)[2(a_z,a_g) + 2(a_z,a_h) + (a_z,a_ghg)]
#                              - (a_z * a_h, a_g) }
# provided a_z * a_h expands over class vectors: the pair (z, h) must
# generate a dihedral algebra of type 2A, 2B, 4B, or 6A (the 6A expansion
# brings in one 3-axis, looked up in the tables).

_EXPANDABLE = ("2A", "2B", "4B", "6A")


def _axis_pair_type(z: Permutation, h: Permutation) -> str:
    pair_kind, idx = classify_pair(z, h)
    if pair_kind == "bb":
        return data.BB_ORBITS[idx - 1][1]
    if pair_kind == "sb":
        return data.SB_ORBITS[idx - 1][1]
    if pair_kind == "ss":
        return data.SS_ORBITS[idx - 1][1]
    raise ValueError("not an involution pair")


def _dihedral_product_value(z: Permutation, h: Permutation,
                            g: Permutation) -> Fraction | None:
    """(a_z * a_h, a_g) via the dihedral expansion of a_z * a_h, or None if
    the pair (z, h) is not of expandable type."""
    shape = _axis_pair_type(z, h)
    if shape not in _EXPANDABLE:
        return None
    if shape == "2B":
        return Fraction(0)
    rho = z * h
    if shape == "2A":
        # a_z a_h = (1/8)(a_z + a_h - a_{zh})
        terms = [(Fraction(1, 8), z), (Fraction(1, 8), h),
                 (Fraction(-1, 8), rho)]
    elif shape == "4B":
        # a_z a_h = (1/64)(a_z + a_h - a_{zhz} - a_{hzh} + a_{(zh)^2})
        terms = [(Fraction(1, 64), z), (Fraction(1, 64), h),
                 (Fraction(-1, 64), h.conj(z)),            # z h z
                 (Fraction(-1, 64), z.conj(h)),            # h z h
                 (Fraction(1, 64), rho.power(2))]
    else:  # 6A
        # a_z a_h = (1/64)(a_z + a_h - a_{zhz} - a_{hzh} - a_{zhzhz}
        #                  - a_{hzhzh} + a_{(zh)^3}) + (45/2^11) u_{(zh)^2}
        terms = [(Fraction(1, 64), z), (Fraction(1, 64), h),
                 (Fraction(-1, 64), h.conj(z)),            # z h z
                 (Fraction(-1, 64), z.conj(h)),            # h z h
                 (Fraction(-1, 64), z.conj(h * z)),        # z h z h z
                 (Fraction(-1, 64), h.conj(z * h)),        # h z h z h
                 (Fraction(1, 64), rho.power(3))]
    total = Fraction(0)
    for coeff, x in terms:
        if x.cycle_type() not in ((2, 2), (2, 2, 2, 2, 2, 2)):
            return None
        total += coeff * gamma_pair(x, g)
    if shape == "6A":
        u = rho.power(2)
        if u.cycle_type() != (3, 3):
            return None
        total += Fraction(45, 2 ** 11) * gamma_pair(g, canonical_generator(u))
    return total


def _factorizations(c: Permutation):
    """Deterministic (g, h) pairs of cycle type 2^2 with g*h = c and (g, h)
    generating a dihedral algebra of type 3A."""
    for h in enumerate_class(c.degree, "b"):
        g = c * h  # h an involution, so g * h = c * h * h = c
        if g.cycle_type() != (2, 2):
            continue
        if _axis_pair_type(g, h) == "3A":
            yield g, h


def recompute_gamma_entry(kind: str, i: int) -> Fraction:
    """Re-derive table entry i of the (kind, t) scalar-product table from the
    factorization identity; raises if no expandable factorization exists."""
    if kind == "s":
        z = base_point("s")
        c = parse_cycles(data.ST_ORBITS[i - 1][0], 12)
    elif kind == "b":
        z = base_point("b")
        c = parse_cycles(data.BT_ORBITS[i - 1][0], 12)
    else:
        raise ValueError("kind must be 's' or 'b'")
    # hand-picked factorizations first (the expository choices), then search
    preferred = []
    if kind == "s" and i in data.ST_RECOMPUTE_FACTORS:
        gtxt, htxt = data.ST_RECOMPUTE_FACTORS[i]
        preferred.append((parse_cycles(gtxt, 12), parse_cycles(htxt, 12)))
    for g, h in itertools.chain(preferred, _factorizations(c)):
        if g * h != c or _axis_pair_type(g, h) != "3A":
            continue
        last = _dihedral_product_value(z, h, g)
        if last is None:
            continue
        val = (Fraction(2 ** 11, 135)
               * (Fraction(1, 32)
                  * (2 * gamma_pair(z, g) + 2 * gamma_pair(z, h)
                     + gamma_pair(z, h.conj(g)))
                  - last))
        return val
    raise ValueError(f"no expandable factorization found for ({kind}, {i})")


# ---------------------------------------------------------------------------
# Alternating-group refinements
# ---------------------------------------------------------------------------


@lru_cache(maxsize=None)
def alternating_cells(base_kind: str, target_kind: str):
    """Orbit partition of the degree-12 target class under the even part of
    the base stabilizer: (list of cells, point -> cell index)."""
    stab = base_stabilizer(base_kind)
    gens = stab.even_part_gens()
    points = enumerate_class(12, target_kind)
    return orbit_partition(gens, points,
                           lambda x, g: act_point(x, g, target_kind))


def alternating_refinement_report() -> dict:
    """Check the refined pair-orbit representatives: the starred pairs are
    inequivalent under the even stabilizer, and the extra refined tt orbit
    matches its S-orbital partner in table value."""
    report = {}
    _, idx_s = alternating_cells("s", "s")
    for i, (reps, _) in enumerate(data.SS_ORBITS, start=1):
        if len(reps) == 2:
            p1 = parse_cycles(reps[0], 12)
            p2 = parse_cycles(reps[1], 12)
            report[f"ss-{i}-splits"] = idx_s[p1] != idx_s[p2]
    _, idx_t = alternating_cells("t", "t")
    p30 = canonical_generator(parse_cycles(data.TT_ORBITS[29][0], 12))
    p32 = canonical_generator(parse_cycles(data.TT_ORBIT_32_REP, 12))
    report["tt-30-splits"] = idx_t[p30] != idx_t[p32]
    _, s_orbital = classify_pair(base_point("t"), p32)
    report["tt-32-same-s-orbital"] = (s_orbital == 30)
    return report


# ---------------------------------------------------------------------------
# Startup self-check
# ---------------------------------------------------------------------------


def self_check() -> list[str]:
    """Validate all configured representatives and sizes; returns a list of
    problems (empty when everything matches)."""
    problems = []
    for kind, size in EXPECTED_SIZES_12.items():
        got = len(enumerate_class(12, kind))
        if got != size:
            problems.append(f"class {kind}: size {got} != {size}")
    for pair_kind in ("bb", "ss", "sb", "st", "bt", "tt"):
        try:
            table = position_table(pair_kind)
        except RuntimeError as exc:
            problems.append(str(exc))
            continue
        reps = _orbital_reps(pair_kind)
        values = gamma_table(pair_kind)
        for i, rep in enumerate(reps, start=1):
            j = table[rep]
            if j != i and values[j - 1] != values[i - 1]:
                problems.append(f"{pair_kind}: representative {i} classifies "
                                f"as {j}")
    # sigma_i transporters of the tt table
    e1 = base_point("t")
    for i, (ci, _, sigma) in enumerate(data.TT_ORBITS, start=1):
        s = parse_cycles(sigma, 12)
        if e1.conj(s) != parse_cycles(ci, 12):
            problems.append(f"tt sigma_{i} does not map e_1 to e_{i}")
    # beta pairing at degree 12
    pairing = beta_pairing(12)
    expected = {j: j for j in range(1, 32)}
    for a, b in data.TT_BETA_SWAPS:
        expected[a], expected[b] = b, a
    if pairing != expected:
        problems.append(f"tt beta pairing mismatch: {pairing}")
    return problems

"""Permutations of {1..n} and small labeled permutation groups.

All group actions are right actions in exponential notation: x^(pq) = (x^p)^q,
and products are read left to right (p*q means "apply p, then q").
"""
from __future__ import annotations

import itertools
import re
from typing import Callable, Iterable, Iterator, Optional, Sequence


class Permutation:
    """An element of the symmetric group on {1, ..., n}, stored as an image tuple."""

    __slots__ = ("img",)

    def __init__(self, img: Iterable[int]):
        img = tuple(img)
        if sorted(img) != list(range(1, len(img) + 1)):
            raise ValueError(f"not a permutation of 1..{len(img)}: {img}")
        self.img = img

    # -- basics --------------------------------------------------------------

    @property
    def degree(self) -> int:
        return len(self.img)

    def __call__(self, x: int) -> int:
        return self.img[x - 1]

    def __mul__(self, other: "Permutation") -> "Permutation":
        if other.degree != self.degree:
            raise ValueError("degree mismatch")
        oimg = other.img
        return Permutation(oimg[i - 1] for i in self.img)

    def inv(self) -> "Permutation":
        out = [0] * self.degree
        for i, j in enumerate(self.img, start=1):
            out[j - 1] = i
        return Permutation(out)

    def conj(self, g: "Permutation") -> "Permutation":
        """self^g = g^-1 * self * g."""
        gimg = g.img
        out = [0] * self.degree
        for i, j in enumerate(self.img, start=1):
            out[gimg[i - 1] - 1] = gimg[j - 1]
        return Permutation(out)

    def power(self, k: int) -> "Permutation":
        result = identity(self.degree)
        base = self if k >= 0 else self.inv()
        for _ in range(abs(k)):
            result = result * base
        return result

    def is_identity(self) -> bool:
        return all(j == i + 1 for i, j in enumerate(self.img))

    def order(self) -> int:
        k, p = 1, self
        while not p.is_identity():
            p = p * self
            k += 1
        return k

    # -- cycle structure -----------------------------------------------------

    def cycles(self, include_fixed: bool = False) -> list[tuple[int, ...]]:
        seen = [False] * self.degree
        out = []
        for start in range(1, self.degree + 1):
            if seen[start - 1]:
                continue
            cyc = [start]
            seen[start - 1] = True
            x = self.img[start - 1]
            while x != start:
                cyc.append(x)
                seen[x - 1] = True
                x = self.img[x - 1]
            if len(cyc) > 1 or include_fixed:
                out.append(tuple(cyc))
        return out

    def cycle_type(self) -> tuple[int, ...]:
        """Nontrivial cycle lengths, sorted descending."""
        return tuple(sorted((len(c) for c in self.cycles()), reverse=True))

    def support(self) -> frozenset[int]:
        return frozenset(i + 1 for i, j in enumerate(self.img) if j != i + 1)

    def sign(self) -> int:
        return -1 if sum(len(c) - 1 for c in self.cycles()) % 2 else 1

    # -- dunder plumbing -----------------------------------------------------

    def __eq__(self, other) -> bool:
        return isinstance(other, Permutation) and self.img == other.img

    def __hash__(self) -> int:
        return hash(self.img)

    def __lt__(self, other: "Permutation") -> bool:
        return self.img < other.img

    def __repr__(self) -> str:
        return f"Permutation({cycle_string(self)!r}, n={self.degree})"

    def __str__(self) -> str:
        return cycle_string(self)


def identity(n: int) -> Permutation:
    return Permutation(range(1, n + 1))


_CYCLE_RE = re.compile(r"\(([^()]*)\)")


def parse_cycles(text: str, n: int) -> Permutation:
    """Parse disjoint-cycle notation like "(1,2)(3,4)" into a degree-n permutation."""
    text = text.strip()
    img = list(range(1, n + 1))
    if text in ("", "()", "id", "e"):
        return Permutation(img)
    consumed = _CYCLE_RE.sub("", text).strip()
    if consumed:
        raise ValueError(f"malformed cycle string: {text!r}")
    for body in _CYCLE_RE.findall(text):
        entries = [int(t) for t in re.split(r"[,\s]+", body.strip()) if t]
        if len(set(entries)) != len(entries):
            raise ValueError(f"repeated point in cycle: {body!r}")
        for x in entries:
            if not 1 <= x <= n:
                raise ValueError(f"point {x} out of range 1..{n}")
        for a, b in zip(entries, entries[1:] + entries[:1]):
            if img[a - 1] != a:
                raise ValueError(f"cycles not disjoint at point {a}")
            img[a - 1] = b
    return Permutation(img)


def cycle_string(p: Permutation) -> str:
    cycs = p.cycles()
    if not cycs:
        return "()"
    return "".join("(" + ",".join(map(str, c)) + ")" for c in cycs)


# -- conjugators ---------------------------------------------------------------


def _aligned_cycles(p: Permutation) -> list[tuple[int, ...]]:
    """All cycles (fixed points included), each rotated to start at its minimum,
    grouped deterministically by (length, starting point)."""
    out = []
    for c in p.cycles(include_fixed=True):
        k = c.index(min(c))
        out.append(c[k:] + c[:k])
    out.sort(key=lambda c: (len(c), c[0]))
    return out


def conjugator(p: Permutation, q: Permutation) -> Optional[Permutation]:
    """A deterministic g with p^g = q, or None if p, q are not conjugate."""
    if p.degree != q.degree:
        return None
    cp, cq = _aligned_cycles(p), _aligned_cycles(q)
    if [len(c) for c in cp] != [len(c) for c in cq]:
        return None
    img = [0] * p.degree
    for a, b in zip(cp, cq):
        for x, y in zip(a, b):
            img[x - 1] = y
    g = Permutation(img)
    assert p.conj(g) == q
    return g


def odd_centralizing_element(p: Permutation) -> Optional[Permutation]:
    """An odd permutation commuting with p, if the centralizer contains one."""
    n = p.degree
    cycs = p.cycles(include_fixed=True)
    for c in cycs:
        if len(c) % 2 == 0:  # an even-length cycle of p is itself odd and central
            img = list(range(1, n + 1))
            for a, b in zip(c, c[1:] + c[:1]):
                img[a - 1] = b
            return Permutation(img)
    by_len: dict[int, list[tuple[int, ...]]] = {}
    for c in cycs:
        by_len.setdefault(len(c), []).append(c)
    for length, group in sorted(by_len.items()):
        if length % 2 == 1 and len(group) >= 2:
            # swapping two equal odd-length cycles is a product of `length` transpositions
            a, b = group[0], group[1]
            img = list(range(1, n + 1))
            for x, y in zip(a, b):
                img[x - 1], img[y - 1] = y, x
            return Permutation(img)
    return None


def even_conjugator(p: Permutation, q: Permutation) -> Optional[Permutation]:
    """A g in the alternating group with p^g = q, or None if no such g exists."""
    g = conjugator(p, q)
    if g is None:
        return None
    if g.sign() == 1:
        return g
    c = odd_centralizing_element(p)
    if c is None:
        return None
    return c * g


# -- orbits ---------------------------------------------------------------------


def orbit(gens: Sequence[Permutation], seed, act: Callable) -> list:
    """BFS orbit of `seed` under the right action `act(point, g)`; deterministic order."""
    out = [seed]
    seen = {seed}
    frontier = [seed]
    while frontier:
        nxt = []
        for x in frontier:
            for g in gens:
                y = act(x, g)
                if y not in seen:
                    seen.add(y)
                    out.append(y)
                    nxt.append(y)
        frontier = nxt
    return out


def orbit_partition(gens: Sequence[Permutation], points: Iterable, act: Callable):
    """Partition `points` into orbits (list of lists, in first-seen order)."""
    remaining = dict.fromkeys(points)
    cells = []
    for p in remaining:
        if remaining[p] is not None:
            continue
        cell = orbit(gens, p, act)
        for x in cell:
            remaining[x] = len(cells)
        cells.append(cell)
    return cells, remaining


def group_elements(gens: Sequence[Permutation]) -> list[Permutation]:
    """All elements of the group generated by gens (use only for small groups)."""
    if not gens:
        return []
    return orbit(gens, identity(gens[0].degree), lambda x, g: x * g)


# -- labeled stabilizer groups ----------------------------------------------------


class GenSet:
    """A generating set with a label and known group order, validated on construction."""

    def __init__(self, label: str, gens: Sequence[Permutation], order: int,
                 check: Callable[[Permutation], bool]):
        for g in gens:
            if not check(g):
                raise ValueError(f"generator {g} fails the membership test for {label}")
        self.label = label
        self.gens = tuple(gens)
        self.order = order

    @property
    def degree(self) -> int:
        return self.gens[0].degree

    def even_part_gens(self) -> tuple[Permutation, ...]:
        """Generators of the index-<=2 subgroup of even elements."""
        evens = [g for g in self.gens if g.sign() == 1]
        odds = [g for g in self.gens if g.sign() == -1]
        extra = [a * b for a in odds for b in odds]
        extra += [b.inv() * a for a in odds for b in odds]
        return tuple(evens + extra)

    def __repr__(self):
        return f"GenSet({self.label}, order={self.order})"


def _sym_tail_gens(n: int, start: int) -> list[Permutation]:
    """Generators of the symmetric group on {start..n}, as degree-n permutations."""
    out = []
    if n - start >= 1:
        out.append(parse_cycles(f"({start},{start + 1})", n))
    if n - start >= 2:
        out.append(parse_cycles("(" + ",".join(map(str, range(start, n + 1))) + ")", n))
    return out


def base_bitransposition(n: int) -> Permutation:
    return parse_cycles("(1,2)(3,4)", n)


def base_matching(n: int = 12) -> Permutation:
    return parse_cycles("(1,2)(3,4)(5,6)(7,8)(9,10)(11,12)", n)


def base_threecycle_pair(n: int) -> Permutation:
    return parse_cycles("(1,2,3)(4,5,6)", n)


def centralizer_bitransposition(n: int, alternate: bool = False) -> GenSet:
    """C_{S_n}((1,2)(3,4)), order 8*(n-4)!."""
    r1 = base_bitransposition(n)
    words = ["(1,2)", "(3,4)", "(1,3)(2,4)"] if not alternate else \
        ["(3,4)", "(1,3)(2,4)", "(1,4)(2,3)", "(1,2)"]
    gens = [parse_cycles(w, n) for w in words] + _sym_tail_gens(n, 5)
    order = 8
    for k in range(2, n - 3):
        order *= k
    return GenSet(f"C(S{n}, (1,2)(3,4))", gens, order, lambda g: r1.conj(g) == r1)


def centralizer_matching(n: int = 12, alternate: bool = False) -> GenSet:
    """C_{S_12}(s1) for the fixed-point-free involution s1, order 2^6 * 6!."""
    s1 = base_matching(n)
    words = ["(1,2)", "(1,3)(2,4)", "(1,3,5,7,9,11)(2,4,6,8,10,12)"]
    if alternate:
        words = ["(11,12)", "(1,3)(2,4)", "(3,5)(4,6)", "(5,7)(6,8)",
                 "(7,9)(8,10)", "(9,11)(10,12)", "(1,2)"]
    gens = [parse_cycles(w, n) for w in words]
    return GenSet(f"C(S{n}, 2^6)", gens, 2 ** 6 * 720, lambda g: s1.conj(g) == s1)


def normalizer_threecycle_pair(n: int) -> GenSet:
    """N_{S_n}(<(1,2,3)(4,5,6)>), order 36*(n-6)!."""
    e1 = base_threecycle_pair(n)
    e1inv = e1.inv()
    gens = [parse_cycles(w, n) for w in ["(1,2,3)", "(2,3)(5,6)", "(1,4)(2,5)(3,6)"]]
    gens += _sym_tail_gens(n, 7)
    order = 36
    for k in range(2, n - 5):
        order *= k
    return GenSet(f"N(S{n}, <3.3>)", gens, order,
                  lambda g: e1.conj(g) in (e1, e1inv))


def normalizer_small_threecycle_pair(n: int) -> GenSet:
    """N_{S_6}(<(1,2,3)(4,5,6)>) embedded in degree n (no tail), order 36."""
    e1 = base_threecycle_pair(n)
    e1inv = e1.inv()
    gens = [parse_cycles(w, n) for w in ["(1,2,3)", "(2,3)(5,6)", "(1,4)(2,5)(3,6)"]]
    return GenSet(f"N(S6, <3.3>) in S{n}", gens, 36,
                  lambda g: e1.conj(g) in (e1, e1inv))

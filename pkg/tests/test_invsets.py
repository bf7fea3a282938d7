"""Involution-set and pair-orbit classification oracles."""

from fractions import Fraction as F

from majrep import data, invsets
from majrep.perms import parse_cycles


def test_class_sizes_small_degree_by_formula():
    # 3 matchings on 4 points; 4!/(2^2 2!)=3 bitranspositions at n=4
    assert len(invsets.enumerate_class(4, "b")) == 3
    # 3-cycle pairs at n=6: (6!/(3*3*2)) * ... = 40 canonical generators
    t6 = invsets.enumerate_class(6, "t")
    assert len(t6) == len(set(t6))


def test_kind_of_and_beta_involution():
    b = parse_cycles("(1,2)(3,4)", 12)
    assert invsets.kind_of(b) == "b"
    t = invsets.canonical_generator(parse_cycles("(1,2,3)(4,5,6)", 12))
    assert invsets.kind_of(t) == "t"
    bt = invsets.beta(t)
    assert bt != t and invsets.beta(bt) == t


def test_classify_pair_symmetric_for_same_kind():
    u = parse_cycles("(1,2)(3,4)", 12)
    v = parse_cycles("(1,3)(2,5)", 12)
    ku, iu = invsets.classify_pair(u, v)
    kv, iv = invsets.classify_pair(v, u)
    assert (ku, iu) == (kv, iv)


def test_suborbit_cells_partition_the_class():
    cells = invsets.suborbit_cells(8, "b", "b")
    total = sum(len(c) for c in cells.values())
    assert total == len(invsets.enumerate_class(8, "b"))
    # valencies agree with the cell sizes
    vals = invsets.valencies(8, "b", "b")
    assert {lab: len(c) for lab, c in cells.items()} == vals


def test_gamma_pair_matches_table_on_base_orbitals():
    base = invsets.base_point("s")
    for rep_text in data.R_BASIS_REPS[:2]:
        p = parse_cycles(rep_text, 12)
        kind, idx = invsets.classify_pair(base, p)
        assert invsets.gamma_pair(base, p) == invsets.gamma(kind, idx)


def test_self_check_clean():
    assert invsets.self_check() == []

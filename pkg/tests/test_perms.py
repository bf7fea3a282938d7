"""Permutation arithmetic oracles."""

from majrep.perms import (identity, parse_cycles, conjugator, group_elements,
                          _sym_tail_gens)


def test_parse_and_cycle_type():
    p = parse_cycles("(1,2,3)(4,5)", 6)
    assert p.cycle_type() == (3, 2)
    assert p.order() == 6
    assert p.sign() == -1


def test_inverse_and_involution():
    p = parse_cycles("(1,4)(2,5)(3,6)", 6)
    assert p * p.inv() == identity(6)
    assert p.power(2) == identity(6)


def test_conjugation_relabels_cycles():
    p = parse_cycles("(1,2,3)", 5)
    g = parse_cycles("(1,4)(2,5)", 5)
    assert p.conj(g) == parse_cycles("(4,5,3)", 5)


def test_conjugator_finds_witness():
    a = parse_cycles("(1,2)(3,4)", 6)
    b = parse_cycles("(2,5)(4,6)", 6)
    g = conjugator(a, b)
    assert g is not None and a.conj(g) == b


def test_group_elements_symmetric_group():
    gens = _sym_tail_gens(4, 1)
    elems = group_elements(gens)
    assert len(elems) == 24
    assert sum(1 for g in elems if g.sign() == 1) == 12

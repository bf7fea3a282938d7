"""Specht module and twisted hook-module oracles."""

from fractions import Fraction as F

from majrep import invsets, spechtmod
from majrep.perms import parse_cycles


def test_dim_specht_hook_length_values():
    assert spechtmod.dim_specht((12,)) == 1
    assert spechtmod.dim_specht((11, 1)) == 11
    assert spechtmod.dim_specht((10, 2)) == 54
    assert spechtmod.dim_specht((8, 2, 2)) == 616
    assert spechtmod.dim_specht((7, 1, 1, 1, 1, 1)) == 462
    assert spechtmod.dim_specht((2, 2, 2, 2, 2, 2)) == 132
    assert spechtmod.dim_specht((6, 6)) == 132
    # conjugation preserves dimension
    assert spechtmod.dim_specht(spechtmod.conjugate_partition((8, 2, 2))) \
        == 616


def test_polytabloid_is_nonzero_and_integral():
    v = spechtmod.polytabloid([(1, 2, 3), (4,), (5,)])
    assert v and all(x.denominator == 1 for x in v.values())


def test_kappa_symmetric_positive():
    v = spechtmod.polytabloid([(1, 2), (3, 4)])
    w = spechtmod.polytabloid([(1, 3), (2, 4)])
    assert spechtmod.kappa(v, v) > 0
    assert spechtmod.kappa(v, w) == spechtmod.kappa(w, v)


def test_act_vec_twisted_sign():
    v = spechtmod.polytabloid([(1, 2, 3), (4,), (5,)])
    odd = parse_cycles("(1,2)", 5)
    assert spechtmod.act_vec(spechtmod.act_vec(v, odd, twisted=True), odd,
                             twisted=True) == v


def test_zeta_normalization_and_beta_oddness():
    n = 8
    base = invsets.base_point("t", n)
    w = spechtmod.w_vector(n)
    assert spechtmod.zeta_project(base, n) == w
    img = spechtmod.zeta_project(invsets.beta(base), n)
    assert img == {k: -c for k, c in w.items()}


def test_zeta_equivariance_sample():
    n = 8
    p = invsets.canonical_generator(parse_cycles("(1,2,3)(4,5,6)", n))
    g = parse_cycles("(1,5)(2,7,3)", n)
    lhs = spechtmod.zeta_project(
        invsets.canonical_generator(p.conj(g)), n)
    rhs = spechtmod.act_vec(spechtmod.zeta_project(p, n), g, twisted=True)
    assert lhs == rhs

"""Dihedral axial algebra oracles: closed-form values cross-checked by hand."""

from fractions import Fraction as F

from majrep import nsalgebra


def test_types_registry():
    assert nsalgebra.TYPES == ("1A", "2A", "2B", "3A", "3C", "4A", "4B",
                               "5A", "6A")


def test_2a_product_and_form():
    alg = nsalgebra.build("2A")
    prod = alg.product("a0", "a1")
    assert prod == {"a0": F(1, 8), "a1": F(1, 8), "rho": F(-1, 8)}
    assert alg.scalar("a0", "a1") == F(1, 8)
    assert alg.scalar("a0", "rho") == F(1, 8)


def test_2b_orthogonal():
    alg = nsalgebra.build("2B")
    assert alg.product("a0", "a1") == {}
    assert alg.scalar("a0", "a1") == 0


def test_3a_u_norm():
    alg = nsalgebra.build("3A")
    assert alg.scalar("u", "u") == F(8, 5)


def test_axioms_2a_and_3a_fast():
    for name in ("2A", "3A"):
        assert nsalgebra.verify_axioms(nsalgebra.build(name),
                                       samples=5) == []


def test_sigma_vector_is_u_shift():
    v = nsalgebra.sigma_vector()
    alg = nsalgebra.build("3A")
    # sigma = (2*45/2^11)(a0+a1+a2) - hand-checkable u coefficient
    assert v.get("u") == alg.product("a0", "a1").get("u")

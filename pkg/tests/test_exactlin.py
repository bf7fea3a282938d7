"""Exact linear algebra oracles against hand-checkable instances."""

from fractions import Fraction as F

import pytest

from majrep.exactlin import (vec_add, vec_dot, vec_proportional, sparse_rank,
                             sparse_express, mat_det, mat_rank,
                             mat_solve_affine)


def test_vec_add_drops_zeros():
    u = {"a": F(1), "b": F(2)}
    v = {"a": F(-1), "c": F(3)}
    assert vec_add(u, v) == {"b": F(2), "c": F(3)}


def test_vec_dot_and_proportional():
    u = {"x": F(2), "y": F(-4)}
    assert vec_dot(u, {"x": F(1, 2), "z": F(7)}) == F(1)
    assert vec_proportional(u, {"x": F(1), "y": F(-2)}) == F(2)
    assert vec_proportional(u, {"x": F(1), "y": F(2)}) is None


def test_sparse_rank_with_dependence():
    vecs = [{"a": F(1)}, {"b": F(1)}, {"a": F(2), "b": F(3)},
            {"a": F(1), "b": F(1), "c": F(1)}]
    assert sparse_rank(vecs) == 3
    assert sparse_rank(vecs, stop_at=2) == 2


def test_sparse_express_solves_and_detects_nonmembers():
    basis = [{"a": F(1), "b": F(1)}, {"b": F(1), "c": F(1)}]
    assert sparse_express({"a": F(2), "b": F(5), "c": F(3)}, basis) \
        == [F(2), F(3)]
    assert sparse_express({"a": F(1)}, basis) is None
    with pytest.raises(ValueError):
        sparse_express({}, [{"a": F(1)}, {"a": F(2)}])


def test_mat_det_known_values():
    assert mat_det([[F(1), F(2)], [F(3), F(4)]]) == F(-2)
    assert mat_det([[F(1), F(2), F(3)],
                    [F(4), F(5), F(6)],
                    [F(7), F(8), F(9)]]) == 0
    # Hilbert 3x3 determinant
    h = [[F(1, i + j + 1) for j in range(3)] for i in range(3)]
    assert mat_det(h) == F(1, 2160)


def test_mat_rank_and_affine_solve():
    assert mat_rank([[F(1), F(2)], [F(2), F(4)], [F(0), F(1)]]) == 2
    part, null = mat_solve_affine([[F(1), F(1)]], [F(3)])
    assert part[0] + part[1] == F(3)
    assert len(null) == 1
    assert mat_solve_affine([[F(0), F(0)]], [F(1)]) is None

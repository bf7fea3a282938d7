"""Eigenmatrix machinery oracles at a degree small enough to be fast."""

from fractions import Fraction as F

from majrep import data, invsets, spechtmod, spectral


def test_valency_row_sums_to_class_size():
    for n in (8, 10):
        assert sum(spectral.valency_row(n, "t")) \
            == len(invsets.enumerate_class(n, "t"))


def test_configured_valencies_match_computed():
    for n, expected in data.TT_VALENCIES.items():
        got = spectral.valency_row(n, "t")
        for g, e in zip(got, expected):
            if e is not None:
                assert g == e


def test_eigen_residuals_reject_perturbations():
    row = tuple(F(x) for x in data.SS_EIGENMATRIX[0])
    assert spectral.eigen_residuals(row, 12, "s")
    bad = list(row)
    bad[3] += 1
    assert not spectral.eigen_residuals(tuple(bad), 12, "s")


def test_row_orthogonality_and_dimensions_ss():
    rows = [tuple(F(x) for x in r) for r in data.SS_EIGENMATRIX]
    dims = [d for _, d in data.SS_EIGENMATRIX_PARTITIONS]
    for i, r in enumerate(rows):
        assert spectral.dim_from_row(r, 12, "s") == dims[i]
        for r2 in rows[i + 1:]:
            assert spectral.rows_orthogonal(r, r2, 12, "s")


def test_beta_parity_of_odd_rows():
    rows = spectral.tt_beta_odd_rows(8)
    for lam, row in rows.items():
        assert spectral.beta_parity(row, 8) == -1


def test_tt_rows_match_configured_columns_at_8():
    rows = spectral.tt_beta_odd_rows(8)
    for (n, lam), x in data.TT_EXPECTED_X.items():
        if n != 8:
            continue
        assert rows[lam] == spectral.expected_tt_row(n, lam)

"""Light checks of the headline assemblies (the full suites run in
test_acceptance.py)."""

from majrep import data, decomp


def test_shape_scan_unique_admissible():
    results = decomp.shape_scan()
    admissible = [r for r in results if r["admissible"]]
    assert len(admissible) == 1
    assert admissible[0]["candidate"] == tuple(data.SHAPE_SCAN_ADMISSIBLE)
    assert admissible[0]["values"] == [0, 0]


def test_dimension_report_totals():
    rep = decomp.dimension_report()
    assert all(v["ok"] for v in rep["per_n"].values())
    assert rep["dim_V"] == 3960 and rep["dim_V_ok"]
    assert rep["a8_ok"] and rep["a8_identity"][2] == 476


def test_bitransposition_diagonal_pair_is_singular():
    rep = decomp.bitransposition_diagonal_test()
    assert rep["det"] == 0
    assert rep["matrix"][0][0] != 0 and rep["matrix"][1][1] != 0

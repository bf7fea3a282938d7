"""Acceptance gate: ten exact criteria, one pass/fail line each.

Every comparison is exact rational arithmetic (tolerance 0); the only sampled
check is the deterministic 100-sample square inequality in criterion 1.
"""

from fractions import Fraction as F

from majrep import data, decomp, invsets, nsalgebra, spechtmod, spectral


def _line(num, ok, detail=""):
    print(f"criterion {num}: {'PASS' if ok else 'FAIL'} {detail}")
    assert ok, f"criterion {num} failed: {detail}"


def test_criterion_1_dihedral_algebra_axioms():
    failures = {}
    for name in nsalgebra.TYPES:
        fails = nsalgebra.verify_axioms(nsalgebra.build(name), samples=100)
        if fails:
            failures[name] = fails
    _line(1, not failures, failures or "nine algebras, all axioms, "
          "100 deterministic samples each")


def test_criterion_2_class_sizes_and_valencies():
    sizes = {k: len(invsets.enumerate_class(12, k))
             for k in data.CLASS_SIZES_12}
    ok = sizes == data.CLASS_SIZES_12
    mismatches = []
    for n, expected in sorted(data.TT_VALENCIES.items()):
        got = spectral.valency_row(n, "t")
        for i, (g, e) in enumerate(zip(got, expected)):
            if e is not None and g != e:
                mismatches.append((n, i, g, e))
    total12 = sum(spectral.valency_row(12, "t"))
    ok = ok and not mismatches and total12 == 18480
    _line(2, ok, f"sizes={sizes} valency mismatches={mismatches} "
          f"sum k_i(12)={total12}")


def test_criterion_3_eigenmatrices():
    # 11x11 involution-class eigenmatrix: computed joint eigenrows must
    # coincide with the configured table (ss_rows raises otherwise)
    ss = decomp.ss_rows()
    ok = len(ss) == 11
    # configured 3-cycle-pair columns, including both multiplicity-two
    # solutions; the one defective configured column must be recorded as a
    # recomputed override
    overrides = []
    for n in (8, 11, 12):
        rows = spectral.tt_beta_odd_rows(n)
        for (m, lam), _ in data.TT_EXPECTED_X.items():
            if m != n:
                continue
            expected = spectral.expected_tt_row(n, lam)
            if (n, lam) in spectral.TT_ROW_OVERRIDES:
                overrides.append((n, lam))
                configured, derived = spectral.TT_ROW_OVERRIDES[(n, lam)]
                ok = ok and rows[lam] == derived \
                    and spectral.eigen_residuals(derived, n, "t") \
                    and not spectral.eigen_residuals(configured, n, "t")
            else:
                ok = ok and rows[lam] == expected
        for nn, x in data.TT_MULT2_SOLUTIONS.items():
            if nn == n:
                ok = ok and rows[(n - 4, 2, 2)] == spectral._row_from_x(x, n)
    ok = ok and overrides == [(12, (7, 1, 1, 1, 1, 1))]
    # exact row orthogonality for the multiplicity-free rows
    ss_list = list(ss.items())
    for i, (lam, row) in enumerate(ss_list):
        ok = ok and spectral.dim_from_row(row, 12, "s") \
            == spechtmod.dim_specht(lam)
        for _, row2 in ss_list[i + 1:]:
            ok = ok and spectral.rows_orthogonal(row, row2, 12, "s")
    bb = decomp.bb_rows()  # raises if residuals or dimensions fail
    ok = ok and len(bb) == 6
    _line(3, ok, f"one recomputed-and-logged column: {overrides}")


def test_criterion_4_projection_vectors(intersection_report):
    vecs = intersection_report["vectors"]
    named = ["s-(8, 2, 2)", "b-(8, 2, 2)", "s-(8, 4)", "b-(8, 4)",
             "b-bitrans-11", "b-bitrans-10"]
    ok = all(vecs[k]["ok"] for k in named) \
        and all(v["ok"] for v in vecs.values())
    _line(4, ok, {k: v["ok"] for k, v in vecs.items()})


def test_criterion_5_radicals(radical_reports):
    ok = True
    detail = []
    for n, rep in radical_reports.items():
        if n == 12:
            for kind in ("s", "b"):
                sub = rep[kind]
                ok = ok and sub["zeros"] == sorted(
                    tuple(z) for z in sub["expected_zeros"])
                ok = ok and all(v >= 0 for v in sub["values"].values())
        sub = rep["t_minus"]
        ok = ok and sub["zeros"] == sorted(
            tuple(z) for z in sub["expected_zeros"])
        ok = ok and not sub["negatives"]
        detail.append((n, sub["zeros"]))
    _line(5, ok, f"zero-form constituents per degree: {detail}")


def test_criterion_6_shape_uniqueness():
    results = decomp.shape_scan()
    admissible = [r for r in results if r["admissible"]]
    ok = (len(results) == 8 and len(admissible) == 1
          and admissible[0]["candidate"] == tuple(data.SHAPE_SCAN_ADMISSIBLE)
          and admissible[0]["values"] == [0, 0])
    _line(6, ok, f"admissible: {[r['candidate'] for r in admissible]} "
          f"values {admissible[0]['values'] if admissible else None}")


def test_criterion_7_intersection_determinants(intersection_report):
    mats = intersection_report["matrices"]
    ok = len(mats) == 8 and all(v["ok"] for v in mats.values())
    dets = {k: v["det"] for k, v in mats.items()}
    ok = ok and all(d == 0 for k, d in dets.items() if k != "bt-10") \
        and dets["bt-10"] == F(43904, 9)
    corrected = {k: v["corrected_entries"] for k, v in mats.items()
                 if v["corrected_entries"]}
    _line(7, ok, f"dets={dets} corrected entries (logged): {corrected}")


def test_criterion_8_dimensions():
    rep = decomp.dimension_report()
    ok = (all(v["ok"] for v in rep["per_n"].values()) and rep["dim_V_ok"]
          and rep["a8_ok"])
    totals = {n: v["total"] for n, v in rep["per_n"].items()}
    ok = ok and totals == {8: 462, 9: 1008, 10: 2052, 11: 3498, 12: 3498} \
        and rep["dim_V"] == 3960 and rep["a8_identity"] == (462, 14, 476)
    _line(8, ok, f"totals={totals} dim V={rep['dim_V']} "
          f"a8: {rep['a8_identity']}")


def test_criterion_9_spanning_and_dependence(dipendenti_reports,
                                             udependent_report):
    ok = all(dipendenti_reports[n]["dim_ok"] for n in (8, 9, 10))
    dims = {n: dipendenti_reports[n]["full_rank"] for n in (8, 9, 10)}
    ok = ok and dims == {8: 21, 9: 56, 10: 126}
    ok = ok and dipendenti_reports[8]["relations_ok"] == [True, True]
    ok = ok and udependent_report["ok_at_support_degree"]
    listed = {n: dipendenti_reports[n]["listed_rank"] for n in (8, 9, 10)}
    _line(9, ok,
          f"module dims {dims}; configured list ranks {listed} "
          "(the degree-9/10 lists are rank-deficient as configured, logged); "
          "dependence relations verified at the support degree; nonzero "
          "projected defect at degrees "
          f"{sorted(set(udependent_report['higher_degree_failures']))} "
          "(logged as a source discrepancy)")


def test_criterion_10_four_axis_gram():
    rep = decomp.appendix_gram_check()
    ok = (rep["f_RR_ok"] and rep["f_axis_R_ok"] and rep["axes_in_class"]
          and rep["opposite_axes_zero"])
    detail = (f"f(R,R)={rep['f_RR']} axis pairings={rep['f_axis_R']}")
    if not ok and "first_mismatch" in rep:
        detail += f" first mismatch: {rep['first_mismatch']}"
    _line(10, ok, detail)

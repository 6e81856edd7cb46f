"""Angular-operator coordinates on the subspace-pair realizations.

Fix a member pair (X, Y).  A nearby point (R1, R2) is encoded by the
pair of matrices (M, N) whose graphs the subspaces are:

    R1 = { x + Mx : x in X },      R2 = { y + Ny : y in Y }.

The group then acts by matrix fractional-linear maps, and the defining
conditions of each series family become linear symmetry conditions on M
and N:

    isotropy      B(Mx, x') + B(x, Mx') = 0
    orthogonality D(x, Ny) + D(Mx, y) = 0
    exchange      N = J M J^{-1}

together with the transversality requirement that 1 - NM be invertible.
"""

from dataclasses import dataclass

from .rings import NCOMP, Scalar, TypeMismatch, qnum
from .linalg import (Matrix, Singular, hstack, invert, is_invertible, rank,
                     solve)
from .subspaces import Subspace
from . import spaces


class NotTransverse(Exception):
    """The subspace meets the complementary factor of the decomposition."""


class ShapeViolation(Exception):
    """Coordinates handed to from_coords break a defining condition."""


class ChartBoundary(Exception):
    """The group element pushed the point out of this chart."""


@dataclass(frozen=True, eq=False)
class Chart:
    entry: object
    x: Subspace
    y: Subspace

    def __post_init__(self):
        if not spaces.membership(self.entry, self.x, self.y):
            raise TypeMismatch("chart base pair is not a member point")

    @property
    def entry_id(self):
        return self.entry.id


@dataclass(frozen=True)
class AngularCoords:
    m: Matrix
    n: Matrix


def base_chart(entry) -> Chart:
    return Chart(entry, entry.base_q1, entry.base_q2)


def _split_coords(bx: Matrix, by: Matrix, vecs: Matrix):
    """Coordinates of columns of vecs in the basis (bx | by), split."""
    sol = solve(hstack(bx, by), vecs)
    k = bx.cols
    top = sol.submatrix(range(k), range(sol.cols))
    bottom = sol.submatrix(range(k, sol.rows), range(sol.cols))
    return top, bottom


def angular_operator(r: Subspace, x: Subspace, y: Subspace) -> Matrix:
    """The matrix L with r = graph of L over x, in the stored bases."""
    if r.ambient_dim != x.ambient_dim or r.ring != x.ring:
        raise TypeMismatch("subspace and decomposition do not match")
    if x.dim + y.dim != x.ambient_dim or r.dim != x.dim:
        raise TypeMismatch("need V = X + Y and dim R = dim X")
    p, q = _split_coords(x.basis, y.basis, r.basis)
    try:
        p_inv = invert(p)
    except Singular:
        raise NotTransverse("subspace meets the complementary factor")
    return q @ p_inv


def to_coords(chart: Chart, pt) -> AngularCoords:
    m = angular_operator(pt.q1, chart.x, chart.y)
    n = angular_operator(pt.q2, chart.y, chart.x)
    return AngularCoords(m, n)


def _pair_matrix(form, s: Matrix, t: Matrix) -> Matrix:
    """Matrix of form values, entry [a, b] = B(s_b, t_a)."""
    return form.twist(t) @ form.gram @ s


def _isotropy_holds(form, bx: Matrix, by: Matrix, m: Matrix) -> bool:
    graph_part = by @ m
    total = _pair_matrix(form, graph_part, bx) + _pair_matrix(form, bx,
                                                              graph_part)
    return total.is_zero()


def _exchange_holds(semi, bx: Matrix, by: Matrix, m: Matrix,
                    n: Matrix) -> bool:
    """N = J M J^{-1}, checked as: J maps graph(M) onto graph(N) exactly."""
    graph_m = bx + by @ m
    image = semi.matrix @ (graph_m.conj() if semi.antilinear else graph_m)
    p, q = _split_coords(bx, by, image)
    return is_invertible(q) and p == n @ q


def _orthogonality_holds(form_d, bx: Matrix, by: Matrix, m: Matrix,
                         n: Matrix) -> bool:
    t1 = _pair_matrix(form_d, bx, bx @ n)
    t2 = _pair_matrix(form_d, by @ m, by)
    return (t1 + t2).is_zero()


def shape_report(chart: Chart, coords: AngularCoords) -> dict:
    """Pass/fail for each condition the entry's family imposes."""
    entry = chart.entry
    bx, by = chart.x.basis, chart.y.basis
    m, n = coords.m, coords.n
    fam = entry.list_no
    eye = Matrix.identity(entry.ring, m.cols)
    report = {"transversal": is_invertible(eye - n @ m)}
    if fam in (1, 2):
        report["isotropy_M"] = _isotropy_holds(entry.form_B, bx, by, m)
    if fam == 2:
        report["isotropy_N"] = _isotropy_holds(entry.form_B, by, bx, n)
    if fam in (1, 3):
        report["exchange"] = _exchange_holds(entry.semiinv_J, bx, by, m, n)
    if fam in (1, 4):
        report["orthogonality"] = _orthogonality_holds(entry.form_D, bx, by,
                                                       m, n)
    return report


def from_coords(chart: Chart, coords: AngularCoords):
    """Rebuild the subspace pair; inverse of to_coords on its image."""
    entry = chart.entry
    bx, by = chart.x.basis, chart.y.basis
    m, n = coords.m, coords.n
    if m.ring != entry.ring or n.ring != entry.ring:
        raise TypeMismatch("coordinate ring mismatch")
    if m.rows != by.cols or m.cols != bx.cols or n.rows != bx.cols \
            or n.cols != by.cols:
        raise TypeMismatch("coordinate shapes do not fit the chart")
    report = shape_report(chart, coords)
    bad = sorted(name for name, ok in report.items() if not ok)
    if bad:
        raise ShapeViolation("conditions failed: %s" % ", ".join(bad))
    q1 = Subspace(bx + by @ m)
    q2 = Subspace(by + bx @ n)
    if not spaces.membership(entry, q1, q2):
        raise ShapeViolation("rebuilt pair fails membership")
    return spaces.SpacePoint(entry.id, q1, q2)


def _blocks(chart: Chart, g: Matrix):
    bx, by = chart.x.basis, chart.y.basis
    a, c = _split_coords(bx, by, g @ bx)
    b, d = _split_coords(bx, by, g @ by)
    return a, b, c, d


def act_on_operator(chart: Chart, g: Matrix, r: Matrix) -> Matrix:
    """The fractional-linear action R -> (C + DR)(A + BR)^{-1}."""
    a, b, c, d = _blocks(chart, g)
    try:
        front = invert(a + b @ r)
    except Singular:
        raise ChartBoundary("image left the chart")
    return (c + d @ r) @ front


def act_on_coords(chart: Chart, g: Matrix, coords: AngularCoords) \
        -> AngularCoords:
    """Both angular operators moved by g; mirrors the subspace action."""
    a, b, c, d = _blocks(chart, g)
    try:
        new_m = (c + d @ coords.m) @ invert(a + b @ coords.m)
        new_n = (b + a @ coords.n) @ invert(d + c @ coords.n)
    except Singular:
        raise ChartBoundary("image left the chart")
    return AngularCoords(new_m, new_n)


def _unit_matrix(ring, rows, cols, i, j, comp):
    parts = [0] * NCOMP[ring]
    parts[comp] = 1
    unit = Scalar(ring, tuple(parts))
    zero = Scalar(ring, tuple([0] * NCOMP[ring]))
    body = [[unit if (r == i and c == j) else zero for c in range(cols)]
            for r in range(rows)]
    return Matrix.from_rows(ring, body)


def _isotropy_param_count(form, bx: Matrix, by: Matrix) -> int:
    """Real dimension of { M : graph of M over X is B-isotropic }."""
    ring = form.ring
    comps = NCOMP[ring]
    k, l = bx.cols, by.cols
    columns = []
    for i in range(l):
        for j in range(k):
            for comp in range(comps):
                unit = _unit_matrix(ring, l, k, i, j, comp)
                graph_part = by @ unit
                cond = _pair_matrix(form, graph_part, bx) \
                    + _pair_matrix(form, bx, graph_part)
                flat = []
                for r in range(cond.rows):
                    for parts in cond.row_tuples(r):
                        flat.extend(parts)
                columns.append(flat)
    unknowns = comps * k * l
    rows = [[Scalar("R", (columns[c][r],)) for c in range(unknowns)]
            for r in range(len(columns[0]))]
    system = Matrix.from_rows("R", rows)
    return unknowns - rank(system)


def grassmannian_dim(entry) -> int:
    """Real dimension of the target grassmannian, counted in one chart."""
    bx = entry.base_q1.basis
    by = entry.base_q2.basis
    comps = NCOMP[entry.ring]
    fam = entry.list_no
    if fam == 1:
        return _isotropy_param_count(entry.form_B, bx, by)
    if fam == 2:
        return _isotropy_param_count(entry.form_B, bx, by) \
            + _isotropy_param_count(entry.form_B, by, bx)
    if fam == 5:
        return 2 * comps * bx.cols * by.cols
    return comps * bx.cols * by.cols

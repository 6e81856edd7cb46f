"""Exact matrix algebra over R, C and H.

Matrices are immutable, row-major, with entries stored as the raw component
tuples from rings.py.  Row operations multiply on the left, so Gaussian
elimination, solve and inversion are valid over the noncommutative
quaternions as well; column operations (used for canonical subspace bases)
multiply on the right.

Determinants and characteristic polynomials are only defined here over R
and C.  Quaternionic matrices go through complexify() first, which doubles
the size and lands in C.
"""

from __future__ import annotations

from .rings import (
    ADD,
    CONJ,
    INV,
    IS_ZERO,
    MUL,
    NCOMP,
    NEG,
    ONE,
    Q0,
    Q1,
    SUB,
    ZERO,
    C,
    H,
    R,
    Scalar,
    TypeMismatch,
    check_ring,
    from_rational,
    qnum,
)


class Singular(Exception):
    """A matrix that had to be invertible is not."""


def _as_parts(ring, v):
    """Coerce an entry (Scalar, component tuple, int, str, rational) to a tuple."""
    if isinstance(v, Scalar):
        if v.ring != ring:
            raise TypeMismatch("entry over %s in a %s matrix" % (v.ring, ring))
        return v.parts
    if isinstance(v, tuple):
        if len(v) != NCOMP[ring]:
            raise TypeMismatch(
                "component tuple of length %d for ring %s" % (len(v), ring)
            )
        return tuple(qnum(p) for p in v)
    return from_rational(ring, v)


class Matrix:
    __slots__ = ("ring", "rows", "cols", "_e")

    def __init__(self, ring, rows, cols, entries):
        check_ring(ring)
        rows = int(rows)
        cols = int(cols)
        if rows < 0 or cols < 0:
            raise TypeMismatch("negative matrix shape")
        flat = []
        # Accept either a flat list of rows*cols entries or a list of rows.
        if len(entries) == rows and all(
            isinstance(r_, list) for r_ in entries
        ):
            for r_ in entries:
                if len(r_) != cols:
                    raise TypeMismatch("ragged rows")
                for v in r_:
                    flat.append(_as_parts(ring, v))
        else:
            if len(entries) != rows * cols:
                raise TypeMismatch(
                    "need %d entries, got %d" % (rows * cols, len(entries))
                )
            for v in entries:
                flat.append(_as_parts(ring, v))
        object.__setattr__(self, "ring", ring)
        object.__setattr__(self, "rows", rows)
        object.__setattr__(self, "cols", cols)
        object.__setattr__(self, "_e", tuple(flat))

    def __setattr__(self, name, value):
        raise AttributeError("Matrix is immutable")

    # -- builders ----------------------------------------------------------

    @staticmethod
    def zeros(ring, rows, cols):
        z = ZERO[ring]
        return _mk(ring, rows, cols, [z] * (rows * cols))

    @staticmethod
    def identity(ring, n):
        z, o = ZERO[ring], ONE[ring]
        e = [z] * (n * n)
        for i in range(n):
            e[i * n + i] = o
        return _mk(ring, n, n, e)

    @staticmethod
    def diagonal(ring, diag):
        n = len(diag)
        z = ZERO[ring]
        e = [z] * (n * n)
        for i, v in enumerate(diag):
            e[i * n + i] = _as_parts(ring, v)
        return _mk(ring, n, n, e)

    @staticmethod
    def from_rows(ring, rows):
        return Matrix(ring, len(rows), len(rows[0]) if rows else 0,
                      [list(r_) for r_ in rows])

    @staticmethod
    def column(ring, entries):
        return Matrix(ring, len(entries), 1, list(entries))

    # -- access ------------------------------------------------------------

    def raw(self, i, j):
        return self._e[i * self.cols + j]

    def __getitem__(self, ij):
        i, j = ij
        return Scalar(self.ring, self._e[i * self.cols + j])

    def row_tuples(self, i):
        return self._e[i * self.cols:(i + 1) * self.cols]

    def col_tuples(self, j):
        c = self.cols
        return tuple(self._e[i * c + j] for i in range(self.rows))

    def to_lists(self):
        """Mutable list of rows of component tuples."""
        c = self.cols
        return [list(self._e[i * c:(i + 1) * c]) for i in range(self.rows)]

    def is_zero(self) -> bool:
        return not any(any(p) for p in self._e)

    def is_square(self) -> bool:
        return self.rows == self.cols

    # -- arithmetic --------------------------------------------------------

    def _same_shape(self, other):
        if not isinstance(other, Matrix):
            raise TypeMismatch("expected a Matrix")
        if other.ring != self.ring:
            raise TypeMismatch("mixed rings %s and %s" % (self.ring, other.ring))
        if (other.rows, other.cols) != (self.rows, self.cols):
            raise TypeMismatch("shape mismatch")

    def __add__(self, other):
        self._same_shape(other)
        add = ADD[self.ring]
        return _mk(self.ring, self.rows, self.cols,
                   [add(a, b) for a, b in zip(self._e, other._e)])

    def __sub__(self, other):
        self._same_shape(other)
        sub = SUB[self.ring]
        return _mk(self.ring, self.rows, self.cols,
                   [sub(a, b) for a, b in zip(self._e, other._e)])

    def __neg__(self):
        neg = NEG[self.ring]
        return _mk(self.ring, self.rows, self.cols, [neg(a) for a in self._e])

    def __matmul__(self, other):
        return matmul(self, other)

    def __mul__(self, other):
        if isinstance(other, Matrix):
            return matmul(self, other)
        return self.scale(other)

    def __rmul__(self, other):
        # scalar * M; for central scalars side does not matter
        return self.scale_left(other)

    def scale(self, s):
        """Multiply every entry by a central scalar."""
        p = _as_parts(self.ring, s)
        if self.ring == H and (p[1] or p[2] or p[3]):
            raise TypeMismatch(
                "scaling a quaternionic matrix needs a central scalar; "
                "use scale_left or scale_right"
            )
        mul = MUL[self.ring]
        return _mk(self.ring, self.rows, self.cols,
                   [mul(a, p) for a in self._e])

    def scale_left(self, s):
        p = _as_parts(self.ring, s)
        mul = MUL[self.ring]
        return _mk(self.ring, self.rows, self.cols,
                   [mul(p, a) for a in self._e])

    def scale_right(self, s):
        p = _as_parts(self.ring, s)
        mul = MUL[self.ring]
        return _mk(self.ring, self.rows, self.cols,
                   [mul(a, p) for a in self._e])

    def transpose(self):
        r_, c_ = self.rows, self.cols
        e = self._e
        return _mk(self.ring, c_, r_,
                   [e[i * c_ + j] for j in range(c_) for i in range(r_)])

    def conj(self):
        cj = CONJ[self.ring]
        return _mk(self.ring, self.rows, self.cols, [cj(a) for a in self._e])

    def conj_transpose(self):
        cj = CONJ[self.ring]
        r_, c_ = self.rows, self.cols
        e = self._e
        return _mk(self.ring, c_, r_,
                   [cj(e[i * c_ + j]) for j in range(c_) for i in range(r_)])

    def trace(self):
        if not self.is_square():
            raise TypeMismatch("trace of a non-square matrix")
        add = ADD[self.ring]
        acc = ZERO[self.ring]
        for i in range(self.rows):
            acc = add(acc, self._e[i * self.cols + i])
        return Scalar(self.ring, acc)

    def __eq__(self, other):
        if not isinstance(other, Matrix):
            return NotImplemented
        return (self.ring == other.ring and self.rows == other.rows
                and self.cols == other.cols and self._e == other._e)

    def __hash__(self):
        return hash((self.ring, self.rows, self.cols, self._e))

    def __repr__(self):
        body = "; ".join(
            ", ".join(str(Scalar(self.ring, self.raw(i, j)))
                      for j in range(self.cols))
            for i in range(self.rows)
        )
        return "Matrix(%s %dx%d: %s)" % (self.ring, self.rows, self.cols, body)

    def submatrix(self, row_range, col_range):
        rr = list(row_range)
        cc = list(col_range)
        e = self._e
        c_ = self.cols
        return _mk(self.ring, len(rr), len(cc),
                   [e[i * c_ + j] for i in rr for j in cc])

    def with_columns(self, col_indices):
        return self.submatrix(range(self.rows), col_indices)


def _mk(ring, rows, cols, flat):
    """Internal fast constructor: flat is a list of ready component tuples."""
    m = object.__new__(Matrix)
    object.__setattr__(m, "ring", ring)
    object.__setattr__(m, "rows", rows)
    object.__setattr__(m, "cols", cols)
    object.__setattr__(m, "_e", tuple(flat))
    return m


def matmul(a: Matrix, b: Matrix) -> Matrix:
    if a.ring != b.ring:
        raise TypeMismatch("mixed rings %s and %s" % (a.ring, b.ring))
    if a.cols != b.rows:
        raise TypeMismatch("inner dimensions %d and %d" % (a.cols, b.rows))
    ring = a.ring
    mul = MUL[ring]
    add = ADD[ring]
    z = ZERO[ring]
    n, k, m = a.rows, a.cols, b.cols
    ae, be = a._e, b._e
    out = []
    for i in range(n):
        base = i * k
        for j in range(m):
            acc = z
            for t in range(k):
                x = ae[base + t]
                if not any(x):
                    continue
                y = be[t * m + j]
                if not any(y):
                    continue
                acc = add(acc, mul(x, y))
            out.append(acc)
    return _mk(ring, n, m, out)


def hstack(*mats) -> Matrix:
    mats = [m for m in mats if m.cols > 0] or list(mats[:1])
    ring = mats[0].ring
    rows = mats[0].rows
    for m in mats:
        if m.ring != ring or m.rows != rows:
            raise TypeMismatch("hstack needs matching rings and row counts")
    out = []
    for i in range(rows):
        for m in mats:
            out.extend(m.row_tuples(i))
    return _mk(ring, rows, sum(m.cols for m in mats), out)


def vstack(*mats) -> Matrix:
    mats = [m for m in mats if m.rows > 0] or list(mats[:1])
    ring = mats[0].ring
    cols = mats[0].cols
    for m in mats:
        if m.ring != ring or m.cols != cols:
            raise TypeMismatch("vstack needs matching rings and column counts")
    out = []
    for m in mats:
        out.extend(m._e)
    return _mk(ring, sum(m.rows for m in mats), cols, out)


def block(rows_of_blocks) -> Matrix:
    return vstack(*[hstack(*row) for row in rows_of_blocks])


def block_diag(*mats) -> Matrix:
    ring = mats[0].ring
    rows = sum(m.rows for m in mats)
    cols = sum(m.cols for m in mats)
    out = Matrix.zeros(ring, rows, cols).to_lists()
    r0 = c0 = 0
    for m in mats:
        for i in range(m.rows):
            for j in range(m.cols):
                out[r0 + i][c0 + j] = m.raw(i, j)
        r0 += m.rows
        c0 += m.cols
    return _mk(ring, rows, cols, [p for row in out for p in row])


# ---------------------------------------------------------------------------
# elimination (left row operations, valid over H)


def _rref(rows, ncols, ring):
    """In-place reduced row echelon form.  Returns the pivot column list.

    rows: mutable list of lists of component tuples.  Row operations act on
    the left, so over H the row space is a left module and right kernels
    are preserved.
    """
    mul = MUL[ring]
    sub = SUB[ring]
    inv = INV[ring]
    nrows = len(rows)
    pivots = []
    r_ = 0
    for col in range(ncols):
        piv = None
        for i in range(r_, nrows):
            if any(rows[i][col]):
                piv = i
                break
        if piv is None:
            continue
        rows[r_], rows[piv] = rows[piv], rows[r_]
        p = rows[r_][col]
        if p != ONE[ring]:
            pi = inv(p)
            rows[r_] = [mul(pi, v) for v in rows[r_]]
        prow = rows[r_]
        for i in range(nrows):
            if i == r_:
                continue
            f = rows[i][col]
            if not any(f):
                continue
            ri = rows[i]
            rows[i] = [sub(ri[j], mul(f, prow[j])) for j in range(ncols)]
        pivots.append(col)
        r_ += 1
        if r_ == nrows:
            break
    return pivots


def rank(m: Matrix) -> int:
    rows = m.to_lists()
    return len(_rref(rows, m.cols, m.ring))


def solve(a: Matrix, b: Matrix) -> Matrix:
    """Solve a @ x = b for square invertible a.  Raises Singular."""
    if not a.is_square():
        raise TypeMismatch("solve needs a square matrix")
    if a.ring != b.ring or a.rows != b.rows:
        raise TypeMismatch("incompatible right-hand side")
    n = a.rows
    aug = [list(a.row_tuples(i)) + list(b.row_tuples(i)) for i in range(n)]
    pivots = _rref(aug, n + b.cols, a.ring)
    if len([p for p in pivots if p < n]) < n:
        raise Singular("matrix of rank %d < %d" % (len(pivots), n))
    return _mk(a.ring, n, b.cols, [v for row in aug for v in row[n:]])


def invert(a: Matrix) -> Matrix:
    return solve(a, Matrix.identity(a.ring, a.rows))


def is_invertible(a: Matrix) -> bool:
    return a.is_square() and rank(a) == a.rows


def right_kernel_basis(a: Matrix):
    """Columns v with a @ v = 0, one per free column; [] if injective.

    The kernel of left multiplication is a right submodule, so these
    columns span it over the ring acting on the right.
    """
    rows = a.to_lists()
    pivots = _rref(rows, a.cols, a.ring)
    pivot_set = set(pivots)
    neg = NEG[a.ring]
    out = []
    for free in range(a.cols):
        if free in pivot_set:
            continue
        v = [ZERO[a.ring]] * a.cols
        v[free] = ONE[a.ring]
        for i, p in enumerate(pivots):
            v[p] = neg(rows[i][free])
        out.append(_mk(a.ring, a.cols, 1, v))
    return out


def det(a: Matrix) -> Scalar:
    """Determinant over R or C by elimination; over H via complexify.

    The quaternionic value is the determinant of the complexified matrix,
    which is a real rational; it is returned as a Scalar over R.
    """
    if not a.is_square():
        raise TypeMismatch("determinant of a non-square matrix")
    if a.ring == H:
        d = det(complexify(a))
        if d.parts[1]:
            raise TypeMismatch("complexified determinant was not real")
        return Scalar(R, (d.parts[0],))
    ring = a.ring
    mul = MUL[ring]
    sub = SUB[ring]
    inv = INV[ring]
    n = a.rows
    rows = a.to_lists()
    acc = ONE[ring]
    sign = 1
    for col in range(n):
        piv = None
        for i in range(col, n):
            if any(rows[i][col]):
                piv = i
                break
        if piv is None:
            return Scalar(ring, ZERO[ring])
        if piv != col:
            rows[col], rows[piv] = rows[piv], rows[col]
            sign = -sign
        p = rows[col][col]
        acc = mul(acc, p)
        pi = inv(p)
        for i in range(col + 1, n):
            f = rows[i][col]
            if not any(f):
                continue
            fpi = mul(f, pi)
            ri = rows[i]
            rows[i] = [sub(ri[j], mul(fpi, rows[col][j])) for j in range(n)]
    if sign < 0:
        acc = NEG[ring](acc)
    return Scalar(ring, acc)


def charpoly(a: Matrix):
    """Monic characteristic polynomial coefficients, highest degree first.

    Faddeev-LeVerrier over R or C (exact, division only by integers).
    Quaternionic input is rejected; complexify first.
    """
    if a.ring == H:
        raise TypeMismatch("characteristic polynomial over H: complexify first")
    if not a.is_square():
        raise TypeMismatch("characteristic polynomial of a non-square matrix")
    ring = a.ring
    n = a.rows
    coeffs = [Scalar(ring, ONE[ring])]
    if n == 0:
        return coeffs
    ident = Matrix.identity(ring, n)
    mk = a
    for k in range(1, n + 1):
        if k > 1:
            mk = matmul(a, mk + ident.scale(coeffs[-1]))
        tr = mk.trace()
        ck = Scalar(ring, MUL[ring](tr.parts,
                                    from_rational(ring, qnum(-1) / k)))
        coeffs.append(ck)
    return coeffs


def complexify(a: Matrix) -> Matrix:
    """Blockwise 2x2 complex image of a quaternionic matrix.

    q = a + b j (a, b complex) maps to [[a, -b], [conj(b), conj(a)]]; the
    map is an R-algebra homomorphism and complexify(i) = diag(i, -i),
    complexify(j) = [[0, -1], [1, 0]].
    """
    if a.ring != H:
        raise TypeMismatch("complexify expects a quaternionic matrix")
    n, m = a.rows, a.cols
    out = [None] * (4 * n * m)
    cm = 2 * m
    for i in range(n):
        for j in range(m):
            w, x, y, z = a.raw(i, j)
            # a = w + x i, b = y + z i
            r0 = 2 * i
            c0 = 2 * j
            out[r0 * cm + c0] = (w, x)
            out[r0 * cm + c0 + 1] = (-y, -z)
            out[(r0 + 1) * cm + c0] = (y, -z)
            out[(r0 + 1) * cm + c0 + 1] = (w, -x)
    return _mk(C, 2 * n, 2 * m, out)


def reduced_column_echelon(a: Matrix) -> Matrix:
    """Canonical reduced column echelon form with zero columns dropped.

    Column operations multiply on the right, so the right-module column
    span is preserved; the result is the unique canonical basis of that
    span (pivot rows strictly increasing, pivots 1, pivot rows cleared).
    """
    ring = a.ring
    mul = MUL[ring]
    sub = SUB[ring]
    inv = INV[ring]
    n = a.rows
    cols = [list(a.col_tuples(j)) for j in range(a.cols)]
    c_ = 0
    for row in range(n):
        piv = None
        for j in range(c_, len(cols)):
            if any(cols[j][row]):
                piv = j
                break
        if piv is None:
            continue
        cols[c_], cols[piv] = cols[piv], cols[c_]
        p = cols[c_][row]
        if p != ONE[ring]:
            pi = inv(p)
            cols[c_] = [mul(v, pi) for v in cols[c_]]
        pcol = cols[c_]
        for j in range(len(cols)):
            if j == c_:
                continue
            f = cols[j][row]
            if not any(f):
                continue
            cj = cols[j]
            cols[j] = [sub(cj[i], mul(pcol[i], f)) for i in range(n)]
        c_ += 1
        if c_ == len(cols):
            break
    keep = [col for col in cols[:c_]]
    out = []
    for i in range(n):
        for col in keep:
            out.append(col[i])
    return _mk(ring, n, len(keep), out)

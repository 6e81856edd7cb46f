"""Bilinear and sesquilinear forms with exact classification tools.

Conventions.  A form B on K^n is stored by its gram matrix G with

    B(v, w) = w^s G v,   s = conj-transpose when B is sesquilinear,
                         s = transpose when B is bilinear,

so gram[s, t] = B(e_t, e_s) and B is right-linear in its first argument.
Sesquilinear means: ring H always, ring C for the hermitian kinds.  Valid
kinds per ring: R symmetric/skew, C all four, H hermitian/antihermitian.

Classification stays inside rational arithmetic: inertia counts signs of a
congruence diagonalization without normalizing magnitudes, and split_basis
searches for pairing scalars among exact rational solutions.  A form that
is split over the reals may still lack a rational split basis; that raises
NotFound rather than any approximation.
"""

from __future__ import annotations

from math import isqrt

from .linalg import (
    Matrix,
    Singular,
    block,
    hstack,
    is_invertible,
    matmul,
    right_kernel_basis,
)
from .rings import (
    CONJ,
    INV,
    MUL,
    NEG,
    ONE,
    QNUM,
    SUB,
    ZERO,
    C,
    H,
    R,
    Scalar,
    TypeMismatch,
    from_rational,
    qnum,
)
from .subspaces import Subspace

SYMMETRIC = "symmetric"
SKEW = "skew"
HERMITIAN = "hermitian"
ANTIHERMITIAN = "antihermitian"

VALID_KINDS = {
    R: (SYMMETRIC, SKEW),
    C: (SYMMETRIC, SKEW, HERMITIAN, ANTIHERMITIAN),
    H: (HERMITIAN, ANTIHERMITIAN),
}


class NotSplit(Exception):
    """The form admits no pair of complementary isotropic halves."""


class NotFound(Exception):
    """No exact rational witness exists within the search strategy."""


class NotConsistent(Exception):
    """Structural data contradicts itself."""


class FormType:
    __slots__ = ("ring", "kind")

    def __init__(self, ring, kind):
        if ring not in VALID_KINDS:
            raise TypeMismatch("unknown ring %r" % (ring,))
        if kind not in VALID_KINDS[ring]:
            raise TypeMismatch("kind %r is not valid over %s" % (kind, ring))
        object.__setattr__(self, "ring", ring)
        object.__setattr__(self, "kind", kind)

    def __setattr__(self, name, value):
        raise AttributeError("FormType is immutable")

    @property
    def sesquilinear(self) -> bool:
        if self.ring == H:
            return True
        return self.ring == C and self.kind in (HERMITIAN, ANTIHERMITIAN)

    @property
    def kappa(self) -> int:
        """+1 for symmetric/hermitian, -1 for skew/antihermitian."""
        return 1 if self.kind in (SYMMETRIC, HERMITIAN) else -1

    def __eq__(self, other):
        if not isinstance(other, FormType):
            return NotImplemented
        return self.ring == other.ring and self.kind == other.kind

    def __hash__(self):
        return hash((self.ring, self.kind))

    def __repr__(self):
        return "FormType(%s, %s)" % (self.ring, self.kind)


def _twist(ft: FormType, m: Matrix) -> Matrix:
    return m.conj_transpose() if ft.sesquilinear else m.transpose()


def detect_kind(ring, gram: Matrix):
    """Kind(s) a gram matrix satisfies; most specific valid kind, or None.

    Checks the sesquilinear symmetries first over C so hermitian wins when
    both hold (real symmetric grams satisfy all four).
    """
    order = {
        R: (SYMMETRIC, SKEW),
        C: (HERMITIAN, ANTIHERMITIAN, SYMMETRIC, SKEW),
        H: (HERMITIAN, ANTIHERMITIAN),
    }[ring]
    for kind in order:
        ft = FormType(ring, kind)
        t = _twist(ft, gram)
        if (t == gram and ft.kappa == 1) or (t == -gram and ft.kappa == -1):
            return kind
    return None


class Form:
    __slots__ = ("form_type", "gram")

    def __init__(self, form_type: FormType, gram: Matrix):
        if gram.ring != form_type.ring:
            raise TypeMismatch("gram ring %s does not match form ring %s"
                               % (gram.ring, form_type.ring))
        if not gram.is_square():
            raise TypeMismatch("gram matrix must be square")
        t = _twist(form_type, gram)
        want = gram if form_type.kappa == 1 else -gram
        if t != want:
            raise NotConsistent(
                "gram matrix lacks the %s symmetry" % form_type.kind)
        if not is_invertible(gram):
            raise Singular("gram matrix is degenerate")
        object.__setattr__(self, "form_type", form_type)
        object.__setattr__(self, "gram", gram)

    def __setattr__(self, name, value):
        raise AttributeError("Form is immutable")

    @property
    def ring(self):
        return self.form_type.ring

    @property
    def dim(self) -> int:
        return self.gram.rows

    @property
    def sesquilinear(self) -> bool:
        return self.form_type.sesquilinear

    def twist(self, m: Matrix) -> Matrix:
        return _twist(self.form_type, m)

    def evaluate(self, v: Matrix, w: Matrix) -> Scalar:
        """B(v, w) for column vectors v, w."""
        if v.cols != 1 or w.cols != 1 or v.rows != self.dim or w.rows != self.dim:
            raise TypeMismatch("evaluate expects ambient column vectors")
        out = matmul(matmul(self.twist(w), self.gram), v)
        return Scalar(self.ring, out.raw(0, 0))

    def restrict_gram(self, basis: Matrix) -> Matrix:
        return matmul(matmul(self.twist(basis), self.gram), basis)

    def restrict(self, sub: Subspace) -> "Form":
        if sub.ambient_dim != self.dim or sub.ring != self.ring:
            raise TypeMismatch("subspace does not live in this form's space")
        return Form(self.form_type, self.restrict_gram(sub.basis))

    def is_isotropic_vector(self, v: Matrix) -> bool:
        return self.evaluate(v, v).is_zero()

    def is_isotropic(self, sub: Subspace) -> bool:
        return self.restrict_gram(sub.basis).is_zero()

    def is_nondegenerate(self) -> bool:
        return is_invertible(self.gram)

    def orthocomplement(self, sub: Subspace) -> Subspace:
        """All u with B(p, u) = 0 for every p in the subspace."""
        rows = matmul(self.twist(sub.basis), self.twist(self.gram))
        kern = right_kernel_basis(rows)
        if not kern:
            return Subspace.zero(self.ring, self.dim)
        return Subspace(hstack(*kern))

    # -- classification ----------------------------------------------------

    def _hermitian_like(self) -> "Form":
        """Reduce to a kind with real diagonal for sign counting.

        Antihermitian C-forms become hermitian after multiplying the gram
        by i; all other kinds with a signature pass through unchanged.
        """
        ft = self.form_type
        if ft.ring == R and ft.kind == SYMMETRIC:
            return self
        if ft.kind == HERMITIAN:
            return self
        if ft.ring == C and ft.kind == ANTIHERMITIAN:
            return Form(FormType(C, HERMITIAN), self.gram.scale((qnum(0), qnum(1))))
        raise TypeMismatch("no inertia for kind %s over %s" % (ft.kind, ft.ring))

    def inertia(self):
        """(p, q) counts of positive and negative diagonal entries.

        Defined for the kinds classified by signature: symmetric over R,
        hermitian over C or H, and antihermitian over C (counted through
        i times the gram).  p + q = dim always.
        """
        f = self._hermitian_like()
        diag, _ = congruence_diagonalize(f)
        pos = neg = 0
        for d in diag:
            if not any(d) or any(d[1:]):
                raise NotConsistent("diagonalization produced a non-sign entry")
            if d[0] > 0:
                pos += 1
            else:
                neg += 1
        return (pos, neg)

    def is_split(self) -> bool:
        """Whether the real classification admits two isotropic halves.

        This is the classification answer; split_basis may still raise
        NotFound when no rational witness exists.
        """
        ft = self.form_type
        n = self.dim
        if ft.kind == SKEW:
            return True
        if ft.ring == C and ft.kind == SYMMETRIC:
            return n % 2 == 0
        if ft.ring == H and ft.kind == ANTIHERMITIAN:
            return n % 2 == 0
        pos, neg = self.inertia()
        return pos == neg

    def split_basis(self):
        """Vector lists (es, fs) with B(e_k,e_l) = B(f_k,f_l) = 0, B(e_k,f_l) = delta.

        Each list holds dim/2 ambient column vectors.  Raises NotSplit when
        the classification forbids a split and NotFound when the rational
        pairing search comes up empty.  Output is checked literally against
        the three defining equations before returning.
        """
        if not self.is_split():
            raise NotSplit("form of kind %s is not split" % self.form_type.kind)
        n = self.dim
        ring = self.ring
        half = n // 2
        ident = Matrix.identity(ring, n)
        carrier = ident  # ambient columns of the current orthogonal rest
        vs = []
        ws = []
        for _ in range(half):
            k = carrier.cols
            rest = self.restrict_gram(carrier)
            x = _isotropic_vector(self.form_type, rest)
            gx = matmul(rest, x)
            t = next(i for i in range(k) if any(gx.raw(i, 0)))
            bval = gx.raw(t, 0)
            # w0 = e_t scaled so that B(x, w) = 1
            lam = INV[ring](CONJ[ring](bval)) if self.sesquilinear \
                else INV[ring](bval)
            w = Matrix.zeros(ring, k, 1).to_lists()
            w[t][0] = lam
            w = Matrix(ring, k, 1, [p for row in w for p in row])
            # kill the self-pairing of w, keeping B(x, w) = 1
            bw = matmul(matmul(_twist(self.form_type, w), rest), w).raw(0, 0)
            beta = MUL[ring](bw, from_rational(ring, QNUM(1, 2)))
            w = w - x.scale_right(beta)
            vs.append(matmul(carrier, x))
            ws.append(matmul(carrier, w))
            if k > 2:
                pair = hstack(x, w)
                rows = matmul(_twist(self.form_type, pair),
                              _twist(self.form_type, rest))
                kern = right_kernel_basis(rows)
                if len(kern) != k - 2:
                    raise NotConsistent("orthogonal rest has wrong dimension")
                carrier = matmul(carrier, hstack(*kern))
            else:
                carrier = Matrix.zeros(ring, n, 0)
        es, fs = vs, ws
        one = ONE[ring]
        zero = ZERO[ring]
        for a in range(half):
            for b in range(half):
                if not self.evaluate(es[a], es[b]).is_zero():
                    raise NotConsistent("e-vectors fail isotropy")
                if not self.evaluate(fs[a], fs[b]).is_zero():
                    raise NotConsistent("f-vectors fail isotropy")
                want = one if a == b else zero
                if self.evaluate(es[a], fs[b]).parts != want:
                    raise NotConsistent("pairing B(e_a, f_b) is not delta")
        return es, fs

    def __eq__(self, other):
        if not isinstance(other, Form):
            return NotImplemented
        return self.form_type == other.form_type and self.gram == other.gram

    def __hash__(self):
        return hash((self.form_type, self.gram))

    def __repr__(self):
        return "Form(%s %s, dim %d)" % (self.ring, self.form_type.kind, self.dim)


def split_gram(ft: FormType, half: int) -> Matrix:
    """Canonical split gram [[0, I], [kappa I, 0]] of size 2*half."""
    ident = Matrix.identity(ft.ring, half)
    zero = Matrix.zeros(ft.ring, half, half)
    low = ident if ft.kappa == 1 else -ident
    return block([[zero, ident], [low, zero]])


def congruence_diagonalize(form: Form):
    """(diagonal entries, S) with twist(S) G S diagonal.

    Works for every kind except bilinear skew, which has no nonzero
    diagonal values at all.
    """
    ft = form.form_type
    if ft.kind == SKEW:
        raise TypeMismatch("skew forms cannot be diagonalized by congruence")
    ring = ft.ring
    n = form.dim
    s = Matrix.identity(ring, n)
    m = form.gram
    cands = _pivot_candidates(ring)

    def apply(e):
        nonlocal s, m
        s = matmul(s, e)
        m = matmul(matmul(_twist(ft, e), m), e)

    for r in range(n):
        if not any(m.raw(r, r)):
            swap_t = None
            for t in range(r + 1, n):
                if any(m.raw(t, t)):
                    swap_t = t
                    break
            if swap_t is not None:
                e = _col_swap(ring, n, r, swap_t)
                apply(e)
            else:
                found = None
                for a in range(r, n):
                    for b in range(a + 1, n):
                        if any(m.raw(a, b)):
                            found = (a, b)
                            break
                    if found:
                        break
                if found is None:
                    break  # trailing block is zero
                a, b = found
                for cand in cands:
                    e = _col_add(ring, n, a, b, cand)
                    m2 = matmul(matmul(_twist(ft, e), m), e)
                    if any(m2.raw(a, a)):
                        apply(e)
                        break
                else:
                    raise NotConsistent("no pivot candidate worked")
                if a != r:
                    apply(_col_swap(ring, n, r, a))
        d = m.raw(r, r)
        if not any(d):
            continue
        di = INV[ring](d)
        e = Matrix.identity(ring, n).to_lists()
        changed = False
        for u in range(r + 1, n):
            f = m.raw(r, u)
            if any(f):
                e[r][u] = NEG[ring](MUL[ring](di, f))
                changed = True
        if changed:
            apply(Matrix(ring, n, n, [p for row in e for p in row]))
    diag = [m.raw(i, i) for i in range(n)]
    return diag, s


def _pivot_candidates(ring):
    if ring == R:
        return (ONE[R],)
    if ring == C:
        return (ONE[C], (QNUM(0), QNUM(1)))
    one = ONE[H]
    i = (QNUM(0), QNUM(1), QNUM(0), QNUM(0))
    j = (QNUM(0), QNUM(0), QNUM(1), QNUM(0))
    k = (QNUM(0), QNUM(0), QNUM(0), QNUM(1))
    return (one, i, j, k)


def _col_swap(ring, n, a, b):
    e = Matrix.identity(ring, n).to_lists()
    e[a][a] = ZERO[ring]
    e[b][b] = ZERO[ring]
    e[a][b] = ONE[ring]
    e[b][a] = ONE[ring]
    return Matrix(ring, n, n, [p for row in e for p in row])


def _col_add(ring, n, a, b, c):
    """Elementary basis change e_a -> e_a + e_b * c."""
    e = Matrix.identity(ring, n).to_lists()
    e[b][a] = c
    return Matrix(ring, n, n, [p for row in e for p in row])


def _isotropic_vector(ft: FormType, gram: Matrix) -> Matrix:
    """A nonzero isotropic column for the (nondegenerate) restricted gram."""
    ring = ft.ring
    k = gram.rows
    if ft.kind == SKEW:
        col = [ZERO[ring]] * k
        col[0] = ONE[ring]
        return Matrix(ring, k, 1, col)
    sub_form = Form(ft, gram)
    diag, s = congruence_diagonalize(sub_form)
    for a in range(k):
        for b in range(k):
            if a == b:
                continue
            c = _pairing_scalar(ft, diag[a], diag[b])
            if c is None:
                continue
            col = [ZERO[ring]] * k
            col[a] = ONE[ring]
            col[b] = c
            v = matmul(s, Matrix(ring, k, 1, col))
            return v
    raise NotFound("no rational isotropic vector located")


def _pairing_scalar(ft: FormType, da, db):
    """c with conj(c) db c = -da (sesquilinear) or db c^2 = -da (bilinear)."""
    if not any(da) or not any(db):
        return None
    ring = ft.ring
    if ft.kind == SYMMETRIC:
        # c^2 = -da/db in the base field
        target = MUL[ring](NEG[ring](da), INV[ring](db))
        if ring == R:
            c = _rat_sqrt(target[0])
            return None if c is None else (c,)
        return _complex_sqrt(target)
    if ft.kind == HERMITIAN:
        # |c|^2 = -da/db, a positive rational
        ratio = MUL[ring](NEG[ring](da), INV[ring](db))
        r0 = ratio[0]
        if any(ratio[1:]) or r0 <= 0:
            return None
        if ring == C:
            sq = _two_square(r0)
            return None if sq is None else sq
        sq = _four_square(r0)
        return None if sq is None else sq
    if ring == C and ft.kind == ANTIHERMITIAN:
        # handled through the hermitian normalization i*gram upstream
        ift = FormType(C, HERMITIAN)
        i = (QNUM(0), QNUM(1))
        return _pairing_scalar(ift, MUL[C](i, da), MUL[C](i, db))
    # antihermitian over H: conj(c) db c = -da with all entries pure imaginary
    for cand in _pivot_candidates(H):
        lhs = MUL[H](MUL[H](CONJ[H](cand), db), cand)
        if lhs == NEG[H](da):
            return cand
    return _quaternion_pair_search(da, db)


def _quaternion_pair_search(da, db):
    """Solve conj(c) db c = -da over rational quaternions, or None.

    Any solution forces |c|^2 = lam with lam^2 = |da|^2/|db|^2, and then c
    lies in the two-dimensional solution space of the linear equation
    db c = c q, q = -da/lam.  We search that plane for a point with the
    exact norm lam.
    """
    n_da = sum(p * p for p in da)
    n_db = sum(p * p for p in db)
    lam = _rat_sqrt(n_da / n_db)
    if lam is None or lam <= 0:
        return None
    q = tuple(-p / lam for p in da)
    # linear map c -> db c - c q over the 4 real coordinates of c
    cols = []
    basis = ((QNUM(1), QNUM(0), QNUM(0), QNUM(0)),
             (QNUM(0), QNUM(1), QNUM(0), QNUM(0)),
             (QNUM(0), QNUM(0), QNUM(1), QNUM(0)),
             (QNUM(0), QNUM(0), QNUM(0), QNUM(1)))
    for e in basis:
        img = SUB[H](MUL[H](db, e), MUL[H](e, q))
        cols.append([(p,) for p in img])
    mat = Matrix(R, 4, 4, [cols[j][i][0] for i in range(4) for j in range(4)])
    kern = right_kernel_basis(mat)
    if not kern:
        return None
    sols = []
    for kvec in kern:
        sols.append(tuple(kvec.raw(i, 0)[0] for i in range(4)))
    # search small rational combinations for |c|^2 == lam
    span = [QNUM(t, u) for t in range(-6, 7) for u in (1, 2, 3)]
    if len(sols) == 1:
        combos = ((a,) for a in span)
    else:
        combos = ((a, b) for a in span for b in span)
    for combo in combos:
        c = (QNUM(0),) * 4
        for w, s in zip(combo, sols):
            c = tuple(ci + w * p for ci, p in zip(c, s))
        if not any(c):
            continue
        if sum(p * p for p in c) == lam:
            lhs = MUL[H](MUL[H](CONJ[H](c), db), c)
            if lhs == NEG[H](da):
                return c
    return None


def _rat_sqrt(q):
    """Exact square root of a rational, or None."""
    if q < 0:
        return None
    if q == 0:
        return QNUM(0)
    num = int(q.numerator)
    den = int(q.denominator)
    rn = isqrt(num)
    rd = isqrt(den)
    if rn * rn != num or rd * rd != den:
        return None
    return QNUM(rn, rd)


def _complex_sqrt(target):
    """Rational complex square root of (a, b), or None."""
    a, b = target
    if not b:
        x = _rat_sqrt(a)
        if x is not None:
            return (x, QNUM(0))
        y = _rat_sqrt(-a)
        if y is not None:
            return (QNUM(0), y)
        return None
    t = _rat_sqrt(a * a + b * b)
    if t is None:
        return None
    x2 = (a + t) / 2
    x = _rat_sqrt(x2)
    if x is None or x == 0:
        return None
    return (x, b / (2 * x))


_SQUARE_SEARCH_CAP = 10 ** 8


def _two_square(r):
    """r = x^2 + y^2 with rational x, y, or None.  r > 0."""
    num = int(r.numerator)
    den = int(r.denominator)
    m = num * den
    if m > _SQUARE_SEARCH_CAP:
        return None
    for u in range(isqrt(m) + 1):
        rem = m - u * u
        v = isqrt(rem)
        if v * v == rem:
            return (QNUM(u, den), QNUM(v, den))
    return None


def _four_square(r):
    """r = w^2+x^2+y^2+z^2 as a quaternion scalar, or None.  r > 0."""
    num = int(r.numerator)
    den = int(r.denominator)
    m = num * den
    if m > _SQUARE_SEARCH_CAP:
        return None
    for w in range(isqrt(m) + 1):
        rem1 = m - w * w
        for x in range(isqrt(rem1) + 1):
            rem2 = rem1 - x * x
            for y in range(isqrt(rem2) + 1):
                rem3 = rem2 - y * y
                z = isqrt(rem3)
                if z * z == rem3:
                    return (QNUM(w, den), QNUM(x, den),
                            QNUM(y, den), QNUM(z, den))
    return None


def congruent(f1: Form, f2: Form) -> bool:
    """Equivalence of two forms of the same type under change of basis.

    Signature-classified kinds compare by inertia; every other kind has a
    single equivalence class per dimension.  Mismatched types or dimensions
    raise TypeMismatch.
    """
    if f1.form_type != f2.form_type:
        raise TypeMismatch("forms have different types")
    if f1.dim != f2.dim:
        raise TypeMismatch("forms have different dimensions")
    ft = f1.form_type
    has_inertia = (
        (ft.ring == R and ft.kind == SYMMETRIC)
        or ft.kind == HERMITIAN
        or (ft.ring == C and ft.kind == ANTIHERMITIAN)
    )
    if has_inertia:
        return f1.inertia() == f2.inertia()
    return True


# canonical gram builders used by the catalog


def gram_diag_pq(ring, p, q) -> Matrix:
    return Matrix.diagonal(ring, [1] * p + [-1] * q)


def gram_identity(ring, n) -> Matrix:
    return Matrix.identity(ring, n)


def gram_symplectic(ring, half) -> Matrix:
    ident = Matrix.identity(ring, half)
    zero = Matrix.zeros(ring, half, half)
    return block([[zero, ident], [-ident, zero]])


def gram_j_diag(n) -> Matrix:
    j = (QNUM(0), QNUM(0), QNUM(1), QNUM(0))
    return Matrix.diagonal(H, [j] * n)


def gram_minus_i_diag(n) -> Matrix:
    mi = (QNUM(0), QNUM(-1))
    return Matrix.diagonal(C, [mi] * n)

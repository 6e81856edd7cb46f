"""Semiinvolutions, managing forms, matrix groups, and exact sampling.

A semiinvolution J squares to +1 or -1 and acts as Jv = Cv (linear) or
Jv = C conj(v) (antilinear, complex spaces only).  A form B is consistent
with J when B(Jv, Jw) = mu B(v, w) for linear J, or mu conj(B(v, w)) for
antilinear J, with mu = +-1.  The managing form is D(v, w) = B(v, Jw).

Group elements are plain matrices; a GroupDescriptor bundles the defining
conditions (preserve a form, commute with a semiinvolution, or both) so
membership, Lie algebra dimension, and exact Cayley-transform sampling all
run off the same data.  All dimensions are real dimensions, obtained by
realifying C and H entries.
"""

from __future__ import annotations

import random

from .linalg import (
    Matrix,
    block_diag,
    hstack,
    invert,
    is_invertible,
    matmul,
    right_kernel_basis,
    solve,
)
from .rings import (
    CONJ,
    INV,
    MUL,
    NCOMP,
    ONE,
    QNUM,
    ZERO,
    C,
    H,
    R,
    TypeMismatch,
    is_central,
    qnum,
)
from .forms import (
    ANTIHERMITIAN,
    HERMITIAN,
    SKEW,
    SYMMETRIC,
    Form,
    FormType,
    NotConsistent,
    _twist,
)
from .subspaces import Subspace

LINEAR = "linear"
ANTILINEAR = "antilinear"


class NotPlusMinusOne(Exception):
    """The consistency constant exists but is not +1 or -1."""


class SamplerExhausted(Exception):
    """Cayley sampling kept hitting singular 1 + A; descriptor is degenerate."""


class Semiinvolution:
    """An operator J with J^2 = epsilon, epsilon = +-1.

    Linear: Jv = Cv over R, C, or H.  Antilinear: Jv = C conj(v), complex
    spaces only.  The matrix identity J^2 = epsilon reads C C = epsilon I
    in the linear case and C conj(C) = epsilon I in the antilinear one.
    """

    __slots__ = ("ring", "linearity", "matrix", "epsilon")

    def __init__(self, linearity, matrix: Matrix, epsilon: int):
        if linearity not in (LINEAR, ANTILINEAR):
            raise TypeMismatch("linearity must be linear or antilinear")
        if epsilon not in (1, -1):
            raise TypeMismatch("epsilon must be +1 or -1")
        if not matrix.is_square():
            raise TypeMismatch("semiinvolution matrix must be square")
        if linearity == ANTILINEAR and matrix.ring != C:
            raise TypeMismatch("antilinear operators need a complex space")
        square = matmul(matrix, matrix.conj()) if linearity == ANTILINEAR \
            else matmul(matrix, matrix)
        want = Matrix.identity(matrix.ring, matrix.rows)
        if epsilon == -1:
            want = -want
        if square != want:
            raise NotConsistent("matrix does not square to epsilon")
        object.__setattr__(self, "ring", matrix.ring)
        object.__setattr__(self, "linearity", linearity)
        object.__setattr__(self, "matrix", matrix)
        object.__setattr__(self, "epsilon", epsilon)

    def __setattr__(self, name, value):
        raise AttributeError("Semiinvolution is immutable")

    @property
    def dim(self) -> int:
        return self.matrix.rows

    @property
    def antilinear(self) -> bool:
        return self.linearity == ANTILINEAR

    def apply(self, v: Matrix) -> Matrix:
        """J applied to each column of v."""
        if self.antilinear:
            return matmul(self.matrix, v.conj())
        return matmul(self.matrix, v)

    def apply_inverse(self, v: Matrix) -> Matrix:
        """J^-1 = epsilon J, as a map."""
        out = self.apply(v)
        return out if self.epsilon == 1 else -out

    def apply_to_subspace(self, sub: Subspace) -> Subspace:
        if sub.ambient_dim != self.dim or sub.ring != self.ring:
            raise TypeMismatch("subspace does not match the operator's space")
        if sub.dim == 0:
            return sub
        return Subspace(self.apply(sub.basis))

    def commutes_with(self, g: Matrix) -> bool:
        """gJ = Jg on the matrix level; antilinear: g C = C conj(g)."""
        if g.ring != self.ring or g.rows != self.dim or not g.is_square():
            raise TypeMismatch("operator does not match the semiinvolution")
        if self.antilinear:
            return matmul(g, self.matrix) == matmul(self.matrix, g.conj())
        return matmul(g, self.matrix) == matmul(self.matrix, g)

    def __eq__(self, other):
        if not isinstance(other, Semiinvolution):
            return NotImplemented
        return (self.linearity == other.linearity
                and self.epsilon == other.epsilon
                and self.matrix == other.matrix)

    def __hash__(self):
        return hash((self.linearity, self.epsilon, self.matrix))

    def __repr__(self):
        return "Semiinvolution(%s, dim %d, J^2 = %+d)" % (
            self.linearity, self.dim, self.epsilon)


def detect_mu(form: Form, semi: Semiinvolution) -> int:
    """The constant in B(Jv, Jw) = mu B(v, w) (or mu conj(B) if antilinear).

    Verified on the whole gram grid.  Raises NotConsistent when no central
    constant works at all and NotPlusMinusOne when one does but is not +-1.
    """
    if form.ring != semi.ring or form.dim != semi.dim:
        raise TypeMismatch("form and semiinvolution live on different spaces")
    ring = form.ring
    c = semi.matrix
    lhs = matmul(matmul(form.twist(c), form.gram), c)
    target = form.gram.conj() if semi.antilinear else form.gram
    if lhs == target:
        return 1
    if lhs == -target:
        return -1
    # look for any other central constant to tell the two errors apart
    probe = next(((i, j) for i in range(form.dim) for j in range(form.dim)
                  if any(target.raw(i, j))), None)
    if probe is not None:
        i, j = probe
        mu = MUL[ring](lhs.raw(i, j), INV[ring](target.raw(i, j)))
        if is_central(ring, mu) and lhs == target.scale_left(mu):
            raise NotPlusMinusOne(
                "consistency constant %r is not +1 or -1" % (mu,))
    raise NotConsistent("no central constant relates B(Jv, Jw) to B(v, w)")


def managing_form(form: Form, semi: Semiinvolution) -> Form:
    """D(v, w) = B(v, Jw) as a Form.

    The gram of D is twist(C) gram(B) for both linearities; what changes is
    the sesquilinearity class: antilinear J swaps bilinear and sesquilinear
    over C.  The kind is detected inside that class.
    """
    detect_mu(form, semi)  # validates consistency
    ring = form.ring
    gram_d = matmul(form.twist(semi.matrix), form.gram)
    if semi.antilinear:
        d_sesq = not form.sesquilinear
    else:
        d_sesq = form.sesquilinear
    if ring == R:
        candidates = (SYMMETRIC, SKEW)
    elif ring == H:
        candidates = (HERMITIAN, ANTIHERMITIAN)
    elif d_sesq:
        candidates = (HERMITIAN, ANTIHERMITIAN)
    else:
        candidates = (SYMMETRIC, SKEW)
    for kind in candidates:
        ft = FormType(ring, kind)
        t = _twist(ft, gram_d)
        if t == (gram_d if ft.kappa == 1 else -gram_d):
            return Form(ft, gram_d)
    raise NotConsistent("managing form has no symmetry kind")


class ConsistentPair:
    """A form B and semiinvolution J with a verified mu."""

    __slots__ = ("form", "semiinv", "mu")

    def __init__(self, form: Form, semiinv: Semiinvolution):
        mu = detect_mu(form, semiinv)
        object.__setattr__(self, "form", form)
        object.__setattr__(self, "semiinv", semiinv)
        object.__setattr__(self, "mu", mu)

    def __setattr__(self, name, value):
        raise AttributeError("ConsistentPair is immutable")

    def managing(self) -> Form:
        return managing_form(self.form, self.semiinv)

    def __repr__(self):
        return "ConsistentPair(%r, %r, mu=%+d)" % (
            self.form, self.semiinv, self.mu)


def species(semi: Semiinvolution):
    """Classification tag and centralizer data for a semiinvolution.

    Returns (tag, label, expected_real_dim) where tag is one of
    "a", "b", "c", "d", "e" and expected_real_dim is the real dimension
    of the full centralizer of J inside GL.
    """
    ring = semi.ring
    n = semi.dim
    r = NCOMP[ring]
    if semi.linearity == LINEAR and semi.epsilon == 1:
        ident = Matrix.identity(ring, n)
        plus = right_kernel_basis(semi.matrix - ident)
        minus = right_kernel_basis(semi.matrix + ident)
        mp, mm = len(plus), len(minus)
        if mp + mm != n:
            raise NotConsistent("eigenspaces of an involution must fill the space")
        label = "GL(%d, %s) x GL(%d, %s)" % (mp, ring, mm, ring)
        return ("a", label, r * (mp * mp + mm * mm))
    if ring == R and semi.epsilon == -1:
        if n % 2:
            raise NotConsistent("a real complex structure needs even dimension")
        m = n // 2
        return ("b", "GL(%d, C)" % m, 2 * m * m)
    if ring == C and semi.antilinear and semi.epsilon == -1:
        if n % 2:
            raise NotConsistent("a quaternionic structure needs even dimension")
        m = n // 2
        return ("c", "GL(%d, H)" % m, 4 * m * m)
    if ring == C and semi.antilinear and semi.epsilon == 1:
        return ("d", "GL(%d, R)" % n, n * n)
    if ring == H and semi.epsilon == -1:
        return ("e", "GL(%d, C)" % n, 2 * n * n)
    raise TypeMismatch(
        "no species for a linear complex semiinvolution with J^2 = -1; "
        "replace J by iJ first")


# -- group descriptors ------------------------------------------------------

GL_FAMILY = "GL"
FORM_FAMILY = "form"
CENTRALIZER_FAMILY = "centralizer"
FORM_CENTRALIZER_FAMILY = "form_centralizer"
PRODUCT_FAMILY = "product"


class GroupDescriptor:
    """Defining data of a matrix group: which conditions membership tests.

    family GL: invertibility only.  form: preserve a Form.  centralizer:
    commute with a Semiinvolution.  form_centralizer: both.  product:
    an abstract direct product of factor groups (dimension bookkeeping
    only; elements of a product are not single matrices).
    """

    __slots__ = ("family", "ring", "size", "form", "semiinv", "factors",
                 "label")

    def __init__(self, family, ring=None, size=None, form=None, semiinv=None,
                 factors=None, label=None):
        if family not in (GL_FAMILY, FORM_FAMILY, CENTRALIZER_FAMILY,
                          FORM_CENTRALIZER_FAMILY, PRODUCT_FAMILY):
            raise TypeMismatch("unknown group family %r" % (family,))
        if family == PRODUCT_FAMILY:
            if not factors:
                raise TypeMismatch("a product group needs factors")
            factors = tuple(factors)
            ring = None
            size = None
        else:
            factors = None
            if family in (FORM_FAMILY, FORM_CENTRALIZER_FAMILY):
                ring = form.ring
                size = form.dim
            if family == CENTRALIZER_FAMILY:
                ring = semiinv.ring
                size = semiinv.dim
            if family in (FORM_CENTRALIZER_FAMILY, CENTRALIZER_FAMILY):
                if semiinv.ring != ring or semiinv.dim != size:
                    raise TypeMismatch("conditions live on different spaces")
            if ring not in NCOMP or size is None or size < 0:
                raise TypeMismatch("descriptor needs a ring and a size")
        object.__setattr__(self, "family", family)
        object.__setattr__(self, "ring", ring)
        object.__setattr__(self, "size", size)
        object.__setattr__(self, "form", form)
        object.__setattr__(self, "semiinv", semiinv)
        object.__setattr__(self, "factors", factors)
        object.__setattr__(self, "label", label or family)

    def __setattr__(self, name, value):
        raise AttributeError("GroupDescriptor is immutable")

    def _key(self):
        if self.family == PRODUCT_FAMILY:
            return (self.family, tuple(f._key() for f in self.factors))
        return (
            self.family, self.ring, self.size,
            None if self.form is None else (self.form.form_type.kind,
                                            self.form.gram),
            None if self.semiinv is None else (self.semiinv.linearity,
                                               self.semiinv.epsilon,
                                               self.semiinv.matrix),
        )

    def __eq__(self, other):
        if not isinstance(other, GroupDescriptor):
            return NotImplemented
        return self._key() == other._key()

    def __hash__(self):
        return hash(self._key())

    def __repr__(self):
        return "GroupDescriptor(%s)" % (self.label,)


def gl_group(ring, n, label=None) -> GroupDescriptor:
    return GroupDescriptor(GL_FAMILY, ring=ring, size=n,
                           label=label or "GL(%d, %s)" % (n, ring))


def form_group(form: Form, label=None) -> GroupDescriptor:
    return GroupDescriptor(FORM_FAMILY, form=form,
                           label=label or "U(%s %s)" % (form.ring,
                                                        form.form_type.kind))


def centralizer_group(semi: Semiinvolution, label=None) -> GroupDescriptor:
    return GroupDescriptor(CENTRALIZER_FAMILY, semiinv=semi,
                           label=label or "GL^J")


def form_centralizer_group(form: Form, semi: Semiinvolution,
                           label=None) -> GroupDescriptor:
    return GroupDescriptor(FORM_CENTRALIZER_FAMILY, form=form, semiinv=semi,
                           label=label or "U(B)^J")


def product_group(*factors, label=None) -> GroupDescriptor:
    return GroupDescriptor(PRODUCT_FAMILY, factors=factors,
                           label=label or " x ".join(f.label for f in factors))


def preserves_form(form: Form, g: Matrix) -> bool:
    """twist(g) gram g = gram, the form-preservation identity."""
    if g.ring != form.ring or g.rows != form.dim or not g.is_square():
        raise TypeMismatch("operator does not match the form's space")
    return matmul(matmul(form.twist(g), form.gram), g) == form.gram


def in_group(desc: GroupDescriptor, g: Matrix) -> bool:
    """Membership: invertibility plus every defining condition."""
    if desc.family == PRODUCT_FAMILY:
        raise TypeMismatch("a product group has no single-matrix membership")
    if g.ring != desc.ring or g.rows != desc.size or not g.is_square():
        raise TypeMismatch("operator has the wrong shape for this group")
    if not is_invertible(g):
        return False
    if desc.family in (FORM_FAMILY, FORM_CENTRALIZER_FAMILY):
        if not preserves_form(desc.form, g):
            return False
    if desc.family in (CENTRALIZER_FAMILY, FORM_CENTRALIZER_FAMILY):
        if not desc.semiinv.commutes_with(g):
            return False
    return True


# -- Lie algebras and sampling ----------------------------------------------

_LIE_CACHE = {}


def _component_basis(ring, n):
    """All n x n matrices with a single 1 in a single component slot."""
    r = NCOMP[ring]
    out = []
    zero_parts = ZERO[ring]
    for a in range(n):
        for b in range(n):
            for comp in range(r):
                parts = list(zero_parts)
                parts[comp] = QNUM(1)
                flat = [zero_parts] * (n * n)
                flat[a * n + b] = tuple(parts)
                out.append(Matrix(ring, n, n, flat))
    return out


def _condition_maps(desc: GroupDescriptor):
    """Linearized membership conditions as maps X -> Matrix that must vanish."""
    maps = []
    if desc.family in (FORM_FAMILY, FORM_CENTRALIZER_FAMILY):
        form = desc.form
        gram = form.gram

        def form_cond(x, form=form, gram=gram):
            return matmul(form.twist(x), gram) + matmul(gram, x)

        maps.append(form_cond)
    if desc.family in (CENTRALIZER_FAMILY, FORM_CENTRALIZER_FAMILY):
        semi = desc.semiinv
        cmat = semi.matrix
        if semi.antilinear:
            def cent_cond(x, cmat=cmat):
                return matmul(x, cmat) - matmul(cmat, x.conj())
        else:
            def cent_cond(x, cmat=cmat):
                return matmul(x, cmat) - matmul(cmat, x)
        maps.append(cent_cond)
    return maps


def lie_algebra_basis(desc: GroupDescriptor):
    """Rational basis matrices of the linearized membership conditions.

    The span over R of the returned matrices is the Lie algebra; the list
    length is its real dimension.  Cached per descriptor.
    """
    if desc.family == PRODUCT_FAMILY:
        raise TypeMismatch("a product group has no single-matrix Lie algebra")
    key = desc._key()
    hit = _LIE_CACHE.get(key)
    if hit is not None:
        return hit
    ring = desc.ring
    n = desc.size
    r = NCOMP[ring]
    maps = _condition_maps(desc)
    basis = _component_basis(ring, n)
    if not maps:
        _LIE_CACHE[key] = tuple(basis)
        return _LIE_CACHE[key]
    nvars = len(basis)
    columns = []
    for e in basis:
        col = []
        for cond in maps:
            out = cond(e)
            for i in range(n):
                for j in range(n):
                    col.extend(out.raw(i, j))
        columns.append(col)
    nrows = len(columns[0])
    flat = [(columns[j][i],) for i in range(nrows) for j in range(nvars)]
    system = Matrix(R, nrows, nvars, flat)
    kern = right_kernel_basis(system)
    out = []
    for kvec in kern:
        parts_acc = [list(ZERO[ring]) for _ in range(n * n)]
        idx = 0
        for a in range(n):
            for b in range(n):
                for comp in range(r):
                    parts_acc[a * n + b][comp] = kvec.raw(idx, 0)[0]
                    idx += 1
        flat_m = [tuple(p) for p in parts_acc]
        out.append(Matrix(ring, n, n, flat_m))
    _LIE_CACHE[key] = tuple(out)
    return _LIE_CACHE[key]


def lie_algebra_dim(desc: GroupDescriptor) -> int:
    """Real dimension of the group, via the kernel of the linearized conditions."""
    if desc.family == PRODUCT_FAMILY:
        return sum(lie_algebra_dim(f) for f in desc.factors)
    return len(lie_algebra_basis(desc))


def cayley_sample(desc: GroupDescriptor, seed) -> Matrix:
    """Deterministic exact group element g = (1 - A)(1 + A)^-1.

    A is an integer combination (coefficients in [-3, 3]) of the Lie
    algebra basis; retry up to 32 times when 1 + A or 1 - A is singular.
    """
    basis = lie_algebra_basis(desc)
    ring = desc.ring
    n = desc.size
    ident = Matrix.identity(ring, n)
    rng = random.Random(seed)
    for _ in range(32):
        a = Matrix.zeros(ring, n, n)
        for e in basis:
            coeff = rng.randint(-3, 3)
            if coeff:
                a = a + e.scale(qnum(coeff))
        plus = ident + a
        minus = ident - a
        if not is_invertible(plus):
            continue
        g = matmul(minus, invert(plus))
        if not is_invertible(g):
            continue
        if not in_group(desc, g):
            raise NotConsistent("Cayley transform left the group")
        return g
    raise SamplerExhausted("no invertible Cayley transform in 32 attempts")


def centralizer_identities_check(form: Form, semi: Semiinvolution, samples):
    """Agreement report for the three pairwise membership conjunctions.

    For each invertible sample g the predicates are P_B (preserves B),
    P_J (commutes with J), P_D (preserves D); group theory makes the three
    conjunctions P_B&P_J, P_B&P_D, P_D&P_J pick out the same set.  Returns
    the list of disagreements; a correct implementation returns [].
    """
    d_form = managing_form(form, semi)
    failures = []
    for k, g in enumerate(samples):
        p_b = preserves_form(form, g)
        p_j = semi.commutes_with(g)
        p_d = preserves_form(d_form, g)
        c1, c2, c3 = p_b and p_j, p_b and p_d, p_d and p_j
        if not (c1 == c2 == c3):
            failures.append({"index": k, "B": p_b, "J": p_j, "D": p_d})
    return failures


# -- induced complex and quaternionic structures ----------------------------


def _structure_basis(semi: Semiinvolution):
    """Greedy half basis b_1..b_m with (b_s, J b_s) a full basis."""
    ring = semi.ring
    n = semi.dim
    if n % 2:
        raise TypeMismatch("an induced structure needs even dimension")
    cols = []
    span = Subspace.zero(ring, n)
    for t in range(n):
        if len(cols) == n // 2:
            break
        e = Matrix.column(ring, [ONE[ring] if i == t else ZERO[ring]
                                 for i in range(n)])
        cand = hstack(e, semi.apply(e))
        joined = span.sum(Subspace.from_columns(cand))
        if joined.dim == span.dim + 2:
            cols.append(e)
            span = joined
    if len(cols) != n // 2:
        raise NotConsistent("could not complete a half basis")
    return hstack(*cols)


def complexified_form(form: Form, semi: Semiinvolution):
    """The complex-valued form Z with U(Z) = U(B)^J, for real J^2 = -1.

    Z(v, w) = B(v, w) + i B(v, Jw) on the complex structure vi := Jv.
    For mu = +1 the result is sesquilinear (hermitian or antihermitian);
    for mu = -1 its conjugate is returned, a bilinear complex form, which
    cuts out the same group.  Returns (Z: Form, P: half basis over R).
    """
    if semi.ring != R or semi.linearity != LINEAR or semi.epsilon != -1:
        raise TypeMismatch("complexification needs a real J with J^2 = -1")
    mu = detect_mu(form, semi)
    p = _structure_basis(semi)
    m = p.cols
    entries = []
    for s in range(m):
        for t in range(m):
            bt = p.with_columns([t])
            bs = p.with_columns([s])
            b_val = form.evaluate(bt, bs).parts[0]
            d_val = form.evaluate(bt, semi.apply(bs)).parts[0]
            if mu == 1:
                entries.append((b_val, d_val))
            else:
                entries.append((b_val, -d_val))
    gram_z = Matrix(C, m, m, entries)
    if mu == 1:
        candidates = (HERMITIAN, ANTIHERMITIAN)
    else:
        candidates = (SYMMETRIC, SKEW)
    for kind in candidates:
        ft = FormType(C, kind)
        t = _twist(ft, gram_z)
        if t == (gram_z if ft.kappa == 1 else -gram_z):
            return Form(ft, gram_z), p
    raise NotConsistent("induced complex form has no symmetry kind")


def operator_in_complex_structure(semi: Semiinvolution, p: Matrix,
                                  g: Matrix) -> Matrix:
    """Matrix of g on the basis p over the complex structure vi := Jv."""
    m = p.cols
    full = hstack(p, semi.apply(p))
    coords = solve(full, matmul(g, p))
    entries = []
    for s in range(m):
        for t in range(m):
            entries.append((coords.raw(s, t)[0], coords.raw(s + m, t)[0]))
    return Matrix(C, m, m, entries)


def quaternionified_form(form: Form, semi: Semiinvolution):
    """The quaternion-valued form Y with U(Y) = U(B)^J, for antilinear J^2 = -1.

    Y(v, w) = B(v, w) + j B(v, Jw) on the structure vj := mu Jv.  For
    sesquilinear B with mu = -1 the gram is premultiplied by i, and for
    bilinear B (mu = +1 after normalization) by j; both rescalings keep
    the group U(Y) unchanged while landing in a hermitian or antihermitian
    kind over H.  Returns (Y: Form, P: half basis over C).
    """
    if semi.ring != C or not semi.antilinear or semi.epsilon != -1:
        raise TypeMismatch(
            "quaternionification needs an antilinear J with J^2 = -1")
    mu = detect_mu(form, semi)
    if not form.sesquilinear and mu != 1:
        raise NotPlusMinusOne("bilinear forms are normalized to mu = +1 first")
    p = _structure_basis(semi)
    m = p.cols
    if form.sesquilinear and mu == -1:
        unit = (QNUM(0), QNUM(1), QNUM(0), QNUM(0))
    elif form.sesquilinear:
        unit = None
    else:
        unit = (QNUM(0), QNUM(0), QNUM(1), QNUM(0))
    entries = []
    for s in range(m):
        for t in range(m):
            bt = p.with_columns([t])
            bs = p.with_columns([s])
            b_val = form.evaluate(bt, bs).parts
            d_val = form.evaluate(bt, semi.apply(bs)).parts
            # B + jD with complex B, D: parts (Re B, Im B, Re D, -Im D)
            q = (b_val[0], b_val[1], d_val[0], -d_val[1])
            if unit is not None:
                q = MUL[H](unit, q)
            entries.append(q)
    gram_y = Matrix(H, m, m, entries)
    for kind in (HERMITIAN, ANTIHERMITIAN):
        ft = FormType(H, kind)
        t = _twist(ft, gram_y)
        if t == (gram_y if ft.kappa == 1 else -gram_y):
            return Form(ft, gram_y), p
    raise NotConsistent("induced quaternionic form has no symmetry kind")


def operator_in_quaternionic_structure(semi: Semiinvolution, p: Matrix,
                                       g: Matrix, mu: int) -> Matrix:
    """Matrix of g on the basis p over the structure vj := mu Jv."""
    m = p.cols
    jp = semi.apply(p)
    if mu == -1:
        jp = -jp
    full = hstack(p, jp)
    coords = solve(full, matmul(g, p))
    entries = []
    for s in range(m):
        for t in range(m):
            a = coords.raw(s, t)
            d = CONJ[C](coords.raw(s + m, t))
            entries.append((a[0], a[1], d[0], d[1]))
    return Matrix(H, m, m, entries)


def stabilizer_embed_split(h1: Matrix, semi: Semiinvolution) -> Matrix:
    """blockdiag(h1, h1) or blockdiag(h1, conj(h1)) per J's linearity.

    In split coordinates where J exchanges the two half blocks, this is
    the unique extension of h1 on the first half that commutes with J.
    """
    h2 = h1.conj() if semi.antilinear else h1
    return block_diag(h1, h2)

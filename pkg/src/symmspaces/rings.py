"""Exact scalar arithmetic over the real, complex and quaternion division rings.

Every numeric component is an exact rational: gmpy2.mpq when the extension
is installed, fractions.Fraction otherwise.  A scalar is stored as a flat
tuple of components,

    ("R",)  (a,)
    ("C",)  (re, im)
    ("H",)  (w, x, y, z)   with the Hamilton convention ij = k

The low-level tuple functions (ADD, MUL, CONJ, ... dispatch tables) are what
the matrix code calls in hot loops.  The Scalar class wraps a tuple with
operator syntax for user-facing code and JSON serialization.

Vector spaces over H are right modules: operators act on the left, scalars
multiply coordinates on the right.
"""

from __future__ import annotations

try:
    from gmpy2 import mpq as QNUM

    HAVE_GMPY2 = True
except ImportError:  # pragma: no cover - exercised only without gmpy2
    from fractions import Fraction as QNUM

    HAVE_GMPY2 = False

R = "R"
C = "C"
H = "H"
RINGS = (R, C, H)
NCOMP = {R: 1, C: 2, H: 4}

Q0 = QNUM(0)
Q1 = QNUM(1)


class TypeMismatch(Exception):
    """Operands live over different rings, or a ring tag is unknown."""


def qnum(x) -> "QNUM":
    """Coerce an int, rational string like '-3/2', or rational number to QNUM."""
    if isinstance(x, QNUM):
        return x
    if isinstance(x, bool):
        raise TypeMismatch("bool is not a rational component")
    if isinstance(x, (int, str)):
        return QNUM(x)
    # Fraction <-> mpq cross coercion
    num = getattr(x, "numerator", None)
    den = getattr(x, "denominator", None)
    if num is not None and den is not None:
        return QNUM(int(num), int(den))
    raise TypeMismatch("cannot coerce %r to an exact rational" % (x,))


def check_ring(ring: str) -> None:
    if ring not in NCOMP:
        raise TypeMismatch("unknown ring %r" % (ring,))


# ---------------------------------------------------------------------------
# tuple-level arithmetic, one function per ring, dispatched via dicts


def _add_r(a, b):
    return (a[0] + b[0],)


def _add_c(a, b):
    return (a[0] + b[0], a[1] + b[1])


def _add_h(a, b):
    return (a[0] + b[0], a[1] + b[1], a[2] + b[2], a[3] + b[3])


def _sub_r(a, b):
    return (a[0] - b[0],)


def _sub_c(a, b):
    return (a[0] - b[0], a[1] - b[1])


def _sub_h(a, b):
    return (a[0] - b[0], a[1] - b[1], a[2] - b[2], a[3] - b[3])


def _neg_r(a):
    return (-a[0],)


def _neg_c(a):
    return (-a[0], -a[1])


def _neg_h(a):
    return (-a[0], -a[1], -a[2], -a[3])


def _mul_r(a, b):
    return (a[0] * b[0],)


def _mul_c(a, b):
    ar, ai = a
    br, bi = b
    return (ar * br - ai * bi, ar * bi + ai * br)


def _mul_h(a, b):
    w1, x1, y1, z1 = a
    w2, x2, y2, z2 = b
    return (
        w1 * w2 - x1 * x2 - y1 * y2 - z1 * z2,
        w1 * x2 + x1 * w2 + y1 * z2 - z1 * y2,
        w1 * y2 - x1 * z2 + y1 * w2 + z1 * x2,
        w1 * z2 + x1 * y2 - y1 * x2 + z1 * w2,
    )


def _conj_r(a):
    return a


def _conj_c(a):
    return (a[0], -a[1])


def _conj_h(a):
    return (a[0], -a[1], -a[2], -a[3])


def _inv_r(a):
    if not a[0]:
        raise ZeroDivisionError("scalar is zero")
    return (Q1 / a[0],)


def _inv_c(a):
    ar, ai = a
    n = ar * ar + ai * ai
    if not n:
        raise ZeroDivisionError("scalar is zero")
    return (ar / n, -ai / n)


def _inv_h(a):
    w, x, y, z = a
    n = w * w + x * x + y * y + z * z
    if not n:
        raise ZeroDivisionError("scalar is zero")
    return (w / n, -x / n, -y / n, -z / n)


def _is_zero_r(a):
    return not a[0]


def _is_zero_c(a):
    return not (a[0] or a[1])


def _is_zero_h(a):
    return not (a[0] or a[1] or a[2] or a[3])


ADD = {R: _add_r, C: _add_c, H: _add_h}
SUB = {R: _sub_r, C: _sub_c, H: _sub_h}
NEG = {R: _neg_r, C: _neg_c, H: _neg_h}
MUL = {R: _mul_r, C: _mul_c, H: _mul_h}
CONJ = {R: _conj_r, C: _conj_c, H: _conj_h}
INV = {R: _inv_r, C: _inv_c, H: _inv_h}
IS_ZERO = {R: _is_zero_r, C: _is_zero_c, H: _is_zero_h}

ZERO = {R: (Q0,), C: (Q0, Q0), H: (Q0, Q0, Q0, Q0)}
ONE = {R: (Q1,), C: (Q1, Q0), H: (Q1, Q0, Q0, Q0)}
I_C = (Q0, Q1)
I_H = (Q0, Q1, Q0, Q0)
J_H = (Q0, Q0, Q1, Q0)
K_H = (Q0, Q0, Q0, Q1)


def is_central(ring: str, a) -> bool:
    """True when a commutes with the whole ring (always over R and C)."""
    if ring == H:
        return not (a[1] or a[2] or a[3])
    return True


def is_real(ring: str, a) -> bool:
    if ring == R:
        return True
    if ring == C:
        return not a[1]
    return not (a[1] or a[2] or a[3])


def real_part(a):
    return a[0]


def from_rational(ring: str, q) -> tuple:
    q = qnum(q)
    if ring == R:
        return (q,)
    if ring == C:
        return (q, Q0)
    return (q, Q0, Q0, Q0)


def promote(parts: tuple, src: str, dst: str) -> tuple:
    """Embed a scalar along R -> C -> H.  Narrowing must be exact."""
    ns, nd = NCOMP[src], NCOMP[dst]
    if nd >= ns:
        return parts + (Q0,) * (nd - ns)
    if any(parts[nd:]):
        raise TypeMismatch("scalar has components outside the target ring")
    return parts[:nd]


# ---------------------------------------------------------------------------
# wrapper class


class Scalar:
    """An exact scalar over one of the three rings.

    Immutable.  Mixed-ring arithmetic raises TypeMismatch; promote first
    if you want R*C etc.
    """

    __slots__ = ("ring", "parts")

    def __init__(self, ring: str, parts):
        check_ring(ring)
        n = NCOMP[ring]
        parts = tuple(qnum(p) for p in parts)
        if len(parts) != n:
            raise TypeMismatch(
                "ring %s needs %d components, got %d" % (ring, n, len(parts))
            )
        object.__setattr__(self, "ring", ring)
        object.__setattr__(self, "parts", parts)

    def __setattr__(self, name, value):
        raise AttributeError("Scalar is immutable")

    def _coerce(self, other) -> tuple:
        if isinstance(other, Scalar):
            if other.ring != self.ring:
                raise TypeMismatch(
                    "mixed rings %s and %s" % (self.ring, other.ring)
                )
            return other.parts
        return from_rational(self.ring, other)

    def __add__(self, other):
        return Scalar(self.ring, ADD[self.ring](self.parts, self._coerce(other)))

    __radd__ = __add__

    def __sub__(self, other):
        return Scalar(self.ring, SUB[self.ring](self.parts, self._coerce(other)))

    def __rsub__(self, other):
        return Scalar(self.ring, SUB[self.ring](self._coerce(other), self.parts))

    def __mul__(self, other):
        return Scalar(self.ring, MUL[self.ring](self.parts, self._coerce(other)))

    def __rmul__(self, other):
        return Scalar(self.ring, MUL[self.ring](self._coerce(other), self.parts))

    def __neg__(self):
        return Scalar(self.ring, NEG[self.ring](self.parts))

    def __truediv__(self, other):
        return Scalar(
            self.ring, MUL[self.ring](self.parts, INV[self.ring](self._coerce(other)))
        )

    def __rtruediv__(self, other):
        return Scalar(
            self.ring, MUL[self.ring](self._coerce(other), INV[self.ring](self.parts))
        )

    def conj(self) -> "Scalar":
        return Scalar(self.ring, CONJ[self.ring](self.parts))

    def inv(self) -> "Scalar":
        return Scalar(self.ring, INV[self.ring](self.parts))

    def is_zero(self) -> bool:
        return IS_ZERO[self.ring](self.parts)

    def is_central(self) -> bool:
        return is_central(self.ring, self.parts)

    def is_real(self) -> bool:
        return is_real(self.ring, self.parts)

    def __bool__(self):
        return not self.is_zero()

    def __eq__(self, other):
        if isinstance(other, Scalar):
            return self.ring == other.ring and self.parts == other.parts
        if isinstance(other, (int, str)):
            return self.parts == from_rational(self.ring, other)
        return NotImplemented

    def __hash__(self):
        return hash((self.ring, self.parts))

    def __repr__(self):
        return "Scalar(%s, %s)" % (self.ring, format_parts(self.parts))

    def __str__(self):
        return format_parts(self.parts)

    def to_json(self) -> list:
        return [str(p) for p in self.parts]


_UNITS = {R: ("",), C: ("", "i"), H: ("", "i", "j", "k")}


def format_parts(parts) -> str:
    """Human-readable form like '1 - 1/2i + j'."""
    units = _UNITS[{1: R, 2: C, 4: H}[len(parts)]]
    terms = []
    for p, u in zip(parts, units):
        if not p:
            continue
        mag = p if p > 0 else -p
        body = u if (u and mag == 1) else "%s%s" % (mag, u)
        if not terms:
            terms.append(body if p > 0 else "-" + body)
        else:
            terms.append(("+ " if p > 0 else "- ") + body)
    if not terms:
        return "0"
    return " ".join(terms)


def scalar(ring: str, *components) -> Scalar:
    """Convenience constructor: scalar('C', 1, '-1/2')."""
    return Scalar(ring, components)


def zero(ring: str) -> Scalar:
    return Scalar(ring, ZERO[ring])


def one(ring: str) -> Scalar:
    return Scalar(ring, ONE[ring])


def unit_i(ring: str) -> Scalar:
    if ring == C:
        return Scalar(C, I_C)
    if ring == H:
        return Scalar(H, I_H)
    raise TypeMismatch("ring %s has no imaginary unit" % ring)


def unit_j() -> Scalar:
    return Scalar(H, J_H)


def unit_k() -> Scalar:
    return Scalar(H, K_H)


def scalar_to_json(parts) -> list:
    return [str(p) for p in parts]


def scalar_from_json(ring: str, data) -> tuple:
    check_ring(ring)
    if not isinstance(data, (list, tuple)) or len(data) != NCOMP[ring]:
        raise TypeMismatch(
            "ring %s expects %d components, got %r" % (ring, NCOMP[ring], data)
        )
    return tuple(qnum(p) for p in data)

"""The table of 54 series of subspace-pair realizations.

Every entry names a symmetric space G/H together with the linear data
realizing it: an ambient space over R, C, or H, possibly a split form B,
possibly a semiinvolution J, the managing form D = B(., J.) when both
are present, and a canonical base point (Q1, Q2).

The five families:

  1   (ids 1-30)   B and J together; points are pairs of maximal
                   isotropic subspaces swapped by J
  2   (ids 31-37)  B alone; points are independent pairs of maximal
                   isotropic subspaces
  3   (ids 38-44)  J alone; points are splittings V = Q1 + Q2 with
                   J Q1 = Q2
  4   (ids 45-51)  a form D alone; points are subspaces with
                   nondegenerate restriction, paired with their
                   orthocomplement
  5   (ids 52-54)  bare splittings of fixed dimensions

Family-1 canonical model: with Delta the gram matrix of the restricted
form on the e-block and sigma the twist of B,

    gram(B) = [[0, kappa*sigma(Delta)], [Delta, 0]],
    J       = [[0, eps*I], [I, 0]]  (composed with conj when antilinear),

so the e-block and f-block are maximal isotropic, J swaps them, and the
managing form comes out block diagonal diag(Delta, eps*kappa*sigma(Delta)).
Ten entries are starred: their realization is a finite union of
quotients G/H_i told apart by the inertia of D restricted to Q1.
"""

import hashlib
import random
import re
from dataclasses import dataclass, field

from .rings import NCOMP, Scalar, TypeMismatch
from .linalg import Matrix, block, is_invertible
from .subspaces import Subspace
from .forms import (ANTIHERMITIAN, Form, FormType, HERMITIAN, SKEW,
                    SYMMETRIC, gram_diag_pq, gram_identity, gram_j_diag,
                    gram_minus_i_diag, gram_symplectic, split_gram)
from .involutions import (ANTILINEAR, LINEAR, Semiinvolution,
                          cayley_sample, centralizer_group,
                          centralizer_identities_check, detect_mu,
                          form_centralizer_group, form_group, gl_group,
                          in_group, lie_algebra_dim, managing_form,
                          preserves_form, product_group, species,
                          stabilizer_embed_split)
from . import charts, spaces


class BadParams(Exception):
    """Parameters outside an entry's validity range."""


class NotInUDprime(Exception):
    """The matrix fails to preserve the restriction of D to Q1."""


STAR_IDS = frozenset({3, 5, 14, 15, 20, 26, 30, 45, 49, 50})

_KIND_CONST = {"sym": SYMMETRIC, "skew": SKEW, "herm": HERMITIAN,
               "antiherm": ANTIHERMITIAN}
_KIND_WORDS = {"sym": "symmetric", "skew": "skew", "herm": "hermitian",
               "antiherm": "antihermitian"}
_AMBIENT_EXPR = {"pq": "2(p+q)", "n": "2n", "2n": "4n"}


def _fmt(template: str, params: dict) -> str:
    """Instantiate {expr} tokens with integer arithmetic on the params."""
    def repl(match):
        return str(eval(match.group(1), {"__builtins__": {}}, dict(params)))
    return re.sub(r"\{([^{}]+)\}", repl, template)


def _generic(template: str) -> str:
    """Render {expr} tokens symbolically for the uninstantiated table."""
    def repl(match):
        return match.group(1).replace("*", "").replace(" ", "")
    return re.sub(r"\{([^{}]+)\}", repl, template)


# family 1 rows: B-kind, J-linearity, epsilon, mu, ambient growth, the
# restricted gram Delta, and the display names.  d_kind/d_inertia give
# the expected type of the managing form, re-derived during verification.
_L1 = {
    1: dict(ring="R", kind="sym", lin=LINEAR, eps=1, mu=1, growth="pq",
            delta="pq", G="O({p},{q}) x O({p},{q})", H="O({p},{q})",
            Gstar="O({p+q},{p+q})", GLJ="GL({p+q},R) x GL({p+q},R)",
            UD="O({2*p},{2*q})", d_kind="sym", d_inertia="2*p,2*q"),
    2: dict(ring="R", kind="skew", lin=LINEAR, eps=1, mu=1, growth="2n",
            delta="symp", G="Sp({2*n},R) x Sp({2*n},R)", H="Sp({2*n},R)",
            Gstar="Sp({4*n},R)", GLJ="GL({2*n},R) x GL({2*n},R)",
            UD="Sp({4*n},R)", d_kind="skew", d_inertia=None),
    3: dict(ring="R", kind="skew", lin=LINEAR, eps=1, mu=-1, growth="n",
            delta="id", G="GL({n},R)", H="O(p,{n}-p)",
            Gstar="Sp({2*n},R)", GLJ="GL({n},R) x GL({n},R)",
            UD="O({n},{n})", d_kind="sym", d_inertia="n,n",
            union="p = 0..{n}"),
    4: dict(ring="R", kind="sym", lin=LINEAR, eps=1, mu=-1, growth="2n",
            delta="symp", G="GL({2*n},R)", H="Sp({2*n},R)",
            Gstar="O({2*n},{2*n})", GLJ="GL({2*n},R) x GL({2*n},R)",
            UD="Sp({4*n},R)", d_kind="skew", d_inertia=None),
    5: dict(ring="R", kind="sym", lin=LINEAR, eps=-1, mu=-1, growth="n",
            delta="id", G="O({n},C)", H="O(p,{n}-p)",
            Gstar="O({n},{n})", GLJ="GL({n},C)",
            UD="O({n},{n})", d_kind="sym", d_inertia="n,n",
            union="p = 0..{n}"),
    6: dict(ring="R", kind="skew", lin=LINEAR, eps=-1, mu=-1, growth="2n",
            delta="symp", G="Sp({2*n},C)", H="Sp({2*n},R)",
            Gstar="Sp({4*n},R)", GLJ="GL({2*n},C)",
            UD="Sp({4*n},R)", d_kind="skew", d_inertia=None),
    7: dict(ring="R", kind="sym", lin=LINEAR, eps=-1, mu=1, growth="2n",
            delta="symp", G="U({n},{n})", H="Sp({2*n},R)",
            Gstar="O({2*n},{2*n})", GLJ="GL({2*n},C)",
            UD="Sp({4*n},R)", d_kind="skew", d_inertia=None),
    8: dict(ring="R", kind="skew", lin=LINEAR, eps=-1, mu=1, growth="pq",
            delta="pq", G="U({p},{q})", H="O({p},{q})",
            Gstar="Sp({2*(p+q)},R)", GLJ="GL({p+q},C)",
            UD="O({2*p},{2*q})", d_kind="sym", d_inertia="2*p,2*q"),
    9: dict(ring="C", kind="sym", lin=LINEAR, eps=1, mu=1, growth="n",
            delta="id", G="O({n},C) x O({n},C)", H="O({n},C)",
            Gstar="O({2*n},C)", GLJ="GL({n},C) x GL({n},C)",
            UD="O({2*n},C)", d_kind="sym", d_inertia=None),
    10: dict(ring="C", kind="skew", lin=LINEAR, eps=1, mu=1, growth="2n",
             delta="symp", G="Sp({2*n},C) x Sp({2*n},C)", H="Sp({2*n},C)",
             Gstar="Sp({4*n},C)", GLJ="GL({2*n},C) x GL({2*n},C)",
             UD="Sp({4*n},C)", d_kind="skew", d_inertia=None),
    11: dict(ring="C", kind="herm", lin=LINEAR, eps=1, mu=1, growth="pq",
             delta="pq", G="U({p},{q}) x U({p},{q})", H="U({p},{q})",
             Gstar="U({p+q},{p+q})", GLJ="GL({p+q},C) x GL({p+q},C)",
             UD="U({2*p},{2*q})", d_kind="herm", d_inertia="2*p,2*q"),
    12: dict(ring="C", kind="sym", lin=LINEAR, eps=1, mu=-1, growth="2n",
             delta="symp", G="GL({2*n},C)", H="Sp({2*n},C)",
             Gstar="O({4*n},C)", GLJ="GL({2*n},C) x GL({2*n},C)",
             UD="Sp({4*n},C)", d_kind="skew", d_inertia=None),
    13: dict(ring="C", kind="skew", lin=LINEAR, eps=1, mu=-1, growth="n",
             delta="id", G="GL({n},C)", H="O({n},C)",
             Gstar="Sp({2*n},C)", GLJ="GL({n},C) x GL({n},C)",
             UD="O({2*n},C)", d_kind="sym", d_inertia=None),
    14: dict(ring="C", kind="herm", lin=LINEAR, eps=1, mu=-1, growth="n",
             delta="minus_i", G="GL({n},C)", H="U(p,{n}-p)",
             Gstar="U({n},{n})", GLJ="GL({n},C) x GL({n},C)",
             UD="U({n},{n})", d_kind="antiherm", d_inertia="n,n",
             union="p = 0..{n}"),
    15: dict(ring="C", kind="skew", lin=ANTILINEAR, eps=1, mu=1, growth="n",
             delta="minus_i", G="Sp({2*n},R)", H="U(p,{n}-p)",
             Gstar="Sp({2*n},C)", GLJ="GL({2*n},R)",
             UD="U({n},{n})", d_kind="antiherm", d_inertia="n,n",
             union="p = 0..{n}"),
    16: dict(ring="C", kind="sym", lin=ANTILINEAR, eps=1, mu=1, growth="pq",
             delta="pq", G="O({2*p},{2*q})", H="U({p},{q})",
             Gstar="O({2*(p+q)},C)", GLJ="GL({2*(p+q)},R)",
             UD="U({2*p},{2*q})", d_kind="herm", d_inertia="2*p,2*q"),
    17: dict(ring="C", kind="herm", lin=ANTILINEAR, eps=1, mu=1, growth="n",
             delta="id", G="O({n},{n})", H="O({n},C)",
             Gstar="U({n},{n})", GLJ="GL({2*n},R)",
             UD="O({2*n},C)", d_kind="sym", d_inertia=None),
    18: dict(ring="C", kind="herm", lin=ANTILINEAR, eps=1, mu=-1,
             growth="2n", delta="symp", G="Sp({4*n},R)", H="Sp({2*n},C)",
             Gstar="U({2*n},{2*n})", GLJ="GL({4*n},R)",
             UD="Sp({4*n},C)", d_kind="skew", d_inertia=None),
    19: dict(ring="C", kind="skew", lin=ANTILINEAR, eps=-1, mu=1,
             growth="pq", delta="pq", G="Sp({p},{q})", H="U({p},{q})",
             Gstar="Sp({2*(p+q)},C)", GLJ="GL({p+q},H)",
             UD="U({2*p},{2*q})", d_kind="herm", d_inertia="2*p,2*q"),
    20: dict(ring="C", kind="sym", lin=ANTILINEAR, eps=-1, mu=1, growth="n",
             delta="minus_i", G="SO*({2*n})", H="U(p,{n}-p)",
             Gstar="O({2*n},C)", GLJ="GL({n},H)",
             UD="U({n},{n})", d_kind="antiherm", d_inertia="n,n",
             union="p = 0..{n}",
             note="union lower bound taken as 0; the convention starting "
                  "at p = 1 is also in circulation"),
    21: dict(ring="C", kind="herm", lin=ANTILINEAR, eps=-1, mu=1,
             growth="2n", delta="symp", G="Sp({n},{n})", H="Sp({2*n},C)",
             Gstar="U({2*n},{2*n})", GLJ="GL({2*n},H)",
             UD="Sp({4*n},C)", d_kind="skew", d_inertia=None),
    22: dict(ring="C", kind="herm", lin=ANTILINEAR, eps=-1, mu=-1,
             growth="n", delta="id", G="SO*({2*n})", H="O({n},C)",
             Gstar="U({n},{n})", GLJ="GL({n},H)",
             UD="O({2*n},C)", d_kind="sym", d_inertia=None),
    23: dict(ring="H", kind="herm", lin=LINEAR, eps=1, mu=1, growth="pq",
             delta="pq", G="Sp({p},{q}) x Sp({p},{q})", H="Sp({p},{q})",
             Gstar="Sp({p+q},{p+q})", GLJ="GL({p+q},H) x GL({p+q},H)",
             UD="Sp({2*p},{2*q})", d_kind="herm", d_inertia="2*p,2*q"),
    24: dict(ring="H", kind="antiherm", lin=LINEAR, eps=1, mu=1, growth="n",
             delta="jdiag", G="SO*({2*n}) x SO*({2*n})", H="SO*({2*n})",
             Gstar="SO*({4*n})", GLJ="GL({n},H) x GL({n},H)",
             UD="SO*({4*n})", d_kind="antiherm", d_inertia=None),
    25: dict(ring="H", kind="herm", lin=LINEAR, eps=1, mu=-1, growth="n",
             delta="jdiag", G="GL({n},H)", H="SO*({2*n})",
             Gstar="Sp({n},{n})", GLJ="GL({n},H) x GL({n},H)",
             UD="SO*({4*n})", d_kind="antiherm", d_inertia=None),
    26: dict(ring="H", kind="antiherm", lin=LINEAR, eps=1, mu=-1,
             growth="n", delta="id", G="GL({n},H)", H="Sp(p,{n}-p)",
             Gstar="SO*({4*n})", GLJ="GL({n},H) x GL({n},H)",
             UD="Sp({n},{n})", d_kind="herm", d_inertia="n,n",
             union="p = 0..{n}"),
    27: dict(ring="H", kind="antiherm", lin=LINEAR, eps=-1, mu=1,
             growth="pq", delta="pq", G="U({2*p},{2*q})", H="Sp({p},{q})",
             Gstar="SO*({4*(p+q)})", GLJ="GL({2*(p+q)},C)",
             UD="Sp({2*p},{2*q})", d_kind="herm", d_inertia="2*p,2*q"),
    28: dict(ring="H", kind="herm", lin=LINEAR, eps=-1, mu=1, growth="n",
             delta="jdiag", G="U({n},{n})", H="SO*({2*n})",
             Gstar="Sp({n},{n})", GLJ="GL({2*n},C)",
             UD="SO*({4*n})", d_kind="antiherm", d_inertia=None),
    29: dict(ring="H", kind="antiherm", lin=LINEAR, eps=-1, mu=-1,
             growth="n", delta="jdiag", G="O({2*n},C)", H="SO*({2*n})",
             Gstar="SO*({4*n})", GLJ="GL({2*n},C)",
             UD="SO*({4*n})", d_kind="antiherm", d_inertia=None),
    30: dict(ring="H", kind="herm", lin=LINEAR, eps=-1, mu=-1, growth="n",
             delta="id", G="Sp({2*n},C)", H="Sp(p,{n}-p)",
             Gstar="Sp({n},{n})", GLJ="GL({2*n},C)",
             UD="Sp({n},{n})", d_kind="herm", d_inertia="n,n",
             union="p = 0..{n}"),
}

# family 2: a split form alone
_L2 = {
    31: dict(ring="R", kind="sym", G="O({n},{n})", H="GL({n},R)"),
    32: dict(ring="R", kind="skew", G="Sp({2*n},R)", H="GL({n},R)"),
    33: dict(ring="C", kind="sym", G="O({2*n},C)", H="GL({n},C)"),
    34: dict(ring="C", kind="skew", G="Sp({2*n},C)", H="GL({n},C)"),
    35: dict(ring="C", kind="herm", G="U({n},{n})", H="GL({n},C)"),
    36: dict(ring="H", kind="herm", G="Sp({n},{n})", H="GL({n},H)"),
    37: dict(ring="H", kind="antiherm", G="SO*({4*n})", H="GL({n},H)"),
}

# family 3: a semiinvolution alone
_L3 = {
    38: dict(ring="R", lin=LINEAR, eps=1, G="GL({n},R) x GL({n},R)"),
    39: dict(ring="R", lin=LINEAR, eps=-1, G="GL({n},C)"),
    40: dict(ring="C", lin=LINEAR, eps=1, G="GL({n},C) x GL({n},C)"),
    41: dict(ring="C", lin=ANTILINEAR, eps=1, G="GL({2*n},R)"),
    42: dict(ring="C", lin=ANTILINEAR, eps=-1, G="GL({n},H)"),
    43: dict(ring="H", lin=LINEAR, eps=1, G="GL({n},H) x GL({n},H)"),
    44: dict(ring="H", lin=LINEAR, eps=-1, G="GL({2*n},C)"),
}

# family 4: a form alone; sub gives the dimension of Q1, picks its
# coordinate indices at the base point
_L4 = {
    45: dict(ring="R", kind="sym", names=("p", "q", "m"), delta="pq",
             ambient="p+q", sub="m", G="O({p},{q})",
             H="O(r,s) x O({p}-r,{q}-s)",
             union="r+s = {m}, r <= {p}, s <= {q}"),
    46: dict(ring="R", kind="skew", names=("k", "l"), delta="symp",
             ambient="2(k+l)", sub="2k", G="Sp({2*(k+l)},R)",
             H="Sp({2*k},R) x Sp({2*l},R)"),
    47: dict(ring="C", kind="sym", names=("n", "m"), delta="id",
             ambient="n+m", sub="n", G="O({n+m},C)",
             H="O({n},C) x O({m},C)"),
    48: dict(ring="C", kind="skew", names=("k", "l"), delta="symp",
             ambient="2(k+l)", sub="2k", G="Sp({2*(k+l)},C)",
             H="Sp({2*k},C) x Sp({2*l},C)"),
    49: dict(ring="C", kind="herm", names=("p", "q", "m"), delta="pq",
             ambient="p+q", sub="m", G="U({p},{q})",
             H="U(r,s) x U({p}-r,{q}-s)",
             union="r+s = {m}, r <= {p}, s <= {q}"),
    50: dict(ring="H", kind="herm", names=("p", "q", "m"), delta="pq",
             ambient="p+q", sub="m", G="Sp({p},{q})",
             H="Sp(r,s) x Sp({p}-r,{q}-s)",
             union="r+s = {m}, r <= {p}, s <= {q}"),
    51: dict(ring="H", kind="antiherm", names=("m", "n"), delta="jdiag",
             ambient="m+n", sub="m", G="SO*({2*(m+n)})",
             H="SO*({2*m}) x SO*({2*n})"),
}

_L5 = {
    52: dict(ring="R"), 53: dict(ring="C"), 54: dict(ring="H"),
}


def _family(entry_id: int) -> int:
    if not isinstance(entry_id, int) or entry_id < 1:
        raise BadParams("no entry %r" % (entry_id,))
    if entry_id <= 30:
        return 1
    if entry_id <= 37:
        return 2
    if entry_id <= 44:
        return 3
    if entry_id <= 51:
        return 4
    if entry_id <= 54:
        return 5
    raise BadParams("no entry %r" % (entry_id,))


def param_names(entry_id: int):
    fam = _family(entry_id)
    if fam == 1:
        return ("p", "q") if _L1[entry_id]["growth"] == "pq" else ("n",)
    if fam in (2, 3):
        return ("n",)
    if fam == 4:
        return _L4[entry_id]["names"]
    return ("p", "q")


@dataclass(eq=False)
class SeriesEntry:
    id: int
    list_no: int
    params: dict
    star: bool
    ring: str
    ambient_dim: int
    form_B: object = None
    semiinv_J: object = None
    form_D: object = None
    mu: object = None
    G: object = None
    G_star: object = None
    GLJ: object = None
    UD: object = None
    H: object = None
    base_q1: Subspace = None
    base_q2: Subspace = None
    subspace_dim: object = None
    labels: dict = field(default_factory=dict)
    note: str = None
    expected: dict = field(default_factory=dict)

    @property
    def descriptors(self) -> dict:
        return {"G": self.G, "G_star": self.G_star, "GLJ": self.GLJ,
                "UD": self.UD, "H": self.H}


def _delta_matrix(tag: str, ring: str, m: int, prm: dict) -> Matrix:
    if tag == "pq":
        return gram_diag_pq(ring, prm["p"], prm["q"])
    if tag == "id":
        return gram_identity(ring, m)
    if tag == "symp":
        return gram_symplectic(ring, m // 2)
    if tag == "minus_i":
        return gram_minus_i_diag(m)
    return gram_j_diag(m)


def _swap_matrix(ring: str, m: int, eps: int) -> Matrix:
    ident = Matrix.identity(ring, m)
    zero = Matrix.zeros(ring, m, m)
    top_right = ident if eps == 1 else -ident
    return block([[zero, top_right], [ident, zero]])


def _split_pair(ring, kind, lin, eps, delta: Matrix):
    """Canonical consistent pair with isotropic e/f blocks swapped by J."""
    ft = FormType(ring, _KIND_CONST[kind])
    m = delta.rows
    zero = Matrix.zeros(ring, m, m)
    sigma = delta.conj_transpose() if ft.sesquilinear else delta.transpose()
    top = sigma if ft.kappa == 1 else -sigma
    gram = block([[zero, top], [delta, zero]])
    return Form(ft, gram), Semiinvolution(lin, _swap_matrix(ring, m, eps), eps)


def _require_params(entry_id: int, params: dict):
    names = param_names(entry_id)
    if set(params) != set(names):
        raise BadParams("entry %d takes parameters %s" %
                        (entry_id, ", ".join(names)))
    for name in names:
        value = params[name]
        if not isinstance(value, int):
            raise BadParams("parameter %s must be an integer" % name)
    ordered = {name: params[name] for name in names}
    fam = _family(entry_id)
    if fam == 1 and "p" in ordered:
        if ordered["p"] < 0 or ordered["q"] < 0 \
                or ordered["p"] + ordered["q"] < 1:
            raise BadParams("need p, q >= 0 with p + q >= 1")
    elif fam == 4 and entry_id in (45, 49, 50):
        p, q, m = ordered["p"], ordered["q"], ordered["m"]
        if p < 1 or q < 1:
            raise BadParams("need p, q >= 1")
        if not 1 <= m <= p + q - 1:
            raise BadParams("need 1 <= m <= p + q - 1")
    else:
        for name, value in ordered.items():
            if value < 1:
                raise BadParams("parameter %s must be >= 1" % name)
    return ordered


def build(entry_id: int, **params) -> SeriesEntry:
    """Instantiate one series entry at concrete parameters."""
    fam = _family(entry_id)
    prm = _require_params(entry_id, params)
    if fam == 1:
        return _build_l1(entry_id, prm)
    if fam == 2:
        return _build_l2(entry_id, prm)
    if fam == 3:
        return _build_l3(entry_id, prm)
    if fam == 4:
        return _build_l4(entry_id, prm)
    return _build_l5(entry_id, prm)


def _base_blocks(ring, m):
    q1 = Subspace.coordinate(ring, 2 * m, range(m))
    q2 = Subspace.coordinate(ring, 2 * m, range(m, 2 * m))
    return q1, q2


def _label_set(row, prm, fam):
    labels = {"G": _fmt(row["G"], prm), "H": _fmt(row["H"], prm)}
    labels["space"] = labels["G"] + " / " + labels["H"]
    if "union" in row:
        labels["union"] = _fmt(row["union"], prm)
    if fam == 1:
        labels["G_star"] = _fmt(row["Gstar"], prm)
        labels["GLJ"] = _fmt(row["GLJ"], prm)
        labels["UD"] = _fmt(row["UD"], prm)
    return labels


def _build_l1(entry_id, prm):
    row = _L1[entry_id]
    ring = row["ring"]
    if row["growth"] == "pq":
        m = prm["p"] + prm["q"]
    elif row["growth"] == "2n":
        m = 2 * prm["n"]
    else:
        m = prm["n"]
    delta = _delta_matrix(row["delta"], ring, m, prm)
    form_b, semi = _split_pair(ring, row["kind"], row["lin"], row["eps"],
                               delta)
    mu = detect_mu(form_b, semi)
    form_d = managing_form(form_b, semi)
    q1, q2 = _base_blocks(ring, m)
    labels = _label_set(row, prm, 1)
    if row["d_inertia"] is None:
        expected_inertia = None
    else:
        expected_inertia = tuple(
            int(v) for v in _fmt("{%s}" % row["d_inertia"].replace(",", "},{"),
                                 prm).split(","))
    entry = SeriesEntry(
        id=entry_id, list_no=1, params=prm, star=entry_id in STAR_IDS,
        ring=ring, ambient_dim=2 * m,
        form_B=form_b, semiinv_J=semi, form_D=form_d, mu=mu,
        G=form_centralizer_group(form_b, semi, label=labels["G"]),
        G_star=form_group(form_b, label=labels["G_star"]),
        GLJ=centralizer_group(semi, label=labels["GLJ"]),
        UD=form_group(form_d, label=labels["UD"]),
        base_q1=q1, base_q2=q2, labels=labels, note=row.get("note"),
        expected={"mu": row["mu"], "d_kind": row["d_kind"],
                  "d_inertia": expected_inertia},
    )
    entry.H = form_group(form_d.restrict(q1), label=labels["H"])
    return entry


def _build_l2(entry_id, prm):
    row = _L2[entry_id]
    ring, n = row["ring"], prm["n"]
    ft = FormType(ring, _KIND_CONST[row["kind"]])
    form_b = Form(ft, split_gram(ft, n))
    q1, q2 = _base_blocks(ring, n)
    labels = _label_set(row, prm, 2)
    g_desc = form_group(form_b, label=labels["G"])
    return SeriesEntry(
        id=entry_id, list_no=2, params=prm, star=False, ring=ring,
        ambient_dim=2 * n, form_B=form_b,
        G=g_desc,
        G_star=product_group(g_desc, g_desc,
                             label=labels["G"] + " x " + labels["G"]),
        H=gl_group(ring, n, label=labels["H"]),
        base_q1=q1, base_q2=q2, labels=labels,
    )


def _build_l3(entry_id, prm):
    row = _L3[entry_id]
    ring, n = row["ring"], prm["n"]
    semi = Semiinvolution(row["lin"], _swap_matrix(ring, n, row["eps"]),
                          row["eps"])
    q1, q2 = _base_blocks(ring, n)
    row = dict(row, H="GL({n},%s)" % ring)
    labels = _label_set(row, prm, 3)
    labels["G_star"] = _fmt("GL({2*n},%s)" % ring, prm)
    return SeriesEntry(
        id=entry_id, list_no=3, params=prm, star=False, ring=ring,
        ambient_dim=2 * n, semiinv_J=semi,
        G=centralizer_group(semi, label=labels["G"]),
        G_star=gl_group(ring, 2 * n, label=labels["G_star"]),
        H=gl_group(ring, n, label=labels["H"]),
        base_q1=q1, base_q2=q2, labels=labels,
    )


def _l4_geometry(entry_id, prm):
    row = _L4[entry_id]
    ring = row["ring"]
    if entry_id in (45, 49, 50):
        ambient = prm["p"] + prm["q"]
        sub_dim = prm["m"]
        r = min(sub_dim, prm["p"])
        picks = list(range(r)) + list(range(prm["p"], prm["p"] + sub_dim - r))
    elif entry_id in (46, 48):
        half = prm["k"] + prm["l"]
        ambient = 2 * half
        sub_dim = 2 * prm["k"]
        picks = list(range(prm["k"])) + list(range(half, half + prm["k"]))
    elif entry_id == 47:
        ambient = prm["n"] + prm["m"]
        sub_dim = prm["n"]
        picks = list(range(sub_dim))
    else:
        ambient = prm["m"] + prm["n"]
        sub_dim = prm["m"]
        picks = list(range(sub_dim))
    gram = _delta_matrix(row["delta"], ring, ambient, prm)
    return ring, ambient, sub_dim, picks, gram


def _build_l4(entry_id, prm):
    row = _L4[entry_id]
    ring, ambient, sub_dim, picks, gram = _l4_geometry(entry_id, prm)
    form_d = Form(FormType(ring, _KIND_CONST[row["kind"]]), gram)
    rest = [i for i in range(ambient) if i not in picks]
    q1 = Subspace.coordinate(ring, ambient, picks)
    q2 = Subspace.coordinate(ring, ambient, rest)
    labels = _label_set(row, prm, 4)
    labels["G_star"] = "GL(%d,%s)" % (ambient, ring)
    h1 = form_group(form_d.restrict(q1))
    h2 = form_group(form_d.restrict(q2))
    return SeriesEntry(
        id=entry_id, list_no=4, params=prm, star=entry_id in STAR_IDS,
        ring=ring, ambient_dim=ambient, form_D=form_d,
        G=form_group(form_d, label=labels["G"]),
        G_star=gl_group(ring, ambient, label=labels["G_star"]),
        H=product_group(h1, h2, label=labels["H"]),
        base_q1=q1, base_q2=q2, subspace_dim=sub_dim, labels=labels,
    )


def _build_l5(entry_id, prm):
    ring = _L5[entry_id]["ring"]
    p, q = prm["p"], prm["q"]
    row = dict(G="GL({p+q},%s)" % ring,
               H="GL({p},%s) x GL({q},%s)" % (ring, ring))
    labels = _label_set(row, prm, 5)
    g_desc = gl_group(ring, p + q, label=labels["G"])
    return SeriesEntry(
        id=entry_id, list_no=5, params=prm, star=False, ring=ring,
        ambient_dim=p + q,
        G=g_desc,
        G_star=product_group(g_desc, g_desc,
                             label=labels["G"] + " x " + labels["G"]),
        H=product_group(gl_group(ring, p), gl_group(ring, q),
                        label=labels["H"]),
        base_q1=Subspace.coordinate(ring, p + q, range(p)),
        base_q2=Subspace.coordinate(ring, p + q, range(p, p + q)),
        labels=labels,
    )


def valid_params(entry_id: int, max_dim: int):
    """All parameter dicts keeping the ambient dimension within max_dim."""
    fam = _family(entry_id)
    out = []
    if fam == 1:
        row = _L1[entry_id]
        if row["growth"] == "pq":
            for total in range(1, max_dim // 2 + 1):
                for p in range(total + 1):
                    out.append({"p": p, "q": total - p})
        elif row["growth"] == "2n":
            out = [{"n": n} for n in range(1, max_dim // 4 + 1)]
        else:
            out = [{"n": n} for n in range(1, max_dim // 2 + 1)]
    elif fam in (2, 3):
        out = [{"n": n} for n in range(1, max_dim // 2 + 1)]
    elif fam == 4:
        if entry_id in (45, 49, 50):
            for p in range(1, max_dim):
                for q in range(1, max_dim - p + 1):
                    for m in range(1, p + q):
                        out.append({"p": p, "q": q, "m": m})
        elif entry_id in (46, 48):
            for k in range(1, max_dim // 2):
                for l in range(1, max_dim // 2 - k + 1):
                    out.append({"k": k, "l": l})
        elif entry_id == 47:
            for n in range(1, max_dim):
                for m in range(1, max_dim - n + 1):
                    out.append({"n": n, "m": m})
        else:
            for m in range(1, max_dim):
                for n in range(1, max_dim - m + 1):
                    out.append({"m": m, "n": n})
    else:
        for p in range(1, max_dim):
            for q in range(1, max_dim - p + 1):
                out.append({"p": p, "q": q})
    return out


def derive_seed(*parts) -> int:
    """Stable integer seed from arbitrary labels."""
    text = ":".join(str(p) for p in parts)
    digest = hashlib.sha512(text.encode("utf-8")).digest()
    return int.from_bytes(digest[:8], "big")


def _random_invertible(ring, n, rng):
    comps = NCOMP[ring]
    for _ in range(64):
        rows = [[Scalar(ring, tuple(rng.randint(-3, 3)
                                    for _ in range(comps)))
                 for _ in range(n)] for _ in range(n)]
        cand = Matrix.from_rows(ring, rows)
        if is_invertible(cand):
            return cand
    raise RuntimeError("could not sample an invertible matrix")


def verify_entry(entry: SeriesEntry, trials: int = 20, seed: int = 0,
                 identity_samples: int = 100) -> dict:
    """Run the conformance battery; failures land in the report."""
    checks = []

    def record(name, ok, detail=""):
        checks.append({"name": name, "pass": bool(ok), "detail": detail})

    base = spaces.base_point(entry)
    record("base_membership",
           spaces.membership(entry, base.q1, base.q2))

    bad = None
    for t in range(trials):
        g = cayley_sample(entry.G, derive_seed(seed, entry.id,
                                               sorted(entry.params.items()),
                                               "act", t))
        if not in_group(entry.G, g):
            bad = "sample %d left the group" % t
            break
        moved = spaces.act(entry, g, base)
        if not spaces.membership(entry, moved.q1, moved.q2):
            bad = "sample %d broke membership" % t
            break
    record("group_actions", bad is None, bad or "%d samples" % trials)

    if entry.list_no == 1:
        record("mu_match", entry.mu == entry.expected["mu"],
               "computed %+d, table %+d" % (entry.mu, entry.expected["mu"]))
        d_ok = entry.form_D.form_type == FormType(
            entry.ring, _KIND_CONST[entry.expected["d_kind"]])
        detail = "managing form is %r" % entry.form_D.form_type
        if d_ok and entry.expected["d_inertia"] is not None:
            found = entry.form_D.inertia()
            d_ok = found == entry.expected["d_inertia"]
            detail += ", inertia %s" % (found,)
        record("managing_type", d_ok, detail)

        rng = random.Random(derive_seed(seed, entry.id,
                                        sorted(entry.params.items()),
                                        "ident"))
        samples = []
        for k in range(identity_samples):
            if k % 3 == 0:
                samples.append(cayley_sample(entry.G, rng.randrange(2 ** 32)))
            else:
                samples.append(_random_invertible(entry.ring,
                                                  entry.ambient_dim, rng))
        failures = centralizer_identities_check(entry.form_B, entry.semiinv_J,
                                                samples)
        record("membership_identities", not failures,
               "%d disagreements" % len(failures))

    if entry.list_no in (1, 3):
        semi = entry.semiinv_J
        tag, label, expect_dim = species(semi)
        desc = entry.GLJ if entry.list_no == 1 else entry.G
        found = lie_algebra_dim(desc)
        record("centralizer_species", found == expect_dim,
               "species %s (%s): classified %d, computed %d"
               % (tag, label, expect_dim, found))

    dim_g = lie_algebra_dim(entry.G)
    dim_h = lie_algebra_dim(entry.H)
    dim_gr = charts.grassmannian_dim(entry)
    record("dimension_identity", dim_g - dim_h == dim_gr,
           "dim G = %d, dim H = %d, chart count = %d"
           % (dim_g, dim_h, dim_gr))

    report = {"id": entry.id, "params": entry.params, "checks": checks,
              "ok": all(c["pass"] for c in checks)}
    if entry.note:
        report["note"] = entry.note
    return report


def stabilizer_embed(entry: SeriesEntry, h1: Matrix) -> Matrix:
    """Extend a symmetry of D|Q1 to a group element fixing the base pair."""
    if entry.list_no != 1:
        raise TypeMismatch("stabilizer extension needs a family-1 entry")
    half = entry.ambient_dim // 2
    if h1.ring != entry.ring or h1.rows != half or h1.cols != half:
        raise TypeMismatch("need a %d x %d matrix over %s"
                           % (half, half, entry.ring))
    d_prime = entry.form_D.restrict(entry.base_q1)
    if not preserves_form(d_prime, h1):
        raise NotInUDprime("matrix does not preserve the restricted form")
    g = stabilizer_embed_split(h1, entry.semiinv_J)
    if not in_group(entry.G, g):
        raise AssertionError("extension left the group")
    return g


# -- table rendering ---------------------------------------------------------


_FAMILY_HEADERS = {
    1: ("Family 1: pairs of maximal isotropic subspaces swapped by a "
        "semiinvolution",
        "(V carries a split form B and a consistent semiinvolution J "
        "with B(Jv,Jw) = mu B(v,w), conjugated when J is antilinear)"),
    2: ("Family 2: independent pairs of maximal isotropic subspaces",
        "(V carries a split form B; G* = G x G acts on pairs)"),
    3: ("Family 3: splittings V = Q1 (+) Q2 with J Q1 = Q2",
        "(V carries a semiinvolution J alone; G* = GL(V))"),
    4: ("Family 4: subspaces with nondegenerate restriction of a form D",
        "(Q2 is the orthocomplement of Q1; G* = GL(V))"),
    5: ("Family 5: plain splittings of fixed dimensions",
        "(no form, no semiinvolution; G* = G x G)"),
}


def _head_line(entry_id, row_g, row_h, union=None):
    star = "*" if entry_id in STAR_IDS else "."
    head = "%2d%s  %s / %s" % (entry_id, star, _generic(row_g),
                               _generic(row_h))
    if union:
        head += "   [union over %s]" % _generic(union)
    return head


def generic_lines(entry_id: int):
    """The uninstantiated table block for one entry."""
    fam = _family(entry_id)
    if fam == 1:
        row = _L1[entry_id]
        lines = [_head_line(entry_id, row["G"], row["H"], row.get("union"))]
        twist = "conj B(v,w)" if row["lin"] == ANTILINEAR else "B(v,w)"
        lines.append("     V = %s^(%s), B %s, J %s, J^2 = %+d, "
                     "B(Jv,Jw) = %s%s"
                     % (row["ring"], _AMBIENT_EXPR[row["growth"]],
                        _KIND_WORDS[row["kind"]],
                        "antilinear" if row["lin"] == ANTILINEAR
                        else "linear",
                        row["eps"], "+" if row["mu"] == 1 else "-", twist))
        lines.append("     G* = %s" % _generic(row["Gstar"]))
        lines.append("     GL^J = %s, U(D) = %s"
                     % (_generic(row["GLJ"]), _generic(row["UD"])))
        return lines
    if fam == 2:
        row = _L2[entry_id]
        return [
            _head_line(entry_id, row["G"], row["H"]),
            "     V = %s^(2n), B %s split"
            % (row["ring"], _KIND_WORDS[row["kind"]]),
            "     G* = G x G",
        ]
    if fam == 3:
        row = _L3[entry_id]
        return [
            _head_line(entry_id, row["G"], "GL({n},%s)" % row["ring"]),
            "     V = %s^(2n), J %s, J^2 = %+d"
            % (row["ring"],
               "antilinear" if row["lin"] == ANTILINEAR else "linear",
               row["eps"]),
            "     G* = GL(2n,%s)" % row["ring"],
        ]
    if fam == 4:
        row = _L4[entry_id]
        sub_expr = row["sub"]
        return [
            _head_line(entry_id, row["G"], row["H"], row.get("union")),
            "     V = %s^(%s), D %s; Q1 of dimension %s with D|Q1 "
            "nondegenerate"
            % (row["ring"], row["ambient"], _KIND_WORDS[row["kind"]],
               sub_expr),
            "     G* = GL(%s,%s)" % (row["ambient"], row["ring"]),
        ]
    ring = _L5[entry_id]["ring"]
    return [
        _head_line(entry_id, "GL({p+q},%s)" % ring,
                   "GL({p},%s) x GL({q},%s)" % (ring, ring)),
        "     V = %s^(p+q), dim Q1 = p, dim Q2 = q" % ring,
        "     G* = G x G",
    ]


def render_table() -> str:
    """The full 54-entry listing, grouped by family."""
    out = ["Series catalog: 54 families of subspace-pair realizations",
           "=" * 58]
    for fam in range(1, 6):
        head, explain = _FAMILY_HEADERS[fam]
        out.extend(["", head, "   " + explain, ""])
        for entry_id in range(1, 55):
            if _family(entry_id) == fam:
                out.extend(generic_lines(entry_id))
                out.append("")
    return "\n".join(out).rstrip() + "\n"


def generic_rows():
    """One summary dict per entry, for machine consumption."""
    rows = []
    for entry_id in range(1, 55):
        fam = _family(entry_id)
        if fam == 1:
            row = _L1[entry_id]
            space = "%s / %s" % (_generic(row["G"]), _generic(row["H"]))
        elif fam == 2:
            row = _L2[entry_id]
            space = "%s / %s" % (_generic(row["G"]), _generic(row["H"]))
        elif fam == 3:
            row = _L3[entry_id]
            space = "%s / GL(n,%s)" % (_generic(row["G"]), row["ring"])
        elif fam == 4:
            row = _L4[entry_id]
            space = "%s / %s" % (_generic(row["G"]), _generic(row["H"]))
        else:
            ring = _L5[entry_id]["ring"]
            space = ("GL(p+q,%s) / GL(p,%s) x GL(q,%s)"
                     % (ring, ring, ring))
        rows.append({"id": entry_id, "list": fam,
                     "star": entry_id in STAR_IDS, "space": space,
                     "params": list(param_names(entry_id))})
    return rows

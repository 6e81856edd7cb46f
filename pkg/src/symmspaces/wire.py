"""JSON encoding of every value crossing the CLI boundary.

Scalars are arrays of 1/2/4 exact rational strings, matrices are
row-major nested arrays of those, and the composite objects carry
enough tags to rebuild themselves.  docs/wire.md spells out the schemas.
"""

from .rings import Scalar, TypeMismatch, scalar_from_json, scalar_to_json
from .linalg import Matrix
from .subspaces import Subspace
from .forms import (ANTIHERMITIAN, Form, FormType, HERMITIAN, SKEW,
                    SYMMETRIC)
from .involutions import ANTILINEAR, LINEAR, Semiinvolution
from .charts import AngularCoords, Chart
from .spaces import SpacePoint
from .invariants import DoubleRatio


class BadWire(Exception):
    """Malformed or inconsistent JSON input."""


_KIND_TO_WIRE = {SYMMETRIC: "sym", SKEW: "skew", HERMITIAN: "herm",
                 ANTIHERMITIAN: "antiherm"}
_KIND_FROM_WIRE = {v: k for k, v in _KIND_TO_WIRE.items()}
_LIN_TO_WIRE = {LINEAR: "lin", ANTILINEAR: "antilin"}
_LIN_FROM_WIRE = {v: k for k, v in _LIN_TO_WIRE.items()}


def _need(obj, key, kinds):
    if not isinstance(obj, dict) or key not in obj:
        raise BadWire("missing field %r" % key)
    value = obj[key]
    if not isinstance(value, kinds):
        raise BadWire("field %r has the wrong shape" % key)
    return value


def matrix_to_json(a: Matrix) -> dict:
    return {"ring": a.ring, "rows": a.rows, "cols": a.cols,
            "entries": [[scalar_to_json(a.raw(i, j))
                         for j in range(a.cols)] for i in range(a.rows)]}


def matrix_from_json(obj) -> Matrix:
    ring = _need(obj, "ring", str)
    rows = _need(obj, "rows", int)
    cols = _need(obj, "cols", int)
    entries = _need(obj, "entries", list)
    if rows < 0 or cols < 0 or len(entries) != rows:
        raise BadWire("matrix shape does not match entries")
    body = []
    try:
        for row in entries:
            if len(row) != cols:
                raise BadWire("matrix shape does not match entries")
            body.append([Scalar(ring, scalar_from_json(ring, cell))
                         for cell in row])
    except (TypeMismatch, TypeError, ValueError) as exc:
        raise BadWire("bad matrix entry: %s" % exc)
    return Matrix.from_rows(ring, body)


def subspace_to_json(s: Subspace) -> dict:
    return {"ring": s.ring, "ambient_dim": s.ambient_dim,
            "basis": matrix_to_json(s.basis)}


def subspace_from_json(obj) -> Subspace:
    ring = _need(obj, "ring", str)
    ambient = _need(obj, "ambient_dim", int)
    basis = matrix_from_json(_need(obj, "basis", dict))
    if basis.ring != ring or basis.rows != ambient:
        raise BadWire("subspace basis does not match its tags")
    return Subspace(basis)


def form_to_json(f: Form) -> dict:
    return {"ring": f.ring, "kind": _KIND_TO_WIRE[f.form_type.kind],
            "gram": matrix_to_json(f.gram)}


def form_from_json(obj) -> Form:
    kind = _need(obj, "kind", str)
    if kind not in _KIND_FROM_WIRE:
        raise BadWire("unknown form kind %r" % kind)
    ft = FormType(_need(obj, "ring", str), _KIND_FROM_WIRE[kind])
    return Form(ft, matrix_from_json(_need(obj, "gram", dict)))


def semiinvolution_to_json(j: Semiinvolution) -> dict:
    return {"linearity": _LIN_TO_WIRE[j.linearity], "epsilon": j.epsilon,
            "matrix": matrix_to_json(j.matrix)}


def semiinvolution_from_json(obj) -> Semiinvolution:
    lin = _need(obj, "linearity", str)
    if lin not in _LIN_FROM_WIRE:
        raise BadWire("unknown linearity %r" % lin)
    eps = _need(obj, "epsilon", int)
    return Semiinvolution(_LIN_FROM_WIRE[lin],
                          matrix_from_json(_need(obj, "matrix", dict)), eps)


def group_to_json(desc) -> dict:
    out = {"family": desc.family, "label": desc.label}
    if desc.form is not None:
        out["form"] = form_to_json(desc.form)
    if desc.semiinv is not None:
        out["semiinvolution"] = semiinvolution_to_json(desc.semiinv)
    if desc.family == "GL":
        out["ring"] = desc.ring
        out["size"] = desc.size
    if desc.factors:
        out["factors"] = [group_to_json(f) for f in desc.factors]
    return out


def point_to_json(pt: SpacePoint) -> dict:
    return {"entry": pt.entry_id, "q1": subspace_to_json(pt.q1),
            "q2": subspace_to_json(pt.q2)}


def point_from_json(obj) -> SpacePoint:
    entry_id = _need(obj, "entry", int)
    q1 = subspace_from_json(_need(obj, "q1", dict))
    q2 = subspace_from_json(_need(obj, "q2", dict))
    return SpacePoint(entry_id, q1, q2)


def chart_to_json(chart: Chart) -> dict:
    return {"entry": chart.entry_id, "x": subspace_to_json(chart.x),
            "y": subspace_to_json(chart.y)}


def coords_to_json(coords: AngularCoords) -> dict:
    return {"M": matrix_to_json(coords.m), "N": matrix_to_json(coords.n)}


def coords_from_json(obj) -> AngularCoords:
    return AngularCoords(matrix_from_json(_need(obj, "M", dict)),
                         matrix_from_json(_need(obj, "N", dict)))


def double_ratio_to_json(dr: DoubleRatio) -> dict:
    return {"ring": dr.ring,
            "charpoly": [scalar_to_json(c.parts) for c in dr.coeffs]}


def double_ratio_from_json(obj) -> DoubleRatio:
    ring = _need(obj, "ring", str)
    coeffs = [Scalar(ring, scalar_from_json(ring, c))
              for c in _need(obj, "charpoly", list)]
    return DoubleRatio(ring, tuple(coeffs))

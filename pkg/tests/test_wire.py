"""JSON round trips for everything the CLI reads or writes."""

import json
from fractions import Fraction

import pytest

from symmspaces import catalog, spaces
from symmspaces.charts import base_chart, to_coords
from symmspaces.invariants import double_ratio
from symmspaces.linalg import Matrix
from symmspaces.rings import Scalar
from symmspaces.subspaces import Subspace
from symmspaces.wire import (BadWire, chart_to_json, coords_from_json,
                             coords_to_json, double_ratio_from_json,
                             double_ratio_to_json, form_from_json,
                             form_to_json, group_to_json, matrix_from_json,
                             matrix_to_json, point_from_json, point_to_json,
                             semiinvolution_from_json, semiinvolution_to_json,
                             subspace_from_json, subspace_to_json)


def test_matrix_round_trip_all_rings():
    half = Fraction(1, 2)
    cases = [
        Matrix.from_rows("R", [[Scalar("R", (half,)), Scalar("R", (-3,))]]),
        Matrix.from_rows("C", [[Scalar("C", (0, 1))], [Scalar("C", (2, half))]]),
        Matrix.from_rows("H", [[Scalar("H", (1, -2, 3, Fraction(4, 7)))]]),
    ]
    for a in cases:
        obj = matrix_to_json(a)
        json.dumps(obj)
        assert matrix_from_json(obj) == a


def test_matrix_bad_inputs():
    with pytest.raises(BadWire):
        matrix_from_json({"ring": "R", "rows": 1, "cols": 1})
    with pytest.raises(BadWire):
        matrix_from_json({"ring": "R", "rows": 2, "cols": 1,
                          "entries": [[["1"]]]})
    with pytest.raises(BadWire):
        matrix_from_json({"ring": "R", "rows": 1, "cols": 2,
                          "entries": [[["1"]]]})
    with pytest.raises(BadWire):
        matrix_from_json({"ring": "R", "rows": 1, "cols": 1,
                          "entries": [[["1", "0"]]]})
    with pytest.raises(BadWire):
        matrix_from_json({"ring": "R", "rows": 1, "cols": 1,
                          "entries": [[["one"]]]})


def test_subspace_round_trip_is_canonical():
    one = Scalar("R", (1,))
    two = Scalar("R", (2,))
    s = Subspace(Matrix.from_rows("R", [[two, one], [two, one], [one, one]]))
    obj = subspace_to_json(s)
    json.dumps(obj)
    assert subspace_from_json(obj) == s


def test_subspace_tag_mismatch():
    s = Subspace.coordinate("R", 3, [0])
    obj = subspace_to_json(s)
    obj["ambient_dim"] = 4
    with pytest.raises(BadWire):
        subspace_from_json(obj)


def test_form_and_semiinvolution_round_trip():
    entry = catalog.build(11, p=1, q=1)
    fob = form_to_json(entry.form_B)
    assert fob["kind"] in ("sym", "skew", "herm", "antiherm")
    json.dumps(fob)
    back = form_from_json(fob)
    assert back.gram == entry.form_B.gram
    assert back.form_type == entry.form_B.form_type

    job = semiinvolution_to_json(entry.semiinv_J)
    assert job["linearity"] in ("lin", "antilin")
    json.dumps(job)
    assert semiinvolution_from_json(job) == entry.semiinv_J


def test_form_bad_kind_and_linearity():
    entry = catalog.build(11, p=1, q=1)
    fob = form_to_json(entry.form_B)
    fob["kind"] = "symmetric-ish"
    with pytest.raises(BadWire):
        form_from_json(fob)
    job = semiinvolution_to_json(entry.semiinv_J)
    job["linearity"] = "sideways"
    with pytest.raises(BadWire):
        semiinvolution_from_json(job)


def test_group_encoding_variants():
    entry = catalog.build(3, n=1)
    gob = group_to_json(entry.G)
    assert gob["label"] and gob["family"]
    json.dumps(gob)
    entry5 = catalog.build(52, p=1, q=2)
    gl = group_to_json(entry5.G)
    assert gl["family"] == "GL" and gl["ring"] == "R" and gl["size"] == 3
    prod = group_to_json(entry5.H)
    assert [f["size"] for f in prod["factors"]] == [1, 2]


def test_point_chart_coords_round_trip():
    entry = catalog.build(3, n=2)
    pt = spaces.sample_point(entry, 6)
    pob = point_to_json(pt)
    json.dumps(pob)
    assert point_from_json(pob) == pt

    chart = base_chart(entry)
    cob = chart_to_json(chart)
    assert set(cob) == {"entry", "x", "y"}

    coords = to_coords(chart, pt)
    kob = coords_to_json(coords)
    json.dumps(kob)
    assert coords_from_json(kob) == coords


def test_double_ratio_round_trip():
    entry = catalog.build(3, n=2)
    ratio = double_ratio(entry, spaces.sample_point(entry, 0),
                         spaces.sample_point(entry, 1))
    obj = double_ratio_to_json(ratio)
    json.dumps(obj)
    assert double_ratio_from_json(obj) == ratio


def test_missing_point_fields():
    with pytest.raises(BadWire):
        point_from_json({"entry": 3})
    with pytest.raises(BadWire):
        coords_from_json({"M": {"ring": "R", "rows": 0, "cols": 0,
                                "entries": []}})

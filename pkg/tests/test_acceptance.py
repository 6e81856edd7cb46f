"""Acceptance battery: one test per shipped guarantee, all exact.

Run with `pytest tests/test_acceptance.py -s -q` to see the one-line
verdict per criterion even when everything passes.
"""

import pathlib
import random
import time
from contextlib import contextmanager
from fractions import Fraction

from symmspaces import catalog, cli, spaces
from symmspaces.catalog import STAR_IDS, build, derive_seed, valid_params
from symmspaces.charts import (ChartBoundary, NotTransverse, act_on_coords,
                               base_chart, from_coords, grassmannian_dim,
                               shape_report, to_coords)
from symmspaces.invariants import cross_ratio, double_ratio, \
    double_ratio_from_coords, projective_point
from symmspaces.involutions import cayley_sample, lie_algebra_dim
from symmspaces.rings import Scalar
from symmspaces.spaces import SpacePoint

GOLDEN = pathlib.Path(__file__).resolve().parent.parent / "docs" / "catalog.txt"

FAMILY_ONE_KEYS = {"transversal", "isotropy_M", "exchange", "orthogonality"}


@contextmanager
def criterion(num, name):
    try:
        yield
    except BaseException:
        print("ACCEPTANCE %d %s: FAIL" % (num, name))
        raise
    print("ACCEPTANCE %d %s: PASS" % (num, name))


def minimal_params(eid):
    names = catalog.param_names(eid)
    if names == ("p", "q"):
        return {"p": 1, "q": 1}
    return {name: 1 for name in names}


def all_entries_small():
    for eid in range(1, 55):
        yield build(eid, **minimal_params(eid))


def test_criterion_1_catalog_table(capsys):
    with criterion(1, "catalog-table"):
        rows = catalog.generic_rows()
        assert len(rows) == 54
        assert STAR_IDS == frozenset({3, 5, 14, 15, 20, 26, 30,
                                      45, 49, 50})
        assert sum(r["star"] for r in rows) == 10
        assert cli.main(["catalog", "list"]) == 0
        out = capsys.readouterr().out
        assert out == GOLDEN.read_text()


def test_criterion_2_verify_all(capsys):
    with criterion(2, "verify-all"):
        started = time.monotonic()
        code = cli.main(["verify", "all", "--max-dim", "6",
                         "--trials", "20", "--seed", "7"])
        elapsed = time.monotonic() - started
        capsys.readouterr()
        assert code == 0
        assert elapsed < 300


def test_criterion_3_dimension_identity():
    with criterion(3, "dimension-identity"):
        for eid in range(1, 55):
            for prm in valid_params(eid, 6):
                entry = build(eid, **prm)
                gap = lie_algebra_dim(entry.G) - lie_algebra_dim(entry.H)
                assert gap == grassmannian_dim(entry), (eid, prm)


def test_criterion_4_coordinate_round_trips():
    with criterion(4, "coordinate-round-trips"):
        for entry in all_entries_small():
            chart = base_chart(entry)
            trips = 0
            attempt = 0
            while trips < 100:
                assert attempt < 160, entry.id
                pt = spaces.sample_point(
                    entry, derive_seed("acc4", entry.id, attempt))
                attempt += 1
                try:
                    coords = to_coords(chart, pt)
                except NotTransverse:
                    continue
                assert from_coords(chart, coords) == pt, entry.id
                trips += 1
            moves = 0
            attempt = 0
            while moves < 50:
                assert attempt < 90, entry.id
                g = cayley_sample(entry.G, derive_seed("acc4g", entry.id,
                                                       attempt))
                pt = spaces.sample_point(
                    entry, derive_seed("acc4p", entry.id, attempt))
                attempt += 1
                try:
                    coords = to_coords(chart, pt)
                    direct = to_coords(chart, spaces.act(entry, g, pt))
                    through = act_on_coords(chart, g, coords)
                except (NotTransverse, ChartBoundary):
                    continue
                assert direct == through, entry.id
                moves += 1


def test_criterion_5_shape_conditions():
    with criterion(5, "shape-conditions"):
        for entry in all_entries_small():
            chart = base_chart(entry)
            checked = 0
            attempt = 0
            while checked < 10:
                assert attempt < 30, entry.id
                pt = spaces.sample_point(
                    entry, derive_seed("acc5", entry.id, attempt))
                attempt += 1
                try:
                    coords = to_coords(chart, pt)
                except NotTransverse:
                    continue
                report = shape_report(chart, coords)
                assert all(report.values()), (entry.id, report)
                if entry.list_no == 1:
                    # the three family-one conditions hold at once
                    assert set(report) == FAMILY_ONE_KEYS, entry.id
                checked += 1


def test_criterion_6_double_ratio():
    with criterion(6, "double-ratio"):
        for entry in all_entries_small():
            chart = base_chart(entry)
            done = 0
            agreed = 0
            attempt = 0
            while done < 30:
                assert attempt < 60, entry.id
                pt1 = spaces.sample_point(
                    entry, derive_seed("acc6a", entry.id, attempt))
                pt2 = spaces.sample_point(
                    entry, derive_seed("acc6b", entry.id, attempt))
                g = cayley_sample(entry.G, derive_seed("acc6g", entry.id,
                                                       attempt))
                attempt += 1
                try:
                    ratio = double_ratio(entry, pt1, pt2)
                except NotTransverse:
                    continue
                moved = double_ratio(entry, spaces.act(entry, g, pt1),
                                     spaces.act(entry, g, pt2))
                assert moved == ratio, entry.id
                done += 1
                try:
                    through = double_ratio_from_coords(
                        chart, to_coords(chart, pt1), to_coords(chart, pt2))
                except NotTransverse:
                    continue
                assert through == ratio, entry.id
                agreed += 1
            assert agreed >= 15, entry.id

        # the classical cross ratio on the projective line
        entry = build(52, p=1, q=1)
        rng = random.Random(derive_seed("acc6x"))
        quadruples = 0
        while quadruples < 100:
            vals = set()
            while len(vals) < 4:
                vals.add(Fraction(rng.randint(-30, 30), rng.randint(1, 12)))
            a, b, c, d = sorted(vals)
            pts = [projective_point("R", s) for s in (a, b, c, d)]
            ratio = double_ratio(entry,
                                 SpacePoint(entry.id, pts[0], pts[1]),
                                 SpacePoint(entry.id, pts[2], pts[3]))
            scalars = [Scalar("R", (s,)) for s in (a, b, c, d)]
            assert ratio.coeffs[1] == -cross_ratio(*scalars)
            quadruples += 1


def test_criterion_7_component_labels():
    with criterion(7, "component-labels"):
        for eid in sorted(STAR_IDS):
            names = catalog.param_names(eid)
            if names == ("n",):
                entry = build(eid, n=2)
            else:
                entry = build(eid, p=1, q=1, m=1)
            base = spaces.base_point(entry)
            label = spaces.component_index(entry, base)
            pt = base
            for t in range(20):
                g = cayley_sample(entry.G, derive_seed("acc7", eid, t))
                pt = spaces.act(entry, g, pt)
                assert spaces.component_index(entry, pt) == label, eid
            found = set()
            for cand in spaces.enumerate_component_points(entry):
                assert spaces.membership(entry, cand.q1, cand.q2), eid
                found.add(spaces.component_index(entry, cand))
            assert found == set(spaces.component_labels(entry)), eid


def test_criterion_8_isotropy_lemmas():
    with criterion(8, "isotropy-lemmas"):
        preserved = 0
        for eid in (1, 3, 8, 15, 19, 22, 26, 30):
            entry = build(eid, **minimal_params(eid))
            for t in range(13):
                u = cayley_sample(entry.G_star, derive_seed("acc8a", eid, t))
                iso = entry.base_q1.transform(u)
                assert entry.form_B.is_isotropic(iso), (eid, t)
                image = entry.semiinv_J.apply_to_subspace(iso)
                assert entry.form_B.is_isotropic(image), (eid, t)
                preserved += 1
        assert preserved >= 100

        complemented = 0
        for eid in (2, 5, 11, 14, 17, 20, 23, 27):
            entry = build(eid, **minimal_params(eid))
            for t in range(13):
                u = cayley_sample(entry.G_star, derive_seed("acc8b", eid, t))
                p_sub = entry.base_q1.transform(u)
                image = entry.semiinv_J.apply_to_subspace(p_sub)
                assert entry.form_D.orthocomplement(p_sub) == image, (eid, t)
                complemented += 1
        assert complemented >= 100

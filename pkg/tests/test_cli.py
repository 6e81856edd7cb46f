"""End-to-end command tests, run in process through main()."""

import json
import pathlib
from fractions import Fraction

from symmspaces import catalog, wire
from symmspaces.cli import (EXIT_CHECK_FAILED, EXIT_DEGENERATE, EXIT_OK,
                            EXIT_USAGE, main)
from symmspaces.invariants import projective_point
from symmspaces.spaces import SpacePoint
from symmspaces.subspaces import Subspace

GOLDEN = pathlib.Path(__file__).resolve().parent.parent / "docs" / "catalog.txt"


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_catalog_list_matches_golden(capsys):
    code, out, err = run(capsys, "catalog", "list")
    assert code == EXIT_OK and err == ""
    assert out == GOLDEN.read_text()


def test_catalog_list_json(capsys):
    code, out, _ = run(capsys, "catalog", "list", "--json")
    assert code == EXIT_OK
    rows = json.loads(out)
    assert len(rows) == 54
    assert rows[2]["star"] is True


def test_catalog_show_generic(capsys):
    code, out, _ = run(capsys, "catalog", "show", "13")
    assert code == EXIT_OK
    assert "parameters: n" in out


def test_catalog_show_instantiated_json(capsys):
    code, out, _ = run(capsys, "catalog", "show", "13", "--n", "1", "--json")
    assert code == EXIT_OK
    blob = json.loads(out)
    assert blob["id"] == 13 and blob["params"] == {"n": 1}
    assert set(blob["groups"]) >= {"G", "H", "G_star"}
    assert "B" in blob and "J" in blob and "D" in blob
    assert blob["mu"] in (1, -1)


def test_catalog_show_unknown_id(capsys):
    code, _, err = run(capsys, "catalog", "show", "99")
    assert code == EXIT_USAGE
    assert "valid ids" in err


def test_catalog_show_bad_params_json(capsys):
    code, out, _ = run(capsys, "catalog", "show", "3", "--p", "1", "--json")
    assert code == EXIT_USAGE
    assert "error" in json.loads(out)


def test_verify_single_entry(capsys):
    code, out, _ = run(capsys, "verify", "13", "--max-dim", "4",
                       "--trials", "5", "--seed", "1")
    assert code == EXIT_OK
    assert "summary:" in out and "all passed" in out


def test_verify_json_shape(capsys):
    code, out, _ = run(capsys, "verify", "32", "--max-dim", "4",
                       "--trials", "3", "--seed", "1", "--json")
    assert code == EXIT_OK
    blob = json.loads(out)
    assert blob["ok"] is True and blob["entries"] == 1
    assert blob["parameter_sets"] == len(catalog.valid_params(32, 4))


def test_verify_rejects_bad_target(capsys):
    code, _, err = run(capsys, "verify", "zero")
    assert code == EXIT_USAGE and "entry id" in err
    code, _, err = run(capsys, "verify", "77")
    assert code == EXIT_USAGE


def test_verify_catches_corrupted_registry(capsys, monkeypatch):
    # flip the recorded consistency constant; the battery must notice
    monkeypatch.setitem(catalog._L1[13], "mu", -catalog._L1[13]["mu"])
    code, out, _ = run(capsys, "verify", "13", "--max-dim", "2",
                       "--trials", "2", "--seed", "0")
    assert code == EXIT_CHECK_FAILED
    assert "failed mu_match" in out and "FAILURES" in out


def test_sample_deterministic(capsys):
    code1, out1, _ = run(capsys, "sample", "3", "--n", "2", "--seed", "5")
    code2, out2, _ = run(capsys, "sample", "3", "--n", "2", "--seed", "5")
    assert code1 == code2 == EXIT_OK
    assert out1 == out2
    pt = wire.point_from_json(json.loads(out1))
    assert pt.entry_id == 3


def test_sample_seed_env_fallback(capsys, monkeypatch):
    monkeypatch.setenv("SYMM_SEED", "5")
    _, out_env, _ = run(capsys, "sample", "3", "--n", "2")
    monkeypatch.delenv("SYMM_SEED")
    _, out_flag, _ = run(capsys, "sample", "3", "--n", "2", "--seed", "5")
    assert out_env == out_flag


def test_sample_bad_params(capsys):
    code, _, err = run(capsys, "sample", "3", "--p", "1")
    assert code == EXIT_USAGE


def fixture_pair(slopes):
    pts = [projective_point("R", Fraction(*s)) for s in slopes]
    return [wire.point_to_json(SpacePoint(52, pts[0], pts[1])),
            wire.point_to_json(SpacePoint(52, pts[2], pts[3]))]


def test_double_ratio_worked_example(capsys, tmp_path):
    path = tmp_path / "pts.json"
    path.write_text(json.dumps(fixture_pair(
        [(0, 1), (1, 1), (5, 3), (-7, 2)])))
    code, out, _ = run(capsys, "double-ratio", "52", "--p", "1", "--q", "1",
                       "--points", str(path))
    assert code == EXIT_OK
    assert "1, -45/14" in out

    code, out, _ = run(capsys, "double-ratio", "52", "--p", "1", "--q", "1",
                       "--points", str(path), "--json")
    assert code == EXIT_OK
    assert json.loads(out) == {"ring": "R", "charpoly": [["1"], ["-45/14"]]}


def test_double_ratio_degenerate_exit(capsys, tmp_path):
    # second point swaps the base axes, so Q1 of pt2 meets Q2 of pt1
    q_x = Subspace.coordinate("R", 2, [0])
    q_y = Subspace.coordinate("R", 2, [1])
    blob = [wire.point_to_json(SpacePoint(52, q_x, q_y)),
            wire.point_to_json(SpacePoint(52, q_y, q_x))]
    path = tmp_path / "deg.json"
    path.write_text(json.dumps(blob))
    code, _, err = run(capsys, "double-ratio", "52", "--p", "1", "--q", "1",
                       "--points", str(path))
    assert code == EXIT_DEGENERATE
    assert "degenerate" in err


def test_double_ratio_rejects_non_member(capsys, tmp_path):
    q_x = Subspace.coordinate("R", 2, [0])
    blob = [wire.point_to_json(SpacePoint(52, q_x, q_x))] * 2
    path = tmp_path / "bad.json"
    path.write_text(json.dumps(blob))
    code, _, err = run(capsys, "double-ratio", "52", "--p", "1", "--q", "1",
                       "--points", str(path))
    assert code == EXIT_USAGE
    assert "not a member" in err


def test_double_ratio_malformed_json(capsys, tmp_path):
    path = tmp_path / "junk.json"
    path.write_text(json.dumps([{"entry": 52}]))
    code, _, err = run(capsys, "double-ratio", "52", "--p", "1", "--q", "1",
                       "--points", str(path))
    assert code == EXIT_USAGE
    assert "bad point input" in err


def test_dims_text_and_json(capsys):
    code, out, _ = run(capsys, "dims", "32", "--n", "2")
    assert code == EXIT_OK and out.strip() == "(10, 4, 6)"
    code, out, _ = run(capsys, "dims", "32", "--n", "2", "--json")
    assert code == EXIT_OK and json.loads(out) == [10, 4, 6]

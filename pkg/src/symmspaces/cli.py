"""Batch front end over the JSON wire format.

Subcommands: catalog list/show, verify, sample, double-ratio, dims.
Exit codes: 0 success, 1 failed verification check, 2 usage error,
3 geometric degeneracy (a point fell outside the chart).  Output is
deterministic for a fixed command line; SYMM_SEED supplies the seed
when --seed is absent.
"""

import argparse
import json
import os
import sys

from . import catalog, charts, invariants, spaces, wire
from .catalog import BadParams, derive_seed
from .charts import NotTransverse
from .involutions import lie_algebra_dim
from .rings import TypeMismatch

EXIT_OK = 0
EXIT_CHECK_FAILED = 1
EXIT_USAGE = 2
EXIT_DEGENERATE = 3

_PARAM_FLAGS = ("n", "p", "q", "m", "k", "l")


def _fail(args, message: str, code: int) -> int:
    if getattr(args, "json", False):
        print(json.dumps({"error": message}, sort_keys=True))
    else:
        print("error: %s" % message, file=sys.stderr)
    return code


def _seed_of(args) -> int:
    if args.seed is not None:
        return args.seed
    env = os.environ.get("SYMM_SEED")
    if env is not None:
        try:
            return int(env)
        except ValueError:
            pass
    return 0


def _collect_params(args) -> dict:
    return {name: getattr(args, name) for name in _PARAM_FLAGS
            if getattr(args, name, None) is not None}


def _add_param_flags(parser):
    for name in _PARAM_FLAGS:
        parser.add_argument("--" + name, type=int, default=None,
                            help="entry parameter %s" % name)


def _add_common(parser, seed=False, jsonable=True):
    if seed:
        parser.add_argument("--seed", type=int, default=None,
                            help="base seed (default: SYMM_SEED or 0)")
    if jsonable:
        parser.add_argument("--json", action="store_true",
                            help="emit JSON instead of text")


def _build_entry(args):
    return catalog.build(args.id, **_collect_params(args))


def _matrix_text(a) -> str:
    rows = []
    for i in range(a.rows):
        rows.append("[" + ", ".join(str(a[i, j]) for j in range(a.cols))
                    + "]")
    return "[" + ", ".join(rows) + "]"


def _poly_text(dr) -> str:
    return ", ".join(str(c) for c in dr.coeffs)


# -- catalog -----------------------------------------------------------------


def cmd_catalog(args) -> int:
    if args.action == "list":
        if args.json:
            print(json.dumps(catalog.generic_rows(), sort_keys=True))
        else:
            sys.stdout.write(catalog.render_table())
        return EXIT_OK
    if not 1 <= args.id <= 54:
        return _fail(args, "no entry %d; valid ids are 1..54" % args.id,
                     EXIT_USAGE)
    params = _collect_params(args)
    if not params:
        if args.json:
            row = [r for r in catalog.generic_rows() if r["id"] == args.id][0]
            print(json.dumps(row, sort_keys=True))
        else:
            print("\n".join(catalog.generic_lines(args.id)))
            print("     parameters: %s"
                  % ", ".join(catalog.param_names(args.id)))
        return EXIT_OK
    try:
        entry = catalog.build(args.id, **params)
    except BadParams as exc:
        return _fail(args, str(exc), EXIT_USAGE)
    return _show_entry(args, entry)


def _show_entry(args, entry) -> int:
    if args.json:
        blob = {
            "id": entry.id, "list": entry.list_no, "star": entry.star,
            "params": entry.params, "ring": entry.ring,
            "ambient_dim": entry.ambient_dim, "labels": entry.labels,
            "base_point": wire.point_to_json(spaces.base_point(entry)),
            "groups": {k: wire.group_to_json(d)
                       for k, d in entry.descriptors.items()
                       if d is not None},
        }
        if entry.form_B is not None:
            blob["B"] = wire.form_to_json(entry.form_B)
        if entry.form_D is not None:
            blob["D"] = wire.form_to_json(entry.form_D)
        if entry.semiinv_J is not None:
            blob["J"] = wire.semiinvolution_to_json(entry.semiinv_J)
            blob["mu"] = entry.mu
        if entry.subspace_dim is not None:
            blob["subspace_dim"] = entry.subspace_dim
        if entry.note:
            blob["note"] = entry.note
        print(json.dumps(blob, sort_keys=True))
        return EXIT_OK
    star = " (star)" if entry.star else ""
    print("entry %d, family %d%s" % (entry.id, entry.list_no, star))
    print("space: %s" % entry.labels["space"])
    if "union" in entry.labels:
        print("union over %s" % entry.labels["union"])
    print("V = %s^%d" % (entry.ring, entry.ambient_dim))
    if entry.form_B is not None:
        print("B: %s, gram %s" % (entry.form_B.form_type.kind,
                                  _matrix_text(entry.form_B.gram)))
    if entry.semiinv_J is not None:
        j = entry.semiinv_J
        print("J: %s, J^2 = %+d, matrix %s"
              % (j.linearity, j.epsilon, _matrix_text(j.matrix)))
        if entry.mu is not None:
            print("mu = %+d" % entry.mu)
    if entry.form_D is not None:
        print("D: %s, gram %s" % (entry.form_D.form_type.kind,
                                  _matrix_text(entry.form_D.gram)))
    for key in ("G", "H", "G_star", "GLJ", "UD"):
        desc = entry.descriptors.get(key)
        if desc is not None and desc.label:
            print("%s = %s" % (key.replace("_star", "*"), desc.label))
    base = spaces.base_point(entry)
    print("base Q1 basis: %s" % _matrix_text(base.q1.basis))
    print("base Q2 basis: %s" % _matrix_text(base.q2.basis))
    if entry.note:
        print("note: %s" % entry.note)
    return EXIT_OK


# -- verify ------------------------------------------------------------------


def cmd_verify(args) -> int:
    if args.target == "all":
        ids = list(range(1, 55))
    else:
        try:
            ids = [int(args.target)]
        except ValueError:
            return _fail(args, "target must be an entry id or 'all'",
                         EXIT_USAGE)
        if not 1 <= ids[0] <= 54:
            return _fail(args, "no entry %d; valid ids are 1..54" % ids[0],
                         EXIT_USAGE)
    seed = _seed_of(args)
    reports = []
    for eid in ids:
        for prm in catalog.valid_params(eid, args.max_dim):
            entry = catalog.build(eid, **prm)
            reports.append(catalog.verify_entry(entry, trials=args.trials,
                                                seed=seed))
    ok = all(r["ok"] for r in reports)
    checks = sum(len(r["checks"]) for r in reports)
    if args.json:
        print(json.dumps({"ok": ok, "entries": len(ids),
                          "parameter_sets": len(reports),
                          "checks": checks, "reports": reports},
                         sort_keys=True))
    else:
        for rep in reports:
            prm = " ".join("%s=%d" % (k, v) for k, v in rep["params"].items())
            good = sum(1 for c in rep["checks"] if c["pass"])
            line = "entry %2d  %-14s %s %d/%d" \
                % (rep["id"], prm, "ok  " if rep["ok"] else "FAIL",
                   good, len(rep["checks"]))
            if "note" in rep:
                line += "   note: %s" % rep["note"]
            print(line)
            if not rep["ok"]:
                for c in rep["checks"]:
                    if not c["pass"]:
                        print("    failed %s: %s" % (c["name"], c["detail"]))
        print("summary: %d entries, %d parameter sets, %d checks, %s"
              % (len(ids), len(reports), checks,
                 "all passed" if ok else "FAILURES"))
    return EXIT_OK if ok else EXIT_CHECK_FAILED


# -- sample / double-ratio / dims ---------------------------------------------


def cmd_sample(args) -> int:
    try:
        entry = _build_entry(args)
    except BadParams as exc:
        return _fail(args, str(exc), EXIT_USAGE)
    seed = derive_seed(_seed_of(args), entry.id,
                       sorted(entry.params.items()), "sample")
    pt = spaces.sample_point(entry, seed)
    print(json.dumps(wire.point_to_json(pt), sort_keys=True))
    return EXIT_OK


def _load_points(args):
    if args.points == "-":
        data = json.load(sys.stdin)
    else:
        with open(args.points) as handle:
            data = json.load(handle)
    if isinstance(data, dict) and "pt1" in data and "pt2" in data:
        pair = (data["pt1"], data["pt2"])
    elif isinstance(data, list) and len(data) == 2:
        pair = tuple(data)
    else:
        raise wire.BadWire("expected [pt1, pt2] or {'pt1':..., 'pt2':...}")
    return tuple(wire.point_from_json(p) for p in pair)


def cmd_double_ratio(args) -> int:
    try:
        entry = _build_entry(args)
    except BadParams as exc:
        return _fail(args, str(exc), EXIT_USAGE)
    try:
        pt1, pt2 = _load_points(args)
    except (wire.BadWire, TypeMismatch, OSError, ValueError) as exc:
        return _fail(args, "bad point input: %s" % exc, EXIT_USAGE)
    for pt in (pt1, pt2):
        if not spaces.membership(entry, pt.q1, pt.q2):
            return _fail(args, "input point is not a member of entry %d"
                         % entry.id, EXIT_USAGE)
    try:
        dr = invariants.double_ratio(entry, pt1, pt2)
    except NotTransverse as exc:
        return _fail(args, "degenerate configuration: %s" % exc,
                     EXIT_DEGENERATE)
    if args.json:
        print(json.dumps(wire.double_ratio_to_json(dr), sort_keys=True))
    else:
        print("charpoly coefficients (highest first, ring %s): %s"
              % (dr.ring, _poly_text(dr)))
    return EXIT_OK


def cmd_dims(args) -> int:
    try:
        entry = _build_entry(args)
    except BadParams as exc:
        return _fail(args, str(exc), EXIT_USAGE)
    triple = (lie_algebra_dim(entry.G), lie_algebra_dim(entry.H),
              charts.grassmannian_dim(entry))
    if args.json:
        print(json.dumps(list(triple)))
    else:
        print("(%d, %d, %d)" % triple)
    return EXIT_OK


# -- wiring ------------------------------------------------------------------


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="symmspaces",
        description="Exact models of the 54 series of classical symmetric "
                    "spaces as pairs of complementary subspaces.")
    sub = parser.add_subparsers(dest="command", required=True)

    cat = sub.add_parser("catalog", help="inspect the series table")
    cat_sub = cat.add_subparsers(dest="action", required=True)
    cat_list = cat_sub.add_parser("list", help="print all 54 entries")
    _add_common(cat_list)
    cat_list.set_defaults(func=cmd_catalog)
    cat_show = cat_sub.add_parser("show", help="print one entry")
    cat_show.add_argument("id", type=int)
    _add_param_flags(cat_show)
    _add_common(cat_show)
    cat_show.set_defaults(func=cmd_catalog)

    ver = sub.add_parser("verify", help="run the conformance battery")
    ver.add_argument("target", help="entry id or 'all'")
    ver.add_argument("--max-dim", type=int, default=6,
                     help="largest ambient dimension to test (default 6)")
    ver.add_argument("--trials", type=int, default=20,
                     help="group-action samples per parameter set")
    _add_common(ver, seed=True)
    ver.set_defaults(func=cmd_verify)

    samp = sub.add_parser("sample", help="emit a random member point")
    samp.add_argument("id", type=int)
    _add_param_flags(samp)
    _add_common(samp, seed=True)
    samp.set_defaults(func=cmd_sample)

    dr = sub.add_parser("double-ratio",
                        help="invariant of two points, read as JSON")
    dr.add_argument("id", type=int)
    dr.add_argument("--points", default="-",
                    help="JSON file with [pt1, pt2] (default: stdin)")
    _add_param_flags(dr)
    _add_common(dr, seed=True)
    dr.set_defaults(func=cmd_double_ratio)

    dim = sub.add_parser("dims",
                         help="(dim G, dim H, grassmannian dim) triple")
    dim.add_argument("id", type=int)
    _add_param_flags(dim)
    _add_common(dim)
    dim.set_defaults(func=cmd_dims)
    return parser


def main(argv=None) -> int:
    args = _build_parser().parse_args(argv)
    try:
        return args.func(args)
    except BrokenPipeError:
        return EXIT_OK


if __name__ == "__main__":
    sys.exit(main())

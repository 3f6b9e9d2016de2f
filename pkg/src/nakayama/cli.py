"""Command-line front end: ``nakayama {enumerate,info,verify,polytope,map}``."""

from __future__ import annotations

import argparse
import json
import os
import random
import sys
from fractions import Fraction

from . import monomap, polytope, uspace
from .errors import NakayamaError, VerificationFailure
from .grid import DyckPath, comparable_pairs, enumerate_paths, hasse_edges, parse_path, upper_covers
from .indexset import chord_label, compatibility_matrix, index_set
from .report import Report

SCHEMA = "nakayama/1"
SUITES = ("param", "trop", "divisors", "maps", "polytope", "all")


class UsageError(Exception):
    pass


def _max_n() -> int:
    raw = os.environ.get("NAKAYAMA_MAX_N", "8")
    try:
        return int(raw)
    except ValueError:
        raise UsageError(f"NAKAYAMA_MAX_N must be an integer, got {raw!r}")


def _check_n(n: int) -> int:
    if n < 0:
        raise UsageError("--n must be nonnegative")
    cap = _max_n()
    if n > cap:
        raise UsageError(f"n={n} exceeds NAKAYAMA_MAX_N={cap}")
    return n


def _path(text: str, n: int | None) -> DyckPath:
    p = parse_path(text, n)
    _check_n(p.n)
    return p


def _paths(args) -> list[DyckPath]:
    if args.path:
        return [_path(args.path, args.n)]
    if args.n is None:
        raise UsageError("give --n or --path")
    return enumerate_paths(_check_n(args.n))


def _single(args, command: str) -> DyckPath:
    if not args.path:
        raise UsageError(f"{command} needs --path")
    return _path(args.path, args.n)


def random_point(rng: random.Random, n: int) -> list[Fraction]:
    return [Fraction(rng.randint(1, 20), rng.randint(1, 20)) for _ in range(n)]


def _emit(args, payload: dict, lines: list[str], out) -> None:
    if args.format == "json":
        out.write(json.dumps({"schema": SCHEMA, **payload}, indent=2, sort_keys=True) + "\n")
    else:
        out.write("\n".join(lines) + "\n")


# --- subcommands -------------------------------------------------------------


def cmd_enumerate(args, out) -> int:
    n = _check_n(args.n if args.n is not None else 0)
    paths = enumerate_paths(n)
    lines = [f"{p.steps}  k={','.join(map(str, p.k_heights))}" for p in paths]
    lines.append(f"{len(paths)} paths")
    payload = {"n": n, "paths": [p.steps for p in paths]}
    if args.poset:
        edges = hasse_edges(paths)
        lines.append("hasse edges:")
        lines += [f"{a.steps} < {b.steps}" for a, b in edges]
        payload["edges"] = [[a.steps, b.steps] for a, b in edges]
    _emit(args, payload, lines, out)
    return 0


def cmd_info(args, out) -> int:
    path = _single(args, "info")
    iset = index_set(path)
    system = uspace.u_system(path)
    eqs = system.to_latex() if args.latex else system.to_text()
    labels = [x.text for x in iset.labels]
    matrix = compatibility_matrix(iset)
    lines = [
        f"path {path.steps}  n={path.n}  k={','.join(map(str, path.k_heights))}",
        f"index set ({len(labels)}): {' '.join(labels)}",
        "compatibility degrees:",
    ]
    width = max((len(s) for s in labels), default=1)
    lines.append(" " * (width + 1) + " ".join(s.rjust(width) for s in labels))
    for lab, row in zip(labels, matrix):
        lines.append(lab.rjust(width) + " " + " ".join(str(v).rjust(width) for v in row))
    lines.append("u-equations:")
    lines += ["  " + e for e in eqs]
    payload = {
        "path": path.steps,
        "n": path.n,
        "labels": labels,
        "compatibility": matrix,
        "equations": system.to_json(),
    }
    if path.is_top:
        chords = {x.text: list(chord_label(iset, x)) for x in iset.labels}
        lines.append("chords:")
        lines += [f"  {k} -> {a},{b}" for k, (a, b) in chords.items()]
        payload["chords"] = chords
    _emit(args, payload, lines, out)
    return 0


def _suite_reports(path: DyckPath, suite: str, rng: random.Random) -> list[Report]:
    reps = []
    n = path.n
    if suite in ("param", "all"):
        rep = uspace.verify_parametrization(path)
        if n:
            y = random_point(rng, n)
            pt = uspace.evaluate_point(path, y)
            rep.add("point", "ueq-point", monomap.satisfies_u_equations(path, pt), [str(v) for v in y])
            rep.add("point", "unit-interval", all(0 < v < 1 for v in pt.values()), None)
            rep.add("point", "jacobian", uspace.jacobian_rank(path, y) == n, None)
        reps.append(rep)
    if suite in ("trop", "all"):
        reps.append(uspace.verify_tropical_duality(path))
    if suite in ("divisors", "all"):
        reps.append(uspace.verify_all_divisors(path))
    if suite in ("polytope", "all"):
        rep = polytope.verify_hv(path)
        rep.extend(polytope.verify_facet_intersection(path))
        rep.extend(polytope.verify_rays_are_gvectors(path))
        if n <= 4:
            rep.extend(polytope.clique_face_correspondence(path))
        for cover in upper_covers(path):
            rep.extend(polytope.star_subdivision_check(path, cover).report)
        reps.append(rep)
    return reps


def _maps_reports(paths: list[DyckPath], rng: random.Random, full: bool) -> list[Report]:
    reps = []
    pairs = comparable_pairs(paths)
    for lo, hi in pairs:
        rep = Report(f"{lo.steps}->{hi.steps}")
        rep.add("phi", "partition", monomap.partition_invariant(lo, hi), None)
        compat = monomap.verify_parametrization_compat(lo, hi)
        if compat.passed:
            rep.extend(compat)
        else:
            rep.warnings.append("symbolic compatibility failed; using the pushforward point check")
        if lo.n:
            rep.extend(monomap.verify_pushforward(lo, hi, random_point(rng, lo.n)))
        reps.append(rep)
    if full and paths:
        rep = Report(f"chains n={paths[0].n}")
        for d1, d2, d3 in monomap.chains(paths[0].n):
            rep.add(f"{d1.steps}<{d2.steps}<{d3.steps}", "functor",
                    monomap.verify_functoriality(d1, d2, d3), None)
        reps.append(rep)
    return reps


def cmd_verify(args, out) -> int:
    paths = _paths(args)
    rng = random.Random(args.seed)
    reports: list[Report] = []
    for p in paths:
        reports += _suite_reports(p, args.suite, rng)
    if args.suite in ("maps", "all"):
        reports += _maps_reports(paths, rng, not args.path)
    ok = all(r.passed for r in reports)
    lines = []
    for r in reports:
        status = "ok" if r.passed else "FAIL"
        lines.append(f"{r.path}: {status} ({len(r.checks)} checks)")
        for c in r.failures[:5]:
            lines.append(f"  failed {c.kind} {c.label}: {c.witness}")
        for w in r.warnings:
            lines.append(f"  warning: {w}")
    lines.append(f"{len(paths)} paths checked, {'all passed' if ok else 'FAILURES'}")
    payload = {"suite": args.suite, "paths": len(paths), "pass": ok,
               "reports": [r.to_json() for r in reports]}
    _emit(args, payload, lines, out)
    return 0 if ok else 1


def cmd_polytope(args, out) -> int:
    path = _single(args, "polytope")
    data = polytope.polytope_json(path, y_coords=args.y_coords)
    if args.format == "json":
        _emit(args, {"path": path.steps, **data}, [], out)
        return 0
    lines = [f"path {path.steps}"]
    lines += [f"facet [{f['interval'][0]},{f['interval'][1]}] rhs={f['rhs']} ({f['label']})"
              for f in data["facets"]]
    lines += ["vertex (" + ", ".join(v) + ")" for v in data["vertices"]]
    lines.append(f"f-vector {tuple(data['f_vector'])}  simple={data['simple']}")
    if args.y_coords:
        lines += ["y-vertex (" + ", ".join(v) + ")" for v in data["y_vertices"]]
    _emit(args, {}, lines, out)
    return 0


def cmd_map(args, out) -> int:
    lo = _path(args.source, args.n)
    hi = _path(args.target, args.n)
    phi = monomap.monomial_map(lo, hi)
    lines = phi.to_text()
    payload = {"map": phi.to_json()}
    ok = True
    if args.check:
        rep = monomap.verify_parametrization_compat(lo, hi)
        rep.add("phi", "partition", monomap.partition_invariant(lo, hi), None)
        rep.add("phi", "functor",
                monomap.verify_functoriality(lo, lo, hi) and monomap.verify_functoriality(lo, hi, hi),
                None)
        ok = rep.passed
        lines.append(f"check: {'ok' if ok else 'FAIL'} ({len(rep.checks)} checks)")
        payload["report"] = rep.to_json()
    _emit(args, payload, lines, out)
    return 0 if ok else 1


# --- entry point -------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--n", type=int, default=None, help="rank of the Dyck paths")
    common.add_argument("--path", default=None, help="step string such as UUDD or k-heights such as 2,2")
    common.add_argument("--format", choices=("text", "json"), default="text")
    common.add_argument("--seed", type=int, default=0, help="seed for random rational points")

    parser = argparse.ArgumentParser(prog="nakayama", description=__doc__)
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("enumerate", parents=[common], help="list Dyck paths of rank n")
    p.add_argument("--poset", action="store_true", help="also print the Hasse diagram")
    p.set_defaults(func=cmd_enumerate)

    p = sub.add_parser("info", parents=[common], help="index set, compatibility and u-equations")
    p.add_argument("--latex", action="store_true", help="print equations in LaTeX")
    p.set_defaults(func=cmd_info)

    p = sub.add_parser("verify", parents=[common], help="run verification suites")
    p.add_argument("--suite", choices=SUITES, default="all")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("polytope", parents=[common], help="facets, vertices and f-vector")
    p.add_argument("--y-coords", action="store_true", help="include the Minkowski-sum vertices")
    p.set_defaults(func=cmd_polytope)

    p = sub.add_parser("map", parents=[common], help="monomial map between comparable paths")
    p.add_argument("--from", dest="source", required=True)
    p.add_argument("--to", dest="target", required=True)
    p.add_argument("--check", action="store_true")
    p.set_defaults(func=cmd_map)
    return parser


def run(argv=None, out=None, err=None) -> int:
    out = out or sys.stdout
    err = err or sys.stderr
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        return args.func(args, out)
    except VerificationFailure as exc:
        err.write(f"verification failed: {exc}\n")
        return 1
    except (UsageError, NakayamaError, ValueError, KeyError) as exc:
        err.write(f"error: {exc}\n")
        return 2


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()

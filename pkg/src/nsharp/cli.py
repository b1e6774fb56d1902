"""Command-line interface.

Exit codes: 0 success, 2 input error, 3 oracle mismatch, 4 convergence
criteria disagree, 5 approximation iteration cap reached.
"""

from __future__ import annotations

import argparse
import csv
import json
import sys
from pathlib import Path

from .approx import GridSpec, approximate
from .convergence import (
    CRITERIA,
    MeasureSequence,
    TestFunction,
    check_all,
    criteria_agree,
    verdict_table,
)
from .errors import InputError, IterationCapError
from .measure import require_same_context
from .patterns import read_pattern, write_pattern
from .prohorov import ORACLE_MAX_ATOMS, prohorov_distance, prohorov_oracle
from .sets import sets_from_json
from .weakhash import prohorov_profile, truncated_weak_hash, weak_hash_distance

EXIT_OK = 0
EXIT_INPUT = 2
EXIT_ORACLE = 3
EXIT_DISAGREE = 4
EXIT_ITERCAP = 5

ORACLE_TOL = 1e-9


def fmt(x: float) -> str:
    return f"{x:.15g}"


def _pair(args):
    mu, nu = read_pattern(args.first), read_pattern(args.second)
    require_same_context(mu, nu)
    return mu, nu


def cmd_prohorov(args, out) -> int:
    mu, nu = _pair(args)
    d = prohorov_distance(mu, nu)
    print(fmt(d), file=out)
    if args.oracle:
        if len(mu) + len(nu) > ORACLE_MAX_ATOMS:
            print(f"oracle skipped: more than {ORACLE_MAX_ATOMS} atoms", file=sys.stderr)
        else:
            ref = prohorov_oracle(mu, nu)
            if abs(ref - d) > ORACLE_TOL:
                print(f"oracle mismatch: flow {fmt(d)} vs oracle {fmt(ref)}", file=sys.stderr)
                return EXIT_ORACLE
    return EXIT_OK


def _write_profile(mu, nu, dest, out) -> None:
    text = prohorov_profile(mu, nu).to_csv()
    if dest in (None, "-"):
        out.write(text)
    else:
        Path(dest).write_text(text, encoding="utf-8")


def cmd_weakhash(args, out) -> int:
    mu, nu = _pair(args)
    if args.truncate is not None:
        value = truncated_weak_hash(mu, nu, args.truncate)
    else:
        value = weak_hash_distance(mu, nu)
    print(fmt(value), file=out)
    if args.profile:
        _write_profile(mu, nu, args.profile, out)
    return EXIT_OK


def cmd_profile(args, out) -> int:
    mu, nu = _pair(args)
    _write_profile(mu, nu, args.output, out)
    return EXIT_OK


def _json_arg(value: str):
    """Inline JSON, or ``@path`` to read it from a file."""
    try:
        text = Path(value[1:]).read_text(encoding="utf-8") if value.startswith("@") else value
        return json.loads(text)
    except (OSError, json.JSONDecodeError) as exc:
        raise InputError(f"cannot read JSON argument {value!r}: {exc}") from None


def _parse_radii(value: str):
    if value == "auto":
        return None
    try:
        return [float(x) for x in value.split(",") if x.strip()]
    except ValueError:
        raise InputError(f"--radii expects 'auto' or a comma-separated list, got {value!r}") from None


def _parse_funcs(value: str):
    items = _json_arg(value)
    try:
        return [
            TestFunction(tuple(d["center"]), float(d["radius"]), float(d.get("height", 1.0)), d.get("kind", "tent"))
            for d in items
        ]
    except (KeyError, TypeError) as exc:
        raise InputError(f"malformed --funcs entry: {exc}") from None


def cmd_converge(args, out) -> int:
    target = read_pattern(args.target)
    seq = MeasureSequence(tuple(read_pattern(p) for p in args.sequence), target)
    radii = _parse_radii(args.radii)
    sets = sets_from_json(_json_arg(args.sets)) if args.sets else None
    funcs = _parse_funcs(args.funcs) if args.funcs else None
    verdicts = check_all(seq, args.tol, radii=radii, funcs=funcs, sets=sets)
    header, rows = verdict_table(verdicts)
    dest = open(args.table, "w", newline="", encoding="utf-8") if args.table else None
    try:
        writer = csv.writer(dest or out, lineterminator="\n")
        writer.writerow(header)
        for row in rows:
            writer.writerow([row[0]] + [fmt(x) for x in row[1:]])
    finally:
        if dest:
            dest.close()
    for name in CRITERIA:
        print(f"{name}: {'true' if verdicts[name].passed else 'false'}", file=out)
    if not criteria_agree(verdicts):
        print("criteria disagree", file=sys.stderr)
        return EXIT_DISAGREE
    return EXIT_OK


def cmd_approx(args, out) -> int:
    mu = read_pattern(args.file)
    grid = GridSpec(args.grid) if args.grid is not None else None
    result = approximate(mu, args.radius, args.eps, grid)
    write_pattern(result.approximant, args.output)
    print(fmt(result.certified_error), file=out)
    return EXIT_OK if result.certified_error <= args.eps else EXIT_ITERCAP


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="nsharp", description="Prohorov and weak-hash distances between point patterns."
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("prohorov", help="exact Prohorov distance")
    p.add_argument("first")
    p.add_argument("second")
    p.add_argument("--oracle", action="store_true", help="cross-check with subset enumeration")
    p.set_defaults(func=cmd_prohorov)

    p = sub.add_parser("weakhash", help="weak-hash distance d#")
    p.add_argument("first")
    p.add_argument("second")
    p.add_argument("--truncate", type=float, metavar="R", help="integrate over [0, R] only")
    p.add_argument("--profile", metavar="CSV", help="also write the step profile ('-' for stdout)")
    p.set_defaults(func=cmd_weakhash)

    p = sub.add_parser("profile", help="step profile r -> d(mu^(r), nu^(r)) as CSV")
    p.add_argument("first")
    p.add_argument("second")
    p.add_argument("-o", "--output", default="-")
    p.set_defaults(func=cmd_profile)

    p = sub.add_parser("converge", help="convergence diagnostics for a sequence of patterns")
    p.add_argument("target")
    p.add_argument("sequence", nargs="+")
    p.add_argument("--tol", type=float, default=0.05)
    p.add_argument("--radii", default="auto", help="'auto' or comma-separated radii")
    p.add_argument("--sets", help="JSON list of sets (or @file)")
    p.add_argument("--funcs", help="JSON list of test functions (or @file)")
    p.add_argument("--table", metavar="CSV", help="write the trace table here instead of stdout")
    p.set_defaults(func=cmd_converge)

    p = sub.add_parser("approx", help="certified grid approximation")
    p.add_argument("file")
    p.add_argument("--radius", type=float, required=True, metavar="R")
    p.add_argument("--eps", type=float, required=True, metavar="E")
    p.add_argument("--grid", type=float, metavar="H0", help="initial grid spacing (default 1)")
    p.add_argument("-o", "--output", required=True)
    p.set_defaults(func=cmd_approx)
    return parser


def main(argv=None, out=None) -> int:
    out = out or sys.stdout
    args = build_parser().parse_args(argv)
    try:
        return args.func(args, out)
    except InputError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except IterationCapError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_ITERCAP


if __name__ == "__main__":
    sys.exit(main())

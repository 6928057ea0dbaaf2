"""Command-line front end: ``gridthresh {count,enumerate,teach,arrange,verify}``.

Exit codes: 0 success, 1 a verification or comparison failed, 2 usage error.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from contextlib import contextmanager
from fractions import Fraction

from . import arrangement, formulas, teaching, verify
from .errors import PreconditionError
from .exact_geom import Line
from .formulas import GridDims
from .gridfn import GT, LE, from_line

CSV_COLUMNS = [
    "m", "n", "f1", "f2", "s", "l", "t", "t3", "t4", "sigma_num", "sigma_den",
    "u01", "u02", "u11", "u12", "c", "c3", "c4", "e", "v", "v_inf",
    "tc", "tc3", "tc4", "te", "tv",
]

QUANTITY_COLUMNS = {
    "f1": ["f1"],
    "f2": ["f2"],
    "s": ["s"],
    "l": ["l"],
    "t": ["t"],
    "t3": ["t3"],
    "t4": ["t4"],
    "sigma": ["sigma_num", "sigma_den"],
    "u": ["u01", "u02", "u11", "u12"],
    "plane": ["c", "c3", "c4", "e", "v", "v_inf"],
    "triangle": ["tc", "tc3", "tc4", "te", "tv"],
}
QUANTITIES = list(QUANTITY_COLUMNS)


class UsageError(Exception):
    pass


def _dims(m, n) -> GridDims:
    try:
        return GridDims(m, n)
    except PreconditionError as exc:
        raise UsageError(str(exc)) from None


@contextmanager
def _sink(path):
    if path in (None, "-"):
        yield sys.stdout
    else:
        with open(path, "w", encoding="utf-8", newline="") as fh:
            yield fh


def count_row(d: GridDims) -> dict:
    """All CSV columns for one grid, from the closed forms."""
    rep = formulas.count_report(d)
    plane = formulas.plane_stats_formula(d)
    tri = formulas.triangle_stats_formula(d)
    return {
        "m": d.m, "n": d.n, "f1": rep.f1, "f2": rep.f2, "s": rep.s, "l": rep.l,
        "t": rep.t, "t3": rep.t3, "t4": rep.t4,
        "sigma_num": rep.sigma_bar.numerator, "sigma_den": rep.sigma_bar.denominator,
        "u01": rep.u[0][0], "u02": rep.u[0][1], "u11": rep.u[1][0], "u12": rep.u[1][1],
        "c": plane.c, "c3": plane.c3, "c4": plane.c4, "e": plane.e, "v": plane.v,
        "v_inf": plane.v_inf,
        "tc": tri.c, "tc3": tri.c3, "tc4": tri.c4, "te": tri.e, "tv": tri.v,
    }


def cmd_count(args) -> int:
    d = _dims(args.m, args.n)
    wanted = [q.strip() for q in args.quantities.split(",") if q.strip()]
    unknown = [q for q in wanted if q not in QUANTITY_COLUMNS]
    if unknown or not wanted:
        raise UsageError(f"unknown quantities: {', '.join(unknown) or '(none given)'}; "
                         f"choose from {','.join(QUANTITIES)}")
    picked = {c for q in wanted for c in QUANTITY_COLUMNS[q]} | {"m", "n"}
    columns = [c for c in CSV_COLUMNS if c in picked]
    row = count_row(d)
    with _sink(args.output) as out:
        if args.format == "csv":
            buf = io.StringIO()
            writer = csv.writer(buf, lineterminator="\n")
            writer.writerow(columns)
            writer.writerow([row[c] for c in columns])
            out.write(buf.getvalue())
        else:
            payload = {c: row[c] for c in columns}
            if "sigma_num" in payload:
                sigma = formulas.sigma_bar(d)
                payload["sigma_decimal"] = f"{sigma.numerator / sigma.denominator:.12f}"
            out.write(json.dumps(payload, indent=2) + "\n")
    return 0


def enumerate_records(d: GridDims):
    """JSONL records for every threshold function, then one summary record."""
    t = t3 = t4 = 0
    u = [[0, 0], [0, 0]]
    total = 0
    for f, prof in teaching.all_profiles(d):
        t += 1
        total += prof.size
        if prof.size == 3:
            t3 += 1
            u[prof.nu][prof.kappa - 1] += 1
        else:
            t4 += 1
        yield {
            "m": d.m,
            "n": d.n,
            "bits": f.to_hex(),
            "teaching": [[p[0], p[1], v] for p, v in prof.points],
            "size": prof.size,
            "nu": prof.nu,
            "kappa": prof.kappa,
        }
    yield {
        "summary": True,
        "m": d.m,
        "n": d.n,
        "t": t,
        "t3": t3,
        "t4": t4,
        "sigma_num": Fraction(total, t).numerator,
        "sigma_den": Fraction(total, t).denominator,
        "u01": u[0][0],
        "u02": u[0][1],
        "u11": u[1][0],
        "u12": u[1][1],
    }


def cmd_enumerate(args) -> int:
    d = _dims(args.m, args.n)
    with _sink(args.output) as out:
        for rec in enumerate_records(d):
            out.write(json.dumps(rec, separators=(",", ":")) + "\n")
    return 0


def _parse_line(text: str) -> Line:
    try:
        a0, a1, a2 = (int(x) for x in text.split(","))
    except ValueError:
        raise UsageError(f"--line expects 'a0,a1,a2' integers, got {text!r}") from None
    try:
        return Line(a0, a1, a2)
    except ValueError as exc:
        raise UsageError(str(exc)) from None


def cmd_teach(args) -> int:
    d = _dims(args.m, args.n)
    line = _parse_line(args.line)
    f = from_line(line, d, args.side)
    prof = teaching.teaching_set(f)
    if args.format == "json":
        payload = {"m": d.m, "n": d.n, "line": [line.a0, line.a1, line.a2], "side": args.side,
                   "bits": f.to_hex()}
        payload.update(prof.as_dict())
        print(json.dumps(payload, indent=2))
    else:
        print(f"function on E_{d.m} x E_{d.n}: zeros where "
              f"{line.a1}*x1 + {line.a2}*x2 {'<=' if args.side == LE else '>'} {line.a0}")
        for (x1, x2), v in prof.points:
            print(f"  ({x1},{x2}) -> {v}")
        print(f"size={prof.size} nu={prof.nu} kappa={prof.kappa}")
    return 0


def cmd_arrange(args) -> int:
    d = _dims(args.m, args.n)
    if args.mode == arrangement.PLANE:
        geo = arrangement.plane_arrangement(d)
        closed = formulas.plane_stats_formula(d)
        fields = ["c", "c3", "c4", "e", "v", "v_inf"]
    else:
        geo = arrangement.triangle_arrangement(d)
        closed = formulas.triangle_stats_formula(d)
        fields = ["c", "c3", "c4", "e", "v"]
    match = geo == closed
    g = "/".join(str(getattr(geo, k)) for k in fields)
    c = "/".join(str(getattr(closed, k)) for k in fields)
    print(f"{args.mode} partition m={d.m} n={d.n} ({'/'.join(fields)})")
    print(f"geometric: {g}")
    print(f"formula:   {c}")
    print("MATCH" if match else "MISMATCH")
    if args.svg:
        arrangement.emit_arrangement_svg(d, args.mode, args.svg)
    return 0 if match else 1


def cmd_verify(args) -> int:
    if args.max_m < 2 or args.max_n < 2:
        raise UsageError("--max-m and --max-n must be at least 2")
    try:
        suites = verify.parse_checks(args.checks)
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    report = verify.run_verify(args.max_m, args.max_n, suites, jobs=max(1, args.jobs))
    with _sink(args.output) as out:
        for line in report.lines(timings=args.timings):
            out.write(line + "\n")
    return 0 if report.passed else 1


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="gridthresh",
        description="Exact counts for two-dimensional threshold functions and their teaching sets.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("count", help="closed-form counts for one grid")
    p.add_argument("--m", type=int, required=True)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--quantities", default=",".join(QUANTITIES),
                   help=f"comma list from {','.join(QUANTITIES)} (default: all)")
    p.add_argument("--format", choices=["csv", "json"], default="csv")
    p.add_argument("--output", help="write here instead of stdout")
    p.set_defaults(func=cmd_count)

    p = sub.add_parser("enumerate", help="JSONL dump of every threshold function and its teaching set")
    p.add_argument("--m", type=int, required=True)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--output", help="write here instead of stdout")
    p.set_defaults(func=cmd_enumerate)

    p = sub.add_parser("teach", help="teaching set of the function cut out by one line")
    p.add_argument("--m", type=int, required=True)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--line", required=True, help="a0,a1,a2 for a1*x1 + a2*x2 = a0")
    p.add_argument("--side", choices=[LE, GT], default=LE)
    p.add_argument("--format", choices=["text", "json"], default="text")
    p.set_defaults(func=cmd_teach)

    p = sub.add_parser("arrange", help="geometric vs closed-form partition counts")
    p.add_argument("--m", type=int, required=True)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--mode", choices=[arrangement.PLANE, arrangement.TRIANGLE], default=arrangement.PLANE)
    p.add_argument("--svg", help="also write the partition as SVG")
    p.set_defaults(func=cmd_arrange)

    p = sub.add_parser("verify", help="run the cross-check suites over a range of grids")
    p.add_argument("--max-m", type=int, required=True)
    p.add_argument("--max-n", type=int, required=True)
    p.add_argument("--checks", default="all",
                   help=f"'all' or comma list from {','.join(verify.SUITES)}")
    p.add_argument("--jobs", type=int, default=1)
    p.add_argument("--output", help="write the report here instead of stdout")
    p.add_argument("--timings", action="store_true", help="append elapsed time per check")
    p.set_defaults(func=cmd_verify)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except UsageError as exc:
        print(f"gridthresh {args.command}: error: {exc}", file=sys.stderr)
        return 2
    except OSError as exc:
        print(f"gridthresh {args.command}: error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    raise SystemExit(main())

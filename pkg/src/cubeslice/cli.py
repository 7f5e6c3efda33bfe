"""
Command-line front end.

    cubeslice exact
    cubeslice classify -n 0.577,0.577,0.577
    cubeslice section -n 1,0,0 --format csv
    cubeslice simulate --samples 1000000 --seed 42 --chunks 8
    cubeslice verify --trials 100000 --seed 1
    cubeslice triangle

Every command writes one JSON object (or a CSV table) to stdout.  Exit
codes: 0 success, 1 verification failure, 2 usage or input error.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import math
import sys

from . import __version__
from .errors import CubeSliceError
from .geometry import (
    KIND_CODES,
    Normal,
    Tolerance,
    classify,
    classify_many,
    polygon_area,
    section_polygon,
    sorted_abs,
    triangle_slack,
)
from .montecarlo import RunConfig, estimate, iter_chunks
from .probability import closed_form_probability, probability_from_region
from .spherical import girard_area, hexagon_region_triangle, lhuilier_area
from .verify import run_checks

EXIT_OK, EXIT_FAILED, EXIT_USAGE = 0, 1, 2


# =============================================================================
# OUTPUT
# =============================================================================

def fmt_float(x: float) -> str:
    """17 significant digits; always keeps a decimal point."""
    if not math.isfinite(x):
        raise ValueError(f"cannot serialize non-finite float {x!r}")
    return format(x, "#.17g")


def to_json(obj) -> str:
    """JSON text with every float written by ``fmt_float``."""
    if obj is None or isinstance(obj, bool):
        return json.dumps(obj)
    if isinstance(obj, int):
        return str(obj)
    if isinstance(obj, float):
        return fmt_float(obj)
    if isinstance(obj, str):
        return json.dumps(obj)
    if isinstance(obj, dict):
        return "{" + ", ".join(f"{json.dumps(str(k))}: {to_json(v)}"
                               for k, v in obj.items()) + "}"
    if isinstance(obj, (list, tuple)):
        return "[" + ", ".join(to_json(v) for v in obj) + "]"
    raise TypeError(f"cannot serialize {type(obj).__name__}")


def _csv_cell(x):
    if isinstance(x, float):
        return fmt_float(x)
    return "" if x is None else x


def write_csv(stream, header, rows) -> None:
    w = csv.writer(stream, lineterminator="\n")
    w.writerow(header)
    for row in rows:
        w.writerow([_csv_cell(x) for x in row])


def envelope(command: str, inputs: dict, result: dict) -> dict:
    return {"command": command, "inputs": inputs, "result": result, "version": __version__}


# =============================================================================
# ARGUMENT TYPES
# =============================================================================

def parse_normal(text: str) -> Normal:
    parts = text.split(",")
    if len(parts) != 3:
        raise argparse.ArgumentTypeError(f"expected a,b,c; got {text!r}")
    try:
        return Normal(*(float(p) for p in parts))
    except ValueError as exc:
        raise argparse.ArgumentTypeError(f"bad normal {text!r}: {exc}") from None


def positive_int(text: str) -> int:
    try:
        value = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not an integer: {text!r}") from None
    if value < 1:
        raise argparse.ArgumentTypeError(f"must be >= 1, got {value}")
    return value


def seed_int(text: str) -> int:
    try:
        value = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not an integer: {text!r}") from None
    if not 0 <= value < 1 << 64:
        raise argparse.ArgumentTypeError("seed must be a 64-bit unsigned integer")
    return value


def positive_float(text: str) -> float:
    try:
        value = float(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not a number: {text!r}") from None
    if not (math.isfinite(value) and value > 0):
        raise argparse.ArgumentTypeError(f"must be a positive number, got {text!r}")
    return value


def tolerance_from(args) -> Tolerance:
    if args.tolerance is None:
        return Tolerance()
    return Tolerance(eps_boundary=args.tolerance,
                     eps_geometry=max(Tolerance().eps_geometry, args.tolerance))


# =============================================================================
# COMMANDS
# =============================================================================
# Each returns (envelope, csv_header, csv_rows, exit_code).

def cmd_exact(args):
    closed = closed_form_probability()
    region = probability_from_region()
    result = {
        "probability": closed,
        "closed_form": closed,
        "from_region": region.probability,
        "routes_abs_diff": abs(closed - region.probability),
        "triangle_area": region.triangle_area,
        "octant_count": region.octant_count,
        "sphere_area": region.sphere_area,
    }
    rows = [[result[k] for k in result]]
    return envelope("exact", {}, result), list(result), rows, EXIT_OK


def cmd_classify(args):
    n, tol = args.normal, tolerance_from(args)
    kind = classify(n, tol)
    result = {
        "kind": kind.value,
        "normal": list(n.as_tuple()),
        "sorted_abs": list(sorted_abs(n)),
        "slack": triangle_slack(n),
    }
    header = ["a", "b", "c", "kind", "p", "q", "r", "slack"]
    rows = [[*n.as_tuple(), kind.value, *sorted_abs(n), result["slack"]]]
    inputs = {"normal": list(n.as_tuple()), "tolerance": tol.eps_boundary}
    return envelope("classify", inputs, result), header, rows, EXIT_OK


def cmd_section(args):
    n, tol = args.normal, tolerance_from(args)
    poly = section_polygon(n, tol)
    area = polygon_area(poly)
    result = {
        "kind": poly.kind.value,
        "vertex_count": poly.count,
        "area": area,
        "unit_normal": list(n.unit().as_tuple()),
        "vertices": [list(v) for v in poly.vertices],
    }
    header = ["index", "x", "y", "z", "kind", "area"]
    rows = [[i, *v, poly.kind.value, area] for i, v in enumerate(poly.vertices)]
    inputs = {"normal": list(n.as_tuple()), "tolerance": tol.eps_boundary}
    return envelope("section", inputs, result), header, rows, EXIT_OK


def dump_samples(cfg: RunConfig, path: str) -> None:
    with open(path, "w", newline="") as fh:
        w = csv.writer(fh, lineterminator="\n")
        w.writerow(["a", "b", "c", "kind"])
        for _, normals in iter_chunks(cfg):
            codes = classify_many(normals, cfg.tolerance)
            for row, code in zip(normals.tolist(), codes.tolist()):
                w.writerow([fmt_float(row[0]), fmt_float(row[1]), fmt_float(row[2]),
                            KIND_CODES[code].value])


def cmd_simulate(args):
    cfg = RunConfig(samples=args.samples, seed=args.seed, chunks=args.chunks,
                    tolerance=tolerance_from(args))
    est = estimate(cfg)
    exact = closed_form_probability()
    err = est.p_hat - exact
    result = {
        "samples": est.samples,
        "hits": est.hits,
        "p_hat": est.p_hat,
        "std_err": est.std_err,
        "seed": est.seed,
        "chunks": est.chunks,
        "exact": exact,
        "abs_error": abs(err),
        "error_over_std_err": err / est.std_err if est.std_err > 0 else None,
    }
    if args.dump_samples:
        dump_samples(cfg, args.dump_samples)
    inputs = {"samples": cfg.samples, "seed": cfg.seed, "chunks": cfg.chunks,
              "tolerance": cfg.tolerance.eps_boundary, "dump_samples": args.dump_samples}
    return envelope("simulate", inputs, result), list(result), [list(result.values())], EXIT_OK


def cmd_verify(args):
    tol = tolerance_from(args)
    report = run_checks(args.trials, args.seed, tol)
    result = {
        "trials": report.trials,
        "oracle_compared": report.oracle_compared,
        "oracle_mismatches": report.oracle_mismatches,
        "symmetry_violations": report.symmetry_violations,
        "invariant_failures": report.invariant_failures,
        "passed": report.ok,
    }
    for failure in report.failures[:10]:
        print(f"verify: failure {failure}", file=sys.stderr)
    inputs = {"trials": args.trials, "seed": args.seed, "tolerance": tol.eps_boundary}
    code = EXIT_OK if report.ok else EXIT_FAILED
    return envelope("verify", inputs, result), list(result), [list(result.values())], code


def cmd_triangle(args):
    t = hexagon_region_triangle()
    girard = girard_area(t)
    lhuilier = lhuilier_area(*t.arcs)
    result = {
        "vertices": [v.tolist() for v in t.vertices],
        "arcs": list(t.arcs),
        "angles": list(t.angles),
        "cos_angles": [math.cos(a) for a in t.angles],
        "girard_area": girard,
        "lhuilier_area": lhuilier,
        "area": girard,
        "areas_abs_diff": abs(girard - lhuilier),
    }
    header = ["vertex", "x", "y", "z", "opposite_arc", "angle", "cos_angle",
              "girard_area", "lhuilier_area"]
    rows = [[name, *t.vertices[i].tolist(), t.arcs[i], t.angles[i],
             math.cos(t.angles[i]), girard, lhuilier]
            for i, name in enumerate("ABC")]
    return envelope("triangle", {}, result), header, rows, EXIT_OK


COMMANDS = {
    "exact": cmd_exact,
    "classify": cmd_classify,
    "section": cmd_section,
    "simulate": cmd_simulate,
    "verify": cmd_verify,
    "triangle": cmd_triangle,
}


# =============================================================================
# ENTRY POINT
# =============================================================================

def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("json", "csv"), default="json")

    tolerant = argparse.ArgumentParser(add_help=False)
    tolerant.add_argument("--tolerance", type=positive_float, default=None,
                          metavar="EPS", help="boundary classification tolerance")

    with_normal = argparse.ArgumentParser(add_help=False)
    with_normal.add_argument("-n", "--normal", type=parse_normal, required=True,
                             metavar="a,b,c", help="plane normal (any nonzero length)")

    parser = argparse.ArgumentParser(
        prog="cubeslice",
        description="Central cross-sections of a cube and the hexagon probability.")
    parser.add_argument("--version", action="version", version=__version__)
    sub = parser.add_subparsers(dest="command", required=True)

    sub.add_parser("exact", parents=[common], help="exact hexagon probability")
    sub.add_parser("classify", parents=[common, tolerant, with_normal],
                   help="classify the section for one normal")
    sub.add_parser("section", parents=[common, tolerant, with_normal],
                   help="section polygon vertices and area")

    sim = sub.add_parser("simulate", parents=[common, tolerant],
                         help="Monte Carlo estimate")
    sim.add_argument("--samples", type=positive_int, default=1_000_000)
    sim.add_argument("--seed", type=seed_int, default=42)
    sim.add_argument("--chunks", type=positive_int, default=1)
    sim.add_argument("--dump-samples", metavar="PATH", default=None,
                     help="write per-sample a,b,c,kind rows as CSV")

    ver = sub.add_parser("verify", parents=[common, tolerant],
                         help="randomized oracle, symmetry and invariant checks")
    ver.add_argument("--trials", type=positive_int, default=10_000)
    ver.add_argument("--seed", type=seed_int, default=1)

    sub.add_parser("triangle", parents=[common],
                   help="the first-octant hexagon-region spherical triangle")
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        env, header, rows, code = COMMANDS[args.command](args)
    except (CubeSliceError, ValueError) as exc:
        print(f"cubeslice {args.command}: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    if args.format == "csv":
        buf = io.StringIO()
        write_csv(buf, header, rows)
        sys.stdout.write(buf.getvalue())
    else:
        sys.stdout.write(to_json(env) + "\n")
    return code


if __name__ == "__main__":
    sys.exit(main())

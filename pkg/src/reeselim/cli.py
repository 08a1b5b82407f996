"""Command-line driver.

All commands read the algebra file format

    ring: F2[Y,Z]
    gen: Z^2+Y^5 w 2

from a path (or stdin as "-") and print text reports ending in
machine-readable lines prefixed with "#!".

Exit codes: 0 all good, 1 assertion/agreement failure, 2 usage or input
error, 3 resource cap exceeded.
"""
from __future__ import annotations

import argparse
import sys
from fractions import Fraction

from .fields import FieldDescriptor, FieldError
from .groebner import ResourceCapError
from .poly import RationalPoint, RingError
from .rees import (ReesError, ReesGenerator, diff_saturate, e0_invariant,
                   format_algebra, normalize_generators, ord_at_point,
                   parse_algebra, rational_singular_points, singular_ideal,
                   tau_estimate, weighted_transform)
from .elim import eliminate, format_elimination
from .ramify import MonicInput, verify_thm_1_16
from .scenarios import SCENARIO_NAMES, run_scenario

EXIT_OK = 0
EXIT_FAIL = 1
EXIT_USAGE = 2
EXIT_CAP = 3


def _read_text(path):
    if path == "-":
        return sys.stdin.read()
    with open(path, "r", encoding="utf-8") as fh:
        return fh.read()


def _load_algebra(path, field_override=None):
    text = _read_text(path)
    if field_override:
        lines = []
        for line in text.splitlines():
            if line.strip().startswith("ring:"):
                head, _, body = line.partition(":")
                varlist = body[body.index("["):]
                line = "ring: %s%s" % (field_override, varlist)
            lines.append(line)
        text = "\n".join(lines)
    return parse_algebra(text)


def _parse_point(ring, text):
    parts = [p.strip() for p in text.split(",")]
    if len(parts) != ring.nvars:
        raise RingError("expected %d coordinates, got %d"
                        % (ring.nvars, len(parts)))
    coords = []
    for part in parts:
        value = ring.parse(part if part else "0")
        if not value.is_constant():
            raise RingError("coordinate %r is not a constant" % part)
        coords.append(value.constant_value())
    return RationalPoint(ring, coords)


def _emit_algebra(G, out, provenance=None):
    out.write(format_algebra(G, provenance=provenance))
    out.write("#! generators: %d max-weight: %d\n"
              % (len(G.generators), G.max_weight))


def _cmd_saturate(args, out):
    G = _load_algebra(args.file)
    active = args.active.split(",") if args.active else None
    sat = diff_saturate(G, active)
    if args.normalize:
        sat = normalize_generators(sat)
    _emit_algebra(sat, out)
    return EXIT_OK


def _cmd_sing(args, out):
    G = _load_algebra(args.file)
    ideal = singular_ideal(G)
    for g in ideal.generators:
        out.write("gen: %s\n" % g)
    if G.ring.field.p > 0:
        points = sorted(rational_singular_points(G),
                        key=lambda p: [str(c) for c in p.coords])
        for p in points:
            out.write("point: %s\n" % ",".join(str(c) for c in p.coords))
        out.write("#! ideal-generators: %d points: %d\n"
                  % (len(ideal.generators), len(points)))
    else:
        out.write("#! ideal-generators: %d points: n/a\n"
                  % len(ideal.generators))
    return EXIT_OK


def _cmd_ord(args, out):
    G = _load_algebra(args.file)
    at = _parse_point(G.ring, args.at)
    value = ord_at_point(G, at)
    out.write("ord: %s\n" % value)
    out.write("#! ord: %s\n" % value)
    return EXIT_OK


def _cmd_e0(args, out):
    G = _load_algebra(args.file)
    at = _parse_point(G.ring, args.at)
    value = e0_invariant(diff_saturate(G), at)
    out.write("e0: %d\n" % value)
    out.write("#! e0: %d\n" % value)
    return EXIT_OK


def _cmd_tau(args, out):
    G = _load_algebra(args.file)
    at = _parse_point(G.ring, args.at)
    value = tau_estimate(diff_saturate(G), at)
    out.write("tau: %d  (lower bound)\n" % value)
    out.write("#! tau: %d\n" % value)
    return EXIT_OK


def _cmd_eliminate(args, out):
    G = _load_algebra(args.file)
    try:
        f = G.generators[args.monic]
    except IndexError:
        raise ReesError("generator index %d out of range (%d generators)"
                        % (args.monic, len(G.generators))) from None
    result = eliminate(G, f, args.var,
                       check_transversal=not args.no_transversal_check)
    out.write(format_elimination(result))
    algebra = result.algebra
    if algebra.is_empty():
        out.write("# warning: zero elimination algebra "
                  "(all coefficients vanished)\n")
    out.write("#! generators: %d max-weight: %d\n"
              % (len(algebra.generators), algebra.max_weight))
    return EXIT_OK


def _cmd_blowup(args, out):
    G = _load_algebra(args.file)
    center = [v.strip() for v in args.center.split(",")]
    transformed, chart = weighted_transform(G, center, args.chart)
    if args.normalize:
        transformed = normalize_generators(transformed)
    out.write("# chart: %s, center: %s\n" % (chart.exceptional,
                                             ",".join(chart.center)))
    _emit_algebra(transformed, out)
    return EXIT_OK


def _cmd_ramify_verify(args, out):
    G = _load_algebra(args.file, field_override=args.field)
    if not G.generators:
        raise ReesError("no factors in input")
    inp = MonicInput(G.ring, args.var, [g.poly for g in G.generators])
    report = verify_thm_1_16(inp)
    out.write(report.format_text())
    out.write("#! agreement: %s points: %d mismatches: %d\n"
              % ("true" if report.agree else "false",
                 report.points_scanned, len(report.counterexamples)))
    return EXIT_OK if report.agree else EXIT_FAIL


def _cmd_scenario(args, out):
    report = run_scenario(args.name, seed=args.seed)
    out.write(report.format_text())
    return EXIT_OK if report.ok() else EXIT_FAIL


def build_parser():
    parser = argparse.ArgumentParser(
        prog="reeselim",
        description="Exact Rees-algebra computations for hypersurface "
                    "singularities in positive characteristic.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("saturate", help="differential saturation")
    p.add_argument("file")
    p.add_argument("--active", help="comma-separated active variables "
                                    "(default: all)")
    p.add_argument("--normalize", action="store_true",
                   help="scale generators by leading-coefficient inverses")
    p.set_defaults(func=_cmd_saturate)

    p = sub.add_parser("sing", help="singular ideal and rational points")
    p.add_argument("file")
    p.set_defaults(func=_cmd_sing)

    for name, func in (("ord", _cmd_ord), ("e0", _cmd_e0), ("tau", _cmd_tau)):
        p = sub.add_parser(name, help="%s at a rational point" % name)
        p.add_argument("file")
        p.add_argument("--at", required=True,
                       help="comma-separated coordinates, e.g. 0,0")
        p.set_defaults(func=func)

    p = sub.add_parser("eliminate", help="eliminate the distinguished variable")
    p.add_argument("file")
    p.add_argument("--monic", type=int, required=True,
                   help="index of the monic generator (0-based)")
    p.add_argument("--var", required=True, help="variable to eliminate")
    p.add_argument("--no-transversal-check", action="store_true")
    p.set_defaults(func=_cmd_eliminate)

    p = sub.add_parser("blowup", help="weighted transform at a coordinate "
                                      "center")
    p.add_argument("file")
    p.add_argument("--center", required=True, help="e.g. Y,Z")
    p.add_argument("--chart", required=True, help="chart variable")
    p.add_argument("--normalize", action="store_true")
    p.set_defaults(func=_cmd_blowup)

    p = sub.add_parser("ramify-verify",
                       help="compare pure ramification with discriminant "
                            "vanishing at every rational point")
    p.add_argument("file", help="algebra file whose generators are the "
                                "monic factors")
    p.add_argument("--field", help="override the ring header field, e.g. F5")
    p.add_argument("--var", default="Z", help="distinguished variable")
    p.set_defaults(func=_cmd_ramify_verify)

    p = sub.add_parser("scenario", help="run a built-in scenario")
    p.add_argument("name", choices=SCENARIO_NAMES)
    p.add_argument("--seed", type=int, default=0)
    p.set_defaults(func=_cmd_scenario)

    return parser


def main(argv=None, out=None):
    out = out or sys.stdout
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code else EXIT_OK
    try:
        return args.func(args, out)
    except ResourceCapError as exc:
        out.write("error: %s\n" % exc)
        return EXIT_CAP
    except (ReesError, RingError, FieldError, ValueError, OSError) as exc:
        out.write("error: %s\n" % exc)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())

"""Command line interface: ``maxgenus {verify,bounds,lift,psi,genus,hilbert}``."""

from __future__ import annotations

import argparse
import json
import logging
import sys

from . import genus
from .basis import DomainError, hilbert_table, hilbert_table_csv, psi, psi_inverse
from .fields import GF, QQ
from .lift import check_congruence, construct_lift, surface_equation
from .poly import XYZ, ParamSet, ParseError, format_monomial, parse_poly
from .verify import (METHODS, MethodDisagreement, VerifyConfig, exit_code, random_g,
                     report_csv, report_json, run_verify)

EXIT_OK, EXIT_INCONCLUSIVE, EXIT_INVARIANT, EXIT_USAGE = 0, 1, 2, 3


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def _emit(text: str, out: str | None):
    if out:
        with open(out, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def cmd_verify(args) -> int:
    methods = METHODS if args.method == "all" else (args.method,)
    try:
        config = VerifyConfig(m_min=args.m_min, m_max=args.m_max,
                              prime=None if args.rationals else args.prime, seed=args.seed,
                              trials=args.trials, methods=methods, jobs=args.jobs,
                              timeout=args.timeout, cross_check=not args.no_cross_check)
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    try:
        report = run_verify(config)
    except MethodDisagreement as exc:
        print(f"INVARIANT VIOLATION: {exc}", file=sys.stderr)
        print(json.dumps(exc.record, indent=2, sort_keys=True), file=sys.stderr)
        return EXIT_INVARIANT
    text = report_json(report) if args.format == "json" else report_csv(report)
    _emit(text, args.out)
    summary = report["summary"]
    print(f"verified m: {summary['verified_m']}  inconclusive m: {summary['inconclusive_m']}"
          f"  ({report['elapsed_ms'] / 1000:.2f} s)", file=sys.stderr)
    return exit_code(report)


def cmd_bounds(args) -> int:
    _emit(genus.bounds_csv(genus.bounds_table(args.d_max, args.s_max)), args.out)
    return EXIT_OK


def _field(args):
    return QQ if getattr(args, "rationals", False) else GF(args.prime)


def cmd_lift(args) -> int:
    params = ParamSet(args.m, args.a)
    F = _field(args)
    g0 = parse_poly(args.g, F, XYZ) if args.g else random_g(args.m, F, args.seed)
    wit = construct_lift(g0, params)
    print(f"# m={params.m} d={params.d} a={params.a} e={params.e} field={F!r}")
    print(f"g0 = {g0}")
    for name, poly in wit.polynomials().items():
        print(f"{name} = {poly}")
    surf = surface_equation(g0, params)
    print(f"G = {surf.G}")
    print(f"F = {surf.text()}")
    print(f"# surface degree {surf.degree}, type e = {surf.type_e}, line {surf.line}")
    if args.check:
        rep = check_congruence(wit, g0, params)
        for k, ok in rep.per_power.items():
            print(f"# t^{k} coefficient: {'ok' if ok else 'FAIL'}")
        print(f"# congruence mod (x,y)^{params.d}: {'holds' if rep.holds else 'FAILS'}")
        return EXIT_OK if rep.holds else EXIT_INVARIANT
    return EXIT_OK


def cmd_psi(args) -> int:
    params = ParamSet(args.m)
    mono_poly = parse_poly(args.monomial, QQ, XYZ)
    if len(mono_poly.terms) != 1:
        print("error: expected a single monomial", file=sys.stderr)
        return EXIT_USAGE
    (mono,) = mono_poly.terms
    try:
        image = psi_inverse(mono, params) if args.inverse else psi(mono, params)
    except DomainError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    print(format_monomial(image, XYZ) or "1")
    return EXIT_OK


def cmd_genus_assembly(args) -> int:
    try:
        asm = genus.conjectureA_assembly(args.d)
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    for c in asm.components:
        print(c.describe())
    status = "holds" if asm.holds else "FAILS"
    print(f"total genus {asm.total_genus}, P({asm.d},{asm.d}) = {asm.bound}: {status}")
    return EXIT_OK if asm.holds else EXIT_INVARIANT


def cmd_hilbert(args) -> int:
    params = ParamSet(args.m)
    g = random_g(args.m, GF(args.prime), args.seed)
    _emit(hilbert_table_csv(hilbert_table(params, g)), args.out)
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="maxgenus", description=__doc__)
    parser.add_argument("-v", "--verbose", action="store_true")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("verify", help="random-witness sweep over m")
    p.add_argument("--m-min", type=int, required=True)
    p.add_argument("--m-max", type=int, required=True)
    grp = p.add_mutually_exclusive_group()
    grp.add_argument("--prime", type=int, default=32003)
    grp.add_argument("--rationals", action="store_true")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--trials", type=int, default=3)
    p.add_argument("--method", choices=METHODS + ("all",), default="phi")
    p.add_argument("--no-cross-check", action="store_true",
                   help="do not add the direct method for m <= 5")
    p.add_argument("--jobs", type=int, default=1)
    p.add_argument("--timeout", type=float, default=None, help="seconds per trial")
    p.add_argument("--out")
    p.add_argument("--format", choices=("json", "csv"), default="json")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("bounds", help="CSV table of P(d, s)")
    p.add_argument("--d-max", type=int, required=True)
    p.add_argument("--s-max", type=int, required=True)
    p.add_argument("--out")
    p.set_defaults(func=cmd_bounds)

    p = sub.add_parser("lift", help="lift data and surface equation for a g0")
    p.add_argument("--m", type=int, required=True)
    p.add_argument("--a", type=int, required=True)
    grp = p.add_mutually_exclusive_group()
    grp.add_argument("--prime", type=int, default=32003)
    grp.add_argument("--rationals", action="store_true")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--g", help="explicit g0 instead of a random one")
    p.add_argument("--check", action="store_true")
    p.set_defaults(func=cmd_lift)

    p = sub.add_parser("psi", help="apply psi or its inverse to a monomial")
    p.add_argument("--m", type=int, required=True)
    p.add_argument("--monomial", required=True)
    p.add_argument("--inverse", action="store_true")
    p.set_defaults(func=cmd_psi)

    p = sub.add_parser("genus", help="genus numerology")
    gsub = p.add_subparsers(dest="genus_command", required=True, parser_class=_Parser)
    q = gsub.add_parser("assembly", help="disjoint-union curve of genus P(d, d)")
    q.add_argument("--d", type=int, required=True)
    q.set_defaults(func=cmd_genus_assembly)

    p = sub.add_parser("hilbert", help="CSV of WT-graded dims of S and T")
    p.add_argument("--m", type=int, required=True)
    p.add_argument("--prime", type=int, default=32003)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--out")
    p.set_defaults(func=cmd_hilbert)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING,
                        format="%(levelname)s %(name)s: %(message)s")
    try:
        return args.func(args)
    except (ValueError, ParseError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())

"""Command-line front end.

Exit status: 0 on success, 1 when a table check or the convention check
fails, 2 on malformed input (unparsable words, links where a knot is needed).
"""
from __future__ import annotations

import argparse
import sys

from . import reports
from .bounds import DEFAULT_BUDGET, bound_report, dg_bounds
from .catalog import catalog_lookup, catalog_records
from .conway import WordSyntaxError, evaluate_fraction, normalize, parse_word
from .invariants import NotAKnotError, a2
from .lab import FamilyBounds, convention_check, enumerate_family, verify_table1, verify_table2

EXIT_OK, EXIT_MISMATCH, EXIT_INPUT = 0, 1, 2


class InputError(Exception):
    pass


def _word(text: str):
    try:
        return parse_word(text)
    except WordSyntaxError as exc:
        raise InputError(f"malformed word: {exc}") from None


def _knot_word(text: str):
    w = _word(text)
    if not evaluate_fraction(w).is_knot:
        raise InputError(f"{w} closes to a 2-component link, not a knot")
    return w


def cmd_identify(args) -> tuple[object, int]:
    w = _word(args.word)
    pair = evaluate_fraction(w)
    match = catalog_lookup(pair)
    record = {
        "word": str(w),
        "normalized": str(normalize(w)),
        "p": pair.p,
        "q": pair.q,
        "q_orbit": sorted(pair.orbit),
        "kind": "knot" if pair.is_knot else "link",
        "name": match.name if match.identity else None,
        "mirror": match.mirror if match.identity else None,
        "amphichiral": pair.amphichiral if pair.is_knot else None,
        "a2": a2(w) if pair.is_knot else None,
    }
    return record, EXIT_OK


def cmd_a2(args):
    value = a2(_knot_word(args.word))
    if args.format == "text":
        return f"{value}\n", EXIT_OK
    return {"word": str(parse_word(args.word)), "a2": value}, EXIT_OK


def cmd_udelta(args):
    return bound_report(_knot_word(args.word), args.budget), EXIT_OK


def cmd_dgd(args):
    return dg_bounds(_knot_word(args.word1), _knot_word(args.word2), args.budget), EXIT_OK


def cmd_table1(args):
    report = verify_table1()
    return report, EXIT_OK if report.ok else EXIT_MISMATCH


def cmd_table2(args):
    report = verify_table2(args.budget)
    return report, EXIT_OK if report.ok else EXIT_MISMATCH


def cmd_scan(args):
    try:
        bounds = FamilyBounds(args.n_max, args.beta_min, args.beta_max, args.limit)
    except ValueError as exc:
        raise InputError(str(exc)) from None
    return list(enumerate_family(bounds)), EXIT_OK


def cmd_catalog(args):
    return catalog_records(), EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="twobridge",
        description="Delta-unknotting bounds and a2 for two-bridge knots in Conway form.")
    parser.add_argument("--format", choices=reports.FORMATS, default="text")
    parser.add_argument("--seed-convention-check", action="store_true",
                        help="verify the word convention against known knots before running")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("identify", help="fraction class and catalog name of a word")
    p.add_argument("word")
    p.set_defaults(func=cmd_identify)

    p = sub.add_parser("a2", help="second Conway coefficient")
    p.add_argument("word")
    p.set_defaults(func=cmd_a2)

    p = sub.add_parser("udelta", help="bounds on the Delta-unknotting number")
    p.add_argument("word")
    p.add_argument("--budget", type=int, default=DEFAULT_BUDGET)
    p.set_defaults(func=cmd_udelta)

    p = sub.add_parser("dgd", help="bounds on the Delta-Gordian distance")
    p.add_argument("word1")
    p.add_argument("word2")
    p.add_argument("--budget", type=int, default=DEFAULT_BUDGET)
    p.set_defaults(func=cmd_dgd)

    p = sub.add_parser("table1", help="check the family examples table")
    p.set_defaults(func=cmd_table1)

    p = sub.add_parser("table2", help="recompute the distance table of C(2a,2b) knots")
    p.add_argument("--budget", type=int, default=DEFAULT_BUDGET)
    p.set_defaults(func=cmd_table2)

    p = sub.add_parser("scan-family", help="enumerate the one-move family")
    p.add_argument("--n-max", type=int, default=2)
    p.add_argument("--beta-min", type=int, default=-8)
    p.add_argument("--beta-max", type=int, default=8)
    p.add_argument("--limit", type=int, default=None)
    p.set_defaults(func=cmd_scan)

    p = sub.add_parser("catalog", help="list the named knots and stated values")
    p.set_defaults(func=cmd_catalog)
    return parser


def main(argv=None, out=None, err=None) -> int:
    out = out or sys.stdout
    err = err or sys.stderr
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_INPUT if exc.code else EXIT_OK
    if args.seed_convention_check:
        failed = [label for label, ok in convention_check() if not ok]
        for label in failed:
            err.write(f"convention check failed: {label}\n")
        if failed:
            return EXIT_MISMATCH
    try:
        report, code = args.func(args)
    except (InputError, NotAKnotError) as exc:
        err.write(f"error: {exc}\n")
        return EXIT_INPUT
    out.write(report if isinstance(report, str) else reports.emit_report(report, args.format))
    return code


if __name__ == "__main__":
    sys.exit(main())

"""Command-line interface.

Exit codes: 0 when every check passes, 1 when a mathematical check fails,
2 on input or parse errors.
"""

from __future__ import annotations

import argparse
import json
import sys

from .parse import DatumError, ParseError, load_datum, parse_expr
from .poly import group_generators
from .report import Report
from .tgw import commutator, validate

OK, CHECK_FAILED, INPUT_ERROR = 0, 1, 2


def _emit_report(rep: Report, as_json: bool, verbose: bool) -> int:
    print(rep.to_json() if as_json else rep.to_text(verbose=verbose))
    return OK if rep.passed else CHECK_FAILED


def _element_json(a) -> str:
    return json.dumps({
        "expr": str(a),
        "terms": [{"grade": list(k), "coefficient": str(v)} for k, v in sorted(a.terms.items())],
    }, indent=2)


def cmd_validate(args) -> int:
    return _emit_report(validate(load_datum(args.datum)), args.json, args.verbose)


def cmd_nf(args) -> int:
    a = parse_expr(args.expr, load_datum(args.datum))
    print(_element_json(a) if args.json else a)
    return OK


def cmd_comm(args) -> int:
    d = load_datum(args.datum)
    c = commutator(parse_expr(args.a, d), parse_expr(args.b, d))
    print(_element_json(c) if args.json else c)
    return OK


def cmd_verify(args) -> int:
    from .catalog import verify

    return _emit_report(verify(args.which), args.json, args.verbose)


def cmd_casimir(args) -> int:
    from .catalog import casimir_report

    return _emit_report(casimir_report(args.order), args.json, args.verbose)


def cmd_invariant(args) -> int:
    d = load_datum(args.datum)
    a = parse_expr(args.expr, d)
    rep = Report(f"G-invariance of {a}")
    for label, g in group_generators(d.ctx):
        img = a.act(g)
        rep.check_equal("g_invariant", label, img, a)
    return _emit_report(rep, args.json, True)


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="rtgw", description="Exact computations in rational twisted generalized Weyl algebras.")
    sub = p.add_subparsers(dest="command", required=True)

    def add(name, fn, help_, datum=True, json_=True):
        s = sub.add_parser(name, help=help_)
        if datum:
            s.add_argument("-d", "--datum", required=True, help="builtin name (su3, so3) or JSON datum file")
        if json_:
            s.add_argument("--json", action="store_true", help="JSON output")
        s.set_defaults(func=fn, verbose=False)
        return s

    s = add("validate", cmd_validate, "check every consistency relation of a datum")
    s.add_argument("-v", "--verbose", action="store_true", help="list passing records too")
    s = add("nf", cmd_nf, "normal form of an expression")
    s.add_argument("expr")
    s = add("comm", cmd_comm, "commutator of two expressions")
    s.add_argument("a")
    s.add_argument("b")
    s = add("verify", cmd_verify, "run a catalog verification suite", datum=False)
    s.add_argument("which", choices=["su3", "so3", "all"])
    s.add_argument("-v", "--verbose", action="store_true", help="list passing records too")
    s = add("casimir", cmd_casimir, "su(3) Casimir element checks", datum=False)
    s.add_argument("order", type=int, choices=[2, 3])
    s.add_argument("-v", "--verbose", action="store_true", help="list passing records too")
    s = add("invariant", cmd_invariant, "G-invariance verdict per group generator")
    s.add_argument("expr")
    return p


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return OK if exc.code == 0 else INPUT_ERROR
    try:
        return args.func(args)
    except (ParseError, DatumError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return INPUT_ERROR
    except (ValueError, KeyError, ArithmeticError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return INPUT_ERROR


if __name__ == "__main__":
    sys.exit(main())

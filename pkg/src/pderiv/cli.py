"""Command line front end: ``pderiv <subcommand> ...``.

Exit codes: 0 success, 1 domain error or failed self-check, 2 usage error.
"""
from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction

from . import __version__
from .arith import check_prime, delta_int, delta_rat
from .deriv import chain_rule_rhs, iterate_delta
from .errors import DomainError
from .expr import parse_poly
from .poly import VarContext, poly_eval
from .singular import (
    RingPresentation,
    arithmetic_singular_generators,
    classical_jacobian_generators,
    ring_of_integers_pure_root,
)
from .symbpow import MaximalPoint, Principal, dsgj_member, power_member_oracle


class CheckFailed(Exception):
    """A verification subcommand found its two sides disagreeing."""


def _int_list(text: str) -> list[int]:
    try:
        return [int(t) for t in text.split(",") if t.strip()]
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated integers, got {text!r}") from None


def _rational(text: str) -> Fraction:
    try:
        return Fraction(text)
    except (ValueError, ZeroDivisionError):
        raise argparse.ArgumentTypeError(f"not a rational number: {text!r}") from None


def _fmt_index(idx) -> str:
    return "(" + ", ".join(map(str, idx)) + ")"


def _emit(args, inputs: dict, result, text: str):
    if args.format == "json":
        payload = {"command": args.command, "inputs": inputs, "result": result, "version": __version__}
        print(json.dumps(payload, sort_keys=True))
    else:
        print(text)


def cmd_delta(args):
    p = check_prime(args.p)
    if args.rational is not None:
        if args.n is not None:
            raise DomainError("give either an integer or --rational, not both")
        value = delta_rat(p, args.rational)
        inputs = {"p": p, "rational": str(args.rational)}
    else:
        if args.n is None:
            raise DomainError("missing integer argument")
        value = delta_int(p, args.n)
        inputs = {"p": p, "n": args.n}
    _emit(args, inputs, str(value), str(value))


def cmd_table(args):
    primes = [check_prime(p) for p in args.primes]
    if args.to < args.from_:
        raise DomainError("--to must not be below --from")
    rows = []
    for n in range(args.from_, args.to + 1):
        row = {"n": n}
        for p in primes:
            row[f"delta_{p}"] = delta_int(p, n)
        rows.append(row)
    header = ["n"] + [f"delta_{p}" for p in primes]
    cells = [header] + [[str(row[k]) for k in header] for row in rows]
    widths = [max(len(r[i]) for r in cells) for i in range(len(header))]
    text = "\n".join("  ".join(c.rjust(w) for c, w in zip(r, widths)) for r in cells)
    inputs = {"primes": primes, "from": args.from_, "to": args.to}
    if args.output:
        payload = {"command": "table", "inputs": inputs, "result": rows, "version": __version__}
        with open(args.output, "w") as fh:
            json.dump(payload, fh, indent=2, sort_keys=True)
            fh.write("\n")
    _emit(args, inputs, rows, text)


def cmd_poly_delta(args):
    p = check_prime(args.p)
    ctx = VarContext(args.vars)
    f = parse_poly(args.expr, ctx)
    if args.k < 0:
        raise DomainError("--k must be nonnegative")
    out = str(iterate_delta(p, f, args.k))
    _emit(args, {"p": p, "vars": list(ctx.names), "expr": args.expr, "k": args.k}, out, out)


def cmd_chain(args):
    p = check_prime(args.p)
    ctx = VarContext(args.vars)
    if ctx.arity != 1:
        raise DomainError("chain rule needs exactly one variable")
    f = parse_poly(args.expr, ctx)
    value = poly_eval(f, [args.n])
    lhs = delta_int(p, int(value))
    rhs = chain_rule_rhs(p, f, args.n)
    verdict = "MATCH" if lhs == rhs else "MISMATCH"
    inputs = {"p": p, "n": args.n, "vars": list(ctx.names), "expr": args.expr}
    _emit(args, inputs, {"lhs": lhs, "rhs": rhs, "verdict": verdict}, f"lhs = {lhs}\nrhs = {rhs}\n{verdict}")
    if lhs != rhs:
        raise CheckFailed(f"chain rule mismatch: {lhs} != {rhs}")


def cmd_jacobian(args):
    ctx = VarContext(args.vars)
    rels = tuple(parse_poly(e, ctx) for e in args.relations)
    pres = RingPresentation(ctx, rels, args.h)
    if args.p is None:
        report = classical_jacobian_generators(pres)
    else:
        report = arithmetic_singular_generators(check_prime(args.p), pres)
    gens = report.generator_strings()
    lines = [f"{report.kind} singular locus generators (h={pres.h}):"] + (gens or ["(none)"])
    if any(g.is_constant() and abs(g.constant_term()) == 1 for g in report.generators):
        lines.append("unit generator present: no singular points")
    inputs = {"p": args.p, "h": pres.h, "vars": list(ctx.names), "relations": list(args.relations)}
    _emit(args, inputs, {"kind": report.kind, "generators": gens}, "\n".join(lines))


def cmd_ring_of_integers(args):
    v = ring_of_integers_pure_root(args.q, args.n)
    result = {
        "ring_of_integers": v.is_ring_of_integers,
        "delta": v.delta,
        "divisible": v.divisible,
        "fiber": None if v.fiber is None else str(v.fiber),
    }
    _emit(args, {"q": args.q, "n": args.n}, result, v.describe())


def cmd_symbolic_member(args):
    p = check_prime(args.p)
    ctx = VarContext(args.vars)
    f = parse_poly(args.expr, ctx)
    if args.r < 1:
        raise DomainError("--r must be positive")
    q = Principal(p) if args.point is None else MaximalPoint(p, tuple(args.point))
    w = dsgj_member(q, f, args.r)
    oracle = power_member_oracle(q, f, args.r)
    agree = w.member == oracle
    verdict = "MEMBER" if w.member else f"NON-MEMBER (witness (a0, a1, ...) = {_fmt_index(w.index)})"
    text = "\n".join([
        verdict,
        "oracle: " + ("MEMBER" if oracle else "NON-MEMBER"),
        "AGREE" if agree else "DISAGREE",
    ])
    inputs = {"p": p, "point": args.point, "r": args.r, "vars": list(ctx.names), "expr": args.expr, "prime": str(q)}
    result = {
        "member": w.member,
        "witness": None if w.index is None else list(w.index),
        "oracle": oracle,
        "agree": agree,
    }
    _emit(args, inputs, result, text)
    if not agree:
        raise CheckFailed("derivative test and power oracle disagree")


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=["text", "json"], default="text")

    parser = argparse.ArgumentParser(prog="pderiv", description="Exact p-derivation calculus.")
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    s = sub.add_parser("delta", parents=[common], help="delta_p of an integer or rational")
    s.add_argument("--p", type=int, required=True)
    s.add_argument("--rational", type=_rational)
    s.add_argument("n", type=int, nargs="?")
    s.set_defaults(func=cmd_delta)

    s = sub.add_parser("table", parents=[common], help="value table of delta_p")
    s.add_argument("--primes", type=_int_list, required=True)
    s.add_argument("--from", dest="from_", type=int, required=True)
    s.add_argument("--to", type=int, required=True)
    s.add_argument("--output", help="also write the JSON table to this file")
    s.set_defaults(func=cmd_table)

    s = sub.add_parser("poly-delta", parents=[common], help="standard p-derivation of a polynomial")
    s.add_argument("--p", type=int, required=True)
    s.add_argument("--vars", required=True)
    s.add_argument("--k", type=int, default=1, help="number of iterations (default 1)")
    s.add_argument("expr")
    s.set_defaults(func=cmd_poly_delta)

    s = sub.add_parser("chain", parents=[common], help="check the chain rule at an integer")
    s.add_argument("--p", type=int, required=True)
    s.add_argument("--n", type=int, required=True)
    s.add_argument("--vars", required=True)
    s.add_argument("expr")
    s.set_defaults(func=cmd_chain)

    s = sub.add_parser("jacobian", parents=[common], help="singular locus generators")
    s.add_argument("--p", type=int)
    s.add_argument("--h", type=int)
    s.add_argument("--vars", required=True)
    s.add_argument("relations", nargs="+")
    s.set_defaults(func=cmd_jacobian)

    s = sub.add_parser("ring-of-integers", parents=[common], help="is Z[n^(1/q)] a ring of integers?")
    s.add_argument("--q", type=int, required=True)
    s.add_argument("--n", type=int, required=True)
    s.set_defaults(func=cmd_ring_of_integers)

    s = sub.add_parser("symbolic-member", parents=[common], help="symbolic power membership")
    s.add_argument("--p", type=int, required=True)
    s.add_argument("--point", type=_int_list)
    s.add_argument("--r", type=int, required=True)
    s.add_argument("--vars", required=True)
    s.add_argument("expr")
    s.set_defaults(func=cmd_symbolic_member)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        args.func(args)
    except (DomainError, CheckFailed) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    return 0


if __name__ == "__main__":
    sys.exit(main())

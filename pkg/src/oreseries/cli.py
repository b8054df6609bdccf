"""Command-line front end.

Every subcommand is a thin wrapper over exactly one kernel operation; inputs
are inline literals (or ``-`` for stdin) so runs are copy-paste reproducible.
Exit codes: 0 on success, 2 on domain errors (reported by their kernel error
name), 1 on usage errors.
"""

from __future__ import annotations

import argparse
import json
import sys

from . import rational, serialize
from .errors import OreSeriesError, ParseError
from .fields import make_context
from .linrep import minimize, rep_hadamard, similarity_witness
from .parsing import (
    format_fraction,
    format_poly,
    format_series,
    parse_fraction,
    parse_series_literal,
)
from .tseries import TwistedSeries, expand_fraction, hadamard

__all__ = ["main"] + [f"cmd_{name}" for name in (
    "expand", "guess", "kronecker", "minpoly", "rank", "minimize", "similar",
    "hadamard", "regular", "convert")]


def _series_from_text(ctx, text: str) -> TwistedSeries:
    coeffs, _ = parse_series_literal(ctx, text)
    return TwistedSeries(ctx, coeffs)


def _feasible_order(precision: int, requested, guard: int = 4) -> int:
    if requested is not None:
        return requested
    return max((precision - guard) // 2, 0)


# ---------------------------------------------------------------------------
# command bodies (shared with the HTTP service)
# ---------------------------------------------------------------------------


def cmd_expand(field: str, fraction: str, n: int):
    ctx = make_context(field)
    f = expand_fraction(parse_fraction(ctx, fraction), n)
    return format_series(f), serialize.series_to_dict(f)


def cmd_guess(field: str, coeffs: str, max_order=None, guard: int = 4):
    ctx = make_context(field)
    f = _series_from_text(ctx, coeffs)
    order = _feasible_order(f.precision, max_order, guard)
    rec, frac = rational.guess_left_denominator(f, order, guard=guard)
    # report the P(0) = 1 normalization the recurrence encodes
    p, q = rational.recurrence_fraction_pair(rec, f)
    text = "\n".join([
        f"order: {rec.order}",
        f"n0: {rec.n0}",
        f"denominator: {format_poly(p)}",
        f"numerator: {format_poly(q)}",
    ])
    payload = {
        "field": ctx.spec,
        "recurrence": serialize.recurrence_to_dict(rec),
        "fraction": serialize.fraction_to_dict(frac),
        "denominator": format_poly(p),
        "numerator": format_poly(q),
    }
    return text, payload


def cmd_kronecker(field: str, coeffs: str, m_max=None):
    ctx = make_context(field)
    f = _series_from_text(ctx, coeffs)
    m_max = (f.precision - 1) // 2 if m_max is None else m_max
    report = rational.kronecker_test(f, m_max)
    lines = [f"verdict: {report.verdict}"]
    for m, d in report.determinants:
        lines.append(f"det D_{m} = {d}")
    if report.fraction is not None:
        lines.append(f"witness: {format_fraction(report.fraction)}")
    return "\n".join(lines), serialize.report_to_dict(report, ctx)


def kronecker_csv(report) -> str:
    rows = ["m,det"] + [f"{m},{d}" for m, d in report.determinants]
    return "\n".join(rows)


def cmd_minpoly(field: str, fraction: str):
    ctx = make_context(field)
    R = rational.minimal_polynomial(parse_fraction(ctx, fraction))
    return format_poly(R), {"field": ctx.spec, "minimal_polynomial": format_poly(R)}


def cmd_rank(field: str, fraction: str):
    ctx = make_context(field)
    r = rational.rank(parse_fraction(ctx, fraction))
    return str(r), {"field": ctx.spec, "rank": r}


def cmd_minimize(field: str, rep: dict):
    ctx = make_context(field) if field else None
    out = minimize(serialize.rep_from_dict(rep, ctx))
    payload = serialize.rep_to_dict(out)
    return json.dumps(payload, indent=2), payload


def cmd_similar(field: str, rep: dict, rep2: dict):
    ctx = make_context(field) if field else None
    r1 = serialize.rep_from_dict(rep, ctx)
    r2 = serialize.rep_from_dict(rep2, ctx)
    w = similarity_witness(r1, r2)
    payload = serialize.witness_to_dict(w, r1.ctx)
    return json.dumps(payload, indent=2), payload


def cmd_hadamard(field: str, coeffs=None, coeffs2=None, rep=None, rep2=None):
    if rep is not None and rep2 is not None:
        ctx = make_context(field) if field else None
        out = rep_hadamard(serialize.rep_from_dict(rep, ctx), serialize.rep_from_dict(rep2, ctx))
        payload = serialize.rep_to_dict(out)
        return json.dumps(payload, indent=2), payload
    if coeffs is None or coeffs2 is None:
        raise ParseError("hadamard needs either two series or two representations")
    ctx = make_context(field)
    out = hadamard(_series_from_text(ctx, coeffs), _series_from_text(ctx, coeffs2))
    return format_series(out), serialize.series_to_dict(out)


def cmd_regular(field: str, fraction: str):
    ctx = make_context(field)
    ev = rational.is_regular(parse_fraction(ctx, fraction))
    text = "\n".join([
        f"regular: {str(ev.regular).lower()}",
        f"negative-degree: {str(ev.negative_degree).lower()}",
        f"minpoly-constant-nonzero: {str(ev.minpoly_constant_nonzero).lower()}",
        f"reduced-A-invertible: {str(ev.reduced_rep_matrix_invertible).lower()}",
    ])
    return text, serialize.regularity_to_dict(ev, ctx)


def cmd_convert(field: str, to: str, fraction=None, rep=None, recurrence=None,
                seed=None, kind: str = "denominator"):
    ctx = make_context(field) if field else None
    if fraction is not None:
        ctx = ctx or make_context(field)
        source = parse_fraction(ctx, fraction)
        src_kind = "fraction"
    elif rep is not None:
        source = serialize.rep_from_dict(rep, ctx)
        ctx = source.ctx
        src_kind = "rep"
    elif recurrence is not None:
        source = serialize.recurrence_from_dict(recurrence, ctx)
        ctx = source.ctx
        src_kind = "recurrence"
    else:
        raise ParseError("convert needs one of --fraction, --rep, --recurrence")

    if src_kind == "recurrence":
        if seed is None:
            raise ParseError("recurrence conversions need --seed")
        seed_coeffs, _ = parse_series_literal(ctx, seed)
    else:
        seed_coeffs = None

    if to == src_kind:
        obj = source
    elif src_kind == "fraction":
        obj = (rational.fraction_to_rep(source) if to == "rep"
               else rational.fraction_to_recurrence(source, kind))
    elif src_kind == "rep":
        obj = (rational.rep_to_fraction(source) if to == "fraction"
               else rational.rep_to_recurrence(source, kind))
    else:
        obj = (rational.recurrence_to_fraction(source, seed_coeffs) if to == "fraction"
               else rational.recurrence_to_rep(source, seed_coeffs))

    if to == "fraction":
        payload = serialize.fraction_to_dict(obj)
        return format_fraction(obj), payload
    if to == "rep":
        payload = serialize.rep_to_dict(obj)
        return json.dumps(payload, indent=2), payload
    if to == "recurrence":
        payload = serialize.recurrence_to_dict(obj)
        return json.dumps(payload, indent=2), payload
    raise ParseError(f"unknown conversion target {to!r}")


# ---------------------------------------------------------------------------
# argument plumbing
# ---------------------------------------------------------------------------


class _Parser(argparse.ArgumentParser):
    def error(self, message):  # usage errors exit 1, not argparse's default 2
        self.print_usage(sys.stderr)
        print(f"{self.prog}: error: {message}", file=sys.stderr)
        raise SystemExit(1)


def _payload(value: str) -> str:
    if value == "-":
        return sys.stdin.read().strip()
    return value


def _json_payload(value: str) -> dict:
    text = _payload(value)
    try:
        return json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(f"bad JSON payload: {exc}") from exc


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="oreseries", description=__doc__)
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name, **kw):
        p = sub.add_parser(name, **kw)
        p.add_argument("--field", help="field spec, e.g. QQ or GF(4)[x^2]")
        p.add_argument("--json", action="store_true", help="emit the JSON form")
        return p

    p = add("expand", help="expand a fraction into a series prefix")
    p.add_argument("--fraction", required=True)
    p.add_argument("--n", type=int, required=True)

    p = add("guess", help="reconstruct a left fraction from coefficients")
    p.add_argument("--coeffs", required=True)
    p.add_argument("--max-order", type=int, default=None)

    p = add("kronecker", help="determinant rationality scan")
    p.add_argument("--coeffs", required=True)
    p.add_argument("--m-max", type=int, default=None)
    p.add_argument("--csv", action="store_true", help="emit (m, det) rows as CSV")

    p = add("minpoly", help="minimal twisted polynomial of a fraction")
    p.add_argument("--fraction", required=True)

    p = add("rank", help="rank of a fraction")
    p.add_argument("--fraction", required=True)

    p = add("minimize", help="reduce a linear representation")
    p.add_argument("--rep", required=True)

    p = add("similar", help="similarity witness between reduced representations")
    p.add_argument("--rep", required=True)
    p.add_argument("--rep2", required=True)

    p = add("hadamard", help="coefficient-wise product of series or representations")
    p.add_argument("--coeffs")
    p.add_argument("--coeffs2")
    p.add_argument("--rep")
    p.add_argument("--rep2")

    p = add("regular", help="three-way regularity test")
    p.add_argument("--fraction", required=True)

    p = add("convert", help="convert between fraction, recurrence and representation")
    p.add_argument("--to", required=True, choices=["fraction", "rep", "recurrence"])
    p.add_argument("--fraction")
    p.add_argument("--rep")
    p.add_argument("--recurrence")
    p.add_argument("--seed", help="seed coefficients for recurrence sources")
    p.add_argument("--kind", default="denominator", choices=["denominator", "syntactic"])

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        if args.command == "expand":
            text, payload = cmd_expand(args.field, _payload(args.fraction), args.n)
        elif args.command == "guess":
            text, payload = cmd_guess(args.field, _payload(args.coeffs), args.max_order)
        elif args.command == "kronecker":
            text, payload = cmd_kronecker(args.field, _payload(args.coeffs), args.m_max)
            if args.csv:
                ctx = make_context(args.field)
                f = _series_from_text(ctx, _payload(args.coeffs))
                m_max = (f.precision - 1) // 2 if args.m_max is None else args.m_max
                text = kronecker_csv(rational.kronecker_test(f, m_max))
                print(text)
                return 0
        elif args.command == "minpoly":
            text, payload = cmd_minpoly(args.field, _payload(args.fraction))
        elif args.command == "rank":
            text, payload = cmd_rank(args.field, _payload(args.fraction))
        elif args.command == "minimize":
            text, payload = cmd_minimize(args.field, _json_payload(args.rep))
        elif args.command == "similar":
            text, payload = cmd_similar(args.field, _json_payload(args.rep), _json_payload(args.rep2))
        elif args.command == "hadamard":
            text, payload = cmd_hadamard(
                args.field,
                coeffs=_payload(args.coeffs) if args.coeffs else None,
                coeffs2=_payload(args.coeffs2) if args.coeffs2 else None,
                rep=_json_payload(args.rep) if args.rep else None,
                rep2=_json_payload(args.rep2) if args.rep2 else None,
            )
        elif args.command == "regular":
            text, payload = cmd_regular(args.field, _payload(args.fraction))
        elif args.command == "convert":
            text, payload = cmd_convert(
                args.field, args.to,
                fraction=_payload(args.fraction) if args.fraction else None,
                rep=_json_payload(args.rep) if args.rep else None,
                recurrence=_json_payload(args.recurrence) if args.recurrence else None,
                seed=_payload(args.seed) if args.seed else None,
                kind=args.kind,
            )
        else:  # pragma: no cover
            parser.error(f"unknown command {args.command}")
            return 1
    except OreSeriesError as exc:
        print(f"error: {exc.name}: {exc}", file=sys.stderr)
        return 2
    print(json.dumps(payload, indent=2) if args.json else text)
    return 0


if __name__ == "__main__":  # pragma: no cover
    sys.exit(main())

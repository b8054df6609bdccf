"""JSON-dict forms of the kernel objects.

Every value serializes through the same exact text syntax the parsers accept,
so a dict -> object -> dict round trip is the identity.  These builders back
both the CLI's --json output and the HTTP service payloads.
"""

from __future__ import annotations

from .errors import ParseError
from .fields import FieldCtx, make_context
from .linrep import LinRep, SimilarityWitness
from .ore_poly import OreFraction, OrePoly
from .parsing import (
    format_element,
    format_fraction,
    format_poly,
    format_series,
    parse_element,
    parse_fraction,
    parse_poly,
    parse_series_literal,
)
from .rational import CanonicalData, RationalityReport, RegularityEvidence
from .tseries import Recurrence, TwistedSeries

__all__ = [
    "series_to_dict", "series_from_dict", "fraction_to_dict", "fraction_from_dict",
    "poly_to_dict", "rep_to_dict", "rep_from_dict", "recurrence_to_dict",
    "recurrence_from_dict", "witness_to_dict", "report_to_dict",
    "regularity_to_dict", "canonical_to_dict",
]


def _ctx_of(d: dict, ctx: FieldCtx | None) -> FieldCtx:
    if ctx is not None:
        return ctx
    try:
        return make_context(d["field"])
    except KeyError as exc:
        raise ParseError("payload is missing its 'field' spec") from exc


def series_to_dict(f: TwistedSeries) -> dict:
    return {
        "field": f.ctx.spec,
        "coeffs": [format_element(c) for c in f.coeffs],
        "precision": f.precision,
    }


def series_from_dict(d: dict, ctx: FieldCtx | None = None) -> TwistedSeries:
    ctx = _ctx_of(d, ctx)
    coeffs = [parse_element(ctx, str(c)) for c in d["coeffs"]]
    precision = int(d.get("precision", len(coeffs)))
    if precision != len(coeffs):
        raise ParseError("precision must equal the number of listed coefficients")
    return TwistedSeries(ctx, coeffs)


def poly_to_dict(p: OrePoly) -> dict:
    return {"field": p.ctx.spec, "poly": format_poly(p)}


def fraction_to_dict(x: OreFraction) -> dict:
    return {
        "field": x.ctx.spec,
        "denominator": format_poly(x.denom),
        "numerator": format_poly(x.numer),
        "reduced": x.reduced,
        "text": format_fraction(x),
    }


def fraction_from_dict(d: dict, ctx: FieldCtx | None = None) -> OreFraction:
    ctx = _ctx_of(d, ctx)
    if "text" in d:
        return parse_fraction(ctx, d["text"])
    return OreFraction(parse_poly(ctx, d["denominator"]), parse_poly(ctx, d["numerator"]))


def rep_to_dict(r: LinRep) -> dict:
    return {
        "field": r.ctx.spec,
        "X": [format_element(x) for x in r.X],
        "A": [[format_element(a) for a in row] for row in r.A],
        "Y": [format_element(y) for y in r.Y],
    }


def rep_from_dict(d: dict, ctx: FieldCtx | None = None) -> LinRep:
    ctx = _ctx_of(d, ctx)
    X = [parse_element(ctx, str(x)) for x in d["X"]]
    A = [[parse_element(ctx, str(a)) for a in row] for row in d["A"]]
    Y = [parse_element(ctx, str(y)) for y in d["Y"]]
    return LinRep(ctx, X, A, Y)


def recurrence_to_dict(rec: Recurrence) -> dict:
    out = {
        "field": rec.ctx.spec,
        "kind": rec.kind,
        "order": rec.order,
        "coeffs": [format_element(c) for c in rec.coeffs],
    }
    if rec.kind == "denominator":
        out["n0"] = rec.n0
    return out


def recurrence_from_dict(d: dict, ctx: FieldCtx | None = None) -> Recurrence:
    ctx = _ctx_of(d, ctx)
    coeffs = [parse_element(ctx, str(c)) for c in d["coeffs"]]
    return Recurrence(ctx, d["kind"], coeffs, n0=int(d.get("n0", 0)))


def witness_to_dict(w: SimilarityWitness, ctx: FieldCtx) -> dict:
    return {
        "field": ctx.spec,
        "B": [[format_element(b) for b in row] for row in w.B],
    }


def report_to_dict(report: RationalityReport, ctx: FieldCtx) -> dict:
    out = {
        "field": ctx.spec,
        "verdict": report.verdict,
        "determinants": [[m, format_element(d)] for m, d in report.determinants],
        "witness": recurrence_to_dict(report.witness) if report.witness else None,
        "fraction": fraction_to_dict(report.fraction) if report.fraction else None,
    }
    return out


def regularity_to_dict(ev: RegularityEvidence, ctx: FieldCtx) -> dict:
    return {
        "field": ctx.spec,
        "regular": ev.regular,
        "negative_degree": ev.negative_degree,
        "minpoly_constant_nonzero": ev.minpoly_constant_nonzero,
        "reduced_rep_matrix_invertible": ev.reduced_rep_matrix_invertible,
    }


def canonical_to_dict(data: CanonicalData, ctx: FieldCtx) -> dict:
    lp, lq = data.left_fraction
    rp, rq = data.right_fraction
    return {
        "field": ctx.spec,
        "minimal_polynomial": format_poly(data.minimal_polynomial),
        "rank": data.rank,
        "left_fraction": {"denominator": format_poly(lp), "numerator": format_poly(lq)},
        "right_fraction": {"numerator": format_poly(rp), "denominator": format_poly(rq)},
        "regular": data.regular,
        "shift_exponent": data.shift_exponent,
    }

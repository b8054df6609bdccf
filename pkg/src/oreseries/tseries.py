"""Truncated twisted power series and recurrences.

A :class:`TwistedSeries` stores an exact coefficient prefix a_0..a_{N-1}
together with its declared precision N.  Operations document their output
precision and raise :class:`PrecisionExhausted` instead of padding, so every
computed coefficient is trustworthy.  Comparisons only ever look at the
common prefix.

The shift operator drops the leading coefficient; the left module action of
a twisted polynomial combines shifts with twisted right scalar actions:
``(P o f)_n = sum_i a_{n+i} sigma^n(b_i)``, so ``T o f`` is the shift and
``c o f`` is ``f*c``.
"""

from __future__ import annotations

from .errors import (
    ContextMismatch,
    InsufficientSeed,
    NonInvertibleSeries,
    NotASeries,
    PrecisionExhausted,
)
from .fields import FieldCtx, FieldElement
from .ore_poly import OreFraction, OrePoly

__all__ = [
    "TwistedSeries", "Recurrence", "series_mul", "series_inv", "shift",
    "module_action", "functional", "hadamard", "expand_fraction",
    "recurrence_extend", "series_eq", "series_from_poly",
]


def _check_ctx(a, b):
    if a.ctx != b.ctx:
        raise ContextMismatch(f"{a.ctx.spec} vs {b.ctx.spec}")


class TwistedSeries:
    """Coefficient prefix of an element of K[[T;sigma]]."""

    __slots__ = ("ctx", "coeffs")

    def __init__(self, ctx: FieldCtx, coeffs):
        items = tuple(c if isinstance(c, FieldElement) else ctx.el(c) for c in coeffs)
        if not items:
            raise PrecisionExhausted("a series needs at least one known coefficient")
        object.__setattr__(self, "ctx", ctx)
        object.__setattr__(self, "coeffs", items)

    def __setattr__(self, *_):
        raise AttributeError("TwistedSeries is immutable")

    @classmethod
    def zero(cls, ctx: FieldCtx, precision: int) -> "TwistedSeries":
        return cls(ctx, (ctx.zero,) * precision)

    @classmethod
    def one(cls, ctx: FieldCtx, precision: int) -> "TwistedSeries":
        return cls(ctx, (ctx.one,) + (ctx.zero,) * (precision - 1))

    @property
    def precision(self) -> int:
        return len(self.coeffs)

    def coeff(self, n: int) -> FieldElement:
        if n >= len(self.coeffs):
            raise PrecisionExhausted(f"coefficient {n} beyond precision {self.precision}")
        return self.coeffs[n]

    def constant_term(self) -> FieldElement:
        return self.coeffs[0]

    def truncate(self, precision: int) -> "TwistedSeries":
        if precision < 1 or precision > len(self.coeffs):
            raise PrecisionExhausted(
                f"cannot truncate precision {self.precision} to {precision}"
            )
        return TwistedSeries(self.ctx, self.coeffs[:precision])

    def is_zero_prefix(self) -> bool:
        return not any(self.coeffs)

    # -- linear structure ----------------------------------------------------
    def __add__(self, other: "TwistedSeries") -> "TwistedSeries":
        _check_ctx(self, other)
        n = min(len(self.coeffs), len(other.coeffs))
        return TwistedSeries(self.ctx, [a + b for a, b in zip(self.coeffs[:n], other.coeffs[:n])])

    def __neg__(self) -> "TwistedSeries":
        return TwistedSeries(self.ctx, [-a for a in self.coeffs])

    def __sub__(self, other: "TwistedSeries") -> "TwistedSeries":
        return self + (-other)

    def __mul__(self, other: "TwistedSeries") -> "TwistedSeries":
        return series_mul(self, other)

    def scale_left(self, c) -> "TwistedSeries":
        """c * f: coefficients c * a_n."""
        c = self.ctx.el(c)
        return TwistedSeries(self.ctx, [c * a for a in self.coeffs])

    def scale_right(self, c) -> "TwistedSeries":
        """f * c: coefficients a_n * sigma^n(c)."""
        c = self.ctx.el(c)
        out, s = [], c
        for a in self.coeffs:
            out.append(a * s)
            s = s.sigma()
        return TwistedSeries(self.ctx, out)

    def __eq__(self, other):
        if not isinstance(other, TwistedSeries):
            return NotImplemented
        return series_eq(self, other)[0]

    def __hash__(self):
        return hash((self.ctx.spec, self.coeffs))

    def __repr__(self):
        from .parsing import format_series

        return format_series(self)

    __str__ = __repr__


def series_eq(f: TwistedSeries, g: TwistedSeries):
    """(equal up to the common precision, that common precision)."""
    _check_ctx(f, g)
    n = min(f.precision, g.precision)
    return f.coeffs[:n] == g.coeffs[:n], n


def series_from_poly(p: OrePoly, precision: int) -> TwistedSeries:
    """Embed a polynomial as a series; coefficients past the degree are zero."""
    if precision < 1:
        raise PrecisionExhausted("precision must be at least 1")
    ctx = p.ctx
    return TwistedSeries(ctx, [p.coeff(i) for i in range(precision)])


def series_mul(f: TwistedSeries, g: TwistedSeries) -> TwistedSeries:
    """Twisted convolution; output precision is the minimum of the inputs."""
    _check_ctx(f, g)
    n = min(f.precision, g.precision)
    ctx = f.ctx
    out = [ctx.zero] * n
    row = list(g.coeffs[:n])  # sigma^i(g) maintained incrementally
    for i in range(n):
        ai = f.coeffs[i]
        if ai:
            for j in range(n - i):
                bj = row[j]
                if bj:
                    out[i + j] = out[i + j] + ai * bj
        if i + 1 < n:
            row = [x.sigma() for x in row[: n - i - 1]]
    return TwistedSeries(ctx, out)


def series_inv(f: TwistedSeries) -> TwistedSeries:
    """Multiplicative inverse to the same precision; needs f(0) != 0.

    Solves the triangular system f * h = 1 coefficient by coefficient, which
    is the geometric-series expansion of (1 - g)^-1 after factoring out f(0).
    """
    a0 = f.constant_term()
    if not a0:
        raise NonInvertibleSeries("series with zero constant term")
    ctx = f.ctx
    inv0 = a0.inverse()
    h = [inv0]
    for n in range(1, f.precision):
        acc = ctx.zero
        for i in range(1, n + 1):
            fi = f.coeffs[i]
            if fi:
                acc = acc + fi * h[n - i].sigma(i)
        h.append(-(inv0 * acc))
    return TwistedSeries(ctx, h)


def shift(f: TwistedSeries, n: int = 1) -> TwistedSeries:
    """Drop the first n coefficients; precision decreases by n."""
    if n < 0:
        raise ValueError("shift exponent must be nonnegative")
    if n >= f.precision:
        raise PrecisionExhausted(f"shift by {n} exhausts precision {f.precision}")
    return TwistedSeries(f.ctx, f.coeffs[n:])


def module_action(p: OrePoly, f: TwistedSeries) -> TwistedSeries:
    """Left action (P o f)_n = sum_i a_{n+i} sigma^n(b_i).

    Output precision drops by deg P.  The zero polynomial acts as zero at the
    input precision.
    """
    if p.ctx != f.ctx:
        raise ContextMismatch(f"{p.ctx.spec} vs {f.ctx.spec}")
    ctx = f.ctx
    if p.is_zero():
        return TwistedSeries.zero(ctx, f.precision)
    d = len(p.coeffs) - 1
    if d >= f.precision:
        raise PrecisionExhausted(
            f"module action by degree {d} needs precision > {d}, have {f.precision}"
        )
    out = []
    row = list(p.coeffs)  # sigma^n(b_i) maintained incrementally
    for n in range(f.precision - d):
        acc = ctx.zero
        for i, b in enumerate(row):
            if b:
                acc = acc + f.coeffs[n + i] * b
        out.append(acc)
        row = [x.sigma() for x in row]
    return TwistedSeries(ctx, out)


def functional(p: OrePoly, f: TwistedSeries) -> FieldElement:
    """The pairing L_f(P) = sum_i b_i a_i = (P o f)(0)."""
    if p.ctx != f.ctx:
        raise ContextMismatch(f"{p.ctx.spec} vs {f.ctx.spec}")
    if not p.is_zero() and p.degree >= f.precision:
        raise PrecisionExhausted("polynomial degree exceeds series precision")
    acc = f.ctx.zero
    for i, b in enumerate(p.coeffs):
        acc = acc + b * f.coeffs[i]
    return acc


def hadamard(f: TwistedSeries, g: TwistedSeries) -> TwistedSeries:
    """Coefficient-wise product; precision is the minimum of the inputs."""
    _check_ctx(f, g)
    n = min(f.precision, g.precision)
    return TwistedSeries(f.ctx, [a * b for a, b in zip(f.coeffs[:n], g.coeffs[:n])])


def expand_fraction(x: OreFraction, n: int) -> TwistedSeries:
    """The unique series f with P f = Q, to precision n.

    Requires the denominator constant term to be nonzero (after whatever
    reduction the fraction's context allows); the coefficients then solve a
    triangular system, valid for every endomorphism.
    """
    if n < 1:
        raise PrecisionExhausted("precision must be at least 1")
    ctx = x.ctx
    p, q = x.denom, x.numer
    p0 = p.constant_term()
    if not p0:
        raise NotASeries("denominator constant term vanishes; not a power series")
    if p0 != ctx.one:
        # renormalize to P(0) = 1 so the triangular solve is division-free
        c = p0.inverse()
        p, q = p.scale_left(c), q.scale_left(c)
    coeffs = []
    dp = len(p.coeffs) - 1
    for k in range(n):
        acc = q.coeff(k)
        for i in range(1, min(k, dp) + 1):
            pi = p.coeffs[i]
            if pi:
                acc = acc - pi * coeffs[k - i].sigma(i)
        coeffs.append(acc)
    return TwistedSeries(ctx, coeffs)


class Recurrence:
    """A finite recurrence satisfied by the coefficient sequence.

    kind="syntactic" with coefficients c_0..c_{r-1} encodes
    ``a_{r+j} = sum_i a_{i+j} sigma^j(c_i)`` for all j >= 0 (the shift-space
    form: s^r(f) = sum_i s^i(f) c_i).

    kind="denominator" with coefficients c_1..c_p and a start index n0
    encodes ``a_n + sum_i c_i sigma^i(a_{n-i}) = 0`` for all n >= n0 (the
    relation carried by a denominator P = 1 + sum_i c_i T^i).
    """

    __slots__ = ("ctx", "kind", "coeffs", "n0")

    def __init__(self, ctx: FieldCtx, kind: str, coeffs, n0: int = 0):
        if kind not in ("syntactic", "denominator"):
            raise ValueError(f"unknown recurrence kind {kind!r}")
        if n0 < 0:
            raise ValueError("n0 must be nonnegative")
        object.__setattr__(self, "ctx", ctx)
        object.__setattr__(self, "kind", kind)
        object.__setattr__(
            self, "coeffs",
            tuple(c if isinstance(c, FieldElement) else ctx.el(c) for c in coeffs),
        )
        object.__setattr__(self, "n0", n0)

    def __setattr__(self, *_):
        raise AttributeError("Recurrence is immutable")

    @property
    def order(self) -> int:
        return len(self.coeffs)

    def __eq__(self, other):
        if not isinstance(other, Recurrence):
            return NotImplemented
        return (self.ctx, self.kind, self.coeffs, self.n0) == (
            other.ctx, other.kind, other.coeffs, other.n0)

    def __repr__(self):
        parts = ", ".join(str(c) for c in self.coeffs)
        tail = f", n0={self.n0}" if self.kind == "denominator" else ""
        return f"Recurrence({self.kind}, order={self.order}, [{parts}]{tail})"


def recurrence_extend(rec: Recurrence, seed, precision: int) -> TwistedSeries:
    """Extend seed coefficients to the requested precision with the recurrence.

    The recurrence takes over at index len(seed); the seed must cover the
    recurrence order (syntactic kind) or the start index n0 (denominator
    kind).
    """
    ctx = rec.ctx
    a = [c if isinstance(c, FieldElement) else ctx.el(c) for c in seed]
    if precision < 1:
        raise PrecisionExhausted("precision must be at least 1")
    if rec.kind == "syntactic":
        if len(a) < rec.order:
            raise InsufficientSeed(
                f"syntactic recurrence of order {rec.order} needs {rec.order} seeds"
            )
    else:
        if len(a) < rec.n0:
            raise InsufficientSeed(
                f"denominator recurrence starting at {rec.n0} needs {rec.n0} seeds"
            )
    for n in range(len(a), precision):
        if rec.kind == "syntactic":
            j = n - rec.order
            acc = ctx.zero
            for i, c in enumerate(rec.coeffs):
                if c:
                    acc = acc + a[i + j] * c.sigma(j)
            a.append(acc)
        else:
            acc = ctx.zero
            for i in range(1, min(rec.order, n) + 1):
                c = rec.coeffs[i - 1]
                if c:
                    acc = acc + c * a[n - i].sigma(i)
            a.append(-acc)
    return TwistedSeries(ctx, a[:precision])

"""Twisted polynomial arithmetic and the field of left fractions.

Multiplication follows the commutation rule ``T a = sigma(a) T``, so the
coefficient of T^n in a product is ``sum_{i+j=n} a_i sigma^i(b_j)``.  Right
Euclidean division works for every endomorphism; left division, left gcd and
full fraction reduction additionally need the inverse endomorphism.

Fractions are stored as left fractions ``P^-1 Q`` with monic denominator.
When the endomorphism is invertible they are kept fully reduced (no common
left factor), which makes the representation canonical; otherwise a
``reduced`` flag records that reduction was best-effort only.
"""

from __future__ import annotations

from . import _linalg
from .errors import (
    BothZero,
    CertificationFailed,
    ContextMismatch,
    DivisionByZeroPoly,
    RequiresAutomorphism,
    ZeroInverse,
)
from .fields import FieldCtx, FieldElement

__all__ = [
    "NEG_INF", "OrePoly", "OreFraction", "poly_mul", "right_divmod",
    "left_divmod", "left_gcd", "right_gcd", "reciprocal", "ore_swap",
    "frac_add", "frac_mul", "frac_inv", "frac_degree",
]

NEG_INF = float("-inf")  # degree of the zero polynomial


def _check_ctx(a, b):
    if a.ctx != b.ctx:
        raise ContextMismatch(f"{a.ctx.spec} vs {b.ctx.spec}")


class OrePoly:
    """Dense twisted polynomial over a field context."""

    __slots__ = ("ctx", "coeffs")

    def __init__(self, ctx: FieldCtx, coeffs):
        items = [c if isinstance(c, FieldElement) else ctx.el(c) for c in coeffs]
        n = len(items)
        while n and not items[n - 1]:
            n -= 1
        object.__setattr__(self, "ctx", ctx)
        object.__setattr__(self, "coeffs", tuple(items[:n]))

    def __setattr__(self, *_):
        raise AttributeError("OrePoly is immutable")

    # -- constructors --------------------------------------------------------
    @classmethod
    def zero(cls, ctx: FieldCtx) -> "OrePoly":
        return cls(ctx, ())

    @classmethod
    def one(cls, ctx: FieldCtx) -> "OrePoly":
        return cls(ctx, (ctx.one,))

    @classmethod
    def constant(cls, ctx: FieldCtx, c) -> "OrePoly":
        return cls(ctx, (ctx.el(c),))

    @classmethod
    def T(cls, ctx: FieldCtx, n: int = 1) -> "OrePoly":
        return cls(ctx, (ctx.zero,) * n + (ctx.one,))

    # -- inspection -----------------------------------------------------------
    @property
    def degree(self):
        return len(self.coeffs) - 1 if self.coeffs else NEG_INF

    def is_zero(self) -> bool:
        return not self.coeffs

    def __bool__(self) -> bool:
        return bool(self.coeffs)

    @property
    def lead(self) -> FieldElement:
        if not self.coeffs:
            raise DivisionByZeroPoly("zero polynomial has no leading coefficient")
        return self.coeffs[-1]

    def constant_term(self) -> FieldElement:
        return self.coeffs[0] if self.coeffs else self.ctx.zero

    def coeff(self, i: int) -> FieldElement:
        return self.coeffs[i] if 0 <= i < len(self.coeffs) else self.ctx.zero

    def is_monic(self) -> bool:
        return bool(self.coeffs) and self.coeffs[-1] == self.ctx.one

    # -- ring operations -------------------------------------------------------
    def __add__(self, other: "OrePoly") -> "OrePoly":
        _check_ctx(self, other)
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] = out[i] + c
        return OrePoly(self.ctx, out)

    def __neg__(self) -> "OrePoly":
        return OrePoly(self.ctx, [-c for c in self.coeffs])

    def __sub__(self, other: "OrePoly") -> "OrePoly":
        return self + (-other)

    def __mul__(self, other: "OrePoly") -> "OrePoly":
        return poly_mul(self, other)

    def __pow__(self, n: int) -> "OrePoly":
        if n < 0:
            raise ValueError("negative polynomial power")
        out, base = OrePoly.one(self.ctx), self
        while n:
            if n & 1:
                out = poly_mul(out, base)
            base = poly_mul(base, base)
            n >>= 1
        return out

    def scale_left(self, c) -> "OrePoly":
        """c * p, scalar on the left: coefficients c*a_i."""
        c = self.ctx.el(c)
        return OrePoly(self.ctx, [c * a for a in self.coeffs])

    def scale_right(self, c) -> "OrePoly":
        """p * c, scalar on the right: coefficients a_i * sigma^i(c)."""
        c = self.ctx.el(c)
        out, s = [], c
        for i, a in enumerate(self.coeffs):
            out.append(a * s)
            s = s.sigma()
        return OrePoly(self.ctx, out)

    def monic(self) -> "OrePoly":
        """Left-normalize to a monic polynomial (lead^-1 * p)."""
        if not self.coeffs:
            return self
        return self.scale_left(self.lead.inverse())

    def primitive_left(self) -> "OrePoly":
        """Left-scale by a content scalar to keep coefficients small.

        Differs from self by a left unit, so it preserves common *right*
        divisors: safe inside gcrd chains.  Over rationals / function fields
        the scalar clears denominators and strips common numerator factors;
        elsewhere this is the identity.
        """
        if not self.coeffs:
            return self
        c = self.ctx.content_scalar([x for x in self.coeffs if x])
        return self if c is None else self.scale_left(c)

    def primitive_right(self) -> "OrePoly":
        """Right-scale by a constant chosen to keep coefficients small.

        Differs from self by a right unit, so it preserves common *left*
        divisors: safe inside gcld chains.  Since p*c has coefficients
        a_i sigma^i(c), the content is taken over sigma^(-i)(a_i), which
        needs the inverse endomorphism (available wherever gcld runs).
        """
        if not self.coeffs:
            return self
        batch = [a.sigma(-i) for i, a in enumerate(self.coeffs) if a]
        c = self.ctx.content_scalar(batch)
        return self if c is None else self.scale_right(c)

    def __eq__(self, other):
        if not isinstance(other, OrePoly):
            return NotImplemented
        return self.ctx == other.ctx and self.coeffs == other.coeffs

    def __hash__(self):
        return hash((self.ctx.spec, self.coeffs))

    def __repr__(self):
        from .parsing import format_poly

        return format_poly(self)

    __str__ = __repr__


def poly_mul(p: OrePoly, q: OrePoly) -> OrePoly:
    """Product with the twisted convolution sum_{i+j=n} a_i sigma^i(b_j)."""
    _check_ctx(p, q)
    a, b = p.coeffs, q.coeffs
    if not a or not b:
        return OrePoly.zero(p.ctx)
    ctx = p.ctx
    out = [ctx.zero] * (len(a) + len(b) - 1)
    sb = list(b)  # sigma^i applied incrementally
    for i, ai in enumerate(a):
        if ai:
            for j, bj in enumerate(sb):
                if bj:
                    out[i + j] = out[i + j] + ai * bj
        if i + 1 < len(a):
            sb = [x.sigma() for x in sb]
    return OrePoly(ctx, out)


def right_divmod(p: OrePoly, q: OrePoly):
    """Quotients for right division: p = quotient * q + remainder.

    Works for any endomorphism; only nonnegative sigma powers occur.
    """
    _check_ctx(p, q)
    if q.is_zero():
        raise DivisionByZeroPoly("right division by zero")
    ctx = p.ctx
    dq = len(q.coeffs) - 1
    rem = list(p.coeffs)
    if len(rem) - 1 < dq:
        return OrePoly.zero(ctx), p
    top = len(rem) - 1 - dq
    # sigma^s(q) for s = 0..top
    sq = [list(q.coeffs)]
    for _ in range(top):
        sq.append([x.sigma() for x in sq[-1]])
    quot = [ctx.zero] * (top + 1)
    for shift in range(top, -1, -1):
        lead = rem[shift + dq]
        if not lead:
            continue
        c = lead / sq[shift][dq]
        quot[shift] = c
        row = sq[shift]
        for j in range(dq + 1):
            rem[shift + j] = rem[shift + j] - c * row[j]
    return OrePoly(ctx, quot), OrePoly(ctx, rem)


def left_divmod(p: OrePoly, q: OrePoly):
    """Quotients for left division: p = q * quotient + remainder.

    Requires the inverse endomorphism.
    """
    _check_ctx(p, q)
    if q.is_zero():
        raise DivisionByZeroPoly("left division by zero")
    ctx = p.ctx
    if not ctx.sigma_invertible:
        raise RequiresAutomorphism("left division needs an invertible endomorphism")
    dq = len(q.coeffs) - 1
    rem = list(p.coeffs)
    if len(rem) - 1 < dq:
        return OrePoly.zero(ctx), p
    top = len(rem) - 1 - dq
    quot = [ctx.zero] * (top + 1)
    qlc_inv = q.lead.inverse()
    for shift in range(top, -1, -1):
        lead = rem[shift + dq]
        if not lead:
            continue
        # q * (c T^shift) has top coefficient q_dq * sigma^dq(c)
        c = (qlc_inv * lead).sigma(-dq)
        quot[shift] = c
        sc = c
        for j in range(dq + 1):
            rem[shift + j] = rem[shift + j] - q.coeffs[j] * sc
            sc = sc.sigma()
    return OrePoly(ctx, quot), OrePoly(ctx, rem)


def left_gcd(p: OrePoly, q: OrePoly):
    """Greatest common left divisor g with cofactors: g = p*u + q*v.

    g is monic, generates the right ideal p*R + q*R, and left-divides both
    inputs (left_divmod remainder zero).  Inputs are left co-prime exactly
    when g = 1.  Needs the inverse endomorphism (the Euclidean loop runs on
    left division).
    """
    _check_ctx(p, q)
    ctx = p.ctx
    if p.is_zero() and q.is_zero():
        raise BothZero("gcd of two zero polynomials")
    if not ctx.sigma_invertible:
        raise RequiresAutomorphism("left gcd needs an invertible endomorphism")
    r0, r1 = p, q
    u0, u1 = OrePoly.one(ctx), OrePoly.zero(ctx)
    v0, v1 = OrePoly.zero(ctx), OrePoly.one(ctx)
    while not r1.is_zero():
        s, r = left_divmod(r0, r1)
        r0, r1 = r1, r
        u0, u1 = u1, u0 - poly_mul(u1, s)
        v0, v1 = v1, v0 - poly_mul(v1, s)
    # right-scale to make g monic; cofactors stay on the right of p, q
    m = len(r0.coeffs) - 1
    d = r0.lead.inverse().sigma(-m)
    g = r0.scale_right(d)
    return g, u0.scale_right(d), v0.scale_right(d)


def right_gcd(p: OrePoly, q: OrePoly) -> OrePoly:
    """Greatest common right divisor (monic); works for any endomorphism."""
    _check_ctx(p, q)
    if p.is_zero() and q.is_zero():
        raise BothZero("gcd of two zero polynomials")
    r0, r1 = p, q
    while not r1.is_zero():
        r0, r1 = r1, right_divmod(r0, r1)[1].primitive_left()
    return r0.monic()


def _reduction_gcd(p: OrePoly, q: OrePoly) -> OrePoly:
    """Common left divisor for fraction reduction (no Bezout cofactors).

    Same Euclidean chain as left_gcd, but remainders are right-rescaled to a
    primitive representative after *every* elimination step (a right-unit
    change, which preserves common left divisors); this is the twisted
    analog of a primitive remainder sequence and prevents the classic
    coefficient swell over rationals and function fields.
    """
    ctx = p.ctx
    r0, r1 = p.primitive_right(), q.primitive_right()
    if r0.degree < r1.degree:
        r0, r1 = r1, r0
    while not r1.is_zero():
        dq = len(r1.coeffs) - 1
        qlc_inv = r1.lead.inverse()
        while not r0.is_zero() and r0.degree >= dq:
            # one left-division step: r0 -= r1 * (c T^shift), then renormalize
            shift = len(r0.coeffs) - 1 - dq
            c = (qlc_inv * r0.lead).sigma(-dq)
            out = list(r0.coeffs)
            sc = c
            for j in range(dq + 1):
                out[shift + j] = out[shift + j] - r1.coeffs[j] * sc
                sc = sc.sigma()
            r0 = OrePoly(ctx, out).primitive_right()
        r0, r1 = r1, r0
    m = len(r0.coeffs) - 1
    return r0.scale_right(r0.lead.inverse().sigma(-m))


def reciprocal(q: OrePoly, side: str) -> OrePoly:
    """Coefficient-reversed polynomial with one-sided sigma powers.

    side="left":  sum_i sigma^i(a_{m-i}) T^i
    side="right": sum_i sigma^(i-m)(a_{m-i}) T^i  (needs the inverse map)
    """
    if q.is_zero():
        raise DivisionByZeroPoly("reciprocal of the zero polynomial")
    if side not in ("left", "right"):
        raise ValueError(f"side must be 'left' or 'right', got {side!r}")
    ctx = q.ctx
    m = len(q.coeffs) - 1
    if side == "right" and m > 0 and not ctx.sigma_invertible:
        raise RequiresAutomorphism("right reciprocal needs an invertible endomorphism")
    out = []
    for i in range(m + 1):
        c = q.coeffs[m - i]
        out.append(c.sigma(i) if side == "left" else c.sigma(i - m))
    return OrePoly(ctx, out)


def ore_swap(q: OrePoly, p: OrePoly):
    """Solve P' q = Q' p with P' != 0, deg P' <= deg p, deg Q' <= deg q.

    This is the left Ore condition made effective: the unknown coefficients
    of P', Q' enter K-linearly because they sit to the left of the twisted
    powers, so a bounded-degree kernel computation succeeds for every
    endomorphism.
    """
    _check_ctx(q, p)
    ctx = p.ctx
    if p.is_zero():
        raise DivisionByZeroPoly("Ore swap past a zero denominator")
    if q.is_zero():
        return OrePoly.one(ctx), OrePoly.zero(ctx)
    if q.degree == 0:
        # P' c = Q' p with Q' = 1: P' = p scaled by sigma^i(c^-1) per coefficient
        return p.scale_right(q.constant_term().inverse()), OrePoly.one(ctx)
    if p.degree == 0:
        return OrePoly.one(ctx), q.scale_right(p.constant_term().inverse())
    dp = len(p.coeffs) - 1
    dq = len(q.coeffs) - 1
    nx, ny = dp + 1, dq + 1
    # sigma^i of both coefficient lists, i up to max degree
    sq = [list(q.coeffs)]
    for _ in range(dp):
        sq.append([x.sigma() for x in sq[-1]])
    sp = [list(p.coeffs)]
    for _ in range(dq):
        sp.append([x.sigma() for x in sp[-1]])
    rows = []
    for n in range(dp + dq + 1):
        row = []
        for i in range(nx):
            j = n - i
            row.append(sq[i][j] if 0 <= j <= dq else ctx.zero)
        for i in range(ny):
            j = n - i
            row.append(-sp[i][j] if 0 <= j <= dp else ctx.zero)
        rows.append(row)
    basis = _linalg.nullspace(ctx, rows)
    if not basis:
        raise CertificationFailed("Ore swap found no relation")  # pragma: no cover
    sol = basis[0]
    c = ctx.content_scalar([x for x in sol if x])
    if c is not None:
        sol = [c * x for x in sol]
    pp = OrePoly(ctx, sol[:nx])
    qq = OrePoly(ctx, sol[nx:])
    if pp.is_zero():  # pragma: no cover - impossible in an integral domain
        raise CertificationFailed("Ore swap returned a zero left multiplier")
    if poly_mul(pp, q) != poly_mul(qq, p):  # pragma: no cover - bug guard
        raise CertificationFailed("Ore swap certificate failed")
    return pp, qq


def common_left_multiple(p1: OrePoly, p2: OrePoly):
    """(u1, u2, m) with m = u1*p1 = u2*p2 and m != 0."""
    u1, u2 = ore_swap(p1, p2)
    return u1, u2, poly_mul(u1, p1)


class OreFraction:
    """Left fraction P^-1 Q of twisted polynomials (P monic, P != 0)."""

    __slots__ = ("ctx", "denom", "numer", "reduced")

    def __init__(self, denom: OrePoly, numer: OrePoly):
        _check_ctx(denom, numer)
        if denom.is_zero():
            raise DivisionByZeroPoly("fraction with zero denominator")
        ctx = denom.ctx
        if numer.is_zero():
            denom, numer, reduced = OrePoly.one(ctx), OrePoly.zero(ctx), True
        elif denom.degree == 0 or numer.degree == 0:
            # a constant on either side leaves no room for a common left factor
            c = denom.lead.inverse()
            denom = denom.scale_left(c)
            numer = numer.scale_left(c)
            reduced = True
        elif ctx.sigma_invertible:
            g = _reduction_gcd(denom, numer)
            if g.degree > 0:
                denom = left_divmod(denom, g)[0]
                numer = left_divmod(numer, g)[0]
            c = denom.lead.inverse()
            denom = denom.scale_left(c)
            numer = numer.scale_left(c)
            reduced = True
        else:
            c = denom.lead.inverse()
            denom = denom.scale_left(c)
            numer = numer.scale_left(c)
            reduced = denom.degree == 0 or numer.degree == 0
        object.__setattr__(self, "ctx", ctx)
        object.__setattr__(self, "denom", denom)
        object.__setattr__(self, "numer", numer)
        object.__setattr__(self, "reduced", reduced)

    def __setattr__(self, *_):
        raise AttributeError("OreFraction is immutable")

    # -- constructors ----------------------------------------------------------
    @classmethod
    def zero(cls, ctx: FieldCtx) -> "OreFraction":
        return cls(OrePoly.one(ctx), OrePoly.zero(ctx))

    @classmethod
    def one(cls, ctx: FieldCtx) -> "OreFraction":
        return cls(OrePoly.one(ctx), OrePoly.one(ctx))

    @classmethod
    def from_poly(cls, p: OrePoly) -> "OreFraction":
        return cls(OrePoly.one(p.ctx), p)

    @classmethod
    def from_element(cls, ctx: FieldCtx, c) -> "OreFraction":
        return cls.from_poly(OrePoly.constant(ctx, c))

    # -- inspection --------------------------------------------------------------
    def is_zero(self) -> bool:
        return self.numer.is_zero()

    def __bool__(self) -> bool:
        return not self.is_zero()

    def is_polynomial(self) -> bool:
        return self.denom.degree == 0

    def as_poly(self) -> OrePoly:
        if not self.is_polynomial():
            raise ValueError("fraction is not a polynomial")
        return self.numer

    @property
    def degree(self):
        return frac_degree(self)

    # -- arithmetic ---------------------------------------------------------------
    def __add__(self, other: "OreFraction") -> "OreFraction":
        return frac_add(self, other)

    def __neg__(self) -> "OreFraction":
        return OreFraction(self.denom, -self.numer)

    def __sub__(self, other: "OreFraction") -> "OreFraction":
        return frac_add(self, -other)

    def __mul__(self, other: "OreFraction") -> "OreFraction":
        return frac_mul(self, other)

    def inverse(self) -> "OreFraction":
        return frac_inv(self)

    def __eq__(self, other):
        if not isinstance(other, OreFraction):
            return NotImplemented
        _check_ctx(self, other)
        if self.reduced and other.reduced:
            return self.denom == other.denom and self.numer == other.numer
        u1, u2, _ = common_left_multiple(self.denom, other.denom)
        return poly_mul(u1, self.numer) == poly_mul(u2, other.numer)

    def __repr__(self):
        from .parsing import format_fraction

        return format_fraction(self)

    __str__ = __repr__


def frac_add(x: OreFraction, y: OreFraction) -> OreFraction:
    _check_ctx(x, y)
    u1, u2, m = common_left_multiple(x.denom, y.denom)
    return OreFraction(m, poly_mul(u1, x.numer) + poly_mul(u2, y.numer))


def frac_mul(x: OreFraction, y: OreFraction) -> OreFraction:
    _check_ctx(x, y)
    if x.is_zero() or y.is_zero():
        return OreFraction.zero(x.ctx)
    p2, q1 = ore_swap(x.numer, y.denom)  # p2 * numer_x = q1 * denom_y
    return OreFraction(poly_mul(p2, x.denom), poly_mul(q1, y.numer))


def frac_inv(x: OreFraction) -> OreFraction:
    if x.is_zero():
        raise ZeroInverse("inverse of the zero fraction")
    return OreFraction(x.numer, x.denom)


def frac_degree(x: OreFraction):
    """deg Q - deg P, independent of the representation; -inf for zero."""
    if x.is_zero():
        return NEG_INF
    return x.numer.degree - x.denom.degree

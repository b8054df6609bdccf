"""Coefficient fields with an attached endomorphism.

A :class:`FieldCtx` bundles an exact coefficient field K with a field
endomorphism ``sigma`` (and its inverse when one exists).  Shipped contexts:

* ``QQ`` -- the rationals with the identity map,
* ``GF(p)`` -- prime fields with the identity map,
* ``GF(p^k)[x^(p^e)]`` -- finite extension fields with a Frobenius power,
  built on a fixed published modulus per (p, k) so results are reproducible,
* ``GF(p)(t)[t->EXPR]`` / ``QQ(t)[t->EXPR]`` -- rational function fields with
  a substitution endomorphism, EXPR one of ``t+1``, ``q*t`` or ``t^p``
  (the last only in characteristic p, where it is not surjective).

Elements are immutable :class:`FieldElement` values in canonical form, so
equality is structural.  All arithmetic is exact; there is no floating point
anywhere in the kernel.
"""

from __future__ import annotations

import re
from fractions import Fraction
from functools import lru_cache

from . import _univar
from .errors import (
    ContextMismatch,
    InvalidModulus,
    InvalidSubstitution,
    NegativePowerOfNonInvertibleEndo,
    ParseError,
)

__all__ = ["FieldCtx", "FieldElement", "make_context", "apply_endo"]


class FieldElement:
    """An immutable element of some :class:`FieldCtx`.

    The payload is an opaque canonical representation interpreted by the
    owning context; arithmetic operators delegate to the context's tables.
    """

    __slots__ = ("ctx", "payload")

    def __init__(self, ctx: "FieldCtx", payload):
        object.__setattr__(self, "ctx", ctx)
        object.__setattr__(self, "payload", payload)

    def __setattr__(self, *_):
        raise AttributeError("FieldElement is immutable")

    def _coerce(self, other):
        if isinstance(other, FieldElement):
            if other.ctx != self.ctx:
                raise ContextMismatch(f"{other.ctx.spec} vs {self.ctx.spec}")
            return other
        if isinstance(other, int):
            return self.ctx.el(other)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return FieldElement(self.ctx, self.ctx._add(self.payload, other.payload))

    __radd__ = __add__

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return FieldElement(self.ctx, self.ctx._sub(self.payload, other.payload))

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return FieldElement(self.ctx, self.ctx._sub(other.payload, self.payload))

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return FieldElement(self.ctx, self.ctx._mul(self.payload, other.payload))

    __rmul__ = __mul__

    def __truediv__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return FieldElement(self.ctx, self.ctx._mul(self.payload, self.ctx._inv(other.payload)))

    def __rtruediv__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return FieldElement(self.ctx, self.ctx._mul(other.payload, self.ctx._inv(self.payload)))

    def __neg__(self):
        return FieldElement(self.ctx, self.ctx._neg(self.payload))

    def __pow__(self, n: int):
        if n < 0:
            return self.inverse() ** (-n)
        out, base = self.ctx.one, self
        while n:
            if n & 1:
                out = out * base
            base = base * base
            n >>= 1
        return out

    def inverse(self) -> "FieldElement":
        return FieldElement(self.ctx, self.ctx._inv(self.payload))

    def sigma(self, n: int = 1) -> "FieldElement":
        """Apply the context endomorphism n times (n < 0 needs the inverse)."""
        return apply_endo(self.ctx, self, n)

    def is_zero(self) -> bool:
        return self.ctx._is_zero(self.payload)

    def __bool__(self) -> bool:
        return not self.is_zero()

    def __eq__(self, other):
        if isinstance(other, int):
            other = self.ctx.el(other)
        if not isinstance(other, FieldElement):
            return NotImplemented
        return self.ctx == other.ctx and self.payload == other.payload

    def __hash__(self):
        return hash((self.ctx.spec, self.payload))

    def __repr__(self):
        return self.ctx.format(self)

    __str__ = __repr__


class FieldCtx:
    """Base class for coefficient-field contexts.

    Immutable after construction; safe to share across threads.  Subclasses
    provide raw payload arithmetic plus the endomorphism action.
    """

    field_kind: str
    sigma_kind: str
    sigma_invertible: bool
    spec: str
    characteristic: int
    generator_symbol: str | None = None

    # -- payload-level hooks -------------------------------------------------
    def _add(self, a, b):
        raise NotImplementedError

    def _sub(self, a, b):
        raise NotImplementedError

    def _neg(self, a):
        raise NotImplementedError

    def _mul(self, a, b):
        raise NotImplementedError

    def _inv(self, a):
        raise NotImplementedError

    def _is_zero(self, a) -> bool:
        raise NotImplementedError

    def _sigma(self, a, n: int):
        raise NotImplementedError

    def _from_int(self, v: int):
        raise NotImplementedError

    def _format(self, a) -> str:
        raise NotImplementedError

    def _random(self, rng, **hints):
        raise NotImplementedError

    # -- public surface ------------------------------------------------------
    @property
    def zero(self) -> FieldElement:
        return FieldElement(self, self._from_int(0))

    @property
    def one(self) -> FieldElement:
        return FieldElement(self, self._from_int(1))

    def el(self, value) -> FieldElement:
        """Coerce an int, Fraction or literal string into this field."""
        if isinstance(value, FieldElement):
            if value.ctx != self:
                raise ContextMismatch(f"{value.ctx.spec} vs {self.spec}")
            return value
        if isinstance(value, int):
            return FieldElement(self, self._from_int(value))
        if isinstance(value, Fraction):
            num = self._from_int(value.numerator)
            den = self._from_int(value.denominator)
            return FieldElement(self, self._mul(num, self._inv(den)))
        if isinstance(value, str):
            return self.parse(value)
        raise TypeError(f"cannot coerce {value!r} into {self.spec}")

    def parse(self, text: str) -> FieldElement:
        from .parsing import parse_element

        return parse_element(self, text)

    def format(self, x: FieldElement) -> str:
        return self._format(x.payload)

    def random_element(self, rng, **hints) -> FieldElement:
        return FieldElement(self, self._random(rng, **hints))

    def content_scalar(self, elements) -> FieldElement | None:
        """A scalar c that clears denominators and common factors of the batch.

        Used to keep Euclidean remainder chains small over fields whose
        elements can grow (rationals, function fields).  None means "leave
        as is"; the default is exact for fields with bounded elements.
        """
        return None

    def complexity(self, x: FieldElement) -> int:
        """Crude size measure used for pivot selection; 0 when sizes are flat."""
        return 0

    @property
    def generator(self) -> FieldElement:
        raise AttributeError(f"{self.spec} has no distinguished generator")

    def __eq__(self, other):
        return isinstance(other, FieldCtx) and self.spec == other.spec

    def __hash__(self):
        return hash(self.spec)

    def __repr__(self):
        return f"FieldCtx({self.spec!r})"


def apply_endo(ctx: FieldCtx, x: FieldElement, n: int = 1) -> FieldElement:
    """Return sigma^n(x); sigma^0 is the identity.

    Negative n is only available when the endomorphism is invertible.
    """
    if x.ctx != ctx:
        raise ContextMismatch(f"{x.ctx.spec} vs {ctx.spec}")
    if n == 0:
        return x
    if n < 0 and not ctx.sigma_invertible:
        raise NegativePowerOfNonInvertibleEndo(
            f"sigma^{n} unavailable on {ctx.spec}"
        )
    return FieldElement(ctx, ctx._sigma(x.payload, n))


# ---------------------------------------------------------------------------
# concrete contexts
# ---------------------------------------------------------------------------


class _RationalContext(FieldCtx):
    field_kind = "rationals"
    sigma_kind = "identity"
    sigma_invertible = True
    spec = "QQ"
    characteristic = 0

    def _add(self, a, b):
        return a + b

    def _sub(self, a, b):
        return a - b

    def _neg(self, a):
        return -a

    def _mul(self, a, b):
        return a * b

    def _inv(self, a):
        if a == 0:
            raise ZeroDivisionError("inverse of zero")
        return 1 / a

    def _is_zero(self, a):
        return a == 0

    def _sigma(self, a, n):
        return a

    def _from_int(self, v):
        return Fraction(v)

    def _format(self, a):
        return str(a)

    def _random(self, rng, size: int = 9, **_):
        return Fraction(rng.randint(-size, size), rng.randint(1, size))

    def content_scalar(self, elements):
        import math

        nums = [abs(x.payload.numerator) for x in elements if x.payload]
        if not nums:
            return None
        dens = [x.payload.denominator for x in elements if x.payload]
        g = 0
        for n in nums:
            g = math.gcd(g, n)
        l = 1
        for d in dens:
            l = l * d // math.gcd(l, d)
        c = Fraction(l, g)
        return None if c == 1 else FieldElement(self, c)

    def complexity(self, x):
        p = x.payload
        return p.numerator.bit_length() + p.denominator.bit_length()


class _PrimeContext(FieldCtx):
    field_kind = "prime_field"
    sigma_kind = "identity"
    sigma_invertible = True

    def __init__(self, p: int):
        self.p = p
        self.spec = f"GF({p})"
        self.characteristic = p

    def _add(self, a, b):
        return (a + b) % self.p

    def _sub(self, a, b):
        return (a - b) % self.p

    def _neg(self, a):
        return (-a) % self.p

    def _mul(self, a, b):
        return (a * b) % self.p

    def _inv(self, a):
        if a == 0:
            raise ZeroDivisionError("inverse of zero")
        return pow(a, -1, self.p)

    def _is_zero(self, a):
        return a == 0

    def _sigma(self, a, n):
        return a

    def _from_int(self, v):
        return v % self.p

    def _format(self, a):
        return str(a)

    def _random(self, rng, **_):
        return rng.randrange(self.p)


class _FiniteContext(FieldCtx):
    """GF(p^k) with the Frobenius power x -> x^(p^e) (e = 0 is the identity)."""

    field_kind = "finite_field"
    generator_symbol = "a"

    def __init__(self, p: int, k: int, e: int):
        self.p = p
        self.k = k
        self.e = e % k
        self.characteristic = p
        self.sigma_kind = "identity" if self.e == 0 else "frobenius"
        self.sigma_invertible = True
        self._poly = _univar.TuplePoly(_univar.prime_scalar_ops(p))
        self.modulus = _extension_modulus(p, k)
        if self.e == 0:
            self.spec = f"GF({p ** k})"
        else:
            self.spec = f"GF({p ** k})[x^{p ** self.e}]"

    def _reduce(self, a):
        return self._poly.divmod(a, self.modulus)[1]

    def _add(self, a, b):
        return self._poly.add(a, b)

    def _sub(self, a, b):
        return self._poly.sub(a, b)

    def _neg(self, a):
        return self._poly.neg(a)

    def _mul(self, a, b):
        return self._reduce(self._poly.mul(a, b))

    def _inv(self, a):
        if not a:
            raise ZeroDivisionError("inverse of zero")
        g, u, _ = self._poly.xgcd(a, self.modulus)
        if self._poly.deg(g) != 0:
            raise ZeroDivisionError("element not invertible")
        return self._reduce(self._poly.scale(u, self._poly.s.inv(g[0])))

    def _is_zero(self, a):
        return not a

    def _sigma(self, a, n):
        m = (self.e * n) % self.k
        if m == 0 or not a:
            return a
        return self._poly.powmod(a, self.p ** m, self.modulus)

    def _from_int(self, v):
        return self._poly.from_coeffs([v % self.p])

    def _format(self, a):
        return _format_poly_in_symbol(a, "a", str)

    def _random(self, rng, **_):
        return self._poly.normalize([rng.randrange(self.p) for _ in range(self.k)])

    @property
    def generator(self) -> FieldElement:
        return FieldElement(self, self._poly.gen)


class _FunctionContext(FieldCtx):
    """K0(t) for K0 = GF(p) or QQ, with a substitution endomorphism on t."""

    field_kind = "rational_function_field"
    generator_symbol = "t"

    def __init__(self, base_spec: str, image: tuple):
        # image: ("identity",) | ("shift",) | ("dilate", q_payload) | ("power",)
        self.base_spec = base_spec
        if base_spec == "QQ":
            self.characteristic = 0
            self._scalars = _univar.rational_scalar_ops()
            self._poly = _univar.TuplePoly(self._scalars)
            self._bitpacked = False
        else:
            p = int(re.fullmatch(r"GF\((\d+)\)", base_spec).group(1))
            self.characteristic = p
            self._scalars = _univar.prime_scalar_ops(p)
            if p == 2:
                self._poly = _univar.Gf2Poly()
                self._bitpacked = True
            else:
                self._poly = _univar.TuplePoly(self._scalars)
                self._bitpacked = False
        self.image = image
        kind = image[0]
        if kind == "shift":
            self.sigma_kind = "substitution"
            self.sigma_invertible = True
            image_str = "t+1"
        elif kind == "dilate":
            self.sigma_kind = "substitution"
            self.sigma_invertible = True
            image_str = f"{self._format_scalar(image[1])}*t"
        elif kind == "power":
            self.sigma_kind = "substitution"
            self.sigma_invertible = False
            image_str = f"t^{self.characteristic}"
        else:
            raise ValueError(f"unknown image kind {kind!r}")
        self.spec = f"{base_spec}(t)[t->{image_str}]"

    # payloads are (num, den) with den monic and gcd(num, den) = 1
    def _normalize(self, num, den):
        P = self._poly
        if P.is_zero(num):
            if P.is_zero(den):
                raise ZeroDivisionError("zero denominator")
            return (P.zero, P.one)
        if P.eq(den, P.one):
            return (num, den)
        if P.is_zero(den):
            raise ZeroDivisionError("zero denominator")
        if P.deg(den) == 0:
            if self._bitpacked:
                return (num, P.one)
            return (P.scale(num, self._scalars.inv(den[0])), P.one)
        g = P.gcd(num, den)
        if P.deg(g) > 0:
            num = P.divmod(num, g)[0]
            den = P.divmod(den, g)[0]
        if not self._bitpacked:
            lead = den[-1]
            if not self._scalars.eq(lead, self._scalars.one):
                inv = self._scalars.inv(lead)
                num = P.scale(num, inv)
                den = P.scale(den, inv)
        return (num, den)

    def _add(self, a, b):
        P = self._poly
        num = P.add(P.mul(a[0], b[1]), P.mul(b[0], a[1]))
        return self._normalize(num, P.mul(a[1], b[1]))

    def _sub(self, a, b):
        return self._add(a, self._neg(b))

    def _neg(self, a):
        return (self._poly.neg(a[0]), a[1])

    def _mul(self, a, b):
        P = self._poly
        return self._normalize(P.mul(a[0], b[0]), P.mul(a[1], b[1]))

    def _inv(self, a):
        if self._poly.is_zero(a[0]):
            raise ZeroDivisionError("inverse of zero")
        return self._normalize(a[1], a[0])

    def _is_zero(self, a):
        return self._poly.is_zero(a[0])

    def _image_poly(self, n: int):
        """The polynomial sigma^n(t) in raw representation."""
        P = self._poly
        kind = self.image[0]
        if kind == "shift":
            if self.characteristic:
                c = n % self.characteristic
            else:
                c = n
            if self._bitpacked:
                return P.gen | (c & 1)
            return P.from_coeffs([self._int_scalar(c), self._scalars.one])
        if kind == "dilate":
            q = self.image[1]
            s = self._scalars
            qn = s.one
            step = q if n >= 0 else s.inv(q)
            for _ in range(abs(n)):
                qn = s.mul(qn, step)
            if self._bitpacked:
                return P.gen
            return P.from_coeffs([s.zero, qn])
        # power: t -> t^(p^n), n >= 0 enforced by apply_endo
        return P.spread(P.gen, self.characteristic ** n)

    def _sigma(self, a, n):
        if n == 0:
            return a
        kind = self.image[0]
        P = self._poly
        if kind == "power":
            # substitution by t^(p^n): exponent spread, no composition needed
            k = self.characteristic ** n
            return self._normalize(P.spread(a[0], k), P.spread(a[1], k))
        img = self._image_poly(n)
        return self._normalize(P.compose(a[0], img), P.compose(a[1], img))

    def _from_int(self, v):
        return (self._int_poly(v), self._poly.one)

    def _int_scalar(self, v: int):
        if self.characteristic:
            return v % self.characteristic
        return Fraction(v)

    def _int_poly(self, v: int):
        c = self._int_scalar(v)
        if self._bitpacked:
            return c & 1
        return self._poly.from_coeffs([c])

    def _format_scalar(self, c) -> str:
        return str(c)

    def _format_base_poly(self, a) -> str:
        return _format_poly_in_symbol(self._poly.coeffs(a), "t", self._format_scalar)

    def _format(self, a):
        num, den = a
        if self._poly.eq(den, self._poly.one):
            return self._format_base_poly(num)
        return f"({self._format_base_poly(num)})/({self._format_base_poly(den)})"

    def content_scalar(self, elements):
        P = self._poly
        payloads = [x.payload for x in elements if not self._is_zero(x.payload)]
        if not payloads:
            return None
        g = P.zero
        for num, _ in payloads:
            g = P.gcd(g, num)
        l = P.one
        for _, den in payloads:
            l = P.mul(P.divmod(l, P.gcd(l, den))[0], den)
        c = self._normalize(l, g)
        if P.eq(c[0], P.one) and P.eq(c[1], P.one):
            return None
        return FieldElement(self, c)

    def complexity(self, x):
        num, den = x.payload
        return max(self._poly.deg(num), 0) + max(self._poly.deg(den), 0)

    def _random(self, rng, num_degree: int = 2, den_degree: int = 1,
                polynomial: bool = False, size: int = 5, **_):
        def rand_scalar():
            if self.characteristic:
                return rng.randrange(self.characteristic)
            return Fraction(rng.randint(-size, size), rng.randint(1, size))

        def rand_poly(deg, nonzero=False):
            while True:
                raw = self._poly.from_coeffs(
                    [rand_scalar() for _ in range(deg + 1)]
                )
                if not nonzero or not self._poly.is_zero(raw):
                    return raw

        num = rand_poly(num_degree)
        den = self._poly.one if polynomial else rand_poly(den_degree, nonzero=True)
        return self._normalize(num, den)

    @property
    def generator(self) -> FieldElement:
        return FieldElement(self, (self._poly.gen, self._poly.one))


def _format_poly_in_symbol(coeffs, symbol: str, fmt_scalar) -> str:
    """Render a coefficient sequence (low degree first) as a polynomial string."""
    terms = []
    for i in range(len(coeffs) - 1, -1, -1):
        txt = fmt_scalar(coeffs[i])
        if txt == "0":
            continue
        neg = txt.startswith("-")
        mag = txt[1:] if neg else txt
        if i == 0:
            body = mag
        else:
            var = symbol if i == 1 else f"{symbol}^{i}"
            body = var if mag == "1" else f"{mag}*{var}"
        if not terms:
            terms.append(("-" if neg else "") + body)
        else:
            terms.append(("- " if neg else "+ ") + body)
    return " ".join(terms) if terms else "0"


# ---------------------------------------------------------------------------
# moduli for extension fields
# ---------------------------------------------------------------------------

# Published (Conway) moduli, low-degree coefficients first, leading 1 included.
_CONWAY = {
    (2, 2): (1, 1, 1),
    (2, 3): (1, 1, 0, 1),
    (2, 4): (1, 1, 0, 0, 1),
    (2, 5): (1, 0, 1, 0, 0, 1),
    (2, 6): (1, 1, 0, 1, 1, 0, 1),
    (3, 2): (2, 2, 1),
    (3, 3): (1, 2, 0, 1),
    (3, 4): (2, 0, 0, 2, 1),
    (5, 2): (2, 4, 1),
    (5, 3): (3, 3, 0, 1),
    (7, 2): (3, 6, 1),
    (11, 2): (2, 7, 1),
    (13, 2): (2, 12, 1),
}


def _is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n < 4:
        return True
    if n % 2 == 0:
        return False
    d = 3
    while d * d <= n:
        if n % d == 0:
            return False
        d += 2
    return True

def _prime_factors(n: int):
    out, d = set(), 2
    while d * d <= n:
        while n % d == 0:
            out.add(d)
            n //= d
        d += 1
    if n > 1:
        out.add(n)
    return sorted(out)


def _is_irreducible(p: int, coeffs: tuple) -> bool:
    poly = _univar.TuplePoly(_univar.prime_scalar_ops(p))
    f = poly.from_coeffs(coeffs)
    k = poly.deg(f)
    x = poly.gen
    # x^(p^k) == x (mod f), and gcd(x^(p^(k/q)) - x, f) == 1 for prime q | k
    if poly.powmod(x, p ** k, f) != poly.divmod(x, f)[1]:
        return False
    for q in _prime_factors(k):
        xp = poly.powmod(x, p ** (k // q), f)
        if poly.deg(poly.gcd(poly.sub(xp, x), f)) != 0:
            return False
    return True


@lru_cache(maxsize=None)
def _extension_modulus(p: int, k: int) -> tuple:
    coeffs = _CONWAY.get((p, k))
    if coeffs is None:
        # deterministic fallback: smallest monic irreducible in lexicographic
        # order over the low coefficients
        for code in range(p ** k):
            lower = []
            c = code
            for _ in range(k):
                lower.append(c % p)
                c //= p
            cand = tuple(lower) + (1,)
            if _is_irreducible(p, cand):
                coeffs = cand
                break
        else:  # pragma: no cover - always finds one
            raise InvalidModulus(f"no irreducible modulus for GF({p}^{k})")
    if not _is_irreducible(p, coeffs):
        raise InvalidModulus(f"modulus for GF({p}^{k}) is reducible")
    return coeffs


# ---------------------------------------------------------------------------
# the field-spec grammar
# ---------------------------------------------------------------------------

_GF_RX = re.compile(r"GF\((\d+)(?:\^(\d+))?\)")


def _split_prime_power(n: int):
    for p in range(2, n + 1):
        if n % p == 0:
            k = 0
            while n > 1 and n % p == 0:
                n //= p
                k += 1
            if n == 1 and _is_prime(p):
                return p, k
            return None
    return None


def _parse_gf_head(text: str):
    m = _GF_RX.fullmatch(text)
    if not m:
        raise ParseError(f"bad field spec segment {text!r}")
    base = int(m.group(1))
    if m.group(2) is not None:
        p, k = base, int(m.group(2))
        if not _is_prime(p) or k < 1:
            raise InvalidModulus(f"GF({p}^{k}) is not a field")
        return p, k
    pk = _split_prime_power(base)
    if pk is None:
        raise InvalidModulus(f"{base} is not a prime power")
    return pk


def _parse_substitution_expr(expr: str, ctx_char: int) -> tuple:
    expr = expr.replace(" ", "")
    if expr == "t+1":
        return ("shift",)
    m = re.fullmatch(r"t\^(\d+)", expr)
    if m:
        exp = int(m.group(1))
        if ctx_char == 0:
            raise InvalidSubstitution("t^p images require positive characteristic")
        if exp != ctx_char:
            raise InvalidSubstitution(
                f"t^{exp} does not define an endomorphism here; expected t^{ctx_char}"
            )
        return ("power",)
    m = re.fullmatch(r"(-?\d+(?:/\d+)?)\*t", expr)
    if m:
        lit = Fraction(m.group(1))
        if ctx_char:
            q = (lit.numerator * pow(lit.denominator, -1, ctx_char)) % ctx_char
        else:
            q = lit
        if q == 0:
            raise InvalidSubstitution("dilation by zero is not injective")
        return ("dilate", q)
    raise InvalidSubstitution(f"unsupported substitution image {expr!r}")


@lru_cache(maxsize=None)
def make_context(spec: str) -> FieldCtx:
    """Build a validated field context from its textual specification.

    Grammar: ``QQ`` | ``GF(p)`` | ``GF(p^k)[x^M]`` with M a power of p |
    ``GF(p)(t)[t->EXPR]`` | ``QQ(t)[t->EXPR]`` with EXPR in
    {``t+1``, ``q*t``, ``t^p``}.  ``GF(N)`` also accepts a prime power N
    written in full (e.g. ``GF(4)[x^2]``).
    """
    text = spec.replace(" ", "")
    if text == "QQ":
        return _RationalContext()

    m = re.fullmatch(r"(QQ|GF\(\d+\))\(t\)\[t->(.+)\]", text)
    if m:
        base, expr = m.group(1), m.group(2)
        if base == "QQ":
            char = 0
        else:
            p = int(re.fullmatch(r"GF\((\d+)\)", base).group(1))
            if not _is_prime(p):
                raise InvalidModulus(f"{p} is not prime")
            char = p
        image = _parse_substitution_expr(expr, char)
        return _FunctionContext(base, image)

    m = re.fullmatch(r"(GF\(\d+(?:\^\d+)?\))(?:\[x\^(\d+)\])?", text)
    if m:
        p, k = _parse_gf_head(m.group(1))
        if m.group(2) is None:
            if k == 1:
                return _PrimeContext(p)
            return _FiniteContext(p, k, 0)
        power = int(m.group(2))
        # the bracket carries the literal power: sigma(x) = x^M with M = p^e
        e = 0
        mm = 1
        while mm < power:
            mm *= p
            e += 1
        if mm != power:
            raise InvalidSubstitution(
                f"x^{power} is not a Frobenius power in characteristic {p}"
            )
        if k == 1:
            return _PrimeContext(p)
        return _FiniteContext(p, k, e)

    raise ParseError(f"unrecognized field spec {spec!r}")

"""Internal univariate polynomial kernels.

These back the concrete field contexts: residue arithmetic for finite
extension fields and numerator/denominator arithmetic for rational function
fields.  Two raw representations are used:

* ``TuplePoly`` -- dense tuples of scalar payloads (low degree first, no
  trailing zeros), parameterised by a small scalar-op table.  Works over any
  exact base field.
* ``Gf2Poly`` -- polynomials over GF(2) packed into Python ints, one bit per
  coefficient.  The twist t -> t^2 doubles degrees at every application, so
  GF(2)[t] is the one base where sizes actually grow; bit packing keeps the
  Euclidean loops cheap.

Nothing here is part of the public API.
"""

from __future__ import annotations

from fractions import Fraction


class ScalarOps:
    """Operation table for raw scalar payloads of a base field."""

    __slots__ = ("zero", "one", "add", "sub", "neg", "mul", "inv", "is_zero", "eq")

    def __init__(self, zero, one, add, sub, neg, mul, inv, is_zero, eq):
        self.zero = zero
        self.one = one
        self.add = add
        self.sub = sub
        self.neg = neg
        self.mul = mul
        self.inv = inv
        self.is_zero = is_zero
        self.eq = eq


def prime_scalar_ops(p: int) -> ScalarOps:
    return ScalarOps(
        zero=0,
        one=1 % p,
        add=lambda a, b: (a + b) % p,
        sub=lambda a, b: (a - b) % p,
        neg=lambda a: (-a) % p,
        mul=lambda a, b: (a * b) % p,
        inv=lambda a: pow(a, -1, p),
        is_zero=lambda a: a == 0,
        eq=lambda a, b: a == b,
    )


def rational_scalar_ops() -> ScalarOps:
    return ScalarOps(
        zero=Fraction(0),
        one=Fraction(1),
        add=lambda a, b: a + b,
        sub=lambda a, b: a - b,
        neg=lambda a: -a,
        mul=lambda a, b: a * b,
        inv=lambda a: 1 / a,
        is_zero=lambda a: a == 0,
        eq=lambda a, b: a == b,
    )


class TuplePoly:
    """Dense polynomial arithmetic on normalized coefficient tuples."""

    def __init__(self, scalars: ScalarOps):
        self.s = scalars
        self.zero = ()
        self.one = (scalars.one,)
        self.gen = (scalars.zero, scalars.one)

    def normalize(self, coeffs) -> tuple:
        n = len(coeffs)
        while n and self.s.is_zero(coeffs[n - 1]):
            n -= 1
        return tuple(coeffs[:n])

    def from_coeffs(self, coeffs) -> tuple:
        return self.normalize(list(coeffs))

    def coeffs(self, a) -> tuple:
        return a

    def coeff(self, a, i):
        return a[i] if i < len(a) else self.s.zero

    def deg(self, a) -> int:
        return len(a) - 1

    def is_zero(self, a) -> bool:
        return not a

    def eq(self, a, b) -> bool:
        return a == b

    def add(self, a, b) -> tuple:
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        add = self.s.add
        for i, c in enumerate(b):
            out[i] = add(out[i], c)
        return self.normalize(out)

    def neg(self, a) -> tuple:
        return tuple(self.s.neg(c) for c in a)

    def sub(self, a, b) -> tuple:
        return self.add(a, self.neg(b))

    def scale(self, a, c) -> tuple:
        if self.s.is_zero(c):
            return ()
        return self.normalize([self.s.mul(x, c) for x in a])

    def mul(self, a, b) -> tuple:
        if not a or not b:
            return ()
        out = [self.s.zero] * (len(a) + len(b) - 1)
        add, mul = self.s.add, self.s.mul
        for i, x in enumerate(a):
            if self.s.is_zero(x):
                continue
            for j, y in enumerate(b):
                out[i + j] = add(out[i + j], mul(x, y))
        return self.normalize(out)

    def mul_x_power(self, a, k: int) -> tuple:
        if not a:
            return ()
        return (self.s.zero,) * k + a

    def divmod(self, a, b):
        if not b:
            raise ZeroDivisionError("polynomial division by zero")
        if len(a) < len(b):
            return (), a
        s = self.s
        binv = s.inv(b[-1])
        rem = list(a)
        q = [s.zero] * (len(a) - len(b) + 1)
        for shift in range(len(a) - len(b), -1, -1):
            lead = rem[shift + len(b) - 1]
            if s.is_zero(lead):
                continue
            c = s.mul(lead, binv)
            q[shift] = c
            for j, bc in enumerate(b):
                rem[shift + j] = s.sub(rem[shift + j], s.mul(c, bc))
        return self.normalize(q), self.normalize(rem)

    def gcd(self, a, b) -> tuple:
        while b:
            a, b = b, self.divmod(a, b)[1]
        return self.monic(a)

    def xgcd(self, a, b):
        """Return (g, u, v) with g = a*u + b*v and g monic (or zero)."""
        s = self.s
        r0, r1 = a, b
        u0, u1 = self.one, self.zero
        v0, v1 = self.zero, self.one
        while r1:
            q, r = self.divmod(r0, r1)
            r0, r1 = r1, r
            u0, u1 = u1, self.sub(u0, self.mul(q, u1))
            v0, v1 = v1, self.sub(v0, self.mul(q, v1))
        if r0:
            c = s.inv(r0[-1])
            return self.scale(r0, c), self.scale(u0, c), self.scale(v0, c)
        return r0, u0, v0

    def monic(self, a) -> tuple:
        if not a or self.s.eq(a[-1], self.s.one):
            return a
        return self.scale(a, self.s.inv(a[-1]))

    def pow(self, a, n: int) -> tuple:
        out, base = self.one, a
        while n:
            if n & 1:
                out = self.mul(out, base)
            base = self.mul(base, base)
            n >>= 1
        return out

    def powmod(self, a, n: int, m) -> tuple:
        out, base = self.divmod(self.one, m)[1], self.divmod(a, m)[1]
        while n:
            if n & 1:
                out = self.divmod(self.mul(out, base), m)[1]
            base = self.divmod(self.mul(base, base), m)[1]
            n >>= 1
        return out

    def compose(self, a, image) -> tuple:
        """Evaluate a at another polynomial (Horner)."""
        out = self.zero
        for c in reversed(a):
            out = self.add(self.mul(out, image), (c,))
        return out

    def spread(self, a, k: int) -> tuple:
        """Substitute t -> t^k."""
        if not a:
            return ()
        out = [self.s.zero] * ((len(a) - 1) * k + 1)
        for i, c in enumerate(a):
            out[i * k] = c
        return self.normalize(out)

    def dilate(self, a, q) -> tuple:
        """Substitute t -> q*t."""
        out, acc = [], self.s.one
        for c in a:
            out.append(self.s.mul(c, acc))
            acc = self.s.mul(acc, q)
        return self.normalize(out)


class Gf2Poly:
    """GF(2)[t] on bit-packed ints; degree of zero is -1."""

    zero = 0
    one = 1
    gen = 2

    # window size for the carry-less multiply of large operands
    _WINDOW = 4

    def from_coeffs(self, coeffs) -> int:
        out = 0
        for i, c in enumerate(coeffs):
            if c % 2:
                out |= 1 << i
        return out

    def coeffs(self, a: int) -> tuple:
        return tuple((a >> i) & 1 for i in range(a.bit_length()))

    def coeff(self, a: int, i: int) -> int:
        return (a >> i) & 1

    def deg(self, a: int) -> int:
        return a.bit_length() - 1

    def is_zero(self, a: int) -> bool:
        return a == 0

    def eq(self, a: int, b: int) -> bool:
        return a == b

    def add(self, a: int, b: int) -> int:
        return a ^ b

    sub = add

    def neg(self, a: int) -> int:
        return a

    def scale(self, a: int, c: int) -> int:
        return a if c & 1 else 0

    def mul(self, a: int, b: int) -> int:
        if a == 0 or b == 0:
            return 0
        if a.bit_length() > b.bit_length():
            a, b = b, a
        if a.bit_length() <= 64:
            out = 0
            while a:
                low = a & -a
                out ^= b << (low.bit_length() - 1)
                a ^= low
            return out
        # windowed carry-less multiply: tabulate the 16 small multiples of b
        w = self._WINDOW
        table = [0] * (1 << w)
        for i in range(w):
            shifted = b << i
            bit = 1 << i
            for mask in range(1 << w):
                if mask & bit:
                    table[mask] ^= shifted
        out = 0
        shift = 0
        mask = (1 << w) - 1
        while a:
            chunk = a & mask
            if chunk:
                out ^= table[chunk] << shift
            a >>= w
            shift += w
        return out

    def mul_x_power(self, a: int, k: int) -> int:
        return a << k

    def divmod(self, a: int, b: int):
        if b == 0:
            raise ZeroDivisionError("polynomial division by zero")
        db = b.bit_length() - 1
        q = 0
        while a.bit_length() - 1 >= db and a:
            shift = a.bit_length() - 1 - db
            q |= 1 << shift
            a ^= b << shift
        return q, a

    def gcd(self, a: int, b: int) -> int:
        while b:
            a, b = b, self.divmod(a, b)[1]
        return a

    def monic(self, a: int) -> int:
        return a

    def pow(self, a: int, n: int) -> int:
        out, base = 1, a
        while n:
            if n & 1:
                out = self.mul(out, base)
            base = self.mul(base, base)
            n >>= 1
        return out

    def compose(self, a: int, image: int) -> int:
        out = 0
        for i in range(a.bit_length() - 1, -1, -1):
            out = self.mul(out, image) ^ ((a >> i) & 1)
        return out

    def spread(self, a: int, k: int) -> int:
        if k == 1 or a == 0:
            return a
        out = 0
        while a:
            low = a & -a
            out |= 1 << ((low.bit_length() - 1) * k)
            a ^= low
        return out

    def dilate(self, a: int, q: int) -> int:
        return a if q & 1 else (a & 1)

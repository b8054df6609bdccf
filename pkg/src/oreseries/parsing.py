"""Text syntax for field elements, twisted polynomials, fractions and series.

Grammar (printers round-trip through these parsers bit-exactly)::

    expr     := term (('+'|'-') term)*
    term     := factor (('*'|'/') factor)*
    factor   := '-' factor | atom ('^' exponent)?
    atom     := INTEGER | NAME | '(' expr ')'
    exponent := INTEGER | '-' INTEGER

``NAME`` is ``T`` (the twisted variable, where permitted) or the coefficient
field's generator symbol (``a`` for extension fields, ``t`` for function
fields).  Multiplication is evaluated left to right, which matters: the ring
is not commutative.  ``^-1`` and ``/`` move the computation into the fraction
field, so ``(1 + a*T)^-1*(1)`` denotes a left fraction.

Series literals are written ``[c0, c1, ..., c_{N-1}] @ N`` (the ``@ N`` part
may be omitted, in which case the precision is the number of listed
coefficients).
"""

from __future__ import annotations

import re

from .errors import ParseError
from .fields import FieldCtx, FieldElement
from .ore_poly import OreFraction, OrePoly, frac_inv, frac_mul

__all__ = [
    "parse_element", "parse_poly", "parse_fraction", "parse_series_literal",
    "format_element", "format_poly", "format_fraction", "format_series",
]

_TOKEN_RX = re.compile(
    r"\s*(?:(?P<int>\d+)|(?P<name>[A-Za-z_][A-Za-z_0-9]*)|(?P<op>[-+*/^()]))"
)


def _tokenize(text: str):
    pos = 0
    out = []
    while pos < len(text):
        m = _TOKEN_RX.match(text, pos)
        if not m or m.end() == pos:
            tail = text[pos:].strip()
            if not tail:
                break
            raise ParseError(f"unexpected character at {tail[:10]!r}")
        if m.group("int") is not None:
            out.append(("int", int(m.group("int"))))
        elif m.group("name") is not None:
            out.append(("name", m.group("name")))
        else:
            out.append(("op", m.group("op")))
        pos = m.end()
    return out


class _Parser:
    """Recursive-descent evaluator producing OreFraction values."""

    def __init__(self, ctx: FieldCtx, tokens, allow_T: bool):
        self.ctx = ctx
        self.tokens = tokens
        self.allow_T = allow_T
        self.pos = 0

    def peek(self):
        return self.tokens[self.pos] if self.pos < len(self.tokens) else (None, None)

    def take(self):
        tok = self.peek()
        self.pos += 1
        return tok

    def expect_op(self, op: str):
        kind, val = self.take()
        if kind != "op" or val != op:
            raise ParseError(f"expected {op!r}, got {val!r}")

    def parse(self) -> OreFraction:
        value = self.expr()
        if self.pos != len(self.tokens):
            raise ParseError(f"trailing input after position {self.pos}")
        return value

    def expr(self) -> OreFraction:
        value = self.term()
        while True:
            kind, val = self.peek()
            if kind == "op" and val in "+-":
                self.pos += 1
                rhs = self.term()
                value = value + rhs if val == "+" else value - rhs
            else:
                return value

    def term(self) -> OreFraction:
        value = self.factor()
        while True:
            kind, val = self.peek()
            if kind == "op" and val in "*/":
                self.pos += 1
                rhs = self.factor()
                value = frac_mul(value, rhs) if val == "*" else frac_mul(value, frac_inv(rhs))
            else:
                return value

    def factor(self) -> OreFraction:
        kind, val = self.peek()
        if kind == "op" and val == "-":
            self.pos += 1
            return -self.factor()
        value = self.atom()
        kind, val = self.peek()
        if kind == "op" and val == "^":
            self.pos += 1
            exp = self.exponent()
            if exp < 0:
                value = frac_inv(value)
                exp = -exp
            out = OreFraction.one(self.ctx)
            for _ in range(exp):
                out = frac_mul(out, value)
            return out
        return value

    def exponent(self) -> int:
        kind, val = self.take()
        neg = False
        if kind == "op" and val == "-":
            neg = True
            kind, val = self.take()
        if kind != "int":
            raise ParseError("exponent must be an integer literal")
        return -val if neg else val

    def atom(self) -> OreFraction:
        kind, val = self.take()
        if kind == "int":
            return OreFraction.from_element(self.ctx, val)
        if kind == "name":
            if val == "T":
                if not self.allow_T:
                    raise ParseError("the twisted variable T is not allowed here")
                return OreFraction.from_poly(OrePoly.T(self.ctx))
            if val == self.ctx.generator_symbol:
                return OreFraction.from_element(self.ctx, self.ctx.generator)
            raise ParseError(f"unknown symbol {val!r} over {self.ctx.spec}")
        if kind == "op" and val == "(":
            value = self.expr()
            self.expect_op(")")
            return value
        raise ParseError(f"unexpected token {val!r}")


def parse_fraction(ctx: FieldCtx, text: str) -> OreFraction:
    """Parse any expression in the fraction field K(T;sigma)."""
    return _Parser(ctx, _tokenize(text), allow_T=True).parse()


def parse_poly(ctx: FieldCtx, text: str) -> OrePoly:
    value = parse_fraction(ctx, text)
    if not value.is_polynomial():
        raise ParseError(f"{text!r} is not a twisted polynomial")
    return value.as_poly()


def parse_element(ctx: FieldCtx, text: str) -> FieldElement:
    value = _Parser(ctx, _tokenize(text), allow_T=False).parse()
    if not value.is_polynomial() or value.numer.degree > 0:
        raise ParseError(f"{text!r} is not a coefficient-field element")
    return value.numer.constant_term()


def parse_series_literal(ctx: FieldCtx, text: str):
    """Parse ``[c0, ..., c_{N-1}] @ N`` into (coefficients, precision)."""
    m = re.fullmatch(r"\s*\[(.*)\]\s*(?:@\s*(\d+)\s*)?", text, re.DOTALL)
    if not m:
        raise ParseError(f"bad series literal {text!r}")
    body = m.group(1).strip()
    if not body:
        raise ParseError("a series needs at least one known coefficient")
    coeffs = [parse_element(ctx, part) for part in body.split(",")]
    precision = int(m.group(2)) if m.group(2) else len(coeffs)
    if precision != len(coeffs):
        raise ParseError(
            f"literal lists {len(coeffs)} coefficients but declares precision {precision}"
        )
    return coeffs, precision


# ---------------------------------------------------------------------------
# printers
# ---------------------------------------------------------------------------


def format_element(x: FieldElement) -> str:
    return x.ctx.format(x)


def _coeff_text(c: FieldElement) -> tuple[str, bool]:
    """Printable coefficient plus a flag for a leading minus that was absorbed."""
    txt = format_element(c)
    if " " in txt or "/" in txt or "(" in txt:
        return f"({txt})", False
    if txt.startswith("-"):
        return txt[1:], True
    return txt, False


def format_poly(p: OrePoly) -> str:
    if p.is_zero():
        return "0"
    terms = []
    for i, c in enumerate(p.coeffs):
        if not c:
            continue
        body, neg = _coeff_text(c)
        if i > 0:
            var = "T" if i == 1 else f"T^{i}"
            body = var if body == "1" else f"{body}*{var}"
        if not terms:
            terms.append(("-" if neg else "") + body)
        else:
            terms.append(("- " if neg else "+ ") + body)
    return " ".join(terms)


def format_fraction(x: OreFraction) -> str:
    return f"({format_poly(x.denom)})^-1*({format_poly(x.numer)})"


def format_series(f) -> str:
    body = ", ".join(format_element(c) for c in f.coeffs)
    return f"[{body}] @ {f.precision}"

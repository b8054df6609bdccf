import random

import pytest

from oreseries.errors import ParseError
from oreseries.parsing import (
    format_element,
    format_fraction,
    format_poly,
    format_series,
    parse_element,
    parse_fraction,
    parse_poly,
    parse_series_literal,
)
from oreseries.tseries import TwistedSeries

from conftest import F2T_POW, F4, F5T, QQ, QQT_DIL, rand_fraction, rand_poly, rand_series

ROUND_TRIP_CONTEXTS = (QQ, F4, F5T, QQT_DIL, F2T_POW)


class TestElements:
    def test_rationals(self):
        assert parse_element(QQ, "3/4") == QQ.el(3) / QQ.el(4)
        assert parse_element(QQ, "-2") == QQ.el(-2)

    def test_extension_field(self):
        a = F4.generator
        assert parse_element(F4, "a^2 + a") == a * a + a
        assert parse_element(F4, "(a + 1)^2") == (a + 1) * (a + 1)

    def test_function_field(self):
        t = F5T.generator
        assert parse_element(F5T, "(t + 1)/(t + 2)") == (t + 1) / (t + 2)
        assert parse_element(F5T, "3*t^2 + 1") == 3 * t * t + 1

    def test_rejects_T(self):
        with pytest.raises(ParseError):
            parse_element(F4, "1 + T")

    def test_rejects_unknown_symbol(self):
        with pytest.raises(ParseError):
            parse_element(QQ, "x + 1")

    @pytest.mark.parametrize("ctx", ROUND_TRIP_CONTEXTS, ids=lambda c: c.spec)
    def test_round_trip(self, ctx, rng):
        for _ in range(50):
            x = ctx.random_element(rng)
            assert parse_element(ctx, format_element(x)) == x


class TestPolynomials:
    def test_example_poly(self):
        p = parse_poly(F4, "a*T^3 + a*T + 1")
        assert p.degree == 3
        assert p.coeff(0) == F4.one
        assert p.coeff(1) == F4.generator

    def test_noncommutative_order(self):
        # T*a = sigma(a)*T != a*T
        assert parse_poly(F4, "T*a") == parse_poly(F4, "(a+1)*T")
        assert parse_poly(F4, "T*a") != parse_poly(F4, "a*T")

    def test_not_a_polynomial(self):
        with pytest.raises(ParseError):
            parse_poly(F4, "(1 + a*T)^-1")

    @pytest.mark.parametrize("ctx", ROUND_TRIP_CONTEXTS, ids=lambda c: c.spec)
    def test_round_trip(self, ctx, rng):
        for _ in range(40):
            p = rand_poly(ctx, rng, 4)
            assert parse_poly(ctx, format_poly(p)) == p


class TestFractions:
    def test_left_fraction_form(self):
        x = parse_fraction(F4, "(1 + a*T)^-1*(1)")
        assert x.denom.is_monic()

    @pytest.mark.parametrize("ctx", (QQ, F4, F5T), ids=lambda c: c.spec)
    def test_round_trip(self, ctx, rng):
        for _ in range(25):
            x = rand_fraction(ctx, rng, 3)
            assert parse_fraction(ctx, format_fraction(x)) == x

    def test_round_trip_unreduced_context(self, rng):
        for _ in range(10):
            x = rand_fraction(F2T_POW, rng, 2, simple=True)
            assert parse_fraction(F2T_POW, format_fraction(x)) == x


class TestSeriesLiterals:
    def test_basic(self):
        coeffs, prec = parse_series_literal(F4, "[1, a, 1, a] @ 4")
        assert prec == 4
        assert coeffs[1] == F4.generator

    def test_precision_defaults_to_length(self):
        coeffs, prec = parse_series_literal(QQ, "[1, 1, 1]")
        assert prec == 3

    def test_mismatched_precision_rejected(self):
        with pytest.raises(ParseError):
            parse_series_literal(QQ, "[1, 1] @ 5")

    def test_empty_rejected(self):
        with pytest.raises(ParseError):
            parse_series_literal(QQ, "[]")

    @pytest.mark.parametrize("ctx", ROUND_TRIP_CONTEXTS, ids=lambda c: c.spec)
    def test_round_trip(self, ctx, rng):
        for _ in range(20):
            f = rand_series(ctx, rng, rng.randint(1, 6))
            coeffs, prec = parse_series_literal(ctx, format_series(f))
            assert TwistedSeries(ctx, coeffs) == f and prec == f.precision

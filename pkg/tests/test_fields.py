import random

import pytest

from oreseries.errors import (
    InvalidModulus,
    InvalidSubstitution,
    NegativePowerOfNonInvertibleEndo,
    ParseError,
)
from oreseries.fields import apply_endo, make_context

from conftest import F2T_POW, F4, F5, F5T, F9, QQ, QQT_DIL

ALL_CONTEXTS = (QQ, F4, F5, F9, F5T, QQT_DIL, F2T_POW)


class TestMakeContext:
    def test_frobenius_extension(self):
        assert F4.field_kind == "finite_field"
        assert F4.sigma_kind == "frobenius"
        assert F4.sigma_invertible

    def test_rationals(self):
        assert QQ.field_kind == "rationals"
        assert QQ.sigma_kind == "identity"

    def test_shift_field(self):
        assert F5T.field_kind == "rational_function_field"
        assert F5T.sigma_invertible

    def test_power_substitution_not_invertible(self):
        assert not F2T_POW.sigma_invertible

    def test_spec_round_trip(self):
        for ctx in ALL_CONTEXTS:
            assert make_context(ctx.spec) == ctx

    def test_parse_errors(self):
        with pytest.raises(ParseError):
            make_context("ZZ")
        with pytest.raises(InvalidModulus):
            make_context("GF(6)")
        with pytest.raises(InvalidModulus):
            make_context("GF(10)(t)[t->t+1]")
        with pytest.raises(InvalidSubstitution):
            make_context("GF(5)(t)[t->t^3]")
        with pytest.raises(InvalidSubstitution):
            make_context("QQ(t)[t->t^2]")
        with pytest.raises(InvalidSubstitution):
            make_context("QQ(t)[t->0*t]")
        with pytest.raises(InvalidSubstitution):
            make_context("GF(4)[x^3]")


class TestApplyEndo:
    def test_frobenius_on_generator(self):
        a = F4.generator
        assert apply_endo(F4, a, 1) == a * a  # alpha^2 = alpha + 1
        assert apply_endo(F4, a, 1) == a + 1

    def test_zero_power_is_identity(self):
        for ctx in ALL_CONTEXTS:
            x = ctx.random_element(random.Random(3))
            assert apply_endo(ctx, x, 0) == x

    def test_inverse_on_f4(self):
        # sigma has order 2 on GF(4), so sigma^-1 = sigma
        a = F4.generator
        assert apply_endo(F4, a, -1) == a + 1

    def test_negative_power_rejected_without_inverse(self):
        t = F2T_POW.generator
        with pytest.raises(NegativePowerOfNonInvertibleEndo):
            apply_endo(F2T_POW, t, -1)

    def test_shift_powers(self):
        t = F5T.generator
        assert t.sigma(3) == t + 3
        assert t.sigma(-1).sigma(1) == t

    def test_dilation_powers(self):
        t = QQT_DIL.generator
        assert t.sigma(2) == t * 4
        assert t.sigma(-1) * 2 == t

    def test_power_substitution(self):
        t = F2T_POW.generator
        assert t.sigma(3) == t ** 8


class TestHomomorphism:
    """sigma is a ring homomorphism: checked on 1000 random pairs per context."""

    @pytest.mark.parametrize("ctx", ALL_CONTEXTS, ids=lambda c: c.spec)
    def test_additive_and_multiplicative(self, ctx):
        rng = random.Random(hash(ctx.spec) & 0xFFFF)
        for _ in range(1000):
            x = ctx.random_element(rng)
            y = ctx.random_element(rng)
            assert (x + y).sigma() == x.sigma() + y.sigma()
            assert (x * y).sigma() == x.sigma() * y.sigma()
        assert ctx.one.sigma() == ctx.one

    @pytest.mark.parametrize("ctx", ALL_CONTEXTS, ids=lambda c: c.spec)
    def test_injective(self, ctx):
        rng = random.Random(99)
        for _ in range(100):
            x = ctx.random_element(rng)
            if x.sigma().is_zero():
                assert x.is_zero()

    @pytest.mark.parametrize(
        "ctx", [c for c in ALL_CONTEXTS if c.sigma_invertible], ids=lambda c: c.spec
    )
    def test_inverse_round_trip(self, ctx):
        rng = random.Random(7)
        for _ in range(200):
            x = ctx.random_element(rng)
            assert x.sigma(1).sigma(-1) == x
            assert x.sigma(-1).sigma(1) == x


class TestFrobeniusOrder:
    @pytest.mark.parametrize("spec,k", [("GF(4)[x^2]", 2), ("GF(9)[x^3]", 2), ("GF(8)[x^2]", 3)])
    def test_order_divides_extension_degree(self, spec, k):
        ctx = make_context(spec)
        rng = random.Random(11)
        for _ in range(50):
            x = ctx.random_element(rng)
            assert apply_endo(ctx, x, k) == x


class TestFieldAxioms:
    @pytest.mark.parametrize("ctx", ALL_CONTEXTS, ids=lambda c: c.spec)
    def test_axioms_on_random_triples(self, ctx):
        rng = random.Random(42)
        for _ in range(200):
            x = ctx.random_element(rng)
            y = ctx.random_element(rng)
            z = ctx.random_element(rng)
            assert (x + y) + z == x + (y + z)
            assert (x * y) * z == x * (y * z)
            assert x * (y + z) == x * y + x * z
            assert x + ctx.zero == x
            assert x * ctx.one == x
            if y:
                assert y * y.inverse() == ctx.one

    def test_gf9_modulus_is_conway(self):
        # x^2 + 2x + 2 over GF(3)
        from oreseries.fields import _extension_modulus

        assert _extension_modulus(3, 2) == (2, 2, 1)

    def test_fallback_modulus_is_irreducible(self):
        ctx = make_context("GF(49)[x^7]")
        a = ctx.generator
        # the generator satisfies the modulus, so its Frobenius orbit closes
        assert apply_endo(ctx, a, 2) == a

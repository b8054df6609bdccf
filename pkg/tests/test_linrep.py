import pytest

from oreseries import _linalg
from oreseries.errors import (
    NonInvertibleSeries,
    NotSimilar,
    RequiresAutomorphism,
)
from oreseries.linrep import (
    LinRep,
    companion_rep,
    minimize,
    rep_coeff,
    rep_expand,
    rep_hadamard,
    rep_inverse,
    rep_product,
    rep_scale_left,
    rep_scale_right,
    rep_sum,
    row_expansion,
    same_series,
    similarity_witness,
    to_fraction,
)
from oreseries.ore_poly import OreFraction, frac_inv, frac_mul
from oreseries.parsing import parse_fraction
from oreseries.tseries import hadamard, series_eq, series_inv, series_mul, shift

from conftest import F2T_POW, F4, F5T, QQ, rand_invertible, rand_rep

A = F4.generator
R1 = LinRep(F4, [1], [[A]], [1])  # the (1, a, 1, a, ...) series
RT = LinRep(F4, [1, 0], [[0, 1], [0, 0]], [0, 1])  # the polynomial T


def conjugate(rep, B):
    ctx = rep.ctx
    Binv = _linalg.invert(ctx, B)
    X2 = _linalg.vec_mat(ctx, list(rep.X), B)
    A2 = _linalg.mat_mul(ctx, Binv, _linalg.mat_mul(ctx, [list(r) for r in rep.A], _linalg.sigma_matrix(B)))
    Y2 = _linalg.mat_vec(ctx, Binv, list(rep.Y))
    return LinRep(ctx, X2, A2, Y2)


class TestRepCoeff:
    def test_one_dim(self):
        assert rep_coeff(R1, 2) == F4.one  # a * sigma(a) = a^3 = 1

    def test_n0_is_XY(self, rng):
        for _ in range(5):
            r = rand_rep(F4, rng, 3)
            assert rep_coeff(r, 0) == _linalg.dot(F4, r.X, r.Y)

    def test_nilpotent_polynomial(self):
        assert rep_coeff(RT, 1) == F4.one
        assert rep_coeff(RT, 2).is_zero()
        assert rep_coeff(RT, 5).is_zero()


class TestRepExpand:
    def test_golden(self):
        assert rep_expand(R1, 4).coeffs == (F4.one, A, F4.one, A)

    def test_zero_column(self):
        r = LinRep(F4, [1, 0], [[0, 1], [0, 0]], [0, 0])
        assert rep_expand(r, 5).is_zero_prefix()

    def test_block_sum(self, rng):
        r1 = rand_rep(F4, rng, 2)
        r2 = rand_rep(F4, rng, 3)
        assert rep_expand(rep_sum(r1, r2), 8) == rep_expand(r1, 8) + rep_expand(r2, 8)

    def test_stability_of_functional_row(self, rng):
        # coefficient rows w_n of X (I - AT)^-1 satisfy w_{n+1} = w_n sigma^n(A),
        # which is the entrywise form of the stability identity s(F) = F A
        for _ in range(5):
            r = rand_rep(F4, rng, 3)
            rows = row_expansion(r, 6)
            a_pow = [list(row) for row in r.A]
            for k in range(5):
                assert rows[k + 1] == _linalg.vec_mat(F4, rows[k], a_pow)
                a_pow = [[x.sigma() for x in row] for row in a_pow]


class TestScaling:
    def test_left(self, rng):
        r = rand_rep(F4, rng, 2)
        assert rep_expand(rep_scale_left(A, r), 6) == rep_expand(r, 6).scale_left(A)

    def test_right(self, rng):
        r = rand_rep(F4, rng, 2)
        assert rep_expand(rep_scale_right(r, A), 6) == rep_expand(r, 6).scale_right(A)

    def test_sum_with_zero(self, rng):
        r = rand_rep(F4, rng, 2)
        assert same_series(rep_sum(r, LinRep.zero(F4)), r)


class TestHadamardRep:
    def test_unit(self, rng):
        geo = LinRep(F4, [1], [[1]], [1])  # all-ones series
        r = rand_rep(F4, rng, 3)
        assert same_series(rep_hadamard(r, geo), r)

    def test_one_dim_square(self):
        rh = rep_hadamard(R1, R1)
        assert rh.dim == 1 and rh.A[0][0] == A * A
        assert rep_expand(rh, 4).coeffs == (F4.one, A + 1, F4.one, A + 1)

    def test_zero(self, rng):
        r = rand_rep(F4, rng, 2)
        assert rep_hadamard(r, LinRep.zero(F4)).dim == 0

    @pytest.mark.parametrize("ctx", (QQ, F4, F5T), ids=lambda c: c.spec)
    def test_matches_series_hadamard(self, ctx, rng):
        for _ in range(6):
            r1 = rand_rep(ctx, rng, rng.randint(1, 4))
            r2 = rand_rep(ctx, rng, rng.randint(1, 4))
            lhs = rep_expand(rep_hadamard(r1, r2), 12)
            rhs = hadamard(rep_expand(r1, 12), rep_expand(r2, 12))
            assert lhs == rhs


class TestToFraction:
    def test_one_dim(self):
        assert to_fraction(R1) == parse_fraction(F4, "(1 + a*T)^-1*(1)")

    def test_nilpotent(self):
        assert to_fraction(RT) == parse_fraction(F4, "(1)^-1*(T)")

    def test_zero(self):
        assert to_fraction(LinRep.zero(F4)) == OreFraction.zero(F4)

    @pytest.mark.parametrize("ctx", (QQ, F4, F5T), ids=lambda c: c.spec)
    def test_random_reps(self, ctx, rng):
        for dim in (1, 2, 3):
            r = rand_rep(ctx, rng, dim)
            x = to_fraction(r)  # internally certified against the expansion
            assert x.denom.degree <= dim

    def test_endomorphism_context(self, rng):
        # only nonnegative sigma powers occur, so t -> t^2 is fine
        r = rand_rep(F2T_POW, rng, 2)
        to_fraction(r)


class TestProductInverse:
    def test_product_matches_series(self, rng):
        for _ in range(4):
            r1 = rand_rep(F4, rng, 2)
            r2 = rand_rep(F4, rng, 2)
            rp = rep_product(r1, r2)
            assert series_eq(rep_expand(rp, 10),
                             series_mul(rep_expand(r1, 10), rep_expand(r2, 10)))[0]

    def test_product_with_unit(self, rng):
        unit = LinRep.of_constant(F4, 1)
        r = rand_rep(F4, rng, 2)
        assert same_series(rep_product(r, unit), r)

    def test_one_dim_product(self, rng):
        r1 = LinRep(F5T, [1], [[F5T.generator]], [1])
        r2 = LinRep(F5T, [1], [[F5T.generator + 1]], [1])
        rp = rep_product(r1, r2)
        assert series_eq(rep_expand(rp, 8),
                         series_mul(rep_expand(r1, 8), rep_expand(r2, 8)))[0]

    def test_inverse(self):
        ri = rep_inverse(R1)
        assert series_eq(rep_expand(ri, 8), series_inv(rep_expand(R1, 8)))[0]
        # the inverse of (1+aT)^-1 is the polynomial 1 + aT
        assert to_fraction(ri) == parse_fraction(F4, "(1)^-1*(1 + a*T)")

    def test_inverse_requires_unit(self):
        with pytest.raises(NonInvertibleSeries):
            rep_inverse(RT)

    def test_fraction_certificates(self, rng):
        for _ in range(3):
            r1 = rand_rep(F4, rng, 2)
            r2 = rand_rep(F4, rng, 2)
            assert to_fraction(rep_product(r1, r2)) == frac_mul(to_fraction(r1), to_fraction(r2))
            if rep_coeff(r1, 0):
                assert to_fraction(rep_inverse(r1)) == frac_inv(to_fraction(r1))

    def test_requires_automorphism(self, rng):
        r = rand_rep(F2T_POW, rng, 2)
        with pytest.raises(RequiresAutomorphism):
            rep_product(r, r)


class TestMinimize:
    def test_doubled_rep_over_qq(self):
        r = LinRep(QQ, [1], [[2]], [1])
        assert minimize(rep_sum(r, r)).dim == 1

    def test_idempotent(self, rng):
        for _ in range(5):
            red = minimize(rand_rep(F4, rng, 3))
            again = minimize(red)
            assert again.dim == red.dim

    def test_nilpotent_rank_two(self):
        assert minimize(RT).dim == 2

    def test_never_grows(self, rng):
        for ctx in (QQ, F4, F5T):
            for _ in range(5):
                r = rand_rep(ctx, rng, 3)
                red = minimize(r)
                assert red.dim <= r.dim
                assert same_series(red, r)

    def test_requires_automorphism(self, rng):
        with pytest.raises(RequiresAutomorphism):
            minimize(rand_rep(F2T_POW, rng, 2))


class TestSimilarity:
    def test_identity_witness(self, rng):
        red = minimize(rand_rep(F4, rng, 3))
        w = similarity_witness(red, red)
        assert w.B == tuple(tuple(row) for row in _linalg.identity(F4, red.dim))

    @pytest.mark.parametrize("ctx", (QQ, F4, F5T), ids=lambda c: c.spec)
    def test_conjugate_recovery(self, ctx, rng):
        for _ in range(4):
            red = minimize(rand_rep(ctx, rng, 3))
            if red.dim == 0:
                continue
            B0 = rand_invertible(ctx, rng, red.dim)
            other = conjugate(red, B0)
            w = similarity_witness(red, other)
            B = [list(row) for row in w.B]
            assert _linalg.invert(ctx, B) is not None

    def test_different_series_rejected(self, rng):
        r1 = minimize(LinRep(F4, [1], [[A]], [1]))
        r2 = minimize(LinRep(F4, [1], [[1]], [1]))
        with pytest.raises(NotSimilar):
            similarity_witness(r1, r2)

    def test_dimension_mismatch(self):
        with pytest.raises(NotSimilar):
            similarity_witness(R1, minimize(RT))

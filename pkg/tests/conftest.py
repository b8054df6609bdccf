"""Shared contexts and randomized-fixture helpers."""

import random

import pytest

from oreseries.fields import make_context
from oreseries.ore_poly import OreFraction, OrePoly
from oreseries.tseries import TwistedSeries

QQ = make_context("QQ")
F4 = make_context("GF(4)[x^2]")
F5 = make_context("GF(5)")
F9 = make_context("GF(9)[x^3]")
F5T = make_context("GF(5)(t)[t->t+1]")
QQT_DIL = make_context("QQ(t)[t->2*t]")
F2T_POW = make_context("GF(2)(t)[t->t^2]")

# the automorphism trio used by the randomized acceptance suites
AUTO_TRIO = (QQ, F4, F5T)


@pytest.fixture
def rng():
    return random.Random(20250811)


def rand_el(ctx, rng, nonzero=False):
    while True:
        x = ctx.random_element(rng)
        if not nonzero or x:
            return x


def rand_poly(ctx, rng, max_deg, monic=False, nonzero=False):
    deg = rng.randint(0, max_deg)
    coeffs = [ctx.random_element(rng) for _ in range(deg + 1)]
    if monic:
        coeffs[-1] = ctx.one
    p = OrePoly(ctx, coeffs)
    if nonzero and p.is_zero():
        return rand_poly(ctx, rng, max_deg, monic=monic, nonzero=True)
    return p


def rand_series(ctx, rng, precision):
    return TwistedSeries(ctx, [ctx.random_element(rng) for _ in range(precision)])


def rand_fraction(ctx, rng, max_deg, simple=False):
    """Random P^-1 Q with P(0) = 1 and both degrees <= max_deg."""
    dp = rng.randint(0, max_deg)
    dq = rng.randint(0, max_deg)
    if simple:
        pc = [ctx.one] + [ctx.random_element(rng, num_degree=1, polynomial=True)
                          for _ in range(dp)]
        qc = [ctx.random_element(rng, num_degree=1, polynomial=True)
              for _ in range(dq + 1)]
    else:
        pc = [ctx.one] + [ctx.random_element(rng) for _ in range(dp)]
        qc = [ctx.random_element(rng) for _ in range(dq + 1)]
    return OreFraction(OrePoly(ctx, pc), OrePoly(ctx, qc))


def rand_invertible(ctx, rng, n):
    from oreseries import _linalg

    while True:
        m = [[ctx.random_element(rng) for _ in range(n)] for _ in range(n)]
        if _linalg.invert(ctx, m) is not None:
            return m


def rand_rep(ctx, rng, dim):
    from oreseries.linrep import LinRep

    X = [ctx.random_element(rng) for _ in range(dim)]
    A = [[ctx.random_element(rng) for _ in range(dim)] for _ in range(dim)]
    Y = [ctx.random_element(rng) for _ in range(dim)]
    return LinRep(ctx, X, A, Y)

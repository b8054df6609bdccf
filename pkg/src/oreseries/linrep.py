"""Linear representations (X, A, Y) of twisted power series.

A representation of dimension m produces the coefficient sequence

    a_n = X * A sigma(A) ... sigma^(n-1)(A) * sigma^n(Y),

equivalently f = X (I - AT)^-1 Y.  This module implements coefficient
evaluation, the closure constructions (sum, scalars, product, inverse,
Hadamard), exact conversion to a left fraction, minimization to a reduced
representation, and similarity witnesses between reduced representations.

Exactness discipline: every truncation-based search is followed by an exact
certificate.  Two representations of dimensions m and n describe the same
series as soon as their first m+n coefficients agree (their difference is
carried by an (m+n)-dimensional representation, and a series whose rank-many
leading coefficients vanish is zero), so coefficient-window checks with that
bound are proofs, not heuristics.
"""

from __future__ import annotations

from dataclasses import dataclass

from . import _linalg
from .errors import (
    CertificationFailed,
    ContextMismatch,
    GuessFailed,
    NoRecurrenceFound,
    NonInvertibleSeries,
    NotSimilar,
    RequiresAutomorphism,
)
from .fields import FieldCtx, FieldElement
from .ore_poly import OreFraction, OrePoly, frac_inv, frac_mul, poly_mul
from .tseries import TwistedSeries, series_inv, series_mul

__all__ = [
    "LinRep", "SimilarityWitness", "rep_coeff", "rep_expand", "rep_sum",
    "rep_scale_left", "rep_scale_right", "rep_product", "rep_inverse",
    "rep_hadamard", "to_fraction", "minimize", "similarity_witness",
    "same_series", "companion_rep", "row_expansion",
]


class LinRep:
    """A sigma-linear representation; X is 1 x m, A is m x m, Y is m x 1."""

    __slots__ = ("ctx", "X", "A", "Y")

    def __init__(self, ctx: FieldCtx, X, A, Y):
        X = tuple(ctx.el(x) for x in X)
        Y = tuple(ctx.el(y) for y in Y)
        A = tuple(tuple(ctx.el(a) for a in row) for row in A)
        m = len(X)
        if len(Y) != m or len(A) != m or any(len(row) != m for row in A):
            raise ValueError("inconsistent representation shapes")
        object.__setattr__(self, "ctx", ctx)
        object.__setattr__(self, "X", X)
        object.__setattr__(self, "A", A)
        object.__setattr__(self, "Y", Y)

    def __setattr__(self, *_):
        raise AttributeError("LinRep is immutable")

    @classmethod
    def zero(cls, ctx: FieldCtx) -> "LinRep":
        return cls(ctx, (), (), ())

    @classmethod
    def of_constant(cls, ctx: FieldCtx, c) -> "LinRep":
        return cls(ctx, (ctx.el(c),), ((ctx.zero,),), (ctx.one,))

    @property
    def dim(self) -> int:
        return len(self.X)

    def __eq__(self, other):
        if not isinstance(other, LinRep):
            return NotImplemented
        return (self.ctx, self.X, self.A, self.Y) == (other.ctx, other.X, other.A, other.Y)

    def __repr__(self):
        return f"LinRep(dim={self.dim}, X={list(self.X)}, A={[list(r) for r in self.A]}, Y={list(self.Y)})"


@dataclass(frozen=True)
class SimilarityWitness:
    """Invertible base change B with X2 = X1 B, A2 = B^-1 A1 sigma(B), Y2 = B^-1 Y1."""

    B: tuple


def _check_ctx(a, b):
    if a.ctx != b.ctx:
        raise ContextMismatch(f"{a.ctx.spec} vs {b.ctx.spec}")


def rep_coeff(r: LinRep, n: int) -> FieldElement:
    """Coefficient a_n, evaluated with one sigma pass of a running vector per step."""
    ctx = r.ctx
    if r.dim == 0:
        return ctx.zero
    u = list(r.Y)
    for _ in range(n):
        u = _linalg.mat_vec(ctx, r.A, [x.sigma() for x in u])
    return _linalg.dot(ctx, r.X, u)


def rep_expand(r: LinRep, n: int) -> TwistedSeries:
    """The first n coefficients as a series."""
    ctx = r.ctx
    if r.dim == 0:
        return TwistedSeries.zero(ctx, n)
    out = []
    u = list(r.Y)
    for k in range(n):
        if k:
            u = _linalg.mat_vec(ctx, r.A, [x.sigma() for x in u])
        out.append(_linalg.dot(ctx, r.X, u))
    return TwistedSeries(ctx, out)


def row_expansion(r: LinRep, n: int):
    """Coefficient rows of X (I - AT)^-1: entry [k][j] is coefficient k of F_j."""
    ctx = r.ctx
    rows = []
    w = list(r.X)
    a = [list(row) for row in r.A]
    for k in range(n):
        rows.append(list(w))
        if k + 1 < n:
            w = _linalg.vec_mat(ctx, w, a)
            a = [[x.sigma() for x in row] for row in a]
    return rows


def same_series(r1: LinRep, r2: LinRep) -> bool:
    """Exact equality of the represented series.

    Agreement of the first dim1+dim2 coefficients is sufficient: the
    difference admits a representation of that dimension.
    """
    _check_ctx(r1, r2)
    bound = max(r1.dim + r2.dim, 1)
    return rep_expand(r1, bound).coeffs == rep_expand(r2, bound).coeffs


# ---------------------------------------------------------------------------
# closure constructions
# ---------------------------------------------------------------------------


def rep_sum(r1: LinRep, r2: LinRep) -> LinRep:
    """Block-diagonal sum: represents f1 + f2 in dimension m1 + m2."""
    _check_ctx(r1, r2)
    ctx = r1.ctx
    m1, m2 = r1.dim, r2.dim
    z = ctx.zero
    A = [list(row) + [z] * m2 for row in r1.A]
    A += [[z] * m1 + list(row) for row in r2.A]
    return LinRep(ctx, r1.X + r2.X, A, r1.Y + r2.Y)


def rep_scale_left(c, r: LinRep) -> LinRep:
    """Represents c*f: scales X on the left."""
    c = r.ctx.el(c)
    return LinRep(r.ctx, tuple(c * x for x in r.X), r.A, r.Y)


def rep_scale_right(r: LinRep, c) -> LinRep:
    """Represents f*c: scales Y."""
    c = r.ctx.el(c)
    return LinRep(r.ctx, r.X, r.A, tuple(y * c for y in r.Y))


def rep_hadamard(r1: LinRep, r2: LinRep) -> LinRep:
    """Coefficient-wise product via tensor products of X, A, Y.

    sigma acts entrywise, so sigma(C (x) D) = sigma(C) (x) sigma(D) and the
    tensor construction expands to the Hadamard product of the expansions.
    """
    _check_ctx(r1, r2)
    ctx = r1.ctx
    if r1.dim == 0 or r2.dim == 0:
        return LinRep.zero(ctx)
    X = _linalg.kron(ctx, [list(r1.X)], [list(r2.X)])
    A = _linalg.kron(ctx, [list(row) for row in r1.A], [list(row) for row in r2.A])
    Ycol = _linalg.kron(ctx, [[y] for y in r1.Y], [[y] for y in r2.Y])
    return LinRep(ctx, X[0], A, [row[0] for row in Ycol])


# ---------------------------------------------------------------------------
# exact conversion to a fraction
# ---------------------------------------------------------------------------


def to_fraction(r: LinRep) -> OreFraction:
    """X (I - AT)^-1 Y as an exact left fraction.

    (I - AT)^-1 is built over leading principal blocks with the four border
    equations for N1, X1, f1, Y1; only nonnegative sigma powers occur, so
    this works for every endomorphism.  The result is certified against the
    coefficient expansion before being returned.
    """
    ctx = r.ctx
    m = r.dim
    if m == 0:
        return OreFraction.zero(ctx)
    one = OreFraction.one(ctx)

    def entry(i, j):
        # (AT)_{ij} = A[i][j] * T as a fraction
        return OreFraction.from_poly(
            OrePoly(ctx, (ctx.zero, r.A[i][j]))
        )

    # W = (I - leading k x k block of AT)^-1, grown one border at a time
    W: list[list[OreFraction]] = []
    for k in range(m):
        col = [entry(i, k) for i in range(k)]
        row = [entry(k, j) for j in range(k)]
        f = entry(k, k)
        if k == 0:
            f1 = frac_inv(one - f)
            W = [[f1]]
            continue
        WX = [_frac_dot(ctx, W[i], col) for i in range(k)]
        YW = [_frac_dot(ctx, row, [W[i][j] for i in range(k)]) for j in range(k)]
        ywx = _frac_dot(ctx, row, WX)
        f1 = frac_inv(one - f - ywx)
        X1 = [frac_mul(WX[i], f1) for i in range(k)]
        Y1 = [frac_mul(f1, YW[j]) for j in range(k)]
        newW = [
            [W[i][j] + frac_mul(X1[i], YW[j]) for j in range(k)] + [X1[i]]
            for i in range(k)
        ]
        newW.append(Y1 + [f1])
        W = newW

    # f = X W Y with constant scalars on the proper sides
    acc = OreFraction.zero(ctx)
    for i in range(m):
        xi = r.X[i]
        if not xi:
            continue
        row_acc = OreFraction.zero(ctx)
        for j in range(m):
            yj = r.Y[j]
            if not yj:
                continue
            row_acc = row_acc + frac_mul(W[i][j], OreFraction.from_element(ctx, yj))
        acc = acc + frac_mul(OreFraction.from_element(ctx, xi), row_acc)

    _certify_fraction(r, acc)
    return acc


def _frac_dot(ctx, row, col):
    """sum_j row[j] * col[j], multiplied in ring order."""
    acc = OreFraction.zero(ctx)
    for a, b in zip(row, col):
        acc = acc + frac_mul(a, b)
    return acc


def _rank_bound(x: OreFraction) -> int:
    dq = x.numer.degree
    dp = x.denom.degree
    dq = -1 if dq == float("-inf") else dq
    return max(dp, dq + 1)


def _certify_fraction(r: LinRep, x: OreFraction) -> None:
    from .tseries import expand_fraction

    bound = max(r.dim + _rank_bound(x), 1)
    if expand_fraction(x, bound).coeffs != rep_expand(r, bound).coeffs:
        raise CertificationFailed("fraction disagrees with representation")


# ---------------------------------------------------------------------------
# recurrence fitting (shared by minimization and reconstruction)
# ---------------------------------------------------------------------------


def least_syntactic_recurrence(ctx: FieldCtx, coeffs, max_order: int):
    """Least r <= max_order with a_{r+j} = sum_i a_{i+j} sigma^j(c_i) on the window.

    The semilinear conditions are linearized row by row through sigma^(-j),
    so an invertible endomorphism is required.  Returns (r, [c_0..c_{r-1}]).
    """
    if not ctx.sigma_invertible:
        raise RequiresAutomorphism("recurrence fitting needs an invertible endomorphism")
    coeffs = list(coeffs)
    n_avail = len(coeffs)
    # sig[j][i] = sigma^(-j)(a_{i+j})
    sig = [[x.sigma(-j) for x in coeffs[j:]] for j in range(n_avail)]
    for r in range(0, min(max_order, n_avail - 1) + 1):
        rows = []
        rhs = []
        for j in range(n_avail - r):
            rows.append(sig[j][:r])
            rhs.append(sig[j][r])
        if r == 0:
            if all(not v for v in rhs):
                return 0, []
            continue
        sol = _linalg.solve(ctx, rows, rhs)
        if sol is not None:
            return r, sol
    raise NoRecurrenceFound(
        f"no syntactic recurrence of order <= {max_order} at precision {n_avail}"
    )


def companion_rep(ctx: FieldCtx, rec_coeffs, seed) -> LinRep:
    """Representation on the shift basis: subdiagonal A with the recurrence
    coefficients in the last column, X = leading coefficients, Y = e_0."""
    r = len(rec_coeffs)
    if r == 0:
        return LinRep.zero(ctx)
    z, o = ctx.zero, ctx.one
    A = [[z] * r for _ in range(r)]
    for j in range(r - 1):
        A[j + 1][j] = o
    for i, c in enumerate(rec_coeffs):
        A[i][r - 1] = ctx.el(c)
    Y = [o] + [z] * (r - 1)
    return LinRep(ctx, list(seed[:r]), A, Y)


# ---------------------------------------------------------------------------
# product / inverse through series reconstruction
# ---------------------------------------------------------------------------


def rep_product(r1: LinRep, r2: LinRep, guard: int = 4) -> LinRep:
    """Representation of the product series.

    Expands both factors, multiplies the series, refits a recurrence, and
    certifies the rebuilt representation against the exact fraction product.
    """
    _check_ctx(r1, r2)
    ctx = r1.ctx
    if not ctx.sigma_invertible:
        raise RequiresAutomorphism("rep_product needs an invertible endomorphism")
    bound = r1.dim + r2.dim
    if bound == 0:
        return LinRep.zero(ctx)
    prec = 2 * bound + guard
    prod = series_mul(rep_expand(r1, prec), rep_expand(r2, prec))
    try:
        order, c = least_syntactic_recurrence(ctx, prod.coeffs, bound)
    except NoRecurrenceFound as exc:
        raise GuessFailed(str(exc)) from exc
    out = companion_rep(ctx, c, prod.coeffs[:order])
    target = frac_mul(to_fraction(r1), to_fraction(r2))
    if to_fraction(out) != target:
        raise GuessFailed("reconstructed product failed fraction certification")
    return out


def rep_inverse(r: LinRep, guard: int = 4) -> LinRep:
    """Representation of the inverse series; needs constant term X.Y != 0."""
    ctx = r.ctx
    if not ctx.sigma_invertible:
        raise RequiresAutomorphism("rep_inverse needs an invertible endomorphism")
    if not rep_coeff(r, 0):
        raise NonInvertibleSeries("represented series has zero constant term")
    bound = r.dim + 1
    prec = 2 * bound + guard
    inv = series_inv(rep_expand(r, prec))
    try:
        order, c = least_syntactic_recurrence(ctx, inv.coeffs, bound)
    except NoRecurrenceFound as exc:
        raise GuessFailed(str(exc)) from exc
    out = companion_rep(ctx, c, inv.coeffs[:order])
    if to_fraction(out) != frac_inv(to_fraction(r)):
        raise GuessFailed("reconstructed inverse failed fraction certification")
    return out


# ---------------------------------------------------------------------------
# minimization and similarity
# ---------------------------------------------------------------------------


def minimize(r: LinRep) -> LinRep:
    """A reduced (minimal-dimension) representation of the same series.

    Searches the least n with s^n(f) right-dependent on lower shifts over a
    2m+1 coefficient window; that window length makes the window fit exact,
    and the result is certified coefficient-exactly against the input.
    """
    ctx = r.ctx
    if not ctx.sigma_invertible:
        raise RequiresAutomorphism("minimize needs an invertible endomorphism")
    m = r.dim
    if m == 0:
        return r
    window = rep_expand(r, 2 * m + 1)
    order, c = least_syntactic_recurrence(ctx, window.coeffs, m)
    out = companion_rep(ctx, c, window.coeffs[:order])
    if not same_series(out, r):  # pragma: no cover - exactness guard
        raise CertificationFailed("minimized representation changed the series")
    return out


def similarity_witness(r1: LinRep, r2: LinRep) -> SimilarityWitness:
    """Invertible B with X2 = X1 B, A2 = B^-1 A1 sigma(B), Y2 = B^-1 Y1.

    Both inputs must be reduced representations of the same series (run
    minimize first); otherwise NotSimilar is raised.  The witness equations
    are verified exactly before returning.
    """
    _check_ctx(r1, r2)
    ctx = r1.ctx
    if not ctx.sigma_invertible:
        raise RequiresAutomorphism("similarity needs an invertible endomorphism")
    if r1.dim != r2.dim:
        raise NotSimilar(f"dimensions differ: {r1.dim} vs {r2.dim}")
    m = r1.dim
    if m == 0:
        return SimilarityWitness(B=())
    n = 2 * m + 1
    F1 = row_expansion(r1, n)
    F2 = row_expansion(r2, n)
    # row c of the linear system: sigma^(-c) applied to coefficient row c
    rows = [[F1[c][j].sigma(-c) for j in range(m)] for c in range(n)]
    B = []
    for k in range(m):
        rhs = [F2[c][k].sigma(-c) for c in range(n)]
        col = _linalg.solve(ctx, rows, rhs)
        if col is None:
            raise NotSimilar("no base change maps the shift bases onto each other")
        B.append(col)
    B = [[B[j][i] for j in range(m)] for i in range(m)]  # columns -> matrix
    Binv = _linalg.invert(ctx, B)
    if Binv is None:
        raise NotSimilar("candidate base change is singular")
    if list(r2.X) != _linalg.vec_mat(ctx, list(r1.X), B):
        raise NotSimilar("X equation fails")
    sigB = _linalg.sigma_matrix(B, 1)
    lhs = _linalg.mat_mul(ctx, Binv, _linalg.mat_mul(ctx, [list(row) for row in r1.A], sigB))
    if [list(row) for row in r2.A] != lhs:
        raise NotSimilar("A equation fails")
    if list(r2.Y) != _linalg.mat_vec(ctx, Binv, list(r1.Y)):
        raise NotSimilar("Y equation fails")
    return SimilarityWitness(B=tuple(tuple(row) for row in B))

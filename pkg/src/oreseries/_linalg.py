"""Exact dense linear algebra over a field context.

Matrices are lists of lists of :class:`FieldElement`; vectors are flat lists.
Everything is pure and allocation-happy -- matrix orders in this kernel stay
tiny (well under 20), exactness is what matters.
"""

from __future__ import annotations

from .fields import FieldCtx, FieldElement

__all__ = [
    "zeros", "identity", "mat_add", "mat_sub", "mat_mul", "mat_vec", "vec_mat",
    "dot", "transpose", "sigma_matrix", "kron", "rref", "solve", "nullspace",
    "invert", "det",
]


def zeros(ctx: FieldCtx, rows: int, cols: int):
    z = ctx.zero
    return [[z] * cols for _ in range(rows)]


def identity(ctx: FieldCtx, n: int):
    z, o = ctx.zero, ctx.one
    return [[o if i == j else z for j in range(n)] for i in range(n)]


def mat_add(a, b):
    return [[x + y for x, y in zip(ra, rb)] for ra, rb in zip(a, b)]


def mat_sub(a, b):
    return [[x - y for x, y in zip(ra, rb)] for ra, rb in zip(a, b)]


def mat_mul(ctx: FieldCtx, a, b):
    if not a or not b:
        return [[] for _ in a]
    n, k, m = len(a), len(b), len(b[0])
    out = zeros(ctx, n, m)
    for i in range(n):
        ai = a[i]
        oi = out[i]
        for t in range(k):
            c = ai[t]
            if not c:
                continue
            bt = b[t]
            for j in range(m):
                oi[j] = oi[j] + c * bt[j]
    return out


def mat_vec(ctx: FieldCtx, a, v):
    out = []
    for row in a:
        acc = ctx.zero
        for c, x in zip(row, v):
            acc = acc + c * x
        out.append(acc)
    return out


def vec_mat(ctx: FieldCtx, v, a):
    if not a:
        return []
    m = len(a[0])
    out = [ctx.zero] * m
    for x, row in zip(v, a):
        if not x:
            continue
        for j in range(m):
            out[j] = out[j] + x * row[j]
    return out


def dot(ctx: FieldCtx, u, v):
    acc = ctx.zero
    for x, y in zip(u, v):
        acc = acc + x * y
    return acc


def transpose(a):
    return [list(col) for col in zip(*a)] if a else []


def sigma_matrix(a, n: int = 1):
    return [[x.sigma(n) for x in row] for row in a]


def kron(ctx: FieldCtx, a, b):
    """Tensor (Kronecker) product of two matrices."""
    if not a or not b:
        return []
    ra, ca = len(a), len(a[0])
    rb, cb = len(b), len(b[0])
    out = zeros(ctx, ra * rb, ca * cb)
    for i in range(ra):
        for j in range(ca):
            c = a[i][j]
            if not c:
                continue
            for k in range(rb):
                for l in range(cb):
                    out[i * rb + k][j * cb + l] = c * b[k][l]
    return out


def rref(ctx: FieldCtx, m):
    """Reduced row echelon form; returns (rows, pivot column indices).

    Pivots prefer the lowest-complexity entry (a no-op over fields whose
    elements have flat size), which curbs coefficient growth over rationals
    and function fields.
    """
    rows = [list(r) for r in m]
    if not rows or not rows[0]:
        return rows, []
    ncols = len(rows[0])
    pivots = []
    r = 0
    for c in range(ncols):
        pivot = None
        best = None
        for i in range(r, len(rows)):
            if rows[i][c]:
                size = ctx.complexity(rows[i][c])
                if best is None or size < best:
                    pivot, best = i, size
                    if size == 0:
                        break
        if pivot is None:
            continue
        rows[r], rows[pivot] = rows[pivot], rows[r]
        inv = rows[r][c].inverse()
        rows[r] = [x * inv for x in rows[r]]
        for i in range(len(rows)):
            if i != r and rows[i][c]:
                f = rows[i][c]
                rows[i] = [x - f * y for x, y in zip(rows[i], rows[r])]
                if i > r:
                    # scaling a not-yet-pivoted equation is solution-preserving
                    # and keeps entries small over growing coefficient fields
                    s = ctx.content_scalar([x for x in rows[i] if x])
                    if s is not None:
                        rows[i] = [s * x for x in rows[i]]
        pivots.append(c)
        r += 1
        if r == len(rows):
            break
    return rows, pivots


def _strip_row(ctx: FieldCtx, row):
    s = ctx.content_scalar([x for x in row if x])
    return row if s is None else [s * x for x in row]


def echelon(ctx: FieldCtx, m):
    """Fraction-free row echelon form; returns (rows, pivot columns).

    Elimination uses cross-multiplied row updates (a*row_i - b*row_r), so no
    divisions happen until a caller back-substitutes; rows are content-
    stripped after every update.  Over fields with canonical "integral"
    elements this keeps all arithmetic on the cheap denominator-free path.
    """
    rows = [_strip_row(ctx, list(r)) for r in m]
    if not rows or not rows[0]:
        return rows, []
    ncols = len(rows[0])
    pivots = []
    r = 0
    for c in range(ncols):
        pivot = None
        best = None
        for i in range(r, len(rows)):
            if rows[i][c]:
                size = ctx.complexity(rows[i][c])
                if best is None or size < best:
                    pivot, best = i, size
                    if size == 0:
                        break
        if pivot is None:
            continue
        rows[r], rows[pivot] = rows[pivot], rows[r]
        a = rows[r][c]
        for i in range(r + 1, len(rows)):
            b = rows[i][c]
            if b:
                rows[i] = _strip_row(
                    ctx, [a * x - b * y for x, y in zip(rows[i], rows[r])]
                )
        pivots.append(c)
        r += 1
        if r == len(rows):
            break
    return rows, pivots


def solve(ctx: FieldCtx, a, b):
    """One exact solution of A x = b, or None if the system is inconsistent.

    Free variables are set to zero.
    """
    n = len(a)
    if n == 0:
        return []
    ncols = len(a[0]) if a[0] else 0
    aug = [list(row) + [bv] for row, bv in zip(a, b)]
    rows, pivots = echelon(ctx, aug)
    if pivots and pivots[-1] == ncols:
        return None  # pivot in the right-hand column: inconsistent
    x = [ctx.zero] * ncols
    for r in range(len(pivots) - 1, -1, -1):
        c = pivots[r]
        acc = rows[r][ncols]
        for j in range(c + 1, ncols):
            if rows[r][j] and x[j]:
                acc = acc - rows[r][j] * x[j]
        x[c] = acc / rows[r][c]
    return x


def nullspace(ctx: FieldCtx, a):
    """Basis of the right kernel {x : A x = 0}."""
    if not a:
        return []
    ncols = len(a[0])
    rows, pivots = echelon(ctx, a)
    free = [c for c in range(ncols) if c not in pivots]
    basis = []
    for f in free:
        v = [ctx.zero] * ncols
        v[f] = ctx.one
        for r in range(len(pivots) - 1, -1, -1):
            c = pivots[r]
            acc = rows[r][f]
            for j in range(c + 1, ncols):
                if rows[r][j] and v[j] and j != f:
                    acc = acc + rows[r][j] * v[j]
            v[c] = -(acc / rows[r][c])
        basis.append(v)
    return basis


def invert(ctx: FieldCtx, a):
    """Matrix inverse, or None when singular."""
    n = len(a)
    if n == 0:
        return []
    aug = [list(row) + list(irow) for row, irow in zip(a, identity(ctx, n))]
    red, pivots = rref(ctx, aug)
    if pivots != list(range(n)):
        return None
    return [row[n:] for row in red]


def det(ctx: FieldCtx, a) -> FieldElement:
    """Exact determinant.

    Small orders use division-free minor expansion (cheap over coefficient
    fields whose elements are costly to reduce); larger orders fall back to
    Gaussian elimination.
    """
    n = len(a)
    if n == 0:
        return ctx.one
    if n <= 7:
        memo = {}

        def minor(row: int, colmask: int) -> FieldElement:
            if row == n:
                return ctx.one
            key = colmask
            hit = memo.get(key)
            if hit is not None:
                return hit
            acc = ctx.zero
            sign_neg = False
            mask = colmask
            while mask:
                low = mask & -mask
                j = low.bit_length() - 1
                c = a[row][j]
                if c:
                    sub = minor(row + 1, colmask ^ low)
                    term = c * sub
                    acc = acc - term if sign_neg else acc + term
                sign_neg = not sign_neg
                mask ^= low
            memo[key] = acc
            return acc

        return minor(0, (1 << n) - 1)

    rows = [list(r) for r in a]
    out = ctx.one
    for c in range(n):
        pivot = None
        for i in range(c, n):
            if rows[i][c]:
                pivot = i
                break
        if pivot is None:
            return ctx.zero
        if pivot != c:
            rows[c], rows[pivot] = rows[pivot], rows[c]
            out = -out
        out = out * rows[c][c]
        inv = rows[c][c].inverse()
        for i in range(c + 1, n):
            if rows[i][c]:
                f = rows[i][c] * inv
                rows[i] = [x - f * y for x, y in zip(rows[i], rows[c])]
    return out

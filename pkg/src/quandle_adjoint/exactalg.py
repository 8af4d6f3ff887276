"""Exact integer matrix algorithms.

Smith normal form with unimodular transforms, exact inversion of
unimodular matrices, integer linear solving, and cokernel presentations
of quotients of presented finite abelian groups.

Everything runs over Python's arbitrary-precision integers; intermediate
entries are allowed to grow past machine width, which is a classical
failure mode of fixed-width Smith normal form implementations.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

from .errors import DimensionMismatch, InfiniteQuotient

Matrix = tuple[tuple[int, ...], ...]


def freeze_matrix(rows) -> Matrix:
    return tuple(tuple(int(v) for v in row) for row in rows)


def _identity(n):
    return [[1 if i == j else 0 for j in range(n)] for i in range(n)]


def mat_vec(mat, vec):
    if mat and len(mat[0]) != len(vec):
        raise DimensionMismatch(f"matrix is {len(mat)}x{len(mat[0])}, vector has {len(vec)}")
    return tuple(sum(row[j] * vec[j] for j in range(len(vec))) for row in mat)


@dataclass(frozen=True)
class SnfResult:
    """Diagonalization U*A*V = D with U and V unimodular.

    The diagonal of D is non-negative, each entry divides the next
    nonzero one, and zero entries come last.
    """

    U: Matrix
    D: Matrix
    V: Matrix

    def diagonal(self) -> tuple[int, ...]:
        n = len(self.D)
        m = len(self.D[0]) if n else 0
        return tuple(self.D[i][i] for i in range(min(n, m)))


def smith_normal_form(a) -> SnfResult:
    """Smith normal form of an arbitrary integer matrix.

    The pivot at each stage is the entry of smallest nonzero absolute
    value in the remaining block, with row-major tie-breaking.  That
    rule makes the output deterministic and keeps entry growth modest.
    """
    work = [[int(v) for v in row] for row in a]
    n = len(work)
    m = len(work[0]) if n else 0
    if any(len(row) != m for row in work):
        raise DimensionMismatch("ragged matrix")
    u = _identity(n)
    v = _identity(m)

    def swap_rows(i, j):
        work[i], work[j] = work[j], work[i]
        u[i], u[j] = u[j], u[i]

    def swap_cols(i, j):
        for row in work:
            row[i], row[j] = row[j], row[i]
        for row in v:
            row[i], row[j] = row[j], row[i]

    def negate_row(i):
        work[i] = [-x for x in work[i]]
        u[i] = [-x for x in u[i]]

    def add_row(dst, src, q):
        # row_dst += q * row_src, mirrored on U
        wd, ws = work[dst], work[src]
        for jj in range(m):
            wd[jj] += q * ws[jj]
        ud, us = u[dst], u[src]
        for jj in range(n):
            ud[jj] += q * us[jj]

    def add_col(dst, src, q):
        for row in work:
            row[dst] += q * row[src]
        for row in v:
            row[dst] += q * row[src]

    def find_pivot(s):
        best = None
        where = None
        for i in range(s, n):
            row = work[i]
            for j in range(s, m):
                val = abs(row[j])
                if val and (best is None or val < best):
                    best = val
                    where = (i, j)
        return where

    for s in range(min(n, m)):
        while True:
            where = find_pivot(s)
            if where is None:
                break
            if where[0] != s:
                swap_rows(s, where[0])
            if where[1] != s:
                swap_cols(s, where[1])
            if work[s][s] < 0:
                negate_row(s)
            p = work[s][s]
            dirty = False
            for i in range(s + 1, n):
                q, r = divmod(work[i][s], p)
                if q:
                    add_row(i, s, -q)
                if r:
                    dirty = True
            for j in range(s + 1, m):
                q, r = divmod(work[s][j], p)
                if q:
                    add_col(j, s, -q)
                if r:
                    dirty = True
            if dirty:
                # remainders became new, strictly smaller candidates
                continue
            stray = None
            for i in range(s + 1, n):
                row = work[i]
                for j in range(s + 1, m):
                    if row[j] % p:
                        stray = i
                        break
                if stray is not None:
                    break
            if stray is None:
                break
            # fold a non-divisible row into row s and keep reducing;
            # the pivot shrinks to a gcd, so this terminates
            add_row(s, stray, 1)
        if find_pivot(s) is None:
            break

    return SnfResult(freeze_matrix(u), freeze_matrix(work), freeze_matrix(v))


def invert_unimodular(mat) -> Matrix:
    """Exact inverse of an integer matrix with determinant +-1.

    Gauss-Jordan over exact rationals; raises ValueError if the matrix
    is singular or the inverse is not integral.
    """
    n = len(mat)
    aug = [
        [Fraction(mat[i][j]) for j in range(n)]
        + [Fraction(1 if i == j else 0) for j in range(n)]
        for i in range(n)
    ]
    for col in range(n):
        piv = next((r for r in range(col, n) if aug[r][col]), None)
        if piv is None:
            raise ValueError("matrix is singular")
        aug[col], aug[piv] = aug[piv], aug[col]
        scale = aug[col][col]
        if scale != 1:
            aug[col] = [x / scale for x in aug[col]]
        for r in range(n):
            if r != col and aug[r][col]:
                f = aug[r][col]
                aug[r] = [x - f * y for x, y in zip(aug[r], aug[col])]
    inv = []
    for i in range(n):
        row = []
        for j in range(n, 2 * n):
            val = aug[i][j]
            if val.denominator != 1:
                raise ValueError("matrix is not unimodular")
            row.append(int(val))
        inv.append(row)
    return freeze_matrix(inv)


def solve_integer(a, b):
    """One integer solution x of a*x = b, or None when none exists."""
    n = len(a)
    m = len(a[0]) if n else 0
    if len(b) != n:
        raise DimensionMismatch(f"matrix has {n} rows, vector has {len(b)}")
    res = smith_normal_form(a)
    c = mat_vec(res.U, b)
    z = [0] * m
    for i in range(n):
        d = res.D[i][i] if i < min(n, m) else 0
        if d:
            q, r = divmod(c[i], d)
            if r:
                return None
            z[i] = q
        elif c[i]:
            return None
    return mat_vec(res.V, z)


@dataclass(frozen=True)
class CokerPresentation:
    """A finite abelian quotient, described by invariant factors.

    ``projection`` maps ambient generator coordinates to quotient
    coordinates (read modulo the invariant factors); ``lift`` maps
    quotient coordinates to one ambient representative.  Factors equal
    to 1 are dropped, so the trivial quotient has an empty factor list.
    """

    ambient_orders: tuple[int, ...]
    invariant_factors: tuple[int, ...]
    projection: Matrix
    lift: Matrix

    @property
    def order(self) -> int:
        return math.prod(self.invariant_factors)

    def project(self, vec) -> tuple[int, ...]:
        if len(vec) != len(self.ambient_orders):
            raise DimensionMismatch(
                f"expected {len(self.ambient_orders)} coordinates, got {len(vec)}"
            )
        return tuple(
            sum(row[j] * vec[j] for j in range(len(vec))) % f
            for row, f in zip(self.projection, self.invariant_factors)
        )

    def lift_vec(self, alpha) -> tuple[int, ...]:
        if len(alpha) != len(self.invariant_factors):
            raise DimensionMismatch(
                f"expected {len(self.invariant_factors)} coordinates, got {len(alpha)}"
            )
        return tuple(
            sum(self.lift[i][t] * alpha[t] for t in range(len(alpha))) % d
            for i, d in enumerate(self.ambient_orders)
        )


def cokernel(ambient_orders, relations) -> CokerPresentation:
    """Quotient of (+) Z/d_i by the subgroup generated by relation columns.

    Computed from the Smith normal form of [diag(orders) | relations]:
    the nonunit diagonal entries are the invariant factors, the matching
    rows of U give the projection, and the matching columns of U^-1 give
    the lift.
    """
    orders = tuple(int(d) for d in ambient_orders)
    r = len(orders)
    rel = [list(map(int, row)) for row in relations]
    if rel and len(rel) != r:
        raise DimensionMismatch(f"relations need {r} rows, got {len(rel)}")
    if not rel:
        rel = [[] for _ in range(r)]
    width = len(rel[0]) if rel else 0
    if any(len(row) != width for row in rel):
        raise DimensionMismatch("ragged relation matrix")

    if r == 0:
        return CokerPresentation((), (), (), ())

    block = [
        [orders[i] if j == i else 0 for j in range(r)] + rel[i]
        for i in range(r)
    ]
    res = smith_normal_form(block)
    diag = [res.D[i][i] for i in range(r)]
    if any(d == 0 for d in diag):
        raise InfiniteQuotient("zero invariant factor; ambient orders must be positive")
    keep = [i for i, d in enumerate(diag) if d != 1]
    factors = tuple(diag[i] for i in keep)
    uinv = invert_unimodular(res.U)
    projection = freeze_matrix(
        [[res.U[i][j] % diag[i] for j in range(r)] for i in keep]
    )
    lift = freeze_matrix(
        [[uinv[i][j] % orders[i] for j in keep] for i in range(r)]
    )
    return CokerPresentation(orders, factors, projection, lift)

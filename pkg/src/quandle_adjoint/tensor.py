"""Tensor squares of finite abelian groups and the twisted cokernel.

For M = (+) Z/d_i the tensor square M (x) M has one generator per pair
(i, j), of order gcd(d_i, d_j), listed in row-major order.  The twist
tau sends x (x) y to Ty (x) x; the group S(M, T) is the cokernel of
1 - tau, and the class map sends (x, y) to the image of x (x) y there.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .abelian import Coords, EndoMatrix, FinAbGroup
from .errors import DimensionMismatch
from .exactalg import CokerPresentation, Matrix, cokernel, freeze_matrix


@dataclass(frozen=True)
class TensorSquare:
    group: FinAbGroup
    gen_orders: tuple[int, ...]

    @property
    def rank(self) -> int:
        return len(self.gen_orders)

    @property
    def cardinality(self) -> int:
        return math.prod(self.gen_orders)

    def pair_index(self, i: int, j: int) -> int:
        return i * self.group.rank + j


def tensor_square(g: FinAbGroup) -> TensorSquare:
    """Generators g_i (x) g_j with order gcd(d_i, d_j), row-major."""
    orders = g.orders
    gen = tuple(
        math.gcd(orders[i], orders[j])
        for i in range(g.rank)
        for j in range(g.rank)
    )
    return TensorSquare(g, gen)


def bilinear_expand(ts: TensorSquare, x: Coords, y: Coords) -> tuple[int, ...]:
    """Coordinates of x (x) y: entry (i, j) is x_i * y_j mod gcd(d_i, d_j)."""
    r = ts.group.rank
    if len(x) != r or len(y) != r:
        raise DimensionMismatch(f"expected {r} coordinates")
    return tuple(
        (x[i] * y[j]) % ts.gen_orders[i * r + j]
        for i in range(r)
        for j in range(r)
    )


def tau_matrix(ts: TensorSquare, t: EndoMatrix) -> Matrix:
    """Matrix of the twist on tensor generators.

    The column for generator (i, j) expands (T g_j) (x) g_i, placing
    t[k][j] at row (k, i).  No entrywise order validation is done: the
    twist is induced by a bilinear map, so it is well defined, and the
    cokernel computation only consumes generator images.
    """
    r = ts.group.rank
    n = r * r
    mat = [[0] * n for _ in range(n)]
    for i in range(r):
        for j in range(r):
            col = i * r + j
            for k in range(r):
                row = k * r + i
                mat[row][col] = t.entries[k][j] % ts.gen_orders[row]
    return freeze_matrix(mat)


@dataclass(frozen=True)
class SGroup:
    """coker(1 - tau) together with the class map data."""

    tensor: TensorSquare
    presentation: CokerPresentation

    @property
    def invariant_factors(self) -> tuple[int, ...]:
        return self.presentation.invariant_factors

    @property
    def order(self) -> int:
        return self.presentation.order


def s_group(g: FinAbGroup, t: EndoMatrix) -> SGroup:
    """The twisted cokernel S(M, T).

    Computed for any endomorphism; statements tying it to the quandle's
    fundamental group additionally need T invertible and 1 - T
    invertible.
    """
    ts = tensor_square(g)
    tau = tau_matrix(ts, t)
    n = ts.rank
    rel = [
        [((1 if row == col else 0) - tau[row][col]) for col in range(n)]
        for row in range(n)
    ]
    return SGroup(ts, cokernel(ts.gen_orders, rel))


def class_of(s: SGroup, x: Coords, y: Coords) -> tuple[int, ...]:
    """Image of x (x) y in S(M, T), in invariant-factor coordinates."""
    return s.presentation.project(bilinear_expand(s.tensor, x, y))


def lift_class(s: SGroup, alpha) -> tuple[int, ...]:
    """A tensor-coordinate vector projecting to alpha."""
    return s.presentation.lift_vec(alpha)

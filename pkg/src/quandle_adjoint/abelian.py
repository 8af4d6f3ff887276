"""Finite abelian groups presented as direct sums of cyclic groups.

A group is a tuple of summand orders (d_1, ..., d_r); an element is a
coordinate vector reduced modulo the orders.  Endomorphisms are integer
matrices whose column j gives the image of generator j in generator
coordinates, subject to t[i][j] * d_j == 0 (mod d_i) so that generator
images have admissible orders.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass

from .errors import DimensionMismatch, IllDefinedHom, NonFiniteGroup, NotInvertible
from .exactalg import Matrix, cokernel, freeze_matrix, solve_integer

Coords = tuple[int, ...]


@dataclass(frozen=True)
class FinAbGroup:
    orders: Coords

    @property
    def rank(self) -> int:
        return len(self.orders)

    @property
    def cardinality(self) -> int:
        return math.prod(self.orders)


def make_group(orders) -> FinAbGroup:
    """Build the direct sum of Z/d for the given orders, all >= 1.

    An order of 0 would mean an infinite cyclic summand, which is out of
    scope, so anything <= 0 is rejected.
    """
    out = []
    for d in orders:
        d = int(d)
        if d <= 0:
            raise NonFiniteGroup(f"summand order {d} is not positive")
        out.append(d)
    return FinAbGroup(tuple(out))


def zero(g: FinAbGroup) -> Coords:
    return (0,) * g.rank


def reduce_element(g: FinAbGroup, coords) -> Coords:
    if len(coords) != g.rank:
        raise DimensionMismatch(f"expected {g.rank} coordinates, got {len(coords)}")
    return tuple(int(c) % d for c, d in zip(coords, g.orders))


def add(g: FinAbGroup, a: Coords, b: Coords) -> Coords:
    if len(a) != len(b) or len(a) != g.rank:
        raise DimensionMismatch(f"coordinate counts {len(a)}, {len(b)} do not match rank {g.rank}")
    return tuple((x + y) % d for x, y, d in zip(a, b, g.orders))


def neg(g: FinAbGroup, a: Coords) -> Coords:
    if len(a) != g.rank:
        raise DimensionMismatch(f"expected {g.rank} coordinates, got {len(a)}")
    return tuple((-x) % d for x, d in zip(a, g.orders))


def sub(g: FinAbGroup, a: Coords, b: Coords) -> Coords:
    return add(g, a, neg(g, b))


def scale(g: FinAbGroup, n: int, a: Coords) -> Coords:
    return tuple((n * x) % d for x, d in zip(a, g.orders))


def elements(g: FinAbGroup):
    """All elements in lexicographic coordinate order."""
    return itertools.product(*(range(d) for d in g.orders))


def element_index(g: FinAbGroup, a: Coords) -> int:
    """Position of an element in the lexicographic enumeration."""
    idx = 0
    for d, c in zip(g.orders, a):
        idx = idx * d + c
    return idx


def element_order(g: FinAbGroup, a: Coords) -> int:
    return math.lcm(*(d // math.gcd(c, d) for c, d in zip(a, g.orders))) if g.rank else 1


@dataclass(frozen=True)
class EndoMatrix:
    """Endomorphism as an r x r integer matrix, row i reduced mod d_i."""

    entries: Matrix

    @property
    def rank(self) -> int:
        return len(self.entries)


def make_endo(g: FinAbGroup, entries) -> EndoMatrix:
    """Validate and reduce a matrix as an endomorphism of g.

    For every entry, t[i][j] * d_j must vanish mod d_i, otherwise the
    image of generator j would have order not dividing d_j.
    """
    r = g.rank
    rows = [list(map(int, row)) for row in entries]
    if len(rows) != r or any(len(row) != r for row in rows):
        raise DimensionMismatch(f"expected a {r}x{r} matrix")
    for i in range(r):
        for j in range(r):
            if (rows[i][j] * g.orders[j]) % g.orders[i]:
                raise IllDefinedHom(i + 1, j + 1)
    reduced = [[rows[i][j] % g.orders[i] for j in range(r)] for i in range(r)]
    return EndoMatrix(freeze_matrix(reduced))


def identity_endo(g: FinAbGroup) -> EndoMatrix:
    r = g.rank
    return EndoMatrix(freeze_matrix(
        [[(1 if i == j else 0) % g.orders[i] for j in range(r)] for i in range(r)]
    ))


def apply_endo(g: FinAbGroup, t: EndoMatrix, x: Coords) -> Coords:
    if len(x) != g.rank:
        raise DimensionMismatch(f"expected {g.rank} coordinates, got {len(x)}")
    return tuple(
        sum(row[j] * x[j] for j in range(g.rank)) % d
        for row, d in zip(t.entries, g.orders)
    )


def compose_endo(g: FinAbGroup, a: EndoMatrix, b: EndoMatrix) -> EndoMatrix:
    """The endomorphism x -> a(b(x))."""
    r = g.rank
    rows = [
        [
            sum(a.entries[i][k] * b.entries[k][j] for k in range(r)) % g.orders[i]
            for j in range(r)
        ]
        for i in range(r)
    ]
    return EndoMatrix(freeze_matrix(rows))


def is_automorphism(g: FinAbGroup, t: EndoMatrix) -> bool:
    """True iff t is bijective.

    On a finite group surjectivity suffices, and t is surjective exactly
    when the cokernel of [t | diag(orders)] is trivial.
    """
    return cokernel(g.orders, t.entries).invariant_factors == ()


def inverse_endo(g: FinAbGroup, t: EndoMatrix) -> EndoMatrix:
    """Inverse automorphism, found by solving t*x = e_j over the presentation."""
    r = g.rank
    system = [
        list(t.entries[i]) + [g.orders[i] if j == i else 0 for j in range(r)]
        for i in range(r)
    ]
    cols = []
    for j in range(r):
        rhs = [1 if i == j else 0 for i in range(r)]
        sol = solve_integer(system, rhs)
        if sol is None:
            raise NotInvertible("endomorphism is not surjective, hence not invertible")
        cols.append(sol[:r])
    inv = make_endo(g, [[cols[j][i] for j in range(r)] for i in range(r)])
    if compose_endo(g, t, inv).entries != identity_endo(g).entries:
        raise NotInvertible("endomorphism has no two-sided inverse")
    return inv


def endo_pow(g: FinAbGroup, t: EndoMatrix, m: int) -> EndoMatrix:
    """t composed with itself m times; negative m inverts first."""
    if m == 0:
        return identity_endo(g)
    base = t if m > 0 else inverse_endo(g, t)
    e = abs(m)
    result = identity_endo(g)
    sq = base
    while e:
        if e & 1:
            result = compose_endo(g, result, sq)
        sq = compose_endo(g, sq, sq)
        e >>= 1
    return result

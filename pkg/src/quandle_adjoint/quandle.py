"""Finite quandles as operation tables, and the Alexander construction.

Table convention: table[y][x] = y * x, with indices referring to the
lexicographic enumeration of the underlying group's coordinate vectors.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass

from .abelian import (
    Coords,
    EndoMatrix,
    FinAbGroup,
    add,
    apply_endo,
    elements,
    element_index,
    sub,
)
from .errors import CapExceeded
from .exactalg import cokernel

DEFAULT_TABLE_CAP = 4096


@dataclass(frozen=True)
class QuandleTable:
    table: tuple[tuple[int, ...], ...]

    @property
    def n(self) -> int:
        return len(self.table)


@dataclass(frozen=True)
class AxiomViolation:
    """First failing axiom, with the witnessing element indices."""

    axiom: str
    witness: tuple[int, ...]


def alexander_op(g: FinAbGroup, t: EndoMatrix, y: Coords, x: Coords) -> Coords:
    """y * x = Ty + x - Tx."""
    return add(g, apply_endo(g, t, y), sub(g, x, apply_endo(g, t, x)))


def build_alexander_table(g: FinAbGroup, t: EndoMatrix, cap: int = DEFAULT_TABLE_CAP) -> QuandleTable:
    n = g.cardinality
    if n > cap:
        raise CapExceeded(f"group has {n} elements, cap is {cap}")
    elems = list(elements(g))
    rows = []
    for y in elems:
        rows.append(tuple(element_index(g, alexander_op(g, t, y, x)) for x in elems))
    return QuandleTable(tuple(rows))


def is_quandle(q: QuandleTable):
    """Check the three quandle axioms in order, reporting the first failure.

    Returns (True, None) or (False, AxiomViolation).  The axioms, on a
    table of size n with entries in [0, n):

      1. idempotence: x * x = x
      2. each right translation y -> y * x is a permutation
      3. right self-distributivity: (z*y)*x = (z*x)*(y*x)
    """
    table = q.table
    n = q.n
    for x in range(n):
        if table[x][x] != x:
            return False, AxiomViolation("idempotence", (x,))
    for x in range(n):
        if len({table[y][x] for y in range(n)}) != n:
            return False, AxiomViolation("right_translation", (x,))
    rng = range(n)
    for x in rng:
        col_x = [table[z][x] for z in rng]
        for y in rng:
            yx = table[y][x]
            for z in rng:
                if table[table[z][y]][x] != table[col_x[z]][yx]:
                    return False, AxiomViolation("self_distributivity", (x, y, z))
    return True, None


def is_connected(q: QuandleTable) -> bool:
    """Orbit of element 0 under right translations and their inverses.

    For a quandle the inner group acts with identical orbits from every
    basepoint, so a single breadth-first closure decides transitivity.
    """
    n = q.n
    if n <= 1:
        return True
    table = q.table
    inv = [[0] * n for _ in range(n)]
    for x in range(n):
        for y in range(n):
            inv[q.table[y][x]][x] = y
    seen = [False] * n
    seen[0] = True
    queue = deque([0])
    count = 1
    while queue:
        cur = queue.popleft()
        row = table[cur]
        irow = inv[cur]
        for x in range(n):
            for nxt in (row[x], irow[x]):
                if not seen[nxt]:
                    seen[nxt] = True
                    count += 1
                    queue.append(nxt)
    return count == n


def is_connected_linear(g: FinAbGroup, t: EndoMatrix) -> bool:
    """Connectivity via linear algebra: 1 - T surjective on g.

    On a finite group surjective and bijective agree, so this matches
    the orbit computation.
    """
    r = g.rank
    one_minus = [
        [((1 if i == j else 0) - t.entries[i][j]) % g.orders[i] for j in range(r)]
        for i in range(r)
    ]
    return cokernel(g.orders, one_minus).invariant_factors == ()

"""Brute-force enumeration cross-checks.

Everything here works by exhaustive enumeration of small groups and
never touches Smith normal form, so these routines serve as independent
oracles for the linear-algebra pipeline.
"""

from __future__ import annotations

import itertools
import math
from collections import Counter

from .abelian import EndoMatrix, FinAbGroup, apply_endo, elements


def enumerate_coords(orders):
    return list(itertools.product(*(range(d) for d in orders)))


def subgroup_closure(orders, generators) -> frozenset:
    """Subgroup of (+) Z/d generated by the given coordinate vectors."""
    start = tuple(0 for _ in orders)
    gens = [tuple(int(c) % d for c, d in zip(v, orders)) for v in generators]
    seen = {start}
    frontier = [start]
    while frontier:
        nxt = []
        for v in frontier:
            for h in gens:
                w = tuple((a + b) % d for a, b, d in zip(v, h, orders))
                if w not in seen:
                    seen.add(w)
                    nxt.append(w)
        frontier = nxt
    return frozenset(seen)


def quotient_census(orders, relation_columns):
    """Cardinality and element-order census of ambient/(relations).

    The relations are given as columns; the ambient group must be small
    enough to enumerate.  The census counts, for each order, how many
    quotient elements have exactly that order, which pins the quotient's
    isomorphism type.
    """
    ambient = enumerate_coords(orders)
    cols = []
    if relation_columns:
        width = len(relation_columns[0])
        cols = [
            tuple(relation_columns[i][j] for i in range(len(relation_columns)))
            for j in range(width)
        ]
    h = subgroup_closure(orders, cols)
    size = len(ambient) // len(h)
    census: Counter = Counter()
    seen = set()
    for v in ambient:
        if v in seen:
            continue
        coset = {
            tuple((a + b) % d for a, b, d in zip(v, w, orders))
            for w in h
        }
        seen |= coset
        k = 1
        acc = v
        while acc not in h:
            acc = tuple((a + b) % d for a, b, d in zip(acc, v, orders))
            k += 1
        census[k] += 1
    assert sum(census.values()) == size
    return size, census


def census_from_factors(factors) -> Counter:
    """Element-order census of (+) Z/f for the given invariant factors."""
    census: Counter = Counter()
    for vec in itertools.product(*(range(f) for f in factors)):
        order = 1
        for c, f in zip(vec, factors):
            order = math.lcm(order, f // math.gcd(c, f))
        census[order] += 1
    return census


def endo_image_size(g: FinAbGroup, t: EndoMatrix) -> int:
    return len({apply_endo(g, t, x) for x in elements(g)})

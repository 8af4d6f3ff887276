"""Fixed catalog of (group, structure map) pairs used across the tests.

Every entry keeps the tensor square at 256 elements or fewer so the
enumeration oracle stays feasible.  Expected values are only recorded
where they were derived by hand or by an independent count; everything
else is computed and cross-checked by the oracles.
"""

from dataclasses import dataclass

from quandle_adjoint import make_endo, make_group
from quandle_adjoint.adjoint import AdjContext, make_context


@dataclass(frozen=True)
class CatalogEntry:
    label: str
    orders: tuple[int, ...]
    matrix: tuple[tuple[int, ...], ...]
    connected: bool | None = None       # hand-derived expectation, if any
    s_factors: tuple[int, ...] | None = None  # expectation, if any

    @property
    def cardinality(self) -> int:
        out = 1
        for d in self.orders:
            out *= d
        return out


def _e(label, orders, matrix, connected=None, s_factors=None):
    return CatalogEntry(label, tuple(orders), tuple(tuple(r) for r in matrix),
                        connected, s_factors)


CATALOG = (
    # cyclic
    _e("trivial", (1,), [[1]], connected=True, s_factors=()),
    _e("z2-id", (2,), [[1]], connected=False),
    _e("z3-dihedral", (3,), [[2]], connected=True, s_factors=()),
    _e("z4-t3", (4,), [[3]], connected=False, s_factors=(2,)),
    _e("z5-t2", (5,), [[2]], connected=True, s_factors=()),
    _e("z5-t4", (5,), [[4]], connected=True, s_factors=()),
    _e("z6-t5", (6,), [[5]], connected=False),
    _e("z7-t3", (7,), [[3]], connected=True, s_factors=()),
    _e("z8-t3", (8,), [[3]], connected=False),
    _e("z9-t2", (9,), [[2]], connected=True, s_factors=()),
    _e("z12-t5", (12,), [[5]], connected=False),
    _e("z15-t2", (15,), [[2]], connected=True, s_factors=()),
    _e("z16-t3", (16,), [[3]], connected=False),
    _e("z25-t7", (25,), [[7]], connected=True, s_factors=()),
    _e("z27-t2", (27,), [[2]], connected=True, s_factors=()),
    _e("z49-t3", (49,), [[3]], connected=True, s_factors=()),
    _e("z63-t2", (63,), [[2]], connected=True, s_factors=()),
    _e("z64-t3", (64,), [[3]], connected=False),
    # homogeneous (Z/p)^2 and (Z/4)^2
    _e("z2sq-swap", (2, 2), [[0, 1], [1, 0]], connected=False),
    _e("z2sq-comp", (2, 2), [[0, 1], [1, 1]], connected=True),
    _e("z3sq-comp", (3, 3), [[0, 2], [1, 1]], connected=True, s_factors=(3,)),
    _e("z3sq-scalar", (3, 3), [[2, 0], [0, 2]], connected=True),
    _e("z3sq-swap", (3, 3), [[0, 1], [1, 0]], connected=False),
    _e("z3sq-unipotent", (3, 3), [[1, 1], [0, 1]], connected=False),
    _e("z3sq-comp2", (3, 3), [[0, 1], [1, 2]], connected=True, s_factors=()),
    _e("z4sq", (4, 4), [[0, 3], [1, 0]], connected=False),
    # mixed orders
    _e("z2z4-unipotent", (2, 4), [[1, 1], [0, 1]], connected=False),
    _e("z6z2-unipotent", (6, 2), [[1, 3], [0, 1]], connected=False),
    _e("z6z2-conn", (6, 2), [[5, 3], [1, 0]], connected=True),
    _e("z2z6-conn", (2, 6), [[0, 1], [3, 5]], connected=True),
    _e("z3z9-conn", (3, 9), [[2, 1], [3, 2]], connected=True),
)

_CONTEXTS: dict[str, AdjContext] = {}


def entry_group_endo(entry: CatalogEntry):
    g = make_group(entry.orders)
    return g, make_endo(g, entry.matrix)


def entry_context(entry: CatalogEntry) -> AdjContext:
    ctx = _CONTEXTS.get(entry.label)
    if ctx is None:
        ctx = make_context(*entry_group_endo(entry))
        _CONTEXTS[entry.label] = ctx
    return ctx


def connected_entries():
    return [e for e in CATALOG if entry_context(e).connected]

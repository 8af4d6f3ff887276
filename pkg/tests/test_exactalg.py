"""Smith normal form and cokernel presentations, checked against
independent matrix oracles and exhaustive enumeration."""

import random

import pytest

from helpers import bareiss_det, divisibility_chain_ok, identity_matrix, mat_mul
from quandle_adjoint.errors import DimensionMismatch, InfiniteQuotient
from quandle_adjoint.exactalg import (
    cokernel,
    invert_unimodular,
    smith_normal_form,
    solve_integer,
)
from quandle_adjoint.oracle import census_from_factors, quotient_census


def test_snf_hand_example():
    res = smith_normal_form([[2, 4], [6, 8]])
    assert res.diagonal() == (2, 4)
    assert mat_mul(mat_mul([list(r) for r in res.U], [[2, 4], [6, 8]]),
                   [list(r) for r in res.V]) == [list(r) for r in res.D]


def test_snf_zero_matrix():
    res = smith_normal_form([[0, 0], [0, 0]])
    assert res.diagonal() == (0, 0)
    assert [list(r) for r in res.U] == identity_matrix(2)
    assert [list(r) for r in res.V] == identity_matrix(2)


def test_snf_identity():
    res = smith_normal_form(identity_matrix(3))
    assert res.diagonal() == (1, 1, 1)


def test_snf_empty():
    res = smith_normal_form([])
    assert res.D == ()
    assert res.U == ()
    assert res.V == ()


def test_snf_deterministic():
    a = [[3, 1, -4], [2, 0, 9], [-7, 5, 5]]
    first = smith_normal_form(a)
    second = smith_normal_form(a)
    assert first == second


def test_snf_ragged_rejected():
    with pytest.raises(DimensionMismatch):
        smith_normal_form([[1, 2], [3]])


def test_snf_random_corpus():
    rng = random.Random(20240811)
    for _ in range(1000):
        n = rng.randint(1, 8)
        m = rng.randint(1, 8)
        a = [[rng.randint(-99, 99) for _ in range(m)] for _ in range(n)]
        res = smith_normal_form(a)
        u = [list(r) for r in res.U]
        v = [list(r) for r in res.V]
        d = [list(r) for r in res.D]
        assert mat_mul(mat_mul(u, a), v) == d
        assert divisibility_chain_ok(res.diagonal())
        assert abs(bareiss_det(u)) == 1
        assert abs(bareiss_det(v)) == 1
        for i, row in enumerate(d):
            for j, val in enumerate(row):
                if i != j:
                    assert val == 0


def test_invert_unimodular_roundtrip():
    rng = random.Random(7)
    for _ in range(100):
        n = rng.randint(1, 6)
        a = [[rng.randint(-20, 20) for _ in range(n)] for _ in range(n)]
        u = [list(r) for r in smith_normal_form(a).U]
        uinv = [list(r) for r in invert_unimodular(u)]
        assert mat_mul(u, uinv) == identity_matrix(n)
        assert mat_mul(uinv, u) == identity_matrix(n)


def test_invert_unimodular_rejects_singular():
    with pytest.raises(ValueError):
        invert_unimodular([[1, 1], [1, 1]])
    with pytest.raises(ValueError):
        invert_unimodular([[2, 0], [0, 1]])


def test_solve_integer_constructed_systems():
    rng = random.Random(99)
    for _ in range(200):
        n = rng.randint(1, 5)
        m = rng.randint(1, 5)
        a = [[rng.randint(-9, 9) for _ in range(m)] for _ in range(n)]
        x = [rng.randint(-9, 9) for _ in range(m)]
        b = [sum(a[i][j] * x[j] for j in range(m)) for i in range(n)]
        sol = solve_integer(a, b)
        assert sol is not None
        assert [sum(a[i][j] * sol[j] for j in range(m)) for i in range(n)] == b


def test_solve_integer_unsolvable():
    assert solve_integer([[2]], [3]) is None
    assert solve_integer([[2, 4]], [1]) is None
    assert solve_integer([[0]], [5]) is None


def test_cokernel_examples():
    assert cokernel([4], [[2]]).invariant_factors == (2,)
    assert cokernel([5], [[2]]).invariant_factors == ()
    for n in (2, 3, 7, 12):
        assert cokernel([n], []).invariant_factors == (n,)
    assert cokernel([1], []).invariant_factors == ()
    assert cokernel([6, 2], []).invariant_factors == (2, 6)


def test_cokernel_rejects_infinite():
    with pytest.raises(InfiniteQuotient):
        cokernel([0], [])


def test_cokernel_rejects_wrong_row_count():
    with pytest.raises(DimensionMismatch):
        cokernel([4, 2], [[1], [1], [1]])


def test_cokernel_projection_kills_relations():
    cases = [
        ([4, 6], [[2, 0], [0, 3]]),
        ([8], [[6]]),
        ([2, 4, 4], [[1, 0], [2, 2], [0, 1]]),
        ([9, 3], [[3, 1], [0, 2]]),
    ]
    for orders, rel in cases:
        pres = cokernel(orders, rel)
        width = len(rel[0]) if rel else 0
        for j in range(width):
            col = [rel[i][j] for i in range(len(orders))]
            assert pres.project(col) == (0,) * len(pres.invariant_factors)
        for i, d in enumerate(orders):
            col = [d if t == i else 0 for t in range(len(orders))]
            assert pres.project(col) == (0,) * len(pres.invariant_factors)


def test_cokernel_projection_lift_identity():
    import itertools

    cases = [
        ([4], [[2]]),
        ([4, 6], [[2, 0], [0, 3]]),
        ([2, 4, 4], [[1, 0], [2, 2], [0, 1]]),
        ([9, 3], [[3, 1], [0, 2]]),
        ([8, 8], [[2, 0], [4, 4]]),
    ]
    for orders, rel in cases:
        pres = cokernel(orders, rel)
        for alpha in itertools.product(*(range(f) for f in pres.invariant_factors)):
            assert pres.project(pres.lift_vec(alpha)) == alpha


def test_cokernel_against_enumeration():
    rng = random.Random(31337)
    cases = [
        ([4], [[2]]),
        ([5], [[2]]),
        ([4, 6], [[2, 0], [0, 3]]),
        ([2, 2, 2], [[1, 1], [1, 0], [0, 1]]),
        ([8, 4], [[2, 4], [2, 0]]),
    ]
    for _ in range(40):
        r = rng.randint(1, 3)
        orders = [rng.choice([2, 3, 4, 5, 6]) for _ in range(r)]
        ambient = 1
        for d in orders:
            ambient *= d
        if ambient > 256:
            continue
        s = rng.randint(0, 3)
        rel = [[rng.randint(-6, 6) for _ in range(s)] for _ in range(r)]
        cases.append((orders, rel))
    for orders, rel in cases:
        pres = cokernel(orders, rel)
        size, census = quotient_census(orders, rel)
        assert size == pres.order
        assert census == census_from_factors(pres.invariant_factors)

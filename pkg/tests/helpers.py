"""Independent matrix utilities used as test-side oracles.

Deliberately separate from the package's exactalg module so that the
properties of Smith normal form are checked by a second route.
"""


def mat_mul(a, b):
    n = len(a)
    k = len(a[0]) if n else 0
    m = len(b[0]) if b else 0
    assert len(b) == k
    return [
        [sum(a[i][t] * b[t][j] for t in range(k)) for j in range(m)]
        for i in range(n)
    ]


def bareiss_det(m):
    """Exact integer determinant by fraction-free elimination."""
    n = len(m)
    if n == 0:
        return 1
    a = [list(map(int, row)) for row in m]
    sign = 1
    prev = 1
    for k in range(n - 1):
        if a[k][k] == 0:
            for i in range(k + 1, n):
                if a[i][k]:
                    a[k], a[i] = a[i], a[k]
                    sign = -sign
                    break
            else:
                return 0
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) // prev
        prev = a[k][k]
    return sign * a[n - 1][n - 1]


def divisibility_chain_ok(diag):
    """Non-negative entries, nonzero ones dividing the next nonzero one,
    zeros trailing."""
    nz = [d for d in diag if d != 0]
    if any(d < 0 for d in diag):
        return False
    if list(diag[: len(nz)]) != nz:
        return False
    return all(nz[i + 1] % nz[i] == 0 for i in range(len(nz) - 1))


def identity_matrix(n):
    return [[1 if i == j else 0 for j in range(n)] for i in range(n)]

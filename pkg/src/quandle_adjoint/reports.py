"""Structured input handling and report builders.

Shared by the command line front end and the HTTP service, so that both
surfaces produce identical documents for identical requests.

An input document takes one of two shapes:

  {"orders": [d1, ...], "matrix": [[...], ...]}
      explicit group and structure matrix; any integer representatives
      are accepted and reduced internally

  {"prime": p, "poly": [a, b]}
      the quotient ring F_p[t]/(t^2 + a t + b) with the structure map
      given by multiplication by t, encoded as the companion matrix
      [[0, -b], [1, -a]] over orders (p, p); requires b != 0 mod p
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from . import adjoint, oracle
from .abelian import FinAbGroup, elements, make_group, make_endo, is_automorphism
from .errors import (
    CapExceeded,
    IllDefinedHom,
    InvalidInputSpec,
    NonFiniteGroup,
    NotInvertible,
)
from .exactalg import smith_normal_form
from .quandle import (
    DEFAULT_TABLE_CAP,
    build_alexander_table,
    is_connected,
    is_connected_linear,
    is_quandle,
)
from .tensor import s_group

DEFAULT_SCAN_CAP = 23
ORACLE_TENSOR_LIMIT = 256

# bounds per verification depth: degree window, cap on associativity
# triples, cap on identity-suite triples, round-trip sample size
DEPTH_PRESETS = {
    "quick": {"k_values": (-1, 0, 1), "max_assoc": 20_000, "max_triples": 4_000, "roundtrips": 25},
    "full": {"k_values": (-2, -1, 0, 1, 2), "max_assoc": 2_000_000, "max_triples": 50_000, "roundtrips": 100},
}


def _is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n < 4:
        return True
    if n % 2 == 0:
        return False
    f = 3
    while f * f <= n:
        if n % f == 0:
            return False
        f += 2
    return True


@dataclass(frozen=True)
class InputSpec:
    orders: tuple[int, ...] | None = None
    matrix: tuple[tuple[int, ...], ...] | None = None
    prime: int | None = None
    poly: tuple[int, int] | None = None

    @property
    def kind(self) -> str:
        return "explicit" if self.orders is not None else "quadratic"


def companion_matrix(p: int, a: int, b: int):
    return ((0, (-b) % p), (1, (-a) % p))


def parse_input_spec(doc) -> InputSpec:
    if not isinstance(doc, dict):
        raise InvalidInputSpec("input must be a JSON object")
    keys = set(doc)
    if {"orders", "matrix"} <= keys and not keys & {"prime", "poly"}:
        orders = doc["orders"]
        matrix = doc["matrix"]
        if not isinstance(orders, (list, tuple)) or not orders:
            raise InvalidInputSpec("orders must be a non-empty list of integers")
        if not isinstance(matrix, (list, tuple)):
            raise InvalidInputSpec("matrix must be a list of rows")
        try:
            orders_t = tuple(int(d) for d in orders)
            matrix_t = tuple(tuple(int(v) for v in row) for row in matrix)
        except (TypeError, ValueError) as exc:
            raise InvalidInputSpec(f"non-integer entry: {exc}") from exc
        return InputSpec(orders=orders_t, matrix=matrix_t)
    if {"prime", "poly"} <= keys and not keys & {"orders", "matrix"}:
        try:
            p = int(doc["prime"])
            a, b = (int(v) for v in doc["poly"])
        except (TypeError, ValueError) as exc:
            raise InvalidInputSpec(f"bad quadratic spec: {exc}") from exc
        if not _is_prime(p):
            raise InvalidInputSpec(f"{p} is not prime")
        if b % p == 0:
            raise InvalidInputSpec("constant term must be nonzero mod p for an invertible map")
        return InputSpec(prime=p, poly=(a % p, b % p))
    raise InvalidInputSpec("expected either {orders, matrix} or {prime, poly}")


def build_group_endo(spec: InputSpec):
    if spec.kind == "quadratic":
        p = spec.prime
        a, b = spec.poly
        orders = (p, p)
        matrix = companion_matrix(p, a, b)
    else:
        orders = spec.orders
        matrix = spec.matrix
    try:
        g = make_group(orders)
        t = make_endo(g, matrix)
    except NonFiniteGroup as exc:
        raise InvalidInputSpec(f"bad group: {exc}") from exc
    except IllDefinedHom as exc:
        raise InvalidInputSpec(f"ill-defined matrix: {exc}") from exc
    except Exception as exc:
        raise InvalidInputSpec(str(exc)) from exc
    return g, t


# ---------------------------------------------------------------------------
# info


def info_report(spec: InputSpec) -> dict:
    """Invariants of the quandle defined by the input document.

    The fields tied to the structure theorem (fundamental group, simple
    connectivity) are withheld as null when they do not apply: the
    fundamental group needs an automorphism, and the simple-connectivity
    flag additionally needs connectivity.
    """
    g, t = build_group_endo(spec)
    auto = is_automorphism(g, t)
    s = s_group(g, t)
    connected = is_connected_linear(g, t)
    pi1_factors = None
    simply = None
    if auto:
        ctx = adjoint.make_context(g, t, s=s)
        result = adjoint.pi1(ctx)
        pi1_factors = list(result.invariant_factors)
        if connected:
            simply = not result.invariant_factors
    return {
        "orders": list(g.orders),
        "automorphism_valid": auto,
        "connected": connected,
        "s_invariant_factors": list(s.invariant_factors),
        "pi1_invariant_factors": pi1_factors,
        "simply_connected": simply,
    }


# ---------------------------------------------------------------------------
# verify


def _entry(result: adjoint.CheckResult, asserted: bool = True) -> dict:
    return {
        "name": result.name,
        "passed": result.passed,
        "checked": result.checked,
        "counterexample": result.counterexample,
        "asserted": asserted,
        "skipped": False,
    }


def _skipped(name: str, note: str) -> dict:
    return {
        "name": name,
        "passed": None,
        "checked": 0,
        "counterexample": None,
        "asserted": False,
        "skipped": True,
        "note": note,
    }


def verify_report(spec: InputSpec, depth: str = "full", seed: int = 0,
                  cap: int = DEFAULT_TABLE_CAP) -> dict:
    """Run every verification suite the input admits.

    Checks outside the structure theorem's scope on non-connected input
    are still run and recorded but not asserted: they do not count
    against the overall outcome.
    """
    if depth not in DEPTH_PRESETS:
        raise InvalidInputSpec(f"unknown depth {depth!r}")
    preset = DEPTH_PRESETS[depth]
    g, t = build_group_endo(spec)
    if not is_automorphism(g, t):
        raise InvalidInputSpec("matrix is not an automorphism; verification needs one")
    ctx = adjoint.make_context(g, t)
    checks: list[dict] = []

    if g.cardinality <= cap:
        table = build_alexander_table(g, t, cap=cap)
        ok, violation = is_quandle(table)
        checks.append(_entry(adjoint.CheckResult(
            "quandle-axioms", ok, table.n ** 3,
            None if ok else f"{violation.axiom} at {violation.witness}")))
        orbit_ok = is_connected(table) == ctx.connected
        checks.append(_entry(adjoint.CheckResult(
            "connectivity-agreement", orbit_ok, table.n, None)))
    else:
        checks.append(_skipped("quandle-axioms", f"group larger than cap {cap}"))
        checks.append(_skipped("connectivity-agreement", f"group larger than cap {cap}"))

    checks.append(_entry(adjoint.check_phi_relations(ctx)))

    for result in adjoint.verify_identity_suite(
        ctx, max_triples=preset["max_triples"], seed=seed
    ):
        asserted = ctx.connected or result.name not in adjoint.THEOREM_SCOPE_CHECKS
        checks.append(_entry(result, asserted=asserted))

    for result in adjoint.check_group_axioms(
        ctx, k_values=preset["k_values"], max_triples=preset["max_assoc"], seed=seed
    ):
        checks.append(_entry(result))
    checks.append(_entry(adjoint.check_epsilon_additivity(ctx, k_values=preset["k_values"])))
    checks.append(_entry(adjoint.check_degree_zero_law(ctx)))
    for result in adjoint.check_action_laws(ctx, k_values=preset["k_values"]):
        checks.append(_entry(result))
    checks.append(_entry(adjoint.check_zero_orbit(ctx)))
    checks.append(_entry(adjoint.check_stabilizer_size(ctx)))

    if ctx.s.tensor.cardinality <= ORACLE_TENSOR_LIMIT:
        size, census = oracle.quotient_census(
            ctx.s.tensor.gen_orders,
            _one_minus_tau_columns(ctx),
        )
        factors = ctx.s.invariant_factors
        agree = size == ctx.s.order and census == oracle.census_from_factors(factors)
        checks.append(_entry(adjoint.CheckResult(
            "coker-enumeration-oracle", agree, size,
            None if agree else f"factors {factors} vs census {dict(census)}")))
    else:
        checks.append(_skipped("coker-enumeration-oracle", "tensor square too large to enumerate"))

    if g.cardinality <= cap:
        agree = (oracle.endo_image_size(g, t) == g.cardinality) == is_automorphism(g, t)
        checks.append(_entry(adjoint.CheckResult(
            "automorphism-enumeration-oracle", agree, g.cardinality, None)))
    else:
        checks.append(_skipped("automorphism-enumeration-oracle", f"group larger than cap {cap}"))

    if ctx.connected:
        checks.append(_entry(adjoint.check_word_roundtrips(
            ctx, count=preset["roundtrips"], seed=seed)))
    else:
        checks.append(_skipped("word-roundtrip", "quandle is not connected"))

    passed = all(c["passed"] for c in checks if c["asserted"] and not c["skipped"])
    return {
        "orders": list(g.orders),
        "depth": depth,
        "seed": seed,
        "connected": ctx.connected,
        "passed": passed,
        "checks": checks,
    }


def _one_minus_tau_columns(ctx: adjoint.AdjContext):
    from .tensor import tau_matrix

    ts = ctx.s.tensor
    tau = tau_matrix(ts, ctx.endo)
    n = ts.rank
    return [
        [((1 if row == col else 0) - tau[row][col]) for col in range(n)]
        for row in range(n)
    ]


# ---------------------------------------------------------------------------
# scan


def scan_report(p: int, cap: int = DEFAULT_SCAN_CAP) -> dict:
    """All quadratic quandles over F_p, with closed-formula cross-checks.

    For each pair (a, b) with b != 0 the pipeline computes connectivity
    and S(M, T); connectivity must match 1 + a + b != 0, and on
    connected records S must be trivial exactly when b^2 + ab - a - 1 is
    nonzero mod p and isomorphic to Z/p otherwise.  Any mismatch is a
    hard error for the caller to surface.
    """
    if not _is_prime(p):
        raise InvalidInputSpec(f"{p} is not prime")
    if p > cap:
        raise InvalidInputSpec(f"prime {p} exceeds the cap {cap}")
    records = []
    mismatches = []
    for a in range(p):
        for b in range(1, p):
            g, t = build_group_endo(InputSpec(prime=p, poly=(a, b)))
            connected = is_connected_linear(g, t)
            factors = s_group(g, t).invariant_factors
            formula_value = (b * b + a * b - a - 1) % p
            record = {
                "p": p,
                "a": a,
                "b": b,
                "connected": connected,
                "s_factors": list(factors),
                "simply_connected": not factors,
                "formula_value": formula_value,
            }
            records.append(record)
            if connected != ((1 + a + b) % p != 0):
                mismatches.append(f"connectivity mismatch at (a={a}, b={b})")
            if connected:
                if (not factors) != (formula_value != 0):
                    mismatches.append(f"triviality mismatch at (a={a}, b={b})")
                elif factors and factors != (p,):
                    mismatches.append(f"factor mismatch at (a={a}, b={b}): {factors}")
    return {
        "prime": p,
        "records": records,
        "formula_agrees": not mismatches,
        "mismatches": mismatches,
    }


# ---------------------------------------------------------------------------
# snf debug


def snf_report(matrix) -> dict:
    try:
        rows = [[int(v) for v in row] for row in matrix]
    except (TypeError, ValueError) as exc:
        raise InvalidInputSpec(f"matrix entries must be integers: {exc}") from exc
    if rows and any(len(r) != len(rows[0]) for r in rows):
        raise InvalidInputSpec("matrix rows must have equal length")
    res = smith_normal_form(rows)
    return {
        "diagonal": list(res.diagonal()),
        "d": [list(r) for r in res.D],
        "u": [list(r) for r in res.U],
        "v": [list(r) for r in res.V],
    }

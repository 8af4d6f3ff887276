"""Pydantic request and response models for the HTTP service."""

from __future__ import annotations

from typing import Literal, Optional

from pydantic import BaseModel, Field, model_validator


class GroupSpec(BaseModel):
    """Either an explicit (orders, matrix) pair or a quadratic (prime, poly) pair."""

    orders: Optional[list[int]] = None
    matrix: Optional[list[list[int]]] = None
    prime: Optional[int] = None
    poly: Optional[tuple[int, int]] = None

    @model_validator(mode="after")
    def _one_shape(self):
        explicit = self.orders is not None or self.matrix is not None
        quadratic = self.prime is not None or self.poly is not None
        if explicit == quadratic:
            raise ValueError("provide exactly one of {orders, matrix} or {prime, poly}")
        if explicit and (self.orders is None or self.matrix is None):
            raise ValueError("orders and matrix are both required")
        if quadratic and (self.prime is None or self.poly is None):
            raise ValueError("prime and poly are both required")
        return self

    def as_document(self) -> dict:
        if self.orders is not None:
            return {"orders": self.orders, "matrix": self.matrix}
        return {"prime": self.prime, "poly": list(self.poly)}


class InfoResponse(BaseModel):
    orders: list[int]
    automorphism_valid: bool
    connected: bool
    s_invariant_factors: list[int]
    pi1_invariant_factors: Optional[list[int]]
    simply_connected: Optional[bool]


class CheckOutcome(BaseModel):
    name: str
    passed: Optional[bool]
    checked: int
    counterexample: Optional[str] = None
    asserted: bool
    skipped: bool
    note: Optional[str] = None


class VerifyRequest(BaseModel):
    spec: GroupSpec
    depth: Literal["quick", "full"] = "full"
    seed: int = 0
    cap: int = Field(default=4096, ge=1)


class VerifyResponse(BaseModel):
    orders: list[int]
    depth: str
    seed: int
    connected: bool
    passed: bool
    checks: list[CheckOutcome]


class ScanRequest(BaseModel):
    prime: int
    cap: int = Field(default=23, ge=2)


class ScanRecord(BaseModel):
    p: int
    a: int
    b: int
    connected: bool
    s_factors: list[int]
    simply_connected: bool
    formula_value: int


class ScanResponse(BaseModel):
    prime: int
    records: list[ScanRecord]
    formula_agrees: bool
    mismatches: list[str]


class SnfRequest(BaseModel):
    matrix: list[list[int]]


class SnfResponse(BaseModel):
    diagonal: list[int]
    d: list[list[int]]
    u: list[list[int]]
    v: list[list[int]]

"""HTTP service exposing the computations over JSON.

Run with:  uvicorn quandle_adjoint.service:app
"""

from __future__ import annotations

from fastapi import FastAPI, HTTPException

from . import __version__
from .errors import InvalidInputSpec
from .reports import info_report, parse_input_spec, scan_report, snf_report, verify_report
from .schemas import (
    GroupSpec,
    InfoResponse,
    ScanRequest,
    ScanResponse,
    SnfRequest,
    SnfResponse,
    VerifyRequest,
    VerifyResponse,
)

app = FastAPI(
    title="quandle-adjoint",
    description="Adjoint and fundamental groups of finite Alexander quandles.",
    version=__version__,
)


def _spec_or_400(spec: GroupSpec):
    try:
        return parse_input_spec(spec.as_document())
    except InvalidInputSpec as exc:
        raise HTTPException(status_code=400, detail=str(exc)) from exc


@app.get("/health")
def health() -> dict:
    return {"status": "ok", "version": __version__}


@app.post("/info", response_model=InfoResponse)
def info(spec: GroupSpec):
    parsed = _spec_or_400(spec)
    try:
        return info_report(parsed)
    except InvalidInputSpec as exc:
        raise HTTPException(status_code=400, detail=str(exc)) from exc


@app.post("/verify", response_model=VerifyResponse)
def verify(request: VerifyRequest):
    parsed = _spec_or_400(request.spec)
    try:
        return verify_report(parsed, depth=request.depth, seed=request.seed, cap=request.cap)
    except InvalidInputSpec as exc:
        raise HTTPException(status_code=400, detail=str(exc)) from exc


@app.post("/scan", response_model=ScanResponse)
def scan(request: ScanRequest):
    try:
        return scan_report(request.prime, cap=request.cap)
    except InvalidInputSpec as exc:
        raise HTTPException(status_code=400, detail=str(exc)) from exc


@app.post("/snf", response_model=SnfResponse)
def snf(request: SnfRequest):
    try:
        return snf_report(request.matrix)
    except InvalidInputSpec as exc:
        raise HTTPException(status_code=400, detail=str(exc)) from exc

"""HTTP service wrapping the settlement engine.

Stateless compute endpoints only: an instance arrives whole (sealed bids
and matrices) and the settlement, generated instance or sweep report comes
back in one response. There is no bid-submission protocol, no storage and
no auth. Run with:

    uvicorn fairauction.service:app
    # or: python -m fairauction.service
"""

from __future__ import annotations

from fastapi import FastAPI, HTTPException

from ..generator import generate_instance
from ..instance_io import instance_from_dict, instance_to_dict
from ..model import AuctionError, InternalInvariantViolation, InvalidInstance
from ..report import report_to_dict, sweep_to_dict
from ..settlement import settle
from ..sweep import sweep_propositions
from ..wdp import solve_wdp_bruteforce
from .schemas import (
    GenerateRequest,
    HealthPayload,
    InstancePayload,
    SettlementReportPayload,
    SolveRequest,
    SweepReportPayload,
    SweepRequest,
)

app = FastAPI(
    title="fairauction",
    description="Combinatorial-auction settlement with fairness-adjusted payments",
    version="0.1.0",
)


def _domain_error(exc: AuctionError) -> HTTPException:
    if isinstance(exc, InvalidInstance):
        detail = [str(v) for v in exc.violations]
    else:
        detail = f"{type(exc).__name__}: {exc}"
    return HTTPException(status_code=400, detail=detail)


@app.get("/health", response_model=HealthPayload)
def health() -> HealthPayload:
    return HealthPayload(status="ok")


@app.post("/solve", response_model=SettlementReportPayload)
def solve(request: SolveRequest) -> dict:
    try:
        instance = instance_from_dict(request.instance.model_dump())
        report = settle(instance)
        if request.oracle:
            oracle = solve_wdp_bruteforce(instance)
            if oracle != report.allocation:
                raise HTTPException(
                    status_code=500,
                    detail="solver allocation disagrees with the brute-force oracle",
                )
    except InternalInvariantViolation as exc:
        raise HTTPException(status_code=500, detail=str(exc))
    except AuctionError as exc:
        raise _domain_error(exc)
    return report_to_dict(instance, report)


@app.post("/generate", response_model=InstancePayload)
def generate(request: GenerateRequest) -> dict:
    try:
        instance = generate_instance(
            seed=request.seed,
            resources=request.resources,
            bidders=request.bidders,
            max_amount=request.max_amount,
        )
    except ValueError as exc:
        raise HTTPException(status_code=400, detail=str(exc))
    return instance_to_dict(instance)


@app.post("/sweep", response_model=SweepReportPayload)
def sweep(request: SweepRequest) -> dict:
    from fractions import Fraction

    try:
        grid = [Fraction(value) for value in request.grid]
    except (ValueError, ZeroDivisionError) as exc:
        raise HTTPException(status_code=400, detail=f"bad grid value: {exc}")
    try:
        instance = instance_from_dict(request.instance.model_dump())
        result = sweep_propositions(instance, request.axis, grid, seed=request.seed)
    except ValueError as exc:
        raise HTTPException(status_code=400, detail=str(exc))
    except AuctionError as exc:
        raise _domain_error(exc)
    return sweep_to_dict(result)

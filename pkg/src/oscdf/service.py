"""HTTP facade over the evaluator: JSON in, JSON out, one POST per operation."""

from __future__ import annotations

import time

from fastapi import FastAPI, Request
from fastapi.responses import JSONResponse
from pydantic import BaseModel

from . import __version__
from .combinatorics import count_index_vectors
from .errors import SizeCapError, SpecError
from .problems import evaluate_problem, problem_from_dict
from .verification import run_verification


class DistributionModel(BaseModel):
    kind: str
    a: float | None = None
    b: float | None = None
    rate: float | None = None
    c: float | None = None
    support: list[float] | None = None
    probs: list[float] | None = None


class PopulationModel(BaseModel):
    size: int
    dist: DistributionModel


class QueryModel(BaseModel):
    indices: list[int]
    thresholds: list[float]


class ProblemModel(BaseModel):
    populations: list[PopulationModel]
    query: QueryModel
    algorithm: str = "auto"


class EvalResponse(BaseModel):
    value: float
    algorithm: str
    term_count: int
    elapsed_seconds: float


class CountRequest(BaseModel):
    indices: list[int]
    m: int


class CountResponse(BaseModel):
    indices: list[int]
    m: int
    count: int


class VerifyRequest(BaseModel):
    max_m: int = 6
    trials: int = 50
    seed: int = 0
    samples: int = 0


class VerifyResponse(BaseModel):
    ok: bool
    trials: int
    pairings_checked: int
    failures: list[str]
    report: str


class HealthResponse(BaseModel):
    status: str
    version: str


app = FastAPI(
    title="oscdf",
    description="Exact joint CDFs of order statistics from one or more populations.",
    version=__version__,
)


@app.exception_handler(SpecError)
async def _spec_error(request: Request, exc: SpecError):
    return JSONResponse(status_code=422, content={"detail": str(exc), "field": exc.field})


@app.exception_handler(SizeCapError)
async def _cap_error(request: Request, exc: SizeCapError):
    return JSONResponse(status_code=400, content={"detail": str(exc), "cap": exc.cap})


@app.exception_handler(ValueError)
async def _value_error(request: Request, exc: ValueError):
    return JSONResponse(status_code=400, content={"detail": str(exc)})


@app.get("/health", response_model=HealthResponse)
def health() -> HealthResponse:
    return HealthResponse(status="ok", version=__version__)


@app.post("/eval", response_model=EvalResponse)
def evaluate(problem: ProblemModel, parallel: bool = False) -> EvalResponse:
    parsed = problem_from_dict(problem.model_dump(exclude_none=True))
    start = time.perf_counter()
    result = evaluate_problem(parsed, parallel=parallel)
    elapsed = time.perf_counter() - start
    return EvalResponse(
        value=result.value,
        algorithm=result.algorithm,
        term_count=result.term_count,
        elapsed_seconds=elapsed,
    )


@app.post("/count", response_model=CountResponse)
def count(request: CountRequest) -> CountResponse:
    return CountResponse(
        indices=request.indices,
        m=request.m,
        count=count_index_vectors(request.indices, request.m),
    )


@app.post("/verify", response_model=VerifyResponse)
def verify(request: VerifyRequest) -> VerifyResponse:
    report = run_verification(
        max_m=request.max_m, trials=request.trials, seed=request.seed, samples=request.samples
    )
    return VerifyResponse(
        ok=report.ok,
        trials=report.trials,
        pairings_checked=report.pairings_checked,
        failures=[f.describe() for f in report.failures],
        report=report.format(),
    )

"""HTTP front end: every pipeline operation behind a JSON endpoint."""

from __future__ import annotations

from fastapi import FastAPI, HTTPException
from pydantic import BaseModel, Field

from . import reports
from .gauss import GaussCodeError, IndexOutOfRange
from .words import BadLetter

app = FastAPI(
    title="cylknot",
    description=(
        "Sliceness obstruction calculator for homologically trivial knots "
        "in the solid torus, computed from Gauss codes."
    ),
    version="0.1.0",
)

_INPUT_ERRORS = (GaussCodeError, BadLetter, IndexOutOfRange)


class InvariantRequest(BaseModel):
    gauss_code: str
    ref: int = 1


class ReduceRequest(BaseModel):
    word: str


class EqualRequest(BaseModel):
    word1: str
    word2: str
    oracle: bool = False
    max_len: int = Field(16, ge=1, le=32)
    budget: int = Field(200000, ge=1, le=1000000)


class OrbitRequest(BaseModel):
    code1: str
    code2: str


class FuzzRequest(BaseModel):
    trials: int = Field(100, ge=1, le=20000)
    max_chords: int = Field(8, ge=0, le=64)
    steps: int = Field(10, ge=1, le=100)
    seed: int = 0
    loose: bool = False


class Z2Model(BaseModel):
    raw: tuple[int, int]
    basis: tuple[int, int] | None


class WordReport(BaseModel):
    command: str
    input: dict
    word: str
    normal_form: str
    canonical_pair: tuple[str, str]
    z2: Z2Model | None
    trivial: bool
    verdict: str


class OracleOutcome(BaseModel):
    proved: bool
    trace: list[str]
    expanded: int


class EqualReport(BaseModel):
    command: str
    input: dict
    equal: bool
    normal_form1: str
    normal_form2: str
    oracle: OracleOutcome | None = None


class OrbitReport(BaseModel):
    command: str
    input: dict
    equal: bool
    pair1: tuple[str, str]
    pair2: tuple[str, str]


class FuzzRecord(BaseModel):
    trial: int
    seed: int
    initial_code: str
    moves: list[str]
    initial_pair: tuple[str, str]
    final_pair: tuple[str, str]
    pass_: bool = Field(alias="pass")

    model_config = {"populate_by_name": True}


class FuzzReport(BaseModel):
    command: str
    input: dict
    passed: bool
    records: list[FuzzRecord]


class Check(BaseModel):
    name: str
    passed: bool
    detail: str


class SelfcheckReport(BaseModel):
    command: str
    input: dict
    passed: bool
    checks: list[Check]


def _guarded(fn, *args):
    try:
        return fn(*args)
    except _INPUT_ERRORS as exc:
        raise HTTPException(status_code=400, detail=str(exc)) from exc


@app.get("/health")
def health():
    return {"status": "ok"}


@app.post("/invariant", response_model=WordReport)
def invariant(request: InvariantRequest):
    return _guarded(reports.invariant_report, request.gauss_code, request.ref)


@app.post("/reduce", response_model=WordReport)
def reduce(request: ReduceRequest):
    return _guarded(reports.reduce_report, request.word)


@app.post("/equal", response_model=EqualReport, response_model_exclude_none=True)
def equal(request: EqualRequest):
    try:
        return reports.equal_report(
            request.word1,
            request.word2,
            use_oracle=request.oracle,
            max_len=request.max_len,
            budget=request.budget,
        )
    except _INPUT_ERRORS as exc:
        raise HTTPException(status_code=400, detail=str(exc)) from exc


@app.post("/orbit", response_model=OrbitReport)
def orbit(request: OrbitRequest):
    return _guarded(reports.orbit_report, request.code1, request.code2)


@app.post("/fuzz", response_model=FuzzReport)
def fuzz(request: FuzzRequest):
    return reports.fuzz_report(
        request.trials, request.max_chords, request.steps, request.seed, request.loose
    )


@app.get("/selfcheck", response_model=SelfcheckReport)
def run_selfcheck():
    return reports.selfcheck_report()

"""HTTP front end: a FastAPI service wrapping the kernel.

Every endpoint mirrors one CLI subcommand and returns the same JSON payload
the CLI emits under ``--json``.  The kernel is pure and its values immutable,
so a single process serves concurrent clients safely.  Domain errors map to
HTTP 422 with the kernel error name in the body.

Run with: ``uvicorn oreseries.service:app``
"""

from __future__ import annotations

from fastapi import FastAPI, Request
from fastapi.responses import JSONResponse
from pydantic import BaseModel, Field

from . import cli
from .errors import OreSeriesError

app = FastAPI(
    title="oreseries",
    description="Exact twisted power series kernel: expansion, rationality "
    "tests, linear representations, minimization and the Hadamard algebra.",
    version="0.1.0",
)


@app.exception_handler(OreSeriesError)
async def _domain_error(_: Request, exc: OreSeriesError) -> JSONResponse:
    return JSONResponse(status_code=422, content={"error": exc.name, "detail": str(exc)})


class ExpandRequest(BaseModel):
    field: str
    fraction: str
    n: int = Field(ge=1, description="number of coefficients to produce")


class SeriesResponse(BaseModel):
    field: str
    coeffs: list[str]
    precision: int


class GuessRequest(BaseModel):
    field: str
    coeffs: str = Field(description="series literal, e.g. '[1, 1, 1, 1, 1, 1]'")
    max_order: int | None = None


class KroneckerRequest(BaseModel):
    field: str
    coeffs: str
    m_max: int | None = None


class FractionRequest(BaseModel):
    field: str
    fraction: str


class RepRequest(BaseModel):
    field: str | None = None
    rep: dict


class TwoRepRequest(BaseModel):
    field: str | None = None
    rep: dict
    rep2: dict


class HadamardRequest(BaseModel):
    field: str | None = None
    coeffs: str | None = None
    coeffs2: str | None = None
    rep: dict | None = None
    rep2: dict | None = None


class ConvertRequest(BaseModel):
    field: str | None = None
    to: str = Field(pattern="^(fraction|rep|recurrence)$")
    fraction: str | None = None
    rep: dict | None = None
    recurrence: dict | None = None
    seed: str | None = None
    kind: str = Field(default="denominator", pattern="^(denominator|syntactic)$")


class RankResponse(BaseModel):
    field: str
    rank: int


class MinpolyResponse(BaseModel):
    field: str
    minimal_polynomial: str


class RegularityResponse(BaseModel):
    field: str
    regular: bool
    negative_degree: bool
    minpoly_constant_nonzero: bool
    reduced_rep_matrix_invertible: bool


@app.get("/health")
async def health() -> dict:
    return {"service": "oreseries", "status": "ok"}


@app.post("/expand", response_model=SeriesResponse)
async def expand(req: ExpandRequest):
    _, payload = cli.cmd_expand(req.field, req.fraction, req.n)
    return payload


@app.post("/guess")
async def guess(req: GuessRequest) -> dict:
    _, payload = cli.cmd_guess(req.field, req.coeffs, req.max_order)
    return payload


@app.post("/kronecker")
async def kronecker(req: KroneckerRequest) -> dict:
    _, payload = cli.cmd_kronecker(req.field, req.coeffs, req.m_max)
    return payload


@app.post("/minpoly", response_model=MinpolyResponse)
async def minpoly(req: FractionRequest):
    _, payload = cli.cmd_minpoly(req.field, req.fraction)
    return payload


@app.post("/rank", response_model=RankResponse)
async def rank(req: FractionRequest):
    _, payload = cli.cmd_rank(req.field, req.fraction)
    return payload


@app.post("/minimize")
async def minimize(req: RepRequest) -> dict:
    _, payload = cli.cmd_minimize(req.field, req.rep)
    return payload


@app.post("/similar")
async def similar(req: TwoRepRequest) -> dict:
    _, payload = cli.cmd_similar(req.field, req.rep, req.rep2)
    return payload


@app.post("/hadamard")
async def hadamard(req: HadamardRequest) -> dict:
    _, payload = cli.cmd_hadamard(
        req.field, coeffs=req.coeffs, coeffs2=req.coeffs2, rep=req.rep, rep2=req.rep2
    )
    return payload


@app.post("/regular", response_model=RegularityResponse)
async def regular(req: FractionRequest):
    _, payload = cli.cmd_regular(req.field, req.fraction)
    return payload


@app.post("/convert")
async def convert(req: ConvertRequest) -> dict:
    _, payload = cli.cmd_convert(
        req.field, req.to, fraction=req.fraction, rep=req.rep,
        recurrence=req.recurrence, seed=req.seed, kind=req.kind,
    )
    return payload


def run(host: str = "127.0.0.1", port: int = 8000) -> None:  # pragma: no cover
    import uvicorn

    uvicorn.run(app, host=host, port=port)


if __name__ == "__main__":  # pragma: no cover
    run()

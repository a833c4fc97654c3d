"""FastAPI service wrapping the core package; the CLI is a thin client of
the same dispatch layer."""

from __future__ import annotations

from fastapi import FastAPI, HTTPException

from ..harness.runner import RunResult, ValidationFailure, execute
from . import models as m

app = FastAPI(
    title="sclab",
    description=(
        "Exact-arithmetic Schubert calculus laboratory: problem degrees, "
        "real-solution frequency tables over osculating and secant flags, "
        "and Frobenius cycle-type sampling for Galois groups."
    ),
    version="0.1.0",
)


def _run(config) -> RunResult:
    try:
        return execute(config)
    except ValidationFailure as e:
        raise HTTPException(status_code=400, detail=str(e)) from e


@app.get("/health")
def health() -> dict:
    return {"status": "ok"}


@app.post("/degree", response_model=m.DegreeResponse)
def degree(req: m.DegreeRequest):
    return _run(m.to_config(req)).payload


@app.post("/tableaux", response_model=m.TableauxResponse)
def tableaux(req: m.TableauxRequest):
    return _run(m.to_config(req)).payload


@app.post("/real", response_model=m.TableResponse)
def real(req: m.RealRequest):
    r = _run(m.to_config(req))
    return m.TableResponse(
        table=r.payload, records=r.records, csv=r.csv or "", exit_code=r.exit_code
    )


@app.post("/galois", response_model=m.GaloisResponse)
def galois(req: m.GaloisRequest):
    r = _run(m.to_config(req))
    return m.GaloisResponse(result=r.payload, exit_code=r.exit_code)


@app.post("/family", response_model=m.FamilyResponse)
def family(req: m.FamilyRequest):
    return m.FamilyResponse(result=_run(m.to_config(req)).payload)


@app.post("/vakil", response_model=m.VakilResponse)
def vakil(req: m.VakilRequest):
    return _run(m.to_config(req)).payload


@app.post("/secant-check", response_model=m.TableResponse)
def secant_check(req: m.SecantRequest):
    r = _run(m.to_config(req))
    return m.TableResponse(
        table=r.payload, records=r.records, csv=r.csv or "", exit_code=r.exit_code
    )

"""Request/response models for the service; requests mirror the CLI flags."""

from __future__ import annotations

from typing import Literal, Optional

from pydantic import BaseModel, Field

from ..harness.config import ExperimentConfig, ScheduleRow


class DegreeRequest(BaseModel):
    k: int
    n: int
    problem: str


class DegreeResponse(BaseModel):
    problem: str
    k: int
    n: int
    degree: int
    wronski_degree: Optional[int] = None


class TableauxRequest(BaseModel):
    outer: str
    inner: str = ""


class TableauxResponse(BaseModel):
    outer: str
    inner: str
    standard_tableaux: int
    sign_imbalance: int


class RealRequest(BaseModel):
    k: int
    n: int
    problem: str
    schedule: list[ScheduleRow]
    seed: int = 0
    jobs: int = 1
    backend: Literal["modular", "rational", "auto"] = "modular"


class TableResponse(BaseModel):
    table: dict
    records: list[dict]
    csv: str
    exit_code: int


class GaloisRequest(BaseModel):
    k: int
    n: int
    problem: str
    budget: Optional[int] = Field(default=None, description="default 2*degree")
    seed: int = 0
    jobs: int = 1
    prime: Optional[int] = None


class GaloisResponse(BaseModel):
    result: dict
    exit_code: int


class FamilyRequest(BaseModel):
    k: int
    n: int
    rho: Optional[int] = None


class FamilyResponse(BaseModel):
    result: dict


class VakilRequest(BaseModel):
    n: int
    problem: str


class VakilResponse(BaseModel):
    n: int
    conditions: list[int]
    at_least_alternating: bool
    trace: dict


class SecantRequest(BaseModel):
    k: int
    n: int
    problem: str
    instances: int = 50
    seed: int = 0
    backend: Literal["modular", "rational", "auto"] = "modular"


def to_config(req) -> ExperimentConfig:
    """Build the shared ExperimentConfig from a typed request."""
    if isinstance(req, DegreeRequest):
        return ExperimentConfig(command="degree", k=req.k, n=req.n, problem=req.problem)
    if isinstance(req, TableauxRequest):
        return ExperimentConfig(command="tableaux", outer=req.outer, inner=req.inner)
    if isinstance(req, RealRequest):
        return ExperimentConfig(
            command="real",
            k=req.k,
            n=req.n,
            problem=req.problem,
            schedule=req.schedule,
            seed=req.seed,
            jobs=req.jobs,
            backend=req.backend,
        )
    if isinstance(req, GaloisRequest):
        return ExperimentConfig(
            command="galois",
            k=req.k,
            n=req.n,
            problem=req.problem,
            budget=req.budget,
            seed=req.seed,
            jobs=req.jobs,
            prime=req.prime,
        )
    if isinstance(req, FamilyRequest):
        return ExperimentConfig(command="family", k=req.k, n=req.n, rho=req.rho)
    if isinstance(req, VakilRequest):
        return ExperimentConfig(command="vakil", n=req.n, problem=req.problem)
    if isinstance(req, SecantRequest):
        return ExperimentConfig(
            command="secant-check",
            k=req.k,
            n=req.n,
            problem=req.problem,
            schedule=[ScheduleRow(type="-", instances=req.instances)],
            seed=req.seed,
            backend=req.backend,
        )
    raise TypeError(f"unknown request {req!r}")

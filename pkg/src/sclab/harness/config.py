"""Experiment configuration: one model shared by the CLI flags, the JSON
config file, and the service request bodies."""

from __future__ import annotations

from typing import Literal, Optional

from pydantic import BaseModel, Field, model_validator


class ScheduleRow(BaseModel):
    type: str = Field(description="rho per distinct partition, e.g. '4' or '1,5'")
    instances: int = Field(ge=1)


class ExperimentConfig(BaseModel):
    """Everything a run needs; the seed fully determines all random draws."""

    command: Literal[
        "degree", "tableaux", "real", "galois", "family", "vakil", "secant-check"
    ]
    k: int = 0
    n: int = 0
    problem: str = ""
    schedule: list[ScheduleRow] = Field(default_factory=list)
    budget: Optional[int] = None
    rho: Optional[int] = None
    outer: str = ""
    inner: str = ""
    seed: int = 0
    jobs: int = 1
    prime: Optional[int] = None  # fixed prime policy; None = random 31-bit
    backend: Literal["modular", "rational", "auto"] = "modular"
    out: Optional[str] = None
    format: Literal["json", "csv"] = "json"

    @model_validator(mode="after")
    def _check(self):
        if self.command in ("degree", "real", "galois", "secant-check"):
            if self.k <= 0 or self.n <= 0:
                raise ValueError(f"{self.command} needs --k and --n")
            if not self.problem:
                raise ValueError(f"{self.command} needs --problem")
        if self.command == "family":
            if self.k <= 0 or self.n <= 0:
                raise ValueError("family needs --k and --n")
        if self.command == "vakil" and (self.n <= 0 or not self.problem):
            raise ValueError("vakil needs --n and --problem")
        if self.command == "tableaux" and not self.outer:
            raise ValueError("tableaux needs --outer")
        if self.jobs < 1:
            raise ValueError("jobs must be >= 1")
        return self

    def prime_policy(self) -> tuple:
        if self.prime is not None:
            return ("fixed", self.prime)
        return ("random", 10**4, 2**31)

"""Command dispatch: every CLI subcommand and service endpoint runs through
`execute`, so results are identical no matter which surface invoked them."""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from fractions import Fraction
from math import comb

from ..combinat import (
    Partition,
    SchubertProblem,
    count_tableaux,
    problem_degree,
    sign_imbalance,
    SkewShape,
    wronski_degree,
)
from ..family import box_partition, family_bounds, nu
from ..galois import frobenius_algorithm, vakil_alternating_gr2
from ..realcount import (
    FrequencyTable,
    count_real_flags,
    run_experiment,
)
from ..schubert import secant_flag, overlap_number
from ..seeding import subseed
from .config import ExperimentConfig
from .problems import parse_partition, parse_problem, parse_type

EXIT_OK = 0
EXIT_VALIDATION = 2
EXIT_DEGENERACY = 3


@dataclass
class RunResult:
    payload: dict
    records: list[dict] = field(default_factory=list)
    csv: str | None = None
    exit_code: int = EXIT_OK
    truncated: bool = False


class ValidationFailure(ValueError):
    """User input failed validation; maps to exit code 2."""


def execute(config: ExperimentConfig) -> RunResult:
    try:
        handler = _HANDLERS[config.command]
    except KeyError:
        raise ValidationFailure(f"unknown command {config.command!r}") from None
    try:
        return handler(config)
    except (ValueError, KeyError) as e:
        if isinstance(e, ValidationFailure):
            raise
        raise ValidationFailure(str(e)) from e


def _cmd_degree(config: ExperimentConfig) -> RunResult:
    problem = parse_problem(config.problem, config.k, config.n)
    d = problem_degree(problem)
    payload = {
        "problem": problem.render(),
        "k": config.k,
        "n": config.n,
        "degree": d,
    }
    if all(lam == Partition((1,)) for lam in problem.conditions):
        payload["wronski_degree"] = wronski_degree(config.k, config.n)
    return RunResult(payload=payload)


def _cmd_tableaux(config: ExperimentConfig) -> RunResult:
    outer = parse_partition(config.outer)
    inner = parse_partition(config.inner) if config.inner else Partition()
    shape = SkewShape(outer, inner)
    return RunResult(
        payload={
            "outer": outer.render(),
            "inner": inner.render(),
            "standard_tableaux": count_tableaux(shape),
            "sign_imbalance": sign_imbalance(shape),
        }
    )


def _cmd_real(config: ExperimentConfig) -> RunResult:
    problem = parse_problem(config.problem, config.k, config.n)
    if not config.schedule:
        raise ValidationFailure("real needs --type and --instances")
    schedule = [
        (parse_type(row.type, problem), row.instances) for row in config.schedule
    ]
    records: list[dict] = []
    table = run_experiment(
        problem,
        schedule,
        seed=config.seed,
        jobs=config.jobs,
        backend=config.backend,
        record_sink=lambda rec: records.append(rec.to_json()),
    )
    return _table_result(table, records)


def _cmd_galois(config: ExperimentConfig) -> RunResult:
    problem = parse_problem(config.problem, config.k, config.n)
    d = problem_degree(problem)
    budget = config.budget if config.budget else 2 * d
    verdict = frobenius_algorithm(
        problem,
        budget=budget,
        seed=config.seed,
        prime_policy=config.prime_policy(),
        jobs=config.jobs,
    )
    payload = verdict.to_json(problem.render())
    code = EXIT_OK if verdict.census.accepted else EXIT_DEGENERACY
    return RunResult(payload=payload, exit_code=code)


def _cmd_family(config: ExperimentConfig) -> RunResult:
    k, n = config.k, config.n
    box = box_partition(k, n)
    payload: dict = {
        "k": k,
        "n": n,
        "rectangle": box.render(),
        "complex_count": comb(n - 2, k - 1),
    }
    if config.rho is not None:
        bounds = family_bounds(k, n, config.rho)
        payload.update(
            {
                "rho_box": config.rho,
                "lower": bounds.lower,
                "attainable": list(bounds.attainable),
            }
        )
    else:
        payload["nu"] = {
            str(r): nu(k, n, r) for r in range(n - 2, -1, -2)
        }
    return RunResult(payload=payload)


def _cmd_vakil(config: ExperimentConfig) -> RunResult:
    problem = parse_problem(config.problem, 2, config.n)
    a = []
    for lam in problem.conditions:
        if len(lam.parts) != 1:
            raise ValidationFailure("vakil takes special conditions (single parts)")
        a.append(lam.parts[0])
    verdict = vakil_alternating_gr2(tuple(a), config.n)
    return RunResult(
        payload={
            "n": config.n,
            "conditions": a,
            "at_least_alternating": verdict.at_least_alternating,
            "trace": verdict.trace,
        }
    )


def _cmd_secant(config: ExperimentConfig) -> RunResult:
    problem = parse_problem(config.problem, config.k, config.n)
    instances = config.schedule[0].instances if config.schedule else 50
    d = problem_degree(problem)
    table = FrequencyTable(
        problem=problem.render(),
        k=config.k,
        n=config.n,
        degree=d,
        seed=config.seed,
    )
    records: list[dict] = []
    for i in range(instances):
        rng = random.Random(subseed(config.seed, i))
        rec = None
        for retry in range(10):
            point_sets = draw_disjoint_secant_points(
                rng, len(problem.conditions), config.n
            )
            olap = overlap_number(point_sets)
            flags = [secant_flag(ps) for ps in point_sets]
            rec = count_real_flags(
                problem, flags, rng, seed=subseed(config.seed, i, retry),
                backend=config.backend,
            )
            rec.type = {"overlap": olap}
            if rec.valid:
                break
        table.add(rec)
        records.append(rec.to_json())
    return _table_result(table, records)


def draw_disjoint_secant_points(
    rng: random.Random, nflags: int, n: int
) -> list[list[Fraction]]:
    """n rational secancy points per flag, flags in disjoint unit-gapped
    intervals, so the overlap number is zero by construction."""
    out = []
    for i in range(nflags):
        base = Fraction(10 * i)
        pts: set[Fraction] = set()
        while len(pts) < n:
            pts.add(base + Fraction(rng.randint(0, 9 * 50), 50))
        out.append(sorted(pts))
    return out


def _table_result(table: FrequencyTable, records: list[dict]) -> RunResult:
    any_valid = any(r["valid"] for r in records)
    code = EXIT_OK if any_valid or not records else EXIT_DEGENERACY
    return RunResult(
        payload=table.to_json(),
        records=records,
        csv=table.to_csv(),
        exit_code=code,
    )


_HANDLERS = {
    "degree": _cmd_degree,
    "tableaux": _cmd_tableaux,
    "real": _cmd_real,
    "galois": _cmd_galois,
    "family": _cmd_family,
    "vakil": _cmd_vakil,
    "secant-check": _cmd_secant,
}

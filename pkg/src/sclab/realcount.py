"""Real-solution counting: eliminant, Shape-Lemma gate, Sturm count, typed
frequency tables, congruence and lower-bound verdicts."""

from __future__ import annotations

import io
import json
import random
from collections import Counter
from dataclasses import dataclass, field
from fractions import Fraction

from .seeding import subseed

from .combinat import Partition, SchubertProblem, problem_degree, sign_imbalance, SkewShape
from .exactalg import (
    DimensionError,
    ReconstructionError,
    SquarefreeViolationError,
    groebner_eliminate,
    sturm_count,
)
from .schubert import (
    OO,
    FlagMatrix,
    OsculationConfig,
    PairPoint,
    RealPoint,
    assemble_instance,
    flags_instance,
)


class InfeasibleTypeError(ValueError):
    """The requested osculation type cannot be realized for the problem."""


@dataclass
class RealCountRecord:
    """Outcome of one instance of the counting pipeline."""

    problem: str
    k: int
    n: int
    type: dict[str, int]
    parameters: list[str]
    eliminant_degree: int | None
    real_count: int | None
    valid: bool
    seed: int
    rejection: str | None = None

    def to_json(self) -> dict:
        return {
            "problem": self.problem,
            "k": self.k,
            "n": self.n,
            "type": self.type,
            "parameters": self.parameters,
            "eliminant_degree": self.eliminant_degree,
            "real_count": self.real_count,
            "valid": self.valid,
            "seed": self.seed,
            "rejection": self.rejection,
        }


@dataclass
class FrequencyTable:
    """Rows keyed by osculation type; cells count observed real counts."""

    problem: str
    k: int
    n: int
    degree: int
    seed: int
    rows: dict[str, Counter] = field(default_factory=dict)
    rejections: int = 0

    def add(self, record: RealCountRecord):
        key = _type_key(record.type)
        if record.valid:
            self.rows.setdefault(key, Counter())[record.real_count] += 1
        else:
            self.rejections += 1
            self.rows.setdefault(key, Counter())

    def observed_counts(self) -> set[int]:
        out: set[int] = set()
        for c in self.rows.values():
            out.update(c.keys())
        return out

    def to_json(self) -> dict:
        rows = []
        for key in sorted(self.rows):
            counter = self.rows[key]
            rows.append(
                {
                    "type": json.loads(key),
                    "counts": {str(c): counter[c] for c in sorted(counter)},
                    "total": sum(counter.values()),
                }
            )
        return {
            "problem": self.problem,
            "k": self.k,
            "n": self.n,
            "rows": rows,
            "rejections": self.rejections,
            "seed": self.seed,
        }

    def to_csv(self) -> str:
        cols = list(range(self.degree % 2, self.degree + 1, 2))
        buf = io.StringIO()
        header = ["type"] + [str(c) for c in cols] + ["total"]
        table = [header]
        totals = Counter()
        for key in sorted(self.rows):
            counter = self.rows[key]
            totals.update(counter)
            table.append(
                [key]
                + [str(counter.get(c, "")) for c in cols]
                + [str(sum(counter.values()))]
            )
        table.append(
            ["total"]
            + [str(totals.get(c, "")) for c in cols]
            + [str(sum(totals.values()))]
        )
        widths = [max(len(r[i]) for r in table) for i in range(len(header))]
        for r in table:
            buf.write(",".join(v.rjust(w) for v, w in zip(r, widths)) + "\n")
        return buf.getvalue()


def _type_key(tp: dict[str, int]) -> str:
    return json.dumps(dict(sorted(tp.items())), separators=(",", ":"))


def type_of_config(problem: SchubertProblem, cfg: OsculationConfig) -> dict[str, int]:
    return {
        lam.render(): rho for lam, rho in cfg.type_counts(problem).items()
    }


# ---------------------------------------------------------------------------
# configuration sampling


def random_rational(rng: random.Random) -> Fraction:
    return Fraction(rng.randint(-999, 999), rng.randint(1, 50))


def draw_config(
    problem: SchubertProblem,
    rho: dict[Partition, int],
    rng: random.Random,
    place_at_infinity: Partition | None = None,
) -> OsculationConfig:
    """Random osculation configuration of the given type.

    Places rho[lam] real points and (mult(lam)-rho[lam])/2 conjugate pairs on
    each distinct partition; optionally forces one condition with the given
    partition to the parameter at infinity.
    """
    check_type_feasible(problem, rho)
    used: set = set()

    def fresh_real() -> Fraction:
        while True:
            t = random_rational(rng)
            if ("r", t) not in used:
                used.add(("r", t))
                return t

    def fresh_pair() -> tuple[Fraction, Fraction]:
        while True:
            a = random_rational(rng)
            b = random_rational(rng)
            if b != 0 and ("p", a, b) not in used:
                used.add(("p", a, b))
                used.add(("p", a, -b))
                return a, b

    entries: list = [None] * len(problem.conditions)
    by_partition: dict[Partition, list[int]] = {}
    for i, lam in enumerate(problem.conditions):
        by_partition.setdefault(lam, []).append(i)
    infinity_done = False
    for lam, indices in by_partition.items():
        nreal = rho[lam]
        reals = indices[:nreal]
        pairs = indices[nreal:]
        for i in reals:
            if (
                place_at_infinity is not None
                and lam == place_at_infinity
                and not infinity_done
            ):
                entries[i] = RealPoint(OO)
                infinity_done = True
            else:
                entries[i] = RealPoint(fresh_real())
        for u, v in zip(pairs[0::2], pairs[1::2]):
            a, b = fresh_pair()
            entries[u] = PairPoint(a, b, v)
            entries[v] = PairPoint(a, -b, u)
    if place_at_infinity is not None and not infinity_done:
        raise InfeasibleTypeError("no real slot available for the infinity flag")
    return OsculationConfig(entries)


def check_type_feasible(problem: SchubertProblem, rho: dict[Partition, int]):
    for lam in problem.distinct_conditions():
        if lam not in rho:
            raise InfeasibleTypeError(f"type missing partition {lam}")
        m = problem.multiplicity(lam)
        r = rho[lam]
        if not (0 <= r <= m):
            raise InfeasibleTypeError(f"rho for {lam} out of range 0..{m}")
        if (m - r) % 2:
            raise InfeasibleTypeError(
                f"rho for {lam} has wrong parity: {m - r} non-real slots"
            )


# ---------------------------------------------------------------------------
# counting pipeline


def count_real(
    problem: SchubertProblem,
    cfg: OsculationConfig,
    rng: random.Random | None = None,
    seed: int = 0,
    backend: str = "modular",
    expected_degree: int | None = None,
) -> RealCountRecord:
    """Assemble, eliminate in a generic coordinate, gate, Sturm-count.

    A failed Shape-Lemma gate or a dimension error is a rejection (valid is
    False), not a hard failure.
    """
    rng = rng or random.Random(seed)
    d = expected_degree if expected_degree is not None else problem_degree(problem)
    record = RealCountRecord(
        problem=problem.render(),
        k=problem.k,
        n=problem.n,
        type=type_of_config(problem, cfg),
        parameters=[_param_str(e) for e in cfg.entries],
        eliminant_degree=None,
        real_count=None,
        valid=False,
        seed=seed,
    )
    system = assemble_instance(problem, cfg)
    try:
        g = groebner_eliminate(system, None, rng, backend=backend)
    except DimensionError:
        record.rejection = "dimension_error"
        return record
    except ReconstructionError:
        record.rejection = "reconstruction_error"
        return record
    record.eliminant_degree = g.degree
    if g.degree != d:
        record.rejection = "degree_deficit"
        return record
    try:
        # sturm_count verifies squarefreeness on the same chain it counts with
        record.real_count = sturm_count(g)
    except SquarefreeViolationError:
        record.rejection = "not_squarefree"
        return record
    record.valid = True
    return record


def count_real_flags(
    problem: SchubertProblem,
    flags: list[FlagMatrix],
    rng: random.Random | None = None,
    seed: int = 0,
    backend: str = "modular",
) -> RealCountRecord:
    """The same gate-and-count pipeline for explicitly given flags."""
    rng = rng or random.Random(seed)
    d = problem_degree(problem)
    record = RealCountRecord(
        problem=problem.render(),
        k=problem.k,
        n=problem.n,
        type={lam.render(): problem.multiplicity(lam) for lam in problem.distinct_conditions()},
        parameters=["flag"] * len(flags),
        eliminant_degree=None,
        real_count=None,
        valid=False,
        seed=seed,
    )
    system = flags_instance(problem, flags)
    try:
        g = groebner_eliminate(system, None, rng, backend=backend)
    except DimensionError:
        record.rejection = "dimension_error"
        return record
    except ReconstructionError:
        record.rejection = "reconstruction_error"
        return record
    record.eliminant_degree = g.degree
    if g.degree != d:
        record.rejection = "degree_deficit"
        return record
    try:
        record.real_count = sturm_count(g)
    except SquarefreeViolationError:
        record.rejection = "not_squarefree"
        return record
    record.valid = True
    return record


def _param_str(e) -> str:
    if isinstance(e, RealPoint):
        return "oo" if e.t is OO else str(Fraction(e.t))
    return f"{e.re}{'+' if e.im >= 0 else ''}{e.im}i"


MAX_RETRIES = 10


def run_experiment(
    problem: SchubertProblem,
    schedule: list[tuple[dict[Partition, int], int]],
    seed: int,
    jobs: int = 1,
    backend: str = "modular",
    place_at_infinity: Partition | None = None,
    record_sink=None,
) -> FrequencyTable:
    """Deterministic seeded experiment over a schedule of (type, count) rows.

    Instance i of row r uses the sub-seed chain subseed(seed, r, i, retry);
    aggregation is sorted by (row, instance), so the table is byte-identical
    for any worker count.
    """
    for rho, _ in schedule:
        check_type_feasible(problem, rho)
    d = problem_degree(problem)
    table = FrequencyTable(
        problem=problem.render(), k=problem.k, n=problem.n, degree=d, seed=seed
    )
    tasks = [
        (r, i, subseed(seed, r, i))
        for r, (rho, count) in enumerate(schedule)
        for i in range(count)
    ]

    def work(task):
        r, i, s = task
        rho = schedule[r][0]
        rec = _instance_with_retries(problem, rho, s, backend, place_at_infinity)
        return (r, i), rec

    if jobs > 1:
        from concurrent.futures import ProcessPoolExecutor

        args = [
            (problem, schedule[r][0], s, backend, place_at_infinity)
            for r, i, s in tasks
        ]
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            recs = list(pool.map(_instance_star, args, chunksize=1))
        results = list(zip([(r, i) for r, i, _ in tasks], recs))
    else:
        results = [work(t) for t in tasks]
    results.sort(key=lambda kv: kv[0])
    for _, rec in results:
        table.add(rec)
        if record_sink is not None:
            record_sink(rec)
    return table


def _instance_with_retries(problem, rho, s, backend, place_at_infinity):
    last = None
    for retry in range(MAX_RETRIES):
        s2 = subseed(s, retry)
        rng = random.Random(s2)
        try:
            cfg = draw_config(problem, rho, rng, place_at_infinity)
        except InfeasibleTypeError:
            raise
        rec = count_real(problem, cfg, rng, seed=s2, backend=backend)
        if rec.valid:
            return rec
        last = rec
    return last


def _instance_star(args):
    return _instance_with_retries(*args)


# ---------------------------------------------------------------------------
# verdicts


@dataclass(frozen=True)
class CongruenceVerdict:
    applicable: bool
    satisfied: bool


def congruence_verdict(problem: SchubertProblem, table: FrequencyTable) -> CongruenceVerdict:
    """Mod-four congruence for symmetric problems in Gr(k,2k) whose diagonal
    lengths sum to more than k+3: every valid count must be = d mod 4."""
    k, n = problem.k, problem.n
    applicable = (
        n == 2 * k
        and all(lam.is_symmetric() for lam in problem.conditions)
        and sum(lam.diagonal_length() for lam in problem.conditions) > k + 3
    )
    if not applicable:
        return CongruenceVerdict(False, False)
    d = problem_degree(problem)
    satisfied = all(c % 4 == d % 4 for c in table.observed_counts())
    return CongruenceVerdict(True, satisfied)


def lower_bound_sigma(problem: SchubertProblem) -> int:
    """Sign-imbalance lower bound for problems of shape (lam, mu, box^m),
    with lam osculating at infinity and mu at zero."""
    boxes = [c for c in problem.conditions if c == Partition((1,))]
    others = [c for c in problem.conditions if c != Partition((1,))]
    if len(others) > 2:
        raise ValueError("expected at most two non-box conditions")
    lam = others[0] if others else Partition()
    mu = others[1] if len(others) > 1 else Partition()
    m = problem.k * (problem.n - problem.k) - lam.weight - mu.weight
    if m != len(boxes):
        raise ValueError("conditions do not have shape (lam, mu, box^m)")
    lamc = lam.complement(problem.k, problem.n)
    if not (mu <= lamc):
        return 0  # empty skew shape
    return sign_imbalance(SkewShape(lamc, mu))

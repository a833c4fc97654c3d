"""Geometry to algebra: osculating/secant flags, charts, determinantal
Schubert conditions, instance assembly, and membership tests."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .combinat import Partition, SchubertProblem
from .exactalg import (
    QQ,
    QQi,
    CharacteristicError,
    GaussRat,
    GaussianRationals,
    MultiPoly,
    PolySystem,
    PrimeField,
    determinant,
    realize_gaussian,
    times_i,
)


class _Infinity:
    """Curve parameter at infinity; at most one condition may use it."""

    _instance = None

    def __new__(cls):
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def __repr__(self):
        return "oo"


OO = _Infinity()


@dataclass(frozen=True)
class Chart:
    """The affine chart X -> row space [I_k : X] of k x (n-k) matrices."""

    k: int
    n: int

    @property
    def nvars(self) -> int:
        return self.k * (self.n - self.k)

    @property
    def varnames(self) -> tuple[str, ...]:
        return tuple(
            f"x{r}_{c}" for r in range(self.k) for c in range(self.n - self.k)
        )

    def var(self, domain, r: int, c: int) -> MultiPoly:
        return MultiPoly.variable(domain, self.nvars, r * (self.n - self.k) + c)


@dataclass
class FlagMatrix:
    """Full-rank n x n matrix; the first i rows span the flag subspace F_i."""

    domain: object
    rows: list[list]

    def __post_init__(self):
        n = len(self.rows)
        if any(len(r) != n for r in self.rows):
            raise ValueError("flag matrix must be square")
        if exact_rank(self.rows, self.domain) != n:
            raise ValueError("flag matrix must have full rank")

    @property
    def n(self) -> int:
        return len(self.rows)


def exact_rank(rows: list[list], domain) -> int:
    """Rank by Gaussian elimination over the exact field."""
    m = [list(r) for r in rows]
    nrows = len(m)
    ncols = len(m[0]) if nrows else 0
    rank = 0
    for col in range(ncols):
        piv = next(
            (r for r in range(rank, nrows) if not domain.is_zero(m[r][col])), None
        )
        if piv is None:
            continue
        m[rank], m[piv] = m[piv], m[rank]
        inv = domain.inv(m[rank][col])
        for r in range(rank + 1, nrows):
            if domain.is_zero(m[r][col]):
                continue
            f = domain.mul(m[r][col], inv)
            m[r] = [domain.sub(a, domain.mul(f, b)) for a, b in zip(m[r], m[rank])]
        rank += 1
        if rank == nrows:
            break
    return rank


def osculating_flag(t, n: int, domain=QQ) -> FlagMatrix:
    """Flag osculating the rational normal curve (1, t, t^2/2, ..., t^(n-1)/(n-1)!).

    Row i+1 is the i-th derivative of the curve at t; for t = OO, the
    reversed identity (span of the last basis vectors).
    """
    if isinstance(domain, PrimeField) and domain.p < n:
        raise CharacteristicError(f"need p >= n, got p={domain.p}, n={n}")
    if t is OO:
        rows = [
            [domain.one if c == n - 1 - r else domain.zero for c in range(n)]
            for r in range(n)
        ]
        return FlagMatrix(domain, rows)
    tval = _coerce_scalar(t, domain)
    # gamma_m(t) = t^m / m!; the i-th derivative is t^(m-i)/(m-i)! for m >= i
    inv_fact = [domain.one]
    for m in range(1, n):
        inv_fact.append(domain.div(inv_fact[-1], domain.from_int(m)))
    powers = [domain.one]
    for _ in range(1, n):
        powers.append(domain.mul(powers[-1], tval))
    rows = []
    for i in range(n):
        rows.append(
            [
                domain.mul(powers[m - i], inv_fact[m - i]) if m >= i else domain.zero
                for m in range(n)
            ]
        )
    return FlagMatrix(domain, rows)


def secant_flag(pts: list, domain=QQ) -> FlagMatrix:
    """Flag whose i-th subspace is spanned by the curve points at the first
    i parameters; parameters must be strictly increasing."""
    n = len(pts)
    vals = [_coerce_scalar(t, domain) for t in pts]
    if isinstance(domain, PrimeField):
        if len(set(vals)) != n:
            raise ValueError("secant points must be distinct")
    else:
        if any(not a < b for a, b in zip(pts, pts[1:])):
            raise ValueError("secant points must be strictly increasing")
    if isinstance(domain, PrimeField) and domain.p < n:
        raise CharacteristicError(f"need p >= n, got p={domain.p}, n={n}")
    inv_fact = [domain.one]
    for m in range(1, n):
        inv_fact.append(domain.div(inv_fact[-1], domain.from_int(m)))
    rows = []
    for t in vals:
        powers = [domain.one]
        for _ in range(1, n):
            powers.append(domain.mul(powers[-1], t))
        rows.append([domain.mul(powers[m], inv_fact[m]) for m in range(n)])
    return FlagMatrix(domain, rows)


def _coerce_scalar(t, domain):
    if isinstance(domain, GaussianRationals):
        if isinstance(t, GaussRat):
            return t
        return GaussRat(Fraction(t), Fraction(0))
    if isinstance(domain, PrimeField):
        if isinstance(t, Fraction):
            return domain.from_rational(t)
        return domain.from_int(int(t))
    return Fraction(t)


# ---------------------------------------------------------------------------
# Determinantal equations


def _rank_condition_sizes(lam: Partition, k: int, n: int):
    """Essential rank conditions (j, i, s): for each nonzero part, the stacked
    matrix [H; F_i] must have rank <= k+i-j, i.e. all s-minors vanish."""
    out = []
    for j in range(1, len(lam.parts) + 1):
        if lam[j - 1] <= 0:
            continue
        i = n - k + j - lam[j - 1]
        out.append((j, i, k + i - j + 1))
    return out


def schubert_equations(
    lam: Partition, flag: FlagMatrix, chart: Chart, mirrored: bool = False
) -> list[MultiPoly]:
    """All (k+i-j+1)-minors of [I_k:X ; F_i], per nonzero part of lam.

    With mirrored=True the chart is [X : I_k] (the patch missing the flag at
    zero instead of the flag at infinity), used when a condition osculates
    at the parameter at infinity so its Schubert cell stays visible.
    """
    k, n = chart.k, chart.n
    if not lam.fits_box(k, n):
        raise ValueError(f"{lam} does not fit the {k}x{n-k} box")
    domain = flag.domain
    stacked_vars = _chart_rows(chart, domain, mirrored)
    eqs: list[MultiPoly] = []
    for _, i, s in _rank_condition_sizes(lam, k, n):
        const_rows = [
            [MultiPoly.constant(domain, chart.nvars, c) for c in flag.rows[r]]
            for r in range(i)
        ]
        rows = stacked_vars + const_rows  # variable rows first for the memo
        eqs.extend(_minors(rows, s))
    return eqs


def schubert_equations_reduced(
    lam: Partition, flag: FlagMatrix, chart: Chart, mirrored: bool = False
) -> list[MultiPoly]:
    """Equations generating the same ideal as `schubert_equations`, from the
    row-reduced stack: rank[I_k:X ; F_i] = k + rank(B - A X) for F_i = [A:B]
    (A the columns over the identity block), so the s-minors of the stack
    reduce to the (s-k)-minors of B - A X."""
    k, n = chart.k, chart.n
    if not lam.fits_box(k, n):
        raise ValueError(f"{lam} does not fit the {k}x{n-k} box")
    domain = flag.domain
    xs = [[chart.var(domain, r, c) for c in range(n - k)] for r in range(k)]
    eqs: list[MultiPoly] = []
    for _, i, s in _rank_condition_sizes(lam, k, n):
        cmat = []
        for r in range(i):
            if mirrored:
                a_row = flag.rows[r][n - k :]
                b_row = flag.rows[r][: n - k]
            else:
                a_row = flag.rows[r][:k]
                b_row = flag.rows[r][k:]
            row = []
            for c in range(n - k):
                entry = MultiPoly.constant(domain, chart.nvars, b_row[c])
                for sidx in range(k):
                    if not domain.is_zero(a_row[sidx]):
                        entry = entry - xs[sidx][c].scale(a_row[sidx])
                row.append(entry)
            cmat.append(row)
        eqs.extend(_minors(cmat, s - k))
    return eqs


def _chart_rows(chart: Chart, domain, mirrored: bool = False) -> list[list[MultiPoly]]:
    k, n = chart.k, chart.n
    rows = []
    for r in range(k):
        ident = [
            MultiPoly.constant(domain, chart.nvars, domain.one)
            if c == r
            else MultiPoly.constant(domain, chart.nvars, domain.zero)
            for c in range(k)
        ]
        xvars = [chart.var(domain, r, c) for c in range(n - k)]
        rows.append(xvars + ident if mirrored else ident + xvars)
    return rows


def _minors(rows: list[list[MultiPoly]], s: int) -> list[MultiPoly]:
    from itertools import combinations

    nr, nc = len(rows), len(rows[0])
    out = []
    for rsel in combinations(range(nr), s):
        picked = [rows[r] for r in rsel]
        for csel in combinations(range(nc), s):
            sub = [[row[c] for c in csel] for row in picked]
            d = determinant(sub)
            if not d.is_zero():
                out.append(d)
    return out


# ---------------------------------------------------------------------------
# Osculation configurations and instance assembly


@dataclass(frozen=True)
class RealPoint:
    """A real curve parameter (rational, or OO for the parameter at infinity)."""

    t: object

    def value(self):
        return self.t


@dataclass(frozen=True)
class PairPoint:
    """One member of a conjugate pair a+bi / a-bi; `partner` is the index of
    the other condition, which must carry an equal partition."""

    re: Fraction
    im: Fraction
    partner: int

    def value(self) -> GaussRat:
        return GaussRat(Fraction(self.re), Fraction(self.im))


@dataclass
class OsculationConfig:
    """One entry per condition of a Schubert problem."""

    entries: list

    def validate(self, problem: SchubertProblem):
        if len(self.entries) != len(problem.conditions):
            raise ValueError("need one parameter entry per condition")
        values = []
        inf_count = 0
        for idx, e in enumerate(self.entries):
            if isinstance(e, RealPoint):
                if e.t is OO:
                    inf_count += 1
                    values.append("oo")
                else:
                    values.append((Fraction(e.t), Fraction(0)))
            elif isinstance(e, PairPoint):
                if e.im == 0:
                    raise ValueError("conjugate pair needs nonzero imaginary part")
                j = e.partner
                if not (0 <= j < len(self.entries)) or j == idx:
                    raise ValueError(f"bad partner index {j}")
                other = self.entries[j]
                if not isinstance(other, PairPoint) or other.partner != idx:
                    raise ValueError("pair partner links are inconsistent")
                if other.re != e.re or other.im != -e.im:
                    raise ValueError("pair members must be complex conjugates")
                if problem.conditions[idx] != problem.conditions[j]:
                    raise ValueError("pair members must carry equal partitions")
                values.append((Fraction(e.re), Fraction(e.im)))
            else:
                raise TypeError(f"unknown entry {e!r}")
        if inf_count > 1:
            raise ValueError("at most one condition may osculate at infinity")
        if len(set(values)) != len(values):
            raise ValueError("parameter values must be distinct")

    def type_counts(self, problem: SchubertProblem) -> dict[Partition, int]:
        """rho_lambda: number of real parameters per distinct partition."""
        rho: dict[Partition, int] = {
            lam: 0 for lam in problem.distinct_conditions()
        }
        for lam, e in zip(problem.conditions, self.entries):
            if isinstance(e, RealPoint):
                rho[lam] += 1
        return rho


def assemble_instance(
    problem: SchubertProblem,
    cfg: OsculationConfig,
    domain=QQ,
    reduced: bool = True,
) -> PolySystem:
    """Polynomial system for the osculating instance, over QQ or GF(p).

    Conjugate pairs are generated once over the Gaussian rationals at a+bi;
    each Gaussian polynomial f contributes the two real polynomials
    Re(f)+Im(f) and Re(f)-Im(f) (realizations of f and of sqrt(-1)*f), which
    generate the same ideal as (Re f, Im f) and cut out the
    conjugation-stable intersection.
    """
    cfg.validate(problem)
    if isinstance(domain, PrimeField) and any(
        isinstance(e, PairPoint) for e in cfg.entries
    ):
        raise ValueError("conjugate pairs are a rational-side construction")
    chart = Chart(problem.k, problem.n)
    build = schubert_equations_reduced if reduced else schubert_equations
    # a condition at infinity lies in the locus the standard chart misses;
    # switch to the mirrored chart [X:I_k] (which misses the flag at zero)
    # after translating parameters so no finite parameter equals zero. The
    # translation is a real reparameterization of the curve, so solution
    # counts and cycle types are unchanged.
    mirrored = any(isinstance(e, RealPoint) and e.t is OO for e in cfg.entries)
    entries = list(cfg.entries)
    if mirrored and any(
        isinstance(e, RealPoint) and e.t is not OO and Fraction(e.t) == 0
        for e in entries
    ):
        shift = 1 + max(
            (
                abs(Fraction(e.t))
                if isinstance(e, RealPoint) and e.t is not OO
                else abs(e.re)
                for e in entries
                if not (isinstance(e, RealPoint) and e.t is OO)
            ),
            default=Fraction(0),
        )
        entries = [_shift_entry(e, shift) for e in entries]
    polys: list[MultiPoly] = []
    for lam, e in zip(problem.conditions, entries):
        if isinstance(e, RealPoint):
            flag = osculating_flag(e.t, problem.n, domain)
            polys.extend(build(lam, flag, chart, mirrored))
        else:
            if e.im < 0:
                continue  # the positive member generates for the pair
            flag = osculating_flag(e.value(), problem.n, QQi)
            for f in build(lam, flag, chart, mirrored):
                g1 = realize_gaussian(f)
                g2 = realize_gaussian(times_i(f))
                if not g1.is_zero():
                    polys.append(g1)
                if not g2.is_zero():
                    polys.append(g2)
    return PolySystem(chart.varnames, polys)


def _shift_entry(e, shift: Fraction):
    if isinstance(e, RealPoint):
        return e if e.t is OO else RealPoint(Fraction(e.t) + shift)
    return PairPoint(e.re + shift, e.im, e.partner)


def flags_instance(
    problem: SchubertProblem,
    flags: list[FlagMatrix],
    reduced: bool = True,
) -> PolySystem:
    """Polynomial system for an instance given by arbitrary flags."""
    if len(flags) != len(problem.conditions):
        raise ValueError("need one flag per condition")
    chart = Chart(problem.k, problem.n)
    build = schubert_equations_reduced if reduced else schubert_equations
    polys: list[MultiPoly] = []
    for lam, flag in zip(problem.conditions, flags):
        polys.extend(build(lam, flag, chart))
    return PolySystem(chart.varnames, polys)


def membership_check(H: list[list], lam: Partition, flag: FlagMatrix) -> bool:
    """Exact rank test of the Schubert conditions for the k-plane spanned by
    the rows of H."""
    domain = flag.domain
    k = len(H)
    n = flag.n
    if any(len(r) != n for r in H):
        raise ValueError("H must be k x n")
    if exact_rank(H, domain) != k:
        raise ValueError("H must have full rank k")
    for j, i, _ in _rank_condition_sizes(lam, k, n):
        stacked = [list(r) for r in H] + [list(flag.rows[r]) for r in range(i)]
        if exact_rank(stacked, domain) > k + i - j:
            return False
    return True


def overlap_number(point_sets: list[list[Fraction]]) -> int:
    """Sum over ordered pairs (i, j), i != j, of the number of flag j's
    secancy points strictly inside flag i's hull; zero iff the intervals of
    secancy are pairwise disjoint."""
    hulls = [(min(ps), max(ps)) for ps in point_sets]
    total = 0
    for i, (lo, hi) in enumerate(hulls):
        for j, ps in enumerate(point_sets):
            if i == j:
                continue
            total += sum(1 for t in ps if lo < t < hi)
    return total

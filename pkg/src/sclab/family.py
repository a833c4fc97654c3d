"""Closed-form oracle for the box family: the Schubert problem whose
solutions are the factorizations f'(t) = g(t) h(t) of the derivative of the
polynomial with the osculation points as roots."""

from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction
from math import comb, factorial

from .combinat import Partition, SchubertProblem
from .exactalg import (
    QQ,
    SquarefreeViolationError,
    UniPoly,
    sturm_count,
)
from .realcount import count_real, draw_config
from .schubert import (
    OO,
    FlagMatrix,
    OsculationConfig,
    PairPoint,
    RealPoint,
    membership_check,
    osculating_flag,
)


class DegeneracyError(ValueError):
    """The drawn instance is degenerate (f' not squarefree); resample."""


def box_partition(k: int, n: int) -> Partition:
    """The rectangle with k-1 parts of size n-k-1."""
    if k < 2 or n < k + 2:
        raise ValueError(f"need k >= 2 and n >= k+2, got ({k},{n})")
    return Partition((n - k - 1,) * (k - 1))


def box_family_problem(k: int, n: int) -> SchubertProblem:
    """(box rectangle, hypersurface^(n-1)) in Gr(k,n)."""
    conds = (box_partition(k, n),) + (Partition((1,)),) * (n - 1)
    return SchubertProblem(k, n, conds)


def nu(k: int, n: int, rho: int) -> int:
    """Number of real factorizations for f' with rho real roots: the
    coefficient of x^(n-k-1) y^(k-1) in (x+y)^rho (x^2+y^2)^c, c=(n-2-rho)/2."""
    if rho < 0 or rho > n - 2 or (n - 2 - rho) % 2:
        raise ValueError(f"rho={rho} infeasible for n={n} (parity/range)")
    c = (n - 2 - rho) // 2
    target = n - k - 1
    total = 0
    for i in range(c + 1):
        j = target - 2 * i
        if 0 <= j <= rho:
            total += comb(rho, j) * comb(c, i)
    return total


@dataclass
class FactorizationInstance:
    """The box-family instance data: points for the hypersurface conditions,
    f = prod(t - t_i), its derivative, and the count rho of real roots of f'."""

    k: int
    n: int
    entries: list
    f: UniPoly
    fprime: UniPoly
    rho: int

    @property
    def c(self) -> int:
        return (self.n - 2 - self.rho) // 2


def factorization_instance(k: int, n: int, entries: list) -> FactorizationInstance:
    """Build the instance from the n-1 hypersurface-condition parameters
    (RealPoint / PairPoint entries; pairs contribute real quadratic factors)."""
    if len(entries) != n - 1:
        raise ValueError(f"need n-1 = {n-1} parameters")
    f = UniPoly(QQ, [Fraction(1)])
    for e in entries:
        if isinstance(e, RealPoint):
            if e.t is OO:
                raise ValueError("hypersurface parameters must be finite")
            f = f * UniPoly(QQ, [-Fraction(e.t), Fraction(1)])
        elif isinstance(e, PairPoint):
            if e.im < 0:
                continue  # the conjugate contributes jointly below
            a, b = Fraction(e.re), Fraction(e.im)
            f = f * UniPoly(QQ, [a * a + b * b, -2 * a, Fraction(1)])
        else:
            raise TypeError(f"unknown entry {e!r}")
    if f.degree != n - 1:
        raise ValueError("pair entries must come in conjugate couples")
    fp = f.derivative()
    try:
        rho = sturm_count(fp)
    except SquarefreeViolationError as e:
        raise DegeneracyError("f' is not squarefree") from e
    return FactorizationInstance(k, n, list(entries), f, fp, rho)


@dataclass(frozen=True)
class FactorizationCounts:
    real_count: int
    complex_count: int


def factorization_solve(inst: FactorizationInstance) -> FactorizationCounts:
    """Counts of real and complex factorizations f' = g h with
    deg g = n-k-1 and deg h = k-1 (scalar-equivalent factorizations
    identified).

    The real count depends only on the real-factor type of f': rho linear
    factors and c irreducible quadratics, allocated between g and h, which is
    exactly nu(k, n, rho).
    """
    real = nu(inst.k, inst.n, inst.rho)
    return FactorizationCounts(real, comb(inst.n - 2, inst.k - 1))


@dataclass(frozen=True)
class FamilyBounds:
    lower: int
    attainable: tuple[int, ...]


def family_bounds(k: int, n: int, rho_box: int) -> FamilyBounds:
    """Lower bound and attainable real-solution counts for osculation type
    rho_box; Rolle restricts rho to rho_box-1 .. n-2 with the parity of n-2.

    rho_box counts real points among the n-1 hypersurface conditions, so it
    must have the parity of n-1 (the rest pair up); rho_box = 0 is the
    minimal type when n is odd.
    """
    if not (0 <= rho_box <= n - 1) or (n - 1 - rho_box) % 2:
        raise ValueError(f"rho_box={rho_box} infeasible for n={n} (parity)")
    start = max(rho_box - 1, (n - 2) % 2)
    values = sorted({nu(k, n, r) for r in range(start, n - 1, 2)})
    return FamilyBounds(lower=min(values), attainable=tuple(values))


# ---------------------------------------------------------------------------
# The parameterized-cell verification gadget: build the k-plane H(f,g,h) of a
# factorization and check its hypersurface-Schubert membership directly.


def factorization_membership(
    k: int, n: int, points: list[Fraction], g: UniPoly, h: UniPoly
) -> bool:
    """Check that the k-plane built from a monic factorization
    f'/(lc) = g h lies on the hypersurface Schubert variety at every point.

    g and h must be monic with deg g = n-k-1, deg h = k-1, the product equal
    to f'/(n-1) for f = prod(t - t_i), and all low coefficients of h nonzero.
    """
    if g.degree != n - k - 1 or h.degree != k - 1:
        raise ValueError("factor degrees must be (n-k-1, k-1)")
    f = UniPoly(QQ, [Fraction(1)])
    for t in points:
        f = f * UniPoly(QQ, [-Fraction(t), Fraction(1)])
    if (g * h).scale(Fraction(n - 1)) != f.derivative():
        raise ValueError("g*h must equal f'/(n-1)")
    if any(h.coeffs[j] == 0 for j in range(k - 1)):
        raise ValueError("the cell parameterization needs nonzero h coefficients")
    f0 = f.evaluate(Fraction(0)) / (n - 1)
    gc = [g.coeffs[j] if j <= g.degree else Fraction(0) for j in range(n - k)]
    hc = [h.coeffs[j] if j <= h.degree else Fraction(0) for j in range(k)]
    rows = [[Fraction(0)] * n for _ in range(k)]
    for i in range(1, n - k + 1):  # c_i g_{n-k-i} across the first row
        ci = Fraction((-1) ** (n - k - i + 1) * factorial(n - k - i))
        rows[0][i - 1] = ci * gc[n - k - i]
    rows[0][n - k] = f0 / hc[0]
    for j in range(2, k + 1):  # row j: -(j-1) and h_{j-2}/h_{j-1}
        rows[j - 1][n - k + j - 2] = Fraction(-(j - 1))
        rows[j - 1][n - k + j - 1] = hc[j - 2] / hc[j - 1]
    box = Partition((1,))
    return all(
        membership_check(rows, box, osculating_flag(t, n)) for t in points
    )


# ---------------------------------------------------------------------------
# cross-check against the general pipeline


def family_cross_check(
    k: int,
    n: int,
    cfg: OsculationConfig,
    rng: random.Random | None = None,
    seed: int = 0,
    backend: str = "modular",
) -> bool | None:
    """Run the factorization oracle and the eliminant pipeline on the same
    configuration; True iff the real counts agree. None means the instance
    was degenerate or rejected (inconclusive; resample)."""
    problem = box_family_problem(k, n)
    cfg.validate(problem)
    if not (isinstance(cfg.entries[0], RealPoint) and cfg.entries[0].t is OO):
        raise ValueError("the rectangle condition must osculate at infinity")
    try:
        inst = factorization_instance(k, n, cfg.entries[1:])
    except DegeneracyError:
        return None
    oracle = factorization_solve(inst)
    rec = count_real(problem, cfg, rng, seed=seed, backend=backend)
    if not rec.valid:
        return None
    return rec.real_count == oracle.real_count


def draw_family_config(k: int, n: int, rho_box: int, rng: random.Random) -> OsculationConfig:
    """Random configuration for the box family: rectangle at infinity,
    rho_box real hypersurface points, the rest in conjugate pairs."""
    problem = box_family_problem(k, n)
    rect = box_partition(k, n)
    if rect == Partition((1,)):  # in Gr(2,4) the rectangle is itself a box
        rho = {rect: rho_box + 1}
    else:
        rho = {rect: 1, Partition((1,)): rho_box}
    return draw_config(problem, rho, rng, place_at_infinity=rect)

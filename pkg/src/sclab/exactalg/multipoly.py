"""Sparse multivariate polynomials over an exact field, and polynomial systems."""

from __future__ import annotations

from dataclasses import dataclass, field

from .domains import QQ, GaussianRationals, GaussRat


class MultiPoly:
    """Exponent-vector -> coefficient map; no zero coefficients stored."""

    __slots__ = ("domain", "nvars", "terms")

    def __init__(self, domain, nvars: int, terms=None):
        self.domain = domain
        self.nvars = nvars
        self.terms: dict[tuple[int, ...], object] = {}
        if terms:
            for m, c in terms.items():
                if len(m) != nvars:
                    raise ValueError(f"exponent vector {m} has wrong length")
                if not domain.is_zero(c):
                    self.terms[tuple(m)] = c

    @classmethod
    def constant(cls, domain, nvars, c) -> "MultiPoly":
        return cls(domain, nvars, {(0,) * nvars: c})

    @classmethod
    def variable(cls, domain, nvars, i) -> "MultiPoly":
        e = [0] * nvars
        e[i] = 1
        return cls(domain, nvars, {tuple(e): domain.one})

    def is_zero(self) -> bool:
        return not self.terms

    def total_degree(self) -> int:
        return max((sum(m) for m in self.terms), default=-1)

    def __add__(self, other):
        d = self.domain
        out = dict(self.terms)
        for m, c in other.terms.items():
            s = d.add(out.get(m, d.zero), c)
            if d.is_zero(s):
                out.pop(m, None)
            else:
                out[m] = s
        res = MultiPoly(d, self.nvars)
        res.terms = out
        return res

    def __neg__(self):
        res = MultiPoly(self.domain, self.nvars)
        res.terms = {m: self.domain.neg(c) for m, c in self.terms.items()}
        return res

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        d = self.domain
        out: dict[tuple[int, ...], object] = {}
        for m1, c1 in self.terms.items():
            for m2, c2 in other.terms.items():
                m = tuple(a + b for a, b in zip(m1, m2))
                s = d.add(out.get(m, d.zero), d.mul(c1, c2))
                if d.is_zero(s):
                    out.pop(m, None)
                else:
                    out[m] = s
        res = MultiPoly(d, self.nvars)
        res.terms = out
        return res

    def scale(self, c) -> "MultiPoly":
        d = self.domain
        res = MultiPoly(d, self.nvars)
        if not d.is_zero(c):
            res.terms = {m: d.mul(c, v) for m, v in self.terms.items()}
        return res

    def evaluate(self, point: list):
        d = self.domain
        acc = d.zero
        for m, c in self.terms.items():
            v = c
            for i, e in enumerate(m):
                for _ in range(e):
                    v = d.mul(v, point[i])
            acc = d.add(acc, v)
        return acc

    def map_domain(self, new_domain, convert) -> "MultiPoly":
        res = MultiPoly(new_domain, self.nvars)
        for m, c in self.terms.items():
            v = convert(c)
            if not new_domain.is_zero(v):
                res.terms[m] = v
        return res

    def __eq__(self, other):
        return (
            isinstance(other, MultiPoly)
            and self.domain == other.domain
            and self.terms == other.terms
        )

    def __repr__(self):
        if not self.terms:
            return "0"
        bits = []
        for m in sorted(self.terms, reverse=True):
            mono = "*".join(
                f"x{i}^{e}" if e > 1 else f"x{i}" for i, e in enumerate(m) if e
            )
            c = self.terms[m]
            bits.append(f"{c}*{mono}" if mono else str(c))
        return " + ".join(bits)


@dataclass
class PolySystem:
    """An ordered variable list and a list of polynomials in those variables."""

    varnames: tuple[str, ...]
    polys: list[MultiPoly] = field(default_factory=list)

    def __post_init__(self):
        for f in self.polys:
            if f.nvars != len(self.varnames):
                raise ValueError("polynomial/variable count mismatch")

    @property
    def domain(self):
        return self.polys[0].domain if self.polys else QQ

    @property
    def nvars(self) -> int:
        return len(self.varnames)

    def append(self, f: MultiPoly):
        if f.nvars != self.nvars:
            raise ValueError("polynomial/variable count mismatch")
        self.polys.append(f)


def determinant(rows: list[list[MultiPoly]]) -> MultiPoly:
    """Determinant of a square MultiPoly matrix by suffix-minor expansion.

    Memoizes dets of the trailing row block per column subset, so constant
    rows should be ordered last for small intermediates.
    """
    m = len(rows)
    if any(len(r) != m for r in rows):
        raise ValueError("matrix is not square")
    if m == 0:
        raise ValueError("empty matrix")
    domain = rows[0][0].domain
    nvars = rows[0][0].nvars
    cache: dict[tuple[int, int], MultiPoly] = {}

    def minor(i: int, colmask: int) -> MultiPoly:
        if i == m:
            return MultiPoly.constant(domain, nvars, domain.one)
        hit = cache.get((i, colmask))
        if hit is not None:
            return hit
        acc = MultiPoly(domain, nvars)
        sign = 1
        j = 0
        mask = colmask
        while mask:
            if mask & 1:
                entry = rows[i][j]
                if not entry.is_zero():
                    sub = minor(i + 1, colmask & ~(1 << j))
                    term = entry * sub
                    acc = acc + term if sign > 0 else acc - term
                sign = -sign
            j += 1
            mask >>= 1
        cache[(i, colmask)] = acc
        return acc

    return minor(0, (1 << m) - 1)


def realize_gaussian(f: MultiPoly) -> MultiPoly:
    """Re(f) + Im(f) as a single rational-coefficient polynomial."""
    if not isinstance(f.domain, GaussianRationals):
        raise TypeError("realize_gaussian needs Gaussian-rational coefficients")
    res = MultiPoly(QQ, f.nvars)
    for m, c in f.terms.items():
        v = c.re + c.im
        if v != 0:
            res.terms[m] = v
    return res


def times_i(f: MultiPoly) -> MultiPoly:
    """Multiply by sqrt(-1); with realize_gaussian this recovers Re and Im."""
    if not isinstance(f.domain, GaussianRationals):
        raise TypeError("times_i needs Gaussian-rational coefficients")
    res = MultiPoly(f.domain, f.nvars)
    res.terms = {m: GaussRat(-c.im, c.re) for m, c in f.terms.items()}
    return res

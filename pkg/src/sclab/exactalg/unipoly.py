"""Dense univariate polynomials over an exact field, Sturm counting, Wronskians."""

from __future__ import annotations

from fractions import Fraction
from math import gcd as int_gcd

from .domains import QQ, Rationals


class SquarefreeViolationError(ValueError):
    """An operation requiring a squarefree polynomial received one that is not."""


class UniPoly:
    """Coefficient list c[0] + c[1]*t + ...; leading coefficient nonzero."""

    __slots__ = ("domain", "coeffs")

    def __init__(self, domain, coeffs):
        self.domain = domain
        cs = list(coeffs)
        while cs and domain.is_zero(cs[-1]):
            cs.pop()
        self.coeffs = cs

    @classmethod
    def from_ints(cls, domain, ints) -> "UniPoly":
        return cls(domain, [domain.from_int(a) for a in ints])

    @classmethod
    def zero(cls, domain) -> "UniPoly":
        return cls(domain, [])

    @classmethod
    def variable(cls, domain) -> "UniPoly":
        return cls(domain, [domain.zero, domain.one])

    @property
    def degree(self) -> int:
        """Degree; -1 for the zero polynomial."""
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    def is_unit(self) -> bool:
        return self.degree == 0

    def lc(self):
        return self.coeffs[-1]

    def __eq__(self, other):
        return (
            isinstance(other, UniPoly)
            and self.domain == other.domain
            and self.coeffs == other.coeffs
        )

    def __hash__(self):
        return hash((self.domain, tuple(self.coeffs)))

    def __add__(self, other):
        d = self.domain
        n = max(len(self.coeffs), len(other.coeffs))
        return UniPoly(
            d,
            [
                d.add(
                    self.coeffs[i] if i < len(self.coeffs) else d.zero,
                    other.coeffs[i] if i < len(other.coeffs) else d.zero,
                )
                for i in range(n)
            ],
        )

    def __sub__(self, other):
        return self + (-other)

    def __neg__(self):
        return UniPoly(self.domain, [self.domain.neg(c) for c in self.coeffs])

    def __mul__(self, other):
        d = self.domain
        if self.is_zero() or other.is_zero():
            return UniPoly.zero(d)
        out = [d.zero] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if d.is_zero(a):
                continue
            for j, b in enumerate(other.coeffs):
                out[i + j] = d.add(out[i + j], d.mul(a, b))
        return UniPoly(d, out)

    def scale(self, c) -> "UniPoly":
        d = self.domain
        return UniPoly(d, [d.mul(c, a) for a in self.coeffs])

    def monic(self) -> "UniPoly":
        if self.is_zero():
            return self
        return self.scale(self.domain.inv(self.lc()))

    def derivative(self) -> "UniPoly":
        d = self.domain
        return UniPoly(
            d,
            [d.mul(d.from_int(i), c) for i, c in enumerate(self.coeffs)][1:],
        )

    def shift_mul(self, k: int) -> "UniPoly":
        """Multiply by t^k."""
        return UniPoly(self.domain, [self.domain.zero] * k + self.coeffs)

    def divmod(self, other) -> tuple["UniPoly", "UniPoly"]:
        d = self.domain
        if other.is_zero():
            raise ZeroDivisionError("polynomial division by zero")
        q = [d.zero] * max(0, self.degree - other.degree + 1)
        r = list(self.coeffs)
        inv_lc = d.inv(other.lc())
        while len(r) - 1 >= other.degree and r:
            while r and d.is_zero(r[-1]):
                r.pop()
            if len(r) - 1 < other.degree:
                break
            c = d.mul(r[-1], inv_lc)
            shift = len(r) - 1 - other.degree
            q[shift] = c
            for i, b in enumerate(other.coeffs):
                r[shift + i] = d.sub(r[shift + i], d.mul(c, b))
            r.pop()
        return UniPoly(d, q), UniPoly(d, r)

    def __mod__(self, other):
        return self.divmod(other)[1]

    def __floordiv__(self, other):
        return self.divmod(other)[0]

    def gcd(self, other) -> "UniPoly":
        """Monic gcd by the Euclidean algorithm."""
        a, b = self, other
        while not b.is_zero():
            a, b = b, a % b
        return a.monic() if not a.is_zero() else a

    def evaluate(self, x):
        d = self.domain
        acc = d.zero
        for c in reversed(self.coeffs):
            acc = d.add(d.mul(acc, x), c)
        return acc

    def map_domain(self, new_domain, convert) -> "UniPoly":
        return UniPoly(new_domain, [convert(c) for c in self.coeffs])

    def __repr__(self):
        if self.is_zero():
            return "0"
        parts = []
        for i, c in enumerate(self.coeffs):
            if self.domain.is_zero(c):
                continue
            if i == 0:
                parts.append(str(c))
            elif i == 1:
                parts.append(f"{c}*t")
            else:
                parts.append(f"{c}*t^{i}")
        return " + ".join(parts)


def squarefree_and_degree(f: UniPoly, expected: int) -> bool:
    """Shape-Lemma gate: gcd(f, f') constant and deg f == expected."""
    if f.is_zero():
        raise ValueError("gate on the zero polynomial")
    if f.degree != expected:
        return False
    if f.degree == 0:
        return True
    if isinstance(f.domain, Rationals):
        # fraction-free chain; Euclid over Fractions explodes at high degree
        return len(_sturm_chain(f)[-1]) == 1
    return f.gcd(f.derivative()).degree == 0


# ---------------------------------------------------------------------------
# Sturm sequences over the rationals.
#
# the chain is computed on primitive integer polynomials, stripping positive
# content after each signed pseudo-remainder step to tame coefficient growth.


def _to_primitive_int(f: UniPoly) -> list[int]:
    den = 1
    for c in f.coeffs:
        den = den * c.denominator // int_gcd(den, c.denominator)
    ints = [int(c * den) for c in f.coeffs]
    g = 0
    for a in ints:
        g = int_gcd(g, abs(a))
    return [a // g for a in ints] if g > 1 else ints


def _int_pseudo_rem_neg(a: list[int], b: list[int]) -> list[int]:
    """-rem(a, b) up to a positive factor, computed fraction-free."""
    r = list(a)
    lb = b[-1]
    degb = len(b) - 1
    while len(r) - 1 >= degb and r:
        lr = r[-1]
        shift = len(r) - 1 - degb
        # r := lb*r - lr*t^shift*b  (kills the lead; scales by lb)
        r = [lb * c for c in r]
        for i in range(len(b)):
            r[shift + i] -= lr * b[i]
        while r and r[-1] == 0:
            r.pop()
        if lb < 0:
            r = [-c for c in r]  # keep the sign of the true remainder
    g = 0
    for c in r:
        g = int_gcd(g, abs(c))
    if g > 1:
        r = [c // g for c in r]
    return [-c for c in r]


def _sign_variations(signs: list[int]) -> int:
    nz = [s for s in signs if s != 0]
    return sum(1 for a, b in zip(nz, nz[1:]) if a * b < 0)


def _sturm_chain(f: UniPoly) -> list[list[int]]:
    """Primitive-integer signed-remainder chain for a nonconstant rational f."""
    chain = [_to_primitive_int(f), _to_primitive_int(f.derivative())]
    while len(chain[-1]) - 1 > 0:
        nxt = _int_pseudo_rem_neg(chain[-2], chain[-1])
        if not nxt:
            break
        chain.append(nxt)
    return chain


def sturm_count(f: UniPoly) -> int:
    """Number of distinct real roots of a squarefree rational polynomial."""
    if not isinstance(f.domain, Rationals):
        raise TypeError("sturm_count requires rational coefficients")
    if f.is_zero():
        raise ValueError("sturm_count of the zero polynomial")
    if f.degree == 0:
        return 0
    chain = _sturm_chain(f)
    if len(chain[-1]) != 1:  # chain bottoms out at the gcd
        raise SquarefreeViolationError("input is not squarefree")
    at_pos = [1 if p[-1] > 0 else -1 for p in chain]
    at_neg = [
        s if (len(p) - 1) % 2 == 0 else -s for p, s in zip(chain, at_pos)
    ]
    return _sign_variations(at_neg) - _sign_variations(at_pos)


def sturm_count_interval(f: UniPoly, a: Fraction, b: Fraction) -> int:
    """Distinct real roots in (a, b] of a squarefree rational polynomial."""
    if f.degree < 1:
        return 0
    chain = _sturm_chain(f)
    if len(chain[-1]) != 1:
        raise SquarefreeViolationError("input is not squarefree")

    def ev(pt):
        signs = []
        for p in chain:
            acc = Fraction(0)
            for c in reversed(p):
                acc = acc * pt + c
            signs.append(0 if acc == 0 else (1 if acc > 0 else -1))
        return signs

    return _sign_variations(ev(a)) - _sign_variations(ev(b))


# ---------------------------------------------------------------------------
# Wronskians


def wronskian(fs: list[UniPoly]) -> UniPoly:
    """det(f_j^(i-1)) for the given polynomials, exactly."""
    if not fs:
        raise ValueError("wronskian of an empty list")
    k = len(fs)
    d = fs[0].domain
    rows = [list(fs)]
    for _ in range(k - 1):
        rows.append([g.derivative() for g in rows[-1]])
    return _poly_det_bareiss(rows, d)


def _poly_det_bareiss(m: list[list[UniPoly]], domain) -> UniPoly:
    """Fraction-free determinant of a polynomial matrix (divisions are exact)."""
    k = len(m)
    a = [row[:] for row in m]
    sign = 1
    prev = UniPoly(domain, [domain.one])
    for col in range(k - 1):
        piv = None
        for r in range(col, k):
            if not a[r][col].is_zero():
                piv = r
                break
        if piv is None:
            return UniPoly.zero(domain)
        if piv != col:
            a[col], a[piv] = a[piv], a[col]
            sign = -sign
        for r in range(col + 1, k):
            for c in range(col + 1, k):
                num = a[r][c] * a[col][col] - a[r][col] * a[col][c]
                q, rem = num.divmod(prev)
                assert rem.is_zero(), "Bareiss division must be exact"
                a[r][c] = q
            a[r][col] = UniPoly.zero(domain)
        prev = a[col][col]
    det = a[k - 1][k - 1]
    return det if sign == 1 else -det

"""Coefficient domains: rationals, prime fields, Gaussian rationals.

A domain is a small object mediating exact field arithmetic on opaque
element values; polynomials stay generic over the domain. Prime-field
elements are reduced ints in [0, p); rationals are fractions.Fraction;
Gaussian rationals are (re, im) pairs of fractions.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction


class CharacteristicError(ValueError):
    """The prime-field characteristic is too small for the construction."""


@dataclass(frozen=True)
class GaussRat:
    """A Gaussian rational re + im*sqrt(-1)."""

    re: Fraction
    im: Fraction

    def __add__(self, other):
        return GaussRat(self.re + other.re, self.im + other.im)

    def __sub__(self, other):
        return GaussRat(self.re - other.re, self.im - other.im)

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return GaussRat(self.re * other, self.im * other)
        return GaussRat(
            self.re * other.re - self.im * other.im,
            self.re * other.im + self.im * other.re,
        )

    def __rmul__(self, other):
        return GaussRat(self.re * other, self.im * other)

    def __neg__(self):
        return GaussRat(-self.re, -self.im)

    def inverse(self) -> "GaussRat":
        nrm = self.re * self.re + self.im * self.im
        if nrm == 0:
            raise ZeroDivisionError("inverse of zero Gaussian rational")
        return GaussRat(self.re / nrm, -self.im / nrm)

    def __truediv__(self, other):
        return self * other.inverse()

    def __rtruediv__(self, other):
        # 1 / z and q / z for rational q
        return GaussRat(Fraction(other), Fraction(0)) * self.inverse()

    def __bool__(self):
        return self.re != 0 or self.im != 0

    def __str__(self):
        return f"({self.re}+{self.im}i)"


class Rationals:
    """The field of arbitrary-precision rationals."""

    characteristic = 0
    zero = Fraction(0)
    one = Fraction(1)

    @staticmethod
    def from_int(a: int) -> Fraction:
        return Fraction(a)

    @staticmethod
    def add(a, b):
        return a + b

    @staticmethod
    def sub(a, b):
        return a - b

    @staticmethod
    def mul(a, b):
        return a * b

    @staticmethod
    def neg(a):
        return -a

    @staticmethod
    def div(a, b):
        return a / b

    @staticmethod
    def inv(a):
        return 1 / Fraction(a)

    @staticmethod
    def is_zero(a) -> bool:
        return a == 0

    def __eq__(self, other):
        return isinstance(other, Rationals)

    def __hash__(self):
        return hash("Rationals")

    def __repr__(self):
        return "QQ"


class GaussianRationals:
    """The field Q[sqrt(-1)] with elements stored as (re, im) pairs."""

    characteristic = 0
    zero = GaussRat(Fraction(0), Fraction(0))
    one = GaussRat(Fraction(1), Fraction(0))
    i = GaussRat(Fraction(0), Fraction(1))

    @staticmethod
    def from_int(a: int) -> GaussRat:
        return GaussRat(Fraction(a), Fraction(0))

    @staticmethod
    def from_rational(a) -> GaussRat:
        return GaussRat(Fraction(a), Fraction(0))

    @staticmethod
    def add(a, b):
        return a + b

    @staticmethod
    def sub(a, b):
        return a - b

    @staticmethod
    def mul(a, b):
        return a * b

    @staticmethod
    def neg(a):
        return -a

    @staticmethod
    def div(a, b):
        return a * b.inverse()

    @staticmethod
    def inv(a):
        return a.inverse()

    @staticmethod
    def is_zero(a) -> bool:
        return a.re == 0 and a.im == 0

    def __eq__(self, other):
        return isinstance(other, GaussianRationals)

    def __hash__(self):
        return hash("GaussianRationals")

    def __repr__(self):
        return "QQ[i]"


class PrimeField:
    """Z/pZ for an odd prime p; elements are reduced ints."""

    def __init__(self, p: int):
        if p < 3 or not is_probable_prime(p):
            raise ValueError(f"modulus {p} is not an odd prime")
        self.p = p
        self.characteristic = p
        self.zero = 0
        self.one = 1

    def from_int(self, a: int) -> int:
        return a % self.p

    def from_rational(self, a: Fraction) -> int:
        den = a.denominator % self.p
        if den == 0:
            raise ZeroDivisionError(f"denominator of {a} vanishes mod {self.p}")
        return a.numerator % self.p * pow(den, self.p - 2, self.p) % self.p

    def add(self, a, b):
        return (a + b) % self.p

    def sub(self, a, b):
        return (a - b) % self.p

    def mul(self, a, b):
        return a * b % self.p

    def neg(self, a):
        return -a % self.p

    def div(self, a, b):
        return a * pow(b, self.p - 2, self.p) % self.p

    def inv(self, a):
        if a % self.p == 0:
            raise ZeroDivisionError(f"inverse of 0 mod {self.p}")
        return pow(a, self.p - 2, self.p)

    @staticmethod
    def is_zero(a) -> bool:
        return a == 0

    def __eq__(self, other):
        return isinstance(other, PrimeField) and other.p == self.p

    def __hash__(self):
        return hash(("PrimeField", self.p))

    def __repr__(self):
        return f"GF({self.p})"


QQ = Rationals()
QQi = GaussianRationals()


_MR_WITNESSES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37)


def is_probable_prime(n: int) -> bool:
    """Miller-Rabin; deterministic for n < 3.3e24 with the fixed witness set."""
    if n < 2:
        return False
    for q in _MR_WITNESSES:
        if n % q == 0:
            return n == q
    d, s = n - 1, 0
    while d % 2 == 0:
        d //= 2
        s += 1
    for a in _MR_WITNESSES:
        x = pow(a, d, n)
        if x in (1, n - 1):
            continue
        for _ in range(s - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


def random_prime(rng, lo: int = 10**4, hi: int = 2**31) -> int:
    """Uniformly random prime in [lo, hi) by rejection sampling."""
    while True:
        c = rng.randrange(lo, hi) | 1
        if is_probable_prime(c):
            return c

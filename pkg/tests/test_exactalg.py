import random
from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from sclab.exactalg import (
    QQ,
    QQi,
    GaussRat,
    PrimeField,
    SquarefreeViolationError,
    UniPoly,
    cycle_type_of,
    factor_mod_p,
    is_probable_prime,
    random_prime,
    squarefree_and_degree,
    squarefree_decomposition,
    sturm_count,
    sturm_count_interval,
    wronskian,
)
from helpers import count_real_roots_bisection


def qpoly(*ints):
    return UniPoly.from_ints(QQ, list(ints))


class TestUniPoly:
    def test_divmod_roundtrip(self):
        rng = random.Random(2)
        for _ in range(50):
            a = qpoly(*[rng.randint(-9, 9) for _ in range(rng.randint(1, 8))])
            b = qpoly(*[rng.randint(-9, 9) for _ in range(rng.randint(1, 6))])
            if b.is_zero():
                continue
            q, r = a.divmod(b)
            assert q * b + r == a
            assert r.is_zero() or r.degree < b.degree

    def test_gcd_divides_both(self):
        a = qpoly(-1, 0, 1) * qpoly(2, 1)
        b = qpoly(1, 1) * qpoly(2, 1)
        g = a.gcd(b)
        assert (a % g).is_zero() and (b % g).is_zero()
        assert g.degree >= 1

    def test_derivative(self):
        assert qpoly(5, 3, 0, 2).derivative() == qpoly(3, 0, 6)


class TestSturm:
    def test_examples(self):
        assert sturm_count(qpoly(0, -1, 0, 1)) == 3
        assert sturm_count(qpoly(1, 0, 1)) == 0
        assert sturm_count(qpoly(0, 4, 0, -5, 0, 1)) == 5

    def test_rejects_non_squarefree(self):
        with pytest.raises(SquarefreeViolationError):
            sturm_count(qpoly(1, -2, 1))

    def test_interval_count(self):
        f = qpoly(0, -1, 0, 1)  # roots -1, 0, 1
        assert sturm_count_interval(f, Fraction(-2), Fraction(2)) == 3
        assert sturm_count_interval(f, Fraction(0), Fraction(2)) == 1
        assert sturm_count_interval(f, Fraction(-1, 2), Fraction(1, 2)) == 1

    def test_against_bisection_oracle(self):
        rng = random.Random(11)
        done = 0
        while done < 250:
            coeffs = [rng.randint(-30, 30) for _ in range(rng.randint(2, 13))]
            f = qpoly(*coeffs)
            if f.degree < 1:
                continue
            try:
                ours = sturm_count(f)
            except SquarefreeViolationError:
                continue
            ints = [c.numerator for c in f.coeffs]
            assert ours == count_real_roots_bisection(ints), coeffs
            done += 1

    def test_gate(self):
        assert squarefree_and_degree(qpoly(-1, 0, 1), 2)
        assert not squarefree_and_degree(qpoly(1, -2, 1), 2)
        assert not squarefree_and_degree(qpoly(-1, 1), 2)


class TestWronskian:
    def test_examples(self):
        one, t = qpoly(1), qpoly(0, 1)
        t2 = qpoly(0, 0, 1)
        assert wronskian([one, t]) == qpoly(1)
        assert wronskian([t, t2]) == qpoly(0, 0, 1)
        f = qpoly(3, 1, 4)
        assert wronskian([f]) == f

    def test_degree_bound(self):
        rng = random.Random(3)
        k, n = 3, 6
        fs = [
            qpoly(*[rng.randint(-5, 5) for _ in range(n)]) for _ in range(k)
        ]
        w = wronskian(fs)
        assert w.is_zero() or w.degree <= k * (n - 1) - k * (k - 1) // 2

    def test_row_operations_scale_roots(self):
        # an invertible change of basis scales the Wronskian; the root
        # multiset is unchanged (gcd with the original has full degree)
        rng = random.Random(5)
        for _ in range(20):
            f1 = qpoly(*[rng.randint(-9, 9) for _ in range(4)])
            f2 = qpoly(*[rng.randint(-9, 9) for _ in range(4)])
            w1 = wronskian([f1, f2])
            if w1.is_zero():
                continue
            a, b, c, d = (Fraction(rng.randint(-5, 5)) for _ in range(4))
            if a * d - b * c == 0:
                continue
            g1 = f1.scale(a) + f2.scale(b)
            g2 = f1.scale(c) + f2.scale(d)
            w2 = wronskian([g1, g2])
            assert w2.degree == w1.degree
            assert w1.gcd(w2).degree == w1.degree


class TestPrimeField:
    def test_arithmetic_properties(self):
        rng = random.Random(1)
        dom = PrimeField(10007)
        for _ in range(200):
            a, b, c = (rng.randrange(1, dom.p) for _ in range(3))
            assert dom.mul(dom.mul(a, b), c) == dom.mul(a, dom.mul(b, c))
            assert dom.mul(dom.inv(a), a) == 1
            assert pow(a, dom.p - 2, dom.p) == dom.inv(a)

    def test_rational_reduction(self):
        dom = PrimeField(101)
        x = dom.from_rational(Fraction(3, 7))
        assert x * 7 % 101 == 3
        with pytest.raises(ZeroDivisionError):
            dom.from_rational(Fraction(1, 101))

    def test_prime_validation(self):
        with pytest.raises(ValueError):
            PrimeField(15)
        with pytest.raises(ValueError):
            PrimeField(2)


class TestGaussian:
    def test_field_ops(self):
        z = GaussRat(Fraction(1), Fraction(2))
        w = GaussRat(Fraction(3), Fraction(-1))
        assert z * w == GaussRat(Fraction(5), Fraction(5))
        assert (z * z.inverse()) == QQi.one
        assert QQi.is_zero(z - z)


class TestFactorModP:
    def test_x2_plus_1_mod_13(self):
        dom = PrimeField(13)
        fac = factor_mod_p(UniPoly.from_ints(dom, [1, 0, 1]))
        assert [(f.coeffs, m) for f, m in fac] == [([5, 1], 1), ([8, 1], 1)]

    def test_x2_plus_1_mod_7_irreducible(self):
        dom = PrimeField(7)
        fac = factor_mod_p(UniPoly.from_ints(dom, [1, 0, 1]))
        assert len(fac) == 1 and fac[0][0].degree == 2

    def test_x3_minus_x_mod_5(self):
        dom = PrimeField(5)
        fac = factor_mod_p(UniPoly.from_ints(dom, [0, -1, 0, 1]))
        assert sorted(tuple(f.coeffs) for f, _ in fac) == [
            (0, 1), (1, 1), (4, 1)]

    def test_multiplicities(self):
        dom = PrimeField(11)
        x = UniPoly.variable(dom)
        one = UniPoly.from_ints(dom, [1])
        f = (x - one) * (x - one) * (x + one) * x * x * x
        fac = factor_mod_p(f, random.Random(0))
        assert sorted((tuple(g.coeffs), m) for g, m in fac) == [
            ((0, 1), 3), ((1, 1), 1), ((10, 1), 2)]

    def test_round_trip_random(self):
        rng = random.Random(9)
        for p in (101, 10007, 11311):
            dom = PrimeField(p)
            for _ in range(60):
                coeffs = [rng.randrange(p) for _ in range(rng.randint(2, 14))]
                f = UniPoly(dom, coeffs)
                if f.degree < 1:
                    continue
                prod = UniPoly(dom, [f.lc()])
                for g, m in factor_mod_p(f, random.Random(4)):
                    for _ in range(m):
                        prod = prod * g
                assert prod == f

    def test_cycle_type(self):
        dom = PrimeField(13)
        assert cycle_type_of(UniPoly.from_ints(dom, [1, 0, 1])) == (1, 1)

    def test_seeded_determinism(self):
        dom = PrimeField(10007)
        coeffs = list(range(1, 12))
        f = UniPoly.from_ints(dom, coeffs)
        a = factor_mod_p(f, random.Random(3))
        b = factor_mod_p(f, random.Random(3))
        assert [(g.coeffs, m) for g, m in a] == [(g.coeffs, m) for g, m in b]

    def test_squarefree_decomposition_char_p_power(self):
        dom = PrimeField(3)
        # (x+1)^3 = x^3 + 1 in GF(3); derivative vanishes
        f = UniPoly.from_ints(dom, [1, 0, 0, 1])
        assert squarefree_decomposition(f) == [
            (UniPoly.from_ints(dom, [1, 1]), 3)
        ]


class TestPrimes:
    def test_miller_rabin(self):
        assert is_probable_prime(11311)
        assert is_probable_prime(2**31 - 1)
        assert not is_probable_prime(2**31)
        assert not is_probable_prime(3215031751)  # strong pseudoprime base 2..7

    def test_random_prime_range(self):
        rng = random.Random(0)
        for _ in range(10):
            p = random_prime(rng, 10**4, 2**31)
            assert 10**4 <= p < 2**31
            assert is_probable_prime(p)

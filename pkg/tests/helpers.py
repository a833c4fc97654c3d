"""Independent oracles used by the tests: a Descartes/bisection real-root
isolator, exact linear algebra helpers, and rational root extraction.

These deliberately avoid the library code paths they are used to check.
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd


def _variations(coeffs: list[int]) -> int:
    signs = [1 if c > 0 else -1 for c in coeffs if c != 0]
    return sum(1 for a, b in zip(signs, signs[1:]) if a * b < 0)


def _shift_by_one(p: list[int]) -> list[int]:
    """p(x+1) by repeated synthetic addition."""
    q = list(p)
    n = len(q)
    for i in range(n - 1):
        for j in range(n - 2, i - 1, -1):
            q[j] += q[j + 1]
    return q


def _roots_in_01(p: list[int]) -> int:
    """Distinct roots of a squarefree integer polynomial in the open (0,1),
    by Descartes' rule on the Moebius transport and interval bisection."""
    n = len(p) - 1
    transported = _shift_by_one(list(reversed(p)))
    v = _variations(transported)
    if v == 0:
        return 0
    if v == 1:
        return 1
    half = [c << (n - i) for i, c in enumerate(p)]  # 2^n p(x/2)
    mid_is_root = 1 if sum(half) == 0 else 0
    left = half
    right = _shift_by_one(list(half))
    return _roots_in_01(left) + mid_is_root + _roots_in_01(right)


def count_real_roots_bisection(coeffs: list[int]) -> int:
    """Number of distinct real roots of a squarefree integer polynomial."""
    p = list(coeffs)
    while p and p[-1] == 0:
        p.pop()
    if len(p) <= 1:
        return 0
    total = 0
    if p[0] == 0:
        total += 1
        while p[0] == 0:
            p.pop(0)
        if len(p) == 1:
            return total
    # Cauchy bound, rounded to a power of two
    bound = 1 + max(abs(c) for c in p[:-1]) // abs(p[-1]) + 1
    b = 1
    while b < bound:
        b <<= 1
    n = len(p) - 1
    pos = [c * b**i for i, c in enumerate(p)]  # p(bx) on (0,1)
    neg = [c * (-b) ** i for i, c in enumerate(p)]
    total += _roots_in_01(pos) + _roots_in_01(neg)
    return total


def rref(rows: list[list[Fraction]]) -> list[list[Fraction]]:
    m = [list(r) for r in rows]
    nr, nc = len(m), len(m[0])
    r = 0
    for c in range(nc):
        piv = next((i for i in range(r, nr) if m[i][c] != 0), None)
        if piv is None:
            continue
        m[r], m[piv] = m[piv], m[r]
        inv = 1 / m[r][c]
        m[r] = [v * inv for v in m[r]]
        for i in range(nr):
            if i != r and m[i][c] != 0:
                f = m[i][c]
                m[i] = [a - f * b for a, b in zip(m[i], m[r])]
        r += 1
        if r == nr:
            break
    return m


def kernel_basis(rows: list[list[Fraction]]) -> list[list[Fraction]]:
    """Basis of the right null space of a full-row-rank matrix."""
    red = rref(rows)
    nc = len(rows[0])
    pivots = []
    for row in red:
        piv = next((j for j, v in enumerate(row) if v != 0), None)
        if piv is not None:
            pivots.append(piv)
    free = [j for j in range(nc) if j not in pivots]
    basis = []
    for f in free:
        vec = [Fraction(0)] * nc
        vec[f] = Fraction(1)
        for row, piv in zip(red, pivots):
            vec[piv] = -row[f]
        basis.append(vec)
    return basis


def rational_roots(coeffs: list[int]) -> set[Fraction]:
    """All rational roots of an integer polynomial (rational root theorem)."""
    p = list(coeffs)
    while p and p[-1] == 0:
        p.pop()
    if not p:
        raise ValueError("zero polynomial")
    roots: set[Fraction] = set()
    if p[0] == 0:
        roots.add(Fraction(0))
        while p[0] == 0:
            p.pop(0)
    if len(p) <= 1:
        return roots

    def divisors(m: int) -> list[int]:
        m = abs(m)
        out = []
        i = 1
        while i * i <= m:
            if m % i == 0:
                out += [i, m // i]
            i += 1
        return sorted(set(out))

    def ev(x: Fraction) -> Fraction:
        acc = Fraction(0)
        for c in reversed(p):
            acc = acc * x + c
        return acc

    for num in divisors(p[0]):
        for den in divisors(p[-1]):
            if gcd(num, den) != 1:
                continue
            for s in (1, -1):
                x = Fraction(s * num, den)
                if ev(x) == 0:
                    roots.add(x)
    return roots


def det_fraction(rows: list[list[Fraction]]) -> Fraction:
    """Exact determinant by fraction Gaussian elimination."""
    m = [list(r) for r in rows]
    n = len(m)
    det = Fraction(1)
    for c in range(n):
        piv = next((i for i in range(c, n) if m[i][c] != 0), None)
        if piv is None:
            return Fraction(0)
        if piv != c:
            m[c], m[piv] = m[piv], m[c]
            det = -det
        det *= m[c][c]
        inv = 1 / m[c][c]
        for i in range(c + 1, n):
            if m[i][c] != 0:
                f = m[i][c] * inv
                m[i] = [a - f * b for a, b in zip(m[i], m[c])]
    return det

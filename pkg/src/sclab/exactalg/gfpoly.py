"""Univariate factorization over prime fields.

Squarefree decomposition, distinct-degree splitting via Frobenius powers,
and randomized Cantor-Zassenhaus equal-degree splitting. The randomized
steps draw from an explicit rng so runs are reproducible per seed.
"""

from __future__ import annotations

import random

from .domains import PrimeField
from .unipoly import UniPoly


def _powmod(a: UniPoly, e: int, f: UniPoly) -> UniPoly:
    """a^e mod f by square and multiply."""
    result = UniPoly(a.domain, [a.domain.one])
    base = a % f
    while e:
        if e & 1:
            result = (result * base) % f
        base = (base * base) % f
        e >>= 1
    return result


def squarefree_decomposition(f: UniPoly) -> list[tuple[UniPoly, int]]:
    """Monic squarefree parts [(g, multiplicity)] with f = lc * prod g^m."""
    dom = f.domain
    if not isinstance(dom, PrimeField):
        raise TypeError("squarefree decomposition over GF(p) only")
    p = dom.p
    f = f.monic()
    out: list[tuple[UniPoly, int]] = []

    def rec(g: UniPoly, mult: int):
        if g.degree < 1:
            return
        dg = g.derivative()
        if dg.is_zero():
            # g = h(x^p) = h1(x)^p in GF(p)[x]
            h = UniPoly(dom, [g.coeffs[i] for i in range(0, len(g.coeffs), p)])
            rec(h, mult * p)
            return
        c = g.gcd(dg)
        w = (g // c).monic()
        i = 1
        while w.degree > 0:
            y = w.gcd(c)
            z = (w // y).monic()
            if z.degree > 0:
                out.append((z, mult * i))
            w = y
            c = c // y
            i += 1
        if c.degree > 0:
            rec(c, mult)

    rec(f, 1)
    out.sort(key=lambda gm: (gm[1], gm[0].degree, tuple(gm[0].coeffs)))
    return out


def distinct_degree(f: UniPoly) -> list[tuple[UniPoly, int]]:
    """Split monic squarefree f into [(product of irreducibles of degree d, d)]."""
    dom = f.domain
    p = dom.p
    x = UniPoly.variable(dom)
    out = []
    h = x
    g = f
    d = 0
    while g.degree > 0:
        d += 1
        if g.degree < 2 * d:
            out.append((g, g.degree))
            break
        h = _powmod(h, p, g)
        fac = g.gcd(h - x)
        if fac.degree > 0:
            out.append((fac.monic(), d))
            g = (g // fac).monic()
            h = h % g
    return out


def equal_degree_split(f: UniPoly, d: int, rng: random.Random) -> list[UniPoly]:
    """Factor monic squarefree f whose irreducible factors all have degree d,
    by Cantor-Zassenhaus splitting (p odd)."""
    dom = f.domain
    p = dom.p
    if f.degree == d:
        return [f]
    exponent = (p**d - 1) // 2
    while True:
        a = UniPoly(dom, [rng.randrange(p) for _ in range(f.degree)])
        if a.degree < 1:
            continue
        g = f.gcd(a)
        if 0 < g.degree < f.degree:
            left, right = g.monic(), (f // g).monic()
        else:
            t = _powmod(a, exponent, f)
            g = f.gcd(t - UniPoly(dom, [dom.one]))
            if 0 < g.degree < f.degree:
                left, right = g.monic(), (f // g).monic()
            else:
                continue
        return equal_degree_split(left, d, rng) + equal_degree_split(right, d, rng)


def factor_mod_p(f: UniPoly, rng: random.Random | None = None) -> list[tuple[UniPoly, int]]:
    """Complete factorization over GF(p): [(monic irreducible, multiplicity)].

    The leading coefficient of f times the product of the factors (with
    multiplicity) reproduces f exactly.
    """
    dom = f.domain
    if not isinstance(dom, PrimeField):
        raise TypeError("factor_mod_p needs prime-field coefficients")
    if f.is_zero():
        raise ValueError("factor of the zero polynomial")
    rng = rng or random.Random(0x5CAB)
    out: list[tuple[UniPoly, int]] = []
    for g, mult in squarefree_decomposition(f):
        for part, d in distinct_degree(g):
            for irr in equal_degree_split(part, d, rng):
                out.append((irr, mult))
    out.sort(key=lambda fm: (fm[0].degree, tuple(fm[0].coeffs), fm[1]))
    return out


def cycle_type_of(f: UniPoly, rng: random.Random | None = None) -> tuple[int, ...]:
    """Descending degrees of the irreducible factors, with multiplicity."""
    degs: list[int] = []
    for g, mult in factor_mod_p(f, rng):
        degs.extend([g.degree] * mult)
    return tuple(sorted(degs, reverse=True))

"""Buchberger engine and eliminants of zero-dimensional systems.

Monomials are packed into single integers (8-bit exponent fields plus a
total-degree field) so that monomial multiplication is integer addition,
divisibility is a masked subtraction, and the grevlex order is integer
comparison of derived keys. Coefficients are ints mod p on the fast path
and Fractions on the direct rational path.

The eliminant of a zero-dimensional system in a retained coordinate is the
monic generator of the elimination ideal; it is computed as the minimal
polynomial of the retained linear form acting on the quotient algebra
(Krylov sequence over the staircase basis), which is the same polynomial as
the lowest-degree univariate member of a lexicographic Groebner basis with
the retained variable last.
"""

from __future__ import annotations

import heapq
from fractions import Fraction
from math import gcd, isqrt

from .domains import QQ, PrimeField, Rationals, is_probable_prime
from .multipoly import MultiPoly, PolySystem
from .unipoly import UniPoly


class DimensionError(RuntimeError):
    """The ideal is not zero-dimensional; no eliminant exists."""


class ReconstructionError(RuntimeError):
    """Multi-modular reconstruction failed to stabilize."""


_FB = 8  # bits per exponent field
_DEGCAP = 120


class _Ctx:
    """Packing constants and order keys for a fixed variable count."""

    def __init__(self, nvars: int, order: str = "grevlex"):
        self.nvars = nvars
        self.order = order
        self.degshift = _FB * nvars
        self.varmask = sum(0xFF << (_FB * i) for i in range(nvars))
        self.varcomp = sum(0x7F << (_FB * i) for i in range(nvars))
        self.guards = sum(0x80 << (_FB * i) for i in range(nvars))
        self.guards |= 1 << (self.degshift + 15)

    def pack(self, exps) -> int:
        if any(e > 100 for e in exps):
            raise OverflowError("exponent exceeds packing capacity")
        m = sum(e << (_FB * i) for i, e in enumerate(exps))
        return m | (sum(exps) << self.degshift)

    def unpack(self, m: int) -> tuple[int, ...]:
        return tuple((m >> (_FB * i)) & 0xFF for i in range(self.nvars))

    def key(self, m: int) -> int:
        if self.order == "grevlex":
            return m + self.varcomp - 2 * (m & self.varmask)
        e = self.unpack(m)  # lex: x0 most significant
        return sum(v << (_FB * (self.nvars - 1 - i)) for i, v in enumerate(e))

    def kd(self, shift: int) -> int:
        """key(m + shift) == key(m) + kd(shift) for in-range monomials."""
        if self.order == "grevlex":
            return shift - 2 * (shift & self.varmask)
        e = self.unpack(shift)
        return sum(v << (_FB * (self.nvars - 1 - i)) for i, v in enumerate(e))

    def lcm(self, a: int, b: int) -> int:
        ea, eb = self.unpack(a), self.unpack(b)
        return self.pack(tuple(max(x, y) for x, y in zip(ea, eb)))

    def unit(self, i: int) -> int:
        return (1 << (_FB * i)) | (1 << self.degshift)


def _inv(c, p):
    return pow(c, p - 2, p) if p else 1 / c


def _compile(f: MultiPoly, ctx: _Ctx, p):
    """MultiPoly -> descending term list [(key, mono, coeff)]."""
    terms = []
    for m, c in f.terms.items():
        mono = ctx.pack(m)
        cc = c % p if p else c
        if cc:
            terms.append((ctx.key(mono), mono, cc))
    terms.sort(reverse=True)
    return terms


def _decompile(terms, ctx: _Ctx, p, nvars: int, domain=None) -> MultiPoly:
    if domain is None:
        domain = PrimeField(p) if p else QQ
    out = MultiPoly(domain, nvars)
    for _, m, c in terms:
        out.terms[ctx.unpack(m)] = c
    return out


def _merge(a, ai, g, gi, shift, kd, c, p):
    """a[ai:] - c * x^shift * g[gi:], inputs descending, output descending."""
    res = []
    la, lg = len(a), len(g)
    i, j = ai, gi
    while i < la and j < lg:
        ka = a[i][0]
        kg = g[j][0] + kd
        if ka > kg:
            res.append(a[i])
            i += 1
        elif kg > ka:
            cc = (-c * g[j][2]) % p if p else -c * g[j][2]
            if cc:
                res.append((kg, g[j][1] + shift, cc))
            j += 1
        else:
            cc = (a[i][2] - c * g[j][2]) % p if p else a[i][2] - c * g[j][2]
            if cc:
                res.append((ka, a[i][1], cc))
            i += 1
            j += 1
    res.extend(a[i:])
    while j < lg:
        cc = (-c * g[j][2]) % p if p else -c * g[j][2]
        if cc:
            res.append((g[j][0] + kd, g[j][1] + shift, cc))
        j += 1
    return res


def _normal_form(fterms, G, ctx: _Ctx, p):
    """Full normal form of fterms modulo the monic reducers in G."""
    guards = ctx.guards
    degshift = ctx.degshift
    out = []
    cur = fterms
    i = 0
    while i < len(cur):
        k0, m0, c0 = cur[i]
        if (m0 >> degshift) > _DEGCAP:
            raise OverflowError("degree blow-up during reduction")
        hit = None
        for lk, lm, gt in G:
            if lk > k0:
                continue
            d = m0 - lm
            if d >= 0 and not (d & guards):
                hit = (lm, gt)
                break
        if hit is None:
            out.append(cur[i])
            i += 1
            continue
        lm, gt = hit
        shift = m0 - lm
        cur = _merge(cur, i + 1, gt, 1, shift, ctx.kd(shift), c0, p)
        i = 0
    return out


def _make_monic(terms, p):
    c = terms[0][2]
    if c == 1:
        return terms
    ic = _inv(c, p)
    if p:
        return [(k, m, cc * ic % p) for k, m, cc in terms]
    return [(k, m, cc * ic) for k, m, cc in terms]


def _spoly(f, g, ctx: _Ctx, p):
    """S-polynomial of two monic term lists."""
    mf, mg = f[0][1], g[0][1]
    big = ctx.lcm(mf, mg)
    sf, sg = big - mf, big - mg
    kdf = ctx.kd(sf)
    fs = [(k + kdf, m + sf, c) for k, m, c in f]
    return _merge(fs, 1, g, 1, sg, ctx.kd(sg), 1, p)


def _buchberger(inputs, ctx: _Ctx, p, pair_limit: int = 2_000_000):
    """Reduced Groebner basis of the term-list inputs; monic term lists."""
    G: list = []  # (leadkey, leadmono, terms)
    for t in sorted((t for t in inputs if t), key=lambda t: t[0][0]):
        nf = _normal_form(t, G, ctx, p)
        if nf:
            nf = _make_monic(nf, p)
            G.append((nf[0][0], nf[0][1], nf))
    heap: list = []
    pending: set = set()
    guards = ctx.guards

    def push_pairs(t):
        lm_t = G[t][1]
        for i in range(t):
            big = ctx.lcm(G[i][1], lm_t)
            heapq.heappush(heap, (ctx.key(big), big, i, t))
            pending.add((i, t))

    for t in range(len(G)):
        push_pairs(t)

    processed = 0
    while heap:
        processed += 1
        if processed > pair_limit:
            raise OverflowError("pair limit exceeded")
        _, big, i, j = heapq.heappop(heap)
        if (i, j) not in pending:
            continue
        pending.discard((i, j))
        lm_i, lm_j = G[i][1], G[j][1]
        if big == lm_i + lm_j:
            continue  # product criterion: coprime leads
        skip = False
        for k in range(len(G)):  # chain criterion
            if k == i or k == j:
                continue
            d = big - G[k][1]
            if d >= 0 and not (d & guards):
                a = (min(i, k), max(i, k))
                b = (min(j, k), max(j, k))
                if a not in pending and b not in pending:
                    skip = True
                    break
        if skip:
            continue
        s = _spoly(G[i][2], G[j][2], ctx, p)
        nf = _normal_form(s, G, ctx, p)
        if nf:
            nf = _make_monic(nf, p)
            G.append((nf[0][0], nf[0][1], nf))
            push_pairs(len(G) - 1)

    return _interreduce(G, ctx, p)


def _interreduce(G, ctx: _Ctx, p):
    keep = []
    for idx, (lk, lm, t) in enumerate(G):
        redundant = False
        for jdx, (lk2, lm2, _) in enumerate(G):
            if jdx == idx:
                continue
            d = lm - lm2
            if d >= 0 and not (d & ctx.guards):
                if d != 0 or jdx < idx:
                    redundant = True
                    break
        if not redundant:
            keep.append((lk, lm, t))
    keep.sort(key=lambda g: g[0])
    out = []
    for idx in range(len(keep)):
        others = out + keep[idx + 1 :]
        lk, lm, t = keep[idx]
        nt = [t[0]] + _normal_form(t[1:], others, ctx, p)
        out.append((lk, lm, nt))
    out.sort(key=lambda g: -g[0])
    return out


def _is_unit_basis(G) -> bool:
    return any(lm == 0 for _, lm, _ in G)


def _staircase(G, ctx: _Ctx):
    """Standard monomials under the lead ideal; DimensionError if infinite."""
    leads = [lm for _, lm, _ in G]
    guards = ctx.guards
    for i in range(ctx.nvars):
        fmask = 0xFF << (_FB * i)
        if not any((lm & ctx.varmask) and (lm & ctx.varmask) == (lm & fmask) for lm in leads):
            raise DimensionError(f"no pure power of variable {i} among the leads")

    def is_standard(m):
        for lm in leads:
            d = m - lm
            if d >= 0 and not (d & guards):
                return False
        return True

    basis = []
    seen = {0}
    queue = [0]
    while queue:
        m = queue.pop()
        basis.append(m)
        if len(basis) > 40000:
            raise DimensionError("staircase too large for a zero-dimensional ideal")
        for i in range(ctx.nvars):
            m2 = m + ctx.unit(i)
            if m2 not in seen:
                seen.add(m2)
                if is_standard(m2):
                    queue.append(m2)
    basis.sort(key=ctx.key)
    return basis


def _minpoly_of_form(G, ctx: _Ctx, p, ell):
    """Minimal polynomial (ascending monic coefficients) of sum(c_i x_i)
    acting on the quotient algebra."""
    stair = _staircase(G, ctx)
    dim = len(stair)
    index = {m: i for i, m in enumerate(stair)}
    zero = 0 if p else Fraction(0)
    one = 1 if p else Fraction(1)
    nf_cache: dict[int, list] = {}
    units = [ctx.unit(i) for i in range(ctx.nvars)]

    def border_vec(m):
        v = nf_cache.get(m)
        if v is None:
            nf = _normal_form([(ctx.key(m), m, one)], G, ctx, p)
            v = [zero] * dim
            for _, mm, cc in nf:
                v[index[mm]] = cc
            nf_cache[m] = v
        return v

    def apply_ell(v):
        w = [zero] * dim
        for idx, c in enumerate(v):
            if c == 0:
                continue
            m = stair[idx]
            for i, coef in ell:
                cc = c * coef % p if p else c * coef
                if cc == 0:
                    continue
                m2 = m + units[i]
                pos = index.get(m2)
                if pos is not None:
                    w[pos] = (w[pos] + cc) % p if p else w[pos] + cc
                else:
                    bv = border_vec(m2)
                    if p:
                        for t in range(dim):
                            if bv[t]:
                                w[t] = (w[t] + cc * bv[t]) % p
                    else:
                        for t in range(dim):
                            if bv[t]:
                                w[t] = w[t] + cc * bv[t]
        return w

    v = [zero] * dim
    v[index[0]] = one  # the class of the monomial 1
    rows: list[tuple[int, list, list]] = []
    step = 0
    while True:
        vec = list(v)
        comb = [zero] * step + [one]
        for piv, rv, rc in rows:
            c = vec[piv]
            if c == 0:
                continue
            f = c * _inv(rv[piv], p) % p if p else c / rv[piv]
            if p:
                for t in range(dim):
                    if rv[t]:
                        vec[t] = (vec[t] - f * rv[t]) % p
            else:
                for t in range(dim):
                    if rv[t]:
                        vec[t] = vec[t] - f * rv[t]
            for t in range(len(rc)):
                if rc[t]:
                    comb[t] = (comb[t] - f * rc[t]) % p if p else comb[t] - f * rc[t]
        piv = next((t for t in range(dim) if vec[t] != 0), None)
        if piv is None:
            return comb  # monic of degree == step
        rows.append((piv, vec, comb))
        step += 1
        if step > dim:
            raise RuntimeError("Krylov sequence failed to close")
        v = apply_ell(v)


# ---------------------------------------------------------------------------
# public surface


def groebner_basis(system: PolySystem, order: str = "grevlex") -> list[MultiPoly]:
    """Reduced monic Groebner basis, leads descending in the order.

    Coefficients may be rational, prime-field, or Gaussian-rational (the
    last for conjugate-pair cross-checks)."""
    domain = system.domain
    p = domain.p if isinstance(domain, PrimeField) else None
    ctx = _Ctx(system.nvars, order)
    G = _buchberger([_compile(f, ctx, p) for f in system.polys], ctx, p)
    return [_decompile(t, ctx, p, system.nvars, domain) for _, _, t in G]


def quotient_dimension(system: PolySystem) -> int:
    """Dimension of the quotient algebra (solutions with multiplicity) of a
    zero-dimensional system; DimensionError if positive-dimensional."""
    domain = system.domain
    p = domain.p if isinstance(domain, PrimeField) else None
    ctx = _Ctx(system.nvars)
    G = _buchberger([_compile(f, ctx, p) for f in system.polys], ctx, p)
    if _is_unit_basis(G):
        return 0
    return len(_staircase(G, ctx))


def _resolve_direction(system: PolySystem, retained, rng, p=None):
    """Map `retained` (variable name, coefficient list, or None for generic)
    to [(var index, coefficient)]."""
    if isinstance(retained, str):
        if retained not in system.varnames:
            raise KeyError(f"unknown variable {retained!r}")
        return [(system.varnames.index(retained), 1)]
    if retained is None:
        if rng is None:
            raise ValueError("generic retained coordinate needs an rng")
        if p:
            return [(i, rng.randrange(1, p)) for i in range(system.nvars)]
        coeffs = []
        for i in range(system.nvars):
            c = 0
            while c == 0:
                c = rng.randint(-99, 99)
            coeffs.append((i, c))
        return coeffs
    return [(i, int(c)) for i, c in enumerate(retained) if int(c) != 0]


def eliminate_modp(system: PolySystem, retained=None, rng=None) -> UniPoly:
    """Eliminant over GF(p). Unit polynomial signals an inconsistent system."""
    domain = system.domain
    if not isinstance(domain, PrimeField):
        raise TypeError("eliminate_modp needs prime-field coefficients")
    p = domain.p
    ell = [(i, c % p) for i, c in _resolve_direction(system, retained, rng, p=p)]
    ctx = _Ctx(system.nvars)
    G = _buchberger([_compile(f, ctx, p) for f in system.polys], ctx, p)
    if not G:
        raise DimensionError("zero ideal has no eliminant")
    if _is_unit_basis(G):
        return UniPoly(domain, [1])
    return UniPoly(domain, _minpoly_of_form(G, ctx, p, ell))


def eliminate_rational_direct(system: PolySystem, retained=None, rng=None) -> UniPoly:
    """Eliminant over QQ by a direct rational Buchberger run (small systems)."""
    if not isinstance(system.domain, Rationals):
        raise TypeError("expected rational coefficients")
    ell = [(i, Fraction(c)) for i, c in _resolve_direction(system, retained, rng)]
    ctx = _Ctx(system.nvars)
    G = _buchberger([_compile(f, ctx, None) for f in system.polys], ctx, None)
    if not G:
        raise DimensionError("zero ideal has no eliminant")
    if _is_unit_basis(G):
        return UniPoly(QQ, [Fraction(1)])
    return UniPoly(QQ, _minpoly_of_form(G, ctx, None, ell))


def crt_pair(r1: int, m1: int, r2: int, m2: int) -> tuple[int, int]:
    s = pow(m1, -1, m2)
    return (r1 + (r2 - r1) * s % m2 * m1) % (m1 * m2), m1 * m2


def rational_reconstruct(c: int, m: int) -> Fraction | None:
    """n/d with n = c*d mod m and |n|, d <= sqrt(m/2), or None."""
    c %= m
    if c == 0:
        return Fraction(0)
    bound = isqrt(m // 2)
    a0, a1 = m, c
    s0, s1 = 0, 1
    while a1 > bound:
        q = a0 // a1
        a0, a1 = a1, a0 - q * a1
        s0, s1 = s1, s0 - q * s1
    n, d = a1, s1
    if d < 0:
        n, d = -n, -d
    if d == 0 or d > bound or gcd(n, d) != 1 or (n - c * d) % m != 0:
        return None
    return Fraction(n, d)


def eliminate_rational_modular(
    system: PolySystem,
    retained=None,
    rng=None,
    max_primes: int = 400,
    prime_bits: int = 62,
) -> UniPoly:
    """Eliminant over QQ via mod-p runs, CRT, and rational reconstruction.

    The same retained form is used at every prime; a reconstruction is
    accepted only after it reproduces the eliminant independently computed at
    one extra verification prime.
    """
    if not isinstance(system.domain, Rationals):
        raise TypeError("expected rational coefficients")
    if rng is None:
        raise ValueError("modular elimination needs an rng")
    ell = _resolve_direction(system, retained, rng)

    lo, hi = 1 << (prime_bits - 1), 1 << prime_bits
    used: set[int] = set()
    results: dict[int, list[tuple[int, list[int]]]] = {}  # degree -> [(p, coeffs)]
    dim_errors = 0

    def run_one() -> tuple[int, list[int]] | None:
        nonlocal dim_errors
        while True:
            p = _fresh_prime(rng, lo, hi, used)
            used.add(p)
            try:
                sys_p = _reduce_system(system, p)
            except ZeroDivisionError:
                continue  # a denominator vanishes: bad prime
            ctx = _Ctx(sys_p.nvars)
            try:
                G = _buchberger([_compile(f, ctx, p) for f in sys_p.polys], ctx, p)
                if _is_unit_basis(G):
                    return p, [1]
                coeffs = _minpoly_of_form(G, ctx, p, [(i, c % p) for i, c in ell])
            except DimensionError:
                dim_errors += 1
                if dim_errors >= 4 and not results:
                    raise
                return None
            except OverflowError:
                return None
            return p, coeffs

    for _ in range(max_primes):
        got = run_one()
        if got is None:
            continue
        p, coeffs = got
        results.setdefault(len(coeffs) - 1, []).append((p, coeffs))
        pool = max(results.values(), key=len)
        if len(pool) < 2:
            continue
        rec = _try_reconstruct(pool)
        if rec is None:
            continue
        chk = run_one()
        if chk is None:
            continue
        cp, ccoeffs = chk
        results.setdefault(len(ccoeffs) - 1, []).append((cp, ccoeffs))
        if len(ccoeffs) == len(rec) and _matches_mod_p(rec, ccoeffs, cp):
            return UniPoly(QQ, rec)
    raise ReconstructionError(
        f"no stable reconstruction after {max_primes} primes "
        f"(degrees seen: {sorted(results)})"
    )


def _fresh_prime(rng, lo, hi, used) -> int:
    while True:
        c = rng.randrange(lo, hi) | 1
        if c not in used and is_probable_prime(c):
            return c


def _reduce_system(system: PolySystem, p: int) -> PolySystem:
    dom = PrimeField(p)
    return PolySystem(
        system.varnames, [f.map_domain(dom, dom.from_rational) for f in system.polys]
    )


def _try_reconstruct(pool) -> list[Fraction] | None:
    deg = len(pool[0][1]) - 1
    out: list[Fraction] = []
    for j in range(deg + 1):
        r, m = 0, 1
        for p, coeffs in pool:
            r, m = crt_pair(r, m, coeffs[j], p)
        v = rational_reconstruct(r, m)
        if v is None:
            return None
        out.append(v)
    return out


def _matches_mod_p(rec: list[Fraction], coeffs: list[int], p: int) -> bool:
    if len(rec) != len(coeffs):
        return False
    for v, c in zip(rec, coeffs):
        if v.denominator % p == 0:
            return False
        if v.numerator * pow(v.denominator, -1, p) % p != c % p:
            return False
    return True


def groebner_eliminate(
    system: PolySystem,
    retained=None,
    rng=None,
    backend: str = "auto",
) -> UniPoly:
    """Eliminant in the retained coordinate (variable name, coefficient list,
    or None for a random generic linear form).

    Over GF(p) the run is native. Over QQ, `backend` selects "rational"
    (direct Buchberger), "modular" (multi-modular with verification), or
    "auto" (rational for tiny systems). Inconsistent systems return the unit
    polynomial; positive-dimensional ideals raise DimensionError.
    """
    domain = system.domain
    if isinstance(domain, PrimeField):
        return eliminate_modp(system, retained, rng)
    if backend == "rational" or (backend == "auto" and system.nvars <= 4):
        return eliminate_rational_direct(system, retained, rng)
    return eliminate_rational_modular(system, retained, rng)

"""Partitions, tableaux, and the degree combinatorics of Schubert problems.

Everything here is exact integer combinatorics: intersection numbers are
computed by Littlewood-Richardson multiplication in the cohomology of
Gr(k,n), tableau counts by chain counting in Young's lattice, and Kostka
numbers by horizontal-strip dynamic programming.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from math import factorial
from typing import Iterator


class BoxViolationError(ValueError):
    """A partition does not fit the k x (n-k) box required by the operation."""


class CodimensionError(ValueError):
    """Condition codimensions do not sum to dim Gr(k,n)."""


def _normalize(parts) -> tuple[int, ...]:
    parts = tuple(int(p) for p in parts)
    for a, b in zip(parts, parts[1:]):
        if a < b:
            raise ValueError(f"parts must be weakly decreasing, got {parts}")
    if any(p < 0 for p in parts):
        raise ValueError(f"parts must be nonnegative, got {parts}")
    while parts and parts[-1] == 0:
        parts = parts[:-1]
    return parts


@dataclass(frozen=True)
class Partition:
    """A weakly decreasing tuple of positive integers (trailing zeros dropped)."""

    parts: tuple[int, ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "parts", _normalize(self.parts))

    @property
    def weight(self) -> int:
        return sum(self.parts)

    def __len__(self) -> int:
        return len(self.parts)

    def __iter__(self) -> Iterator[int]:
        return iter(self.parts)

    def __getitem__(self, i: int) -> int:
        """Part i (0-based); zero beyond the last row."""
        return self.parts[i] if i < len(self.parts) else 0

    def __le__(self, other: "Partition") -> bool:
        """Componentwise containment of Young diagrams."""
        return all(self[i] <= other[i] for i in range(len(self)))

    def fits_box(self, k: int, n: int) -> bool:
        return len(self.parts) <= k and (not self.parts or self.parts[0] <= n - k)

    def transpose(self) -> "Partition":
        if not self.parts:
            return Partition()
        return Partition(
            tuple(sum(1 for p in self.parts if p > i) for i in range(self.parts[0]))
        )

    def complement(self, k: int, n: int) -> "Partition":
        """Complement of the diagram in the k x (n-k) rectangle."""
        if not self.fits_box(k, n):
            raise BoxViolationError(f"{self} does not fit the {k}x{n-k} box")
        return Partition(tuple(n - k - self[k - 1 - i] for i in range(k)))

    def diagonal_length(self) -> int:
        return max((i + 1 for i in range(len(self.parts)) if self.parts[i] >= i + 1), default=0)

    def is_symmetric(self) -> bool:
        return self == self.transpose()

    def cells(self) -> list[tuple[int, int]]:
        return [(r, c) for r, p in enumerate(self.parts) for c in range(p)]

    def render(self) -> str:
        return ",".join(str(p) for p in self.parts) if self.parts else "0"

    def __str__(self) -> str:
        return "(" + self.render() + ")"


@dataclass(frozen=True)
class DerivedPartitionData:
    complement: Partition
    transpose: Partition
    diagonal_length: int
    is_symmetric: bool


def partition_derive(lam: Partition, k: int, n: int) -> DerivedPartitionData:
    """Complement in the k x (n-k) box plus box-free derived data."""
    return DerivedPartitionData(
        complement=lam.complement(k, n),
        transpose=lam.transpose(),
        diagonal_length=lam.diagonal_length(),
        is_symmetric=lam.is_symmetric(),
    )


@dataclass(frozen=True)
class SkewShape:
    """The diagram outer/inner; inner must be contained in outer."""

    outer: Partition
    inner: Partition = Partition()

    def __post_init__(self):
        if not (self.inner <= self.outer):
            raise ValueError(f"inner {self.inner} not contained in outer {self.outer}")

    @property
    def size(self) -> int:
        return self.outer.weight - self.inner.weight

    def cells(self) -> list[tuple[int, int]]:
        """Cells in reading order: row by row, left to right."""
        return [
            (r, c)
            for r in range(len(self.outer))
            for c in range(self.inner[r], self.outer[r])
        ]


@dataclass(frozen=True)
class SchubertProblem:
    """A list of box-bounded partitions whose codimensions fill dim Gr(k,n)."""

    k: int
    n: int
    conditions: tuple[Partition, ...]

    def __post_init__(self):
        if not (1 <= self.k < self.n):
            raise ValueError(f"need 1 <= k < n, got k={self.k}, n={self.n}")
        object.__setattr__(self, "conditions", tuple(self.conditions))
        for lam in self.conditions:
            if not lam.fits_box(self.k, self.n):
                raise BoxViolationError(
                    f"{lam} does not fit the {self.k}x{self.n - self.k} box"
                )
        total = sum(lam.weight for lam in self.conditions)
        if total != self.k * (self.n - self.k):
            raise CodimensionError(
                f"codimensions sum to {total}, expected {self.k * (self.n - self.k)}"
            )

    def distinct_conditions(self) -> list[Partition]:
        """Distinct partitions in order of first appearance."""
        seen: list[Partition] = []
        for lam in self.conditions:
            if lam not in seen:
                seen.append(lam)
        return seen

    def multiplicity(self, lam: Partition) -> int:
        return sum(1 for mu in self.conditions if mu == lam)

    def render(self) -> str:
        out = []
        for lam in self.distinct_conditions():
            m = self.multiplicity(lam)
            out.append(lam.render() + (f"^{m}" if m > 1 else ""))
        return ";".join(out)

    def __str__(self) -> str:
        return f"{self.render()} in Gr({self.k},{self.n})"


# ---------------------------------------------------------------------------
# Littlewood-Richardson multiplication and problem degrees


def _lr_counts(alpha: tuple[int, ...], lam: tuple[int, ...], k: int, width: int):
    """Expand s_alpha * s_lam over box-bounded partitions.

    Returns {nu: c^nu_{alpha,lam}} for nu inside the k x width box, by counting
    Littlewood-Richardson fillings of nu/alpha with content lam (column-strict,
    reverse reading word a ballot sequence).
    """
    return _lr_counts_cached(alpha, lam, k, width)


@lru_cache(maxsize=None)
def _lr_counts_cached(alpha, lam, k, width):
    result: dict[tuple[int, ...], int] = {}
    target = sum(alpha) + sum(lam)
    for nu in _box_partitions_of(target, k, width):
        if any(i >= len(nu) or nu[i] < alpha[i] for i in range(len(alpha))):
            continue  # need alpha contained in nu
        c = _count_lr_fillings(Partition(nu), Partition(alpha), lam)
        if c:
            result[nu] = c
    return result


@lru_cache(maxsize=None)
def _box_partitions_of(m: int, rows: int, width: int) -> tuple[tuple[int, ...], ...]:
    """All partitions of m with at most `rows` parts, each at most `width`."""
    out: list[tuple[int, ...]] = []

    def rec(prefix: list[int], remaining: int, maxpart: int, slots: int):
        if remaining == 0:
            out.append(tuple(prefix))
            return
        if slots == 0 or remaining > maxpart * slots:
            return
        for p in range(min(maxpart, remaining), 0, -1):
            prefix.append(p)
            rec(prefix, remaining - p, p, slots - 1)
            prefix.pop()

    rec([], m, width, rows)
    return tuple(out)


def _count_lr_fillings(outer: Partition, inner: Partition, content: tuple[int, ...]) -> int:
    """Count LR skew tableaux of shape outer/inner with the given content.

    Cells are filled in reverse reading order (right-to-left within a row, top
    row first) so the ballot condition is a running prefix check.
    """
    shape = SkewShape(outer, inner)
    cells = sorted(shape.cells(), key=lambda rc: (rc[0], -rc[1]))
    nletters = len(content)
    counts = [0] * (nletters + 1)
    entry: dict[tuple[int, int], int] = {}
    total = 0

    def rec(idx: int) -> int:
        nonlocal total
        if idx == len(cells):
            return 1
        r, c = cells[idx]
        found = 0
        for ell in range(1, nletters + 1):
            if counts[ell] >= content[ell - 1]:
                continue
            if ell >= 2 and counts[ell] + 1 > counts[ell - 1]:
                continue  # ballot prefix would fail
            right = entry.get((r, c + 1))
            if right is not None and ell > right:
                continue  # rows weakly increase left to right
            above = entry.get((r - 1, c))
            if r > 0 and inner[r - 1] <= c < outer[r - 1]:
                if above is None or ell <= above:
                    continue  # columns strictly increase
            entry[(r, c)] = ell
            counts[ell] += 1
            found += rec(idx + 1)
            counts[ell] -= 1
            del entry[(r, c)]
        return found

    return rec(0)


def problem_degree(problem: SchubertProblem) -> int:
    """Number of solutions d to the Schubert problem, for general flags.

    Iterated LR multiplication in H*(Gr(k,n)): classes outside the box are
    discarded, and the coefficient of the full-box class is the answer.
    """
    k, width = problem.k, problem.n - problem.k
    state: dict[tuple[int, ...], int] = {(): 1}
    for lam in sorted(problem.conditions, key=lambda p: -p.weight):
        nxt: dict[tuple[int, ...], int] = {}
        for alpha, coeff in state.items():
            for nu, c in _lr_counts(alpha, lam.parts, k, width).items():
                nxt[nu] = nxt.get(nu, 0) + coeff * c
        state = nxt
        if not state:
            return 0
    full = tuple([width] * k)
    return state.get(full, 0)


def wronski_degree(k: int, n: int) -> int:
    """Degree of the Wronski map on Gr(k,n): the number of k-planes of
    polynomials with a prescribed general Wronskian."""
    if not 1 <= k < n:
        raise ValueError(f"need 1 <= k < n, got ({k},{n})")
    num = factorial(k * (n - k))
    for i in range(1, k):
        num *= factorial(i)
    den = 1
    for i in range(n - k, n):
        den *= factorial(i)
    assert num % den == 0
    return num // den


# ---------------------------------------------------------------------------
# Standard tableaux of skew shapes: counting, enumeration, sign-imbalance


def count_tableaux(shape: SkewShape) -> int:
    """Number of standard Young tableaux of the skew shape.

    Counts saturated chains inner -> outer in Young's lattice; every standard
    filling adds its entries as one box per step.
    """
    outer, inner = shape.outer.parts, shape.inner.parts

    @lru_cache(maxsize=None)
    def chains(cur: tuple[int, ...]) -> int:
        if cur == inner:
            return 1
        total = 0
        for i in range(len(cur)):
            lower = cur[i + 1] if i + 1 < len(cur) else 0
            if cur[i] - 1 >= max(lower, inner[i] if i < len(inner) else 0):
                nxt = list(cur)
                nxt[i] -= 1
                while nxt and nxt[-1] == 0:
                    nxt.pop()
                total += chains(tuple(nxt))
        return total

    return chains(outer)


def standard_tableaux(shape: SkewShape) -> Iterator[dict[tuple[int, int], int]]:
    """Yield all standard fillings as {cell: entry} maps, entries 1..size."""
    cells = shape.cells()
    outer, inner = shape.outer, shape.inner
    entry: dict[tuple[int, int], int] = {}

    def ok(r: int, c: int, v: int) -> bool:
        left = entry.get((r, c - 1))
        if c - 1 >= inner[r] and (left is None or left > v):
            return False
        above = entry.get((r - 1, c))
        if r > 0 and inner[r - 1] <= c < outer[r - 1] and (above is None or above > v):
            return False
        return True

    def rec(v: int) -> Iterator[dict[tuple[int, int], int]]:
        if v > len(cells):
            yield dict(entry)
            return
        for rc in cells:
            if rc in entry:
                continue
            if ok(rc[0], rc[1], v):
                entry[rc] = v
                yield from rec(v + 1)
                del entry[rc]

    yield from rec(1)


def _perm_sign(perm: list[int]) -> int:
    """Sign via cycle decomposition; perm maps index -> value on 0..m-1."""
    seen = [False] * len(perm)
    sign = 1
    for i in range(len(perm)):
        if seen[i]:
            continue
        length = 0
        j = i
        while not seen[j]:
            seen[j] = True
            j = perm[j]
            length += 1
        if length % 2 == 0:
            sign = -sign
    return sign


def sign_imbalance(shape: SkewShape) -> int:
    """|sum of tableau signs|, the sign of the permutation taking the
    reading-order filling to the tableau."""
    cells = shape.cells()
    index = {rc: i for i, rc in enumerate(cells)}
    total = 0
    for t in standard_tableaux(shape):
        perm = [0] * len(cells)
        for rc, v in t.items():
            perm[index[rc]] = v - 1
        total += _perm_sign(perm)
    return abs(total)


# ---------------------------------------------------------------------------
# Kostka numbers


def kostka(k: int, n: int, content: tuple[int, ...] | list[int]) -> int:
    """Semistandard tableaux of rectangular shape (n-k)^k with given content.

    This is the degree of the special Schubert problem with conditions given
    by the content; entries larger than n-k force a zero count.
    """
    content = tuple(int(a) for a in content)
    if any(a <= 0 for a in content):
        raise ValueError("content entries must be positive")
    if sum(content) != k * (n - k):
        raise CodimensionError(
            f"content sums to {sum(content)}, expected {k * (n - k)}"
        )
    width = n - k
    target = tuple([width] * k)

    @lru_cache(maxsize=None)
    def strips(cur: tuple[int, ...], letter: int) -> int:
        if letter == len(content):
            return 1 if cur == target else 0
        a = content[letter]
        total = 0
        for nxt in _horizontal_strips(cur, a, k, width):
            total += strips(nxt, letter + 1)
        return total

    result = strips((), 0)
    strips.cache_clear()
    return result


def _horizontal_strips(
    base: tuple[int, ...], size: int, rows: int, width: int
) -> Iterator[tuple[int, ...]]:
    """Partitions obtained from base by adding a horizontal strip of the
    given size inside the rows x width box (no two new cells in a column)."""
    base_full = [base[i] if i < len(base) else 0 for i in range(rows)]

    def rec(i: int, remaining: int, acc: list[int]) -> Iterator[tuple[int, ...]]:
        if i == rows:
            if remaining == 0:
                out = tuple(acc)
                while out and out[-1] == 0:
                    out = out[:-1]
                yield out
            return
        lo = base_full[i]
        # interlacing: row i may grow at most to the previous row's old length,
        # so no two added cells share a column
        hi = width if i == 0 else base_full[i - 1]
        for new in range(lo, hi + 1):
            add = new - lo
            if add > remaining:
                break
            acc.append(new)
            yield from rec(i + 1, remaining - add, acc)
            acc.pop()

    yield from rec(0, size, [])

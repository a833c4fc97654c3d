import random
from math import comb

import pytest
from hypothesis import given, settings, strategies as st

from sclab.combinat import (
    BoxViolationError,
    CodimensionError,
    Partition,
    SchubertProblem,
    SkewShape,
    count_tableaux,
    kostka,
    partition_derive,
    problem_degree,
    sign_imbalance,
    standard_tableaux,
    wronski_degree,
)

P = Partition


def problem(k, n, conds):
    return SchubertProblem(k, n, tuple(P(c) for c in conds))


@st.composite
def box_partitions(draw, k=4, width=4):
    rows = draw(st.integers(0, k))
    parts = []
    top = width
    for _ in range(rows):
        p = draw(st.integers(0, top))
        parts.append(p)
        top = p
    return P(tuple(x for x in parts if x))


class TestPartition:
    def test_normalization_drops_trailing_zeros(self):
        assert P((3, 1, 0, 0)).parts == (3, 1)

    def test_rejects_increasing(self):
        with pytest.raises(ValueError):
            P((1, 3))

    def test_complement_from_the_paper(self):
        assert partition_derive(P((3, 1)), 3, 8).complement == P((5, 4, 2))

    def test_empty_partition_derivation(self):
        d = partition_derive(P(()), 2, 5)
        assert d.complement == P((3, 3))
        assert d.diagonal_length == 0
        assert d.is_symmetric

    def test_square_is_symmetric(self):
        d = partition_derive(P((2, 2)), 2, 4)
        assert d.transpose == P((2, 2))
        assert d.diagonal_length == 2
        assert d.is_symmetric

    def test_box_violation(self):
        with pytest.raises(BoxViolationError):
            P((5,)).complement(2, 4)

    @given(box_partitions())
    def test_complement_is_an_involution(self, lam):
        assert lam.complement(4, 8).complement(4, 8) == lam

    @given(box_partitions())
    def test_transpose_is_an_involution(self, lam):
        assert lam.transpose().transpose() == lam


class TestDegrees:
    def test_four_lines(self):
        assert problem_degree(problem(2, 4, [(1,)] * 4)) == 2

    def test_rectangle_problem_gr48(self):
        assert problem_degree(problem(4, 8, [(2, 2)] * 4)) == 6

    def test_gr36_wronski(self):
        assert problem_degree(problem(3, 6, [(1,)] * 9)) == 42

    def test_gr39_large_simple(self):
        p = problem(3, 9, [(2, 1), (2,)] + [(1,)] * 13)
        assert problem_degree(p) == 17589

    def test_gr48_box_family(self):
        assert problem_degree(problem(4, 8, [(3, 3, 3)] + [(1,)] * 7)) == 20

    def test_degree_errors(self):
        with pytest.raises(CodimensionError):
            problem(2, 4, [(1,)] * 3)
        with pytest.raises(BoxViolationError):
            problem(2, 4, [(3,), (1,), (1,)])

    def test_permutation_invariance(self):
        rng = random.Random(7)
        conds = [(2, 1), (2,)] + [(1,)] * 7
        p = problem(3, 7, conds)
        d = problem_degree(p)
        for _ in range(5):
            rng.shuffle(conds)
            assert problem_degree(problem(3, 7, conds)) == d

    def test_wronski_values(self):
        assert wronski_degree(2, 4) == 2
        assert wronski_degree(3, 6) == 42
        assert wronski_degree(2, 6) == 14
        assert wronski_degree(2, 5) == 5

    def test_wronski_equals_degree_sweep(self):
        for n in range(4, 9):
            for k in range(2, n - 1):
                want = problem_degree(problem(k, n, [(1,)] * (k * (n - k))))
                assert wronski_degree(k, n) == want, (k, n)


class TestTableaux:
    def test_paper_skew_count(self):
        assert count_tableaux(SkewShape(P((5, 5, 2)), P((3,)))) == 324

    def test_paper_sign_imbalance(self):
        assert sign_imbalance(SkewShape(P((5, 5, 2)), P((3,)))) == 4

    def test_single_cell(self):
        sh = SkewShape(P((1,)))
        assert count_tableaux(sh) == 1
        assert sign_imbalance(sh) == 1

    def test_square_by_enumeration(self):
        sh = SkewShape(P((2, 2)))
        fillings = list(standard_tableaux(sh))
        assert count_tableaux(sh) == len(fillings) == 2
        assert sign_imbalance(sh) == 0

    def test_counting_methods_agree(self):
        shapes = [
            SkewShape(P((3, 2)), P((1,))),
            SkewShape(P((4, 2, 1))),
            SkewShape(P((3, 3, 2)), P((2, 1))),
            SkewShape(P((2, 2, 2, 2))),
        ]
        for sh in shapes:
            assert count_tableaux(sh) == len(list(standard_tableaux(sh)))

    def test_sign_imbalance_bounds_and_parity(self):
        for sh in [
            SkewShape(P((3, 2))),
            SkewShape(P((4, 2)), P((1,))),
            SkewShape(P((3, 3))),
            SkewShape(P((2, 2, 1))),
        ]:
            total = count_tableaux(sh)
            sigma = sign_imbalance(sh)
            assert sigma <= total
            assert sigma % 2 == total % 2

    def test_box_count_equals_wronski_degree(self):
        for n in range(4, 8):
            for k in range(2, n - 1):
                sh = SkewShape(P((n - k,) * k))
                assert count_tableaux(sh) == wronski_degree(k, n)


class TestKostka:
    def test_examples(self):
        assert kostka(2, 4, (1, 1, 1, 1)) == 2
        assert kostka(2, 4, (2, 2)) == 1
        assert kostka(2, 4, (3, 1)) == 0

    def test_sum_error(self):
        with pytest.raises(CodimensionError):
            kostka(2, 4, (1, 1, 1))

    def test_kostka_equals_special_problem_degree(self):
        # exhaustive over compositions for all boxes with k(n-k) <= 12
        def compositions(total, cap):
            if total == 0:
                yield ()
                return
            for first in range(1, min(total, cap) + 1):
                for rest in compositions(total - first, cap):
                    yield (first,) + rest

        for k, n in [(2, 4), (2, 5), (3, 5), (2, 6), (4, 6), (3, 6), (2, 7), (2, 8), (3, 7)]:
            size = k * (n - k)
            if size > 12:
                continue
            for a in compositions(size, n - k):
                p = problem(k, n, [(x,) for x in a])
                assert kostka(k, n, a) == problem_degree(p), (k, n, a)

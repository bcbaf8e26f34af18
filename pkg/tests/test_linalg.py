import random
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from fewdist.errors import NonSquareError, NonSymmetricError
from fewdist.linalg import Inertia, Matrix, determinant, inertia, nullspace, rank

from oracles import (
    charpoly_inertia,
    leibniz_det,
    naive_rank,
    random_int_matrix,
    random_low_rank,
    random_symmetric,
)


def M(rows):
    return Matrix.from_rows(rows)


def small_matrices(max_rows=5, max_cols=5, lo=-6, hi=6):
    return st.integers(1, max_rows).flatmap(
        lambda r: st.integers(1, max_cols).flatmap(
            lambda c: st.lists(
                st.lists(st.integers(lo, hi), min_size=c, max_size=c), min_size=r, max_size=r
            )
        )
    )


def symmetric_matrices(max_n=5, lo=-4, hi=4):
    def build(n):
        return st.lists(st.integers(lo, hi), min_size=n * (n + 1) // 2, max_size=n * (n + 1) // 2).map(
            lambda vals: _fill_symmetric(n, vals)
        )

    return st.integers(1, max_n).flatmap(build)


def _fill_symmetric(n, vals):
    m = [[0] * n for _ in range(n)]
    it = iter(vals)
    for i in range(n):
        for j in range(i, n):
            m[i][j] = m[j][i] = next(it)
    return m


class TestMatrix:
    def test_shape_checked(self):
        with pytest.raises(ValueError):
            Matrix(2, 2, (Fraction(1),) * 3)

    def test_rejects_floats(self):
        with pytest.raises(TypeError):
            M([[0.5]])

    def test_transpose_and_product(self):
        a = M([[1, 2, 3], [4, 5, 6]])
        assert a.transpose().tolist() == [[1, 4], [2, 5], [3, 6]]
        assert (a @ a.transpose()).tolist() == [[14, 32], [32, 77]]

    def test_scalar_detection(self):
        assert Matrix.identity(3, 8).is_scalar()
        assert not M([[8, 0], [0, 7]]).is_scalar()
        assert not M([[8, 1], [0, 8]]).is_scalar()

    def test_entries_are_fractions(self):
        a = M([[1, Fraction(1, 2)]])
        assert all(type(x) is Fraction for x in a.entries)


class TestRank:
    def test_proportional_rows(self):
        assert rank(M([[1, 2], [2, 4]])) == 1

    def test_empty(self):
        assert rank(Matrix.zeros(0, 0)) == 0
        assert rank(Matrix.zeros(0, 3)) == 0
        assert rank(Matrix.zeros(3, 0)) == 0

    def test_rationals(self):
        assert rank(M([[Fraction(1, 2), Fraction(1, 3)], [3, 2]])) == 1
        assert rank(M([[Fraction(1, 2), Fraction(1, 3)], [3, 1]])) == 2

    def test_agrees_with_oracle_on_random_6x6(self):
        rng = random.Random(6)
        for _ in range(500):
            rows = random_int_matrix(rng, 6, 6)
            assert rank(M(rows)) == naive_rank(rows)

    def test_agrees_with_oracle_on_low_rank(self):
        rng = random.Random(7)
        for _ in range(200):
            r = rng.randint(0, 4)
            rows = random_low_rank(rng, rng.randint(1, 6), rng.randint(1, 6), r)
            assert rank(M(rows)) == naive_rank(rows)

    @given(small_matrices())
    def test_rank_of_transpose(self, rows):
        a = M(rows)
        assert rank(a) == rank(a.transpose())


class TestDeterminant:
    def test_small(self):
        assert determinant(M([[1, 2], [3, 4]])) == -2
        assert determinant(Matrix.zeros(0, 0)) == 1

    def test_non_square(self):
        with pytest.raises(NonSquareError):
            determinant(M([[1, 2]]))

    @given(st.integers(1, 4).flatmap(
        lambda n: st.lists(st.lists(st.integers(-5, 5), min_size=n, max_size=n), min_size=n, max_size=n)
    ))
    def test_matches_leibniz(self, rows):
        assert determinant(M(rows)) == leibniz_det([[Fraction(x) for x in r] for r in rows])

    def test_rational_entries(self):
        rows = [[Fraction(1, 2), 3], [Fraction(-2, 3), Fraction(5, 7)]]
        assert determinant(M(rows)) == leibniz_det([[Fraction(x) for x in r] for r in rows])


class TestNullspace:
    def test_hand_example(self):
        assert nullspace(M([[1, 1, 1], [0, 1, 2]])) == [(1, -2, 1)]

    def test_identity(self):
        assert nullspace(Matrix.identity(3)) == []

    def test_random_4x6(self):
        rng = random.Random(46)
        for _ in range(100):
            rows = random_low_rank(rng, 4, 6, rng.randint(0, 4))
            a = M(rows)
            basis = nullspace(a)
            assert len(basis) == 6 - rank(a)
            for v in basis:
                assert all(x == 0 for x in a.matvec(v))
            if basis:
                assert naive_rank(basis) == len(basis)

    def test_primitive_normalization(self):
        for v in nullspace(M([[2, 4, 6], [1, 1, 1]])):
            from math import gcd

            g = 0
            for x in v:
                g = gcd(g, x)
            assert g == 1
            assert next(x for x in v if x) > 0


class TestInertia:
    def test_diagonal(self):
        assert inertia(Matrix.diagonal([1, -2, 0])) == Inertia(1, 1, 1)

    def test_hyperbolic_block(self):
        assert inertia(M([[0, 1], [1, 0]])) == Inertia(1, 1, 0)

    def test_zero_diagonal_chain(self):
        # needs a 2x2 pivot first, then more elimination
        m = M([[0, 1, 2], [1, 0, 3], [2, 3, 0]])
        assert inertia(m) == charpoly_inertia(m.tolist())

    def test_empty(self):
        assert inertia(Matrix.zeros(0, 0)) == Inertia(0, 0, 0)

    def test_errors(self):
        with pytest.raises(NonSquareError):
            inertia(M([[1, 2]]))
        with pytest.raises(NonSymmetricError):
            inertia(M([[1, 2], [3, 1]]))

    def test_congruence_invariance(self):
        rng = random.Random(5)
        for _ in range(200):
            n = 5
            m = M(random_symmetric(rng, n))
            while True:
                s = M(random_int_matrix(rng, n, n, -2, 2))
                if rank(s) == n:
                    break
            assert inertia(s.transpose() @ m @ s) == inertia(m)

    def test_charpoly_oracle(self):
        rng = random.Random(11)
        for _ in range(200):
            n = rng.randint(1, 6)
            rows = random_symmetric(rng, n, zero_diag_prob=0.6)
            assert tuple(inertia(M(rows))) == charpoly_inertia(rows)

    @given(symmetric_matrices())
    @settings(max_examples=200)
    def test_counts_consistent_with_rank(self, rows):
        m = M(rows)
        inr = inertia(m)
        assert inr.positive + inr.negative == rank(m)
        assert sum(inr) == m.rows

    def test_deterministic(self):
        m = M(random_symmetric(random.Random(3), 6))
        assert inertia(m) == inertia(Matrix.from_rows(m.tolist()))

    def test_no_floats_in_output(self):
        inr = inertia(M([[Fraction(1, 3), 1], [1, Fraction(-1, 7)]]))
        assert all(type(x) is int for x in inr)

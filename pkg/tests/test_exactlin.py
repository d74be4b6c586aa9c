"""Tests for the exact sparse linear algebra kernels."""

import random
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from loghodge.exactlin import (
    MatrixFormatError,
    RatMatrix,
    cokernel_dim,
    nullspace,
    pivot_columns,
    rank,
    rref,
)

from oracles import dense_rank


fractions_small = st.fractions(
    min_value=-6, max_value=6, max_denominator=4
)


@st.composite
def rat_matrices(draw, max_dim=7):
    nr = draw(st.integers(0, max_dim))
    nc = draw(st.integers(0, max_dim))
    rows = draw(
        st.lists(
            st.lists(fractions_small, min_size=nc, max_size=nc),
            min_size=nr,
            max_size=nr,
        )
    )
    return RatMatrix.from_rows(rows, ncols=nc)


def test_identity_rank():
    assert rank(RatMatrix.identity(3)) == 3


def test_proportional_rows_rank_one():
    assert rank(RatMatrix.from_rows([[1, 2], [2, 4]])) == 1


def test_empty_matrix_rank_zero():
    assert rank(RatMatrix.zero(0, 7)) == 0
    assert rank(RatMatrix.zero(4, 0)) == 0


def test_cokernel_identity():
    assert cokernel_dim(RatMatrix.identity(3)) == 0


def test_cokernel_zero_matrix():
    assert cokernel_dim(RatMatrix.zero(2, 5)) == 5


def test_cokernel_two_independent_relations():
    m = RatMatrix.from_rows([[1, -1, 0], [0, 1, -1]])
    assert cokernel_dim(m) == 1


def test_pivot_columns_identity():
    assert pivot_columns(RatMatrix.identity(4)) == [0, 1, 2, 3]


def test_pivot_columns_zero_matrix():
    assert pivot_columns(RatMatrix.zero(3, 3)) == []


def test_pivot_columns_skips_zero_column():
    assert pivot_columns(RatMatrix.from_rows([[0, 1], [0, 2]])) == [1]


def test_pivot_columns_prefers_leftmost():
    # col 0 and col 1 are each independent, but col 0 comes first
    m = RatMatrix.from_rows([[1, 1, 0], [2, 2, 1]])
    assert pivot_columns(m) == [0, 2]


def test_validation_rejects_bad_entries():
    with pytest.raises(MatrixFormatError):
        RatMatrix(2, 2, ((0, 5, Fraction(1)),))
    with pytest.raises(MatrixFormatError):
        RatMatrix(2, 2, ((0, 0, Fraction(0)),))
    with pytest.raises(MatrixFormatError):
        RatMatrix.from_entries(2, 2, [(0, 0, 1), (0, 0, 2)])
    with pytest.raises(MatrixFormatError):
        RatMatrix(-1, 2, ())


def test_from_entries_drops_zeros():
    m = RatMatrix.from_entries(2, 2, [(0, 0, 1), (1, 1, 0)])
    assert m.nnz == 1


def test_rref_reproduces_reduction():
    m = RatMatrix.from_rows([[1, 2, 3], [4, 5, 6]])
    pivots, reduced = rref(m)
    assert pivots == [0, 1]
    assert reduced[0] == {0: Fraction(1), 2: Fraction(-1)}
    assert reduced[1] == {1: Fraction(1), 2: Fraction(2)}


def test_nullspace_annihilates():
    m = RatMatrix.from_rows([[1, 2, 3], [4, 5, 6], [7, 8, 9]])
    basis = nullspace(m)
    assert len(basis) == 3 - rank(m)
    rows = m.row_dicts()
    for vec in basis:
        for row in rows:
            assert sum(row.get(c, Fraction(0)) * v for c, v in vec.items()) == 0


def test_matmul_shapes_and_values():
    a = RatMatrix.from_rows([[1, 2], [3, 4]])
    b = RatMatrix.from_rows([[0, 1], [1, 0]])
    assert (a @ b).to_rows() == [[2, 1], [4, 3]]
    with pytest.raises(MatrixFormatError):
        a @ RatMatrix.zero(3, 3)


@given(rat_matrices())
def test_rank_equals_transpose_rank(m):
    assert rank(m) == rank(m.transpose())


@given(rat_matrices())
def test_rank_bounded_by_dimensions(m):
    assert rank(m) <= min(m.nrows, m.ncols)


@given(rat_matrices())
def test_rank_plus_cokernel(m):
    assert cokernel_dim(m) + rank(m) == m.ncols


@given(rat_matrices())
def test_rank_matches_dense_oracle(m):
    assert rank(m) == dense_rank(m.to_rows())


@given(rat_matrices())
def test_pivot_count_is_rank(m):
    assert len(pivot_columns(m)) == rank(m)


@given(rat_matrices(), st.randoms(use_true_random=False))
def test_rank_invariant_under_permutation_and_scaling(m, rng):
    rows = m.to_rows()
    rng.shuffle(rows)
    cols = list(range(m.ncols))
    rng.shuffle(cols)
    scaled = []
    for row in rows:
        s = Fraction(rng.randint(1, 5), rng.randint(1, 5))
        if rng.random() < 0.5:
            s = -s
        scaled.append([row[c] * s for c in cols])
    assert rank(RatMatrix.from_rows(scaled, ncols=m.ncols)) == rank(m)


@given(rat_matrices(max_dim=5))
def test_nullspace_dimension_and_membership(m):
    basis = nullspace(m)
    assert len(basis) == m.ncols - rank(m)
    rows = m.row_dicts()
    for vec in basis:
        for row in rows:
            assert sum(row.get(c, Fraction(0)) * v for c, v in vec.items()) == 0


@settings(max_examples=10, deadline=None)
@given(st.integers(0, 2**32 - 1))
def test_rank_matches_dense_oracle_large(seed):
    # denser, larger instances than hypothesis generates comfortably
    rng = random.Random(seed)
    nr = rng.randint(20, 50)
    nc = rng.randint(20, 50)
    rows = [
        [
            Fraction(rng.randint(-9, 9), rng.randint(1, 5)) if rng.random() < 0.3 else 0
            for _ in range(nc)
        ]
        for _ in range(nr)
    ]
    # plant some dependent rows
    for _ in range(rng.randint(0, 5)):
        i, j = rng.randrange(nr), rng.randrange(nr)
        c = Fraction(rng.randint(-3, 3))
        rows[i] = [a + c * b for a, b in zip(rows[i], rows[j])]
    m = RatMatrix.from_rows(rows, ncols=nc)
    assert rank(m) == dense_rank(rows)


def test_rref_of_known_50x50_band():
    n = 50
    rows = [[0] * n for _ in range(n)]
    for i in range(n):
        rows[i][i] = 2
        if i + 1 < n:
            rows[i][i + 1] = -1
    m = RatMatrix.from_rows(rows)
    assert rank(m) == n == dense_rank(rows)
    assert pivot_columns(m) == list(range(n))

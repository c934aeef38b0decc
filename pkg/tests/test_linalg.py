"""Tests for exact rank, kernel, determinant and the modular cross-check."""

import random
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from poncelet.errors import DimensionError, InvalidInputError
from poncelet.linalg import (
    CROSSCHECK_PRIMES,
    as_matrix,
    det_rational,
    kernel_basis,
    mat_mul,
    mat_vec,
    proj_equal_vector,
    rank_mod_prime,
    rank_rational_matrix,
    rref,
)


def unit_row(length, index):
    return [1 if i == index else 0 for i in range(length)]


def test_as_matrix_ragged():
    with pytest.raises(DimensionError):
        as_matrix([[1, 2], [3]])


def test_rank_examples():
    assert rank_rational_matrix([[0, 0, 0]] * 3) == 0
    assert rank_rational_matrix([unit_row(6, i) for i in range(3)]) == 3
    # Gram matrix of x1*x2 - x0*x3: antidiagonal halves
    h = Fraction(1, 2)
    gram = [[0, 0, 0, -h], [0, 0, h, 0], [0, h, 0, 0], [-h, 0, 0, 0]]
    assert rank_rational_matrix(gram) == 4
    assert rank_rational_matrix([[Fraction(1, 2), Fraction(1, 3)], [Fraction(1, 4), Fraction(1, 6)]]) == 1
    assert rank_rational_matrix([]) == 0
    assert rank_rational_matrix([[]]) == 0


def test_rank_equals_transpose_rank():
    rng = random.Random(3)
    for _ in range(20):
        rows = rng.randint(1, 5)
        cols = rng.randint(1, 5)
        m = [[Fraction(rng.randint(-6, 6), rng.randint(1, 4)) for _ in range(cols)] for _ in range(rows)]
        t = [[m[i][j] for i in range(rows)] for j in range(cols)]
        assert rank_rational_matrix(m) == rank_rational_matrix(t)


def test_rank_mod_prime_agrees():
    rng = random.Random(9)
    for _ in range(15):
        rows = rng.randint(1, 5)
        cols = rng.randint(1, 5)
        m = [[Fraction(rng.randint(-9, 9), rng.randint(1, 7)) for _ in range(cols)] for _ in range(rows)]
        exact = rank_rational_matrix(m)
        for p in CROSSCHECK_PRIMES:
            assert rank_mod_prime(m, p) == exact


def test_rank_mod_prime_denominator_collision():
    p = CROSSCHECK_PRIMES[0]
    with pytest.raises(InvalidInputError):
        rank_mod_prime([[Fraction(1, p)]], p)


def test_rref():
    reduced, pivots = rref([[0, 1], [0, 0]])
    assert pivots == [1]
    assert reduced[0] == [Fraction(0), Fraction(1)]
    reduced, pivots = rref([[2, 4], [1, 3]])
    assert pivots == [0, 1]
    assert reduced == [[Fraction(1), Fraction(0)], [Fraction(0), Fraction(1)]]
    assert rref([]) == ([], [])


def test_kernel_examples():
    basis = kernel_basis([[1, 1]])
    assert len(basis) == 1
    assert proj_equal_vector(basis[0], [1, -1])
    assert kernel_basis([unit_row(3, i) for i in range(3)]) == []
    basis = kernel_basis([unit_row(6, i) for i in range(3)])
    assert basis == [
        [Fraction(v) for v in unit_row(6, 3)],
        [Fraction(v) for v in unit_row(6, 4)],
        [Fraction(v) for v in unit_row(6, 5)],
    ]
    with pytest.raises(InvalidInputError):
        kernel_basis([])


@settings(max_examples=50)
@given(
    st.lists(
        st.lists(st.integers(-9, 9), min_size=4, max_size=4),
        min_size=1,
        max_size=4,
    )
)
def test_kernel_vectors_annihilate(rows):
    basis = kernel_basis(rows)
    assert len(basis) == 4 - rank_rational_matrix(rows)
    for v in basis:
        assert all(x == 0 for x in mat_vec(rows, v))


def test_det_rational():
    assert det_rational([[1, 0], [0, 1]]) == 1
    assert det_rational([[1, 2], [2, 4]]) == 0
    assert det_rational([[0, 1], [1, 0]]) == -1
    assert det_rational([[Fraction(1, 2), 0], [7, Fraction(2, 3)]]) == Fraction(1, 3)
    with pytest.raises(DimensionError):
        det_rational([[1, 2, 3], [4, 5, 6]])


def test_det_multiplicative():
    rng = random.Random(31)
    for _ in range(10):
        a = [[Fraction(rng.randint(-5, 5)) for _ in range(3)] for _ in range(3)]
        b = [[Fraction(rng.randint(-5, 5)) for _ in range(3)] for _ in range(3)]
        assert det_rational(mat_mul(a, b)) == det_rational(a) * det_rational(b)


def test_mat_mul_and_vec():
    assert mat_mul([[1, 2]], [[3], [4]]) == [[Fraction(11)]]
    assert mat_vec([[1, 2], [3, 4]], [1, 1]) == [Fraction(3), Fraction(7)]
    with pytest.raises(DimensionError):
        mat_mul([[1, 2]], [[1, 2]])
    with pytest.raises(DimensionError):
        mat_vec([[1, 2]], [1])


def test_proj_equal_vector():
    assert proj_equal_vector([2, -4, 0], [1, -2, 0])
    assert proj_equal_vector([Fraction(1, 3), 1], [1, 3])
    assert not proj_equal_vector([1, 0], [0, 1])
    assert not proj_equal_vector([0, 0], [0, 0])
    assert not proj_equal_vector([1, 2], [1, 2, 3])
    assert not proj_equal_vector([1, 1], [1, -1])

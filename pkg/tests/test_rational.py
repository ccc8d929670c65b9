"""Exact matrix kernels against brute-force oracles and hand values."""

from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from treemat import (
    RationalMatrix,
    ShapeError,
    SingularMatrixError,
    as_rational,
    cofactor_sum,
    det,
    hadamard,
    inverse,
    mat_mul,
)

from helpers import naive_cofactor_sum, naive_det

rationals = st.fractions(min_value=-5, max_value=5, max_denominator=6)


def square_matrices(max_n=5, min_n=1):
    return st.integers(min_n, max_n).flatmap(
        lambda n: st.lists(
            st.lists(rationals, min_size=n, max_size=n), min_size=n, max_size=n
        )
    ).map(RationalMatrix)


# --- construction and basic ops ---------------------------------------------


def test_entries_are_canonical_fractions():
    m = RationalMatrix([[1, "2/4"], ["-3/6", 0]])
    assert m[0, 1] == Fraction(1, 2)
    assert m[1, 0] == Fraction(-1, 2)
    assert m[1, 1] == Fraction(0)


def test_float_entries_rejected():
    with pytest.raises(TypeError):
        RationalMatrix([[0.5]])
    with pytest.raises(TypeError):
        as_rational(0.5)


def test_ragged_rows_rejected():
    with pytest.raises(ShapeError):
        RationalMatrix([[1, 2], [3]])


def test_identity_times_matrix_is_matrix():
    m = RationalMatrix([[1, 2, 3], [4, 5, 6], [7, 8, "9/2"]])
    assert RationalMatrix.identity(3) @ m == m
    assert m @ RationalMatrix.identity(3) == m


def test_mat_mul_hand_example():
    a = RationalMatrix([[1, 2], [3, 4]])
    b = RationalMatrix([[0], [1]])
    assert mat_mul(a, b) == RationalMatrix([[2], [4]])


def test_mat_mul_shape_error_names_both_shapes():
    a = RationalMatrix([[1, 2], [3, 4]])
    b = RationalMatrix([[1, 2], [3, 4], [5, 6]])
    with pytest.raises(ShapeError, match="2x2.*3x2"):
        mat_mul(a, b)


def test_incidence_distance_product_on_three_path():
    # Q' D Q = -2F for the unit path on 3 vertices, by direct multiplication.
    q = RationalMatrix([[1, 0], [-1, 1], [0, -1]])
    d = RationalMatrix([[0, 1, 2], [1, 0, 1], [2, 1, 0]])
    f = RationalMatrix.diagonal([1, 1])
    assert q.T @ d @ q == -2 * f


def test_transpose_degenerate_shapes():
    m = RationalMatrix([[]], cols=0)  # 1x0
    assert m.shape == (1, 0)
    assert m.T.shape == (0, 1)
    assert m.T.T == m


def test_add_sub_scalar_ops():
    a = RationalMatrix([[1, 2], [3, 4]])
    assert a + a == 2 * a
    assert a - a == RationalMatrix.zeros(2, 2)
    assert -a == -1 * a
    assert a * Fraction(1, 2) == RationalMatrix([["1/2", 1], ["3/2", 2]])


def test_hadamard_square():
    a = RationalMatrix([[0, -2], [Fraction(1, 2), 3]])
    assert hadamard(a, a) == RationalMatrix([[0, 4], ["1/4", 9]])


# --- determinant -------------------------------------------------------------


def test_det_two_by_two_antidiagonal():
    w = Fraction(3, 7)
    assert det(RationalMatrix([[0, w], [w, 0]])) == -w * w


def test_det_star_squared_distances():
    m = RationalMatrix([[0, 1, 1, 1], [1, 0, 4, 4], [1, 4, 0, 4], [1, 4, 4, 0]])
    assert det(m) == -48


def test_det_unweighted_five_path_distances():
    # Any unweighted 5-vertex tree has distance determinant (-1)^4 * 4 * 2^3 = 32.
    m = RationalMatrix(
        [[abs(i - j) for j in range(5)] for i in range(5)]
    )
    assert det(m) == 32


def test_det_degenerate_sizes():
    assert det(RationalMatrix([], cols=0)) == 1
    assert det(RationalMatrix([[Fraction(5, 3)]])) == Fraction(5, 3)


def test_det_non_square_rejected():
    with pytest.raises(ShapeError):
        det(RationalMatrix([[1, 2]]))


def test_det_zero_pivot_column_swap():
    m = RationalMatrix([[0, 1, 2], [0, 0, 3], [4, 5, 6]])
    assert det(m) == naive_det(m.to_lists())


@settings(max_examples=80, deadline=None)
@given(square_matrices(max_n=6))
def test_det_matches_cofactor_expansion(m):
    assert det(m) == naive_det(m.to_lists())


@settings(max_examples=40, deadline=None)
@given(st.integers(1, 5).flatmap(
    lambda n: st.tuples(
        st.lists(st.lists(rationals, min_size=n, max_size=n), min_size=n, max_size=n),
        st.lists(st.lists(rationals, min_size=n, max_size=n), min_size=n, max_size=n),
    )
))
def test_det_is_multiplicative(pair):
    a, b = (RationalMatrix(x) for x in pair)
    assert det(a @ b) == det(a) * det(b)


# --- inverse ------------------------------------------------------------------


def test_inverse_identity():
    assert inverse(RationalMatrix.identity(4)) == RationalMatrix.identity(4)


def test_inverse_permutation():
    p = RationalMatrix([[0, 1], [1, 0]])
    assert inverse(p) == p


def test_inverse_weighted_antidiagonal():
    w = Fraction(5)
    m = RationalMatrix([[0, w * w], [w * w, 0]])
    assert inverse(m) == RationalMatrix([[0, Fraction(1, 25)], [Fraction(1, 25), 0]])


def test_inverse_singular_reports_rank():
    with pytest.raises(SingularMatrixError) as err:
        inverse(RationalMatrix([[1, 2], [2, 4]]))
    assert err.value.rank == 1
    with pytest.raises(SingularMatrixError) as err:
        inverse(RationalMatrix.zeros(3, 3))
    assert err.value.rank == 0


@settings(max_examples=60, deadline=None)
@given(square_matrices(max_n=5))
def test_inverse_roundtrip(m):
    if det(m) == 0:
        with pytest.raises(SingularMatrixError):
            inverse(m)
        return
    mi = inverse(m)
    eye = RationalMatrix.identity(m.rows)
    assert m @ mi == eye
    assert mi @ m == eye


# --- cofactor sum --------------------------------------------------------------


def test_cofactor_sum_antidiagonal():
    w = Fraction(2, 3)
    assert cofactor_sum(RationalMatrix([[0, w * w], [w * w, 0]])) == -2 * w * w


def test_cofactor_sum_one_by_one():
    # The single cofactor is the empty determinant, 1, whatever the entry.
    assert cofactor_sum(RationalMatrix([[Fraction(17, 3)]])) == 1
    assert cofactor_sum(RationalMatrix([[0]])) == 1


def test_cofactor_sum_star_squared_distances():
    m = RationalMatrix([[0, 1, 1, 1], [1, 0, 4, 4], [1, 4, 0, 4], [1, 4, 4, 0]])
    assert cofactor_sum(m) == 32


def test_cofactor_sum_empty_rejected():
    with pytest.raises(ShapeError):
        cofactor_sum(RationalMatrix([], cols=0))


@settings(max_examples=60, deadline=None)
@given(square_matrices(max_n=5))
def test_cofactor_sum_matches_minor_expansion(m):
    assert cofactor_sum(m) == naive_cofactor_sum(m.to_lists())

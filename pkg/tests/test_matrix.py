import numpy as np
import pytest
from hypothesis import given, strategies as st

from gf2split.field import FieldError, make_field
from gf2split.matrix import (
    Mat,
    MatrixError,
    ParseError,
    SingularMatrixError,
    format_matrix,
    m_inv,
    m_mul,
    m_pow,
    m_rank,
    m_solve,
    m_trace,
    matvec,
    nullspace,
    parse_matrix,
    random_invertible,
    random_matrix,
)

from conftest import naive_matmul

F16 = make_field(4)


def test_matmul_matches_schoolbook(field, rng):
    for n in (1, 2, 5, 9):
        A = random_matrix(n, field, rng)
        B = random_matrix(n, field, rng)
        assert np.array_equal(m_mul(A, B).a, naive_matmul(A.a, B.a, field.modulus))


def test_inverse(field, rng):
    for n in range(1, 9):
        P = random_invertible(n, field, rng)
        assert m_mul(P, m_inv(P)) == Mat.identity(n, field)


def test_singular():
    F = make_field(2)
    with pytest.raises(SingularMatrixError, match="singular"):
        m_inv(Mat([[1, 2], [2, 3]], F))  # second row = a * first row (a^2 = a + 1)


@given(st.integers(1, 7), st.integers(0, 2**32 - 1))
def test_rank_nullity(n, seed):
    rng = np.random.default_rng(seed)
    A = Mat(rng.integers(0, 16, size=(n, n)) * rng.integers(0, 2, size=(n, 1)), F16)
    K = nullspace(A)
    assert m_rank(A) + K.shape[1] == n
    assert m_mul(A, K).is_zero()


def test_solve(rng):
    A = random_invertible(6, F16, rng)
    b = rng.integers(0, 16, size=6)
    x = m_solve(A, b)
    assert np.array_equal(matvec(A, x), b)
    with pytest.raises(MatrixError, match="inconsistent"):
        m_solve(Mat([[1, 0], [0, 0]], F16), np.array([0, 1]))


def test_power_and_trace(rng):
    A = random_matrix(5, F16, rng)
    assert m_pow(A, 0) == Mat.identity(5, F16)
    assert m_pow(A, 5) == A @ A @ A @ A @ A
    assert m_trace(Mat([[3, 1], [0, 5]], F16)) == 6


def test_field_checks():
    with pytest.raises(FieldError):
        Mat([[4]], make_field(2))
    with pytest.raises(FieldError, match="field mismatch"):
        Mat([[1]], make_field(2)) + Mat([[1]], make_field(3))


def test_format_round_trip(field, rng):
    A = random_matrix(4, field, rng)
    assert parse_matrix(format_matrix(A)) == A


def test_parse_skips_comments_and_blank_lines():
    text = "# a comment line\nfield gf(2^1)\n\nn 2\n0 1\n# row two\n1 1\n"
    assert parse_matrix(text) == Mat([[0, 1], [1, 1]], make_field(1))


@pytest.mark.parametrize(
    "text,line,col",
    [
        ("field gf(2^2)\nn 2\n0 1\n1 4\n", 4, 3),
        ("field gf(2^2)\nn 2\n0 1\nx 1\n", 4, 1),
        ("field gf(2^2)\nn 2\n0 1 2\n1 1\n", 3, 1),
        ("field gf(2^2)\nn two\n", 2, 1),
        ("feld gf(2^2)\nn 1\n0\n", 1, 1),
    ],
)
def test_parse_errors_carry_position(text, line, col):
    with pytest.raises(ParseError) as info:
        parse_matrix(text)
    assert (info.value.line, info.value.col) == (line, col)
    assert str(info.value).startswith(f"line {line}, column {col}:")

import random
from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from dualnet.exact import (
    RationalMatrix,
    det,
    format_decimal,
    format_rational,
    minor_matrix,
    rational_parse,
)

from .oracles import laplace_det


@pytest.mark.parametrize(
    "text, value",
    [
        ("3/2", Fraction(3, 2)),
        ("0.25", Fraction(1, 4)),
        ("7", Fraction(7)),
        ("-7", Fraction(-7)),
        ("-2/4", Fraction(-1, 2)),
        ("12.500", Fraction(25, 2)),
        ("0.1", Fraction(1, 10)),
        (" 5 ", Fraction(5)),
    ],
)
def test_rational_parse(text, value):
    assert rational_parse(text) == value


@pytest.mark.parametrize("text", ["", "abc", "1/", "/2", "1.", ".5", "1e3", "1/-2", "+3", "1.5/2", "inf", "nan", "1/2/3"])
def test_rational_parse_rejects_malformed(text):
    with pytest.raises(ValueError):
        rational_parse(text)


def test_rational_parse_zero_denominator():
    with pytest.raises(ZeroDivisionError):
        rational_parse("3/0")


def test_format_rational():
    assert format_rational(Fraction(7, 12)) == "7/12"
    assert format_rational(Fraction(4, 2)) == "2"
    assert format_rational(Fraction(-3, 6)) == "-1/2"
    assert format_rational(Fraction(0)) == "0"


@given(st.fractions())
def test_parse_serialize_roundtrip(x):
    s = format_rational(x)
    assert rational_parse(s) == x
    assert format_rational(rational_parse(s)) == s


def test_format_decimal():
    assert format_decimal(Fraction(7, 12), 4) == "0.5833"
    assert format_decimal(Fraction(-5, 12), 3) == "-0.417"
    assert format_decimal(Fraction(19, 2), 0) == "10"
    assert format_decimal(Fraction(1, 8), 2) == "0.12"


def test_det_small_cases():
    assert det(RationalMatrix.from_rows([])) == 1
    assert det([[Fraction(5, 3)]]) == Fraction(5, 3)
    assert det([[1, 2], [3, 4]]) == -2


def test_det_needs_pivoting():
    m = [[0, 1, 2], [1, 0, 3], [4, -3, 8]]
    assert det(m) == laplace_det(m) == -2


def test_det_singular():
    assert det([[1, 2], [2, 4]]) == 0
    assert det([[0, 0, 1], [0, 0, 2], [1, 1, 1]]) == 0


def test_det_rejects_non_square():
    with pytest.raises(ValueError):
        det(RationalMatrix.from_rows([[1, 2, 3], [4, 5, 6]]))


def _random_matrix(rng, n, bound=9):
    return [[Fraction(rng.randint(-bound, bound), rng.randint(1, bound)) for _ in range(n)] for _ in range(n)]


def test_det_random_4x4_matches_expansion():
    rng = random.Random(4)
    for _ in range(50):
        m = _random_matrix(rng, 4)
        assert det(m) == laplace_det(m)


small_fractions = st.fractions(min_value=-10, max_value=10, max_denominator=10)


@st.composite
def square_matrices(draw, max_n=5):
    n = draw(st.integers(0, max_n))
    return [[draw(small_fractions) for _ in range(n)] for _ in range(n)]


@given(square_matrices())
def test_det_matches_cofactor_expansion(m):
    assert det(m) == laplace_det(m)


@given(square_matrices(), st.data())
def test_row_swap_negates(m, data):
    n = len(m)
    if n < 2:
        return
    i = data.draw(st.integers(0, n - 1))
    j = data.draw(st.integers(0, n - 1).filter(lambda k: k != i))
    swapped = list(m)
    swapped[i], swapped[j] = swapped[j], swapped[i]
    assert det(swapped) == -det(m)


def test_minor_matrix():
    m = RationalMatrix.from_rows([[1, 2], [3, 4]])
    assert minor_matrix(m, [], []) == m
    eye = RationalMatrix.from_rows([[1, 0, 0], [0, 1, 0], [0, 0, 1]])
    assert minor_matrix(eye, [1], [1]) == RationalMatrix.from_rows([[1, 0], [0, 1]])
    empty = minor_matrix(m, [0, 1], [0, 1])
    assert empty.shape == (0, 0)
    assert det(empty) == 1


def test_minor_matrix_keeps_order():
    m = RationalMatrix.from_rows([[1, 2, 3], [4, 5, 6], [7, 8, 9]])
    assert minor_matrix(m, [0], [1]).tolist() == [[4, 6], [7, 9]]


def test_minor_matrix_bad_indices():
    m = RationalMatrix.from_rows([[1, 2], [3, 4]])
    with pytest.raises(IndexError):
        minor_matrix(m, [2], [])
    with pytest.raises(ValueError):
        minor_matrix(m, [0, 0], [])

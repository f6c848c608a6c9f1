import random

import pytest
from hypothesis import given, strategies as st

from oracles import leibniz_det, minors_divisors
from stabinv.smith import IntMatrix, determinant, smith_normal_form


def random_matrix(rng, n):
    return [[rng.randint(-5, 5) for _ in range(n)] for _ in range(n)]


def test_two_hundred_random_matrices():
    rng = random.Random(2024)
    for _ in range(200):
        n = rng.randint(1, 4)
        m = random_matrix(rng, n)
        im = IntMatrix.from_rows(m)
        det = determinant(im)
        assert det == leibniz_det(m)
        divisors = smith_normal_form(im)
        assert divisors == minors_divisors(m)
        prod = 1
        for d in divisors:
            prod *= d
        assert prod == abs(det)
        for a, b in zip(divisors, divisors[1:]):
            if b:
                assert b % a == 0


@given(st.integers(1, 5).flatmap(
    lambda n: st.lists(st.lists(st.integers(-9, 9), min_size=n, max_size=n), min_size=n, max_size=n)))
def test_bareiss_matches_leibniz(m):
    assert determinant(IntMatrix.from_rows(m)) == leibniz_det(m)


def test_known_forms():
    assert smith_normal_form(IntMatrix.from_rows([[2, 0], [0, 3]])) == [1, 6]
    assert smith_normal_form(IntMatrix.from_rows([[4]])) == [4]
    assert smith_normal_form(IntMatrix.from_rows([[0, 0], [0, 0]])) == [0, 0]
    assert smith_normal_form(IntMatrix.from_rows([[2, 1], [1, 2]])) == [1, 3]
    assert determinant(IntMatrix.from_rows([])) == 1


def test_singular_and_unimodular():
    assert determinant(IntMatrix.from_rows([[1, 2], [2, 4]])) == 0
    assert smith_normal_form(IntMatrix.from_rows([[1, 2], [2, 4]])) == [1, 0]
    assert smith_normal_form(IntMatrix.from_rows([[1, 1], [0, 1]])) == [1, 1]


def test_rejects_non_square():
    with pytest.raises(ValueError):
        smith_normal_form(IntMatrix.from_rows([[1, 2]]))
    with pytest.raises(ValueError):
        determinant(IntMatrix.from_rows([[1, 2]]))

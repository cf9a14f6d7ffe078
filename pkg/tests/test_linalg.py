"""Exact linear algebra and Smith normal form."""

from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from whsing.linalg import (
    det,
    inverse,
    invariant_factors,
    leading_principal_minors_alternate,
    rank,
    smith_normal_form,
    solve,
)


def test_rank_basic():
    assert rank([]) == 0
    assert rank([[0, 0], [0, 0]]) == 0
    assert rank([[1, 2], [2, 4]]) == 1
    assert rank([[1, 2], [3, 4]]) == 2
    assert rank([[1, 2, 3], [4, 5, 6], [7, 8, 9]]) == 2
    assert rank([[Fraction(1, 2), Fraction(1, 3)]]) == 1


def test_solve_and_inverse():
    a = [[2, 1], [1, 3]]
    x = solve(a, [5, 10])
    assert x == [Fraction(1), Fraction(3)]
    inv = inverse(a)
    assert inv == [[Fraction(3, 5), Fraction(-1, 5)], [Fraction(-1, 5), Fraction(2, 5)]]
    with pytest.raises(ValueError):
        solve([[1, 2], [2, 4]], [1, 1])


def test_det_known():
    assert det([[1, 2], [3, 4]]) == -2
    assert det([[2]]) == 2
    assert det([[1, 2], [2, 4]]) == 0
    assert det([[0, 1, 0], [1, 0, 0], [0, 0, 1]]) == -1


def test_negative_definite_detector():
    assert leading_principal_minors_alternate([[-2, 1], [1, -2]])
    assert not leading_principal_minors_alternate([[2, 0], [0, 2]])
    assert not leading_principal_minors_alternate([[-2, 3], [3, -2]])
    assert not leading_principal_minors_alternate([[0, 0], [0, -1]])


def test_smith_normal_form_known():
    assert smith_normal_form([[2, 0], [0, 3]]) == [1, 6]
    assert smith_normal_form([[2, 4, 4], [-6, 6, 12], [10, 4, 16]]) == [2, 2, 156]
    assert smith_normal_form([[1, 0], [0, 0]]) == [1, 0]
    assert invariant_factors([[2, 0], [0, 2]]) == [2, 2]
    assert invariant_factors([[1, 0], [0, 1]]) == []


sq3 = st.lists(st.lists(st.integers(-9, 9), min_size=3, max_size=3), min_size=3, max_size=3)


@given(sq3)
def test_det_matches_snf_and_rank(a):
    d = det(a)
    snf = smith_normal_form(a)
    prod = 1
    for x in snf:
        prod *= x
    # |det| is the product of the Smith diagonal; rank counts its nonzeros
    assert abs(d) == prod
    assert rank(a) == sum(1 for x in snf if x != 0)
    for x, y in zip(snf, snf[1:]):
        assert (x == 0 and y == 0) or (x != 0 and y % x == 0)


@given(sq3.filter(lambda a: det(a) != 0))
def test_inverse_property(a):
    inv = inverse(a)
    n = len(a)
    prod = [[sum(Fraction(a[i][k]) * inv[k][j] for k in range(n)) for j in range(n)]
            for i in range(n)]
    assert prod == [[Fraction(int(i == j)) for j in range(n)] for i in range(n)]

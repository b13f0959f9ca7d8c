from fractions import Fraction as F

import pytest

from schur_szego.exactpoly import RationalPoly, binomial, interpolate
from schur_szego.narayana import (
    catalan,
    dyck_peak_count,
    narayana_number,
    narayana_poly_direct,
    narayana_poly_recurrence,
    triangle_matrix,
)

NNT_BLOCK = [
    [1, 0, 0, 0, 0],
    [1, 1, 0, 0, 0],
    [1, 3, 1, 0, 0],
    [1, 6, 6, 1, 0],
    [1, 10, 20, 10, 1],
]


def test_numbers():
    assert narayana_number(4, 2) == 6
    assert narayana_number(5, 3) == 20
    assert all(narayana_number(n, 1) == 1 for n in range(1, 20))
    with pytest.raises(ValueError):
        narayana_number(4, 5)


def test_direct_polys():
    assert narayana_poly_direct(2) == RationalPoly([0, 1, 1])
    assert narayana_poly_direct(3) == RationalPoly([0, 1, 3, 1])
    assert narayana_poly_direct(4) == RationalPoly([0, 1, 6, 6, 1])
    with pytest.raises(ValueError):
        narayana_poly_direct(0)


def test_recurrence_polys():
    assert narayana_poly_recurrence(1) == RationalPoly([0, 1])
    # n = 3: (5(1+x) N_2 - (x-1)^2 N_1) / 4
    assert narayana_poly_recurrence(3) == RationalPoly([0, 1, 3, 1])
    assert narayana_poly_recurrence(5) == RationalPoly([0, 1, 10, 20, 10, 1])


def test_direct_equals_recurrence_prefix():
    for n in range(1, 26):
        assert narayana_poly_direct(n) == narayana_poly_recurrence(n)


def test_catalan():
    assert catalan(3) == 5
    assert catalan(4) == 14
    assert catalan(0) == 1
    for n in range(1, 20):
        assert narayana_poly_direct(n)(F(1)) == catalan(n)


def test_dyck_oracle_examples():
    assert dyck_peak_count(3, 2) == 3
    assert dyck_peak_count(4, 2) == 6
    for n in range(1, 7):
        assert dyck_peak_count(n, n) == 1  # the staircase


def test_dyck_oracle_bounds():
    with pytest.raises(ValueError):
        dyck_peak_count(15, 1)
    with pytest.raises(ValueError):
        dyck_peak_count(3, 0)


def test_dyck_matches_closed_form():
    for n in range(1, 9):
        for k in range(1, n + 1):
            assert dyck_peak_count(n, k) == narayana_number(n, k)


def test_triangle_block():
    assert triangle_matrix(5).as_matrix() == NNT_BLOCK


def test_triangle_rows_match_polys():
    tri = triangle_matrix(8)
    for n, row in enumerate(tri.rows, start=1):
        poly = narayana_poly_direct(n)
        assert list(row) == [int(poly.coeff(k)) for k in range(1, n + 1)]


def test_triangle_palindromic():
    for n, row in enumerate(triangle_matrix(30).rows, start=1):
        assert row == row[::-1]


def test_column_values_closed_form():
    # column m+1 entries at row j equal C(j,m) C(j,m+1) / j
    for m in range(0, 4):
        for j in range(m + 1, 12):
            expected = binomial(j, m) * binomial(j, m + 1) // j
            assert narayana_number(j, m + 1) == expected


@pytest.mark.parametrize("k", [2, 3, 4])
def test_fixed_k_polynomial_in_n(k):
    # n -> N_{n,k} interpolated through 2k-1 points: degree 2k-2, root at n=0
    # (k = 1 is the constant polynomial 1, which has no root at all)
    pts = [(F(n), F(narayana_number(n, k))) for n in range(k, k + 2 * k - 1)]
    poly = interpolate(pts)
    assert poly.degree <= 2 * k - 2
    assert poly(F(0)) == 0
    # and it extrapolates to genuine triangle entries
    for n in range(k + 2 * k - 1, k + 2 * k + 3):
        assert poly(F(n)) == narayana_number(n, k)


def test_row_cofactor_self_reciprocal():
    for n in range(1, 61):
        over_x = narayana_poly_direct(n).exact_divide(RationalPoly.x())
        assert over_x.self_reciprocal_sign() == 1

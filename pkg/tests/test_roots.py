import math
from fractions import Fraction as F

import pytest
from hypothesis import given
from hypothesis import strategies as st

from schur_szego.exactpoly import RationalPoly
from schur_szego.narayana import narayana_poly_direct
from schur_szego.roots import (
    COMMON_ROOT,
    FAIL,
    STRICT_INTERLACE,
    EndpointRootError,
    cauchy_bound,
    distinct_real_roots,
    interlace_check,
    is_hyperbolic,
    is_squarefree,
    isolate_roots,
    poly_gcd,
    refine,
    roots_float,
    sturm_count,
)
from schur_szego.spectra import extract_q

P = RationalPoly
TOL40 = F(1, 2**40)


def test_sturm_count_examples():
    assert sturm_count(P([1, 5, 1]), F(-5), F(0)) == 2
    assert sturm_count(P([1, 0, 1]), F(-10), F(10)) == 0
    assert sturm_count(P([1, -3, 1]), F(0), F(3)) == 2


def test_sturm_count_endpoint_root():
    with pytest.raises(EndpointRootError):
        sturm_count(P([-1, 0, 1]), F(1), F(2))


def test_sturm_count_multiple_roots_counted_once():
    assert sturm_count(P([1, 3, 3, 1]), F(-2), F(0)) == 1  # (x+1)^3


def test_isolate_narayana_4():
    iso = isolate_roots(P([1, 6, 6, 1]))  # N_4 / x = (x+1)(x^2+5x+1)
    assert len(iso.intervals) == 3
    assert iso.multiplicities == (1, 1, 1)
    refined = [refine(iso, i, F(1, 10**6)) for i in range(3)]
    mids = [float((lo + hi) / 2) for lo, hi in refined]
    assert mids[0] == pytest.approx((-5 - math.sqrt(21)) / 2, abs=1e-5)
    assert mids[1] == pytest.approx(-1.0, abs=1e-5)
    assert mids[2] == pytest.approx((-5 + math.sqrt(21)) / 2, abs=1e-5)


def test_isolate_multiplicity():
    iso = isolate_roots(P.binomial_power(5))  # (x+1)^5
    assert len(iso.intervals) == 1
    assert iso.multiplicities == (5,)
    lo, hi = refine(iso, 0, F(1, 10**9))
    assert lo < -1 < hi


def test_isolate_mixed_multiplicities():
    # (x-1)^2 (x+2) x^3
    poly = P([-1, 1]) * P([-1, 1]) * P([2, 1]) * P([0, 0, 0, 1])
    iso = isolate_roots(poly)
    got = sorted(zip([float((a + b) / 2) for a, b in
                      (refine(iso, i, F(1, 10**6)) for i in range(len(iso.intervals)))],
                     iso.multiplicities))
    assert [m for _, m in got] == [1, 3, 2]
    assert [round(r) for r, _ in got] == [-2, 0, 1]
    assert iso.real_root_count() == 6


def test_intervals_disjoint_and_sorted():
    iso = isolate_roots(narayana_poly_direct(12))
    for (a1, b1), (a2, b2) in zip(iso.intervals, iso.intervals[1:]):
        assert a1 < b1 and a2 < b2 and b1 <= a2


def test_reciprocal_root_pair():
    iso = isolate_roots(P([1, 3, 1]))  # N_3/x: roots multiply to 1
    vals = [float((lo + hi) / 2) for lo, hi in (refine(iso, i, TOL40) for i in range(2))]
    assert vals[0] * vals[1] == pytest.approx(1.0, abs=1e-9)


def test_roots_float_narayana4():
    got = roots_float(narayana_poly_direct(4))
    assert len(got) == 4
    assert got[1] == pytest.approx(-1.0, abs=1e-10)
    assert got[3] == pytest.approx(0.0, abs=1e-10)


def test_is_hyperbolic():
    assert is_hyperbolic(narayana_poly_direct(5))
    assert not is_hyperbolic(P([1, 0, 1]))
    assert is_hyperbolic(P([1, 3, 3, 1]))


def test_interlace_examples():
    n3 = P([1, 3, 1])
    n4 = P([1, 6, 6, 1])
    n5 = P([1, 10, 20, 10, 1])
    assert interlace_check(n3, n4) == STRICT_INTERLACE
    assert interlace_check(n4, n5) == STRICT_INTERLACE
    assert interlace_check(P([-1, 1]), P([2, -3, 1])) == COMMON_ROOT


def test_interlace_failures():
    # non-hyperbolic operand
    assert interlace_check(P([1, 0, 1]), P([0, -1, 0, 1])) == FAIL
    # hyperbolic but not interlacing: roots of p outside q's root range
    p = P([30, -11, 1])            # (x-5)(x-6)
    q = P([0, 2, -3, 1])           # x(x-1)(x-2)
    assert interlace_check(p, q) == FAIL
    with pytest.raises(ValueError):
        interlace_check(p, p)


def test_interlace_degree_one():
    assert interlace_check(P([7]), P([1, 1])) == STRICT_INTERLACE


def test_poly_gcd():
    n4, n5 = narayana_poly_direct(4), narayana_poly_direct(5)
    assert poly_gcd(n4, n5) == P.x()
    assert poly_gcd(P([-1, 0, 1]), P([-1, 1])) == P([-1, 1])
    assert poly_gcd(P([1, 2, 1]), P([1, 1])) == P([1, 1])


def test_census_helpers():
    assert distinct_real_roots(P([1, 6, 6, 1])) == 3
    assert distinct_real_roots(P([1, 0, 1])) == 0
    assert is_squarefree(P([1, 3, 1]))
    assert not is_squarefree(P([1, 2, 1]))


def test_cauchy_bound():
    b = cauchy_bound(P([1, 6, 6, 1]))
    assert b == 7
    assert sturm_count(P([1, 6, 6, 1]), -b, b) == 3


def test_q_poly_roots_reciprocal_pairs():
    # roots of Q_{j,n} are positive, distinct, and closed under x -> 1/x
    for n in range(4, 11):
        for j in range(1, n - 2):
            q = extract_q(n, j)
            iso = isolate_roots(q)
            assert len(iso.intervals) == j
            assert iso.multiplicities == (1,) * j
            assert sturm_count(q, F(0), cauchy_bound(q)) == j
            for i in range(j):
                lo, hi = refine(iso, i, F(1, 2**20))
                assert lo > 0
                assert sturm_count(q, 1 / hi, 1 / lo) == 1


def test_narayana_roots_closed_under_reciprocal():
    for n in (6, 9, 12):
        over_x = narayana_poly_direct(n).exact_divide(P.x())
        iso = isolate_roots(over_x)
        for i in range(len(iso.intervals)):
            lo, hi = refine(iso, i, F(1, 2**20))
            assert hi < 0
            assert sturm_count(over_x, 1 / hi, 1 / lo) == 1


@given(st.lists(st.integers(min_value=-8, max_value=8), min_size=1, max_size=4),
       st.lists(st.integers(min_value=1, max_value=2), min_size=1, max_size=4))
def test_isolation_recovers_known_roots(root_values, mults):
    # build a polynomial with known integer roots and multiplicities
    roots_known = sorted(set(root_values))
    mults = (mults * len(roots_known))[:len(roots_known)]
    poly = P([1])
    for r, m in zip(roots_known, mults):
        for _ in range(m):
            poly = poly * P([-r, 1])
    iso = isolate_roots(poly)
    assert len(iso.intervals) == len(roots_known)
    assert list(iso.multiplicities) == list(mults)
    for (lo, hi), r in zip(iso.intervals, roots_known):
        assert lo < r < hi


@given(st.lists(st.fractions(min_value=-5, max_value=5, max_denominator=6),
                min_size=2, max_size=5))
def test_sturm_total_matches_distinct_count(cs):
    poly = P(cs + [F(1)])
    total = distinct_real_roots(poly)
    iso = isolate_roots(poly)
    assert len(iso.intervals) == total

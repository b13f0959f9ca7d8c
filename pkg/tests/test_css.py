from fractions import Fraction as F

import pytest
from hypothesis import given
from hypothesis import strategies as st

from schur_szego.css import (
    INFINITY,
    DegreeOverflowError,
    NotInDomainError,
    build_phi,
    composition_factor,
    css_compose,
    css_compose_multi,
    factor_symmetric_functions,
)
from schur_szego.exactpoly import RationalPoly, kernel
from schur_szego.spectra import eigenvalues_closed_form

P = RationalPoly

CUBE = P([1, 3, 3, 1])          # (x+1)^3
K0_3 = P([0, 1, 2, 1])          # x(x+1)^2
SQ = P([1, 2, 1])               # (x+1)^2

fractions = st.fractions(min_value=-6, max_value=6, max_denominator=8)


def test_compose_identity_cube():
    assert css_compose(CUBE, CUBE, 3) == CUBE


def test_compose_eigenrelation_instance():
    # K_0 *_3 K_inf = (2/3) x(x+1): the n=3 instance behind lambda_{2,3} = 3/2
    assert css_compose(K0_3, SQ, 3) == P([0, F(2, 3), F(2, 3)])


def test_compose_factors():
    assert css_compose(K0_3, CUBE, 3) == K0_3  # K_0 *_3 K_1, and K_1 is the identity


def test_compose_degree_overflow():
    with pytest.raises(DegreeOverflowError):
        css_compose(P([0, 0, 0, 0, 1]), CUBE, 3)


def test_compose_multi_examples():
    assert css_compose_multi([CUBE] * 4, 3) == CUBE
    assert css_compose_multi([K0_3, CUBE, SQ], 3) == P([0, F(2, 3), F(2, 3)])
    assert css_compose_multi([P([0, 1, 1])], 2) == P([0, 1, 1])
    with pytest.raises(ValueError):
        css_compose_multi([], 3)


def test_composition_factor():
    assert composition_factor(1, 3) == CUBE
    assert composition_factor(0, 3) == K0_3
    a = F(5, 7)
    assert composition_factor(a, 3) == P([a, 2 * a + 1, a + 2, 1])
    assert composition_factor(INFINITY, 5) == P.binomial_power(4)
    with pytest.raises(ValueError):
        composition_factor(1, 1)


def test_build_phi_3_closed_form():
    phi = build_phi(3)
    assert phi.linear.to_rows() == [[F(3, 2), F(-1, 2)], [F(0), F(1)]]
    assert phi.offset == (F(-1, 2), F(0))
    assert phi.apply((F(2), F(1))) == (F(2), F(1))   # (x+1)^2 is fixed
    assert phi.apply((F(1), F(0))) == (F(1), F(0))   # x(x+1) is fixed too


def test_build_phi_requires_n_3():
    with pytest.raises(ValueError):
        build_phi(2)


def test_factor_symmetric_functions_examples():
    assert factor_symmetric_functions(P([0, 1, 2, 1]), 3) == (F(1), F(0))
    assert factor_symmetric_functions(CUBE, 3) == (F(2), F(1))
    with pytest.raises(NotInDomainError):
        factor_symmetric_functions(P([-1, 0, 0, 1]), 3)  # x^3 - 1 does not vanish at -1
    with pytest.raises(NotInDomainError):
        factor_symmetric_functions(P([0, 0, 0, 2]), 3)  # not monic
    # x^3 + 1 vanishes at -1, so it is factorable: cofactor x^2 - x + 1
    assert factor_symmetric_functions(P([1, 0, 0, 1]), 3) == (F(-5, 2), F(1))


def test_linear_part_spectrum_small_n():
    for n in range(3, 7):
        phi = build_phi(n)
        for lam in eigenvalues_closed_form(n):
            shifted = phi.linear.shifted(lam)
            assert shifted.determinant() == 0
            assert len(kernel(shifted)) == 1


def test_binomial_direction_fixed_by_linear_part():
    # the direction of (x+1)^{n-2} lies in ker(A - I)
    for n in range(3, 9):
        phi = build_phi(n)
        d = [F(binomialish) for binomialish in _binomial_row(n - 2)]
        image = phi.linear.matvec(d)
        assert image == tuple(d)


def _binomial_row(k):
    from schur_szego.exactpoly import binomial
    # c-space direction of (x+1)^k: coefficient of x^{k+1-i} for i = 1..k+1
    return [binomial(k, k + 1 - i) for i in range(1, k + 2)]


@given(st.lists(fractions, min_size=4, max_size=4),
       st.lists(fractions, min_size=4, max_size=4))
def test_compose_commutative(a, b):
    p, q = P(a), P(b)
    assert css_compose(p, q, 3) == css_compose(q, p, 3)


@given(st.lists(fractions, min_size=4, max_size=4),
       st.lists(fractions, min_size=4, max_size=4),
       st.lists(fractions, min_size=4, max_size=4))
def test_compose_associative(a, b, c):
    p, q, r = P(a), P(b), P(c)
    left = css_compose(css_compose(p, q, 3), r, 3)
    right = css_compose(p, css_compose(q, r, 3), 3)
    assert left == right
    assert css_compose_multi([p, q, r], 3) == left


@given(st.lists(fractions, min_size=1, max_size=5))
def test_compose_identity_element(a):
    p = P(a)
    m = 4
    ident = P.binomial_power(m)
    assert css_compose(p, ident, m) == p
    assert css_compose(ident, p, m) == p


@given(st.lists(st.fractions(min_value=-4, max_value=4, max_denominator=5),
                min_size=3, max_size=4))
def test_factorization_round_trip(params):
    n = len(params) + 1
    composed = css_compose_multi([composition_factor(a, n) for a in params], n)
    sigma = factor_symmetric_functions(composed, n)
    e = [F(1)] + [F(0)] * (n - 1)
    for a in params:
        for i in range(n - 1, 0, -1):
            e[i] += F(a) * e[i - 1]
    assert sigma == tuple(e[1:])

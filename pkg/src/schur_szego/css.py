"""Schur-Szego composition, composition factors, and the affine map Phi_n.

The composition at level m multiplies coefficients termwise and divides by
C(m, j). Every monic degree-n polynomial vanishing at -1 factors into n-1
composition factors K_a = (x+1)^{n-1}(x+a); Phi_n sends the coefficient
vector c of P/(x+1) to the elementary symmetric functions sigma of the
factor parameters a_1..a_{n-1}.

Construction of Phi_n: matching coefficients of the (n-1)-fold composition
gives, for each index j,

    p_j * C(n,j)^(n-2) = sum_nu C(n-1,j-1)^(n-1-nu) * C(n-1,j)^nu * sigma_nu

(sigma_0 = 1). The j = 0 row isolates sigma_{n-1}; rows j = 1..n-2, after
scaling by C(n-1,j-1)^(n-1), form a Vandermonde system in the distinct
nodes t_j = (n-j)/j, solved exactly by Newton interpolation. The remaining
identities (j = n-1, n) are verified, not assumed.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Sequence

from .exactpoly import RationalMatrix, RationalPoly, binomial, interpolate

INFINITY = math.inf


class DegreeOverflowError(ValueError):
    """A composition operand exceeds the declared composition degree."""


class NotInDomainError(ValueError):
    """Polynomial is outside the factorization domain (monic, P(-1)=0)."""


class ConstructionBugError(RuntimeError):
    """An internal consistency identity of the Phi_n construction failed."""


def css_compose(p: RationalPoly, q: RationalPoly, m: int) -> RationalPoly:
    """Schur-Szego composition at level m: coefficient j -> p_j q_j / C(m,j)."""
    if p.degree > m or q.degree > m:
        raise DegreeOverflowError(f"operand degree exceeds composition level {m}")
    return RationalPoly([p.coeff(j) * q.coeff(j) / binomial(m, j) for j in range(m + 1)])


def css_compose_multi(polys: Sequence[RationalPoly], m: int) -> RationalPoly:
    """s-fold composition: coefficient j -> prod_i p_{i,j} / C(m,j)^(s-1)."""
    if not polys:
        raise ValueError("need at least one polynomial")
    for p in polys:
        if p.degree > m:
            raise DegreeOverflowError(f"operand degree exceeds composition level {m}")
    out = []
    for j in range(m + 1):
        c = Fraction(1)
        for p in polys:
            c *= p.coeff(j)
        out.append(c / Fraction(binomial(m, j)) ** (len(polys) - 1))
    return RationalPoly(out)


@dataclass(frozen=True)
class CompositionFactor:
    """K_a = (x+1)^{n-1}(x+a); a may be INFINITY, giving K_inf = (x+1)^{n-1}."""

    a: Fraction | float
    n: int

    def expand(self) -> RationalPoly:
        return composition_factor(self.a, self.n)


def composition_factor(a: Fraction | int | float, n: int) -> RationalPoly:
    if n < 2:
        raise ValueError("n must be >= 2")
    base = RationalPoly.binomial_power(n - 1)
    if a == INFINITY:
        return base
    return base * RationalPoly([Fraction(a), 1])


@dataclass(frozen=True)
class AffineMapQ:
    """Phi_n as an exact affine map c -> A c + b on coefficient vectors."""

    linear: RationalMatrix
    offset: tuple[Fraction, ...]
    n: int

    def apply(self, c: Sequence[Fraction | int]) -> tuple[Fraction, ...]:
        return tuple(v + o for v, o in zip(self.linear.matvec(c), self.offset))


def _p_from_c(c: Sequence[Fraction], n: int) -> list[Fraction]:
    """Coefficients p_0..p_n of P = (x+1)(x^{n-1} + c_1 x^{n-2} + ... + c_{n-1})."""
    cof = [Fraction(1)] + [Fraction(v) for v in c]  # cof[i] is the coeff of x^{n-1-i}
    base = [Fraction(0)] * n
    for i, v in enumerate(cof):
        base[n - 1 - i] = v
    p = [Fraction(0)] * (n + 1)
    for i, v in enumerate(base):
        p[i] += v
        p[i + 1] += v
    return p


def _sigma_from_p(p: Sequence[Fraction], n: int) -> tuple[Fraction, ...]:
    """Solve rows j = 0..n-2 of the coefficient identities for sigma_1..sigma_{n-1}."""
    sigma_last = p[0]  # j = 0 row
    points = []
    for j in range(1, n - 1):
        t = Fraction(n - j, j)
        scale = Fraction(binomial(n - 1, j - 1)) ** (n - 1)
        r = (p[j] * Fraction(binomial(n, j)) ** (n - 2) - scale) / scale
        r -= t ** (n - 1) * sigma_last
        points.append((t, r / t))
    s_poly = interpolate(points)
    if s_poly.degree != float("-inf") and s_poly.degree > n - 3:
        raise ConstructionBugError("sigma interpolant degree too large")
    inner = tuple(s_poly.coeff(i) for i in range(n - 2))
    return inner + (sigma_last,)


def _verify_all_identities(p: Sequence[Fraction], sigma: Sequence[Fraction], n: int) -> None:
    full = (Fraction(1),) + tuple(sigma)  # sigma_0 = 1
    for j in range(n + 1):
        lhs = p[j] * Fraction(binomial(n, j)) ** (n - 2)
        rhs = sum(Fraction(binomial(n - 1, j - 1)) ** (n - 1 - nu)
                  * Fraction(binomial(n - 1, j)) ** nu * full[nu]
                  for nu in range(n))
        if lhs != rhs:
            raise ConstructionBugError(f"coefficient identity failed at j={j}")


@lru_cache(maxsize=None)
def build_phi(n: int) -> AffineMapQ:
    """Construct Phi_n exactly by probing the origin and the basis of c-space."""
    if n < 3:
        raise ValueError("n must be >= 3")
    zero = (Fraction(0),) * (n - 1)
    b = _sigma_from_p(_p_from_c(zero, n), n)
    cols = []
    for i in range(n - 1):
        e = [Fraction(0)] * (n - 1)
        e[i] = Fraction(1)
        s = _sigma_from_p(_p_from_c(e, n), n)
        cols.append([s[r] - b[r] for r in range(n - 1)])
    entries = [cols[c][r] for r in range(n - 1) for c in range(n - 1)]
    return AffineMapQ(RationalMatrix(n - 1, n - 1, entries), tuple(b), n)


def factor_symmetric_functions(p: RationalPoly, n: int) -> tuple[Fraction, ...]:
    """sigma vector of the composition-factor parameters of P.

    Requires P monic of degree n with P(-1) = 0. All n+1 coefficient
    identities are checked against the returned sigma, not just the n-1
    used in the construction.
    """
    if p.degree != n:
        raise NotInDomainError(f"degree must be {n}")
    if not p.is_monic():
        raise NotInDomainError("polynomial must be monic")
    if p(Fraction(-1)) != 0:
        raise NotInDomainError("polynomial must vanish at -1")
    cofactor = p.exact_divide(RationalPoly([1, 1]))
    c = [cofactor.coeff(n - 2 - i) for i in range(n - 1)]  # c_1..c_{n-1}
    sigma = build_phi(n).apply(c)
    _verify_all_identities(list(p.coeffs) + [Fraction(0)] * (n + 1 - len(p.coeffs)), sigma, n)
    return sigma

"""Spectrum of Phi_n: eigenvalues, eigenpolynomials, Q_{j,n}, and their limits.

Two independent routes to Q_{j,n} are implemented:

* extract_q: kernel of (A - lambda I) for the linear part A of Phi_n. The
  kernel vector is the coefficient vector of the direction polynomial
  V/(x+1), so the eigenpolynomial is V = (x+1) * D normalized monic.
* sigma_system_solve: the linear system L_k = R_k in the unknown interior
  coefficients q_1..q_{j-1} of Q_{j,n} (leading 1, constant (-1)^j fixed),
  assembled from the coefficient identities of the eigen-relation, solved
  on the block k = 1..j-1 and verified on every remaining k up to n-1.

Their exact agreement for 4 <= n <= 10 is an acceptance criterion; the
n -> infinity limits are estimated by Richardson extrapolation in 1/(n-1).
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Sequence

from . import css
from .exactpoly import RationalMatrix, RationalPoly, binomial, kernel, solve_linear
from .narayana import narayana_number


class SpectrumViolationError(RuntimeError):
    """A kernel had the wrong dimension (would falsify the spectrum claim)."""


class StructureViolationError(RuntimeError):
    """An eigenpolynomial failed its claimed x(x+1)^k Q factored shape."""


class SigmaInconsistencyError(RuntimeError):
    """System (Sigma) left a nonzero residual (would falsify its derivation)."""


def eigenvalues_closed_form(n: int) -> list[Fraction]:
    """lambda_{j,n} = n^{j-1} / ((n-1)(n-2)...(n-j+1)), j = 1..n-1."""
    if n < 3:
        raise ValueError("n must be >= 3")
    out = []
    val = Fraction(1)
    for j in range(1, n):
        out.append(val)
        val *= Fraction(n, n - j)
    return out


def eigenpolynomial(n: int, j: int) -> RationalPoly:
    """Monic degree-(n-1) eigenpolynomial of Phi_n for lambda_{j,n}.

    The kernel vector of A - lambda I holds the coefficients of the
    direction polynomial D = V/(x+1); V = (x+1) * D, normalized monic.
    Verified on the way out: V(-1) = 0 by construction, V(0) = 0 for
    j >= 2, and V = x(x+1)^{n-2} for j = 2.
    """
    if n < 3:
        raise ValueError("n must be >= 3")
    if not 1 <= j <= n - 1:
        raise ValueError(f"need 1 <= j <= n-1, got j={j}")
    phi = css.build_phi(n)
    lam = eigenvalues_closed_form(n)[j - 1]
    basis = kernel(phi.linear.shifted(lam))
    if len(basis) != 1:
        raise SpectrumViolationError(
            f"kernel of A - lambda_({j},{n}) I has dimension {len(basis)}")
    v = basis[0]
    if v[0] == 0:
        raise SpectrumViolationError("direction polynomial is not of full degree")
    lead = v[0]
    direction = RationalPoly([v[n - 2 - i] / lead for i in range(n - 1)])
    poly = RationalPoly([1, 1]) * direction
    if j == 1:
        expected = RationalPoly.binomial_power(n - 1)
        if poly != expected:
            raise SpectrumViolationError("lambda=1 eigenpolynomial is not (x+1)^{n-1}")
        c = [expected.coeff(n - 2 - i) for i in range(n - 1)]
        if phi.apply(c) != tuple(c):
            raise SpectrumViolationError("(x+1)^{n-1} is not Phi_n-fixed")
        return expected
    if poly.coeff(0) != 0:
        raise SpectrumViolationError(f"eigenpolynomial for j={j} does not vanish at 0")
    if j == 2 and poly != RationalPoly([0, 1]) * RationalPoly.binomial_power(n - 2):
        raise SpectrumViolationError("j=2 eigenpolynomial is not x(x+1)^{n-2}")
    return poly


def extract_q(n: int, j: int) -> RationalPoly:
    """Q_{j,n}: eigenpolynomial for lambda_{j+2,n} divided by x(x+1)^{n-j-2}."""
    if n < 4 or not 1 <= j <= n - 3:
        raise ValueError(f"need n >= 4 and 1 <= j <= n-3, got n={n}, j={j}")
    divisor = RationalPoly([0, 1]) * RationalPoly.binomial_power(n - j - 2)
    try:
        q = eigenpolynomial(n, j + 2).exact_divide(divisor)
    except ArithmeticError as exc:
        raise StructureViolationError(str(exc)) from exc
    if q.degree != j or not q.is_monic() or q(Fraction(-1)) == 0:
        raise StructureViolationError(f"Q_({j},{n}) has the wrong shape: {q}")
    if q.coeff(0) != Fraction(-1) ** j:
        raise StructureViolationError(f"Q_({j},{n}) constant term is not (-1)^j")
    return q


@dataclass(frozen=True)
class SpectrumReport:
    n: int
    eigenvalues: tuple[Fraction, ...]
    eigenpolys: tuple[RationalPoly, ...]
    q_polys: tuple[RationalPoly, ...]  # Q_{1,n} .. Q_{n-3,n}


@lru_cache(maxsize=None)
def spectrum_report(n: int) -> SpectrumReport:
    eig = eigenvalues_closed_form(n)
    polys = tuple(eigenpolynomial(n, j) for j in range(1, n))
    qs = tuple(extract_q(n, j) for j in range(1, n - 2)) if n >= 4 else ()
    return SpectrumReport(n, tuple(eig), polys, qs)


# ---------------------------------------------------------------------------
# system (Sigma)
# ---------------------------------------------------------------------------


def _sigma_row(n: int, j: int, k: int) -> tuple[list[Fraction], Fraction]:
    """Equation L_k - R_k = 0 as (coefficients of q_1..q_{j-1}, constant)."""
    l_next = Fraction(1)
    for i in range(1, j + 2):
        l_next *= (n - i)
    # left side: l_{j+1} * sum over the coefficients of Q, low-to-high degree
    vec = [Fraction(0)] * (j - 1)
    const = l_next * (Fraction(-1) ** j * binomial(n - j - 2, k - 1)
                      + binomial(n - j - 2, k - 1 - j))
    for nu in range(1, j):  # coefficient of x^nu in Q is q_{j-nu}
        vec[j - nu - 1] += l_next * binomial(n - j - 2, k - 1 - nu)
    # right side
    f = Fraction(n) ** (j + 1) * binomial(n - 1, k - 1) * binomial(n - 1, k) \
        / Fraction(binomial(n, k)) ** (j + 1)
    a, b = Fraction(binomial(n - 1, k - 1)), Fraction(binomial(n - 1, k))
    const -= f * (a ** j + Fraction(-1) ** j * b ** j)
    for nu in range(1, j):
        vec[nu - 1] -= f * a ** (j - nu) * b ** nu
    return vec, const


def _independent_rows(rows: list[tuple[list[Fraction], Fraction]], want: int) -> list[int]:
    """Greedy selection of `want` linearly independent rows (by index)."""
    picked: list[int] = []
    basis: list[list[Fraction]] = []
    for idx, (vec, _) in enumerate(rows):
        v = list(vec)
        for bvec in basis:
            piv = next(i for i, x in enumerate(bvec) if x != 0)
            if v[piv] != 0:
                f = v[piv] / bvec[piv]
                v = [a - f * b for a, b in zip(v, bvec)]
        if any(x != 0 for x in v):
            basis.append(v)
            picked.append(idx)
            if len(picked) == want:
                return picked
    raise SigmaInconsistencyError("system (Sigma) is rank deficient")


def sigma_system_solve(n: int, j: int) -> RationalPoly:
    """Q_{j,n} from system (Sigma), independent of the Phi_n kernel route.

    Solves the k = 1..j-1 block (falling back to a greedy independent row
    selection over k = 1..n-1 if that block were singular), then checks
    every equation k = 1..n-1 exactly.
    """
    if n < 4 or not 1 <= j <= n - 3:
        raise ValueError(f"need n >= 4 and 1 <= j <= n-3, got n={n}, j={j}")
    all_rows = [_sigma_row(n, j, k) for k in range(1, n)]
    q: tuple[Fraction, ...] = ()
    if j >= 2:
        block = all_rows[:j - 1]
        try:
            matrix = RationalMatrix.from_rows([r[0] for r in block])
            q = solve_linear(matrix, [-r[1] for r in block])
        except ValueError:
            picked = _independent_rows(all_rows, j - 1)
            matrix = RationalMatrix.from_rows([all_rows[i][0] for i in picked])
            q = solve_linear(matrix, [-all_rows[i][1] for i in picked])
    for k, (vec, const) in enumerate(all_rows, start=1):
        residual = sum((vi * qi for vi, qi in zip(vec, q)), const)
        if residual != 0:
            raise SigmaInconsistencyError(f"nonzero residual at k={k} for n={n}, j={j}")
    coeffs = [Fraction(0)] * (j + 1)
    coeffs[j] = Fraction(1)
    coeffs[0] = Fraction(-1) ** j
    for nu in range(1, j):
        coeffs[j - nu] = q[nu - 1]
    return RationalPoly(coeffs)


# ---------------------------------------------------------------------------
# limits: Richardson extrapolation in h = 1/(n-1)
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class ExpansionEstimate:
    """Extrapolated leading coefficient q_nu^{(0)} of one q_nu(n) series."""

    j: int
    nu: int
    samples: tuple[tuple[int, Fraction], ...]
    extrapolated_q0: float
    error_bound: float


def _neville_zero(points: Sequence[tuple[Fraction, Fraction]]) -> tuple[Fraction, Fraction]:
    """Exact polynomial extrapolation to h = 0; returns (value, last-step delta)."""
    hs = [p[0] for p in points]
    tab = [p[1] for p in points]
    prev = tab[-1]
    for m in range(1, len(points)):
        prev = tab[-1]
        tab = [(hs[i] * tab[i + 1] - hs[i + m] * tab[i]) / (hs[i] - hs[i + m])
               for i in range(len(tab) - 1)]
    return tab[0], abs(tab[0] - prev)


def richardson_limit(j: int, n_list: Sequence[int]) -> list[ExpansionEstimate]:
    """Estimate q_nu^{(0)} for nu = 1..j-1 from exact Q_{j,n} samples.

    One estimate per interior coefficient; the error bound is the last
    Neville step (the paper asserts convergence of the 1/(n-1) series but
    no rate, so the bound is empirical by design).
    """
    ns = list(n_list)
    if len(ns) < 3 or sorted(set(ns)) != ns:
        raise ValueError("n_list must have >= 3 strictly increasing entries")
    if ns[0] < j + 3:
        raise ValueError(f"all n must be >= j+3 = {j + 3}")
    qs = {n: sigma_system_solve(n, j) for n in ns}
    out = []
    for nu in range(1, j):
        samples = tuple((n, qs[n].coeff(j - nu)) for n in ns)
        points = [(Fraction(1, n - 1), val) for n, val in samples]
        value, delta = _neville_zero(points)
        out.append(ExpansionEstimate(j, nu, samples, float(value), float(delta)))
    return out


def q_star_estimate(j: int, n_list: Sequence[int]) -> tuple[list[float], list[float]]:
    """Float coefficients (constant first) of Q_j* and per-coefficient bounds."""
    coeffs = [0.0] * (j + 1)
    bounds = [0.0] * (j + 1)
    coeffs[j] = 1.0
    coeffs[0] = (-1.0) ** j
    for est in richardson_limit(j, n_list):
        coeffs[j - est.nu] = est.extrapolated_q0
        bounds[j - est.nu] = est.error_bound
    return coeffs, bounds


def m_transform(q: RationalPoly, j: int) -> RationalPoly:
    """M_j(x) = (-1)^{j-1} x Q_{j-1}(-x) for deg Q = j-1."""
    if q.degree != j - 1:
        raise ValueError(f"expected degree {j - 1}, got {q.degree}")
    sign = Fraction(-1) ** (j - 1)
    return RationalPoly([0] + [sign * Fraction(-1) ** i * q.coeff(i) for i in range(j)])


@dataclass(frozen=True)
class MjNjReport:
    j: int
    n_list: tuple[int, ...]
    tol: float
    m_coeffs: tuple[float, ...]       # coefficients of x^1..x^j in M_j
    narayana_coeffs: tuple[int, ...]
    deviations: tuple[float, ...]
    error_bounds: tuple[float, ...]
    max_deviation: float
    passed: bool


class TheoremCheckFailed(AssertionError):
    """A numeric theorem verification exceeded its tolerance."""


def verify_mjnj(j: int, n_list: Sequence[int], tol: float) -> MjNjReport:
    """Check that the transformed limit polynomial reproduces the Narayana
    row: extrapolate Q_{j-1}*, transform, compare coefficientwise at `tol`."""
    if j < 2:
        raise ValueError("j must be >= 2")
    coeffs, bounds = q_star_estimate(j - 1, n_list)
    sign = (-1.0) ** (j - 1)
    m_coeffs = tuple(sign * (-1.0) ** i * coeffs[i] for i in range(j))
    m_bounds = tuple(bounds[i] for i in range(j))
    target = tuple(narayana_number(j, k) for k in range(1, j + 1))
    deviations = tuple(abs(mc - t) for mc, t in zip(m_coeffs, target))
    report = MjNjReport(j, tuple(n_list), tol, m_coeffs, target, deviations,
                        m_bounds, max(deviations), max(deviations) <= tol)
    if not report.passed:
        raise TheoremCheckFailed(
            f"M_{j} vs N_{j}: max deviation {report.max_deviation} > tol {tol}")
    return report

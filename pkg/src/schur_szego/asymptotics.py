"""Asymptotic root-measure machinery for the Narayana sequence.

Closed-form density/distribution, empirical CDFs and KS distance, the
asymptotic quotient Psi and logarithmic derivative Theta with their
finite-n versions, Cauchy transforms, Plemelj boundary recovery of the
density, and a Poincare ratio engine for linear difference equations with
convergent variable coefficients.

Floating point lives here; everything exact stays in the other modules.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Callable, Sequence

from .exactpoly import RationalPoly
from .narayana import narayana_poly_direct
from .roots import roots_float


class PoleError(ZeroDivisionError):
    """Evaluation at a pole of a rational quotient."""


class BranchCutError(ValueError):
    """Limit formula evaluated on the branch cut (-inf, 0]."""


class RatioPoleError(ArithmeticError):
    """A trajectory value hit exactly zero while ratios were required."""


# ---------------------------------------------------------------------------
# closed forms for the asymptotic root-counting measure
# ---------------------------------------------------------------------------


def density_rho(x: float) -> float:
    """rho(x) = 1 / (pi (1-x) sqrt(-x)) on x < 0."""
    if x >= 0:
        raise ValueError("density is supported on x < 0")
    return 1.0 / (math.pi * (1.0 - x) * math.sqrt(-x))


def cdf_kappa(x: float) -> float:
    """kappa(x) = 1 - (2/pi) arctan sqrt(-x) on x <= 0."""
    if x > 0:
        raise ValueError("distribution argument must be <= 0")
    return 1.0 - (2.0 / math.pi) * math.atan(math.sqrt(-x))


@dataclass(frozen=True)
class StepCDF:
    """Right-continuous empirical CDF of a finite root sample."""

    points: tuple[float, ...]
    n: int

    def __call__(self, x: float) -> float:
        lo, hi = 0, self.n
        while lo < hi:
            mid = (lo + hi) // 2
            if self.points[mid] <= x:
                lo = mid + 1
            else:
                hi = mid
        return lo / self.n


def empirical_cdf(roots: Sequence[float]) -> StepCDF:
    if not roots:
        raise ValueError("empty sample")
    pts = tuple(sorted(roots))
    return StepCDF(pts, len(pts))


def ks_distance(cdf: StepCDF, theoretical: Callable[[float], float] = cdf_kappa) -> float:
    """sup |F - kappa|, evaluated at and just below every jump point."""
    d = 0.0
    for i, x in enumerate(cdf.points, start=1):
        t = theoretical(x)
        d = max(d, abs(i / cdf.n - t), abs((i - 1) / cdf.n - t))
    return d


@lru_cache(maxsize=8)
def narayana_root_sample(n: int) -> tuple[float, ...]:
    """Certified binary64 roots of N_n (refined to width 2^-40), sorted."""
    return tuple(roots_float(narayana_poly_direct(n)))


# ---------------------------------------------------------------------------
# quotients Psi_n, Theta_n and their limits
# ---------------------------------------------------------------------------


@lru_cache(maxsize=512)
def _float_coeffs(n: int) -> tuple[float, ...]:
    return tuple(float(c) for c in narayana_poly_direct(n).coeffs)


def _eval_float(coeffs: Sequence[float], x: complex) -> complex:
    acc = 0.0 + 0.0j
    for c in reversed(coeffs):
        acc = acc * x + c
    return acc


def _eval_deriv_float(coeffs: Sequence[float], x: complex) -> complex:
    acc = 0.0 + 0.0j
    for i in range(len(coeffs) - 1, 0, -1):
        acc = acc * x + i * coeffs[i]
    return acc


def psi_n(n: int, x) -> complex | Fraction:
    """N_{n+1}(x) / N_n(x); exact when x is a Fraction (or int)."""
    if isinstance(x, (Fraction, int)):
        den = narayana_poly_direct(n)(Fraction(x))
        if den == 0:
            raise PoleError(f"N_{n} vanishes at {x}")
        return narayana_poly_direct(n + 1)(Fraction(x)) / den
    den = _eval_float(_float_coeffs(n), x)
    if den == 0:
        raise PoleError(f"N_{n} vanishes at {x}")
    return _eval_float(_float_coeffs(n + 1), x) / den


def theta_n(n: int, x) -> complex | Fraction:
    """N_n'(x) / (n N_n(x)); exact when x is a Fraction (or int)."""
    if isinstance(x, (Fraction, int)):
        p = narayana_poly_direct(n)
        den = p(Fraction(x))
        if den == 0:
            raise PoleError(f"N_{n} vanishes at {x}")
        return p.derivative()(Fraction(x)) / (n * den)
    den = _eval_float(_float_coeffs(n), x)
    if den == 0:
        raise PoleError(f"N_{n} vanishes at {x}")
    return _eval_deriv_float(_float_coeffs(n), x) / (n * den)


def _check_off_cut(x: complex) -> complex:
    x = complex(x)
    if x.imag == 0 and x.real <= 0:
        raise BranchCutError(f"{x} lies on the branch cut (-inf, 0]")
    return x


def psi_limit(x) -> complex:
    """Psi(x) = (sqrt(x) + 1)^2, principal branch, off the cut."""
    x = _check_off_cut(x)
    return (cmath.sqrt(x) + 1.0) ** 2


def theta_limit(x) -> complex:
    """Theta(x) = 1 / (x + sqrt(x)), principal branch, off the cut."""
    x = _check_off_cut(x)
    return 1.0 / (x + cmath.sqrt(x))


def cauchy_transform(p: RationalPoly, x) -> complex | Fraction:
    """Cauchy transform of the root-counting measure: P'(x) / (deg P * P(x))."""
    deg = p.degree
    if deg == float("-inf") or deg == 0:
        raise ValueError("need a nonconstant polynomial")
    if isinstance(x, (Fraction, int)):
        val = p(Fraction(x))
        if val == 0:
            raise PoleError(f"polynomial vanishes at {x}")
        return p.derivative()(Fraction(x)) / (deg * val)
    coeffs = tuple(float(c) for c in p.coeffs)
    val = _eval_float(coeffs, x)
    if val == 0:
        raise PoleError(f"polynomial vanishes at {x}")
    return _eval_deriv_float(coeffs, x) / (deg * val)


def plemelj_density(x: float, eps: float) -> float:
    """Boundary-jump recovery of the density from the limiting Cauchy
    transform: (i / 2 pi) (C(x + i eps) - C(x - i eps)), real part.

    Approaches density_rho(x) as eps -> 0.
    """
    if x >= 0:
        raise ValueError("density support is x < 0")
    if eps <= 0:
        raise ValueError("eps must be positive")
    upper = theta_limit(complex(x, eps))
    lower = theta_limit(complex(x, -eps))
    return ((1j / (2.0 * math.pi)) * (upper - lower)).real


# ---------------------------------------------------------------------------
# characteristic roots and the equimodular set
# ---------------------------------------------------------------------------


def characteristic_roots(coeffs: Sequence[complex]) -> list[complex]:
    """Roots of a monic characteristic polynomial given as an ascending
    coefficient list [a_0, ..., a_{k-1}, 1]."""
    cs = [complex(c) for c in coeffs]
    if not cs or cs[-1] != 1:
        raise ValueError("characteristic polynomial must be monic")
    k = len(cs) - 1
    if k == 0:
        return []
    if k == 1:
        return [-cs[0]]
    if k == 2:
        b, c = cs[1], cs[0]
        disc = cmath.sqrt(b * b - 4.0 * c)
        return sorted([(-b + disc) / 2.0, (-b - disc) / 2.0], key=abs)
    import numpy as np

    return sorted((complex(r) for r in np.roots(list(reversed(cs)))), key=abs)


def limit_recurrence_roots(x) -> list[complex]:
    """Roots of Psi^2 - 2(x+1) Psi + (x-1)^2 = 0 (the quotient's limit)."""
    x = complex(x)
    return characteristic_roots([(x - 1.0) ** 2, -2.0 * (x + 1.0), 1.0])


def equimodular_check(x, rel_tol: float = 1e-12) -> bool:
    """True iff the two limit-recurrence roots at x share an absolute value."""
    r1, r2 = limit_recurrence_roots(x)
    scale = max(abs(r1), abs(r2))
    if scale == 0:
        return True
    return abs(abs(r1) - abs(r2)) <= rel_tol * scale


# ---------------------------------------------------------------------------
# Poincare ratio engine
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class RecurrenceSpec:
    """f(t+k) + P_{k-1}(t) f(t+k-1) + ... + P_0(t) f(t) = 0.

    coefficient_fns[i] evaluates P_i at integer t (binary64 or exact
    rationals); limits[i] is lim P_i; initial holds f(0..k-1).
    """

    order: int
    coefficient_fns: tuple[Callable[[int], complex | Fraction], ...]
    limits: tuple[complex | Fraction, ...]
    initial: tuple[complex | Fraction, ...]

    def __post_init__(self):
        if self.order < 1:
            raise ValueError("order must be >= 1")
        if not (len(self.coefficient_fns) == len(self.limits)
                == len(self.initial) == self.order):
            raise ValueError("coefficient/limit/initial lengths must equal the order")
        if not any(v != 0 for v in self.initial):
            raise ValueError("initial values must not all be zero")


@dataclass(frozen=True)
class PoincareResult:
    values: tuple
    ratios: tuple          # f(t+1)/f(t); None where f(t) = 0
    raw_last_ratio: object
    limit: object          # None when no limit claim is made
    error_estimate: float
    classified_root: complex | None
    no_limit_claim: bool
    characteristic: tuple[complex, ...]


def _extrapolate_tail(ratios: Sequence, t_max: int):
    """Neville extrapolation of the ratio tail in 1/t; exact if ratios are."""
    ts = sorted({max(2, round(t_max * (1 - i / 8))) for i in range(5)})
    pts = [(Fraction(1, t), ratios[t - 1]) for t in ts if ratios[t - 1] is not None]
    if len(pts) < 2:
        return None, math.inf
    tab = [p[1] for p in pts]
    hs = [p[0] for p in pts]
    prev = tab[-1]
    for m in range(1, len(pts)):
        prev = tab[-1]
        tab = [(hs[i] * tab[i + 1] - hs[i + m] * tab[i]) / (hs[i] - hs[i + m])
               for i in range(len(tab) - 1)]
    return tab[0], abs(complex(tab[0] - prev))


def poincare_ratio(spec: RecurrenceSpec, t_max: int) -> PoincareResult:
    """Iterate the recurrence and estimate the ratio limit f(t+1)/f(t).

    The characteristic roots of the limit equation classify the estimate;
    when two of them are equimodular no limit is claimed (trajectory only).
    The limit estimate is adaptive: the raw last ratio and a Richardson
    extrapolation of the tail compete on their own error estimates (raw
    wins for geometric convergence, extrapolation for O(1/t) tails).
    """
    k = spec.order
    if t_max < k:
        raise ValueError("t_max must be at least the order")
    char = tuple(characteristic_roots(list(spec.limits) + [1]))
    mods = sorted(abs(r) for r in char)
    scale = mods[-1] if mods[-1] > 0 else 1.0
    equimodular = any(b - a <= 1e-12 * scale for a, b in zip(mods, mods[1:]))

    values = list(spec.initial)
    for t in range(t_max - k + 1):
        nxt = -sum(spec.coefficient_fns[i](t) * values[t + i] for i in range(k))
        values.append(nxt)
    ratios: list = []
    for a, b in zip(values, values[1:]):
        ratios.append(None if a == 0 else b / a)

    if equimodular:
        return PoincareResult(tuple(values), tuple(ratios), ratios[-1] if ratios else None,
                              None, math.inf, None, True, char)
    if any(r is None for r in ratios):
        raise RatioPoleError("trajectory hit an exact zero; perturb the start")
    raw = ratios[-1]
    raw_err = abs(complex(raw - ratios[-2])) if len(ratios) > 1 else math.inf
    extrapolated, ext_err = _extrapolate_tail(ratios, len(ratios))
    if extrapolated is not None and ext_err < raw_err:
        limit, err = extrapolated, ext_err
    else:
        limit, err = raw, raw_err
    classified = min(char, key=lambda r: abs(r - complex(limit)))
    return PoincareResult(tuple(values), tuple(ratios), raw, limit, err,
                          classified, False, char)


def fibonacci_recurrence() -> RecurrenceSpec:
    """f(t+2) - f(t+1) - f(t) = 0 with f(0) = f(1) = 1, exact."""
    minus_one = Fraction(-1)
    return RecurrenceSpec(2, (lambda t: minus_one, lambda t: minus_one),
                          (minus_one, minus_one), (Fraction(1), Fraction(1)))


def narayana_recurrence(x) -> RecurrenceSpec:
    """The normalized Narayana recurrence at fixed x, with f(t) = N_{t+1}(x).

    Exact (Fraction) when x is rational, binary64 otherwise.
    """
    exact = isinstance(x, (Fraction, int))
    x = Fraction(x) if exact else float(x)
    one = Fraction(1) if exact else 1.0

    def p0(t):
        return (t + one) * (x - 1) ** 2 / (t + 4)

    def p1(t):
        return -(2 * t + 5 * one) * (x + 1) / (t + 4)

    limits = ((x - one) ** 2, -2 * (x + one))
    f0 = x
    f1 = x * x + x
    return RecurrenceSpec(2, (p0, p1), limits, (f0, f1))


def constant_recurrence(char_coeffs: Sequence[Fraction],
                        initial: Sequence[Fraction]) -> RecurrenceSpec:
    """Constant-coefficient recurrence from an ascending monic characteristic
    coefficient list [a_0, ..., a_{k-1}, 1] (exact when inputs are exact)."""
    cs = list(char_coeffs)
    if cs[-1] != 1:
        raise ValueError("characteristic polynomial must be monic")
    body = tuple(cs[:-1])
    fns = tuple((lambda t, c=c: c) for c in body)
    return RecurrenceSpec(len(body), fns, body, tuple(initial))

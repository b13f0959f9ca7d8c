"""Exact rational univariate polynomials and small dense linear algebra.

Everything here is pure and exact: coefficients are ``fractions.Fraction``,
matrices are dense row-major Fraction arrays, and all solvers are plain
rational Gaussian elimination (sizes in this project stay well under 200).
Floating point is deliberately kept out of this module.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence

NEG_INF = float("-inf")


class NotDivisibleError(ArithmeticError):
    """Exact polynomial division left a nonzero remainder."""


class SingularMatrixError(ValueError):
    """solve_linear was given a singular (or non-square) system."""


def binomial(n: int, k: int) -> int:
    """C(n, k), with the convention that out-of-range indices give 0.

    The boundary convention makes coefficient sums with shifted indices
    total functions (terms like C(n-j-2, k-1-nu) simply drop out).
    """
    if k < 0 or k > n or n < 0:
        return 0
    return math.comb(n, k)


def _canonical(coeffs: Iterable[Fraction | int]) -> tuple[Fraction, ...]:
    cs = [Fraction(c) for c in coeffs]
    while len(cs) > 1 and cs[-1] == 0:
        cs.pop()
    if not cs:
        cs = [Fraction(0)]
    return tuple(cs)


@dataclass(frozen=True)
class RationalPoly:
    """Dense univariate polynomial over Q, constant term first.

    The zero polynomial is the single coefficient [0]; its degree is
    reported as -inf so degree comparisons never involve a fake -1.
    """

    coeffs: tuple[Fraction, ...]

    def __init__(self, coeffs: Iterable[Fraction | int]):
        object.__setattr__(self, "coeffs", _canonical(coeffs))

    # -- constructors -------------------------------------------------

    @classmethod
    def zero(cls) -> "RationalPoly":
        return cls([0])

    @classmethod
    def one(cls) -> "RationalPoly":
        return cls([1])

    @classmethod
    def x(cls) -> "RationalPoly":
        return cls([0, 1])

    @classmethod
    def monomial(cls, degree: int, coeff: Fraction | int = 1) -> "RationalPoly":
        return cls([0] * degree + [coeff])

    @classmethod
    def binomial_power(cls, k: int) -> "RationalPoly":
        """(x+1)^k, expanded."""
        return cls([binomial(k, i) for i in range(k + 1)])

    # -- basic queries -------------------------------------------------

    @property
    def degree(self) -> int | float:
        if self.is_zero():
            return NEG_INF
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return len(self.coeffs) == 1 and self.coeffs[0] == 0

    def leading(self) -> Fraction:
        return self.coeffs[-1]

    def is_monic(self) -> bool:
        return not self.is_zero() and self.coeffs[-1] == 1

    def coeff(self, i: int) -> Fraction:
        """Coefficient of x^i (0 outside the stored range)."""
        if 0 <= i < len(self.coeffs):
            return self.coeffs[i]
        return Fraction(0)

    # -- evaluation ----------------------------------------------------

    def __call__(self, x):
        """Horner evaluation; exact for Fraction/int arguments."""
        acc = None
        for c in reversed(self.coeffs):
            acc = c if acc is None else acc * x + c
        return acc

    # -- ring operations -------------------------------------------------

    def __add__(self, other: "RationalPoly") -> "RationalPoly":
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        return RationalPoly([ai + (b[i] if i < len(b) else 0) for i, ai in enumerate(a)])

    def __sub__(self, other: "RationalPoly") -> "RationalPoly":
        return self + (-other)

    def __neg__(self) -> "RationalPoly":
        return RationalPoly([-c for c in self.coeffs])

    def __mul__(self, other: "RationalPoly") -> "RationalPoly":
        if self.is_zero() or other.is_zero():
            return RationalPoly.zero()
        out = [Fraction(0)] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a == 0:
                continue
            for j, b in enumerate(other.coeffs):
                if b != 0:
                    out[i + j] += a * b
        return RationalPoly(out)

    def scale(self, factor: Fraction | int) -> "RationalPoly":
        return RationalPoly([c * Fraction(factor) for c in self.coeffs])

    def derivative(self) -> "RationalPoly":
        if len(self.coeffs) == 1:
            return RationalPoly.zero()
        return RationalPoly([i * c for i, c in enumerate(self.coeffs)][1:])

    def divmod(self, divisor: "RationalPoly") -> tuple["RationalPoly", "RationalPoly"]:
        """Euclidean division over Q: self = divisor * quot + rem."""
        if divisor.is_zero():
            raise ZeroDivisionError("polynomial division by zero")
        rem = list(self.coeffs)
        d = divisor.coeffs
        dd = len(d) - 1
        lead = d[-1]
        if len(rem) - 1 < dd:
            return RationalPoly.zero(), RationalPoly(rem)
        quot = [Fraction(0)] * (len(rem) - dd)
        for i in range(len(quot) - 1, -1, -1):
            q = rem[i + dd] / lead
            quot[i] = q
            if q != 0:
                for k, dk in enumerate(d):
                    rem[i + k] -= q * dk
        return RationalPoly(quot), RationalPoly(rem[:dd] if dd else [0])

    def exact_divide(self, divisor: "RationalPoly") -> "RationalPoly":
        """Quotient when the division is exact; raises otherwise.

        A nonzero remainder signals that a claimed structural factorization
        (e.g. the x(x+1)^k shape of an eigenpolynomial) is false.
        """
        quot, rem = self.divmod(divisor)
        if not rem.is_zero():
            raise NotDivisibleError(f"{self} is not divisible by {divisor}")
        return quot

    # -- reversal / self-reciprocity --------------------------------------

    def reverse(self, n: int | None = None) -> "RationalPoly":
        """The reverted polynomial x^n * P(1/x) for declared degree n >= deg P."""
        if n is None:
            n = len(self.coeffs) - 1
        if n < len(self.coeffs) - 1 or (not self.is_zero() and n < self.degree):
            raise ValueError(f"declared degree {n} below actual degree {self.degree}")
        padded = list(self.coeffs) + [Fraction(0)] * (n + 1 - len(self.coeffs))
        return RationalPoly(reversed(padded))

    def self_reciprocal_sign(self) -> int | None:
        """+1 if P^R = P, -1 if P^R = -P (n = deg P), else None."""
        if self.is_zero():
            raise ValueError("zero polynomial has no reciprocal sign")
        rev = self.reverse()
        if rev == self:
            return 1
        if rev == -self:
            return -1
        return None

    def __str__(self) -> str:
        if self.is_zero():
            return "0"
        parts = []
        for i, c in enumerate(self.coeffs):
            if c == 0:
                continue
            term = "" if i == 0 else ("x" if i == 1 else f"x^{i}")
            if i == 0:
                parts.append(str(c))
            elif abs(c) == 1:
                parts.append(("-" if c < 0 else "") + term)
            else:
                parts.append(f"{c}*{term}")
        return " + ".join(parts).replace("+ -", "- ")


def interpolate(points: Sequence[tuple[Fraction, Fraction]]) -> RationalPoly:
    """Exact Newton interpolation through distinct nodes."""
    xs = [Fraction(p[0]) for p in points]
    if len(set(xs)) != len(xs):
        raise ValueError("interpolation nodes must be distinct")
    dd = [Fraction(p[1]) for p in points]
    newton = [dd[0]]
    for m in range(1, len(points)):
        dd = [(dd[i + 1] - dd[i]) / (xs[i + m] - xs[i]) for i in range(len(dd) - 1)]
        newton.append(dd[0])
    poly = RationalPoly([newton[-1]])
    for m in range(len(newton) - 2, -1, -1):
        poly = poly * RationalPoly([-xs[m], 1]) + RationalPoly([newton[m]])
    return poly


def elementary_symmetric_prefix(k: int, j: int) -> Fraction:
    """e_k(j): the k-th elementary symmetric function of (1, 2, ..., j)."""
    if k < 1 or j < 0:
        raise ValueError("need k >= 1, j >= 0")
    # e-vector update: multiply prod (1 + m t) for m = 1..j, track t^0..t^k
    e = [Fraction(1)] + [Fraction(0)] * k
    for m in range(1, j + 1):
        for i in range(min(k, m), 0, -1):
            e[i] += m * e[i - 1]
    return e[k]


def power_sum(k: int, j: int) -> Fraction:
    """phi_k(j) = 1^k + 2^k + ... + j^k."""
    if k < 1 or j < 0:
        raise ValueError("need k >= 1, j >= 0")
    return Fraction(sum(m**k for m in range(1, j + 1)))


# ---------------------------------------------------------------------------
# small dense exact linear algebra
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class RationalMatrix:
    rows: int
    cols: int
    entries: tuple[Fraction, ...]  # row-major

    def __init__(self, rows: int, cols: int, entries: Iterable[Fraction | int]):
        ent = tuple(Fraction(e) for e in entries)
        if len(ent) != rows * cols:
            raise ValueError("entry count does not match shape")
        object.__setattr__(self, "rows", rows)
        object.__setattr__(self, "cols", cols)
        object.__setattr__(self, "entries", ent)

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence[Fraction | int]]) -> "RationalMatrix":
        r = len(rows)
        c = len(rows[0]) if r else 0
        return cls(r, c, [e for row in rows for e in row])

    @classmethod
    def identity(cls, n: int) -> "RationalMatrix":
        return cls(n, n, [1 if i == j else 0 for i in range(n) for j in range(n)])

    def at(self, i: int, j: int) -> Fraction:
        return self.entries[i * self.cols + j]

    def row(self, i: int) -> tuple[Fraction, ...]:
        return self.entries[i * self.cols:(i + 1) * self.cols]

    def to_rows(self) -> list[list[Fraction]]:
        return [list(self.row(i)) for i in range(self.rows)]

    def matvec(self, v: Sequence[Fraction | int]) -> tuple[Fraction, ...]:
        if len(v) != self.cols:
            raise ValueError("vector length mismatch")
        vf = [Fraction(x) for x in v]
        return tuple(sum((self.at(i, j) * vf[j] for j in range(self.cols)), Fraction(0))
                     for i in range(self.rows))

    def shifted(self, lam: Fraction | int) -> "RationalMatrix":
        """self - lam * I (square only)."""
        if self.rows != self.cols:
            raise ValueError("shift needs a square matrix")
        lam = Fraction(lam)
        ent = list(self.entries)
        for i in range(self.rows):
            ent[i * self.cols + i] -= lam
        return RationalMatrix(self.rows, self.cols, ent)

    def determinant(self) -> Fraction:
        if self.rows != self.cols:
            raise ValueError("determinant needs a square matrix")
        m = self.to_rows()
        n = self.rows
        det = Fraction(1)
        for c in range(n):
            piv = _select_pivot(m, c, c)
            if piv is None:
                return Fraction(0)
            if piv != c:
                m[c], m[piv] = m[piv], m[c]
                det = -det
            det *= m[c][c]
            inv = 1 / m[c][c]
            for r in range(c + 1, n):
                if m[r][c] != 0:
                    f = m[r][c] * inv
                    m[r] = [a - f * b for a, b in zip(m[r], m[c])]
        return det


def _select_pivot(m: list[list[Fraction]], from_row: int, col: int) -> int | None:
    """Pivot row with the largest |numerator| in `col` (None if all zero)."""
    best, best_key = None, None
    for r in range(from_row, len(m)):
        v = m[r][col]
        if v != 0:
            key = abs(v.numerator)
            if best is None or key > best_key:
                best, best_key = r, key
    return best


def _rref(m: list[list[Fraction]]) -> tuple[list[list[Fraction]], list[int]]:
    rows = len(m)
    cols = len(m[0]) if rows else 0
    piv_cols: list[int] = []
    r = 0
    for c in range(cols):
        if r >= rows:
            break
        piv = _select_pivot(m, r, c)
        if piv is None:
            continue
        m[r], m[piv] = m[piv], m[r]
        inv = 1 / m[r][c]
        m[r] = [v * inv for v in m[r]]
        for rr in range(rows):
            if rr != r and m[rr][c] != 0:
                f = m[rr][c]
                m[rr] = [a - f * b for a, b in zip(m[rr], m[r])]
        piv_cols.append(c)
        r += 1
    return m, piv_cols


def kernel(matrix: RationalMatrix) -> list[tuple[Fraction, ...]]:
    """Basis of the null space via exact reduced row echelon form."""
    m, piv_cols = _rref(matrix.to_rows())
    free = [c for c in range(matrix.cols) if c not in piv_cols]
    basis = []
    for fc in free:
        v = [Fraction(0)] * matrix.cols
        v[fc] = Fraction(1)
        for r, pc in enumerate(piv_cols):
            v[pc] = -m[r][fc]
        basis.append(tuple(v))
    return basis


def solve_linear(matrix: RationalMatrix, rhs: Sequence[Fraction | int]) -> tuple[Fraction, ...]:
    """Unique exact solution of a square nonsingular system."""
    if matrix.rows != matrix.cols:
        raise SingularMatrixError("system must be square")
    if len(rhs) != matrix.rows:
        raise ValueError("rhs length mismatch")
    n = matrix.rows
    m = [list(matrix.row(i)) + [Fraction(rhs[i])] for i in range(n)]
    for c in range(n):
        piv = _select_pivot(m, c, c)
        if piv is None:
            raise SingularMatrixError("singular system")
        m[c], m[piv] = m[piv], m[c]
        inv = 1 / m[c][c]
        m[c] = [v * inv for v in m[c]]
        for r in range(n):
            if r != c and m[r][c] != 0:
                f = m[r][c]
                m[r] = [a - f * b for a, b in zip(m[r], m[c])]
    return tuple(m[i][n] for i in range(n))

"""Certified real-root counting, isolation, and refinement over Q.

All certificates are exact: Sturm chains are sign-faithful primitive
integer polynomial remainder sequences (only positive scalings, so sign
variation counts are those of the classical rational chain), evaluated by
integer-homogenized Horner at rational points. Nothing here trusts the
theorems it is used to test.

gmpy2 integers are used when available; plain Python ints otherwise.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import lcm
from typing import Sequence

from .exactpoly import RationalPoly

try:
    from gmpy2 import mpz
    from gmpy2 import gcd as _int_gcd
except ImportError:  # pragma: no cover - exercised only without gmpy2
    mpz = int

    from math import gcd as _int_gcd

STRICT_INTERLACE = "strict-interlace"
COMMON_ROOT = "common-root"
FAIL = "fail"

_REFINE_DEFAULT = Fraction(1, 2**40)


class EndpointRootError(ValueError):
    """A Sturm count endpoint is a root; perturb it rationally and retry."""


# ---------------------------------------------------------------------------
# integer polynomial layer (coefficient lists, constant term first)
# ---------------------------------------------------------------------------


def _to_int_coeffs(p: RationalPoly) -> list:
    den = lcm(*(c.denominator for c in p.coeffs))
    return [mpz(c.numerator * (den // c.denominator)) for c in p.coeffs]


def _content(c: Sequence) -> int:
    g = mpz(0)
    for x in c:
        if x:
            g = _int_gcd(g, x)
            if g == 1:
                break
    return g if g else mpz(1)


def _primitive(c: list) -> list:
    g = _content(c)
    return [x // g for x in c] if g > 1 else c


def _trim(c: list) -> list:
    while len(c) > 1 and c[-1] == 0:
        c.pop()
    return c


def _sign(x) -> int:
    return (x > 0) - (x < 0)


def _int_prs(a: list, b: list) -> list:
    """Primitive PRS of (a, b) with Sturm signs: each step appends a positive
    rescaling of -(a mod b). Ends at the (primitive) gcd."""
    chain = [_primitive(list(a)), _primitive(list(b))]
    while True:
        f, g = chain[-2], chain[-1]
        if len(g) == 1:
            if g[0] == 0:
                chain.pop()
            break
        da, db = len(f) - 1, len(g) - 1
        if da < db:
            raise AssertionError("PRS degree order violated")
        lead = g[-1]
        mult = lead ** (da - db + 1)
        r = [x * mult for x in f]
        for i in range(da, db - 1, -1):
            if r[i]:
                q = r[i] // lead
                for k in range(db + 1):
                    r[i - db + k] -= q * g[k]
        _trim(r)
        if len(r) == 1 and r[0] == 0:
            break  # g divides f: g is the gcd, chain ends there
        flip = -1 if mult > 0 else 1
        chain.append(_primitive([flip * x for x in r]))
    return chain


def _int_gcd_poly(a: list, b: list) -> list:
    """Primitive gcd of two integer polynomials (positive leading coefficient)."""
    f, g = _primitive(list(a)), _primitive(list(b))
    if len(f) < len(g):
        f, g = g, f
    while not (len(g) == 1 and g[0] == 0):
        da, db = len(f) - 1, len(g) - 1
        lead = g[-1]
        mult = lead ** (da - db + 1)
        r = [x * mult for x in f]
        for i in range(da, db - 1, -1):
            if r[i]:
                q = r[i] // lead
                for k in range(db + 1):
                    r[i - db + k] -= q * g[k]
        f, g = g, _primitive(_trim(r))
    if f[-1] < 0:
        f = [-x for x in f]
    return f


def _int_divide_exact(a: list, d: list) -> list:
    """Exact quotient of integer polynomials (rational division, must clear)."""
    num = RationalPoly([Fraction(int(x)) for x in a])
    den = RationalPoly([Fraction(int(x)) for x in d])
    q = num.exact_divide(den)
    return _primitive(_to_int_coeffs(q))


def _eval_sign(c: Sequence, x: Fraction) -> int:
    """Sign of the integer polynomial at a rational point (homogenized Horner)."""
    p, q = mpz(x.numerator), mpz(x.denominator)
    acc = c[-1]
    qp = mpz(1)
    for i in range(len(c) - 2, -1, -1):
        qp *= q
        acc = acc * p + c[i] * qp
    return _sign(acc)


class SturmChain:
    """Sign-faithful remainder chain of (p, p') on integer coefficients.

    Counts *distinct* real roots of p in half-open intervals; works for
    non-squarefree p too (the trailing gcd scales the whole sign sequence
    at non-root points, leaving variation counts intact).
    """

    def __init__(self, int_coeffs: list):
        p = _primitive([mpz(x) for x in int_coeffs])
        dp = _trim([mpz(i) * p[i] for i in range(1, len(p))]) or [mpz(0)]
        if len(p) == 1:
            self.polys = [p]
        else:
            self.polys = _int_prs(p, dp)
        self.poly = p

    def is_squarefree(self) -> bool:
        return len(self.poly) == 1 or len(self.polys[-1]) == 1

    def variations_at(self, x: Fraction) -> int:
        signs = []
        p, q = mpz(x.numerator), mpz(x.denominator)
        maxd = max(len(c) for c in self.polys) - 1
        qpows = [mpz(1)]
        for _ in range(maxd):
            qpows.append(qpows[-1] * q)
        for c in self.polys:
            d = len(c) - 1
            acc = c[-1]
            for i in range(d - 1, -1, -1):
                acc = acc * p + c[i] * qpows[d - i]
            s = _sign(acc)
            if s:
                signs.append(s)
        return sum(1 for a, b in zip(signs, signs[1:]) if a != b)

    def variations_at_inf(self, positive: bool) -> int:
        signs = []
        for c in self.polys:
            s = _sign(c[-1])
            if not positive and (len(c) - 1) % 2 == 1:
                s = -s
            if s:
                signs.append(s)
        return sum(1 for a, b in zip(signs, signs[1:]) if a != b)

    def total_real_roots(self) -> int:
        """Number of distinct real roots."""
        return self.variations_at_inf(False) - self.variations_at_inf(True)

    def count(self, lo: Fraction, hi: Fraction) -> int:
        """Distinct roots in (lo, hi]; endpoints must not be roots of p."""
        if lo >= hi:
            raise ValueError("need lo < hi")
        if _eval_sign(self.poly, lo) == 0 or _eval_sign(self.poly, hi) == 0:
            raise EndpointRootError("interval endpoint is a root")
        return self.variations_at(lo) - self.variations_at(hi)


def sturm_count(p: RationalPoly, lo: Fraction, hi: Fraction) -> int:
    """Distinct real roots of p in (lo, hi], certified by a Sturm chain."""
    if p.is_zero():
        raise ValueError("zero polynomial")
    return SturmChain(_to_int_coeffs(p)).count(Fraction(lo), Fraction(hi))


def cauchy_bound(p: RationalPoly) -> Fraction:
    """1 + max |c_i| / |lead|: every root lies strictly inside (-B, B)."""
    lead = abs(p.leading())
    return 1 + max((abs(c) for c in p.coeffs[:-1]), default=Fraction(0)) / lead


# ---------------------------------------------------------------------------
# isolation
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class RootIsolation:
    """Disjoint rational intervals, one distinct real root each.

    `certificates[i]` stores the Sturm variation pair (V(lo), V(hi)) whose
    difference of 1 certifies interval i. `_sqfree` holds the squarefree
    integer coefficients used for sign-based refinement.
    """

    poly: RationalPoly
    intervals: tuple[tuple[Fraction, Fraction], ...]
    multiplicities: tuple[int, ...]
    certificates: tuple[tuple[int, int], ...]
    _sqfree: tuple

    def real_root_count(self) -> int:
        return sum(self.multiplicities)


def _squarefree_decomposition(p: list) -> list[tuple[list, int]]:
    """(factor, multiplicity) pairs with factors squarefree and coprime.

    Plain gcd-chain peeling: g = gcd(p, p'); p/g is the squarefree part;
    recursing on g yields each multiplicity layer exactly once.
    """
    layers = []
    cur = list(p)
    while len(cur) > 1:
        dcur = _trim([mpz(i) * cur[i] for i in range(1, len(cur))])
        g = _int_gcd_poly(cur, dcur)
        layers.append(_int_divide_exact(cur, g))  # squarefree part of this layer
        cur = g
    # layer k (1-based) is the product of factors with multiplicity >= k
    out = []
    for k in range(len(layers)):
        if k + 1 < len(layers):
            factor = _int_divide_exact(layers[k], layers[k + 1])
        else:
            factor = layers[k]
        if len(factor) > 1:
            out.append((factor, k + 1))
    return out


def _find_nonroot_split(poly: list, lo: Fraction, hi: Fraction) -> Fraction:
    """A point inside (lo, hi), not a root of poly. Tries the midpoint, then
    nearby dyadic offsets (roots are finite, so this terminates fast)."""
    mid = (lo + hi) / 2
    if _eval_sign(poly, mid) != 0:
        return mid
    width = hi - lo
    k = 3
    while True:
        for cand in (lo + width / k, hi - width / k):
            if _eval_sign(poly, cand) != 0:
                return cand
        k += 2


def _isolate_squarefree(chain: SturmChain) -> list[tuple[Fraction, Fraction, tuple[int, int]]]:
    """Isolating intervals for all real roots of a squarefree chain."""
    poly = chain.poly
    total = chain.total_real_roots()
    if total == 0:
        return []
    bound = cauchy_bound(RationalPoly([Fraction(int(c)) for c in poly]))
    t = Fraction(1)
    while True:
        if t >= bound:
            t = bound  # roots are strictly inside (-B, B), so +-B are safe
        if _eval_sign(poly, -t) != 0 and _eval_sign(poly, t) != 0 \
                and chain.count(-t, t) == total:
            break
        t *= 2
    out = []
    vlo0, vhi0 = chain.variations_at(-t), chain.variations_at(t)
    stack = [(-t, t, vlo0, vhi0)]
    while stack:
        lo, hi, vlo, vhi = stack.pop()
        cnt = vlo - vhi
        if cnt == 0:
            continue
        if cnt == 1:
            out.append((lo, hi, (vlo, vhi)))
            continue
        mid = _find_nonroot_split(poly, lo, hi)
        vmid = chain.variations_at(mid)
        stack.append((lo, mid, vlo, vmid))
        stack.append((mid, hi, vmid, vhi))
    out.sort()
    return out


def isolate_roots(p: RationalPoly) -> RootIsolation:
    """Certified isolation of all distinct real roots, with multiplicities."""
    if p.is_zero():
        raise ValueError("zero polynomial")
    ip = _primitive(_to_int_coeffs(p))
    chain = SturmChain(ip)
    if chain.is_squarefree():
        iso = _isolate_squarefree(chain)
        return RootIsolation(p, tuple((lo, hi) for lo, hi, _ in iso),
                             (1,) * len(iso), tuple(c for _, _, c in iso), tuple(ip))
    # isolate the squarefree part, then read each root's multiplicity off
    # the (coprime) squarefree-decomposition factors
    factors = _squarefree_decomposition(ip)
    dip = _trim([mpz(i) * ip[i] for i in range(1, len(ip))])
    sq_part = _int_divide_exact(ip, _int_gcd_poly(ip, dip))
    sq_chain = SturmChain(sq_part)
    iso = _isolate_squarefree(sq_chain)
    # every factor root is a root of the squarefree part, so the isolating
    # endpoints are automatically safe for the per-factor counts
    factor_chains = [(SturmChain(f), mult) for f, mult in factors]
    mults = []
    for lo, hi, _ in iso:
        owners = [mult for fchain, mult in factor_chains if fchain.count(lo, hi) == 1]
        assert len(owners) == 1, "multiplicity attribution failed"
        mults.append(owners[0])
    return RootIsolation(p, tuple((lo, hi) for lo, hi, _ in iso),
                         tuple(mults), tuple(c for _, _, c in iso), tuple(sq_part))


def refine(iso: RootIsolation, index: int, tol: Fraction) -> tuple[Fraction, Fraction]:
    """Bisect isolating interval `index` below width `tol` (exact signs only)."""
    if tol <= 0:
        raise ValueError("tol must be positive")
    lo, hi = iso.intervals[index]
    poly = list(iso._sqfree)
    slo = _eval_sign(poly, lo)
    shi = _eval_sign(poly, hi)
    assert slo * shi < 0, "isolating interval must bracket a simple root"
    while hi - lo > tol:
        mid = (lo + hi) / 2
        sm = _eval_sign(poly, mid)
        if sm == 0:
            # mid is the root itself: shrink a bracket around it
            w = (hi - lo) / 4
            while w > tol / 4:
                if _eval_sign(poly, mid - w) != 0 and _eval_sign(poly, mid + w) != 0:
                    lo, hi, slo = mid - w, mid + w, _eval_sign(poly, mid - w)
                w /= 2
            if hi - lo <= tol:
                return lo, hi
        elif sm == slo:
            lo = mid
        else:
            hi = mid
    return lo, hi


def roots_float(p: RationalPoly, tol: Fraction = _REFINE_DEFAULT) -> list[float]:
    """All real roots as binary64, repeated per multiplicity, sorted."""
    iso = isolate_roots(p)
    out = []
    for i, mult in enumerate(iso.multiplicities):
        lo, hi = refine(iso, i, tol)
        out.extend([float((lo + hi) / 2)] * mult)
    out.sort()
    return out


def is_squarefree(p: RationalPoly) -> bool:
    """True iff p has no repeated factor (gcd(p, p') is constant)."""
    if p.is_zero():
        raise ValueError("zero polynomial")
    return SturmChain(_to_int_coeffs(p)).is_squarefree()


def distinct_real_roots(p: RationalPoly) -> int:
    """Number of distinct real roots, from variations at -inf and +inf."""
    if p.is_zero():
        raise ValueError("zero polynomial")
    return SturmChain(_to_int_coeffs(p)).total_real_roots()


def is_hyperbolic(p: RationalPoly) -> bool:
    """True iff all roots are real (counted with multiplicity), by Sturm."""
    if p.is_zero():
        raise ValueError("zero polynomial")
    if p.degree == 0:
        return True
    total = 0
    for factor, mult in _squarefree_decomposition(_to_int_coeffs(p)):
        total += mult * SturmChain(factor).total_real_roots()
    return total == p.degree


def poly_gcd(p: RationalPoly, q: RationalPoly) -> RationalPoly:
    """Monic gcd over Q (primitive integer PRS underneath)."""
    if p.is_zero():
        return q if q.is_zero() else q.scale(1 / q.leading())
    if q.is_zero():
        return p.scale(1 / p.leading())
    g = _int_gcd_poly(_to_int_coeffs(p), _to_int_coeffs(q))
    gp = RationalPoly([Fraction(int(x)) for x in g])
    return gp.scale(1 / gp.leading())


# ---------------------------------------------------------------------------
# interlacing
# ---------------------------------------------------------------------------


def interlace_check(p: RationalPoly, q: RationalPoly) -> str:
    """Verdict on strict interlacing of p (degree m) inside q (degree m+1).

    Exact procedure: certify both squarefree and hyperbolic, rule out
    common roots by gcd, isolate q's roots, shrink each q-interval until
    it contains no p-root, then Sturm-count p on every gap between
    consecutive q-intervals. Strict interlacing holds iff every gap count
    is exactly 1 (all deg-p roots are then accounted for).
    """
    if p.degree + 1 != q.degree:
        raise ValueError("need deg q = deg p + 1")
    pchain = SturmChain(_to_int_coeffs(p))
    qchain = SturmChain(_to_int_coeffs(q))
    if not (pchain.is_squarefree() and qchain.is_squarefree()):
        return FAIL
    if pchain.total_real_roots() != p.degree or qchain.total_real_roots() != q.degree:
        return FAIL
    if poly_gcd(p, q).degree > 0:
        return COMMON_ROOT
    if p.degree == 0:
        return STRICT_INTERLACE
    qiso = _isolate_squarefree(qchain)
    intervals = []
    for lo, hi, _ in qiso:
        # shrink until free of p-roots (and with non-root endpoints for p)
        while True:
            if _eval_sign(pchain.poly, lo) != 0 and _eval_sign(pchain.poly, hi) != 0 \
                    and pchain.count(lo, hi) == 0:
                break
            mid = _find_nonroot_split(qchain.poly, lo, hi)
            while _eval_sign(pchain.poly, mid) == 0:
                mid = _find_nonroot_split(qchain.poly, lo, mid)
            if qchain.count(lo, mid) == 1:
                hi = mid
            else:
                lo = mid
        intervals.append((lo, hi))
    for (_, gap_lo), (gap_hi, _) in zip(intervals, intervals[1:]):
        # an empty gap means both shrunk q-intervals touch at a point that is
        # not a root of p: no p-root lies between those two q-roots
        if gap_lo >= gap_hi or pchain.count(gap_lo, gap_hi) != 1:
            return FAIL
    return STRICT_INTERLACE

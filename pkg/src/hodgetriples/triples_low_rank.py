"""Moduli of triples of ranks (2,1) and (1,2): stability intervals,
critical values, and exact Hodge polynomials in the open chambers.

The two Hodge-polynomial formulas are coefficient extractions of the shape
handled by :mod:`hodgetriples.xseries`; the (1,2) case is also related to
the (2,1) case by the dualization swap (n1,n2,d1,d2) -> (n2,n1,-d2,-d1),
which the tests exercise as an independent identity.
"""

from __future__ import annotations

import math
from fractions import Fraction
from typing import List, Optional, Tuple

from .errors import CriticalValueError, DomainError, EmptyModuliError
from .polyring import BiLaurent
from .types import EXACT, HodgeResult, SigmaValue, TripleType
from .xseries import GeomExpr, _xpoly_mul, binomial_pow, coeff_x0


def sigma_interval(t: TripleType) -> Tuple[Fraction, Optional[Fraction]]:
    """Allowed range [sigma_m, sigma_M] of the stability parameter;
    sigma_M is None (unbounded) for n1 = n2."""
    gap = t.slope_gap
    if gap < 0:
        raise EmptyModuliError(
            f"slope gap mu1 - mu2 = {gap} is negative; the moduli are empty")
    if t.n1 == t.n2:
        return gap, None
    factor = 1 + Fraction(t.n1 + t.n2, abs(t.n1 - t.n2))
    return gap, factor * gap


def _check_rank(t: TripleType, n1: int, n2: int):
    if (t.n1, t.n2) != (n1, n2):
        raise DomainError(f"expected rank ({n1},{n2}), got ({t.n1},{t.n2})")


def critical_values_21(t: TripleType) -> List[Fraction]:
    """Critical values 3*d_M - d1 - d2 for integer d_M with
    mu1 <= d_M <= d1 - d2, sorted."""
    _check_rank(t, 2, 1)
    lo = math.ceil(t.mu1)
    hi = t.d1 - t.d2
    return sorted({Fraction(3 * dm - t.d1 - t.d2) for dm in range(lo, hi + 1)})


def critical_values_12(t: TripleType) -> List[Fraction]:
    """Critical values 3*d_M + d1 + d2 for integer d_M with
    -mu2 <= d_M <= d1 - d2, sorted."""
    _check_rank(t, 1, 2)
    lo = math.ceil(-t.mu2)
    hi = t.d1 - t.d2
    return sorted({Fraction(3 * dm + t.d1 + t.d2) for dm in range(lo, hi + 1)})


def _guard_sigma(t: TripleType, sigma: SigmaValue,
                 critical: List[Fraction]) -> None:
    sigma_m, sigma_M = sigma_interval(t)
    if sigma.side == EXACT and (sigma.value == sigma_m
                                or sigma.value in critical):
        raise CriticalValueError(
            f"sigma = {sigma} is a critical value; evaluate in an open chamber")
    if sigma <= sigma_m:
        raise EmptyModuliError(f"sigma = {sigma} is below sigma_m = {sigma_m}")
    if sigma_M is not None and sigma > sigma_M:
        raise EmptyModuliError(f"sigma = {sigma} is above sigma_M = {sigma_M}")


def _two_term_extraction(g: int, k: int, exp2: int) -> BiLaurent:
    """coeff_{x^0} of

        (1+u)^{2g} (1+v)^{2g} (1+ux)^g (1+vx)^g
        / ((1-uv)(1-x)(1-uvx) x^k)
        * ( (uv)^k / (1-(uv)^{-1}x)  -  (uv)^{exp2} / (1-(uv)^2 x) )

    assembled from two geometric expressions and one exact division."""
    jac2 = ((1 + BiLaurent.u()) ** (2 * g)) * ((1 + BiLaurent.v()) ** (2 * g))
    base = _xpoly_mul(binomial_pow(BiLaurent.u(), g),
                      binomial_pow(BiLaurent.v(), g))
    one = BiLaurent.const(1)
    uv = BiLaurent.uv()
    common = ((one, 1), (uv, 1))
    e1 = GeomExpr(base, common + ((BiLaurent.uv(-1), 1),), k)
    e2 = GeomExpr(base, common + ((BiLaurent.uv(2), 1),), k)
    raw = (coeff_x0(e1.with_numerator_factor(jac2 * BiLaurent.uv(k)))
           - coeff_x0(e2.with_numerator_factor(jac2 * BiLaurent.uv(exp2))))
    return raw.exact_div(one - uv)


def hodge_21(t: TripleType, sigma: SigmaValue) -> HodgeResult:
    """Hodge polynomial of the rank-(2,1) moduli space at a non-critical
    sigma in the open interval (sigma_m, sigma_M)."""
    _check_rank(t, 2, 1)
    _guard_sigma(t, sigma, critical_values_21(t))
    d0 = sigma.shift(t.d1 + t.d2).scale(Fraction(1, 3)).floor() + 1
    k = t.d1 - t.d2 - d0
    poly = _two_term_extraction(t.g, k, -t.d1 + t.g - 1 + 2 * d0)
    return HodgeResult(poly, 3 * t.g - 2 + t.d1 - 2 * t.d2,
                       smooth=True, projective=True)


def hodge_12(t: TripleType, sigma: SigmaValue) -> HodgeResult:
    """Hodge polynomial of the rank-(1,2) moduli space at a non-critical
    sigma; same extraction shape with the dual degree bookkeeping."""
    _check_rank(t, 1, 2)
    _guard_sigma(t, sigma, critical_values_12(t))
    d0 = sigma.shift(-(t.d1 + t.d2)).scale(Fraction(1, 3)).floor() + 1
    k = t.d1 - t.d2 - d0
    poly = _two_term_extraction(t.g, k, t.d2 + t.g - 1 + 2 * d0)
    return HodgeResult(poly, 3 * t.g - 2 + 2 * t.d1 - t.d2,
                       smooth=True, projective=True)


def chi_triples(t_sub: TripleType, t_quot: TripleType) -> int:
    """Euler characteristic chi(T'', T') of the extension complex between
    a quotient triple T'' and a subtriple T'; the projectivized extension
    bundles in the wall crossings have rank -chi."""
    g = t_sub.g
    if t_quot.g != g:
        raise DomainError("both triples must live on the same curve")
    n1s, n2s, d1s, d2s = t_sub.n1, t_sub.n2, t_sub.d1, t_sub.d2
    n1q, n2q, d1q, d2q = t_quot.n1, t_quot.n2, t_quot.d1, t_quot.d2
    return ((1 - g) * (n1q * n1s + n2q * n2s - n2q * n1s)
            + n1q * d1s - n1s * d1q
            + n2q * d2s - n2s * d2q
            - n2q * d1s + n1s * d2q)

"""Coefficient extraction for rational expressions in an auxiliary variable x.

The closed forms for moduli of triples are all of the shape

    coeff_{x^0} [ P(x) * x^{-k} / prod_i (1 - a_i x)^{m_i} ]

where P is a finite polynomial in x with BiLaurent coefficients and every
rate a_i is a single Laurent monomial in u, v.  Extracting the coefficient
of x^0 amounts to reading off the x^k coefficient of the series expansion
of P(x) / prod (1 - a_i x)^{m_i} around x = 0, and the needed truncation
degree is just k: everything is exact.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from math import comb
from typing import Dict, List, Sequence, Tuple

from .errors import DomainError, InexactDivisionError
from .polyring import BiLaurent

XPoly = Dict[int, BiLaurent]  # x-degree -> BiLaurent coefficient


def _xpoly_mul(a: XPoly, b: XPoly, truncate: int | None = None) -> XPoly:
    out: Dict[int, BiLaurent] = {}
    for na, ca in a.items():
        for nb, cb in b.items():
            n = na + nb
            if truncate is not None and n > truncate:
                continue
            prod = ca * cb
            if n in out:
                out[n] = out[n] + prod
            else:
                out[n] = prod
    return {n: c for n, c in out.items() if not c.is_zero()}


def binomial_pow(rate: BiLaurent, g: int) -> XPoly:
    """Expansion of (1 + rate*x)^g as an x-polynomial, for g >= 0."""
    if g < 0:
        raise DomainError("binomial power requires a nonnegative exponent")
    return {n: BiLaurent.const(comb(g, n)) * rate ** n for n in range(g + 1)}


@dataclass(frozen=True)
class GeomExpr:
    """A rational expression numerator * x^{-x_offset} / prod (1-rate*x)^mult.

    Every pole rate must be a single-term Laurent monomial in u, v; general
    rates are rejected at construction.
    """

    numerator: XPoly
    poles: Sequence[Tuple[BiLaurent, int]] = field(default_factory=tuple)
    x_offset: int = 0

    def __post_init__(self):
        for rate, mult in self.poles:
            if not rate.is_monomial():
                raise DomainError("pole rates must be single-term monomials")
            if mult < 1:
                raise DomainError("pole multiplicity must be positive")

    def with_numerator_factor(self, factor: BiLaurent) -> "GeomExpr":
        num = {n: c * factor for n, c in self.numerator.items()}
        return GeomExpr(num, self.poles, self.x_offset)


def coeff_x0(expr: GeomExpr) -> BiLaurent:
    """Exact coefficient of x^0 of the Laurent expansion around x = 0."""
    k = expr.x_offset
    if k < 0:
        # overall positive power of x beyond the numerator's reach
        return BiLaurent.zero()
    series: XPoly = dict(expr.numerator)
    for rate, mult in expr.poles:
        pole_series = {
            n: BiLaurent.const(comb(n + mult - 1, mult - 1)) * rate ** n
            for n in range(k + 1)
        }
        series = _xpoly_mul(series, pole_series, truncate=k)
    return series.get(k, BiLaurent.zero())


def three_pole_closed_form(a: BiLaurent, b: BiLaurent, c: BiLaurent,
                           g: int) -> BiLaurent:
    """Closed form for coeff_{x^0} of (1+ux)^g (1+vx)^g x^{2-2g}
    / ((1-ax)(1-bx)(1-cx)) with pairwise distinct monomial rates:

        (a+u)^g (a+v)^g / ((a-b)(a-c))  +  (cyclic in b, c).

    Assembled over the common denominator (a-b)(a-c)(b-c) and divided
    exactly; coinciding rates raise InexactDivisionError.
    """
    for rate in (a, b, c):
        if not rate.is_monomial():
            raise DomainError("rates must be single-term monomials")
    if a == b or a == c or b == c:
        raise InexactDivisionError("pole collision: rates must be pairwise distinct")
    u = BiLaurent.u()
    v = BiLaurent.v()

    def num_piece(r: BiLaurent) -> BiLaurent:
        return (r + u) ** g * (r + v) ** g

    common = (a - b) * (a - c) * (b - c)
    total = (num_piece(a) * (b - c)
             - num_piece(b) * (a - c)
             + num_piece(c) * (a - b))
    return total.exact_div(common)


def geom_expr_for_three_poles(a: BiLaurent, b: BiLaurent, c: BiLaurent,
                              g: int) -> GeomExpr:
    """The extraction-route counterpart of :func:`three_pole_closed_form`."""
    num = _xpoly_mul(binomial_pow(BiLaurent.u(), g), binomial_pow(BiLaurent.v(), g))
    return GeomExpr(num, ((a, 1), (b, 1), (c, 1)), 2 * g - 2)

"""Moduli of rank-(2,2) triples: wall structure, the small- and large-sigma
Hodge polynomials, flip contributions, and cumulative wall crossing.

For d1 + d2 odd the stability interval [mu1 - mu2, oo) carries finitely many
walls sigma_c = mu1 - mu2 + n, 1 <= n <= [mu1 - mu2]; each wall is crossed by
a pair of projectivized extension-bundle flips whose Hodge-polynomial
difference is computed here three ways (one unified extraction and two
per-kind routes through the lower-rank moduli).  The module keeps every
internal identity as a runtime assertion: strata sums, flip telescoping, and
Poincare specializations all raise ConsistencyError on disagreement instead
of returning silently wrong values.
"""

from __future__ import annotations

from fractions import Fraction
from typing import List, Optional, Tuple

from .errors import (ConsistencyError, CriticalValueError, DomainError,
                     EmptyModuliError, PreconditionError, UnsupportedCaseError)
from .polyring import BiLaurent
from .rank2_bundles import m2_even_stable, m2_odd
from .triples_low_rank import chi_triples, hodge_12, hodge_21
from .types import (BOTH_KINDS, DF_WALL, DL_WALL, EXACT, FlipWall,
                    HodgeResult, SigmaValue, TripleType)
from .varieties import grassmannian, jacobian, projective_space, sym2_quotient
from .xseries import GeomExpr, XPoly, _xpoly_mul, binomial_pow, coeff_x0

_ONE = BiLaurent.const(1)


def _require_22(t: TripleType) -> None:
    if (t.n1, t.n2) != (2, 2):
        raise DomainError(f"expected rank (2,2), got ({t.n1},{t.n2})")
    if t.d1 < t.d2:
        raise EmptyModuliError(
            f"d1 = {t.d1} < d2 = {t.d2}: the stability interval is empty")


def _require_odd_sum(t: TripleType) -> None:
    if (t.d1 + t.d2) % 2 == 0:
        raise UnsupportedCaseError(
            "d1 + d2 even: strictly semistable triples occur at non-critical "
            "sigma and no flip formulas are available")


def _require_gap(t: TripleType, bound: Fraction | int, label: str) -> None:
    if not t.slope_gap > bound:
        raise PreconditionError(
            f"requires mu1 - mu2 > {label}, got {t.slope_gap}")


def _jac_pow(g: int, k: int) -> BiLaurent:
    """(1+u)^{kg} (1+v)^{kg}."""
    return ((_ONE + BiLaurent.u()) ** (k * g)) * ((_ONE + BiLaurent.v()) ** (k * g))


def _twisted(g: int) -> BiLaurent:
    """(1 + u^2 v)^g (1 + u v^2)^g."""
    return ((_ONE + BiLaurent.monomial(1, 2, 1)) ** g
            * (_ONE + BiLaurent.monomial(1, 1, 2)) ** g)


def _minus_squares(g: int) -> BiLaurent:
    """(1 - u^2)^g (1 - v^2)^g."""
    return ((_ONE - BiLaurent.monomial(1, 2, 0)) ** g
            * (_ONE - BiLaurent.monomial(1, 0, 2)) ** g)


def _dim22(t: TripleType) -> int:
    return 4 * t.g + 2 * t.d1 - 2 * t.d2 - 3


def _int_or_none(q: Fraction) -> Optional[int]:
    return int(q) if q.denominator == 1 else None


def critical_values_22(t: TripleType) -> List[FlipWall]:
    """Walls sigma_c = mu1 - mu2 + n above sigma_m.

    For d1 + d2 odd each index n carries exactly one destabilizing shape:
    a line subbundle of E1 of degree d_L = mu1 + n/2 when that is an
    integer, or a line subbundle of E2 of degree d_F = mu2 - n/2 when that
    is.  For d1 + d2 even both shapes occur at once and the walls live on
    the coarser grid mu1 + mu2 + 2Z; they are returned with the 'both'
    marker and no flip formulas apply.
    """
    _require_22(t)
    gap = t.slope_gap
    walls: List[FlipWall] = []
    if (t.d1 + t.d2) % 2:
        n_max = (t.d1 - t.d2 - 1) // 2  # = [mu1 - mu2], gap a half-integer
        for n in range(1, n_max + 1):
            d_l = _int_or_none(t.mu1 + Fraction(n, 2))
            d_f = _int_or_none(t.mu2 - Fraction(n, 2))
            if (d_l is None) == (d_f is None):
                raise ConsistencyError(
                    f"wall n={n}: expected exactly one destabilizing degree")
            kind = DL_WALL if d_l is not None else DF_WALL
            level = d_l if d_l is not None else d_f
            walls.append(FlipWall(n, gap + n, kind, level))
    else:
        # n = sigma_c - sigma_m ranges over d2 + 2Z within (0, gap]
        start = 2 if t.d2 % 2 == 0 else 1
        n = start
        while n <= gap:
            walls.append(FlipWall(n, gap + n, BOTH_KINDS, None))
            n += 2
    return walls


def small_sigma_22(t: TripleType) -> HodgeResult:
    """Hodge polynomial of the first-chamber moduli (sigma just above
    sigma_m), requiring mu1 - mu2 > 2g - 2.

    With both degrees odd the space is a projective bundle over a product
    of rank-2 bundle moduli; with mixed parity it is the closed form with
    N = d1 - d2 - 2g + 2.  Both even degrees are rejected.
    """
    _require_22(t)
    _require_gap(t, 2 * t.g - 2, "2g-2")
    g = t.g
    if t.d1 % 2 and t.d2 % 2:
        m2 = m2_odd(g).poly
        poly = m2 * m2 * projective_space(2 * t.d1 - 2 * t.d2 - 4 * g + 4)
        return HodgeResult(poly, _dim22(t), smooth=True, projective=True)
    if t.d1 % 2 == 0 and t.d2 % 2 == 0:
        raise UnsupportedCaseError(
            "d1 and d2 both even: semistable loci occur on both sides and "
            "no closed formula is implemented")
    # mixed parity: the formula depends only on N = d1 - d2 - 2g + 2 and is
    # shared by both orderings via the swap (d1,d2) -> (-d2,-d1)
    n_cap = t.d1 - t.d2 - 2 * g + 2
    jac_g = _jac_pow(g, 1)
    tw = _twisted(g)
    num = (_jac_pow(g, 2) * (_ONE - BiLaurent.uv(n_cap))
           * (BiLaurent.uv(g) * jac_g - tw)
           * (jac_g * (BiLaurent.uv(g + 1) + BiLaurent.uv(n_cap + g - 1))
              - tw * (_ONE + BiLaurent.uv(n_cap))))
    den = ((_ONE - BiLaurent.uv()) ** 3) * ((_ONE - BiLaurent.uv(2)) ** 2)
    return HodgeResult(num.exact_div(den), _dim22(t),
                       smooth=True, projective=True)


def small_sigma_strata_oracle(t: TripleType) -> BiLaurent:
    """Independent five-stratum computation of the first-chamber value for
    d1 odd, d2 even, stratified by the semistability shape of E2:

        X_0: E2 stable;
        X_1: E2 a non-split extension of distinct degree-d2/2 line bundles;
        X_2: E2 a non-split self-extension;
        X_3: E2 split with distinct factors (a Z_2 quotient);
        X_4: E2 split with equal factors (a Grassmannian fiber).

    Raises ConsistencyError if the sum differs from the closed form.
    """
    _require_22(t)
    if not (t.d1 % 2 == 1 and t.d2 % 2 == 0):
        raise DomainError("strata oracle requires d1 odd and d2 even")
    _require_gap(t, 2 * t.g - 2, "2g-2")
    g = t.g
    n_cap = t.d1 - t.d2 - 2 * g + 2
    m2d1 = m2_odd(g).poly
    jac = jacobian(g)
    e_n = projective_space(n_cap)
    x0 = m2_even_stable(g).poly * projective_space(2 * n_cap)
    x1 = (jac * (jac - 1) * projective_space(g - 1)
          * (projective_space(2 * n_cap) - e_n))
    x2 = (jac * projective_space(g)
          * (e_n - projective_space(n_cap - 1)) * e_n)
    x3 = sym2_quotient(jac * e_n) - jac * sym2_quotient(e_n)
    x4 = jac * grassmannian(2, n_cap)
    total = m2d1 * (x0 + x1 + x2 + x3 + x4)
    expected = small_sigma_22(t).poly
    if total != expected:
        raise ConsistencyError(
            "five-stratum sum disagrees with the closed form: residual "
            f"{(total - expected).to_text()}")
    return total


def _wall_for(t: TripleType, n: int) -> FlipWall:
    walls = critical_values_22(t)
    for w in walls:
        if w.n == n:
            return w
    raise DomainError(
        f"wall index {n} outside the range 1..{len(walls)} for this type")


def _flip_unified(t: TripleType, n: int) -> BiLaurent:
    """coeff_{x^0} of

        (1+u)^{3g}(1+v)^{3g}(1+ux)^g(1+vx)^g
          ((uv)^{g-1+n} - (uv)^{1-g+d1-d2})
        / ((1-uv)^2 (1-x)(1-uvx) x^{[mu1-mu2]-n})
        * ( (uv)^{(d1-d2-1)/2-n}/(1-(uv)^{-1}x)
            - (uv)^{g+n}/(1-(uv)^2 x) )
    """
    g = t.g
    diff = t.d1 - t.d2
    prefactor = (_jac_pow(g, 3)
                 * (BiLaurent.uv(g - 1 + n) - BiLaurent.uv(1 - g + diff)))
    base = _xpoly_mul(binomial_pow(BiLaurent.u(), g),
                      binomial_pow(BiLaurent.v(), g))
    offset = (diff - 1) // 2 - n
    common = ((_ONE, 1), (BiLaurent.uv(), 1))
    e1 = GeomExpr(base, common + ((BiLaurent.uv(-1), 1),), offset)
    e2 = GeomExpr(base, common + ((BiLaurent.uv(2), 1),), offset)
    raw = (coeff_x0(e1.with_numerator_factor(
               prefactor * BiLaurent.uv((diff - 1) // 2 - n)))
           - coeff_x0(e2.with_numerator_factor(
               prefactor * BiLaurent.uv(g + n))))
    return raw.exact_div((_ONE - BiLaurent.uv()) ** 2)


def _flip_per_kind(t: TripleType, wall: FlipWall) -> BiLaurent:
    """The flip difference computed through the lower-rank moduli: both
    sides of the wall are projectivized extension bundles over a Jacobian
    times a rank-(1,2) or rank-(2,1) moduli space, of ranks -chi."""
    g = t.g
    sigma = SigmaValue(wall.sigma_c, EXACT)
    if wall.kind == DL_WALL:
        d_l = wall.level
        sub = TripleType(g, 1, 2, t.d1 - d_l, t.d2)
        line = TripleType(g, 1, 0, d_l, 0)
        rank_up = -chi_triples(line, sub)
        rank_down = -chi_triples(sub, line)
        inner = hodge_12(sub, sigma).poly
    elif wall.kind == DF_WALL:
        d_f = wall.level
        sub = TripleType(g, 2, 1, t.d1, t.d2 - d_f)
        line = TripleType(g, 0, 1, 0, d_f)
        rank_up = -chi_triples(sub, line)
        rank_down = -chi_triples(line, sub)
        inner = hodge_21(sub, sigma).poly
    else:
        raise UnsupportedCaseError(
            "wall carries both destabilizing kinds (d1 + d2 even); "
            "no flip formula is implemented")
    return ((projective_space(rank_up) - projective_space(rank_down))
            * jacobian(g) * inner)


def flip_difference(t: TripleType, wall: FlipWall) -> BiLaurent:
    """e(N at sigma_c + eps) - e(N at sigma_c - eps) across one wall.

    Evaluated by the unified extraction and independently by the per-kind
    extension-bundle route; a disagreement raises ConsistencyError.
    """
    _require_22(t)
    _require_odd_sum(t)
    _require_gap(t, t.g - 1, "g-1")
    n_max = (t.d1 - t.d2 - 1) // 2
    if not 1 <= wall.n <= n_max:
        raise DomainError(
            f"wall index {wall.n} outside 1..{n_max}; such critical values "
            "do not change the moduli and are not enumerated")
    unified = _flip_unified(t, wall.n)
    per_kind = _flip_per_kind(t, wall)
    if unified != per_kind:
        raise ConsistencyError(
            f"flip routes disagree at wall n={wall.n}: residual "
            f"{(unified - per_kind).to_text()}")
    return unified


def _cumulative_extraction(t: TripleType, n0: int) -> BiLaurent:
    """Closed form for the sum of the first n0 flip differences: four
    geometric terms under a common prefactor, then division by (1-uv)^2."""
    g = t.g
    diff = t.d1 - t.d2
    floor_gap = (diff - 1) // 2
    uv = BiLaurent.uv()
    base = _xpoly_mul(binomial_pow(BiLaurent.u(), g),
                      binomial_pow(BiLaurent.v(), g))
    common: Tuple[Tuple[BiLaurent, int], ...] = ((_ONE, 1), (uv, 1))
    prefactor = _jac_pow(g, 3)

    def term(extra_poles, lead: BiLaurent, tail: BiLaurent) -> BiLaurent:
        # numerator factor  lead * x * (1 - tail * x^{n0})
        num: XPoly = {1: lead, n0 + 1: -(lead * tail)}
        num = _xpoly_mul(num, base)
        expr = GeomExpr(num, common + tuple(extra_poles), floor_gap)
        return coeff_x0(expr.with_numerator_factor(prefactor))

    t1 = term([(_ONE, 1), (BiLaurent.uv(-1), 1)],
              BiLaurent.uv(g - 1 + (diff - 1) // 2), _ONE)
    t2 = term([(BiLaurent.uv(-1), 2)],
              BiLaurent.uv((3 * diff - 1) // 2 - g), BiLaurent.uv(-n0))
    t3 = term([(BiLaurent.uv(2), 2)],
              BiLaurent.uv(2 * g + 1), BiLaurent.uv(2 * n0))
    t4 = term([(BiLaurent.uv(2), 1), (uv, 1)],
              BiLaurent.uv(diff + 2), BiLaurent.uv(n0))
    return (t1 - t2 - t3 + t4).exact_div((_ONE - uv) ** 2)


def cumulative_22(t: TripleType, sigma: SigmaValue) -> HodgeResult:
    """Hodge polynomial of the rank-(2,2) moduli at any non-critical
    sigma > sigma_m, as the first-chamber value plus the crossed flips.

    Two routes are evaluated and compared: the wall-by-wall sum of
    flip_difference, and the closed cumulative extraction.
    """
    _require_22(t)
    _require_odd_sum(t)
    _require_gap(t, 2 * t.g - 2, "2g-2")
    gap = t.slope_gap
    if sigma.side == EXACT and (sigma.value - gap).denominator == 1:
        if sigma.value == gap:
            raise CriticalValueError(f"sigma = {sigma} equals sigma_m")
        if gap < sigma.value <= 2 * gap:
            raise CriticalValueError(f"sigma = {sigma} is a critical value")
    if sigma <= gap:
        raise EmptyModuliError(f"sigma = {sigma} is below sigma_m = {gap}")
    n0 = min(sigma.shift(-gap).floor(), (t.d1 - t.d2 - 1) // 2)
    small = small_sigma_22(t)
    walls = critical_values_22(t)
    summed = small.poly
    for wall in walls[:n0]:
        summed = summed + flip_difference(t, wall)
    closed = small.poly + _cumulative_extraction(t, n0) if n0 else small.poly
    if summed != closed:
        raise ConsistencyError(
            f"cumulative routes disagree at n0={n0}: residual "
            f"{(summed - closed).to_text()}")
    return HodgeResult(summed, _dim22(t), smooth=True, projective=True)


def large_sigma_22(t: TripleType) -> HodgeResult:
    """Hodge polynomial of the stabilized moduli (sigma beyond the last
    wall), requiring d1 + d2 odd and mu1 - mu2 > 2g - 2:

        (1+u)^{2g}(1+v)^{2g} / ((1-uv)^3 (1-(uv)^2)^2) * [ four terms ]

    with N = d1 - d2 - 2g + 2 (odd, so (N+1)/2 is an integer)."""
    _require_22(t)
    _require_odd_sum(t)
    _require_gap(t, 2 * t.g - 2, "2g-2")
    g = t.g
    n_cap = t.d1 - t.d2 - 2 * g + 2
    if n_cap % 2 == 0:
        raise ConsistencyError("N must be odd when d1 + d2 is odd")
    half = (n_cap + 1) // 2
    uv = BiLaurent.uv()
    jac_g = _jac_pow(g, 1)
    tw = _twisted(g)
    one_m_uv2 = _ONE - BiLaurent.uv(2)
    shift = BiLaurent.uv(2 * g - 2 + half)
    bracket = (tw * tw * (_ONE - BiLaurent.uv(2 * n_cap))
               - n_cap * tw * jac_g * BiLaurent.uv(n_cap + g - 1) * one_m_uv2
               + _jac_pow(g, 2) * (_ONE + uv) ** 2 * shift
               * ((_ONE - BiLaurent.uv(n_cap + 1))
                  - half * (_ONE - uv) * (_ONE + BiLaurent.uv(n_cap)))
               - g * ((_ONE + BiLaurent.u()) ** (2 * g - 1))
               * ((_ONE + BiLaurent.v()) ** (2 * g - 1))
               * one_m_uv2 ** 2 * shift * (_ONE - BiLaurent.uv(n_cap)))
    num = _jac_pow(g, 2) * bracket
    den = ((_ONE - uv) ** 3) * (one_m_uv2 ** 2)
    return HodgeResult(num.exact_div(den), _dim22(t),
                       smooth=True, projective=True)


def residue_F(a: BiLaurent, b: BiLaurent, c: BiLaurent,
              m: int, g: int) -> BiLaurent:
    """Closed form of

        F(a,b,c) = coeff_{x^0} [ (1+ux)^g (1+vx)^g x^{3-2g-m}
                                 / ((1-ax)^2 (1-bx)(1-cx)) ]

    as minus the sum of the residues at the three finite nonzero poles
    (the double pole at 1/a contributing a derivative term).  Rates must
    be distinct nonzero monomials; m >= 0.
    """
    for rate in (a, b, c):
        if not rate.is_monomial():
            raise DomainError("rates must be single-term monomials")
    if a == b or a == c or b == c or m < 0:
        raise DomainError("rates must be pairwise distinct and m >= 0")
    u, v = BiLaurent.u(), BiLaurent.v()

    def pg(r: BiLaurent) -> BiLaurent:
        return (r + u) ** g * (r + v) ** g

    am1 = a ** (m - 1)
    ab, bc, ca = a - b, b - c, c - a
    deriv = (g * a * (2 * a + u + v)
             + (m - 2) * (a + u) * (a + v))
    total = (am1 * b * pg(a) * (bc * ca)
             + am1 * c * pg(a) * (-(ab * bc))
             + (b ** m) * pg(b) * (ca * ca)
             + (c ** m) * pg(c) * (-(ab * ab))
             + am1 * ((a + u) ** (g - 1)) * ((a + v) ** (g - 1)) * deriv
             * (-(ab * bc * ca)))
    return total.exact_div(ab * ab * bc * ca * ca)


def residue_F_extraction(a: BiLaurent, b: BiLaurent, c: BiLaurent,
                         m: int, g: int) -> BiLaurent:
    """The same F(a,b,c) by direct series extraction."""
    num = _xpoly_mul(binomial_pow(BiLaurent.u(), g),
                     binomial_pow(BiLaurent.v(), g))
    return coeff_x0(GeomExpr(num, ((a, 2), (b, 1), (c, 1)), 2 * g + m - 3))


def _tpow(n: int) -> BiLaurent:
    return BiLaurent.monomial(1, n, 0)


def poincare_small_closed(t: TripleType) -> BiLaurent:
    """Poincare polynomial of the first-chamber moduli (mixed parity) as a
    closed form in t, checked against the u=v=t specialization."""
    _require_22(t)
    _require_odd_sum(t)
    _require_gap(t, 2 * t.g - 2, "2g-2")
    g = t.g
    n_cap = t.d1 - t.d2 - 2 * g + 2
    one_t = _ONE + _tpow(1)
    one_t3 = _ONE + _tpow(3)
    num = (one_t ** (4 * g) * (_ONE - _tpow(2 * n_cap))
           * (_tpow(2 * g) * one_t ** (2 * g) - one_t3 ** (2 * g))
           * (one_t ** (2 * g) * (_tpow(2 * g + 2) + _tpow(2 * n_cap + 2 * g - 2))
              - one_t3 ** (2 * g) * (_ONE + _tpow(2 * n_cap))))
    den = ((_ONE - _tpow(2)) ** 3) * ((_ONE - _tpow(4)) ** 2)
    closed = num.exact_div(den)
    specialized = small_sigma_22(t).poincare()
    if closed != specialized:
        raise ConsistencyError(
            "small-chamber Poincare closed form disagrees with the "
            f"specialization: residual {(closed - specialized).to_text()}")
    return closed


def poincare_large_closed(t: TripleType) -> BiLaurent:
    """Poincare polynomial of the stabilized moduli as a closed form in t,
    checked against the u=v=t specialization."""
    _require_22(t)
    _require_odd_sum(t)
    _require_gap(t, 2 * t.g - 2, "2g-2")
    g = t.g
    n_cap = t.d1 - t.d2 - 2 * g + 2
    half = (n_cap + 1) // 2
    one_t = _ONE + _tpow(1)
    one_t3 = _ONE + _tpow(3)
    one_mt4 = _ONE - _tpow(4)
    bracket = (one_t3 ** (4 * g) * (_ONE - _tpow(4 * n_cap))
               - n_cap * one_t3 ** (2 * g) * one_t ** (2 * g)
               * _tpow(2 * n_cap + 2 * g - 2) * one_mt4
               + one_t ** (4 * g) * (_ONE + _tpow(2)) ** 2
               * _tpow(n_cap + 4 * g - 3)
               * ((_ONE - _tpow(2 * n_cap + 2))
                  - half * (_ONE - _tpow(2)) * (_ONE + _tpow(2 * n_cap)))
               - g * one_t ** (4 * g - 2) * one_mt4 ** 2
               * _tpow(n_cap + 4 * g - 3) * (_ONE - _tpow(2 * n_cap)))
    num = one_t ** (4 * g) * bracket
    den = ((_ONE - _tpow(2)) ** 3) * (one_mt4 ** 2)
    closed = num.exact_div(den)
    specialized = large_sigma_22(t).poincare()
    if closed != specialized:
        raise ConsistencyError(
            "large-chamber Poincare closed form disagrees with the "
            f"specialization: residual {(closed - specialized).to_text()}")
    return closed

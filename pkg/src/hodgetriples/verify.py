"""Consistency battery: every internal identity of the library packaged as
a runnable suite of checks with exact polynomial residuals.

Checks never abort the run; each failure carries the exact difference (or
the raising error's message) so that a regression is immediately
localizable.  The suite is deterministic for fixed parameters.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable, Dict, List, Optional, Sequence, Tuple

from .errors import HodgeError
from .polyring import BiLaurent
from .rank2_bundles import (m2_even_polystable, m2_even_stable,
                            m2_even_strata_oracle, m2_odd)
from .triples_low_rank import critical_values_21, hodge_12, hodge_21
from .triples22 import (critical_values_22, cumulative_22, flip_difference,
                        large_sigma_22, poincare_large_closed,
                        poincare_small_closed, residue_F,
                        residue_F_extraction, small_sigma_22,
                        small_sigma_strata_oracle)
from .types import MINUS_EPS, PLUS_EPS, HodgeResult, SigmaValue, TripleType
from .xseries import coeff_x0, geom_expr_for_three_poles, three_pole_closed_form


@dataclass(frozen=True)
class CheckReport:
    check_id: str
    instance: Tuple
    status: str  # "pass" or "fail"
    witness: Optional[BiLaurent] = None
    detail: str = ""

    def to_json_obj(self) -> dict:
        obj = {"check": self.check_id,
               "instance": [str(x) for x in self.instance],
               "status": self.status}
        if self.witness is not None and not self.witness.is_zero():
            obj["residual"] = self.witness.to_json_obj()
        if self.detail:
            obj["detail"] = self.detail
        return obj


def _compare(check_id: str, instance: Tuple,
             lhs: BiLaurent, rhs: BiLaurent) -> CheckReport:
    diff = lhs - rhs
    if diff.is_zero():
        return CheckReport(check_id, instance, "pass")
    return CheckReport(check_id, instance, "fail", witness=diff)


def _guarded(check_id: str, instance: Tuple,
             fn: Callable[[], CheckReport]) -> CheckReport:
    try:
        return fn()
    except HodgeError as exc:
        return CheckReport(check_id, instance, "fail",
                           detail=f"{type(exc).__name__}: {exc}")


def instances_22(g: int, span: int = 4) -> List[Tuple[int, int]]:
    """(d1, d2) pairs with d1 + d2 odd and mu1 - mu2 > 2g - 2, smallest
    first, alternating the parity of d2."""
    out: List[Tuple[int, int]] = []
    d1 = 4 * g - 3  # smallest odd-sum d1 with d2 = 0 satisfying the gap
    while len(out) < span:
        for d2 in (0, 1):
            if (d1 + d2) % 2 and Fraction(d1 - d2, 2) > 2 * g - 2:
                out.append((d1, d2))
                if len(out) == span:
                    break
        d1 += 1
    return out


def instances_oracle(g: int, span: int = 4) -> List[Tuple[int, int]]:
    """(d1 odd, d2 even) pairs with mu1 - mu2 > 2g - 2 for the five-stratum
    oracle."""
    out: List[Tuple[int, int]] = []
    d1 = 4 * g - 3
    while len(out) < span:
        if d1 % 2:
            for d2 in (0, 2):
                if Fraction(d1 - d2, 2) > 2 * g - 2:
                    out.append((d1, d2))
                    if len(out) == span:
                        break
        d1 += 2 if d1 % 2 else 1
    return out


# --- individual checks ------------------------------------------------


def _check_kirwan(g_range, span) -> List[CheckReport]:
    one = BiLaurent.const(1)
    u, v = BiLaurent.u(), BiLaurent.v()
    expected = ((one + u) ** 2 * (one + v) ** 2
                * (one + BiLaurent.uv() + BiLaurent.uv(2) + BiLaurent.uv(3)))
    return [_compare("kirwan-g2", (2,), m2_even_polystable(2).poly, expected)]


def _check_strata_a(g_range, span) -> List[CheckReport]:
    reports = []
    for g in g_range:
        reports.append(_guarded(
            "strata-vs-theoremA", (g,),
            lambda g=g: _compare("strata-vs-theoremA", (g,),
                                 m2_even_strata_oracle(g),
                                 m2_even_stable(g).poly)))
    return reports


def _check_strata_b(g_range, span) -> List[CheckReport]:
    reports = []
    for g in g_range:
        for d1, d2 in instances_oracle(g, span):
            t = TripleType(g, 2, 2, d1, d2)
            reports.append(_guarded(
                "strata-vs-theoremB", (g, d1, d2),
                lambda t=t, g=g, d1=d1, d2=d2: _compare(
                    "strata-vs-theoremB", (g, d1, d2),
                    small_sigma_strata_oracle(t), small_sigma_22(t).poly)))
    return reports


def _check_telescoping(g_range, span) -> List[CheckReport]:
    reports = []
    for g in g_range:
        for d1, d2 in instances_22(g, span):
            t = TripleType(g, 2, 2, d1, d2)

            def run(t=t, g=g, d1=d1, d2=d2):
                total = small_sigma_22(t).poly
                for wall in critical_values_22(t):
                    total = total + flip_difference(t, wall)
                return _compare("telescoping", (g, d1, d2),
                                total, large_sigma_22(t).poly)

            reports.append(_guarded("telescoping", (g, d1, d2), run))
    return reports


def _check_poincare(g_range, span) -> List[CheckReport]:
    reports = []
    for g in g_range:
        for d1, d2 in instances_22(g, span):
            t = TripleType(g, 2, 2, d1, d2)
            for which, closed, result in (
                    ("small", poincare_small_closed, small_sigma_22),
                    ("large", poincare_large_closed, large_sigma_22)):
                reports.append(_guarded(
                    "poincare-specialization", (g, d1, d2, which),
                    lambda t=t, closed=closed, result=result, key=(g, d1, d2, which):
                    _compare("poincare-specialization", key,
                             closed(t), result(t).poincare())))
    return reports


def _smooth_projective_outputs(g_range, span):
    for g in g_range:
        yield ("m2-odd", (g,)), m2_odd(g)
        for d1, d2 in instances_22(g, span):
            t = TripleType(g, 2, 2, d1, d2)
            yield ("t22-small", (g, d1, d2)), small_sigma_22(t)
            yield ("t22-large", (g, d1, d2)), large_sigma_22(t)
        t21 = TripleType(g, 2, 1, 4 * g + 1, 0)
        for sigma in _chamber_samples(t21, 1):
            yield ("t21", (g, t21.d1, t21.d2, str(sigma))), hodge_21(t21, sigma)


def _chamber_samples(t: TripleType, per_chamber: int) -> List[SigmaValue]:
    """Non-critical sample points, per_chamber in each open chamber."""
    crit = critical_values_21(t)
    lo, hi = t.slope_gap, 4 * t.slope_gap
    bounds = [lo] + [c for c in crit if lo < c < hi] + [hi]
    samples = []
    for a, b in zip(bounds, bounds[1:]):
        step = (b - a) / (per_chamber + 1)
        samples.extend(SigmaValue(a + step * (i + 1))
                       for i in range(per_chamber))
    return samples


def _check_shape(g_range, span) -> List[CheckReport]:
    reports = []
    for (label, instance), result in _smooth_projective_outputs(g_range, span):
        def run(result=result, key=(label,) + instance):
            failures = result.sanity_failures()
            if not failures:
                return CheckReport("symmetry", key, "pass")
            return CheckReport("symmetry", key, "fail",
                               detail="; ".join(failures))
        reports.append(_guarded("symmetry", (label,) + instance, run))
    return reports


def _check_positivity(g_range, span) -> List[CheckReport]:
    reports = []
    for (label, instance), result in _smooth_projective_outputs(g_range, span):
        key = (label,) + instance
        if result.poly.has_nonnegative_coefficients():
            reports.append(CheckReport("positivity", key, "pass"))
        else:
            negative = BiLaurent({e: c for (e, c) in result.poly.terms.items()
                                  if c < 0})
            reports.append(CheckReport("positivity", key, "fail",
                                       witness=negative))
    return reports


def _check_duality(g_range, span) -> List[CheckReport]:
    reports = []
    for (label, instance), result in _smooth_projective_outputs(g_range, span):
        key = (label,) + instance
        reports.append(_compare("duality", key, result.poly,
                                result.poly.reciprocal_dual(result.dim)))
    return reports


def _check_chamber_constancy(g_range, span) -> List[CheckReport]:
    reports = []
    for g in g_range:
        t21 = TripleType(g, 2, 1, 4 * g + 1, 0)
        samples = _chamber_samples(t21, 2)
        for s1, s2 in zip(samples[0::2], samples[1::2]):
            reports.append(_guarded(
                "chamber-constancy", ("t21", g, str(s1), str(s2)),
                lambda t=t21, s1=s1, s2=s2, g=g: _compare(
                    "chamber-constancy", ("t21", g, str(s1), str(s2)),
                    hodge_21(t, s1).poly, hodge_21(t, s2).poly)))
        d1, d2 = instances_22(g, 1)[0]
        t22 = TripleType(g, 2, 2, d1, d2)
        for wall in critical_values_22(t22):
            lo = SigmaValue(wall.sigma_c, MINUS_EPS)
            hi = SigmaValue(wall.sigma_c - Fraction(1, 2))
            reports.append(_guarded(
                "chamber-constancy", ("t22", g, d1, d2, wall.n),
                lambda t=t22, lo=lo, hi=hi, key=("t22", g, d1, d2, wall.n):
                _compare("chamber-constancy", key,
                         cumulative_22(t, lo).poly, cumulative_22(t, hi).poly)))
    return reports


def _check_three_pole(g_range, span) -> List[CheckReport]:
    one = BiLaurent.const(1)
    uv = BiLaurent.uv()
    reports = []
    for g in sorted(set(list(g_range) + [4, 5])):
        reports.append(_guarded(
            "three-pole-identity", (g,),
            lambda g=g: _compare(
                "three-pole-identity", (g,),
                three_pole_closed_form(one, uv, BiLaurent.uv(-1), g),
                coeff_x0(geom_expr_for_three_poles(one, uv, BiLaurent.uv(-1), g)))))
    return reports


def _check_residue_f(g_range, span) -> List[CheckReport]:
    one = BiLaurent.const(1)
    uv = BiLaurent.uv()
    triples = [(one, uv, BiLaurent.uv(-1)), (BiLaurent.uv(-1), one, uv),
               (BiLaurent.uv(2), one, uv), (uv, one, BiLaurent.uv(2))]
    reports = []
    for g in g_range:
        for i, (a, b, c) in enumerate(triples):
            for m in range(3):
                reports.append(_guarded(
                    "residue-F-identity", (g, i, m),
                    lambda a=a, b=b, c=c, m=m, g=g, key=(g, i, m): _compare(
                        "residue-F-identity", key,
                        residue_F(a, b, c, m, g),
                        residue_F_extraction(a, b, c, m, g))))
    return reports


def _check_rank_duality(g_range, span) -> List[CheckReport]:
    reports = []
    for g in g_range:
        t = TripleType(g, 2, 1, 4 * g + 1, 0)
        for sigma in _chamber_samples(t, 1):
            reports.append(_guarded(
                "duality-of-ranks", (g, t.d1, t.d2, str(sigma)),
                lambda t=t, sigma=sigma, key=(g, t.d1, t.d2, str(sigma)):
                _compare("duality-of-ranks", key,
                         hodge_21(t, sigma).poly,
                         hodge_12(t.dual(), sigma).poly)))
    return reports


_CHECKS: Dict[str, Callable] = {
    "kirwan-g2": _check_kirwan,
    "strata-vs-theoremA": _check_strata_a,
    "strata-vs-theoremB": _check_strata_b,
    "telescoping": _check_telescoping,
    "poincare-specialization": _check_poincare,
    "duality": _check_duality,
    "symmetry": _check_shape,
    "positivity": _check_positivity,
    "chamber-constancy": _check_chamber_constancy,
    "three-pole-identity": _check_three_pole,
    "residue-F-identity": _check_residue_f,
    "duality-of-ranks": _check_rank_duality,
}

_FAST = ("kirwan-g2", "three-pole-identity", "duality-of-ranks",
         "chamber-constancy", "residue-F-identity")


def check_ids() -> List[str]:
    return list(_CHECKS)


def run_suite(suite: str = "all",
              g_range: Sequence[int] = (2, 3),
              span: int = 4) -> List[CheckReport]:
    """Run the named suite ("all", "fast", or a single check id) over the
    given genus range; the d1, d2 sweep size is bounded by span."""
    if suite == "all":
        names = list(_CHECKS)
    elif suite == "fast":
        names = list(_FAST)
    elif suite in _CHECKS:
        names = [suite]
    else:
        raise KeyError(f"unknown suite or check id {suite!r}; "
                       f"known: all, fast, {', '.join(_CHECKS)}")
    reports: List[CheckReport] = []
    for name in names:
        reports.extend(_CHECKS[name](tuple(g_range), span))
    return reports


def summary_table(reports: Sequence[CheckReport]) -> str:
    """Human-readable pass/fail counts per check id, stable order."""
    counts: Dict[str, List[int]] = {}
    for r in reports:
        bucket = counts.setdefault(r.check_id, [0, 0])
        bucket[0 if r.status == "pass" else 1] += 1
    width = max(len(k) for k in counts) if counts else 10
    lines = [f"{'check':<{width}}  pass  fail"]
    for name in counts:
        p, f = counts[name]
        lines.append(f"{name:<{width}}  {p:>4}  {f:>4}")
    total_p = sum(v[0] for v in counts.values())
    total_f = sum(v[1] for v in counts.values())
    lines.append(f"{'total':<{width}}  {total_p:>4}  {total_f:>4}")
    return "\n".join(lines)

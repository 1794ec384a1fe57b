"""Acceptance battery: nine exact cross-checks tying every closed form to
an independent route.

Each test is one criterion; every equality is an integer-coefficient
polynomial identity with zero tolerance.  The full file runs in a few
seconds for g in {2, 3} (well under the one-minute budget).
"""

from fractions import Fraction

from hodgetriples.polyring import ONE, UV, BiLaurent
from hodgetriples.rank2_bundles import (m2_even_polystable, m2_even_stable,
                                        m2_even_strata_oracle, m2_odd)
from hodgetriples.triples22 import (critical_values_22, cumulative_22,
                                    flip_difference, large_sigma_22,
                                    poincare_large_closed,
                                    poincare_small_closed, small_sigma_22,
                                    small_sigma_strata_oracle)
from hodgetriples.triples_low_rank import critical_values_21, hodge_21
from hodgetriples.types import (EXACT, MINUS_EPS, PLUS_EPS, SigmaValue,
                                TripleType)
from hodgetriples.xseries import coeff_x0, geom_expr_for_three_poles, \
    three_pole_closed_form

# d1 + d2 odd, mu1 - mu2 > 2g - 2: the shared instance pool for the
# telescoping, specialization, sanity, and chamber-constancy criteria
TELESCOPE_INSTANCES = (
    (2, 6, 1), (2, 7, 0), (2, 8, 1), (2, 9, 0),
    (3, 13, 0), (3, 12, 1), (3, 14, 1), (3, 15, 0),
)

# d1 odd, d2 even instances for the five-stratum oracle
ORACLE_INSTANCES = (
    (2, 7, 0), (2, 9, 2), (2, 9, 0), (2, 11, 2),
    (3, 11, 0), (3, 13, 0), (3, 13, 2), (3, 15, 0),
)


def test_criterion_1_kirwan_value():
    expected = ((ONE + BiLaurent.u()) ** 2 * (ONE + BiLaurent.v()) ** 2
                * (ONE + UV + BiLaurent.uv(2) + BiLaurent.uv(3)))
    assert m2_even_polystable(2).poly == expected


def test_criterion_2_rank2_strata_oracle():
    for g in (2, 3, 4):
        assert m2_even_strata_oracle(g) == m2_even_stable(g).poly


def test_criterion_3_first_chamber_strata_oracle():
    for g, d1, d2 in ORACLE_INSTANCES:
        t = TripleType(g, 2, 2, d1, d2)
        assert small_sigma_strata_oracle(t) == small_sigma_22(t).poly


def test_criterion_4_wall_crossing_telescoping():
    for g, d1, d2 in TELESCOPE_INSTANCES:
        t = TripleType(g, 2, 2, d1, d2)
        total = small_sigma_22(t).poly
        for wall in critical_values_22(t):
            total = total + flip_difference(t, wall)
        assert total == large_sigma_22(t).poly


def test_criterion_5_per_kind_vs_unified_flips():
    # flip_difference evaluates the unified extraction and the route through
    # the rank-(1,2) or rank-(2,1) moduli and raises ConsistencyError on any
    # mismatch, so completing the sweep is the assertion
    for g, d1, d2 in TELESCOPE_INSTANCES:
        t = TripleType(g, 2, 2, d1, d2)
        for wall in critical_values_22(t):
            flip_difference(t, wall)


def test_criterion_6_poincare_specializations():
    for g, d1, d2 in TELESCOPE_INSTANCES:
        t = TripleType(g, 2, 2, d1, d2)
        assert poincare_small_closed(t) == small_sigma_22(t).poincare()
        assert poincare_large_closed(t) == large_sigma_22(t).poincare()


def test_criterion_7_duality_symmetry_positivity():
    outputs = []
    for g in (2, 3):
        outputs.append(m2_odd(g))
    for g, d1, d2 in TELESCOPE_INSTANCES:
        t = TripleType(g, 2, 2, d1, d2)
        outputs.append(small_sigma_22(t))
        outputs.append(large_sigma_22(t))
    # sigma-sweep over all five chambers of a rank-(2,1) instance
    t21 = TripleType(2, 2, 1, 9, 0)
    walls = critical_values_21(t21)  # {6, 9, 12, 15, 18}
    assert len(walls) == 5
    edges = [Fraction(9, 2)] + walls
    for lo, hi in zip(edges, edges[1:]):
        outputs.append(hodge_21(t21, SigmaValue((lo + hi) / 2, EXACT)))
    for result in outputs:
        assert result.smooth and result.projective
        assert result.sanity_failures() == []
        assert result.poly == result.poly.reciprocal_dual(result.dim)


def test_criterion_8_extraction_identities():
    a, b, c = ONE, UV, BiLaurent.uv(-1)
    for g in (2, 3, 4, 5):
        assert (three_pole_closed_form(a, b, c, g)
                == coeff_x0(geom_expr_for_three_poles(a, b, c, g)))
    from hodgetriples.triples22 import residue_F, residue_F_extraction
    triples = (
        (ONE, UV, BiLaurent.uv(-1)),
        (BiLaurent.uv(-1), ONE, UV),
        (BiLaurent.uv(2), ONE, UV),
        (UV, ONE, BiLaurent.uv(2)),
    )
    for aa, bb, cc in triples:
        for m in (0, 1, 2):
            assert (residue_F(aa, bb, cc, m, 2)
                    == residue_F_extraction(aa, bb, cc, m, 2))


def test_criterion_9_chamber_constancy():
    # rank (2,1): two sample points in every chamber of one instance per g
    for g in (2, 3):
        t = TripleType(g, 2, 1, 4 * g + 1, 0)
        lo, hi = t.slope_gap, 4 * t.slope_gap
        edges = [lo] + critical_values_21(t)
        for left, right in zip(edges, edges[1:]):
            third = (right - left) / 3
            first = hodge_21(t, SigmaValue(left + third, EXACT))
            second = hodge_21(t, SigmaValue(right - third, EXACT))
            assert first.poly == second.poly
    # rank (2,2): just below each wall agrees with mid-chamber below it
    for g, d1, d2 in TELESCOPE_INSTANCES[:4]:
        t = TripleType(g, 2, 2, d1, d2)
        for wall in critical_values_22(t):
            below = cumulative_22(t, wall.sigma_below()).poly
            mid = cumulative_22(t, SigmaValue(wall.sigma_c - Fraction(1, 2),
                                              EXACT)).poly
            assert below == mid

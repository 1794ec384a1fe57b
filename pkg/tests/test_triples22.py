"""Rank (2,2) triples: wall enumeration, flip differences by two routes,
cumulative wall-crossing, stabilized values, and the residue identity."""

from fractions import Fraction

import pytest

from hodgetriples.errors import (CriticalValueError, DomainError,
                                 EmptyModuliError, PreconditionError,
                                 UnsupportedCaseError)
from hodgetriples.polyring import ONE, UV, BiLaurent
from hodgetriples.triples22 import (critical_values_22, cumulative_22,
                                    flip_difference, large_sigma_22,
                                    poincare_large_closed,
                                    poincare_small_closed, residue_F,
                                    residue_F_extraction, small_sigma_22,
                                    small_sigma_strata_oracle)
from hodgetriples.types import (BOTH_KINDS, DF_WALL, DL_WALL, EXACT,
                                MINUS_EPS, SigmaValue, TripleType)


def test_wall_enumeration_odd_sum():
    walls = critical_values_22(TripleType(2, 2, 2, 6, 1))
    assert [(w.n, w.sigma_c, w.kind) for w in walls] == [
        (1, Fraction(7, 2), DF_WALL),
        (2, Fraction(9, 2), DL_WALL),
    ]
    # each wall records the destabilizing line-bundle degree
    assert walls[0].level == 0  # d_F = mu2 - n/2 = 1/2 - 1/2
    assert walls[1].level == 4  # d_L = mu1 + n/2 = 3 + 1


def test_wall_kinds_alternate_with_parity():
    # swapping the parity of d1 swaps which indices are d_L-walls
    kinds_odd_d1 = [w.kind for w in critical_values_22(TripleType(2, 2, 2, 7, 0))]
    kinds_even_d1 = [w.kind for w in critical_values_22(TripleType(2, 2, 2, 8, 1))]
    assert kinds_odd_d1 == [DL_WALL, DF_WALL, DL_WALL]
    assert kinds_even_d1 == [DF_WALL, DL_WALL, DF_WALL]


def test_wall_enumeration_even_sum():
    walls = critical_values_22(TripleType(2, 2, 2, 8, 0))
    assert all(w.kind == BOTH_KINDS for w in walls)
    assert [w.n for w in walls] == [2, 4]
    assert [w.sigma_c for w in walls] == [Fraction(6), Fraction(8)]


def test_no_walls_for_equal_degrees():
    assert critical_values_22(TripleType(2, 2, 2, 5, 5)) == []


def test_wall_enumeration_rejects_wrong_rank():
    with pytest.raises(DomainError):
        critical_values_22(TripleType(2, 2, 1, 5, 0))
    with pytest.raises(EmptyModuliError):
        critical_values_22(TripleType(2, 2, 2, 1, 5))


def test_small_sigma_mixed_parity_sanity():
    for d1, d2 in ((7, 0), (8, 1)):
        result = small_sigma_22(TripleType(2, 2, 2, d1, d2))
        assert result.dim == 4 * 2 + 2 * d1 - 2 * d2 - 3
        assert result.smooth and result.projective
        assert result.sanity_failures() == []


def test_small_sigma_odd_odd_factorizes():
    from hodgetriples.rank2_bundles import m2_odd
    t = TripleType(2, 2, 2, 7, 1)
    n_ext = t.d1 - t.d2 - 2 * t.g + 2
    factor = m2_odd(2).poly
    expected = factor * factor * sum(
        (BiLaurent.uv(i) for i in range(2 * n_ext)), BiLaurent.zero())
    assert small_sigma_22(t).poly == expected


def test_small_sigma_rejects_even_sum():
    with pytest.raises(UnsupportedCaseError):
        small_sigma_22(TripleType(2, 2, 2, 8, 0))


def test_small_sigma_requires_slope_gap():
    with pytest.raises(PreconditionError):
        small_sigma_22(TripleType(2, 2, 2, 5, 2))


def test_strata_oracle_matches_closed_form():
    for d1, d2 in ((7, 0), (9, 2)):
        t = TripleType(2, 2, 2, d1, d2)
        assert small_sigma_strata_oracle(t) == small_sigma_22(t).poly


def test_flip_routes_agree():
    # flip_difference internally cross-checks the direct extraction against
    # the route through the lower-rank moduli; this exercises both kinds
    t = TripleType(2, 2, 2, 6, 1)
    for wall in critical_values_22(t):
        diff = flip_difference(t, wall)
        assert not diff.is_zero()


def test_flip_rejects_foreign_wall():
    t = TripleType(2, 2, 2, 6, 1)
    wall = critical_values_22(TripleType(2, 2, 2, 8, 1))[2]
    with pytest.raises(DomainError):
        flip_difference(t, wall)


def test_flip_rejects_even_sum_wall():
    t = TripleType(2, 2, 2, 8, 0)
    wall = critical_values_22(t)[0]
    with pytest.raises(UnsupportedCaseError):
        flip_difference(t, wall)


def test_telescoping_across_all_walls():
    t = TripleType(2, 2, 2, 6, 1)
    walls = critical_values_22(t)
    total = small_sigma_22(t).poly
    for wall in walls:
        total = total + flip_difference(t, wall)
    assert total == large_sigma_22(t).poly


def test_cumulative_matches_telescoping_mid_chamber():
    t = TripleType(2, 2, 2, 6, 1)
    first_wall = critical_values_22(t)[0]
    mid = SigmaValue(Fraction(4), EXACT)  # between the walls at 7/2 and 9/2
    expected = small_sigma_22(t).poly + flip_difference(t, first_wall)
    assert cumulative_22(t, mid).poly == expected


def test_cumulative_stabilizes_beyond_last_wall():
    t = TripleType(2, 2, 2, 6, 1)
    assert cumulative_22(t, SigmaValue(Fraction(6))).poly == large_sigma_22(t).poly


def test_cumulative_guards():
    t = TripleType(2, 2, 2, 6, 1)
    with pytest.raises(CriticalValueError):
        cumulative_22(t, SigmaValue(Fraction(7, 2), EXACT))
    with pytest.raises(CriticalValueError):
        cumulative_22(t, SigmaValue(Fraction(5, 2), EXACT))  # sigma_m
    with pytest.raises(EmptyModuliError):
        cumulative_22(t, SigmaValue(Fraction(2), EXACT))
    with pytest.raises(EmptyModuliError):
        cumulative_22(t, SigmaValue(Fraction(5, 2), MINUS_EPS))


def test_poincare_closed_forms_match_specialization():
    t = TripleType(2, 2, 2, 7, 0)
    assert poincare_small_closed(t) == small_sigma_22(t).poincare()
    assert poincare_large_closed(t) == large_sigma_22(t).poincare()


def test_residue_identity():
    triples = (
        (ONE, UV, BiLaurent.uv(-1)),
        (BiLaurent.uv(-1), ONE, UV),
        (BiLaurent.uv(2), ONE, UV),
        (UV, ONE, BiLaurent.uv(2)),
    )
    for a, b, c in triples:
        for m in (0, 1, 2):
            assert residue_F(a, b, c, m, 2) == residue_F_extraction(a, b, c, m, 2)


def test_residue_rejects_coincident_poles():
    with pytest.raises(DomainError):
        residue_F(ONE, ONE, UV, 1, 2)
    with pytest.raises(DomainError):
        residue_F(ONE + UV, ONE, UV, 1, 2)

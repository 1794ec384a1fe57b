"""Moduli of rank-2 bundles: closed forms, the polystable correction, and
the five-stratum oracle."""

import pytest

from hodgetriples.errors import ConsistencyError, DomainError
from hodgetriples.polyring import ONE, UV, BiLaurent
from hodgetriples.rank2_bundles import (BundleModuliQuery, m2_even_polystable,
                                        m2_even_stable, m2_even_strata_oracle,
                                        m2_odd)
from hodgetriples.varieties import jacobian, sym2_quotient


def test_query_validation():
    BundleModuliQuery(2, 1, "odd-stable")
    BundleModuliQuery(2, 0, "even-stable")
    with pytest.raises(DomainError):
        BundleModuliQuery(1, 1, "odd-stable")
    with pytest.raises(DomainError):
        BundleModuliQuery(2, 2, "odd-stable")
    with pytest.raises(DomainError):
        BundleModuliQuery(2, 1, "even-polystable")
    with pytest.raises(DomainError):
        BundleModuliQuery(2, 0, "nonsense")


def test_query_dispatch():
    assert BundleModuliQuery(2, 3, "odd-stable").compute().poly == m2_odd(2).poly
    assert (BundleModuliQuery(3, 4, "even-polystable").compute().poly
            == m2_even_polystable(3).poly)


def test_m2_odd_genus_2():
    result = m2_odd(2)
    assert result.dim == 5
    assert result.smooth and result.projective
    assert result.sanity_failures() == []
    # the moduli fibers over the Jacobian, so h^{1,0} = g
    assert result.poly.coefficient(1, 0) == 2
    # Poincare polynomial value at t=1 (total Betti number)
    # total Betti number: 16 from the Jacobian factor times 8 from the
    # fixed-determinant fiber
    assert result.poincare().evaluate(1, 1) == 128


def test_m2_odd_duality_range():
    for g in (2, 3, 4):
        result = m2_odd(g)
        assert result.poly == result.poly.reciprocal_dual(4 * g - 3)
        assert result.poly.has_nonnegative_coefficients()
        assert result.poly.is_symmetric()


def test_even_polystable_kirwan_g2():
    expected = ((ONE + BiLaurent.u()) ** 2 * (ONE + BiLaurent.v()) ** 2
                * (ONE + UV + BiLaurent.uv(2) + BiLaurent.uv(3)))
    assert m2_even_polystable(2).poly == expected
    # specialization u = v = t
    assert m2_even_polystable(2).poincare().evaluate(1, 1) == 64


def test_even_polystable_is_stable_plus_split_locus():
    for g in (2, 3):
        assert (m2_even_polystable(g).poly
                == m2_even_stable(g).poly + sym2_quotient(jacobian(g)))


def test_even_stable_symmetry():
    for g in (2, 3):
        poly = m2_even_stable(g).poly
        assert poly.is_symmetric()
        # the stable locus is open, so the class in degree 0 lives on the
        # split locus instead and the constant term vanishes
        assert poly.constant_term() == 0
        assert poly.coefficient(4 * g - 3, 4 * g - 3) == 1


def test_strata_oracle_matches_closed_form():
    for g in (2, 3):
        assert m2_even_strata_oracle(g) == m2_even_stable(g).poly


def test_genus_bound():
    with pytest.raises(DomainError):
        m2_odd(1)
    with pytest.raises(DomainError):
        m2_even_stable(0)

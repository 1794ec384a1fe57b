"""Coefficient extraction from geometric-pole rational expressions."""

import pytest

from hodgetriples.errors import DomainError, InexactDivisionError
from hodgetriples.polyring import ONE, UV, BiLaurent
from hodgetriples.xseries import (GeomExpr, binomial_pow, coeff_x0,
                                  geom_expr_for_three_poles,
                                  three_pole_closed_form)


def test_binomial_pow():
    expansion = binomial_pow(BiLaurent.u(), 2)
    assert expansion == {0: ONE, 1: 2 * BiLaurent.u(),
                         2: BiLaurent.monomial(1, 2, 0)}
    with pytest.raises(DomainError):
        binomial_pow(BiLaurent.u(), -1)


def test_geom_expr_validation():
    with pytest.raises(DomainError):
        GeomExpr({0: ONE}, ((ONE + UV, 1),), 0)
    with pytest.raises(DomainError):
        GeomExpr({0: ONE}, ((UV, 0),), 0)


def test_coeff_x0_single_pole():
    # x^{-3} / (1 - (uv)x) has x^0 coefficient (uv)^3
    expr = GeomExpr({0: ONE}, ((UV, 1),), 3)
    assert coeff_x0(expr) == BiLaurent.uv(3)


def test_coeff_x0_negative_offset_vanishes():
    expr = GeomExpr({0: ONE}, ((UV, 1),), -1)
    assert coeff_x0(expr).is_zero()


def test_coeff_x0_double_pole():
    # x^{-k} / (1-x)^2 has x^0 coefficient k+1
    expr = GeomExpr({0: ONE}, ((ONE, 2),), 4)
    assert coeff_x0(expr) == BiLaurent.const(5)


def test_coeff_x0_numerator_shifts():
    # (1 + ux) x^{-1} / (1 - vx): coefficient of x^1 in (1+ux)/(1-vx)
    expr = GeomExpr({0: ONE, 1: BiLaurent.u()}, ((BiLaurent.v(), 1),), 1)
    assert coeff_x0(expr) == BiLaurent.u() + BiLaurent.v()


def test_three_pole_identity_small_genus():
    a, b, c = ONE, UV, BiLaurent.uv(-1)
    for g in (2, 3):
        closed = three_pole_closed_form(a, b, c, g)
        extracted = coeff_x0(geom_expr_for_three_poles(a, b, c, g))
        assert closed == extracted


def test_three_pole_rejects_collisions():
    with pytest.raises(InexactDivisionError):
        three_pole_closed_form(ONE, ONE, UV, 2)
    with pytest.raises(DomainError):
        three_pole_closed_form(ONE + UV, ONE, UV, 2)

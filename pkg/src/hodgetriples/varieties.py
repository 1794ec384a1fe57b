"""Hodge polynomials of the basic building-block varieties.

Projective spaces, Jacobians of a genus-g curve, Grassmannians, and the
symmetric-square quotient (M x M)/Z_2 of a smooth projective variety.
All values are exact BiLaurent polynomials.
"""

from __future__ import annotations

import warnings

from .errors import DomainError
from .polyring import BiLaurent


def projective_space(n: int) -> BiLaurent:
    """e(P^{n-1}) = (1 - (uv)^n) / (1 - uv) = 1 + uv + ... + (uv)^{n-1}."""
    if n <= 0:
        raise DomainError(f"projective_space requires n >= 1, got {n}")
    return BiLaurent({(i, i): 1 for i in range(n)})


def jacobian(g: int) -> BiLaurent:
    """e(Jac X) = (1+u)^g (1+v)^g for a genus-g curve."""
    if g < 2:
        warnings.warn("genus below 2 is outside the standing assumptions of "
                      "the moduli-level formulas", stacklevel=2)
    one_u = BiLaurent.const(1) + BiLaurent.u()
    one_v = BiLaurent.const(1) + BiLaurent.v()
    return one_u ** g * one_v ** g


def grassmannian(k: int, n: int) -> BiLaurent:
    """e(Gr(k, n)) as one exact division of products of (1 - (uv)^i) factors."""
    if not 1 <= k <= n:
        raise DomainError(f"grassmannian requires 1 <= k <= n, got k={k}, n={n}")
    one = BiLaurent.const(1)
    num = one
    den = one
    for i in range(1, k + 1):
        num = num * (one - BiLaurent.uv(n - k + i))
        den = den * (one - BiLaurent.uv(i))
    return num.exact_div(den)


def sym2_quotient(m: BiLaurent) -> BiLaurent:
    """Hodge polynomial of (M x M)/Z_2 for smooth projective M with e(M) = m:

        (m(u,v)^2 + m(-u^2,-v^2)) / 2

    The division by 2 must be exact on integer coefficients.
    """
    return (m * m + m.neg_squares()).divide_int(2)

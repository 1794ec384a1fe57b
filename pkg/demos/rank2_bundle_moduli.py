"""
Hodge numbers of rank-2 bundle moduli on a curve
================================================

Compute the Hodge and Poincare polynomials of the moduli of rank-2
bundles of fixed determinant, in both degree parities, and verify the
classical symmetries by hand.
"""

from hodgetriples import (jacobian, m2_even_polystable, m2_even_stable,
                          m2_odd, sym2_quotient)

# odd degree: the moduli space is smooth projective of dimension 4g - 3
for g in (2, 3):
    result = m2_odd(g)
    print(f"g = {g}: dim {result.dim}")
    print(f"  Poincare polynomial: {result.poincare().univariate_text()}")
    # Poincare duality: the coefficient list is palindromic
    assert result.poly == result.poly.reciprocal_dual(result.dim)

# even degree: the stable locus is smooth but not projective, and its
# Hodge polynomial is no longer palindromic
stable = m2_even_stable(2)
print(f"\neven degree, g = 2, stable locus: {stable.poly.to_text()}")

# adding the split polystable bundles -- a symmetric square of the
# Jacobian -- compactifies the count
polystable = m2_even_polystable(2)
assert polystable.poly == stable.poly + sym2_quotient(jacobian(2))
print(f"polystable moduli: {polystable.poly.to_text()}")
print(f"total Betti number: {polystable.poincare().evaluate(1, 1)}")

"""Exact Hodge and Poincare polynomials of moduli of rank-2 bundles and
holomorphic triples on a smooth projective curve, with a consistency
battery cross-checking every closed form against independent derivations.
"""

from .errors import (ConsistencyError, CriticalValueError, DomainError,
                     EmptyModuliError, HodgeError, InexactDivisionError,
                     PreconditionError, UnsupportedCaseError,
                     UnsupportedOperationError)
from .polyring import ONE, UV, BiLaurent
from .rank2_bundles import (BundleModuliQuery, m2_even_polystable,
                            m2_even_stable, m2_even_strata_oracle, m2_odd)
from .triples_low_rank import (chi_triples, critical_values_12,
                               critical_values_21, hodge_12, hodge_21,
                               sigma_interval)
from .triples22 import (critical_values_22, cumulative_22, flip_difference,
                        large_sigma_22, poincare_large_closed,
                        poincare_small_closed, residue_F,
                        residue_F_extraction, small_sigma_22,
                        small_sigma_strata_oracle)
from .types import (BOTH_KINDS, DF_WALL, DL_WALL, EXACT, MINUS_EPS, PLUS_EPS,
                    FlipWall, HodgeResult, SigmaValue, TripleType)
from .varieties import (grassmannian, jacobian, projective_space,
                        sym2_quotient)
from .verify import CheckReport, check_ids, run_suite, summary_table
from .xseries import (GeomExpr, binomial_pow, coeff_x0,
                      geom_expr_for_three_poles, three_pole_closed_form)

__version__ = "1.0.0"

__all__ = [
    "BiLaurent", "ONE", "UV", "GeomExpr", "binomial_pow", "coeff_x0",
    "three_pole_closed_form", "geom_expr_for_three_poles",
    "projective_space", "jacobian", "grassmannian", "sym2_quotient",
    "SigmaValue", "TripleType", "FlipWall", "HodgeResult",
    "EXACT", "PLUS_EPS", "MINUS_EPS", "DL_WALL", "DF_WALL", "BOTH_KINDS",
    "BundleModuliQuery", "m2_odd", "m2_even_stable", "m2_even_polystable",
    "m2_even_strata_oracle",
    "sigma_interval", "critical_values_21", "critical_values_12",
    "hodge_21", "hodge_12", "chi_triples",
    "critical_values_22", "small_sigma_22", "small_sigma_strata_oracle",
    "flip_difference", "cumulative_22", "large_sigma_22",
    "residue_F", "residue_F_extraction",
    "poincare_small_closed", "poincare_large_closed",
    "CheckReport", "run_suite", "summary_table", "check_ids",
    "HodgeError", "DomainError", "InexactDivisionError",
    "UnsupportedOperationError", "EmptyModuliError", "CriticalValueError",
    "PreconditionError", "UnsupportedCaseError", "ConsistencyError",
]

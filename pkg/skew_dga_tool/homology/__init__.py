"""
Homology module for the skew DGA tool.

Strata of fixed tridegree, homology bases and the acyclic closure of k.
"""

from skew_dga_tool.homology.strata import Stratum, stratum, stratum_matrix
from skew_dga_tool.homology.closure import (
    ClosureResult, DeviationTable, HomologyBasis, acyclic_closure, skew_ci_closure, deviations,
    homology_basis, homology_dimensions, verify_minimality
)

__all__ = [
    "Stratum",
    "stratum",
    "stratum_matrix",
    "ClosureResult",
    "DeviationTable",
    "HomologyBasis",
    "acyclic_closure",
    "skew_ci_closure",
    "deviations",
    "homology_basis",
    "homology_dimensions",
    "verify_minimality"
]

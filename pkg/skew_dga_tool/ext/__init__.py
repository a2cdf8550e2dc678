"""
Ext module for the skew DGA tool.

Betti numbers, Poincare series, Yoneda products and the Ext presentation of
skew complete intersections.
"""

from skew_dga_tool.ext.betti import BettiTable, betti_table, poincare_from_deviations
from skew_dga_tool.ext.presentation import ExtPresentation, ext_presentation, upi_dimensions
from skew_dga_tool.ext.yoneda import (
    Cocycle, ExtAlgebra, ProductConvention, YonedaCalculator, yoneda_product
)
from skew_dga_tool.ext.invariants import (
    verify_presentation, complexity, k2_check, noetherian_check, color_lie_check
)

__all__ = [
    "BettiTable",
    "betti_table",
    "poincare_from_deviations",
    "ExtPresentation",
    "ext_presentation",
    "upi_dimensions",
    "Cocycle",
    "ExtAlgebra",
    "ProductConvention",
    "YonedaCalculator",
    "yoneda_product",
    "verify_presentation",
    "complexity",
    "k2_check",
    "noetherian_check",
    "color_lie_check"
]

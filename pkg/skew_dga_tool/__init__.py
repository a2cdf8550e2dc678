"""
Skew DGA Tool - DG algebra over quotients of skew polynomial rings

Exact computation of skew Koszul complexes, acyclic closures, deviations,
Poincare series and Ext algebra presentations of skew complete intersections.
"""

__version__ = "0.1.0"

from skew_dga_tool.algebra.field import ScalarField
from skew_dga_tool.algebra.skewpoly import QMatrix, SkewPolynomialRing, RingElement
from skew_dga_tool.algebra.quotient import QuotientRing
from skew_dga_tool.dga.extension import SemiFreeExtension, DGElement
from skew_dga_tool.homology.closure import acyclic_closure, skew_ci_closure, DeviationTable
from skew_dga_tool.ext.presentation import ext_presentation
from skew_dga_tool.ext.invariants import verify_presentation
from skew_dga_tool.tools.spec_parser import parse_ring_spec
from skew_dga_tool.tools.command_runner import run

__all__ = [
    "ScalarField",
    "QMatrix",
    "SkewPolynomialRing",
    "RingElement",
    "QuotientRing",
    "SemiFreeExtension",
    "DGElement",
    "acyclic_closure",
    "skew_ci_closure",
    "DeviationTable",
    "ext_presentation",
    "verify_presentation",
    "parse_ring_spec",
    "run"
]

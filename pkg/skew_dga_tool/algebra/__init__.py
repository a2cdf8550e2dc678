"""
Algebra module for the skew DGA tool.

Exact scalars, skew polynomial rings, quotients by normal relations, truncated
series and the sparse linear algebra the upper layers are built on.
"""

from skew_dga_tool.algebra.field import ScalarField, Scalar
from skew_dga_tool.algebra.skewpoly import (
    QMatrix, SkewPolynomialRing, RingElement, NormalityCertificate, Monomial, ColorDegree
)
from skew_dga_tool.algebra.quotient import (
    GroebnerBasis, QuotientRing, RegularityResult, buchberger, normal_form, graded_basis,
    hilbert_series, augment, is_regular_sequence, ideal_dimension_oracle
)
from skew_dga_tool.algebra.series import TruncatedSeries
from skew_dga_tool.algebra.linalg import ExactMatrix, rank_of_vectors

__all__ = [
    "ScalarField",
    "Scalar",
    "QMatrix",
    "SkewPolynomialRing",
    "RingElement",
    "NormalityCertificate",
    "Monomial",
    "ColorDegree",
    "GroebnerBasis",
    "QuotientRing",
    "RegularityResult",
    "buchberger",
    "normal_form",
    "graded_basis",
    "hilbert_series",
    "augment",
    "is_regular_sequence",
    "ideal_dimension_oracle",
    "TruncatedSeries",
    "ExactMatrix",
    "rank_of_vectors"
]

"""
Skew Koszul complexes.

K^R(f_1, ..., f_c) adjoins odd variables y_j with d(y_j) = f_j. On square-free
words the differential is

    d(y_i1 ... y_ir) = sum_j (-1)^(j-1) (prod_{l<j} r_{il,ij}) f_ij y_i1 ... ^ ... y_ir

with f_i f_j = r_ij f_j f_i; the product rules of the extension produce exactly
these constants.
"""

import logging
from typing import Optional, Sequence

from skew_dga_tool.algebra.quotient import QuotientRing
from skew_dga_tool.algebra.skewpoly import RingElement
from skew_dga_tool.core.exceptions import NormalityError, ZeroElementError
from skew_dga_tool.dga.extension import SemiFreeExtension

logger = logging.getLogger(__name__)


def koszul_complex(base: QuotientRing, fs: Sequence[RingElement],
                   hdeg_bound: Optional[int] = None) -> SemiFreeExtension:
    """
    The skew Koszul complex on a sequence of normal elements.

    Args:
        base: Quotient ring R
        fs: Homogeneous normal elements of the ambient skew polynomial ring
        hdeg_bound: Homological truncation of the result

    Returns:
        Extension with odd variables y_1..y_c and d(y_j) = image of f_j in R

    Raises:
        ZeroElementError: For a zero entry
        NormalityError: For an entry that is not normal
    """
    ring = base.ring
    extension = SemiFreeExtension(base, hdeg_bound=hdeg_bound)
    cycles, degrees = [], []
    for f in fs:
        if f.is_zero():
            raise ZeroElementError("Koszul complex on a zero element", operation="koszul_complex")
        certificate = ring.is_normal(f)
        if not certificate:
            raise NormalityError(f"relation not normal: {f.to_text()}", element_text=f.to_text(),
                                 variable=certificate.variable, monomials=certificate.monomials,
                                 operation="koszul_complex")
        degree = f.internal_degree()
        cycles.append(extension.from_ring(f))
        degrees.append((1, degree, ring.color_degree(f)))
    result = extension.adjoin_variables(cycles, degrees)
    logger.info(f"Koszul complex on {len(fs)} elements over {base!r}")
    return result


def koszul_on_variables(base: QuotientRing, hdeg_bound: Optional[int] = None) -> SemiFreeExtension:
    """K^R(x_1, ..., x_n), the first stage of the acyclic closure of k."""
    return koszul_complex(base, base.ring.variables(), hdeg_bound)

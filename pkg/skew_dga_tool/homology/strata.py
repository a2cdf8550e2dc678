"""
Tri-degree strata of a semi-free extension.

The (n, d) stratum is the finite k-space spanned by x^m * w with w a word of
homological degree n and internal degree deg(m) + deg(w) = d. The differential
preserves internal degree and color class, so every stratum splits into blocks
indexed by the chi-class of the color; matrices are built per block.
"""

import logging
from dataclasses import dataclass, field
from typing import Dict, List, Optional, Tuple

from skew_dga_tool.algebra.field import Scalar
from skew_dga_tool.algebra.linalg import ExactMatrix, SparseVector
from skew_dga_tool.algebra.skewpoly import ColorDegree
from skew_dga_tool.core.exceptions import HomologyError, TruncationError
from skew_dga_tool.dga.extension import DGElement, SemiFreeExtension, Term, Terms
from skew_dga_tool.dga.words import EMPTY_WORD

logger = logging.getLogger(__name__)

Signature = Tuple[Scalar, ...]


@dataclass
class Stratum:
    """Ordered k-basis of one (n, d) stratum, optionally restricted to a color class."""
    n: int
    d: int
    basis: Tuple[Term, ...]
    signature: Optional[Signature] = None
    index: Dict[Term, int] = field(default_factory=dict)

    def __post_init__(self):
        if not self.index:
            self.index = {term: i for i, term in enumerate(self.basis)}

    def __len__(self) -> int:
        return len(self.basis)

    def vector(self, terms: Terms) -> SparseVector:
        """
        Coordinates of a term map in this basis.

        Raises:
            HomologyError: If a term lies outside the stratum
        """
        out: SparseVector = {}
        for term, value in terms.items():
            position = self.index.get(term)
            if position is None:
                raise HomologyError(f"term {term} lies outside stratum ({self.n}, {self.d})",
                                    homological_degree=self.n, internal_degree=self.d)
            out[position] = value
        return out

    def element(self, algebra: SemiFreeExtension, vector: SparseVector) -> DGElement:
        return DGElement(algebra, {self.basis[i]: value for i, value in vector.items() if value})


def stratum(algebra: SemiFreeExtension, n: int, d: int,
            signature: Optional[Signature] = None, max_size: Optional[int] = None) -> Stratum:
    """
    The (n, d) stratum, or its block for one color class.

    Raises:
        TruncationError: If d exceeds the internal truncation, or the stratum
            is larger than max_size
    """
    if d > algebra.degree_bound:
        raise TruncationError(f"internal degree {d} exceeds the truncation {algebra.degree_bound}",
                              requested=d, bound=algebra.degree_bound, operation="stratum")
    key = (n, "basis", d, signature)
    cached = algebra.strata_cache.get(key)
    if cached is None:
        basis = algebra.stratum_basis(n, d)
        if signature is not None:
            ring = algebra.ring
            basis = tuple(t for t in basis
                          if ring.color_signature(algebra.term_color(t)) == signature)
        cached = Stratum(n, d, basis, signature)
        algebra.strata_cache[key] = cached
    if max_size is not None and len(cached) > max_size:
        raise TruncationError(f"stratum ({n}, {d}) has {len(cached)} basis elements, above the "
                              f"limit {max_size}", requested=len(cached), bound=max_size,
                              operation="stratum")
    return cached


def stratum_classes(algebra: SemiFreeExtension, n: int, d: int) -> Dict[Signature, ColorDegree]:
    """
    Color classes occurring in the (n, d) stratum.

    Returns:
        Map from class signature to its canonical color, the lexicographically
        least color of a basis element in the class; ordered by that color
    """
    key = (n, "classes", d)
    cached = algebra.strata_cache.get(key)
    if cached is None:
        classes: Dict[Signature, ColorDegree] = {}
        ring = algebra.ring
        for term in stratum(algebra, n, d).basis:
            color = algebra.term_color(term)
            signature = ring.color_signature(color)
            if signature not in classes or color < classes[signature]:
                classes[signature] = color
        cached = dict(sorted(classes.items(), key=lambda item: item[1]))
        algebra.strata_cache[key] = cached
    return cached


def stratum_matrix(algebra: SemiFreeExtension, n: int, d: int,
                   signature: Optional[Signature] = None,
                   max_size: Optional[int] = None) -> ExactMatrix:
    """
    Matrix of d_n from stratum (n, d) to stratum (n-1, d) in the canonical bases.

    Column j is the image of the j-th source basis element. In homological
    degree 0 the map is zero onto an empty target.
    """
    key = (n, "matrix", d, signature)
    cached = algebra.strata_cache.get(key)
    if cached is not None:
        return cached
    source = stratum(algebra, n, d, signature, max_size)
    if n <= 0:
        matrix = ExactMatrix(algebra.field, 0, len(source))
    else:
        target = stratum(algebra, n - 1, d, signature, max_size)
        columns: List[SparseVector] = []
        for word, monomial in source.basis:
            image = algebra.multiply_terms({(EMPTY_WORD, monomial): algebra.field.one},
                                           algebra.word_differential(word))
            columns.append(target.vector(image))
        matrix = ExactMatrix.from_columns(algebra.field, len(target), columns)
        logger.debug(f"stratum matrix ({n}, {d}): {len(target)} x {len(source)}")
    algebra.strata_cache[key] = matrix
    return matrix


def boundary_vectors(algebra: SemiFreeExtension, n: int, d: int,
                     signature: Optional[Signature] = None,
                     max_size: Optional[int] = None) -> List[SparseVector]:
    """Images of d_(n+1) in the (n, d) stratum, as coordinate vectors."""
    return stratum_matrix(algebra, n + 1, d, signature, max_size).columns()


def check_matrix_d_squared(algebra: SemiFreeExtension, n: int, d: int) -> bool:
    """True when d_(n-1) d_n is the zero matrix on the (n, d) stratum."""
    if n < 2:
        return True
    product = stratum_matrix(algebra, n - 1, d).matmul(stratum_matrix(algebra, n, d))
    return product.is_zero()

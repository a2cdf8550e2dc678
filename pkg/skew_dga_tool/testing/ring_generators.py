"""
Random rings and elements for property tests.

Every generator is driven by an explicit seed so test runs are
reproducible.
"""

import random
from enum import Enum
from typing import List, Optional, Sequence

from skew_dga_tool.algebra.field import Scalar, ScalarField
from skew_dga_tool.algebra.quotient import QuotientRing
from skew_dga_tool.algebra.skewpoly import Monomial, QMatrix, RingElement, SkewPolynomialRing
from skew_dga_tool.dga.extension import DGElement, SemiFreeExtension
from skew_dga_tool.homology.strata import stratum, stratum_classes


class QEntryKind(str, Enum):
    """How random commutation scalars are drawn."""
    RATIONAL = "rational"
    SIGN = "sign"
    ROOT_OF_UNITY = "root_of_unity"


_RATIONAL_POOL = ((1, 1), (-1, 1), (2, 1), (-2, 1), (1, 2), (3, 1), (-1, 3), (3, 2))


class RingGenerator:
    """Seeded source of q-matrices, rings and elements."""

    def __init__(self, seed: int = 0):
        self.seed = seed
        self.rng = random.Random(seed)

    # -- scalars ----------------------------------------------------------------------

    def scalar(self, field: ScalarField, nonzero: bool = True) -> Scalar:
        while True:
            numerator, denominator = self.rng.choice(_RATIONAL_POOL)
            if field.characteristic:
                value = field(self.rng.randrange(field.characteristic))
            else:
                value = field.fraction(numerator * self.rng.choice((1, 1, 2)), denominator)
            if value or not nonzero:
                return value

    def root_of_unity(self, field: ScalarField, order: Optional[int] = None) -> Scalar:
        """A random root of unity; over QQ only +1 and -1 exist."""
        if field.characteristic == 0:
            return self.rng.choice((field.one, -field.one))
        p = field.characteristic
        divisors = [k for k in range(1, p) if (p - 1) % k == 0]
        order = order if order in divisors else self.rng.choice(divisors)
        while True:
            candidate = field(self.rng.randrange(1, p))
            value = field.power(candidate, (p - 1) // order)
            if value:
                return value

    def q_matrix(self, field: ScalarField, n: int,
                 kind: QEntryKind = QEntryKind.RATIONAL) -> QMatrix:
        upper = {}
        for i in range(n):
            for j in range(i + 1, n):
                if kind == QEntryKind.RATIONAL:
                    upper[(i, j)] = self.scalar(field)
                elif kind == QEntryKind.SIGN:
                    upper[(i, j)] = self.rng.choice((field.one, -field.one))
                else:
                    upper[(i, j)] = self.root_of_unity(field)
        return QMatrix.from_upper(field, n, upper)

    def ring(self, n: int, field: Optional[ScalarField] = None,
             kind: QEntryKind = QEntryKind.RATIONAL,
             degrees: Optional[Sequence[int]] = None) -> SkewPolynomialRing:
        field = field or ScalarField(0)
        return SkewPolynomialRing(field, self.q_matrix(field, n, kind), degrees=degrees)

    # -- polynomials ------------------------------------------------------------------

    def homogeneous(self, ring: SkewPolynomialRing, degree: int, terms: int = 3) -> RingElement:
        """A random homogeneous element with up to the given number of terms."""
        monomials = list(ring.monomials_of_degree(degree))
        if not monomials:
            return ring.zero()
        chosen = self.rng.sample(monomials, min(terms, len(monomials)))
        return ring.element({m: self.scalar(ring.field) for m in chosen})

    def normal(self, ring: SkewPolynomialRing, degree: int, terms: int = 3) -> RingElement:
        """A random homogeneous normal element: its support lies in one color class."""
        monomials = list(ring.monomials_of_degree(degree))
        if not monomials:
            return ring.zero()
        anchor = self.rng.choice(monomials)
        signature = ring.color_signature(anchor)
        same = [m for m in monomials if m != anchor and ring.color_signature(m) == signature]
        chosen = [anchor] + self.rng.sample(same, min(terms - 1, len(same)))
        return ring.element({m: self.scalar(ring.field) for m in chosen})

    def monomial(self, ring: SkewPolynomialRing, degree: int) -> Monomial:
        return self.rng.choice(ring.monomials_of_degree(degree))

    def normal_monomial_sequence(self, ring: SkewPolynomialRing, length: int,
                                 max_degree: int = 3) -> List[RingElement]:
        return [ring.monomial(self.monomial(ring, self.rng.randint(1, max_degree)))
                for _ in range(length)]

    # -- DG elements ------------------------------------------------------------------

    def dg_element(self, algebra: SemiFreeExtension, hdeg: int, ideg: int,
                   max_terms: int = 3) -> DGElement:
        """A random trihomogeneous element: support within one color class of a stratum."""
        classes = list(stratum_classes(algebra, hdeg, ideg))
        if not classes:
            return algebra.zero()
        basis = stratum(algebra, hdeg, ideg, self.rng.choice(classes)).basis
        chosen = self.rng.sample(list(basis), min(max_terms, len(basis)))
        return algebra.element({term: self.scalar(algebra.field) for term in chosen})


def quantum_complete_intersection(ring: SkewPolynomialRing, exponents: Sequence[int],
                                  degree_bound: int) -> QuotientRing:
    """Q / (x_1^a_1, ..., x_n^a_n)."""
    relations = [ring.monomial(tuple(a if k == i else 0 for k in range(ring.n)))
                 for i, a in enumerate(exponents)]
    return QuotientRing(ring, relations, degree_bound)


def brute_force_is_normal(ring: SkewPolynomialRing, f: RingElement) -> bool:
    """Whether f x_j = beta_j x_j f for some scalar beta_j, for every j."""
    for x in ring.variables():
        right = ring.multiply(f, x).terms
        left = ring.multiply(x, f).terms
        if set(right) != set(left):
            return False
        ratios = {right[m] / left[m] for m in right}
        if len(ratios) > 1:
            return False
    return True

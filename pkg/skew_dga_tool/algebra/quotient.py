"""
Quotients of skew polynomial rings by normal elements.

Degree-truncated Groebner bases with q-twist scalars, normal forms, graded
standard-monomial bases, Hilbert series, the augmentation and the test for
regular sequences of normal elements.

Because every generator is normal, the two-sided ideal it generates equals the
left ideal of its left multiples, so a left Buchberger procedure is enough.
"""

import heapq
import logging
from dataclasses import dataclass, field
from typing import Dict, List, Optional, Sequence, Tuple

from skew_dga_tool.algebra.field import Scalar
from skew_dga_tool.algebra.linalg import rank_of_vectors
from skew_dga_tool.algebra.series import TruncatedSeries
from skew_dga_tool.algebra.skewpoly import (
    Monomial, RingElement, SkewPolynomialRing, accumulate, add_vectors, divides, subtract_vectors
)
from skew_dga_tool.core.exceptions import (
    HomogeneityError, NormalityError, TruncationError, ZeroElementError, DimensionMismatchError
)

logger = logging.getLogger(__name__)


def _validate_generator(ring: SkewPolynomialRing, f: RingElement, operation: str):
    if f.ring != ring:
        raise DimensionMismatchError("generator belongs to another ring", operation=operation)
    if f.is_zero():
        raise ZeroElementError("zero generator", operation=operation)
    if not f.is_homogeneous():
        raise HomogeneityError(f"generator {f.to_text()} is not homogeneous",
                               degrees=f.degrees(), operation=operation)
    certificate = ring.is_normal(f)
    if not certificate:
        raise NormalityError(
            f"relation not normal: {f.to_text()}",
            element_text=f.to_text(), variable=certificate.variable,
            monomials=certificate.monomials, operation=operation
        )


@dataclass(frozen=True)
class GroebnerBasis:
    """Reduced, monic, degree-truncated left Groebner basis."""
    ring: SkewPolynomialRing
    generators: Tuple[RingElement, ...]
    degree_bound: int

    @property
    def leading_monomials(self) -> Tuple[Monomial, ...]:
        return tuple(g.leading_monomial() for g in self.generators)

    def divisor_of(self, monomial: Monomial) -> Optional[RingElement]:
        """First generator whose leading monomial divides the given one."""
        for g, lead in zip(self.generators, self.leading_monomials):
            if divides(lead, monomial):
                return g
        return None

    def is_standard(self, monomial: Monomial) -> bool:
        return all(not divides(lead, monomial) for lead in self.leading_monomials)

    def reduce(self, f: RingElement) -> RingElement:
        """Fully reduce f by left multiples of the basis."""
        return RingElement(self.ring, _reduce_terms(self.ring, self.generators, dict(f.terms)))


def _reduce_terms(ring: SkewPolynomialRing, basis: Sequence[RingElement],
                  work: Dict[Monomial, Scalar]) -> Dict[Monomial, Scalar]:
    leads = [(g.leading_monomial(), g) for g in basis]
    remainder: Dict[Monomial, Scalar] = {}
    while work:
        monomial = max(work, key=ring.monomial_key)
        coefficient = work.pop(monomial)
        divisor = next(((lead, g) for lead, g in leads if divides(lead, monomial)), None)
        if divisor is None:
            remainder[monomial] = coefficient
            continue
        lead, g = divisor
        shift = subtract_vectors(monomial, lead)
        factor = coefficient / (ring.twist(shift, lead) * g.terms[lead])
        for term, value in g.terms.items():
            if term == lead:
                continue
            accumulate(work, add_vectors(shift, term), -factor * value * ring.twist(shift, term))
    return remainder


def _monic(f: RingElement) -> RingElement:
    return f.scale(f.ring.field.one / f.leading_coefficient())


class GroebnerBuilder:
    """
    Single-threaded builder of a truncated Groebner basis.

    Critical pairs are processed by the normal strategy: lowest lcm degree
    first, ties broken by the monomial order of the lcm.
    """

    def __init__(self, ring: SkewPolynomialRing, degree_bound: int):
        self.ring = ring
        self.degree_bound = degree_bound
        self.logger = logging.getLogger(__name__)
        self._basis: List[RingElement] = []
        self._queue: List[Tuple[int, Monomial, int, int, int, int]] = []
        self._pending: List[RingElement] = []
        self._counter = 0
        self.pairs_processed = 0

    def _push(self, degree: int, key: Monomial, kind: int, a: int, b: int):
        heapq.heappush(self._queue, (degree, key, kind, a, b, self._counter))
        self._counter += 1

    def add_generator(self, f: RingElement):
        _validate_generator(self.ring, f, "buchberger")
        degree = self.ring.monomial_degree(f.leading_monomial())
        if degree > self.degree_bound:
            self.logger.debug(f"generator {f.to_text()} lies above the truncation {self.degree_bound}")
            return
        self._pending.append(f)
        self._push(degree, f.leading_monomial(), 0, len(self._pending) - 1, -1)

    def _insert(self, f: RingElement):
        f = _monic(f)
        lead = f.leading_monomial()
        index = len(self._basis)
        for other_index, other in enumerate(self._basis):
            lcm = tuple(max(a, b) for a, b in zip(lead, other.leading_monomial()))
            degree = self.ring.monomial_degree(lcm)
            if degree <= self.degree_bound:
                self._push(degree, lcm, 1, other_index, index)
        self._basis.append(f)
        self.logger.debug(f"basis element {index}: {f.to_text()}")

    def s_element(self, i: int, j: int) -> RingElement:
        """S-element of basis elements i and j with cancelling leading terms."""
        f, g = self._basis[i], self._basis[j]
        lead_f, lead_g = f.leading_monomial(), g.leading_monomial()
        lcm = tuple(max(a, b) for a, b in zip(lead_f, lead_g))
        shift_f, shift_g = subtract_vectors(lcm, lead_f), subtract_vectors(lcm, lead_g)
        left = self.ring.multiply(self.ring.monomial(shift_f), f)
        right = self.ring.multiply(self.ring.monomial(shift_g), g)
        left = left.scale(self.ring.field.one / left.terms[lcm])
        right = right.scale(self.ring.field.one / right.terms[lcm])
        return left - right

    def run(self) -> GroebnerBasis:
        while self._queue:
            degree, _, kind, a, b, _ = heapq.heappop(self._queue)
            candidate = self._pending[a] if kind == 0 else self.s_element(a, b)
            self.pairs_processed += kind
            reduced = RingElement(self.ring, _reduce_terms(self.ring, self._basis,
                                                           dict(candidate.terms)))
            if not reduced.is_zero():
                self._insert(reduced)
        generators = self._interreduce()
        self.logger.info(f"Groebner basis: {len(generators)} generators to degree "
                         f"{self.degree_bound} ({self.pairs_processed} pairs)")
        return GroebnerBasis(self.ring, tuple(generators), self.degree_bound)

    def _interreduce(self) -> List[RingElement]:
        minimal = []
        for f in self._basis:
            lead = f.leading_monomial()
            if any(g is not f and divides(g.leading_monomial(), lead)
                   and (g.leading_monomial() != lead or self._basis.index(g) < self._basis.index(f))
                   for g in self._basis):
                continue
            minimal.append(f)
        reduced = []
        for f in minimal:
            others = [g for g in minimal if g is not f]
            tail = dict(f.terms)
            lead = f.leading_monomial()
            head = tail.pop(lead)
            remainder = _reduce_terms(self.ring, others, tail)
            remainder[lead] = head
            reduced.append(_monic(RingElement(self.ring, remainder)))
        return sorted(reduced, key=lambda g: self.ring.monomial_key(g.leading_monomial()))


def buchberger(ring: SkewPolynomialRing, generators: Sequence[RingElement],
               degree_bound: int) -> GroebnerBasis:
    """
    Degree-truncated Groebner basis of the ideal generated by normal elements.

    Args:
        ring: Ambient skew polynomial ring
        generators: Homogeneous normal generators
        degree_bound: Degree D up to which the basis is complete

    Returns:
        Reduced monic basis, complete in degrees <= D

    Raises:
        ZeroElementError: For a zero generator
        NormalityError: For a generator that is not normal
    """
    builder = GroebnerBuilder(ring, degree_bound)
    for f in sorted(generators, key=lambda g: ring.monomial_key(g.leading_monomial())
                    if not g.is_zero() else (-1, ())):
        builder.add_generator(f)
    return builder.run()


class QuotientRing:
    """
    R = Q / (f_1, ..., f_c) for homogeneous normal relations, truncated at degree D.

    Completed quotient rings are immutable; normal forms memoize per monomial.
    """

    def __init__(self, ring: SkewPolynomialRing, relations: Sequence[RingElement],
                 degree_bound: int, basis: Optional[GroebnerBasis] = None):
        """
        Initialize the quotient.

        Args:
            ring: Ambient skew polynomial ring
            relations: Homogeneous normal relations
            degree_bound: Internal truncation degree D
            basis: Precomputed Groebner basis (computed when omitted)
        """
        self.ring = ring
        self.field = ring.field
        self.relations = tuple(relations)
        self.degree_bound = degree_bound
        self.basis = basis if basis is not None else buchberger(ring, self.relations, degree_bound)
        self._monomial_forms: Dict[Monomial, Dict[Monomial, Scalar]] = {}
        self._graded: Dict[int, Tuple[Monomial, ...]] = {}

    def __repr__(self) -> str:
        return (f"QuotientRing(n={self.ring.n}, relations={len(self.relations)}, "
                f"D={self.degree_bound})")

    @property
    def n(self) -> int:
        return self.ring.n

    def _check_degree(self, degree: int, operation: str):
        if degree > self.degree_bound:
            raise TruncationError(f"degree {degree} exceeds the truncation {self.degree_bound}",
                                  requested=degree, bound=self.degree_bound, operation=operation)

    def monomial_normal_form(self, monomial: Monomial) -> Dict[Monomial, Scalar]:
        """Normal form of a single monomial as a term dictionary (shared, do not mutate)."""
        cached = self._monomial_forms.get(monomial)
        if cached is None:
            self._check_degree(self.ring.monomial_degree(monomial), "normal_form")
            cached = _reduce_terms(self.ring, self.basis.generators, {monomial: self.field.one})
            self._monomial_forms[monomial] = cached
        return cached

    def normal_form(self, f: RingElement) -> RingElement:
        """
        Unique reduced representative of f modulo the relations.

        Raises:
            TruncationError: If f has a term above the truncation degree
        """
        out: Dict[Monomial, Scalar] = {}
        for monomial, coefficient in f.terms.items():
            for m, c in self.monomial_normal_form(monomial).items():
                accumulate(out, m, coefficient * c)
        return RingElement(self.ring, out)

    def multiply(self, f: RingElement, g: RingElement) -> RingElement:
        return self.normal_form(self.ring.multiply(f, g))

    def graded_basis(self, d: int) -> Tuple[Monomial, ...]:
        """Standard monomials of degree d, ascending in the monomial order."""
        self._check_degree(d, "graded_basis")
        if d not in self._graded:
            self._graded[d] = tuple(m for m in self.ring.monomials_of_degree(d)
                                    if self.basis.is_standard(m))
        return self._graded[d]

    def hilbert_series(self, bound: Optional[int] = None) -> TruncatedSeries:
        bound = self.degree_bound if bound is None else bound
        self._check_degree(bound, "hilbert_series")
        return TruncatedSeries(tuple(len(self.graded_basis(d)) for d in range(bound + 1)))

    def augment(self, f: RingElement) -> Scalar:
        return augment(f)

    def is_skew_complete_intersection(self) -> "RegularityResult":
        """Whether the relations form a regular sequence, verified to degree D."""
        return is_regular_sequence(self.ring, self.relations, self.degree_bound)


def augment(f: RingElement) -> Scalar:
    """The augmentation to the ground field: the constant-term coefficient."""
    return f.augmentation()


def graded_basis(quotient: QuotientRing, d: int) -> Tuple[Monomial, ...]:
    return quotient.graded_basis(d)


def hilbert_series(quotient: QuotientRing, bound: Optional[int] = None) -> TruncatedSeries:
    return quotient.hilbert_series(bound)


def normal_form(f: RingElement, quotient: QuotientRing) -> RingElement:
    return quotient.normal_form(f)


@dataclass(frozen=True)
class RegularityResult:
    """Outcome of a regular-sequence test, valid up to degree_bound only."""
    regular: bool
    degree_bound: int
    failed_index: Optional[int] = None
    failed_degree: Optional[int] = None
    hilbert: Tuple[Tuple[int, ...], ...] = field(default_factory=tuple)

    def __bool__(self) -> bool:
        return self.regular

    def describe(self) -> str:
        if self.regular:
            return f"regular sequence (verified up to degree {self.degree_bound})"
        return (f"not regular: element {self.failed_index + 1} is a zero divisor "
                f"(Hilbert mismatch in degree {self.failed_degree})")


def is_regular_sequence(ring: SkewPolynomialRing, fs: Sequence[RingElement],
                        degree_bound: int) -> RegularityResult:
    """
    Decide whether fs is a regular sequence of normal elements, up to degree D.

    The j-th element is a nonzerodivisor modulo the earlier ones exactly when
    Hilbert(Q/(f_1..f_j)) = (1 - t^d_j) Hilbert(Q/(f_1..f_(j-1))) degreewise.

    Raises:
        NormalityError: If an entry is not normal
    """
    for f in fs:
        _validate_generator(ring, f, "is_regular_sequence")
    previous = QuotientRing(ring, (), degree_bound).hilbert_series()
    history = [previous.coefficients]
    for index in range(len(fs)):
        current = QuotientRing(ring, fs[:index + 1], degree_bound).hilbert_series()
        history.append(current.coefficients)
        d_j = ring.monomial_degree(fs[index].leading_monomial())
        for d in range(degree_bound + 1):
            expected = previous[d] - (previous[d - d_j] if d >= d_j else 0)
            if current[d] != expected:
                logger.info(f"relation {index + 1} fails regularity in degree {d}: "
                            f"dim {current[d]} != {expected}")
                return RegularityResult(False, degree_bound, index, d, tuple(history))
        previous = current
    return RegularityResult(True, degree_bound, hilbert=tuple(history))


def ideal_dimension_oracle(ring: SkewPolynomialRing, generators: Sequence[RingElement],
                           d: int) -> int:
    """
    Dimension in degree d of the two-sided ideal generated by the given elements.

    Computed by exhaustive linear algebra on the span of all products
    x^M f x^M' of degree d; independent of any Groebner machinery.
    """
    monomials = ring.monomials_of_degree(d)
    index = {m: i for i, m in enumerate(monomials)}
    vectors = []
    for f in generators:
        f_degree = f.internal_degree()
        if f_degree is None or f_degree > d:
            continue
        for left_degree in range(d - f_degree + 1):
            for left in ring.monomials_of_degree(left_degree):
                product = ring.multiply(ring.monomial(left), f)
                for right in ring.monomials_of_degree(d - f_degree - left_degree):
                    shifted = ring.multiply(product, ring.monomial(right))
                    vectors.append({index[m]: c for m, c in shifted.terms.items()})
    return rank_of_vectors(ring.field, vectors, len(monomials))

"""
Unit tests for quotient rings, Groebner bases and regular sequences.
"""

import pytest

from skew_dga_tool.algebra.field import ScalarField
from skew_dga_tool.algebra.quotient import (
    QuotientRing, buchberger, ideal_dimension_oracle, is_regular_sequence
)
from skew_dga_tool.algebra.series import TruncatedSeries, one_plus_t_power, product
from skew_dga_tool.algebra.skewpoly import QMatrix, SkewPolynomialRing
from skew_dga_tool.core.exceptions import NormalityError, TruncationError, ZeroElementError
from skew_dga_tool.testing.ring_generators import (
    QEntryKind, RingGenerator, quantum_complete_intersection
)


def plane(q) -> SkewPolynomialRing:
    field = ScalarField(0)
    return SkewPolynomialRing(field, QMatrix.from_upper(field, 2, {(0, 1): field(q)}))


class TestGroebnerBasis:
    """Test the degree-truncated Groebner basis construction."""

    def test_sign_plane_basis_gains_cubic(self):
        """Test that {x1^2 + x2^2, x1 x2} at q = -1 acquires a generator with leading x2^3."""
        ring = plane(-1)
        x1, x2 = ring.variables()
        basis = buchberger(ring, [x1 ** 2 + x2 ** 2, x1 * x2], 4)

        assert set(basis.leading_monomials) == {(2, 0), (1, 1), (0, 3)}

    def test_generators_are_monic(self):
        """Test that every basis element has leading coefficient 1."""
        ring = plane(-1)
        x1, x2 = ring.variables()
        basis = buchberger(ring, [(x1 ** 2 + x2 ** 2).scale(ring.field(3)), x1 * x2], 4)

        assert all(g.leading_coefficient() == ring.field.one for g in basis.generators)

    def test_monomial_ideal_is_its_own_basis(self):
        """Test that monomial generators need no extra elements."""
        ring = plane(2)
        x1, x2 = ring.variables()
        basis = buchberger(ring, [x1 ** 2, x2 ** 3], 6)

        assert set(basis.leading_monomials) == {(2, 0), (0, 3)}

    def test_rejects_non_normal_generator(self):
        """Test that x1^2 + x2^2 is refused at q = 2."""
        ring = plane(2)
        x1, x2 = ring.variables()

        with pytest.raises(NormalityError, match="relation not normal"):
            buchberger(ring, [x1 ** 2 + x2 ** 2], 4)

    def test_rejects_zero_generator(self):
        """Test that a zero relation is refused."""
        ring = plane(2)

        with pytest.raises(ZeroElementError):
            QuotientRing(ring, [ring.zero()], 3)


class TestQuotientRing:
    """Test normal forms, graded bases and Hilbert series."""

    def setup_method(self):
        """Set up Q/(x1^2 + x2^2, x1 x2) at q = -1."""
        self.ring = plane(-1)
        self.x1, self.x2 = self.ring.variables()
        self.quotient = QuotientRing(self.ring, [self.x1 ** 2 + self.x2 ** 2, self.x1 * self.x2], 4)

    def test_hilbert_series(self):
        """Test the Hilbert series 1, 2, 1, 0, 0."""
        assert self.quotient.hilbert_series().to_list() == [1, 2, 1, 0, 0]

    def test_normal_form_of_leading_monomial(self):
        """Test NF(x1^2) = -x2^2."""
        assert self.quotient.normal_form(self.x1 ** 2) == -(self.x2 ** 2)

    def test_normal_form_kills_ideal_elements(self):
        """Test that elements of the ideal reduce to zero."""
        f = self.x2 * self.x1 + self.x2 ** 3

        assert self.quotient.normal_form(f).is_zero()

    def test_normal_form_is_idempotent(self):
        """Test NF(NF(f)) = NF(f)."""
        f = self.x2 ** 2 + self.x1 * self.x2 + self.x1 ** 2 + self.x2
        once = self.quotient.normal_form(f)

        assert self.quotient.normal_form(once) == once

    def test_graded_basis(self):
        """Test the standard monomials in each degree."""
        assert set(self.quotient.graded_basis(1)) == {(1, 0), (0, 1)}
        assert self.quotient.graded_basis(2) == ((0, 2),)
        assert self.quotient.graded_basis(3) == ()

    def test_polynomial_ring_graded_basis(self):
        """Test that the quotient by nothing has all monomials."""
        quotient = QuotientRing(plane(3), [], 3)

        assert set(quotient.graded_basis(2)) == {(2, 0), (1, 1), (0, 2)}
        assert quotient.hilbert_series().to_list() == [1, 2, 3, 4]

    def test_truncation_error(self):
        """Test that degrees above D are refused."""
        with pytest.raises(TruncationError, match="exceeds the truncation"):
            self.quotient.graded_basis(5)
        with pytest.raises(TruncationError):
            self.quotient.normal_form(self.x2 ** 5)

    def test_product_reduced(self):
        """Test that products land in normal form."""
        product_ = self.quotient.multiply(self.x2, self.x1)

        assert product_.is_zero()

    def test_hypersurface_hilbert_series(self):
        """Test Q/(x1^2) has Hilbert series 1, 2, 2, 2."""
        ring = plane(2)
        quotient = QuotientRing(ring, [ring.variable(0) ** 2], 3)

        assert quotient.hilbert_series().to_list() == [1, 2, 2, 2]

    def test_quantum_complete_intersection(self):
        """Test Q/(x1^2, x2^2) has Hilbert series 1, 2, 1, 0."""
        quotient = quantum_complete_intersection(plane(5), (2, 2), 3)

        assert quotient.hilbert_series().to_list() == [1, 2, 1, 0]

    def test_dimensions_match_ideal_oracle(self):
        """Test dim R_d = dim Q_d - dim I_d against exhaustive linear algebra."""
        generator = RingGenerator(seed=13)
        for _ in range(4):
            ring = generator.ring(3, kind=QEntryKind.SIGN)
            relations = [generator.normal(ring, 2), generator.normal(ring, 2)]
            quotient = QuotientRing(ring, relations, 4)
            for d in range(5):
                expected = len(ring.monomials_of_degree(d)) - ideal_dimension_oracle(
                    ring, relations, d)
                assert len(quotient.graded_basis(d)) == expected

    def test_left_and_right_multiples_reduce_alike(self):
        """Test NF(f + h g) = NF(f + g h) = NF(f) for relations g."""
        generator = RingGenerator(seed=31)
        for _ in range(10):
            ring = generator.ring(3, kind=QEntryKind.SIGN)
            relations = [generator.normal(ring, 2), generator.normal(ring, 2)]
            quotient = QuotientRing(ring, relations, 4)
            f = generator.homogeneous(ring, 4, terms=4)
            expected = quotient.normal_form(f)
            for g in relations:
                h = generator.homogeneous(ring, 2)

                assert quotient.normal_form(f + h * g) == expected
                assert quotient.normal_form(f + g * h) == expected

    def test_normal_form_is_a_homomorphism(self):
        """Test NF(f g) = NF(NF(f) NF(g)) and NF(f + g) = NF(f) + NF(g)."""
        generator = RingGenerator(seed=37)
        for _ in range(10):
            ring = generator.ring(3, kind=QEntryKind.RATIONAL)
            relations = [generator.normal(ring, 2), generator.normal(ring, 3)]
            quotient = QuotientRing(ring, relations, 4)
            f = generator.homogeneous(ring, 2, terms=4)
            g = generator.homogeneous(ring, 2, terms=4)
            nf = quotient.normal_form

            assert nf(f * g) == nf(nf(f) * nf(g))
            assert nf(f + g) == nf(f) + nf(g)


class TestRegularSequences:
    """Test the Hilbert-series regularity criterion."""

    def test_squares_are_regular(self):
        """Test that (x1^2, x2^2) is a regular sequence."""
        ring = plane(2)
        x1, x2 = ring.variables()
        result = is_regular_sequence(ring, [x1 ** 2, x2 ** 2], 5)

        assert result
        assert "regular sequence" in result.describe()

    def test_zero_divisor_detected(self):
        """Test that x1 x2 is a zero divisor modulo x1^2."""
        ring = plane(2)
        x1, x2 = ring.variables()
        result = is_regular_sequence(ring, [x1 ** 2, x1 * x2], 5)

        assert not result
        assert result.failed_index == 1
        assert result.failed_degree == 3

    def test_quotient_ring_shortcut(self):
        """Test QuotientRing.is_skew_complete_intersection."""
        ring = plane(-1)
        x1, x2 = ring.variables()

        assert QuotientRing(ring, [x1 ** 2 + x2 ** 2, x1 * x2], 4).is_skew_complete_intersection()
        assert not QuotientRing(ring, [x1 * x2, x2 ** 2], 4).is_skew_complete_intersection()

    def test_complete_intersection_hilbert_series(self):
        """Test that a regular sequence of monomials gives the product formula."""
        ring = RingGenerator(seed=4).ring(3)
        quotient = quantum_complete_intersection(ring, (2, 3, 2), 8)
        expected = [1, 3, 4, 3, 1, 0, 0, 0, 0]

        assert quotient.hilbert_series().to_list() == expected


class TestTruncatedSeries:
    """Test truncated series arithmetic."""

    def test_multiplication_truncates(self):
        """Test products are cut at the smaller bound."""
        left = TruncatedSeries((1, 1, 1))
        right = TruncatedSeries((1, 2))

        assert (left * right).to_list() == [1, 3]

    def test_binomial_series(self):
        """Test (1 + t)^2 (1 + t^2) up to degree 4."""
        factors = [one_plus_t_power(1, 2, 4), one_plus_t_power(2, 1, 4)]

        assert product(factors, 4).to_list() == [1, 2, 2, 2, 1]

"""
Unit tests for exact scalars and skew polynomial arithmetic.

Tests the ground fields, q-matrix axioms, the twist and bicharacter scalars,
multiplication and the normality test.
"""

import pytest

from skew_dga_tool.algebra.field import ScalarField
from skew_dga_tool.algebra.skewpoly import QMatrix, SkewPolynomialRing
from skew_dga_tool.core.exceptions import (
    ConfigurationError, DimensionMismatchError, HomogeneityError, ZeroElementError
)
from skew_dga_tool.testing.ring_generators import QEntryKind, RingGenerator, brute_force_is_normal


def plane(q, characteristic: int = 0) -> SkewPolynomialRing:
    field = ScalarField(characteristic)
    return SkewPolynomialRing(field, QMatrix.from_upper(field, 2, {(0, 1): field(q)}))


class TestScalarField:
    """Test ScalarField conversion and printing."""

    def test_rational_parsing_and_printing(self):
        """Test that rationals print canonically."""
        field = ScalarField(0)

        assert field.format(field.parse("2/4")) == "1/2"
        assert field.format(field.parse("-3")) == "-3"
        assert field.format(field.fraction(6, 3)) == "2"

    def test_prime_field_printing(self):
        """Test that F_p elements print as representatives 0..p-1."""
        field = ScalarField(7)

        assert field.format(field(-1)) == "6"
        assert field.format(field.parse("1/2")) == "4"

    def test_invalid_characteristic(self):
        """Test that even and composite characteristics are rejected."""
        with pytest.raises(ConfigurationError, match="odd prime"):
            ScalarField(2)
        with pytest.raises(ConfigurationError):
            ScalarField(9)

    def test_power_and_binomial(self):
        """Test negative powers and binomials mapped into the field."""
        field = ScalarField(0)

        assert field.power(field(2), -2) == field.fraction(1, 4)
        assert field.binomial(5, 2) == field(10)
        assert field.binomial(2, 5) == field.zero
        assert ScalarField(5).binomial(5, 1) == ScalarField(5).zero

    def test_bad_literal(self):
        """Test that non-scalar text raises ValueError."""
        with pytest.raises(ValueError, match="not a scalar literal"):
            ScalarField(0).parse("x1")


class TestQMatrix:
    """Test q-matrix validation."""

    def test_from_upper_fills_inverses(self):
        """Test that the lower triangle holds inverses."""
        field = ScalarField(0)
        q = QMatrix.from_upper(field, 3, {(0, 2): field(3)})

        assert q[2][0] == field.fraction(1, 3)
        assert q[0][1] == field.one
        assert q[1][1] == field.one

    def test_diagonal_must_be_one(self):
        """Test that a non-unit diagonal is rejected."""
        field = ScalarField(0)

        with pytest.raises(ConfigurationError, match="diagonal must be 1"):
            QMatrix(field, [[field(2), field(1)], [field(1), field(1)]])

    def test_antisymmetry(self):
        """Test that q[i][j] q[j][i] = 1 is enforced."""
        field = ScalarField(0)

        with pytest.raises(ConfigurationError, match="must equal 1"):
            QMatrix(field, [[field(1), field(2)], [field(2), field(1)]])

    def test_zero_entry(self):
        """Test that zero entries are rejected."""
        field = ScalarField(0)

        with pytest.raises(ConfigurationError, match="nonzero"):
            QMatrix.from_upper(field, 2, {(0, 1): field.zero})


class TestSkewPolynomialRing:
    """Test multiplication, twist and chi."""

    def setup_method(self):
        """Set up the quantum plane with q = 2."""
        self.ring = plane(2)
        self.field = self.ring.field
        self.x1, self.x2 = self.ring.variables()

    def test_defining_relation(self):
        """Test x2 x1 = q21 x1 x2."""
        product = self.x2 * self.x1

        assert product == self.ring.monomial((1, 1), self.field.fraction(1, 2))

    def test_identity(self):
        """Test 1 * f = f."""
        f = self.x1 * self.x2 + self.x2
        assert self.ring.one() * f == f

    def test_square_of_sum(self):
        """Test (x1 + x2)^2 = x1^2 + (1 + 1/q) x1 x2 + x2^2."""
        square = (self.x1 + self.x2) ** 2

        assert square.coefficient((2, 0)) == self.field.one
        assert square.coefficient((1, 1)) == self.field.fraction(3, 2)
        assert square.coefficient((0, 2)) == self.field.one

    def test_chi_examples(self):
        """Test chi on unit vectors, on equal arguments and on (2,1),(0,1)."""
        ring = self.ring

        assert ring.chi((1, 0), (0, 1)) == self.field(2)
        assert ring.chi((3, 5), (3, 5)) == self.field.one
        assert ring.chi((2, 1), (0, 1)) == self.field(4)

    def test_chi_dimension_mismatch(self):
        """Test that vectors of the wrong length are rejected."""
        with pytest.raises(DimensionMismatchError):
            self.ring.chi((1, 0, 0), (0, 1))

    def test_twist_matches_stepwise_reordering(self):
        """Test twist against products of single variables."""
        ring = self.ring
        left = self.x2 ** 2
        right = self.x1 ** 3
        step = ring.one()
        for factor in [self.x2, self.x2, self.x1, self.x1, self.x1]:
            step = step * factor

        assert step.coefficient((3, 2)) == ring.twist((0, 2), (3, 0))
        assert (left * right).coefficient((3, 2)) == self.field.fraction(1, 64)

    def test_twist_cocycle(self):
        """Test twist(I,J) twist(I+J,K) = twist(J,K) twist(I,J+K)."""
        generator = RingGenerator(seed=3)
        ring = generator.ring(3)
        triples = [((1, 2, 0), (0, 1, 3), (2, 0, 1)), ((0, 0, 2), (1, 1, 1), (3, 0, 0))]
        for i, j, k in triples:
            ij = tuple(a + b for a, b in zip(i, j))
            jk = tuple(a + b for a, b in zip(j, k))
            assert ring.twist(i, j) * ring.twist(ij, k) == ring.twist(j, k) * ring.twist(i, jk)

    def test_associativity(self):
        """Test (fg)h = f(gh) on random elements."""
        generator = RingGenerator(seed=11)
        ring = generator.ring(3)
        for _ in range(5):
            f, g, h = (generator.homogeneous(ring, d, 3) for d in (1, 2, 2))
            assert (f * g) * h == f * (g * h)

    def test_color_commutativity(self):
        """Test fg = chi(a, b) gf for normal f, g of colors a, b."""
        generator = RingGenerator(seed=5)
        ring = generator.ring(3, kind=QEntryKind.SIGN)
        for _ in range(5):
            f, g = generator.normal(ring, 2), generator.normal(ring, 3)
            a, b = ring.color_degree(f), ring.color_degree(g)
            assert f * g == (g * f).scale(ring.chi(a, b))

    def test_monomials_of_degree(self):
        """Test weighted monomial enumeration."""
        field = ScalarField(0)
        ring = SkewPolynomialRing(field, QMatrix.from_upper(field, 2), degrees=(1, 2))

        assert set(ring.monomials_of_degree(4)) == {(4, 0), (2, 1), (0, 2)}
        assert ring.monomials_of_degree(-1) == ()

    def test_monomial_order(self):
        """Test that x1^2 > x1 x2 > x2^2 and lower degrees come first."""
        key = self.ring.monomial_key

        assert key((2, 0)) > key((1, 1)) > key((0, 2)) > key((1, 0))

    def test_to_text(self):
        """Test printing with rational coefficients."""
        f = self.x1 ** 2 - self.x1 * self.x2.scale(self.field.fraction(1, 2))

        assert f.to_text() == "x1^2 - 1/2*x1*x2"
        assert self.ring.zero().to_text() == "0"


class TestNormality:
    """Test color_degree and is_normal."""

    def test_monomial_color(self):
        """Test that a monomial's color is its exponent vector."""
        ring = plane(2)
        assert ring.color_degree(ring.monomial((2, 1))) == (2, 1)

    def test_constant_color(self):
        """Test that constants have the zero color."""
        ring = plane(2)
        assert ring.color_degree(ring.constant(5)) == (0, 0)

    def test_zero_has_no_color(self):
        """Test that the zero element is rejected."""
        with pytest.raises(ZeroElementError):
            plane(2).color_degree(plane(2).zero())

    def test_sum_of_squares_generic_q(self):
        """Test that x1^2 + x2^2 is not normal for q = 2."""
        ring = plane(2)
        f = ring.monomial((2, 0)) + ring.monomial((0, 2))

        assert ring.color_degree(f) is None
        certificate = ring.is_normal(f)
        assert not certificate
        assert certificate.variable is not None

    def test_sum_of_squares_sign_q(self):
        """Test that x1^2 + x2^2 is normal for q = -1 with beta = (1, 1)."""
        ring = plane(-1)
        f = ring.monomial((2, 0)) + ring.monomial((0, 2))
        certificate = ring.is_normal(f)

        assert certificate
        assert certificate.betas == (ring.field.one, ring.field.one)

    def test_betas_satisfy_commutation(self):
        """Test f x_j = beta_j x_j f for the certificate scalars."""
        ring = plane(3)
        f = ring.monomial((1, 2))
        certificate = ring.is_normal(f)
        for j, x in enumerate(ring.variables()):
            assert f * x == (x * f).scale(certificate.betas[j])

    def test_inhomogeneous_rejected(self):
        """Test that normality requires a homogeneous element."""
        ring = plane(2)
        with pytest.raises(HomogeneityError):
            ring.is_normal(ring.monomial((1, 0)) + ring.monomial((1, 1)))

    def test_normal_support_has_trivial_chi(self):
        """Test chi(I, J) = 1 on the support of normal elements."""
        generator = RingGenerator(seed=21)
        ring = generator.ring(3, kind=QEntryKind.SIGN)
        for _ in range(10):
            f = generator.normal(ring, 3, terms=3)
            support = list(f.terms)
            assert all(ring.chi(a, b) == ring.field.one for a in support for b in support)

    def test_agrees_with_brute_force(self):
        """Test is_normal against the beta-existence oracle."""
        generator = RingGenerator(seed=7)
        for trial in range(200):
            ring = generator.ring(2 + trial % 2, kind=QEntryKind.SIGN if trial % 3 else
                                  QEntryKind.RATIONAL)
            f = generator.homogeneous(ring, 1 + trial % 4, terms=3)
            if f.is_zero():
                continue
            assert bool(ring.is_normal(f)) == brute_force_is_normal(ring, f)

    def test_prime_field_roots_of_unity(self):
        """Test normality over F_7 with a root of unity."""
        field = ScalarField(7)
        ring = SkewPolynomialRing(field, QMatrix.from_upper(field, 2, {(0, 1): field(2)}))
        f = ring.monomial((3, 0)) + ring.monomial((0, 3))

        assert bool(ring.is_normal(f)) == brute_force_is_normal(ring, f)

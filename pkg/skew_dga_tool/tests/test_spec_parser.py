"""
Unit tests for ring-spec parsing and the RingSpec model.
"""

import pytest

from skew_dga_tool.core.exceptions import SpecParseError
from skew_dga_tool.models.ring_spec import QEntry, RingSpec, VariableSpec
from skew_dga_tool.tools.spec_parser import (
    build_quotient, build_ring, parse_polynomial, parse_ring_spec, print_ring_spec, tokenize
)

SIGN_PLANE = """\
# quantum plane at q = -1
field QQ
var x1 deg 1
var x2 deg 1
q 1 2 -1

rel x1^2 + x2^2
rel x1*x2
bounds hdeg 4 ideg 6
"""


class TestParseRingSpec:
    """Test parse_ring_spec on valid input."""

    def test_parses_sign_plane(self):
        """Test fields, variables, q entries, relations and bounds."""
        spec = parse_ring_spec(SIGN_PLANE)

        assert spec.field.characteristic == 0
        assert [v.name for v in spec.variables] == ["x1", "x2"]
        assert spec.q_entries == [QEntry(i=1, j=2, value="-1")]
        assert spec.relations == ["x1^2 + x2^2", "x1*x2"]
        assert (spec.hdeg, spec.ideg) == (4, 6)
        assert (spec.n, spec.c) == (2, 2)

    def test_print_round_trip(self):
        """Test that printing and re-parsing gives back the same spec."""
        spec = parse_ring_spec(SIGN_PLANE)
        printed = print_ring_spec(spec)

        assert printed == ("field QQ\nvar x1 deg 1\nvar x2 deg 1\nq 1 2 -1\n"
                           "rel x1^2 + x2^2\nrel x1*x2\nbounds hdeg 4 ideg 6\n")
        assert parse_ring_spec(printed) == spec

    def test_relations_are_canonicalized(self):
        """Test that relations print in canonical form."""
        spec = parse_ring_spec("var a deg 1\nvar b deg 1\nq 1 2 2\nrel b*a\nrel 2/4*a^2\n")

        assert spec.relations == ["1/2*a*b", "1/2*a^2"]

    def test_lower_q_entry_is_inverted(self):
        """Test that q 2 1 s is stored as q 1 2 1/s."""
        spec = parse_ring_spec("var x1 deg 1\nvar x2 deg 1\nq 2 1 3\n")

        assert spec.q_entries == [QEntry(i=1, j=2, value="1/3")]

    def test_unit_diagonal_accepted(self):
        """Test that q i i 1 is allowed and dropped."""
        spec = parse_ring_spec("var x1 deg 1\nq 1 1 1\n")

        assert spec.q_entries == []

    def test_prime_field(self):
        """Test GF(p) scalars print as representatives."""
        spec = parse_ring_spec("field GF 7\nvar x1 deg 1\nvar x2 deg 1\nq 1 2 -1\n")

        assert spec.field.characteristic == 7
        assert spec.q_entries[0].value == "6"

    def test_weighted_degrees(self):
        """Test relations homogeneous for weighted degrees."""
        spec = parse_ring_spec("var x deg 1\nvar y deg 2\nrel x^2*y - y^2\n")

        assert spec.relations == ["x^2*y - y^2"]

    def test_build_quotient(self):
        """Test building the quotient ring from a spec."""
        quotient = build_quotient(parse_ring_spec(SIGN_PLANE), 4)

        assert quotient.hilbert_series().to_list() == [1, 2, 1, 0, 0]
        assert build_ring(parse_ring_spec(SIGN_PLANE)).names == ("x1", "x2")


class TestParseErrors:
    """Test that malformed specs are rejected with positions."""

    def test_diagonal_must_be_one(self):
        """Test the diagonal axiom."""
        with pytest.raises(SpecParseError, match=r"diagonal must be 1 \(entry 1,1\)") as info:
            parse_ring_spec("var x1 deg 1\nvar x2 deg 1\nq 1 1 2\n")
        assert info.value.line == 3

    def test_not_normal(self):
        """Test that a non-normal relation names the separating variable."""
        text = "var x1 deg 1\nvar x2 deg 1\nq 1 2 2\nrel x1^2 + x2^2\n"

        with pytest.raises(SpecParseError, match="relation not normal") as info:
            parse_ring_spec(text)
        assert "variable x1 separates" in info.value.message
        assert info.value.line == 4

    def test_linear_relation_not_normal(self):
        """Test that x1 + x2 is not normal for generic q."""
        with pytest.raises(SpecParseError, match="relation not normal: x1 \\+ x2"):
            parse_ring_spec("var x1 deg 1\nvar x2 deg 1\nq 1 2 3\nrel x1 + x2\n")

    def test_not_homogeneous(self):
        """Test that inhomogeneous relations are rejected."""
        with pytest.raises(SpecParseError, match="not homogeneous"):
            parse_ring_spec("var x1 deg 1\nrel x1^2 + x1\n")

    def test_zero_relation(self):
        """Test that zero relations are rejected."""
        with pytest.raises(SpecParseError, match="relation is zero"):
            parse_ring_spec("var x1 deg 1\nrel x1 - x1\n")

    def test_unknown_variable_column(self):
        """Test the column of an unknown variable."""
        with pytest.raises(SpecParseError, match="unknown variable 'x3'") as info:
            parse_ring_spec("var x1 deg 1\nrel x3\n")
        assert (info.value.line, info.value.column) == (2, 5)

    def test_unexpected_character(self):
        """Test stray characters in relations."""
        with pytest.raises(SpecParseError, match="unexpected character"):
            parse_ring_spec("var x1 deg 1\nrel x1 $ x1\n")

    def test_unknown_directive(self):
        """Test unknown keywords."""
        with pytest.raises(SpecParseError, match="unknown directive 'variable'"):
            parse_ring_spec("variable x1\n")

    def test_bad_field(self):
        """Test that GF 4 is not a field here."""
        with pytest.raises(SpecParseError, match="odd prime"):
            parse_ring_spec("field GF 4\nvar x1 deg 1\n")

    def test_no_variables(self):
        """Test that a spec needs variables."""
        with pytest.raises(SpecParseError, match="no variables declared"):
            parse_ring_spec("field QQ\n")

    def test_duplicate_variable(self):
        """Test duplicate variable names."""
        with pytest.raises(SpecParseError, match="duplicate variable names"):
            parse_ring_spec("var x1 deg 1\nvar x1 deg 1\n")

    def test_zero_degree(self):
        """Test that degrees must be positive."""
        with pytest.raises(SpecParseError):
            parse_ring_spec("var x1 deg 0\n")

    def test_q_entry_out_of_range(self):
        """Test q indices beyond n."""
        with pytest.raises(SpecParseError, match="outside 1..2"):
            parse_ring_spec("var x1 deg 1\nvar x2 deg 1\nq 1 3 2\n")

    def test_zero_q_entry(self):
        """Test that q entries must be nonzero."""
        with pytest.raises(SpecParseError, match="must be nonzero"):
            parse_ring_spec("var x1 deg 1\nvar x2 deg 1\nq 1 2 0\n")

    def test_bad_bounds(self):
        """Test malformed bounds lines."""
        with pytest.raises(SpecParseError, match="unknown bound 'depth'"):
            parse_ring_spec("var x1 deg 1\nbounds depth 3\n")

    def test_str_carries_position(self):
        """Test that the message includes line and column."""
        with pytest.raises(SpecParseError) as info:
            parse_ring_spec("var x1 deg 1\nrel x1 +\n")
        assert "(line 2, column" in str(info.value)


class TestPolynomialParser:
    """Test polynomial parsing in the written order."""

    def setup_method(self):
        """Set up the quantum plane with q = 2."""
        self.ring = build_ring(parse_ring_spec("var x1 deg 1\nvar x2 deg 1\nq 1 2 2\n"))

    def test_written_order(self):
        """Test x2*x1 = 1/2 x1 x2."""
        assert parse_polynomial(self.ring, "x2*x1").to_text() == "1/2*x1*x2"

    def test_parentheses_and_powers(self):
        """Test (x1 + x2)^2."""
        f = parse_polynomial(self.ring, "(x1 + x2)^2")

        assert f.to_text() == "x1^2 + 3/2*x1*x2 + x2^2"

    def test_leading_minus(self):
        """Test a leading unary minus."""
        assert parse_polynomial(self.ring, "-x1 + 3*x2").to_text() == "-x1 + 3*x2"

    def test_bad_exponent(self):
        """Test non-integer exponents."""
        with pytest.raises(SpecParseError, match="exponent"):
            parse_polynomial(self.ring, "x1^x2")

    def test_tokenize_columns(self):
        """Test token columns with an offset."""
        tokens = tokenize("x1 + 2", offset=4)

        assert [(t.kind, t.column) for t in tokens] == [("name", 5), ("+", 8), ("number", 10),
                                                        ("end", 11)]


class TestRingSpecModel:
    """Test RingSpec validation."""

    def test_q_entry_order(self):
        """Test that q entries need i < j."""
        with pytest.raises(ValueError):
            QEntry(i=2, j=1, value="2")

    def test_q_entries_sorted(self):
        """Test that q entries are kept sorted."""
        spec = RingSpec(variables=[VariableSpec(name=n) for n in ("a", "b", "c")],
                        q_entries=[QEntry(i=2, j=3, value="2"), QEntry(i=1, j=2, value="3")])

        assert [(e.i, e.j) for e in spec.q_entries] == [(1, 2), (2, 3)]

    def test_invalid_name(self):
        """Test that names must be identifiers."""
        with pytest.raises(ValueError):
            VariableSpec(name="1x")

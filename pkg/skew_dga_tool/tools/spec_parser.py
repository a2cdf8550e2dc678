"""
Ring-spec parsing for the skew DGA tool.

The format is line oriented:

    field QQ | field GF <p>
    var <name> deg <d>              one line per variable, in order
    q <i> <j> <scalar>              1-based, i < j; missing pairs commute
    rel <polynomial>                '*' products, '^' powers, a or a/b scalars
    bounds hdeg <N> ideg <D>        optional

Blank lines and lines starting with '#' are ignored. Every error carries the
line and column it was detected at.
"""

import logging
import re
from dataclasses import dataclass
from typing import Dict, List, Optional, Tuple

from pydantic import ValidationError

from skew_dga_tool.algebra.field import Scalar, ScalarField
from skew_dga_tool.algebra.quotient import QuotientRing
from skew_dga_tool.algebra.skewpoly import QMatrix, RingElement, SkewPolynomialRing
from skew_dga_tool.core.exceptions import AlgebraError, SpecParseError
from skew_dga_tool.models.ring_spec import FieldSpec, QEntry, RingSpec, VariableSpec

logger = logging.getLogger(__name__)

_TOKEN_PATTERN = re.compile(r"(\d+)|([A-Za-z_][A-Za-z_0-9]*)|(\S)")


@dataclass
class Token:
    kind: str
    text: str
    column: int


def tokenize(text: str, line: Optional[int] = None, offset: int = 0) -> List[Token]:
    """Split polynomial text into numbers, names and operators; columns are 1-based."""
    tokens = []
    for match in _TOKEN_PATTERN.finditer(text):
        number, name, symbol = match.groups()
        column = offset + match.start() + 1
        if number is not None:
            tokens.append(Token("number", number, column))
        elif name is not None:
            tokens.append(Token("name", name, column))
        elif symbol is not None:
            if symbol not in "+-*^/()":
                raise SpecParseError(f"unexpected character '{symbol}'", line=line, column=column)
            tokens.append(Token(symbol, symbol, column))
    tokens.append(Token("end", "", offset + len(text) + 1))
    return tokens


class PolynomialParser:
    """
    Recursive-descent parser for polynomials in a skew polynomial ring.

    Products are taken in the written order, so 'x2*x1' is q21 x1 x2.
    """

    def __init__(self, ring: SkewPolynomialRing, line: Optional[int] = None):
        self.ring = ring
        self.line = line
        self._names = {name: i for i, name in enumerate(ring.names)}
        self._tokens: List[Token] = []
        self._index = 0

    def parse(self, text: str, offset: int = 0) -> RingElement:
        """
        Parse polynomial text.

        Args:
            text: Polynomial text
            offset: Column offset of the text within its line

        Raises:
            SpecParseError: On syntax errors or unknown variables
        """
        self._tokens = tokenize(text, self.line, offset)
        self._index = 0
        if self._peek().kind == "end":
            raise self._error("empty polynomial")
        value = self._expression()
        if self._peek().kind != "end":
            raise self._error(f"unexpected '{self._peek().text}'")
        return value

    def _peek(self) -> Token:
        return self._tokens[self._index]

    def _next(self) -> Token:
        token = self._tokens[self._index]
        self._index += 1
        return token

    def _error(self, message: str, token: Optional[Token] = None) -> SpecParseError:
        token = token or self._peek()
        return SpecParseError(message, line=self.line, column=token.column)

    def _expression(self) -> RingElement:
        negative = False
        if self._peek().kind in ("+", "-"):
            negative = self._next().kind == "-"
        value = self._term()
        if negative:
            value = -value
        while self._peek().kind in ("+", "-"):
            operator = self._next().kind
            term = self._term()
            value = value + term if operator == "+" else value - term
        return value

    def _term(self) -> RingElement:
        value = self._factor()
        while self._peek().kind == "*":
            self._next()
            value = self.ring.multiply(value, self._factor())
        return value

    def _factor(self) -> RingElement:
        value = self._atom()
        if self._peek().kind == "^":
            self._next()
            token = self._next()
            if token.kind != "number":
                raise self._error("exponent must be a nonnegative integer", token)
            value = value ** int(token.text)
        return value

    def _atom(self) -> RingElement:
        token = self._next()
        if token.kind == "number":
            numerator, denominator = int(token.text), 1
            if self._peek().kind == "/":
                self._next()
                below = self._next()
                if below.kind != "number":
                    raise self._error("denominator must be an integer", below)
                denominator = int(below.text)
            try:
                return self.ring.constant(self.ring.field.fraction(numerator, denominator))
            except ZeroDivisionError as e:
                raise self._error(str(e), token)
        if token.kind == "name":
            if token.text not in self._names:
                raise self._error(f"unknown variable '{token.text}'", token)
            return self.ring.variable(self._names[token.text])
        if token.kind == "(":
            value = self._expression()
            closing = self._next()
            if closing.kind != ")":
                raise self._error("expected ')'", closing)
            return value
        raise self._error(f"unexpected '{token.text or 'end of line'}'", token)


def parse_polynomial(ring: SkewPolynomialRing, text: str, line: Optional[int] = None,
                     offset: int = 0) -> RingElement:
    return PolynomialParser(ring, line).parse(text, offset)


def _integer(word: str, line: int, column: int, what: str) -> int:
    if not re.fullmatch(r"\d+", word):
        raise SpecParseError(f"{what} must be a nonnegative integer, got '{word}'",
                             line=line, column=column)
    return int(word)


def _split(line_text: str) -> List[Tuple[str, int]]:
    """Whitespace-separated words with their 1-based columns."""
    return [(m.group(0), m.start() + 1) for m in re.finditer(r"\S+", line_text)]


def parse_ring_spec(text: str) -> RingSpec:
    """
    Parse and validate a ring specification.

    Relations are parsed in the ambient skew ring with the declared variable
    order and stored in canonical printed form.

    Args:
        text: Ring-spec text

    Returns:
        Validated RingSpec

    Raises:
        SpecParseError: On syntax errors, q-matrix axiom violations and
            zero, inhomogeneous or non-normal relations
    """
    characteristic: Optional[int] = None
    field_line = 0
    variables: List[VariableSpec] = []
    q_raw: List[Tuple[int, int, int, str, int]] = []
    relations_raw: List[Tuple[int, int, str]] = []
    bounds: Dict[str, int] = {}

    for number, raw in enumerate(text.splitlines(), start=1):
        stripped = raw.strip()
        if not stripped or stripped.startswith("#"):
            continue
        words = _split(raw)
        keyword, keyword_column = words[0]
        if keyword == "field":
            if characteristic is not None:
                raise SpecParseError("field given twice", line=number, column=keyword_column)
            if len(words) == 2 and words[1][0] == "QQ":
                characteristic = 0
            elif len(words) == 3 and words[1][0] == "GF":
                characteristic = _integer(words[2][0], number, words[2][1], "characteristic")
            else:
                raise SpecParseError("expected 'field QQ' or 'field GF <p>'", line=number,
                                     column=keyword_column)
            field_line = number
        elif keyword == "var":
            if len(words) != 4 or words[2][0] != "deg":
                raise SpecParseError("expected 'var <name> deg <d>'", line=number,
                                     column=keyword_column)
            degree = _integer(words[3][0], number, words[3][1], "degree")
            try:
                variables.append(VariableSpec(name=words[1][0], degree=degree))
            except ValidationError as e:
                raise SpecParseError(e.errors()[0]["msg"], line=number, column=words[1][1])
        elif keyword == "q":
            if len(words) != 4:
                raise SpecParseError("expected 'q <i> <j> <scalar>'", line=number,
                                     column=keyword_column)
            i = _integer(words[1][0], number, words[1][1], "row index")
            j = _integer(words[2][0], number, words[2][1], "column index")
            q_raw.append((number, i, j, words[3][0], words[3][1]))
        elif keyword == "rel":
            body = raw[keyword_column - 1 + len("rel"):]
            relations_raw.append((number, keyword_column + len("rel"), body))
        elif keyword == "bounds":
            rest = words[1:]
            if not rest or len(rest) % 2:
                raise SpecParseError("expected 'bounds hdeg <N> ideg <D>'", line=number,
                                     column=keyword_column)
            for (key, key_column), (value, value_column) in zip(rest[::2], rest[1::2]):
                if key not in ("hdeg", "ideg"):
                    raise SpecParseError(f"unknown bound '{key}'", line=number, column=key_column)
                bounds[key] = _integer(value, number, value_column, key)
        else:
            raise SpecParseError(f"unknown directive '{keyword}'", line=number,
                                 column=keyword_column)

    if not variables:
        raise SpecParseError("no variables declared", line=1, column=1)
    field = _build_field(0 if characteristic is None else characteristic, field_line)
    n = len(variables)

    upper: Dict[Tuple[int, int], Scalar] = {}
    q_lines: Dict[Tuple[int, int], int] = {}
    for number, i, j, scalar_text, column in q_raw:
        if not (1 <= i <= n and 1 <= j <= n):
            raise SpecParseError(f"q entry ({i}, {j}) outside 1..{n}", line=number, column=column)
        try:
            value = field.parse(scalar_text)
        except (ValueError, ZeroDivisionError) as e:
            raise SpecParseError(str(e), line=number, column=column)
        if i == j:
            if value != field.one:
                raise SpecParseError(f"diagonal must be 1 (entry {i},{j})", line=number,
                                     column=column)
            continue
        if not value:
            raise SpecParseError(f"q entry ({i}, {j}) must be nonzero", line=number,
                                 column=column)
        key = (i - 1, j - 1) if i < j else (j - 1, i - 1)
        if key in upper:
            raise SpecParseError(f"q entry ({key[0] + 1}, {key[1] + 1}) given twice",
                                 line=number, column=column)
        upper[key] = value if i < j else field.one / value
        q_lines[key] = number

    try:
        q = QMatrix.from_upper(field, n, upper)
    except AlgebraError as e:
        raise SpecParseError(e.message, line=min(q_lines.values(), default=1), column=1)
    ring = SkewPolynomialRing(field, q, [v.name for v in variables], [v.degree for v in variables])

    relations = []
    for number, column, body in relations_raw:
        f = parse_polynomial(ring, body, number, column - 1)
        _check_relation(ring, f, number, column)
        relations.append(f.to_text())

    try:
        spec = RingSpec(
            field=FieldSpec(characteristic=field.characteristic),
            variables=variables,
            q_entries=[QEntry(i=i + 1, j=j + 1, value=field.format(v))
                       for (i, j), v in sorted(upper.items())],
            relations=relations,
            hdeg=bounds.get("hdeg"),
            ideg=bounds.get("ideg"),
        )
    except ValidationError as e:
        raise SpecParseError(e.errors()[0]["msg"], line=1, column=1)
    logger.debug(f"parsed ring spec: n={spec.n}, c={spec.c}, field={field!r}")
    return spec


def _build_field(characteristic: int, line: int) -> ScalarField:
    try:
        return ScalarField(characteristic)
    except AlgebraError as e:
        raise SpecParseError(e.message, line=line or 1, column=1)


def _check_relation(ring: SkewPolynomialRing, f: RingElement, line: int, column: int):
    """Relations must be nonzero, homogeneous and normal."""
    if f.is_zero():
        raise SpecParseError("relation is zero", line=line, column=column)
    if not f.is_homogeneous():
        raise SpecParseError(f"relation {f.to_text()} is not homogeneous (degrees "
                             f"{', '.join(map(str, sorted(set(f.degrees()))))})",
                             line=line, column=column)
    certificate = ring.is_normal(f)
    if not certificate:
        detail = ""
        if certificate.variable is not None:
            a, b = certificate.monomials
            detail = (f" (variable {ring.names[certificate.variable]} separates "
                      f"{ring.monomial_text(a)} and {ring.monomial_text(b)})")
        raise SpecParseError(f"relation not normal: {f.to_text()}{detail}", line=line,
                             column=column)


def print_ring_spec(spec: RingSpec) -> str:
    """Inverse of parse_ring_spec."""
    return spec.to_text()


def build_ring(spec: RingSpec) -> SkewPolynomialRing:
    field = ScalarField(spec.field.characteristic)
    upper = {(e.i - 1, e.j - 1): field.parse(e.value) for e in spec.q_entries}
    q = QMatrix.from_upper(field, spec.n, upper)
    return SkewPolynomialRing(field, q, [v.name for v in spec.variables],
                              [v.degree for v in spec.variables])


def build_relations(spec: RingSpec, ring: Optional[SkewPolynomialRing] = None) -> List[RingElement]:
    ring = ring or build_ring(spec)
    return [parse_polynomial(ring, text) for text in spec.relations]


def build_quotient(spec: RingSpec, degree_bound: int,
                   ring: Optional[SkewPolynomialRing] = None) -> QuotientRing:
    """The quotient ring of a spec, truncated at internal degree D."""
    ring = ring or build_ring(spec)
    return QuotientRing(ring, build_relations(spec, ring), degree_bound)

"""
The Ext algebra presentation of a skew complete intersection.

Ext_R(k, k) is generated by theta_1..theta_n in cohomological degree 1 and
theta_(n+1)..theta_(n+c) in degree 2. The quadratic parts of the relations,
f_j = sum_{h<=i} a_hij x_h x_i + (higher terms), give the relations

    [theta_l, theta_i] + sum_j eps(a_lij) theta_(n+j)   for l < i <= n
    theta_i^2 + sum_j eps(a_iij) theta_(n+j)            for i <= n
    [theta_l, theta_i]                                  for l < i, i > n

with [a, b] = ab - (-1)^(|a||b|) chi(a, b) ba.
"""

import logging
from dataclasses import dataclass
from enum import Enum
from typing import Dict, List, Tuple

from skew_dga_tool.algebra.field import Scalar
from skew_dga_tool.algebra.quotient import QuotientRing
from skew_dga_tool.algebra.series import (
    TruncatedSeries, inverse_one_minus_t_power, one_plus_t_power, product
)
from skew_dga_tool.algebra.skewpoly import ColorDegree, SkewPolynomialRing
from skew_dga_tool.core.exceptions import PreconditionError

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class ExtGenerator:
    """A generator theta of the Ext algebra."""
    index: int
    degree: int
    ideg: int
    color: ColorDegree

    @property
    def name(self) -> str:
        return f"theta{self.index + 1}"

    def to_dict(self) -> Dict[str, object]:
        return {"name": self.name, "degree": self.degree, "ideg": self.ideg,
                "color": list(self.color)}


class RelationKind(str, Enum):
    BRACKET = "bracket"
    SQUARE = "square"


@dataclass(frozen=True)
class Relation:
    """[theta_left, theta_right] (or theta_left^2) plus a linear combination of generators."""
    kind: RelationKind
    left: int
    right: int
    linear: Tuple[Tuple[int, Scalar], ...] = ()


@dataclass
class ExtPresentation:
    """Generators and relations of Ext_R(k, k) for a skew complete intersection."""
    ring: SkewPolynomialRing
    generators: Tuple[ExtGenerator, ...]
    relations: Tuple[Relation, ...]
    n: int
    c: int

    def chi(self, a: int, b: int) -> Scalar:
        return self.ring.chi(self.generators[a].color, self.generators[b].color)

    def bracket_scalar(self, a: int, b: int) -> Scalar:
        """(-1)^(|a||b|) chi(a, b), the coefficient of ba in [a, b]."""
        ga, gb = self.generators[a], self.generators[b]
        return self.ring.field.sign(ga.degree * gb.degree) * self.chi(a, b)

    def relation_degree(self, relation: Relation) -> int:
        return self.generators[relation.left].degree + self.generators[relation.right].degree

    def relation_ideg(self, relation: Relation) -> int:
        return self.generators[relation.left].ideg + self.generators[relation.right].ideg

    def relation_text(self, relation: Relation) -> str:
        """Expanded text, e.g. 'theta1*theta2 - 2*theta2*theta1 + theta3'."""
        field = self.ring.field
        left, right = self.generators[relation.left].name, self.generators[relation.right].name
        if relation.kind == RelationKind.SQUARE:
            terms: List[Tuple[Scalar, str]] = [(field.one, f"{left}^2")]
        else:
            terms = [(field.one, f"{left}*{right}"),
                     (-self.bracket_scalar(relation.left, relation.right), f"{right}*{left}")]
        terms.extend((c, self.generators[g].name) for g, c in relation.linear)
        return format_linear(field, terms)

    def to_text(self) -> str:
        lines = ["generators: " + ", ".join(
            f"{g.name} (degree {g.degree}, deg {g.ideg}, color [{','.join(map(str, g.color))}])"
            for g in self.generators)]
        lines.extend(f"relation: {self.relation_text(r)}" for r in self.relations)
        return "\n".join(lines)

    def to_dict(self) -> Dict[str, object]:
        return {
            "generators": [g.to_dict() for g in self.generators],
            "relations": [self.relation_text(r) for r in self.relations],
            "n": self.n,
            "c": self.c,
        }


def format_linear(field, terms) -> str:
    """Print sum c * name, dropping zero terms and unit coefficients."""
    pieces: List[str] = []
    for coefficient, name in terms:
        if not coefficient:
            continue
        text = field.format(coefficient)
        negative = field.characteristic == 0 and text.startswith("-")
        if negative:
            text = text[1:]
        body = name if text == "1" else f"{text}*{name}"
        if not pieces:
            pieces.append(f"-{body}" if negative else body)
        else:
            pieces.append(f"- {body}" if negative else f"+ {body}")
    return " ".join(pieces) if pieces else "0"


def quadratic_coefficients(base: QuotientRing) -> Dict[Tuple[int, int, int], Scalar]:
    """eps(a_hij): the coefficient of x_h x_i (h <= i) in f_j, nonzero entries only."""
    ring = base.ring
    out: Dict[Tuple[int, int, int], Scalar] = {}
    for j, f in enumerate(base.relations):
        for monomial, coefficient in f.terms.items():
            if sum(monomial) != 2:
                continue
            support = [i for i, e in enumerate(monomial) for _ in range(e)]
            h, i = support[0], support[1]
            out[(h, i, j)] = coefficient
    logger.debug(f"quadratic coefficients over {ring!r}: {len(out)} nonzero")
    return out


def ext_presentation(base: QuotientRing, check_regularity: bool = True) -> ExtPresentation:
    """
    The presentation of Ext_R(k, k) for a skew complete intersection.

    Args:
        base: Quotient by a regular sequence of normal relations in (x)^2
        check_regularity: Verify the regular-sequence condition up to D first

    Raises:
        PreconditionError: If R is not a verified skew complete intersection,
            or a relation has a term of degree below two
    """
    ring = base.ring
    for f in base.relations:
        if any(sum(m) < 2 for m in f.terms):
            raise PreconditionError(f"relation {f.to_text()} has a term of degree below two",
                                    precondition="relations_in_square_of_maximal_ideal",
                                    operation="ext_presentation")
    if check_regularity:
        regularity = base.is_skew_complete_intersection()
        if not regularity:
            raise PreconditionError(f"not a skew complete intersection: {regularity.describe()}",
                                    precondition="skew_complete_intersection",
                                    operation="ext_presentation")
    n, c = ring.n, len(base.relations)
    generators = [ExtGenerator(i, 1, ring.degrees[i], tuple(-e for e in ring.unit_vector(i)))
                  for i in range(n)]
    for j, f in enumerate(base.relations):
        color = ring.color_degree(f)
        generators.append(ExtGenerator(n + j, 2, f.internal_degree(), tuple(-e for e in color)))

    coefficients = quadratic_coefficients(base)
    relations: List[Relation] = []
    for i in range(n):
        for h in range(i + 1):
            linear = tuple((n + j, coefficients[(h, i, j)]) for j in range(c)
                           if (h, i, j) in coefficients)
            kind = RelationKind.SQUARE if h == i else RelationKind.BRACKET
            relations.append(Relation(kind, h, i, linear))
    for i in range(n, n + c):
        for h in range(i):
            relations.append(Relation(RelationKind.BRACKET, h, i))
    presentation = ExtPresentation(ring, tuple(generators), tuple(relations), n, c)
    logger.info(f"Ext presentation: {n + c} generators, {len(relations)} relations")
    return presentation


def upi_dimensions(presentation: ExtPresentation, hdeg_bound: int) -> TruncatedSeries:
    """
    Number of PBW normal monomials in each cohomological degree up to N.

    Degree-one generators carry exponents in {0, 1}, degree-two generators any
    exponent, giving the coefficients of (1 + t)^n / (1 - t^2)^c.
    """
    factors = []
    for generator in presentation.generators:
        if generator.degree % 2:
            factors.append(one_plus_t_power(generator.degree, 1, hdeg_bound))
        else:
            factors.append(inverse_one_minus_t_power(generator.degree, 1, hdeg_bound))
    return product(factors, hdeg_bound)

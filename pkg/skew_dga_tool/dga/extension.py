"""
Semi-free extensions R<Y> of a quotient ring.

Elements are sparse maps (word, standard monomial) -> scalar, read as
scalar * x^m * word with the ring coefficient on the left. All sign and
bicharacter bookkeeping goes through ``word_product`` (variable
transpositions) and ``multiply_terms`` (moving ring coefficients left), which
both the product and the differential use.
"""

import logging
from typing import Dict, Iterable, List, Mapping, Optional, Sequence, Tuple

from skew_dga_tool.algebra.field import Scalar
from skew_dga_tool.algebra.quotient import QuotientRing
from skew_dga_tool.algebra.skewpoly import (
    ColorDegree, Monomial, RingElement, accumulate, add_vectors
)
from skew_dga_tool.core.exceptions import (
    CycleError, DimensionMismatchError, HomogeneityError, PreconditionError, TruncationError
)
from skew_dga_tool.dga.words import (
    EMPTY_WORD, DGVariable, Word, is_valid_word, word_color, word_hdeg, word_ideg, word_text
)

logger = logging.getLogger(__name__)

Term = Tuple[Word, Monomial]
Terms = Dict[Term, Scalar]


class SemiFreeExtension:
    """
    The DG algebra R<y_1, ..., y_m> with differential determined by the d(y_j).

    Extensions are immutable. ``adjoin_variable`` returns a new extension that
    inherits every memo table still valid for it.
    """

    def __init__(self, base: QuotientRing, variables: Sequence[DGVariable] = (),
                 boundaries: Sequence[Mapping[Term, Scalar]] = (),
                 hdeg_bound: Optional[int] = None, _parent: Optional["SemiFreeExtension"] = None):
        """
        Initialize the extension.

        Args:
            base: Quotient ring R in homological degree zero
            variables: Adjoined variables ordered by homological degree
            boundaries: Term maps of d(y_j), one per variable
            hdeg_bound: Homological truncation N (None for no bound)
        """
        if len(variables) != len(boundaries):
            raise DimensionMismatchError("every variable needs a differential",
                                         expected=len(variables), actual=len(boundaries))
        self.base = base
        self.ring = base.ring
        self.field = base.field
        self.variables: Tuple[DGVariable, ...] = tuple(variables)
        self._boundaries: Tuple[Terms, ...] = tuple(dict(b) for b in boundaries)
        self.hdeg_bound = hdeg_bound
        self.degree_bound = base.degree_bound
        self.logger = logging.getLogger(__name__)

        self._products: Dict[Tuple[Word, Word], Optional[Tuple[Scalar, Word]]] = {}
        self._differentials: Dict[Word, Terms] = {}
        self._colors: Dict[Word, ColorDegree] = {}
        self._words: Dict[int, Dict[int, Tuple[Word, ...]]] = {}
        self.strata_cache: Dict[Tuple, object] = {}
        if _parent is not None:
            self._inherit(_parent)

    def _inherit(self, parent: "SemiFreeExtension"):
        """Copy the memo tables of a prefix extension that are unaffected by new variables."""
        new_hdeg = min((v.hdeg for v in self.variables[len(parent.variables):]), default=None)
        self._products = dict(parent._products)
        self._differentials = dict(parent._differentials)
        self._colors = dict(parent._colors)
        if new_hdeg is None:
            self._words = dict(parent._words)
            self.strata_cache = dict(parent.strata_cache)
            return
        self._words = {n: w for n, w in parent._words.items() if n < new_hdeg}
        self.strata_cache = {k: v for k, v in parent.strata_cache.items() if k[0] < new_hdeg}

    def __repr__(self) -> str:
        return (f"SemiFreeExtension(variables={len(self.variables)}, N={self.hdeg_bound}, "
                f"D={self.degree_bound})")

    # -- compatibility ----------------------------------------------------------

    def is_compatible(self, other: "SemiFreeExtension") -> bool:
        """True when other has the same base and its variables are a prefix of ours."""
        if other is self:
            return True
        return (other.base is self.base
                and other.variables == self.variables[:len(other.variables)]
                and other._boundaries == self._boundaries[:len(other.variables)])

    def coerce(self, element: "DGElement") -> "DGElement":
        """
        View an element of a sub-extension as an element of this extension.

        Raises:
            DimensionMismatchError: If the element belongs to an unrelated extension
        """
        if element.algebra is self:
            return element
        if not self.is_compatible(element.algebra):
            raise DimensionMismatchError("element belongs to an unrelated extension",
                                         operation="coerce")
        return DGElement(self, element.terms)

    # -- construction of elements ---------------------------------------------

    def normalize(self, terms: Mapping[Term, Scalar]) -> Terms:
        """Reduce every ring coefficient to its normal form."""
        out: Terms = {}
        for (word, monomial), coefficient in terms.items():
            if not coefficient:
                continue
            if not is_valid_word(word, self.variables):
                raise DimensionMismatchError(f"invalid word {word}", operation="normalize")
            for m, c in self.base.monomial_normal_form(monomial).items():
                accumulate(out, (word, m), coefficient * c)
        return out

    def element(self, terms: Mapping[Term, Scalar]) -> "DGElement":
        return DGElement(self, self.normalize(terms))

    def zero(self) -> "DGElement":
        return DGElement(self, {})

    def one(self) -> "DGElement":
        return DGElement(self, {(EMPTY_WORD, self.ring.unit): self.field.one})

    def from_ring(self, f: RingElement) -> "DGElement":
        """A ring element as an element of homological degree zero."""
        return self.element({(EMPTY_WORD, m): c for m, c in f.terms.items()})

    def word(self, word: Word, coefficient: Optional[Scalar] = None) -> "DGElement":
        coefficient = self.field.one if coefficient is None else self.field(coefficient)
        return self.element({(tuple(word), self.ring.unit): coefficient})

    def variable(self, j: int) -> "DGElement":
        """The variable y_(j+1) for a 0-based index j."""
        return self.word(((j, 1),))

    def boundary(self, j: int) -> "DGElement":
        """d(y_(j+1)) as an element."""
        return DGElement(self, self._boundaries[j])

    # -- word data ------------------------------------------------------------

    def word_hdeg(self, word: Word) -> int:
        return word_hdeg(word, self.variables)

    def word_ideg(self, word: Word) -> int:
        return word_ideg(word, self.variables)

    def word_color(self, word: Word) -> ColorDegree:
        color = self._colors.get(word)
        if color is None:
            color = word_color(word, self.variables, self.ring.n)
            self._colors[word] = color
        return color

    def word_text(self, word: Word) -> str:
        return word_text(word, self.variables)

    def term_hdeg(self, term: Term) -> int:
        return self.word_hdeg(term[0])

    def term_ideg(self, term: Term) -> int:
        return self.word_ideg(term[0]) + self.ring.monomial_degree(term[1])

    def term_color(self, term: Term) -> ColorDegree:
        return add_vectors(self.word_color(term[0]), term[1])

    # -- products -----------------------------------------------------------------

    def word_product(self, left: Word, right: Word) -> Optional[Tuple[Scalar, Word]]:
        """
        Product of two normal words as scalar * word, or None when it vanishes.

        Moving y_b^(f) to the left of y_a^(e) for a > b contributes
        ((-1)^(|y_a||y_b|) chi(y_a, y_b))^(e f); equal indices merge with a
        binomial coefficient (divided) or vanish (exterior).
        """
        if not left:
            return self.field.one, right
        if not right:
            return self.field.one, left
        key = (left, right)
        if key in self._products:
            return self._products[key]
        scalar = self.field.one
        for a, e in left:
            va = self.variables[a]
            for b, f in right:
                if a <= b:
                    continue
                vb = self.variables[b]
                factor = self.field.sign(va.hdeg * vb.hdeg * e * f)
                scalar = scalar * factor * self.field.power(self.ring.chi(va.color, vb.color), e * f)
        merged = dict(left)
        result: Optional[Tuple[Scalar, Word]] = None
        for b, f in right:
            if b in merged:
                if self.variables[b].is_exterior:
                    break
                scalar = scalar * self.field.binomial(merged[b] + f, f)
                merged[b] += f
            else:
                merged[b] = f
        else:
            if scalar:
                result = (scalar, tuple(sorted(merged.items())))
        self._products[key] = result
        return result

    def multiply_terms(self, left: Mapping[Term, Scalar], right: Mapping[Term, Scalar]) -> Terms:
        """
        Product of two term maps.

        (x^I w)(x^J w') = chi(color w, J) * twist(I, J) * NF(x^(I+J)) * (w w')

        Raises:
            TruncationError: If a product term exceeds the internal truncation
        """
        out: Terms = {}
        for (w1, m1), a in left.items():
            color = self.word_color(w1)
            for (w2, m2), b in right.items():
                product = self.word_product(w1, w2)
                if product is None:
                    continue
                scalar, word = product
                monomial = add_vectors(m1, m2)
                degree = self.word_ideg(word) + self.ring.monomial_degree(monomial)
                if degree > self.degree_bound:
                    raise TruncationError(
                        f"product of internal degree {degree} exceeds the truncation "
                        f"{self.degree_bound}", requested=degree, bound=self.degree_bound,
                        operation="dg_multiply"
                    )
                factor = a * b * scalar * self.ring.chi(color, m2) * self.ring.twist(m1, m2)
                if not factor:
                    continue
                for m, c in self.base.monomial_normal_form(monomial).items():
                    accumulate(out, (word, m), factor * c)
        return out

    def multiply(self, a: "DGElement", b: "DGElement") -> "DGElement":
        """
        Product in the extension.

        Raises:
            DimensionMismatchError: If an operand belongs to an unrelated extension
        """
        a, b = self.coerce(a), self.coerce(b)
        return DGElement(self, self.multiply_terms(a.terms, b.terms))

    # -- differential ---------------------------------------------------------------

    def word_differential(self, word: Word) -> Terms:
        """
        d of a normal word, by the Leibniz rule on its first factor.

        d(y^(e) * rest) = d(y) y^(e-1) rest + (-1)^(e|y|) y^(e) d(rest)
        """
        if not word:
            return {}
        cached = self._differentials.get(word)
        if cached is not None:
            return cached
        (a, e), rest = word[0], word[1:]
        unit = self.ring.unit
        first_boundary = self._boundaries[a]
        if e > 1:
            first_boundary = self.multiply_terms(first_boundary, {(((a, e - 1),), unit): self.field.one})
        if rest:
            out = self.multiply_terms(first_boundary, {(rest, unit): self.field.one})
            sign = self.field.sign(e * self.variables[a].hdeg)
            tail = self.multiply_terms({(((a, e),), unit): self.field.one},
                                       self.word_differential(rest))
            for term, value in tail.items():
                accumulate(out, term, sign * value)
        else:
            out = dict(first_boundary)
        self._differentials[word] = out
        return out

    def differential_terms(self, terms: Mapping[Term, Scalar]) -> Terms:
        out: Terms = {}
        for (word, monomial), coefficient in terms.items():
            if not word:
                continue
            image = self.multiply_terms({(EMPTY_WORD, monomial): coefficient},
                                        self.word_differential(word))
            for term, value in image.items():
                accumulate(out, term, value)
        return out

    def differential(self, a: "DGElement") -> "DGElement":
        """
        d(a), left R-linear with d(R) = 0.

        Raises:
            TruncationError: If a has terms above the internal truncation
        """
        a = self.coerce(a)
        return DGElement(self, self.differential_terms(a.terms))

    # -- bases ----------------------------------------------------------------------

    def words(self, n: int) -> Dict[int, Tuple[Word, ...]]:
        """Words of homological degree n grouped by internal degree <= D."""
        cached = self._words.get(n)
        if cached is not None:
            return cached
        found: Dict[int, List[Word]] = {}
        prefix: List[Tuple[int, int]] = []

        def extend(start: int, hdeg: int, ideg: int):
            if hdeg == n:
                found.setdefault(ideg, []).append(tuple(prefix))
                return
            for j in range(start, len(self.variables)):
                variable = self.variables[j]
                e = 1
                while hdeg + e * variable.hdeg <= n and ideg + e * variable.ideg <= self.degree_bound:
                    prefix.append((j, e))
                    extend(j + 1, hdeg + e * variable.hdeg, ideg + e * variable.ideg)
                    prefix.pop()
                    if variable.is_exterior:
                        break
                    e += 1

        if n >= 0:
            extend(0, 0, 0)
        cached = {d: tuple(sorted(ws)) for d, ws in sorted(found.items())}
        self._words[n] = cached
        return cached

    def basis_words(self, n: int, d: int) -> Tuple[Word, ...]:
        """Free basis words of homological degree n and internal degree d."""
        if d > self.degree_bound:
            raise TruncationError(f"internal degree {d} exceeds the truncation {self.degree_bound}",
                                  requested=d, bound=self.degree_bound, operation="basis_words")
        return self.words(n).get(d, ())

    def stratum_basis(self, n: int, d: int) -> Tuple[Term, ...]:
        """k-basis of the (n, d) stratum: words times standard monomials, sorted."""
        basis: List[Term] = []
        for word_degree, words in self.words(n).items():
            if word_degree > d:
                continue
            monomials = self.base.graded_basis(d - word_degree)
            basis.extend((w, m) for w in words for m in monomials)
        return tuple(sorted(basis, key=lambda t: (t[0], self.ring.monomial_key(t[1]))))

    def iter_words(self, max_hdeg: int) -> Iterable[Word]:
        for n in range(max_hdeg + 1):
            for words in self.words(n).values():
                yield from words

    # -- adjunction -----------------------------------------------------------------

    def _prepare_variable(self, z: "DGElement", index: int, last_hdeg: int,
                          hdeg: Optional[int], ideg: Optional[int],
                          color: Optional[ColorDegree]) -> Tuple[DGVariable, Terms]:
        z = self.coerce(z)
        if z.is_zero():
            if hdeg is None or ideg is None or color is None:
                raise PreconditionError("adjoining a variable on zero needs explicit degrees",
                                        precondition="explicit_degrees",
                                        operation="adjoin_variable")
        else:
            if not z.is_trihomogeneous():
                raise HomogeneityError(f"cycle is not trihomogeneous: {z.to_text()}",
                                       degrees=sorted(z.tridegrees(), key=str),
                                       operation="adjoin_variable")
            if hdeg is not None and hdeg != z.hdeg() + 1:
                raise PreconditionError(f"variable killing a degree {z.hdeg()} cycle must have "
                                        f"homological degree {z.hdeg() + 1}",
                                        precondition="hdeg", operation="adjoin_variable")
            if ideg is not None and ideg != z.ideg():
                raise PreconditionError("internal degree must match the cycle",
                                        precondition="ideg", operation="adjoin_variable")
            if color is not None and (self.ring.color_signature(color)
                                      != self.ring.color_signature(z.color())):
                raise HomogeneityError("color does not act like the color of the cycle",
                                       operation="adjoin_variable")
            hdeg, ideg = z.hdeg() + 1, z.ideg()
            color = z.color() if color is None else tuple(color)
            boundary = self.differential(z)
            if not boundary.is_zero():
                raise CycleError(f"element is not a cycle: d({z.to_text()}) = {boundary.to_text()}",
                                 operation="adjoin_variable")
            if z.hdeg() % 2 and 2 * ideg <= self.degree_bound:
                square = self.multiply(z, z)
                if not square.is_zero():
                    raise CycleError(f"odd cycle with nonzero square: {z.to_text()}",
                                     operation="adjoin_variable")
        if hdeg < max(1, last_hdeg):
            raise PreconditionError(f"homological degree {hdeg} breaks the variable order",
                                    precondition="hdeg_order", operation="adjoin_variable")
        if self.hdeg_bound is not None and hdeg > self.hdeg_bound:
            raise TruncationError(f"homological degree {hdeg} exceeds the truncation "
                                  f"{self.hdeg_bound}", requested=hdeg, bound=self.hdeg_bound,
                                  grading="homological", operation="adjoin_variable")
        if ideg < 1:
            raise PreconditionError("adjoined variables need positive internal degree",
                                    precondition="ideg", operation="adjoin_variable")
        variable = DGVariable(index=index, hdeg=hdeg, ideg=ideg, color=tuple(color))
        return variable, dict(z.terms)

    def adjoin_variable(self, z: "DGElement", hdeg: Optional[int] = None,
                        ideg: Optional[int] = None,
                        color: Optional[ColorDegree] = None) -> "SemiFreeExtension":
        """
        Adjoin a variable y with d(y) = z.

        Args:
            z: Trihomogeneous cycle to kill
            hdeg: Homological degree of y (only needed when z is zero)
            ideg: Internal degree of y (only needed when z is zero)
            color: Color of y; must act like the color of z

        Returns:
            The new extension

        Raises:
            HomogeneityError: If z is not trihomogeneous
            CycleError: If z is not a cycle, or is odd with nonzero square
            PreconditionError: If the variable would break the homological order
        """
        return self.adjoin_variables([z], [(hdeg, ideg, color)])

    def adjoin_variables(self, cycles: Sequence["DGElement"],
                         degrees: Optional[Sequence[Tuple]] = None) -> "SemiFreeExtension":
        """Adjoin one variable per cycle in a single step; each cycle must live in self."""
        degrees = list(degrees) if degrees is not None else [(None, None, None)] * len(cycles)
        if len(degrees) != len(cycles):
            raise DimensionMismatchError("one degree entry per cycle is required",
                                         expected=len(cycles), actual=len(degrees))
        variables = list(self.variables)
        boundaries = list(self._boundaries)
        last_hdeg = variables[-1].hdeg if variables else 1
        for z, (hdeg, ideg, color) in zip(cycles, degrees):
            variable, boundary = self._prepare_variable(z, len(variables), last_hdeg,
                                                        hdeg, ideg, color)
            variables.append(variable)
            boundaries.append(boundary)
            last_hdeg = variable.hdeg
            self.logger.debug(f"adjoined {variable.describe()} with d = {z.to_text()}")
        return SemiFreeExtension(self.base, variables, boundaries, self.hdeg_bound, _parent=self)

    # -- checks -------------------------------------------------------------------------

    def check_d_squared(self, max_hdeg: Optional[int] = None) -> List[Word]:
        """Words w with d(d(w)) != 0, up to the given homological degree and D."""
        if max_hdeg is None:
            max_hdeg = (self.hdeg_bound if self.hdeg_bound is not None
                        else max((v.hdeg for v in self.variables), default=0)) + 1
        failures = []
        for word in self.iter_words(max_hdeg):
            if self.differential_terms(self.word_differential(word)):
                failures.append(word)
        if failures:
            self.logger.warning(f"d^2 != 0 on {len(failures)} words")
        return failures


class DGElement:
    """
    Element of a semi-free extension.

    ``terms`` maps (word, standard monomial) to a nonzero scalar and is never
    mutated after construction.
    """

    __slots__ = ("algebra", "terms")

    def __init__(self, algebra: SemiFreeExtension, terms: Terms):
        self.algebra = algebra
        self.terms = terms

    def _coerce(self, other) -> "DGElement":
        if isinstance(other, DGElement):
            return self.algebra.coerce(other)
        if isinstance(other, RingElement):
            return self.algebra.from_ring(other)
        return self.algebra.one().scale(self.algebra.field(other))

    def __add__(self, other) -> "DGElement":
        other = self._coerce(other)
        out = dict(self.terms)
        for term, value in other.terms.items():
            accumulate(out, term, value)
        return DGElement(self.algebra, out)

    __radd__ = __add__

    def __neg__(self) -> "DGElement":
        return DGElement(self.algebra, {t: -c for t, c in self.terms.items()})

    def __sub__(self, other) -> "DGElement":
        return self + (-self._coerce(other))

    def __mul__(self, other) -> "DGElement":
        if isinstance(other, (DGElement, RingElement)):
            return self.algebra.multiply(self, self._coerce(other))
        return self.scale(self.algebra.field(other))

    def __rmul__(self, other) -> "DGElement":
        if isinstance(other, RingElement):
            return self.algebra.multiply(self.algebra.from_ring(other), self)
        return self.scale(self.algebra.field(other))

    def scale(self, value: Scalar) -> "DGElement":
        if not value:
            return self.algebra.zero()
        return DGElement(self.algebra, {t: c * value for t, c in self.terms.items()})

    def __eq__(self, other: object) -> bool:
        if isinstance(other, int):
            other = self._coerce(other)
        return isinstance(other, DGElement) and self.terms == other.terms

    def __hash__(self) -> int:
        return hash(frozenset(self.terms.items()))

    def __repr__(self) -> str:
        return f"DGElement({self.to_text()})"

    def is_zero(self) -> bool:
        return not self.terms

    def words(self) -> List[Word]:
        return sorted({word for word, _ in self.terms})

    def coefficient(self, word: Word) -> RingElement:
        """The left ring coefficient of a word."""
        word = tuple(word)
        return RingElement(self.algebra.ring,
                           {m: c for (w, m), c in self.terms.items() if w == word})

    def tridegrees(self) -> set:
        """Distinct (homological degree, color signature, internal degree) of the terms."""
        algebra = self.algebra
        return {(algebra.term_hdeg(t), algebra.ring.color_signature(algebra.term_color(t)),
                 algebra.term_ideg(t)) for t in self.terms}

    def is_trihomogeneous(self) -> bool:
        return len(self.tridegrees()) <= 1

    def hdeg(self) -> int:
        return max((self.algebra.term_hdeg(t) for t in self.terms), default=0)

    def ideg(self) -> int:
        return max((self.algebra.term_ideg(t) for t in self.terms), default=0)

    def color(self) -> ColorDegree:
        """Lexicographically least color among the terms (zero vector for zero)."""
        return min((self.algebra.term_color(t) for t in self.terms),
                   default=(0,) * self.algebra.ring.n)

    def augmentation_terms(self) -> Dict[Word, Scalar]:
        """Words whose coefficient has a nonzero constant term."""
        unit = self.algebra.ring.unit
        return {w: c for (w, m), c in self.terms.items() if m == unit}

    def to_text(self) -> str:
        """Print grouped by word, e.g. 'x1*y2 - (x1 + x2)*y1'."""
        if not self.terms:
            return "0"
        pieces: List[str] = []
        for word in self.words():
            coefficient = self.coefficient(word).to_text()
            word_part = self.algebra.word_text(word)
            negative = coefficient.startswith("-") and " " not in coefficient
            if negative:
                coefficient = coefficient[1:]
            if not word:
                body = coefficient
            elif coefficient == "1":
                body = word_part
            elif " " in coefficient:
                body = f"({coefficient})*{word_part}"
            else:
                body = f"{coefficient}*{word_part}"
            if not pieces:
                pieces.append(f"-{body}" if negative else body)
            else:
                pieces.append(f"- {body}" if negative else f"+ {body}")
        return " ".join(pieces)


def dg_multiply(a: DGElement, b: DGElement) -> DGElement:
    return a.algebra.multiply(a, b)


def differential(a: DGElement) -> DGElement:
    return a.algebra.differential(a)


def adjoin_variable(extension: SemiFreeExtension, z: DGElement, **degrees) -> SemiFreeExtension:
    return extension.adjoin_variable(z, **degrees)

"""
Yoneda products on Ext_R(k, k).

The closure F is a minimal free resolution of k, so Hom_R(F, k) has zero
differential and Ext^i is the space of k-valued functionals on the words of
homological degree i. A product phi * psi is phi composed with a lift of psi
to a chain map Psi: F_(i+t) -> F_t, built level by level by solving exact
linear systems stratum by stratum.
"""

import logging
from dataclasses import dataclass, field
from typing import Dict, Iterable, List, Optional, Tuple

from skew_dga_tool.algebra.field import Scalar
from skew_dga_tool.algebra.skewpoly import ColorDegree, accumulate
from skew_dga_tool.core.exceptions import HomogeneityError, TruncationError, VerificationError
from skew_dga_tool.dga.extension import Terms
from skew_dga_tool.dga.words import EMPTY_WORD, Word
from skew_dga_tool.homology.closure import ClosureResult
from skew_dga_tool.homology.strata import stratum, stratum_matrix

logger = logging.getLogger(__name__)


@dataclass
class Cocycle:
    """A k-valued functional on the free basis words of F_i."""
    hdeg: int
    values: Dict[Word, Scalar]
    ideg: int = 0
    color: Optional[ColorDegree] = None

    def __post_init__(self):
        self.values = {w: v for w, v in self.values.items() if v}

    def evaluate(self, word: Word) -> Optional[Scalar]:
        return self.values.get(word)

    def is_zero(self) -> bool:
        return not self.values

    def combine(self, other: "Cocycle", factor: Scalar) -> "Cocycle":
        """self + factor * other."""
        if other.hdeg != self.hdeg:
            raise HomogeneityError("cocycles of different homological degree",
                                   degrees=[self.hdeg, other.hdeg], operation="cocycle")
        if self.values and other.values and other.ideg != self.ideg:
            raise HomogeneityError("cocycles of different internal degree",
                                   degrees=[self.ideg, other.ideg], operation="cocycle")
        values = dict(self.values)
        for word, value in other.values.items():
            accumulate(values, word, factor * value)
        ideg = self.ideg if self.values else other.ideg
        color = self.color if self.values else other.color
        return Cocycle(self.hdeg, values, ideg, color)

    def scale(self, factor: Scalar) -> "Cocycle":
        return Cocycle(self.hdeg, {w: v * factor for w, v in self.values.items()},
                       self.ideg, self.color)

    def key(self) -> Tuple:
        return (self.hdeg, tuple(sorted(self.values.items(), key=lambda item: item[0])))


def dual_cocycle(result: ClosureResult, word: Word) -> Cocycle:
    """The functional dual to a closure word; its color is minus the word color."""
    algebra = result.extension
    color = tuple(-c for c in algebra.word_color(word))
    return Cocycle(algebra.word_hdeg(word), {tuple(word): algebra.field.one},
                   algebra.word_ideg(word), color)


def identity_cocycle(result: ClosureResult) -> Cocycle:
    """The unit of Ext, dual to the empty word."""
    return dual_cocycle(result, EMPTY_WORD)


def ext_basis(result: ClosureResult, m: int, d: Optional[int] = None) -> List[Cocycle]:
    """Dual basis of Ext^m (in internal degree d, or all degrees up to D)."""
    words = result.extension.words(m)
    degrees = [d] if d is not None else sorted(words)
    return [dual_cocycle(result, w) for j in degrees for w in words.get(j, ())]


class ChainMapLifter:
    """
    Lift of a cocycle psi of degree i to a chain map Psi with epsilon Psi_0 = psi.

    Psi_0(w) = psi(w) * 1 and d Psi_t = (-1)^i Psi_(t-1) d, solved per word.
    """

    def __init__(self, result: ClosureResult, psi: Cocycle):
        self.result = result
        self.algebra = result.extension
        self.psi = psi
        self.sign = self.algebra.field.sign(psi.hdeg)
        self._levels: Dict[int, Dict[Word, Terms]] = {}
        self.logger = logging.getLogger(__name__)

    def image(self, t: int, word: Word) -> Terms:
        """Psi_t applied to a word of homological degree hdeg(psi) + t."""
        level = self._levels.setdefault(t, {})
        cached = level.get(word)
        if cached is not None:
            return cached
        algebra = self.algebra
        if t == 0:
            value = self.psi.evaluate(word)
            cached = {(EMPTY_WORD, algebra.ring.unit): value} if value else {}
            level[word] = cached
            return cached
        target: Terms = {}
        for (source, monomial), coefficient in algebra.word_differential(word).items():
            lifted = self.image(t - 1, source)
            if not lifted:
                continue
            product = algebra.multiply_terms({(EMPTY_WORD, monomial): coefficient}, lifted)
            for term, value in product.items():
                accumulate(target, term, self.sign * value)
        if not target:
            level[word] = {}
            return level[word]
        degree = algebra.word_ideg(word) - self.psi.ideg
        domain = stratum(algebra, t, degree)
        rhs = stratum(algebra, t - 1, degree).vector(target)
        solution = stratum_matrix(algebra, t, degree).solve(rhs)
        if solution is None:
            raise VerificationError(f"lifting system inconsistent at level {t} for word "
                                    f"{algebra.word_text(word)}", check="lifting",
                                    details=[word], operation="yoneda_product")
        cached = {domain.basis[i]: value for i, value in solution.items() if value}
        level[word] = cached
        return cached


class YonedaCalculator:
    """Yoneda products over one closure, reusing chain-map lifts."""

    def __init__(self, result: ClosureResult):
        self.result = result
        self.algebra = result.extension
        self._lifters: Dict[Tuple, ChainMapLifter] = {}

    def lifter(self, psi: Cocycle) -> ChainMapLifter:
        key = psi.key()
        lifter = self._lifters.get(key)
        if lifter is None:
            lifter = ChainMapLifter(self.result, psi)
            self._lifters[key] = lifter
        return lifter

    def product(self, phi: Cocycle, psi: Cocycle) -> Cocycle:
        """
        phi * psi = phi composed with Psi_|phi|.

        Raises:
            TruncationError: If the product leaves the computed range
            VerificationError: If a lifting system is inconsistent
        """
        hdeg = phi.hdeg + psi.hdeg
        if hdeg > self.result.hdeg_bound:
            raise TruncationError(f"product of degree {hdeg} exceeds N={self.result.hdeg_bound}",
                                  requested=hdeg, bound=self.result.hdeg_bound,
                                  grading="homological", operation="yoneda_product")
        ideg = phi.ideg + psi.ideg
        if ideg > self.algebra.degree_bound:
            raise TruncationError(f"product of internal degree {ideg} exceeds "
                                  f"D={self.algebra.degree_bound}", requested=ideg,
                                  bound=self.algebra.degree_bound, operation="yoneda_product")
        color = None
        if phi.color is not None and psi.color is not None:
            color = tuple(a + b for a, b in zip(phi.color, psi.color))
        if phi.is_zero() or psi.is_zero():
            return Cocycle(hdeg, {}, ideg, color)
        lifter = self.lifter(psi)
        unit = self.algebra.ring.unit
        values: Dict[Word, Scalar] = {}
        for word in self.algebra.words(hdeg).get(ideg, ()):
            total = self.algebra.field.zero
            for (target, monomial), coefficient in lifter.image(phi.hdeg, word).items():
                if monomial != unit:
                    continue
                value = phi.evaluate(target)
                if value:
                    total = total + coefficient * value
            if total:
                values[word] = total
        return Cocycle(hdeg, values, ideg, color)

    def products_with(self, psi: Cocycle, t: int, d: int) -> Dict[Word, Dict[Word, Scalar]]:
        """
        For every word u of degree t, the product dual(u) * psi in internal degree d.

        Returns:
            Map u -> (word of degree t + |psi| -> value); empty products are omitted
        """
        out: Dict[Word, Dict[Word, Scalar]] = {}
        lifter = self.lifter(psi)
        unit = self.algebra.ring.unit
        for word in self.algebra.words(t + psi.hdeg).get(d, ()):
            for (target, monomial), coefficient in lifter.image(t, word).items():
                if monomial == unit and coefficient:
                    out.setdefault(target, {})[word] = coefficient
        return out


def yoneda_product(phi: Cocycle, psi: Cocycle, result: ClosureResult) -> Cocycle:
    return YonedaCalculator(result).product(phi, psi)


@dataclass(frozen=True)
class ProductConvention:
    """
    How algebra products are read off compositions.

    reverse_order: a * b is psi-lifted composition in the opposite order
    opposite_bicharacter: brackets use chi(b, a) in place of chi(a, b)

    The composition order alone does not fix the sign of the color brackets, so
    verification searches both axes: every entry of CONVENTIONS pairs an order
    with a bicharacter orientation, and the first pair under which all checked
    relations hold is reported.
    """
    reverse_order: bool = False
    opposite_bicharacter: bool = False

    def describe(self) -> str:
        order = "opposite composition order" if self.reverse_order else "direct composition order"
        chi = "opposite bicharacter" if self.opposite_bicharacter else "direct bicharacter"
        return f"{order}, {chi}"

    def to_dict(self) -> Dict[str, bool]:
        return {"reverse_order": self.reverse_order,
                "opposite_bicharacter": self.opposite_bicharacter}


CONVENTIONS: Tuple[ProductConvention, ...] = (
    ProductConvention(False, True),
    ProductConvention(False, False),
    ProductConvention(True, False),
    ProductConvention(True, True),
)


@dataclass
class ExtAlgebra:
    """Ext products and brackets under one convention."""
    calculator: YonedaCalculator
    convention: ProductConvention = field(default_factory=ProductConvention)

    @property
    def ring(self):
        return self.calculator.algebra.ring

    def multiply(self, a: Cocycle, b: Cocycle) -> Cocycle:
        if self.convention.reverse_order:
            return self.calculator.product(b, a)
        return self.calculator.product(a, b)

    def chi(self, a: Cocycle, b: Cocycle) -> Scalar:
        if a.color is None or b.color is None:
            return self.ring.field.one
        if self.convention.opposite_bicharacter:
            return self.ring.chi(b.color, a.color)
        return self.ring.chi(a.color, b.color)

    def commutation_factor(self, a: Cocycle, b: Cocycle) -> Scalar:
        """(-1)^(|a||b|) chi(a, b)."""
        return self.ring.field.sign(a.hdeg * b.hdeg) * self.chi(a, b)

    def bracket(self, a: Cocycle, b: Cocycle) -> Cocycle:
        """[a, b] = ab - (-1)^(|a||b|) chi(a, b) ba."""
        return self.multiply(a, b).combine(self.multiply(b, a), -self.commutation_factor(a, b))

    def linear_combination(self, hdeg: int, ideg: int,
                           terms: Iterable[Tuple[Scalar, Cocycle]]) -> Cocycle:
        total = Cocycle(hdeg, {}, ideg)
        for factor, cocycle in terms:
            total = total.combine(cocycle, factor)
        return total

"""
Divided powers of even elements.

Extends the divided powers of the even variables to every trihomogeneous
element of even positive homological degree: sums expand term by term,
a coefficient times a word picks up chi(word, coefficient)^C(k,2), and
iterated divided powers of a variable use [h k] = (hk)! / (k! (h!)^k).
All integer coefficients are computed in Z and then mapped into the field.
"""

from math import comb, factorial
from typing import Dict, List, Optional, Tuple

from skew_dga_tool.algebra.field import Scalar
from skew_dga_tool.algebra.skewpoly import accumulate
from skew_dga_tool.core.exceptions import HomogeneityError, PreconditionError, TruncationError
from skew_dga_tool.dga.extension import DGElement, SemiFreeExtension, Term, Terms
from skew_dga_tool.dga.words import EMPTY_WORD, Word


def bracket_coefficient(h: int, k: int) -> int:
    """[h k] = (hk)! / (k! (h!)^k), the integer with (y^(h))^(k) = [h k] y^(hk)."""
    if h < 0 or k < 0:
        raise ValueError("bracket coefficient needs nonnegative arguments")
    return factorial(h * k) // (factorial(k) * factorial(h) ** k)


def word_divided_power(algebra: SemiFreeExtension, word: Word,
                       k: int) -> Optional[Tuple[Scalar, Word]]:
    """
    k-th divided power of a word of even homological degree, or None if it vanishes.

    Splits w = u v at the first factor u = y^(e): an odd u forces w^(k) = 0 for
    k >= 2; an even u gives chi(v, u)^C(k,2) u^k v^(k).
    """
    field = algebra.field
    if k == 0:
        return field.one, EMPTY_WORD
    if k == 1:
        return field.one, word
    (a, e), rest = word[0], word[1:]
    variable = algebra.variables[a]
    if variable.is_exterior:
        return None
    if not rest:
        scalar = field(bracket_coefficient(e, k))
        return (scalar, ((a, e * k),)) if scalar else None
    tail = word_divided_power(algebra, rest, k)
    if tail is None:
        return None
    tail_scalar, tail_word = tail
    twist = algebra.ring.chi(algebra.word_color(rest), algebra.word_color(((a, e),)))
    power = field(factorial(e * k) // factorial(e) ** k)
    scalar = field.power(twist, comb(k, 2)) * power * tail_scalar
    if not scalar:
        return None
    return scalar, ((a, e * k),) + tail_word


def term_divided_power(algebra: SemiFreeExtension, term: Term, coefficient: Scalar,
                       k: int) -> Terms:
    """(c x^m w)^(k) = chi(color w, m)^C(k,2) (c x^m)^k w^(k)."""
    field, ring = algebra.field, algebra.ring
    word, monomial = term
    if k == 0:
        return {(EMPTY_WORD, ring.unit): field.one}
    powered = word_divided_power(algebra, word, k)
    if powered is None:
        return {}
    scalar, new_word = powered
    pairs = comb(k, 2)
    scalar = (scalar * field.power(coefficient, k)
              * field.power(ring.chi(algebra.word_color(word), monomial), pairs)
              * field.power(ring.twist(monomial, monomial), pairs))
    exponents = tuple(k * e for e in monomial)
    out: Terms = {}
    for m, c in algebra.base.monomial_normal_form(exponents).items():
        accumulate(out, (new_word, m), scalar * c)
    return out


def divided_power(a: DGElement, k: int) -> DGElement:
    """
    The k-th divided power a^(k) of an even element.

    Args:
        a: Trihomogeneous element of even positive homological degree
        k: Nonnegative exponent

    Returns:
        a^(k), with a^(0) = 1 and a^(1) = a

    Raises:
        PreconditionError: For k < 0, or for a of odd or zero homological degree
        HomogeneityError: If a is not trihomogeneous
        TruncationError: If k * deg(a) exceeds the internal truncation
    """
    algebra = a.algebra
    if k < 0:
        raise PreconditionError("divided powers need k >= 0", precondition="k",
                                operation="divided_power")
    if k == 0:
        return algebra.one()
    if a.is_zero():
        return algebra.zero()
    if not a.is_trihomogeneous():
        raise HomogeneityError("divided powers need a trihomogeneous element",
                               operation="divided_power")
    if a.hdeg() == 0 or a.hdeg() % 2:
        raise PreconditionError(f"divided powers need even positive homological degree, "
                                f"got {a.hdeg()}", precondition="even", operation="divided_power")
    if k == 1:
        return a
    if k * a.ideg() > algebra.degree_bound:
        raise TruncationError(f"divided power of internal degree {k * a.ideg()} exceeds the "
                              f"truncation {algebra.degree_bound}", requested=k * a.ideg(),
                              bound=algebra.degree_bound, operation="divided_power")

    unit = {(EMPTY_WORD, algebra.ring.unit): algebra.field.one}
    partial: List[Terms] = [unit] + [{} for _ in range(k)]
    for term, coefficient in sorted(a.terms.items()):
        powers = [term_divided_power(algebra, term, coefficient, i) for i in range(k + 1)]
        updated: List[Terms] = []
        for j in range(k + 1):
            acc: Dict[Term, Scalar] = {}
            for i in range(j + 1):
                if not partial[i] or not powers[j - i]:
                    continue
                for t, value in algebra.multiply_terms(partial[i], powers[j - i]).items():
                    accumulate(acc, t, value)
            updated.append(acc)
        partial = updated
    return DGElement(algebra, partial[k])

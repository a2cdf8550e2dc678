"""
Checks on the Ext algebra at finite truncation.

Every check here reports what it verified and up to which bounds; none of
them claims more than the computed range.
"""

import logging
import random
from dataclasses import dataclass, field
from itertools import combinations, combinations_with_replacement
from typing import Dict, List, Optional, Sequence, Tuple, Union

from skew_dga_tool.algebra.linalg import rank_of_vectors
from skew_dga_tool.algebra.quotient import QuotientRing
from skew_dga_tool.core.exceptions import PreconditionError, TruncationError
from skew_dga_tool.ext.betti import BettiTable, betti_table, poincare_from_deviations
from skew_dga_tool.ext.presentation import (
    ExtPresentation, Relation, RelationKind, ext_presentation, upi_dimensions
)
from skew_dga_tool.ext.yoneda import (
    CONVENTIONS, Cocycle, ExtAlgebra, ProductConvention, YonedaCalculator, dual_cocycle, ext_basis
)
from skew_dga_tool.homology.closure import ClosureResult, DeviationTable, skew_ci_closure

logger = logging.getLogger(__name__)


# -- presentation -------------------------------------------------------------------


def generator_cocycles(result: ClosureResult, count: int) -> List[Cocycle]:
    """Cocycles dual to the first count variables of the closure."""
    return [dual_cocycle(result, ((i, 1),)) for i in range(count)]


def evaluate_relation(ext: ExtAlgebra, relation: Relation, thetas: Sequence[Cocycle]) -> Cocycle:
    """The relation as an Ext element under the algebra's convention."""
    a, b = thetas[relation.left], thetas[relation.right]
    if relation.kind == RelationKind.SQUARE:
        value = ext.multiply(a, a)
    else:
        value = ext.bracket(a, b)
    for generator, coefficient in relation.linear:
        value = value.combine(thetas[generator], coefficient)
    return value


@dataclass
class PresentationReport:
    """Outcome of verify_presentation."""
    passed: bool
    hdeg_bound: int
    degree_bound: int
    convention: Optional[ProductConvention] = None
    dimension_checks: List[Dict[str, object]] = field(default_factory=list)
    relation_checks: List[Dict[str, object]] = field(default_factory=list)
    rejected_conventions: List[Dict[str, object]] = field(default_factory=list)
    skipped: List[str] = field(default_factory=list)
    presentation: Optional[ExtPresentation] = None

    def to_dict(self) -> Dict[str, object]:
        return {
            "passed": self.passed,
            "convention": self.convention.to_dict() if self.convention else None,
            "convention_text": self.convention.describe() if self.convention else None,
            "dimension_checks": self.dimension_checks,
            "relation_checks": self.relation_checks,
            "rejected_conventions": self.rejected_conventions,
            "skipped": self.skipped,
            "presentation": self.presentation.to_dict() if self.presentation else None,
        }


def verify_presentation(base: QuotientRing, hdeg_bound: int,
                        degree_bound: Optional[int] = None,
                        result: Optional[ClosureResult] = None) -> PresentationReport:
    """
    Check the Ext presentation against the resolution.

    (a) PBW dimensions equal the Betti row sums in every complete row m <= N.
    (b) Every relation in range vanishes under Yoneda products, for one
        convention shared by all relations; the first convention that works
        is reported.

    Raises:
        PreconditionError: If R is not a skew complete intersection
    """
    presentation = ext_presentation(base)
    if result is None:
        result = skew_ci_closure(base, hdeg_bound, degree_bound)
    algebra = result.extension
    generator_count = presentation.n + presentation.c
    if len(algebra.variables) < generator_count:
        raise PreconditionError("closure lacks the degree-two variables of some relations; "
                                "raise the internal bound", precondition="degree_bound",
                                operation="verify_presentation")
    report = PresentationReport(False, result.hdeg_bound, result.degree_bound,
                                presentation=presentation)

    upi = upi_dimensions(presentation, result.hdeg_bound)
    betti = betti_table(result)
    dimensions_ok = True
    for m in range(result.hdeg_bound + 1):
        if not betti.is_complete(m):
            report.skipped.append(f"dimension check in degree {m}: words exceed D")
            continue
        ok = upi[m] == betti.row_sum(m)
        dimensions_ok = dimensions_ok and ok
        report.dimension_checks.append({"degree": m, "pbw": upi[m], "betti": betti.row_sum(m),
                                        "ok": ok})

    in_range = []
    for relation in presentation.relations:
        text = presentation.relation_text(relation)
        if presentation.relation_degree(relation) > result.hdeg_bound:
            report.skipped.append(f"relation {text}: degree above N")
        elif presentation.relation_ideg(relation) > result.degree_bound:
            report.skipped.append(f"relation {text}: internal degree above D")
        else:
            in_range.append(relation)

    thetas = generator_cocycles(result, generator_count)
    calculator = YonedaCalculator(result)
    for convention in CONVENTIONS:
        ext = ExtAlgebra(calculator, convention)
        checks = []
        for relation in in_range:
            vanishes = evaluate_relation(ext, relation, thetas).is_zero()
            checks.append({"relation": presentation.relation_text(relation),
                           "degree": presentation.relation_degree(relation),
                           "vanishes": vanishes})
        failing = [c["relation"] for c in checks if not c["vanishes"]]
        if not failing:
            report.convention = convention
            report.relation_checks = checks
            break
        report.rejected_conventions.append({"convention": convention.describe(),
                                            "failing": failing})
        logger.debug(f"convention '{convention.describe()}' fails on {failing}")
    report.passed = dimensions_ok and report.convention is not None
    logger.info(f"presentation check {'passed' if report.passed else 'FAILED'}")
    return report


def bracket_table(result: ClosureResult, presentation: ExtPresentation,
                  convention: ProductConvention) -> Dict[Tuple[int, int], Dict[int, object]]:
    """
    Yoneda brackets [theta_l, theta_i] of degree-one generators in theta_(n+j) coordinates.

    Returns:
        Map (l, i) -> {n + j: coefficient} for l <= i < n
    """
    n, c = presentation.n, presentation.c
    thetas = generator_cocycles(result, n + c)
    ext = ExtAlgebra(YonedaCalculator(result), convention)
    table = {}
    for i in range(n):
        for h in range(i + 1):
            value = ext.multiply(thetas[h], thetas[h]) if h == i else ext.bracket(thetas[h],
                                                                                  thetas[i])
            table[(h, i)] = {n + j: value.evaluate(((n + j, 1),)) for j in range(c)
                             if value.evaluate(((n + j, 1),))}
    return table


# -- complexity ---------------------------------------------------------------------


@dataclass
class ComplexityEstimate:
    """Complexity of k with a note on how it was obtained."""
    value: int
    exact: bool
    note: str
    window: Tuple[int, ...] = ()

    def to_dict(self) -> Dict[str, object]:
        return {"value": self.value, "exact": self.exact, "note": self.note,
                "window": list(self.window)}


def complexity(data: Union[BettiTable, DeviationTable], hdeg_bound: Optional[int] = None,
               skew_ci_relations: Optional[int] = None) -> ComplexityEstimate:
    """
    Polynomial growth rate of the Betti numbers.

    Args:
        data: Betti table, or deviations (expanded through the product formula)
        hdeg_bound: Window end N (defaults to the table's bound)
        skew_ci_relations: Number of relations of a verified skew complete
            intersection; the answer is then exact

    Returns:
        The least d such that a polynomial of degree d - 1 fits the Betti
        numbers on the window floor(N/2)..N

    Raises:
        PreconditionError: If the window is too short (N < 4)
    """
    if isinstance(data, BettiTable):
        bound = data.hdeg_bound if hdeg_bound is None else hdeg_bound
        values = [data.row_sum(i) for i in range(bound + 1)]
    else:
        if hdeg_bound is None:
            raise PreconditionError("deviations need an explicit homological bound",
                                    precondition="hdeg_bound", operation="complexity")
        bound = hdeg_bound
        values = poincare_from_deviations(data, bound).to_list()
    if bound < 4:
        raise PreconditionError(f"complexity needs data to degree N >= 4, got {bound}",
                                precondition="window", operation="complexity")
    window = tuple(values[bound // 2:bound + 1])
    if skew_ci_relations is not None:
        return ComplexityEstimate(skew_ci_relations, True, "skew complete intersection: "
                                  "complexity equals the number of relations", window)
    # b_m = 0 forces b_(m+1) = 0 for a minimal resolution of k
    if not window[-1]:
        return ComplexityEstimate(0, False, "estimate (truncated): finite resolution", window)
    differences = list(window)
    for d in range(1, len(window)):
        differences = [b - a for a, b in zip(differences, differences[1:])]
        if not any(differences):
            return ComplexityEstimate(d, False, f"estimate (truncated): degree {d - 1} "
                                      f"polynomial fits degrees {bound // 2}..{bound}", window)
    return ComplexityEstimate(len(window), False, "estimate (truncated): no polynomial fits "
                              "the window", window)


# -- generation checks ----------------------------------------------------------------


@dataclass
class SpanReport:
    """Rank of a product span against dim Ext^m, per internal degree."""
    holds: bool
    hdeg_bound: int
    rows: List[Dict[str, int]] = field(default_factory=list)

    def to_dict(self) -> Dict[str, object]:
        return {"holds": self.holds, "verified_up_to": self.hdeg_bound, "rows": self.rows}


def _span_rank(calculator: YonedaCalculator, result: ClosureResult, m: int, d: int,
               factors: Sequence[Tuple[int, Optional[set]]]) -> Tuple[int, int]:
    """Rank of sum over (t, allowed) of dual(u) * Ext^(m-t) in (m, d), u of degree t."""
    words = result.extension.words(m).get(d, ())
    index = {w: k for k, w in enumerate(words)}
    vectors = []
    for t, allowed in factors:
        for psi in ext_basis(result, m - t):
            if psi.ideg > d - t:
                continue
            for u, row in calculator.products_with(psi, t, d).items():
                if allowed is not None and u not in allowed:
                    continue
                vectors.append({index[w]: v for w, v in row.items()})
    return rank_of_vectors(result.extension.field, vectors, len(words)), len(words)


def k2_check(result: ClosureResult, hdeg_bound: Optional[int] = None) -> SpanReport:
    """
    Whether Ext^m = Ext^1 Ext^(m-1) + Ext^2 Ext^(m-2) for 3 <= m <= N.

    Raises:
        PreconditionError: If R is not generated in internal degree one
    """
    ring = result.extension.ring
    if any(d != 1 for d in ring.degrees):
        raise PreconditionError("the K2 check needs a ring generated in internal degree one",
                                precondition="degree_one_generation", operation="k2_check")
    bound = result.hdeg_bound if hdeg_bound is None else hdeg_bound
    if bound > result.hdeg_bound:
        raise TruncationError(f"N={bound} exceeds the closure bound {result.hdeg_bound}",
                              requested=bound, bound=result.hdeg_bound, grading="homological",
                              operation="k2_check")
    calculator = YonedaCalculator(result)
    report = SpanReport(True, bound)
    for m in range(3, bound + 1):
        for d in result.extension.words(m):
            rank, dimension = _span_rank(calculator, result, m, d, [(1, None), (2, None)])
            report.rows.append({"degree": m, "ideg": d, "rank": rank, "dim": dimension})
            report.holds = report.holds and rank == dimension
    logger.info(f"K2 check up to N={bound}: {'holds' if report.holds else 'fails'}")
    return report


def noetherian_check(result: ClosureResult, presentation: ExtPresentation,
                     hdeg_bound: Optional[int] = None) -> SpanReport:
    """
    Whether Ext^m = sum_j theta_(n+j) Ext^(m-2) for max(3, n+1) <= m <= N.

    theta_(n+j) is dual to the j-th degree-two variable of the closure.
    """
    bound = result.hdeg_bound if hdeg_bound is None else hdeg_bound
    algebra = result.extension
    central = {((i, 1),) for i, v in enumerate(algebra.variables) if v.hdeg == 2}
    if len(central) != presentation.c:
        raise PreconditionError("closure does not match the presentation",
                                precondition="skew_ci_closure", operation="noetherian_check")
    calculator = YonedaCalculator(result)
    report = SpanReport(True, bound)
    for m in range(max(3, presentation.n + 1), bound + 1):
        for d in algebra.words(m):
            rank, dimension = _span_rank(calculator, result, m, d, [(2, central)])
            report.rows.append({"degree": m, "ideg": d, "rank": rank, "dim": dimension})
            report.holds = report.holds and rank == dimension
    return report


# -- color Lie and associativity checks -------------------------------------------------


@dataclass
class CheckReport:
    holds: bool
    checked: int = 0
    failures: List[str] = field(default_factory=list)

    def to_dict(self) -> Dict[str, object]:
        return {"holds": self.holds, "checked": self.checked, "failures": self.failures}


def color_lie_check(result: ClosureResult, presentation: ExtPresentation,
                    convention: ProductConvention) -> CheckReport:
    """
    Color anti-commutativity and the color Jacobi identity for Yoneda brackets.

    Pairs and triples run over the degree-one generators; triples need N >= 3.
    """
    n = presentation.n
    thetas = generator_cocycles(result, n)
    ext = ExtAlgebra(YonedaCalculator(result), convention)
    report = CheckReport(True)
    for a, b in combinations(range(n), 2):
        x, y = thetas[a], thetas[b]
        total = ext.bracket(x, y).combine(ext.bracket(y, x), ext.commutation_factor(x, y))
        report.checked += 1
        if not total.is_zero():
            report.failures.append(f"anti-commutativity fails for theta{a + 1}, theta{b + 1}")
    if result.hdeg_bound >= 3:
        for a, b, c in combinations_with_replacement(range(n), 3):
            x, y, z = thetas[a], thetas[b], thetas[c]
            if x.ideg + y.ideg + z.ideg > result.degree_bound:
                continue
            terms = [
                (ext.commutation_factor(z, x), ext.bracket(x, ext.bracket(y, z))),
                (ext.commutation_factor(x, y), ext.bracket(y, ext.bracket(z, x))),
                (ext.commutation_factor(y, z), ext.bracket(z, ext.bracket(x, y))),
            ]
            total = ext.linear_combination(3, x.ideg + y.ideg + z.ideg, terms)
            report.checked += 1
            if not total.is_zero():
                report.failures.append(f"Jacobi identity fails for theta{a + 1}, theta{b + 1}, "
                                       f"theta{c + 1}")
    report.holds = not report.failures
    return report


def yoneda_associativity_check(result: ClosureResult,
                               triples: Optional[Sequence[Tuple[Cocycle, Cocycle, Cocycle]]] = None,
                               seed: int = 0, samples: int = 10) -> CheckReport:
    """(a b) c = a (b c) on given or randomly drawn triples of dual-basis cocycles."""
    calculator = YonedaCalculator(result)
    if triples is None:
        rng = random.Random(seed)
        pool = [c for m in range(1, result.hdeg_bound + 1) for c in ext_basis(result, m)]
        triples = []
        for _ in range(samples * 10):
            if len(triples) >= samples or not pool:
                break
            triple = tuple(rng.choice(pool) for _ in range(3))
            if (sum(c.hdeg for c in triple) <= result.hdeg_bound
                    and sum(c.ideg for c in triple) <= result.degree_bound):
                triples.append(triple)
    report = CheckReport(True)
    for a, b, c in triples:
        left = calculator.product(calculator.product(a, b), c)
        right = calculator.product(a, calculator.product(b, c))
        report.checked += 1
        if left.values != right.values:
            report.failures.append(f"associativity fails in degree {left.hdeg}")
    report.holds = not report.failures
    return report

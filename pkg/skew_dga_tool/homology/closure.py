"""
Homology of semi-free extensions and the acyclic closure of k.

The closure driver adjoins, round by round and in increasing internal degree,
one variable per basis class of the lowest nonvanishing homology. Because
H_0 = k, a k-basis of each stratum is a minimal generating set, so the
resulting variable counts are the deviations of R.
"""

import logging
import random
from dataclasses import dataclass, field
from typing import Dict, Iterator, List, Optional, Sequence, Tuple

from skew_dga_tool.algebra.field import Scalar
from skew_dga_tool.algebra.linalg import ExactMatrix, SparseVector, reduce_against
from skew_dga_tool.algebra.quotient import QuotientRing
from skew_dga_tool.algebra.skewpoly import ColorDegree, subtract_vectors
from skew_dga_tool.core.exceptions import (
    HomologyError, PreconditionError, TruncationError, VerificationError
)
from skew_dga_tool.dga.extension import DGElement, SemiFreeExtension
from skew_dga_tool.dga.koszul import koszul_on_variables
from skew_dga_tool.dga.words import Word
from skew_dga_tool.homology.strata import (
    Signature, boundary_vectors, stratum, stratum_classes, stratum_matrix
)

logger = logging.getLogger(__name__)


# -- homology -----------------------------------------------------------------------


def homology_dimensions(algebra: SemiFreeExtension, n: int, d_max: int,
                        max_size: Optional[int] = None) -> Dict[int, int]:
    """
    dim_k H_n in each internal degree 0..d_max.

    No exactness assumption: this is the plain rank computation
    dim(stratum) - rank(d_n) - rank(d_(n+1)), summed over color classes.
    """
    dimensions: Dict[int, int] = {}
    for d in range(d_max + 1):
        total = 0
        for signature in stratum_classes(algebra, n, d):
            size = len(stratum(algebra, n, d, signature, max_size))
            outgoing = stratum_matrix(algebra, n, d, signature, max_size).rank()
            incoming = stratum_matrix(algebra, n + 1, d, signature, max_size).rank()
            total += size - outgoing - incoming
        dimensions[d] = total
    return dimensions


def _random_scalar(algebra: SemiFreeExtension, rng: random.Random) -> Scalar:
    return algebra.field(rng.randint(-3, 3))


def homology_representatives(algebra: SemiFreeExtension, n: int, d: int, signature: Signature,
                             rng: Optional[random.Random] = None,
                             max_size: Optional[int] = None) -> List[DGElement]:
    """
    Cycles whose classes form a k-basis of one color block of H_n in degree d.

    Kernel vectors are reduced against the echelon form of the boundaries and
    then brought to reduced echelon form themselves, so the default choice is
    deterministic. With rng the basis is mixed by a random unitriangular
    transform, shifted by random boundaries and shuffled.

    Raises:
        HomologyError: If the boundaries do not lie in the kernel
    """
    source = stratum(algebra, n, d, signature, max_size)
    ground = algebra.field
    if n <= 0:
        kernel = [{i: ground.one} for i in range(len(source))]
    else:
        kernel = stratum_matrix(algebra, n, d, signature, max_size).kernel()
    boundaries = boundary_vectors(algebra, n, d, signature, max_size)
    rows, pivots = ExactMatrix(ground, len(boundaries), len(source), boundaries).echelon()
    reduced = [reduce_against(v, rows, pivots) for v in kernel]
    classes, _ = ExactMatrix(ground, len(reduced), len(source), reduced).echelon()
    if len(classes) != len(kernel) - len(pivots):
        raise HomologyError(f"boundaries are not cycles in stratum ({n}, {d})",
                            homological_degree=n, internal_degree=d,
                            operation="homology_basis")
    vectors: List[SparseVector] = [dict(v) for v in classes]
    if rng is not None and vectors:
        mixed = []
        for i, vector in enumerate(vectors):
            combination = dict(vector)
            for other in vectors[i + 1:]:
                _add_scaled(combination, other, _random_scalar(algebra, rng))
            for boundary in boundaries:
                _add_scaled(combination, boundary, _random_scalar(algebra, rng))
            mixed.append(combination)
        rng.shuffle(mixed)
        vectors = mixed
    return [source.element(algebra, v) for v in vectors]


def _add_scaled(target: SparseVector, vector: SparseVector, factor: Scalar):
    if not factor:
        return
    for j, value in vector.items():
        updated = target[j] + factor * value if j in target else factor * value
        if updated:
            target[j] = updated
        else:
            target.pop(j, None)


@dataclass
class HomologyBasis:
    """Cycle representatives of H_n, keyed by internal degree and class color."""
    n: int
    d_max: int
    representatives: Dict[Tuple[int, ColorDegree], List[DGElement]] = field(default_factory=dict)

    def dimensions(self) -> Dict[int, int]:
        out = {d: 0 for d in range(self.d_max + 1)}
        for (d, _), cycles in self.representatives.items():
            out[d] += len(cycles)
        return out

    def cycles(self) -> Iterator[DGElement]:
        for key in sorted(self.representatives):
            yield from self.representatives[key]

    def __len__(self) -> int:
        return sum(len(c) for c in self.representatives.values())


def check_exactness(algebra: SemiFreeExtension, n: int, d_max: int,
                    max_size: Optional[int] = None):
    """
    Require H_0 = k and H_i = 0 for 1 <= i < n up to degree d_max.

    Raises:
        HomologyError: Naming the first nonvanishing homology found
    """
    for i in range(n):
        for d, dimension in homology_dimensions(algebra, i, d_max, max_size).items():
            expected = 1 if (i == 0 and d == 0) else 0
            if dimension != expected:
                raise HomologyError(f"H_{i} has dimension {dimension} in internal degree {d}, "
                                    f"expected {expected}", homological_degree=i,
                                    internal_degree=d, operation="homology_basis")


def homology_basis(algebra: SemiFreeExtension, n: int, d_max: int,
                   check_exactness_below: bool = False, rng: Optional[random.Random] = None,
                   max_size: Optional[int] = None) -> HomologyBasis:
    """
    Homology representatives of H_n in internal degrees 0..d_max.

    Args:
        algebra: The extension
        n: Homological degree
        d_max: Largest internal degree (at most D)
        check_exactness_below: Verify that the extension is exact below n first
        rng: Optional random source for randomized representative choices
        max_size: Optional limit on stratum sizes

    Raises:
        HomologyError: If exactness is requested and fails
        TruncationError: If d_max exceeds the internal truncation
    """
    if d_max > algebra.degree_bound:
        raise TruncationError(f"internal degree {d_max} exceeds the truncation "
                              f"{algebra.degree_bound}", requested=d_max,
                              bound=algebra.degree_bound, operation="homology_basis")
    if check_exactness_below:
        check_exactness(algebra, n, d_max, max_size)
    basis = HomologyBasis(n, d_max)
    for d in range(d_max + 1):
        for signature, color in stratum_classes(algebra, n, d).items():
            cycles = homology_representatives(algebra, n, d, signature, rng, max_size)
            if cycles:
                basis.representatives[(d, color)] = cycles
    return basis


# -- deviations and closures --------------------------------------------------------


@dataclass
class DeviationTable:
    """Counts of adjoined variables by (homological degree, color, internal degree)."""
    counts: Dict[Tuple[int, ColorDegree, int], int] = field(default_factory=dict)

    @classmethod
    def from_extension(cls, algebra: SemiFreeExtension) -> "DeviationTable":
        counts: Dict[Tuple[int, ColorDegree, int], int] = {}
        for variable in algebra.variables:
            key = (variable.hdeg, tuple(variable.color), variable.ideg)
            counts[key] = counts.get(key, 0) + 1
        return cls(dict(sorted(counts.items())))

    def total(self, i: int) -> int:
        return sum(c for (h, _, _), c in self.counts.items() if h == i)

    def totals(self, max_hdeg: Optional[int] = None) -> Dict[int, int]:
        top = max_hdeg if max_hdeg is not None else max((h for h, _, _ in self.counts), default=0)
        return {i: self.total(i) for i in range(1, top + 1)}

    def filter(self, color: Optional[Sequence[int]] = None) -> "DeviationTable":
        if color is None:
            return self
        color = tuple(color)
        return DeviationTable({k: v for k, v in self.counts.items() if k[1] == color})

    def rows(self) -> List[Tuple[int, ColorDegree, int, int]]:
        return [(i, sigma, j, c) for (i, sigma, j), c in sorted(self.counts.items())]

    def to_dict(self) -> Dict[str, object]:
        return {
            "entries": [{"hdeg": i, "color": list(sigma), "ideg": j, "count": c}
                        for i, sigma, j, c in self.rows()],
            "totals": {str(i): t for i, t in self.totals().items()},
        }

    def __eq__(self, other: object) -> bool:
        return isinstance(other, DeviationTable) and self.counts == other.counts


@dataclass
class ClosureResult:
    """A truncated acyclic closure with its deviations."""
    extension: SemiFreeExtension
    deviations: DeviationTable
    hdeg_bound: int
    degree_bound: int
    minimality_violations: List[Tuple[Word, Word]] = field(default_factory=list)
    warnings: List[str] = field(default_factory=list)
    method: str = "acyclic_closure"

    @property
    def base(self) -> QuotientRing:
        return self.extension.base

    @property
    def is_minimal(self) -> bool:
        return not self.minimality_violations


def deviations(result: ClosureResult) -> DeviationTable:
    return result.deviations


def verify_minimality(algebra: SemiFreeExtension,
                      max_hdeg: Optional[int] = None) -> List[Tuple[Word, Word]]:
    """
    Pairs (w, w') where d(w) has a term 1 * w', i.e. a coefficient outside R_+.

    An empty list certifies d(F) in R_+ F on all words up to the bounds.
    """
    if max_hdeg is None:
        max_hdeg = algebra.hdeg_bound or max((v.hdeg for v in algebra.variables), default=0)
    unit = algebra.ring.unit
    violations = []
    for word in algebra.iter_words(max_hdeg):
        for (target, monomial), value in algebra.word_differential(word).items():
            if monomial == unit and value:
                violations.append((word, target))
    return violations


def _check_linear_free(base: QuotientRing, operation: str):
    for f in base.relations:
        if any(sum(m) < 2 for m in f.terms):
            raise PreconditionError(f"relation {f.to_text()} has a term of degree below two",
                                    precondition="relations_in_square_of_maximal_ideal",
                                    operation=operation)


def _with_degree_bound(base: QuotientRing, degree_bound: Optional[int]) -> QuotientRing:
    if degree_bound is None or degree_bound == base.degree_bound:
        return base
    if degree_bound < base.degree_bound:
        return QuotientRing(base.ring, base.relations, degree_bound, basis=base.basis)
    return QuotientRing(base.ring, base.relations, degree_bound)


def _finish(algebra: SemiFreeExtension, hdeg_bound: int, degree_bound: int,
            warnings: List[str], method: str, max_size: Optional[int]) -> ClosureResult:
    for n in range(1, hdeg_bound):
        dims = homology_dimensions(algebra, n, degree_bound, max_size)
        bad = {d: v for d, v in dims.items() if v}
        if bad:
            d = min(bad)
            message = f"H_{n} does not vanish in internal degree {d} (dimension {bad[d]})"
            if method == "acyclic_closure":
                raise HomologyError(message, homological_degree=n, internal_degree=d,
                                    operation=method)
            raise VerificationError(message, check="acyclicity", details=[(n, d, bad[d])],
                                    operation=method)
    violations = verify_minimality(algebra, hdeg_bound)
    if violations:
        text = ", ".join(f"d({algebra.word_text(w)}) contains {algebra.word_text(t)}"
                         for w, t in violations[:5])
        raise VerificationError(f"differential is not minimal: {text}", check="minimality",
                                details=violations, operation=method)
    table = DeviationTable.from_extension(algebra)
    logger.info(f"{method}: {len(algebra.variables)} variables to (N={hdeg_bound}, "
                f"D={degree_bound}), totals {table.totals(hdeg_bound)}")
    return ClosureResult(algebra, table, hdeg_bound, degree_bound, violations, warnings, method)


def acyclic_closure(base: QuotientRing, hdeg_bound: int, degree_bound: Optional[int] = None,
                    seed: Optional[int] = None, max_size: Optional[int] = None) -> ClosureResult:
    """
    Truncated acyclic closure of k over R.

    Args:
        base: Quotient ring R whose relations lie in (x_1, ..., x_n)^2
        hdeg_bound: Homological bound N; variables of degree <= N are adjoined
        degree_bound: Internal bound D (defaults to the truncation of R)
        seed: Randomizes representative choices and variable order when given
        max_size: Optional limit on stratum sizes

    Returns:
        ClosureResult with H_i = 0 for 1 <= i < N up to degree D

    Raises:
        PreconditionError: If a relation has a linear or constant term
        HomologyError: If a round leaves homology behind
        VerificationError: If the differential is not minimal
    """
    _check_linear_free(base, "acyclic_closure")
    base = _with_degree_bound(base, degree_bound)
    degree_bound = base.degree_bound
    warnings: List[str] = []
    if degree_bound < hdeg_bound:
        message = (f"internal bound D={degree_bound} is below N={hdeg_bound}; "
                   f"variables of high homological degree may be missed")
        logger.warning(message)
        warnings.append(message)
    rng = random.Random(seed) if seed is not None else None

    algebra = koszul_on_variables(base, hdeg_bound)
    for n in range(1, hdeg_bound):
        for d in range(1, degree_bound + 1):
            pending = []
            for signature, color in stratum_classes(algebra, n, d).items():
                for z in homology_representatives(algebra, n, d, signature, rng, max_size):
                    pending.append((z, (n + 1, d, color)))
            if not pending:
                continue
            if rng is not None:
                rng.shuffle(pending)
            algebra = algebra.adjoin_variables([z for z, _ in pending],
                                               [degrees for _, degrees in pending])
            logger.debug(f"round {n}: adjoined {len(pending)} variables in internal degree {d}")
        logger.info(f"round {n} complete: {len(algebra.variables)} variables")
    return _finish(algebra, hdeg_bound, degree_bound, warnings, "acyclic_closure", max_size)


def koszul_cycles(algebra: SemiFreeExtension) -> List[Tuple[DGElement, int]]:
    """
    The cycles sum c x^(M - e_i) y_i lifting each relation through K^R(x).

    For every support monomial x^M of f_j, i is the largest index with M_i > 0,
    so x^M = x^(M - e_i) x_i without reordering.
    """
    ring = algebra.ring
    cycles = []
    for f in algebra.base.relations:
        terms = {}
        for monomial, coefficient in f.terms.items():
            i = max(k for k, e in enumerate(monomial) if e)
            terms[(((i, 1),), subtract_vectors(monomial, ring.unit_vector(i)))] = coefficient
        cycles.append((algebra.element(terms), f.internal_degree()))
    return cycles


def skew_ci_closure(base: QuotientRing, hdeg_bound: int, degree_bound: Optional[int] = None,
                    max_size: Optional[int] = None) -> ClosureResult:
    """
    The explicit acyclic closure of a skew complete intersection.

    K^R(x) with divided-power variables y_(n+j) of homological degree two,
    d(y_(n+j)) = sum_i a_ij y_i where f_j = sum_i a_ij x_i. Acyclicity and
    minimality are verified by homology computation up to the bounds.

    Raises:
        PreconditionError: If R is not a skew complete intersection
        VerificationError: If the constructed extension is not acyclic
    """
    _check_linear_free(base, "skew_ci_closure")
    base = _with_degree_bound(base, degree_bound)
    degree_bound = base.degree_bound
    regularity = base.is_skew_complete_intersection()
    if not regularity:
        raise PreconditionError(f"not a skew complete intersection: {regularity.describe()}",
                                precondition="skew_complete_intersection",
                                operation="skew_ci_closure")
    warnings: List[str] = []
    algebra = koszul_on_variables(base, hdeg_bound)
    if hdeg_bound >= 2:
        pending = []
        for z, degree in koszul_cycles(algebra):
            if degree > degree_bound:
                message = f"relation of degree {degree} lies above D={degree_bound}; skipped"
                logger.warning(message)
                warnings.append(message)
                continue
            classes = stratum_classes(algebra, 1, degree)
            color = classes[algebra.ring.color_signature(z.color())]
            pending.append((z, (2, degree, color)))
        algebra = algebra.adjoin_variables([z for z, _ in pending], [g for _, g in pending])
    return _finish(algebra, hdeg_bound, degree_bound, warnings, "skew_ci_closure", max_size)

"""
Exact linear algebra over the ground field.

Sparse row-oriented matrices whose echelon forms are computed with sympy's
DomainMatrix, so every rank, kernel and solution is exact over QQ or GF(p).
"""

import logging
from typing import Dict, List, Optional, Sequence, Tuple

from sympy.polys.matrices import DomainMatrix

from skew_dga_tool.algebra.field import Scalar, ScalarField
from skew_dga_tool.core.exceptions import DimensionMismatchError

logger = logging.getLogger(__name__)

SparseVector = Dict[int, Scalar]


class ExactMatrix:
    """
    An m x n matrix stored as a list of sparse rows.

    Instances are treated as immutable; the echelon form is computed once and
    memoized.
    """

    def __init__(self, field: ScalarField, nrows: int, ncols: int,
                 rows: Optional[Sequence[SparseVector]] = None):
        """
        Initialize the matrix.

        Args:
            field: Ground field of the entries
            nrows: Number of rows
            ncols: Number of columns
            rows: Sparse rows (column index -> nonzero entry); missing rows are zero
        """
        self.field = field
        self.nrows = nrows
        self.ncols = ncols
        self.rows: List[SparseVector] = [dict(r) for r in rows] if rows is not None else []
        self.rows.extend({} for _ in range(nrows - len(self.rows)))
        if len(self.rows) != nrows:
            raise DimensionMismatchError("row count does not match the declared shape",
                                         expected=nrows, actual=len(self.rows))
        self._echelon: Optional[Tuple[List[SparseVector], Tuple[int, ...]]] = None

    @classmethod
    def from_columns(cls, field: ScalarField, nrows: int,
                     columns: Sequence[SparseVector]) -> "ExactMatrix":
        """Build a matrix whose j-th column is columns[j]."""
        rows: List[SparseVector] = [{} for _ in range(nrows)]
        for j, column in enumerate(columns):
            for i, value in column.items():
                if value:
                    rows[i][j] = value
        return cls(field, nrows, len(columns), rows)

    def entry(self, i: int, j: int) -> Scalar:
        return self.rows[i].get(j, self.field.zero)

    def column(self, j: int) -> SparseVector:
        return {i: row[j] for i, row in enumerate(self.rows) if j in row}

    def columns(self) -> List[SparseVector]:
        cols: List[SparseVector] = [{} for _ in range(self.ncols)]
        for i, row in enumerate(self.rows):
            for j, value in row.items():
                cols[j][i] = value
        return cols

    def is_zero(self) -> bool:
        return not any(self.rows)

    def entries(self):
        """Iterate over (i, j, value) for the nonzero entries."""
        for i, row in enumerate(self.rows):
            for j, value in sorted(row.items()):
                yield i, j, value

    def to_domain_matrix(self) -> DomainMatrix:
        data = {i: dict(row) for i, row in enumerate(self.rows) if row}
        return DomainMatrix(data, (self.nrows, self.ncols), self.field.domain)

    def matmul(self, other: "ExactMatrix") -> "ExactMatrix":
        """Matrix product self * other."""
        if self.ncols != other.nrows:
            raise DimensionMismatchError("inner dimensions differ", expected=self.ncols,
                                         actual=other.nrows, operation="matmul")
        out: List[SparseVector] = []
        for row in self.rows:
            acc: SparseVector = {}
            for k, a in row.items():
                for j, b in other.rows[k].items():
                    value = acc.get(j, self.field.zero) + a * b
                    if value:
                        acc[j] = value
                    else:
                        acc.pop(j, None)
            out.append(acc)
        return ExactMatrix(self.field, self.nrows, other.ncols, out)

    def echelon(self) -> Tuple[List[SparseVector], Tuple[int, ...]]:
        """
        Reduced row echelon form.

        Returns:
            The nonzero rows of the reduced form and the tuple of pivot columns
        """
        if self._echelon is None:
            self._echelon = _rref(self.field, self.rows, self.nrows, self.ncols)
        return self._echelon

    def rank(self) -> int:
        return len(self.echelon()[1])

    def kernel(self) -> List[SparseVector]:
        """Basis of {v : self * v = 0}, one vector per free column."""
        rows, pivots = self.echelon()
        pivot_set = set(pivots)
        basis: List[SparseVector] = []
        for free in range(self.ncols):
            if free in pivot_set:
                continue
            vector: SparseVector = {free: self.field.one}
            for row, pivot in zip(rows, pivots):
                value = row.get(free)
                if value:
                    vector[pivot] = -value
            basis.append(vector)
        return basis

    def solve(self, target: SparseVector) -> Optional[SparseVector]:
        """
        One solution v of self * v = target, free variables set to zero.

        Returns:
            The solution, or None if the system is inconsistent
        """
        if not target:
            return {}
        augmented = [dict(row) for row in self.rows]
        for i, value in target.items():
            if value:
                augmented[i][self.ncols] = value
        rows, pivots = _rref(self.field, augmented, self.nrows, self.ncols + 1)
        if pivots and pivots[-1] == self.ncols:
            return None
        solution: SparseVector = {}
        for row, pivot in zip(rows, pivots):
            value = row.get(self.ncols)
            if value:
                solution[pivot] = value
        return solution


def _rref(field: ScalarField, rows: Sequence[SparseVector], nrows: int,
          ncols: int) -> Tuple[List[SparseVector], Tuple[int, ...]]:
    if nrows == 0 or ncols == 0 or not any(rows):
        return [], ()
    data = {i: dict(row) for i, row in enumerate(rows) if row}
    matrix = DomainMatrix(data, (nrows, ncols), field.domain)
    reduced, pivots = matrix.rref()
    dense = reduced.to_list()
    out: List[SparseVector] = []
    for r in range(len(pivots)):
        out.append({j: value for j, value in enumerate(dense[r]) if value})
    return out, tuple(pivots)


def rank_of_vectors(field: ScalarField, vectors: Sequence[SparseVector], dimension: int) -> int:
    """Rank of the span of sparse vectors in a space of the given dimension."""
    return ExactMatrix(field, len(vectors), dimension, vectors).rank()


def reduce_against(vector: SparseVector, rows: Sequence[SparseVector],
                   pivots: Sequence[int]) -> SparseVector:
    """Eliminate the pivot coordinates of a reduced echelon basis from vector."""
    out = dict(vector)
    for row, pivot in zip(rows, pivots):
        factor = out.get(pivot)
        if not factor:
            continue
        for j, value in row.items():
            if j in out:
                updated = out[j] - factor * value
            else:
                updated = -factor * value
            if updated:
                out[j] = updated
            else:
                out.pop(j, None)
    return out

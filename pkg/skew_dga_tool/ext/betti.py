"""
Betti numbers and Poincare series.

The closure is the minimal free resolution of k, so its basis words of
homological degree i and internal degree j count b_ij. Row sums are reported
only as complete when every word of that homological degree fits under D.
"""

from dataclasses import dataclass, field
from typing import Dict, List, Optional, Sequence, Tuple

from skew_dga_tool.algebra.series import (
    TruncatedSeries, inverse_one_minus_t_power, one_plus_t_power, product
)
from skew_dga_tool.dga.words import DGVariable
from skew_dga_tool.homology.closure import ClosureResult, DeviationTable


def max_word_ideg(variables: Sequence[DGVariable], n: int) -> Optional[int]:
    """Largest internal degree of a word of homological degree n, ignoring D (None if none)."""
    best: Dict[int, int] = {0: 0}
    for variable in variables:
        h, d = variable.hdeg, variable.ideg
        if variable.is_exterior:
            updated = dict(best)
            for total, value in best.items():
                if total + h <= n:
                    updated[total + h] = max(updated.get(total + h, -1), value + d)
            best = updated
        else:
            for total in range(0, n - h + 1):
                if total in best:
                    best[total + h] = max(best.get(total + h, -1), best[total] + d)
    return best.get(n)


@dataclass
class BettiTable:
    """b_ij = number of closure words of homological degree i and internal degree j."""
    entries: Dict[Tuple[int, int], int]
    hdeg_bound: int
    degree_bound: int
    complete_rows: Tuple[int, ...] = field(default_factory=tuple)

    def get(self, i: int, j: int) -> int:
        return self.entries.get((i, j), 0)

    def row_sum(self, i: int) -> int:
        return sum(c for (h, _), c in self.entries.items() if h == i)

    def row_sums(self) -> List[int]:
        return [self.row_sum(i) for i in range(self.hdeg_bound + 1)]

    def is_complete(self, i: int) -> bool:
        return i in self.complete_rows

    def to_dict(self) -> Dict[str, object]:
        return {
            "entries": [{"hdeg": i, "ideg": j, "count": c}
                        for (i, j), c in sorted(self.entries.items())],
            "row_sums": self.row_sums(),
            "complete_rows": list(self.complete_rows),
        }


def betti_table(result: ClosureResult) -> BettiTable:
    """Count closure words per bidegree up to (N, D)."""
    algebra = result.extension
    entries: Dict[Tuple[int, int], int] = {}
    complete = []
    for i in range(result.hdeg_bound + 1):
        for j, words in algebra.words(i).items():
            if words:
                entries[(i, j)] = len(words)
        top = max_word_ideg(algebra.variables, i)
        if top is None or top <= result.degree_bound:
            complete.append(i)
    return BettiTable(entries, result.hdeg_bound, result.degree_bound, tuple(complete))


def poincare_from_deviations(table: DeviationTable, hdeg_bound: int) -> TruncatedSeries:
    """prod_{i odd} (1 + t^i)^e_i / prod_{i even} (1 - t^i)^e_i, truncated at N."""
    factors = []
    for i, count in table.totals(hdeg_bound).items():
        if not count:
            continue
        if i % 2:
            factors.append(one_plus_t_power(i, count, hdeg_bound))
        else:
            factors.append(inverse_one_minus_t_power(i, count, hdeg_bound))
    return product(factors, hdeg_bound)


def poincare_closed_form(n: int, c: int, hdeg_bound: int) -> TruncatedSeries:
    """(1 + t)^n / (1 - t^2)^c, the Poincare series of a skew complete intersection."""
    return one_plus_t_power(1, n, hdeg_bound) * inverse_one_minus_t_power(2, c, hdeg_bound)

"""
Truncated power series with integer coefficients.

Carrier for Hilbert series, Poincare series and PBW dimension counts.
"""

from dataclasses import dataclass
from math import comb
from typing import List, Sequence, Tuple


@dataclass(frozen=True)
class TruncatedSeries:
    """Coefficients c_0..c_D of a power series known up to degree D."""
    coefficients: Tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "coefficients", tuple(int(c) for c in self.coefficients))

    @classmethod
    def one(cls, bound: int) -> "TruncatedSeries":
        return cls((1,) + (0,) * bound)

    @property
    def bound(self) -> int:
        return len(self.coefficients) - 1

    def __len__(self) -> int:
        return len(self.coefficients)

    def __getitem__(self, degree: int) -> int:
        return self.coefficients[degree]

    def __iter__(self):
        return iter(self.coefficients)

    def __mul__(self, other: "TruncatedSeries") -> "TruncatedSeries":
        bound = min(self.bound, other.bound)
        out = [0] * (bound + 1)
        for i, a in enumerate(self.coefficients[:bound + 1]):
            if not a:
                continue
            for j, b in enumerate(other.coefficients[:bound + 1 - i]):
                out[i + j] += a * b
        return TruncatedSeries(tuple(out))

    def truncate(self, bound: int) -> "TruncatedSeries":
        return TruncatedSeries(self.coefficients[:bound + 1])

    def to_list(self) -> List[int]:
        return list(self.coefficients)


def one_plus_t_power(degree: int, exponent: int, bound: int) -> TruncatedSeries:
    """(1 + t^degree)^exponent truncated at bound."""
    out = [0] * (bound + 1)
    for k in range(exponent + 1):
        if k * degree > bound:
            break
        out[k * degree] += comb(exponent, k)
    return TruncatedSeries(tuple(out))


def inverse_one_minus_t_power(degree: int, exponent: int, bound: int) -> TruncatedSeries:
    """1 / (1 - t^degree)^exponent truncated at bound."""
    out = [0] * (bound + 1)
    for k in range(bound // degree + 1):
        out[k * degree] = comb(k + exponent - 1, exponent - 1) if exponent else int(k == 0)
    return TruncatedSeries(tuple(out))


def product(factors: Sequence[TruncatedSeries], bound: int) -> TruncatedSeries:
    result = TruncatedSeries.one(bound)
    for factor in factors:
        result = result * factor
    return result

"""
Adjoined variables and normal words.

A word is the normal monomial y_1^(i_1) ... y_q^(i_q), stored as a tuple of
(variable index, exponent) pairs with strictly increasing indices. Exterior
variables only ever carry exponent 1.
"""

from dataclasses import dataclass
from enum import Enum
from typing import Optional, Sequence, Tuple

from skew_dga_tool.algebra.skewpoly import ColorDegree, add_vectors

Word = Tuple[Tuple[int, int], ...]

EMPTY_WORD: Word = ()


class VariableKind(str, Enum):
    """Exterior variables have odd homological degree, divided-power variables even."""
    EXTERIOR = "exterior"
    DIVIDED = "divided"


@dataclass(frozen=True)
class DGVariable:
    """An adjoined variable with its tri-degree."""
    index: int
    hdeg: int
    ideg: int
    color: ColorDegree
    kind: Optional[VariableKind] = None

    def __post_init__(self):
        kind = VariableKind.EXTERIOR if self.hdeg % 2 else VariableKind.DIVIDED
        if self.kind is None:
            object.__setattr__(self, "kind", kind)
        elif VariableKind(self.kind) != kind:
            raise ValueError(f"variable of homological degree {self.hdeg} must be {kind.value}")
        object.__setattr__(self, "color", tuple(self.color))

    @property
    def name(self) -> str:
        return f"y{self.index + 1}"

    @property
    def is_exterior(self) -> bool:
        return self.kind == VariableKind.EXTERIOR

    def describe(self) -> str:
        color = ",".join(str(c) for c in self.color)
        return f"{self.name} (|y|={self.hdeg}, deg={self.ideg}, color=[{color}], {self.kind.value})"


def word_hdeg(word: Word, variables: Sequence[DGVariable]) -> int:
    return sum(e * variables[i].hdeg for i, e in word)


def word_ideg(word: Word, variables: Sequence[DGVariable]) -> int:
    return sum(e * variables[i].ideg for i, e in word)


def word_color(word: Word, variables: Sequence[DGVariable], n: int) -> ColorDegree:
    color: ColorDegree = (0,) * n
    for i, e in word:
        color = add_vectors(color, tuple(e * c for c in variables[i].color))
    return color


def word_text(word: Word, variables: Sequence[DGVariable]) -> str:
    """Print a word, e.g. 'y1*y3^(2)'; the empty word prints as '1'."""
    if not word:
        return "1"
    parts = []
    for i, e in word:
        name = variables[i].name
        parts.append(name if e == 1 else f"{name}^({e})")
    return "*".join(parts)


def is_valid_word(word: Word, variables: Sequence[DGVariable]) -> bool:
    """Indices strictly increasing, in range, exterior exponents equal to one."""
    previous = -1
    for i, e in word:
        if i <= previous or i >= len(variables) or e < 1:
            return False
        if variables[i].is_exterior and e != 1:
            return False
        previous = i
    return True

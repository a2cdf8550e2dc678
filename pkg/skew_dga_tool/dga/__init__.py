"""
DG algebra module for the skew DGA tool.

Semi-free extensions of a quotient ring by exterior and divided-power
variables, their products, differentials and the skew Koszul complex.
"""

from skew_dga_tool.dga.words import DGVariable, VariableKind, Word, EMPTY_WORD
from skew_dga_tool.dga.extension import (
    SemiFreeExtension, DGElement, dg_multiply, differential, adjoin_variable
)
from skew_dga_tool.dga.divided_powers import divided_power
from skew_dga_tool.dga.koszul import koszul_complex, koszul_on_variables

__all__ = [
    "DGVariable",
    "VariableKind",
    "Word",
    "EMPTY_WORD",
    "SemiFreeExtension",
    "DGElement",
    "dg_multiply",
    "differential",
    "adjoin_variable",
    "divided_power",
    "koszul_complex",
    "koszul_on_variables"
]

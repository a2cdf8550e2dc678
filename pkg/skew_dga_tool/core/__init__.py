"""
Core module for the skew DGA tool.

Contains the exception hierarchy and centralized error handling.
"""

from skew_dga_tool.core.exceptions import (
    AlgebraError, DimensionMismatchError, ZeroElementError, HomogeneityError, NormalityError,
    TruncationError, CycleError, PreconditionError, HomologyError, VerificationError,
    SpecParseError, ConfigurationError
)
from skew_dga_tool.core.error_handler import ErrorHandler, ErrorContext, ErrorSeverity, ExitStatus

__all__ = [
    "AlgebraError",
    "DimensionMismatchError",
    "ZeroElementError",
    "HomogeneityError",
    "NormalityError",
    "TruncationError",
    "CycleError",
    "PreconditionError",
    "HomologyError",
    "VerificationError",
    "SpecParseError",
    "ConfigurationError",
    "ErrorHandler",
    "ErrorContext",
    "ErrorSeverity",
    "ExitStatus"
]

"""
Custom exception classes for the skew DGA tool.

Provides specific error types for the failure scenarios of ring construction,
truncated Groebner computations, DG algebra arithmetic and Ext verification.
"""

from typing import Optional, Dict, Any, Sequence


class AlgebraError(Exception):
    """Base exception for all algebra-related errors."""

    def __init__(self, message: str, error_type: str, operation: Optional[str] = None,
                 context: Optional[Dict[str, Any]] = None):
        """
        Initialize algebra error.

        Args:
            message: Error message
            error_type: Type of error (e.g., 'normality', 'truncation', 'parse')
            operation: Operation where the error occurred (optional)
            context: Additional error context (optional)
        """
        self.message = message
        self.error_type = error_type
        self.operation = operation
        self.context = context or {}
        super().__init__(message)

    def __str__(self) -> str:
        """Return string representation of the error."""
        error_str = f"[{self.error_type.upper()}] {self.message}"
        if self.operation:
            error_str += f" (operation: {self.operation})"
        return error_str


class DimensionMismatchError(AlgebraError):
    """Exception for vectors, rings or extensions that do not belong together."""

    def __init__(self, message: str, expected: Optional[Any] = None,
                 actual: Optional[Any] = None, operation: Optional[str] = None,
                 context: Optional[Dict[str, Any]] = None):
        """
        Initialize dimension mismatch error.

        Args:
            message: Error message
            expected: Expected length or ambient object
            actual: Length or ambient object that was received
            operation: Operation where the mismatch was detected
            context: Additional error context
        """
        super().__init__(message, "dimension", operation, context)
        self.expected = expected
        self.actual = actual


class ZeroElementError(AlgebraError):
    """Exception for operations that are undefined on the zero element."""

    def __init__(self, message: str, operation: Optional[str] = None,
                 context: Optional[Dict[str, Any]] = None):
        super().__init__(message, "zero_element", operation, context)


class HomogeneityError(AlgebraError):
    """Exception for inhomogeneous input where a homogeneous element is required."""

    def __init__(self, message: str, degrees: Optional[Sequence[Any]] = None,
                 operation: Optional[str] = None, context: Optional[Dict[str, Any]] = None):
        """
        Initialize homogeneity error.

        Args:
            message: Error message
            degrees: The distinct degrees found in the offending element
            operation: Operation where the error occurred
            context: Additional error context
        """
        super().__init__(message, "homogeneity", operation, context)
        self.degrees = list(degrees) if degrees is not None else []


class NormalityError(AlgebraError):
    """Exception for elements that fail the normality test."""

    def __init__(self, message: str, element_text: Optional[str] = None,
                 variable: Optional[int] = None,
                 monomials: Optional[Sequence[Sequence[int]]] = None,
                 operation: Optional[str] = None, context: Optional[Dict[str, Any]] = None):
        """
        Initialize normality error.

        Args:
            message: Error message
            element_text: Printed form of the offending element
            variable: 0-based index of the variable exposing the failure
            monomials: Two support monomials that commute differently with that variable
            operation: Operation where the error occurred
            context: Additional error context
        """
        super().__init__(message, "normality", operation, context)
        self.element_text = element_text
        self.variable = variable
        self.monomials = [tuple(m) for m in monomials] if monomials else []


class TruncationError(AlgebraError):
    """Exception for requests beyond the homological or internal truncation."""

    def __init__(self, message: str, requested: Optional[int] = None,
                 bound: Optional[int] = None, grading: str = "internal",
                 operation: Optional[str] = None, context: Optional[Dict[str, Any]] = None):
        """
        Initialize truncation error.

        Args:
            message: Error message
            requested: Degree that was requested
            bound: Truncation bound in force
            grading: Either 'internal' or 'homological'
            operation: Operation where the error occurred
            context: Additional error context
        """
        super().__init__(message, "truncation", operation, context)
        self.requested = requested
        self.bound = bound
        self.grading = grading


class CycleError(AlgebraError):
    """Exception for elements that cannot be killed by adjoining a variable."""

    def __init__(self, message: str, operation: Optional[str] = None,
                 context: Optional[Dict[str, Any]] = None):
        super().__init__(message, "cycle", operation, context)


class PreconditionError(AlgebraError):
    """Exception for violated operation preconditions."""

    def __init__(self, message: str, precondition: Optional[str] = None,
                 operation: Optional[str] = None, context: Optional[Dict[str, Any]] = None):
        """
        Initialize precondition error.

        Args:
            message: Error message
            precondition: Short name of the violated precondition
            operation: Operation where the error occurred
            context: Additional error context
        """
        super().__init__(message, "precondition", operation, context)
        self.precondition = precondition


class HomologyError(AlgebraError):
    """Exception for inconsistent or non-vanishing homology where exactness is required."""

    def __init__(self, message: str, homological_degree: Optional[int] = None,
                 internal_degree: Optional[int] = None, operation: Optional[str] = None,
                 context: Optional[Dict[str, Any]] = None):
        super().__init__(message, "homology", operation, context)
        self.homological_degree = homological_degree
        self.internal_degree = internal_degree


class VerificationError(AlgebraError):
    """Exception for failed runtime verifications."""

    def __init__(self, message: str, check: Optional[str] = None,
                 details: Optional[Sequence[Any]] = None, operation: Optional[str] = None,
                 context: Optional[Dict[str, Any]] = None):
        """
        Initialize verification error.

        Args:
            message: Error message
            check: Name of the failed check (e.g. 'minimality', 'lifting')
            details: Offending items collected by the check
            operation: Operation where the error occurred
            context: Additional error context
        """
        super().__init__(message, "verification", operation, context)
        self.check = check
        self.details = list(details) if details is not None else []


class SpecParseError(AlgebraError):
    """Exception for ring-spec syntax and validation errors."""

    def __init__(self, message: str, line: Optional[int] = None, column: Optional[int] = None,
                 context: Optional[Dict[str, Any]] = None):
        """
        Initialize spec parse error.

        Args:
            message: Error message
            line: 1-based line number of the offending input
            column: 1-based column number of the offending input
            context: Additional error context
        """
        super().__init__(message, "parse", "parse_ring_spec", context)
        self.line = line
        self.column = column

    def __str__(self) -> str:
        """Return string representation including the input position."""
        error_str = f"[{self.error_type.upper()}] {self.message}"
        if self.line is not None:
            error_str += f" (line {self.line}"
            if self.column is not None:
                error_str += f", column {self.column}"
            error_str += ")"
        return error_str


class ConfigurationError(AlgebraError):
    """Exception for configuration-related errors."""

    def __init__(self, message: str, config_key: Optional[str] = None,
                 context: Optional[Dict[str, Any]] = None):
        """
        Initialize configuration error.

        Args:
            message: Error message
            config_key: Configuration key that caused the error
            context: Additional error context
        """
        super().__init__(message, "configuration", context=context)
        self.config_key = config_key

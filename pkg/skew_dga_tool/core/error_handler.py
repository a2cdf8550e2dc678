"""
Error handling for the skew DGA tool.

Provides centralized error handling with categorized error types, severity
levels and the mapping from failures to process exit statuses.
"""

import logging
import time
from dataclasses import dataclass
from enum import Enum, IntEnum
from typing import Optional, Dict, Any

from skew_dga_tool.core.exceptions import (
    AlgebraError, ConfigurationError, CycleError, DimensionMismatchError, HomogeneityError,
    HomologyError, NormalityError, PreconditionError, SpecParseError, TruncationError,
    VerificationError, ZeroElementError
)


class ErrorSeverity(Enum):
    """Error severity levels."""
    LOW = "low"
    MEDIUM = "medium"
    HIGH = "high"
    CRITICAL = "critical"


class ExitStatus(IntEnum):
    """Process exit statuses of the command line tool."""
    OK = 0
    VERIFICATION_FAILURE = 1
    INPUT_ERROR = 2


INPUT_ERRORS = (
    SpecParseError, ConfigurationError, NormalityError, HomogeneityError, ZeroElementError,
    DimensionMismatchError, PreconditionError, TruncationError, CycleError
)


@dataclass
class ErrorContext:
    """Context information for error handling."""
    operation: str
    command: Optional[str] = None
    start_time: float = None
    metadata: Dict[str, Any] = None

    def __post_init__(self):
        """Initialize default values."""
        if self.start_time is None:
            self.start_time = time.time()
        if self.metadata is None:
            self.metadata = {}


class ErrorHandler:
    """
    Centralized error handling for command execution.

    Classifies errors into input errors and verification failures, logs them
    with a severity and keeps running statistics for the session.
    """

    def __init__(self):
        """Initialize error handler."""
        self.logger = logging.getLogger(__name__)
        self._error_stats = {
            "total_errors": 0,
            "input_errors": 0,
            "verification_failures": 0,
            "internal_errors": 0
        }

    def handle_error(self, error: Exception, context: ErrorContext) -> ExitStatus:
        """
        Handle an error and decide the exit status it maps to.

        Args:
            error: The exception that occurred
            context: Context information about the error

        Returns:
            ExitStatus: Status the process should exit with
        """
        self._error_stats["total_errors"] += 1
        self._log_error(error, context)

        if isinstance(error, INPUT_ERRORS):
            self._error_stats["input_errors"] += 1
            return ExitStatus.INPUT_ERROR

        if isinstance(error, (VerificationError, HomologyError)):
            self._error_stats["verification_failures"] += 1
            return ExitStatus.VERIFICATION_FAILURE

        # Anything else means the implementation itself is inconsistent
        self._error_stats["internal_errors"] += 1
        return ExitStatus.VERIFICATION_FAILURE

    def get_error_stats(self) -> Dict[str, int]:
        """
        Get error handling statistics.

        Returns:
            Dict[str, int]: Error statistics
        """
        return self._error_stats.copy()

    def reset_stats(self):
        """Reset error statistics."""
        self._error_stats = {
            "total_errors": 0,
            "input_errors": 0,
            "verification_failures": 0,
            "internal_errors": 0
        }

    def _log_error(self, error: Exception, context: ErrorContext):
        """
        Log error with appropriate level and context.

        Args:
            error: The exception to log
            context: Error context
        """
        severity = self._get_error_severity(error)
        elapsed = time.time() - context.start_time

        log_message = f"Error in {context.operation} after {elapsed:.2f}s: {error}"
        if context.command:
            log_message += f" [command: {context.command}]"

        if severity == ErrorSeverity.CRITICAL:
            self.logger.critical(log_message)
        elif severity == ErrorSeverity.HIGH:
            self.logger.error(log_message)
        elif severity == ErrorSeverity.MEDIUM:
            self.logger.warning(log_message)
        else:
            self.logger.info(log_message)

    def _get_error_severity(self, error: Exception) -> ErrorSeverity:
        """
        Determine error severity level.

        Args:
            error: The exception to evaluate

        Returns:
            ErrorSeverity: Severity level
        """
        if isinstance(error, ConfigurationError):
            return ErrorSeverity.CRITICAL
        elif isinstance(error, (VerificationError, HomologyError)):
            return ErrorSeverity.HIGH
        elif isinstance(error, (SpecParseError, NormalityError, PreconditionError)):
            return ErrorSeverity.MEDIUM
        elif isinstance(error, TruncationError):
            return ErrorSeverity.LOW
        elif not isinstance(error, AlgebraError):
            return ErrorSeverity.CRITICAL

        return ErrorSeverity.MEDIUM

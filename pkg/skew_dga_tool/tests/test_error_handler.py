"""
Unit tests for the error handler module.

Tests the mapping from exceptions to exit statuses and the error statistics.
"""

import pytest

from skew_dga_tool.core.error_handler import ErrorContext, ErrorHandler, ErrorSeverity, ExitStatus
from skew_dga_tool.core.exceptions import (
    ConfigurationError, HomologyError, NormalityError, SpecParseError, TruncationError,
    VerificationError
)


class TestErrorContext:
    """Test ErrorContext dataclass."""

    def test_default_context(self):
        """Test default error context."""
        context = ErrorContext(operation="closure")

        assert context.operation == "closure"
        assert context.command is None
        assert context.start_time is not None
        assert context.metadata == {}


class TestErrorHandler:
    """Test ErrorHandler class."""

    def setup_method(self):
        """Set up test fixtures."""
        self.error_handler = ErrorHandler()
        self.context = ErrorContext(operation="test_operation", command="betti")

    def test_input_errors_exit_two(self):
        """Test that malformed input maps to status 2."""
        errors = [
            SpecParseError("bad token", line=1, column=2),
            NormalityError("relation not normal"),
            TruncationError("degree 9 exceeds the truncation bound 8"),
            ConfigurationError("bad value", config_key="default_hdeg"),
        ]
        for error in errors:
            assert self.error_handler.handle_error(error, self.context) == ExitStatus.INPUT_ERROR

        assert self.error_handler.get_error_stats()["input_errors"] == 4

    def test_verification_failures_exit_one(self):
        """Test that failed checks map to status 1."""
        status = self.error_handler.handle_error(VerificationError("bracket mismatch"), self.context)

        assert status == ExitStatus.VERIFICATION_FAILURE
        assert self.error_handler.handle_error(HomologyError("residual cycle"),
                                               self.context) == ExitStatus.VERIFICATION_FAILURE
        assert self.error_handler.get_error_stats()["verification_failures"] == 2

    def test_unexpected_errors_are_internal(self):
        """Test that non-algebra exceptions count as internal errors."""
        status = self.error_handler.handle_error(KeyError("missing"), self.context)

        assert status == ExitStatus.VERIFICATION_FAILURE
        assert self.error_handler.get_error_stats()["internal_errors"] == 1

    def test_error_severity(self):
        """Test error severity classification."""
        handler = self.error_handler

        assert handler._get_error_severity(ConfigurationError("x")) == ErrorSeverity.CRITICAL
        assert handler._get_error_severity(VerificationError("x")) == ErrorSeverity.HIGH
        assert handler._get_error_severity(SpecParseError("x")) == ErrorSeverity.MEDIUM
        assert handler._get_error_severity(TruncationError("x")) == ErrorSeverity.LOW
        assert handler._get_error_severity(RuntimeError("x")) == ErrorSeverity.CRITICAL

    def test_reset_stats(self):
        """Test resetting error statistics."""
        self.error_handler.handle_error(VerificationError("x"), self.context)
        self.error_handler.reset_stats()

        assert self.error_handler.get_error_stats() == {
            "total_errors": 0,
            "input_errors": 0,
            "verification_failures": 0,
            "internal_errors": 0,
        }


class TestExceptionFormatting:
    """Test exception string forms."""

    def test_parse_error_position(self):
        """Test that parse errors print their position."""
        error = SpecParseError("unknown variable 'x3'", line=2, column=5)

        assert str(error) == "[PARSE] unknown variable 'x3' (line 2, column 5)"

    def test_configuration_key(self):
        """Test that configuration errors keep their key."""
        error = ConfigurationError("bad", config_key="default_ideg")

        assert error.config_key == "default_ideg"
        assert error.error_type == "configuration"

    def test_raises_with_match(self):
        """Test that messages are matchable."""
        with pytest.raises(TruncationError, match="exceeds"):
            raise TruncationError("degree 5 exceeds the truncation bound 4")

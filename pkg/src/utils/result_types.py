#!/usr/bin/env python3
"""
Standardized result types for consistent return values.

CommandResult is what every CLI invocation produces; ValidationResult is
shared by configuration checks and payload schema checks.
"""

from dataclasses import dataclass, field
from typing import Any, Dict, List, Optional

STATUS_OK = "ok"
STATUS_ERROR = "error"

EXIT_OK = 0
EXIT_DOMAIN_ERROR = 1
EXIT_USAGE_ERROR = 2


@dataclass
class CommandResult:
    """Outcome of one CLI command."""
    status: str
    payload: Dict[str, Any] = field(default_factory=dict)
    error_kind: Optional[str] = None
    exit_code: int = EXIT_OK

    @property
    def ok(self) -> bool:
        return self.status == STATUS_OK


@dataclass
class ValidationResult:
    """Result for validation operations."""
    is_valid: bool
    errors: List[str] = field(default_factory=list)
    warnings: List[str] = field(default_factory=list)
    details: Dict[str, Any] = field(default_factory=dict)

    def add_error(self, error: str):
        """Add an error and mark as invalid."""
        self.errors.append(error)
        self.is_valid = False

    def add_warning(self, warning: str):
        """Add a warning (doesn't affect validity)."""
        self.warnings.append(warning)


# Factory functions for common scenarios
def ok_result(payload: Dict[str, Any]) -> CommandResult:
    """Create a success result."""
    return CommandResult(status=STATUS_OK, payload=payload)


def error_result(payload: Dict[str, Any], kind: str, exit_code: int = EXIT_DOMAIN_ERROR) -> CommandResult:
    """Create an error result."""
    return CommandResult(status=STATUS_ERROR, payload=payload, error_kind=kind, exit_code=exit_code)


def valid_result() -> ValidationResult:
    """Create a valid result."""
    return ValidationResult(is_valid=True)


def invalid_result(error: str) -> ValidationResult:
    """Create an invalid result."""
    result = ValidationResult(is_valid=False)
    result.add_error(error)
    return result

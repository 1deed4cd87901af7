# src/utils/__init__.py
"""Utility modules shared by the qdesigns library and CLI."""

from .logging_config import setup_logging, get_logger
from .exceptions import (
    QDesignsError,
    FieldError,
    PolynomialError,
    CapExceededError,
    SubspaceError,
    GroupError,
    DesignError,
    CodeError,
    ConfigurationError,
    UsageError,
)
from .result_types import (
    CommandResult,
    ValidationResult,
    ok_result,
    error_result,
    valid_result,
    invalid_result,
)
from .parallel import chunked_map, range_chunks, split_chunks

__all__ = [
    'setup_logging',
    'get_logger',
    # Exception classes
    'QDesignsError',
    'FieldError',
    'PolynomialError',
    'CapExceededError',
    'SubspaceError',
    'GroupError',
    'DesignError',
    'CodeError',
    'ConfigurationError',
    'UsageError',
    # Result types
    'CommandResult',
    'ValidationResult',
    'ok_result',
    'error_result',
    'valid_result',
    'invalid_result',
    # Parallel helpers
    'chunked_map',
    'range_chunks',
    'split_chunks',
]

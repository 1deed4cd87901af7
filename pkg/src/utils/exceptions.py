#!/usr/bin/env python3
"""
Common exception classes for the qdesigns toolkit.

Every error carries a machine-readable ``kind`` (the name the CLI reports as
``error_kind``) plus a free-form ``details`` dictionary.
"""

from typing import Any, Dict, Optional


class QDesignsError(Exception):
    """Base exception for qdesigns errors."""

    default_kind = "QDesignsError"

    def __init__(self, message: str, kind: Optional[str] = None, **details: Any):
        super().__init__(message)
        self.kind = kind or self.default_kind
        self.details: Dict[str, Any] = details


class FieldError(QDesignsError):
    """Bad field parameters or arithmetic across different fields."""
    default_kind = "SpecMismatch"


class PolynomialError(QDesignsError):
    """Error in univariate polynomial algebra or polynomial counting."""
    default_kind = "NotCoprime"


class CapExceededError(QDesignsError):
    """An enumeration would exceed its configured cap."""

    default_kind = "CapExceeded"

    def __init__(self, what: str, size: int, cap: int):
        super().__init__(f"{what}: size {size} exceeds cap {cap}", what=what, size=size, cap=cap)
        self.what = what
        self.size = size
        self.cap = cap


class SubspaceError(QDesignsError):
    """Subspaces or matrices that do not live in the same ambient space."""
    default_kind = "AmbientMismatch"


class GroupError(QDesignsError):
    """Error building or using a matrix group."""
    default_kind = "GroupNotClosed"


class DesignError(QDesignsError):
    """Error in design verification or splitting-subspace enumeration."""
    default_kind = "BadFactorization"


class CodeError(QDesignsError):
    """Error constructing or analysing a code."""
    default_kind = "BadParameters"


class ConfigurationError(QDesignsError):
    """Error in configuration or setup."""

    default_kind = "ConfigurationError"

    def __init__(self, message: str, config_key: str = None):
        super().__init__(message, config_key=config_key)
        self.config_key = config_key


class UsageError(QDesignsError):
    """Malformed command line."""
    default_kind = "BadArguments"

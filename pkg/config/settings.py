#!/usr/bin/env python3
"""
Configuration settings for the qdesigns finite-field combinatorics toolkit.

This module centralizes the enumeration caps, the worker budget and the
logging defaults. Every value can be overridden from the environment (or a
project-root .env file) and, per instance, through a config dictionary.

Location: config/settings.py
"""

import os
import sys
from pathlib import Path
from typing import Any, Dict, Optional

from dotenv import load_dotenv

# Add parent directory to path for imports
sys.path.insert(0, str(Path(__file__).parent.parent))

# Load environment variables from .env file
load_dotenv(Path(__file__).parent.parent / ".env")

from src.utils.exceptions import ConfigurationError
from src.utils.result_types import ValidationResult

DEFAULT_FIELD_CAP = 2 ** 20
DEFAULT_ENUMERATION_CAP = 10 ** 7
DEFAULT_POLY_ENUM_CAP = 2 ** 24
DEFAULT_CODEWORD_CAP = 2 ** 24
DEFAULT_GROUP_CAP = 10 ** 6


def _env_int(name: str, default: int) -> int:
    """Read an integer environment variable, failing loudly on junk."""
    raw = os.getenv(name)
    if raw is None or raw.strip() == "":
        return default
    try:
        return int(raw.strip())
    except ValueError:
        raise ConfigurationError(
            f"Environment variable {name} must be an integer, got {raw!r}",
            config_key=name,
        )


class QDKConfig:
    """Central configuration for field construction, enumeration and the CLI."""

    def __init__(self, config_dict: Optional[Dict[str, Any]] = None):
        """
        Initialize configuration with optional overrides.

        Args:
            config_dict: Optional dictionary to override default settings
        """
        self.project_root = Path(__file__).parent.parent

        # Field construction
        self.field_cap = _env_int("QDK_FIELD_CAP", DEFAULT_FIELD_CAP)

        # Enumeration caps; QDK_CAP overrides all of them at once
        self.enumeration_cap = _env_int("QDK_ENUMERATION_CAP", DEFAULT_ENUMERATION_CAP)
        self.poly_enum_cap = _env_int("QDK_POLY_CAP", DEFAULT_POLY_ENUM_CAP)
        self.codeword_cap = _env_int("QDK_CODEWORD_CAP", DEFAULT_CODEWORD_CAP)
        self.group_cap = _env_int("QDK_GROUP_CAP", DEFAULT_GROUP_CAP)

        global_cap = os.getenv("QDK_CAP")
        if global_cap:
            cap = _env_int("QDK_CAP", DEFAULT_ENUMERATION_CAP)
            self.enumeration_cap = cap
            self.poly_enum_cap = cap
            self.codeword_cap = cap

        # Worker budget and diagnostics
        self.workers = _env_int("QDK_THREADS", 1)
        self.log_level = os.getenv("QDK_LOG_LEVEL", "WARNING")
        self.show_progress = os.getenv("QDK_PROGRESS", "false").lower() == "true"

        if config_dict:
            self._apply_overrides(config_dict)

    def _apply_overrides(self, config_dict: Dict[str, Any]):
        """Apply configuration overrides from dictionary."""
        for key, value in config_dict.items():
            if hasattr(self, key):
                setattr(self, key, value)

    def with_overrides(self, **overrides: Any) -> "QDKConfig":
        """Return a copy of this configuration with some values replaced."""
        values = {key: value for key, value in self.__dict__.items() if key != "project_root"}
        values.update(overrides)
        return QDKConfig(values)

    def validate(self) -> ValidationResult:
        """
        Check that every cap and the worker budget are usable.

        Returns:
            ValidationResult listing every offending setting
        """
        result = ValidationResult(is_valid=True)
        for key in ("field_cap", "enumeration_cap", "poly_enum_cap", "codeword_cap", "group_cap"):
            value = getattr(self, key)
            if not isinstance(value, int) or value < 1:
                result.add_error(f"{key} must be a positive integer, got {value!r}")
        if not isinstance(self.workers, int) or self.workers < 1:
            result.add_error(f"workers must be a positive integer, got {self.workers!r}")
        if self.field_cap > DEFAULT_FIELD_CAP:
            result.add_warning(
                f"field_cap {self.field_cap} exceeds the desk-scale default {DEFAULT_FIELD_CAP}"
            )
        return result

    def get_config_summary(self) -> Dict[str, Any]:
        """Get a summary of current configuration."""
        return {
            "field_cap": self.field_cap,
            "enumeration_cap": self.enumeration_cap,
            "poly_enum_cap": self.poly_enum_cap,
            "codeword_cap": self.codeword_cap,
            "group_cap": self.group_cap,
            "workers": self.workers,
            "log_level": self.log_level,
            "show_progress": self.show_progress,
        }


# Default configuration instance
default_config = QDKConfig()

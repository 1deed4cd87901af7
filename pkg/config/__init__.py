# config/__init__.py
"""Configuration module for the qdesigns toolkit."""

from .settings import QDKConfig, default_config

__all__ = ['QDKConfig', 'default_config']

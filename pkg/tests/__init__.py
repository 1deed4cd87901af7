#!/usr/bin/env python3
"""
Tests package for the qdesigns toolkit.

Puts the project root on the import path so tests can import ``src`` and
``config`` the way the scripts do.
"""

import sys
from pathlib import Path

# Add project root to Python path for imports
project_root = Path(__file__).parent.parent
if str(project_root) not in sys.path:
    sys.path.insert(0, str(project_root))


def get_project_root() -> Path:
    """Get the project root directory."""
    return Path(__file__).parent.parent


__all__ = ['get_project_root']

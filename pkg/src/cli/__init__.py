# src/cli/__init__.py
"""The qdk command-line surface."""

from .commands import build_parser, run
from .serialization import SCHEMA, dump_payload, validate_payload

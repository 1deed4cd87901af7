# src/__init__.py
"""qdesigns - finite-field designs, Grassmannian group actions and cyclic codes."""

__version__ = "1.0.0"
__description__ = "Exact desk-scale combinatorics over finite fields"

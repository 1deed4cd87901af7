# src/constructions/__init__.py
"""Designs and codes built on the core algebra."""

from .design import (
    DesignCandidate,
    DesignReport,
    SplittingWitness,
    verify_design,
    lambda_profile,
    splitting_subspaces,
    count_splitting,
    splitting_design_report,
    pg_lines_design,
    triangle_invariant_design,
)
from .codes import (
    CyclicCode,
    LinearCode,
    CodeParams,
    cyclic_code_from_roots,
    code_to_linear,
    min_distance,
    nrc_points,
    arc_check,
    rs_code,
    count_cyclic_codes,
)

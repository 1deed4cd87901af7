#!/usr/bin/env python3
"""
JSON payloads, token formats and per-command schemas for the qdk CLI.

Payloads are plain dicts whose insertion order is the published key order.
Exact counts that can outgrow a double (Gaussian binomials, lambdas, group
orders) are emitted as decimal strings; rationals as "p/q".

Location: src/cli/serialization.py
"""

import json
from fractions import Fraction
from pathlib import Path
from typing import Any, Dict, Iterable, List

from ..constructions.codes import CodeParams
from ..constructions.design import ClassicalDesignReport, DesignReport
from ..core.gf import FieldSpec
from ..core.grassmann import Subspace, parse_subspace
from ..core.groupact import GroupElement, parse_matrix
from ..utils.result_types import ValidationResult

SCHEMA = "qdesigns/v1"


def big(value: int) -> str:
    return str(int(value))


def rational(value: Fraction) -> str:
    value = Fraction(value)
    if value.denominator == 1:
        return str(value.numerator)
    return f"{value.numerator}/{value.denominator}"


def subspace_tokens(subspaces: Iterable[Subspace]) -> List[str]:
    return [U.token() for U in subspaces]


def design_report_payload(report: DesignReport) -> Dict[str, Any]:
    """DesignReport in the published key order."""
    return {
        "t": report.t,
        "lambda_min": big(report.lambda_min),
        "lambda_max": big(report.lambda_max),
        "lambda": big(report.lambda_) if report.lambda_ is not None else None,
        "is_design": report.is_design,
        "num_t_subspaces": big(report.num_t_subspaces),
        "histogram": {str(count): big(freq) for count, freq in report.histogram.items()},
        "num_blocks": big(report.num_blocks),
    }


def classical_report_payload(report: ClassicalDesignReport) -> Dict[str, Any]:
    return {"v": report.v, "b": report.b, "block_size": report.block_size, "is_steiner": report.is_steiner}


def code_params_payload(params: CodeParams) -> Dict[str, Any]:
    return {"n": params.n, "k": params.k, "d": params.d, "mds": params.mds}


def _content_lines(path: str) -> List[str]:
    lines = Path(path).read_text(encoding="utf-8").splitlines()
    return [line.strip() for line in lines if line.strip() and not line.strip().startswith("#")]


def load_generator_file(spec: FieldSpec, path: str) -> List[GroupElement]:
    """One matrix per line; blank lines and '#' comments are skipped."""
    return [parse_matrix(spec, line) for line in _content_lines(path)]


def load_subspace_file(spec: FieldSpec, n: int, path: str) -> List[Subspace]:
    """One subspace (generator rows) per line."""
    return [parse_subspace(spec, n, line) for line in _content_lines(path)]


def dump_payload(payload: Dict[str, Any]) -> str:
    """Compact JSON, key order as built, so identical inputs give identical bytes."""
    return json.dumps(payload, separators=(",", ":"), ensure_ascii=False)


_COMMON = {"schema": str, "command": str, "status": str}

_REPORT_KEYS = ("t", "lambda_min", "lambda_max", "lambda", "is_design", "num_t_subspaces",
                "histogram", "num_blocks")

_REPORT_TYPES = {"t": int, "lambda_min": str, "lambda_max": str, "is_design": bool,
                 "num_t_subspaces": str, "histogram": dict, "num_blocks": str}

FLAT_REPORT_COMMANDS = ("design verify", "design triangle")

PAYLOAD_SCHEMAS: Dict[str, Dict[str, type]] = {
    "field create": {"p": int, "m": int, "q": int, "modulus": str, "primitive_element": str},
    "field inspect": {"q": int, "modulus": str, "primitive_element": str, "elements": list},
    "poly factor-xn1": {"n": int, "q": int, "splitting_field": int, "factors": list},
    "poly cosets": {"n": int, "q": int, "cosets": list},
    "poly count-split": {"n": int, "q": int, "mode": str, "count": str, "formula": str,
                         "formula_integral": bool},
    "gaussian": {"n": int, "k": int, "q": int, "value": str},
    "grassmann enumerate": {"n": int, "k": int, "q": int, "count": str, "subspaces": list},
    "group closure": {"n": int, "q": int, "order": str, "generators": list, "elements": list},
    "group singer": {"p": int, "m": int, "n": int, "matrix": str, "order": str},
    "group sympower": {"q": int, "deg": int, "matrix": str},
    "group orbit": {"n": int, "q": int, "group_order": str, "size": str, "orbit": list},
    "group invariant": {"n": int, "q": int, "k": int, "count": str, "subspaces": list},
    "design verify": {"n": int, "k": int, "q": int, **_REPORT_TYPES},
    "design profile": {"n": int, "k": int, "q": int, "reports": list},
    "design splitting": {"q": int, "r": int, "s": int, "S": str, "gl_order": str, "witnesses": list},
    "design pg-lines": {"m": int, "v": int, "b": int, "block_size": int, "is_steiner": bool},
    "design triangle": {"n": int, "q": int, "k": int, "group_order": str, **_REPORT_TYPES},
    "code cyclic": {"n": int, "k": int, "generator_poly": str, "root_exponents": list,
                    "parity_check_poly": str, "generator_matrix": str},
    "code rs": {"q": int, "n": int, "k": int, "generator_matrix": str},
    "code min-distance": {"n": int, "k": int, "d": int, "mds": bool},
    "code arc": {"num_points": int, "r": int, "is_arc": bool},
    "code count-cyclic": {"n": int, "q": int, "oracle": str, "num_cosets": int, "formula_values": list},
}


# Keys a command may omit; checked for type when present.
OPTIONAL_PAYLOAD_KEYS: Dict[str, Dict[str, type]] = {
    "design splitting": {"N": str, "quotient_check": bool},
}


def _check_report(report: Any, where: str, result: ValidationResult) -> None:
    if not isinstance(report, dict) or tuple(report) != _REPORT_KEYS:
        result.add_error(f"{where} is not a design report")
        return
    if (report["lambda"] is None) == report["is_design"]:
        result.add_error(f"{where}: lambda must be present exactly when is_design")


def validate_payload(command: str, payload: Dict[str, Any]) -> ValidationResult:
    """
    Check a successful payload against its command schema.

    Returns:
        ValidationResult listing missing keys and type mismatches
    """
    result = ValidationResult(is_valid=True)
    schema = PAYLOAD_SCHEMAS.get(command)
    if schema is None:
        result.add_error(f"No schema for command {command!r}")
        return result
    if payload.get("schema") != SCHEMA:
        result.add_error(f"schema must be {SCHEMA!r}")
    for key, expected in {**_COMMON, **schema}.items():
        if key not in payload:
            result.add_error(f"missing key {key!r}")
        elif not isinstance(payload[key], expected) or (expected is int and isinstance(payload[key], bool)):
            result.add_error(f"{key!r} should be {expected.__name__}")
    for key, expected in OPTIONAL_PAYLOAD_KEYS.get(command, {}).items():
        if key in payload and not isinstance(payload[key], expected):
            result.add_error(f"{key!r} should be {expected.__name__}")
    if command in FLAT_REPORT_COMMANDS:
        _check_report({key: payload[key] for key in _REPORT_KEYS if key in payload}, "payload", result)
    if "report" in payload:
        _check_report(payload["report"], "report", result)
    for index, report in enumerate(payload.get("reports", [])):
        _check_report(report, f"reports[{index}]", result)
    return result

#!/usr/bin/env python3
"""
Command dispatch for the qdk command-line tool.

``run(argv)`` parses a token list, calls one library operation and returns a
CommandResult whose payload is a single JSON-ready dict. Library errors become
status=error results carrying the exception's kind; nothing is printed here.

Location: src/cli/commands.py
"""

import argparse
import math
import sys
from typing import Any, Callable, Dict, List, Optional, Sequence

from config.settings import QDKConfig, default_config
from .serialization import (
    SCHEMA,
    big,
    classical_report_payload,
    code_params_payload,
    design_report_payload,
    load_generator_file,
    load_subspace_file,
    rational,
    subspace_tokens,
    validate_payload,
)
from ..constructions.codes import (
    arc_check,
    code_to_linear,
    count_cyclic_codes,
    cyclic_code_from_roots,
    cyclic_code_report,
    linear_code,
    min_distance,
    nrc_points,
    rs_code,
)
from ..constructions.design import (
    complete_design,
    count_splitting,
    design_candidate,
    lambda_profile,
    pg_lines_design,
    splitting_design_report,
    splitting_subspaces,
    triangle_invariant_design,
    verify_design,
)
from ..core.gf import field_create, field_elements, field_for_order, primitive_element, render_coefficients
from ..core.grassmann import enumerate_subspaces, gaussian_binomial, parse_rows, parse_subspace
from ..core.groupact import (
    MatrixGroup,
    builtin_group,
    general_linear_order,
    group_closure,
    lift_group,
    matrix_order,
    orbit,
    parse_matrix,
    singer_matrix,
    sym_power_rep,
    invariant_subspaces,
)
from ..core.polyring import (
    SPLIT_MODES,
    brute_count_split_polys,
    count_split_polys_formula,
    cyclotomic_cosets,
    factor_xn_minus_1,
    splitting_data,
)
from ..utils.exceptions import QDesignsError, UsageError
from ..utils.logging_config import get_logger, setup_logging
from ..utils.result_types import (
    EXIT_USAGE_ERROR,
    STATUS_ERROR,
    STATUS_OK,
    CommandResult,
    error_result,
    ok_result,
)

logger = get_logger(__name__)

Handler = Callable[[argparse.Namespace, QDKConfig], Dict[str, Any]]


class _HelpShown(Exception):
    pass


class QDKArgumentParser(argparse.ArgumentParser):
    """ArgumentParser that raises instead of exiting and keeps stdout for JSON."""

    def error(self, message: str):
        kind = "UnknownCommand" if "invalid choice" in message else "BadArguments"
        raise UsageError(message, kind=kind)

    def exit(self, status: int = 0, message: Optional[str] = None):
        if status == 0:
            raise _HelpShown()
        raise UsageError(message or "argument error", kind="BadArguments")

    def print_help(self, file=None):
        super().print_help(file or sys.stderr)


def _int_list(text: str) -> List[int]:
    try:
        return [int(part) for part in text.split(",") if part.strip()]
    except ValueError:
        raise UsageError(f"Expected comma-separated integers, got {text!r}", kind="BadArguments")


def _non_negative_int(text: str) -> int:
    value = int(text)
    if value < 0:
        raise argparse.ArgumentTypeError(f"expected a non-negative integer, got {value}")
    return value


# Handlers: each returns the command-specific part of the payload.

def _field_create(args, config):
    spec = field_create(args.p, args.m, config)
    return {
        "p": spec.p,
        "m": spec.m,
        "q": spec.q,
        "modulus": _modulus(spec),
        "primitive_element": primitive_element(spec).token(),
    }


def _modulus(spec) -> str:
    return render_coefficients(spec.modulus)


def _field_inspect(args, config):
    spec = field_for_order(args.q, config)
    return {
        "q": spec.q,
        "modulus": _modulus(spec),
        "primitive_element": primitive_element(spec).token(),
        "elements": [element.token() for element in field_elements(spec)],
    }


def _poly_factor(args, config):
    spec = field_for_order(args.q, config)
    factors = factor_xn_minus_1(args.n, spec, config)
    return {
        "n": args.n,
        "q": args.q,
        "splitting_field": splitting_data(args.n, spec, config).big.q,
        "factors": [f.render() for f in factors],
    }


def _poly_cosets(args, config):
    partition = cyclotomic_cosets(args.n, args.q)
    return {"n": args.n, "q": args.q, "cosets": [list(coset) for coset in partition.cosets]}


def _poly_count_split(args, config):
    formula = count_split_polys_formula(args.n, args.q)
    count = brute_count_split_polys(args.n, args.q, args.mode, config)
    return {
        "n": args.n,
        "q": args.q,
        "mode": args.mode,
        "count": big(count),
        "binomial": big(math.comb(args.q, args.n)),
        "formula": rational(formula),
        "formula_integral": formula.denominator == 1,
    }


def _gaussian(args, config):
    return {"n": args.n, "k": args.k, "q": args.q, "value": big(gaussian_binomial(args.n, args.k, args.q))}


def _grassmann_enumerate(args, config):
    spec = field_for_order(args.q, config)
    subspaces = list(enumerate_subspaces(spec, args.n, args.k, config))
    return {
        "n": args.n,
        "k": args.k,
        "q": args.q,
        "count": big(len(subspaces)),
        "subspaces": subspace_tokens(subspaces),
    }


def _resolve_group(args, config) -> MatrixGroup:
    if args.group_file:
        if args.q is None:
            raise UsageError("--group-file needs --q", kind="BadArguments")
        spec = field_for_order(args.q, config)
        group = group_closure(load_generator_file(spec, args.group_file), config=config)
    elif args.group:
        group = builtin_group(args.group, config)
    else:
        raise UsageError("Give --group or --group-file", kind="BadArguments")
    if args.sym_deg:
        group = lift_group(group, args.sym_deg, config)
    return group


def _group_closure(args, config):
    group = _resolve_group(args, config)
    return {
        "n": group.n,
        "q": group.spec.q,
        "order": big(len(group.elements)),
        "generators": [g.token() for g in group.generators],
        "elements": [g.token() for g in group.elements],
    }


def _group_singer(args, config):
    matrix = singer_matrix(args.p, args.m, args.n, config)
    return {"p": args.p, "m": args.m, "n": args.n, "matrix": matrix.token(), "order": big(matrix_order(matrix))}


def _group_sympower(args, config):
    spec = field_for_order(args.q, config)
    image = sym_power_rep(parse_matrix(spec, args.matrix), args.deg)
    return {"q": args.q, "deg": args.deg, "matrix": image.token()}


def _group_orbit(args, config):
    group = _resolve_group(args, config)
    U = parse_subspace(group.spec, group.n, args.subspace)
    members = orbit(U, group)
    return {
        "n": group.n,
        "q": group.spec.q,
        "group_order": big(len(group.elements)),
        "size": big(len(members)),
        "orbit": subspace_tokens(members),
    }


def _group_invariant(args, config):
    group = _resolve_group(args, config)
    found = invariant_subspaces(group, args.k, config)
    return {
        "n": group.n,
        "q": group.spec.q,
        "k": args.k,
        "count": big(len(found)),
        "subspaces": subspace_tokens(found),
    }


def _candidate(args, config):
    spec = field_for_order(args.q, config)
    if args.blocks == "all":
        return complete_design(spec, args.n, args.k, config)
    return design_candidate(spec, args.n, args.k, load_subspace_file(spec, args.n, args.blocks))


def _design_verify(args, config):
    cand = _candidate(args, config)
    report = verify_design(cand, args.t, config)
    return {"n": args.n, "k": args.k, "q": args.q, **design_report_payload(report)}


def _design_profile(args, config):
    cand = _candidate(args, config)
    return {
        "n": args.n,
        "k": args.k,
        "q": args.q,
        "reports": [design_report_payload(report) for report in lambda_profile(cand, config)],
    }


def _design_splitting(args, config):
    multiplier = None
    if args.conjugate:
        q = args.p ** args.m
        multiplier = singer_matrix(args.p, args.m, args.r * args.s, config).power(q ** args.conjugate)
    witnesses = splitting_subspaces(args.p, args.m, args.r, args.s, multiplier, config)
    payload = {
        "q": args.p ** args.m,
        "r": args.r,
        "s": args.s,
        "S": big(len(witnesses)),
        "gl_order": big(general_linear_order(args.r, args.p ** args.m)),
    }
    if args.count_bases:
        counts = count_splitting(args.p, args.m, args.r, args.s, multiplier, config, witnesses)
        payload["N"] = big(counts.N)
        payload["quotient_check"] = counts.quotient_check
    payload["witnesses"] = [w.W.token() for w in witnesses]
    if args.t is not None:
        report = splitting_design_report(args.p, args.m, args.r, args.s, args.t, multiplier, config, witnesses)
        payload["report"] = design_report_payload(report)
    return payload


def _design_pg_lines(args, config):
    return {"m": args.m, **classical_report_payload(pg_lines_design(args.m, config))}


def _design_triangle(args, config):
    group = _resolve_group(args, config)
    report = triangle_invariant_design(group, args.k, args.t, config)
    return {
        "n": group.n,
        "q": group.spec.q,
        "k": args.k,
        "group_order": big(len(group.elements)),
        **design_report_payload(report),
    }


def _code_cyclic(args, config):
    code = cyclic_code_from_roots(args.n, args.q, _int_list(args.roots), config)
    payload = cyclic_code_report(code, args.min_distance, config)
    payload["generator_matrix"] = code_to_linear(code).subspace.token()
    return payload


def _code_rs(args, config):
    code = rs_code(args.q, args.k, args.len, config)
    payload = {"q": args.q, "n": code.n, "k": code.k}
    if args.min_distance:
        params = min_distance(code, config)
        payload.update({"d": params.d, "mds": params.mds})
    payload["generator_matrix"] = code.subspace.token()
    return payload


def _code_min_distance(args, config):
    spec = field_for_order(args.q, config)
    code = linear_code(spec, args.n, parse_rows(spec, args.matrix))
    return code_params_payload(min_distance(code, config))


def _code_arc(args, config):
    if args.points:
        if args.n is None:
            raise UsageError("--points needs --n", kind="BadArguments")
        spec = field_for_order(args.q, config)
        points = load_subspace_file(spec, args.n, args.points)
    elif args.nrc_deg:
        points = nrc_points(args.nrc_deg, args.q, config)
    else:
        raise UsageError("Give --nrc-deg or --points", kind="BadArguments")
    return {"num_points": len(points), "r": args.r, "is_arc": arc_check(points, args.r, config)}


def _code_count_cyclic(args, config):
    counts = count_cyclic_codes(args.n, args.q, config)
    return {
        "n": counts.n,
        "q": counts.q,
        "oracle": big(counts.oracle),
        "num_cosets": counts.num_cosets,
        "formula_values": [rational(value) for value in counts.formula_values],
    }


def _add_common(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("--threads", type=int, default=None, help="Worker budget (results do not change)")
    parser.add_argument("--log-level", default=None, help="Logging level for standard error")


def _add_group_flags(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("--group", help="singer:p,m,n | dihedral:q,m | trivial:q,n")
    parser.add_argument("--group-file", help="Generator file, one matrix per line")
    parser.add_argument("--q", type=int, help="Field order for --group-file")
    parser.add_argument("--sym-deg", type=int, default=None, help="Lift 2x2 generators to symmetric powers")


def _leaf(subparsers, name: str, handler: Handler, command: str, help_text: str) -> argparse.ArgumentParser:
    parser = subparsers.add_parser(name, help=help_text)
    _add_common(parser)
    parser.set_defaults(handler=handler, command=command)
    return parser


def build_parser() -> QDKArgumentParser:
    """The full qdk argument tree."""
    parser = QDKArgumentParser(prog="qdk", description="Finite-field designs, group actions and codes")
    top = parser.add_subparsers(dest="group_name", parser_class=QDKArgumentParser)
    top.required = True

    field = top.add_parser("field", help="Finite fields").add_subparsers(dest="action", parser_class=QDKArgumentParser)
    field.required = True
    p = _leaf(field, "create", _field_create, "field create", "Canonical GF(p^m)")
    p.add_argument("--p", type=int, required=True)
    p.add_argument("--m", type=int, default=1)
    p = _leaf(field, "inspect", _field_inspect, "field inspect", "Elements of GF(q)")
    p.add_argument("--q", type=int, required=True)

    poly = top.add_parser("poly", help="Polynomials").add_subparsers(dest="action", parser_class=QDKArgumentParser)
    poly.required = True
    p = _leaf(poly, "factor-xn1", _poly_factor, "poly factor-xn1", "Factor x^n-1 over GF(q)")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--q", type=int, required=True)
    p = _leaf(poly, "cosets", _poly_cosets, "poly cosets", "q-cyclotomic cosets mod n")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--q", type=int, required=True)
    p = _leaf(poly, "count-split", _poly_count_split, "poly count-split", "Split polynomial counts")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--q", type=int, required=True)
    p.add_argument("--mode", choices=SPLIT_MODES, default=SPLIT_MODES[0])

    p = _leaf(top, "gaussian", _gaussian, "gaussian", "Gaussian binomial [n,k]_q")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--q", type=int, required=True)

    grass = top.add_parser("grassmann", help="Grassmannians").add_subparsers(dest="action",
                                                                            parser_class=QDKArgumentParser)
    grass.required = True
    p = _leaf(grass, "enumerate", _grassmann_enumerate, "grassmann enumerate", "List G_{k,n}(F_q)")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--q", type=int, required=True)

    group = top.add_parser("group", help="Matrix groups").add_subparsers(dest="action",
                                                                        parser_class=QDKArgumentParser)
    group.required = True
    p = _leaf(group, "closure", _group_closure, "group closure", "Enumerate a group")
    _add_group_flags(p)
    p = _leaf(group, "singer", _group_singer, "group singer", "Singer matrix of GF(q^n)/GF(q)")
    p.add_argument("--p", type=int, required=True)
    p.add_argument("--m", type=int, default=1)
    p.add_argument("--n", type=int, required=True)
    p = _leaf(group, "sympower", _group_sympower, "group sympower", "Symmetric power of a 2x2 matrix")
    p.add_argument("--q", type=int, required=True)
    p.add_argument("--matrix", required=True)
    p.add_argument("--deg", type=int, required=True)
    p = _leaf(group, "orbit", _group_orbit, "group orbit", "Orbit of a subspace")
    _add_group_flags(p)
    p.add_argument("--subspace", required=True)
    p = _leaf(group, "invariant", _group_invariant, "group invariant", "Invariant k-subspaces")
    _add_group_flags(p)
    p.add_argument("--k", type=int, required=True)

    design = top.add_parser("design", help="q-ary designs").add_subparsers(dest="action",
                                                                          parser_class=QDKArgumentParser)
    design.required = True
    for name, handler in (("verify", _design_verify), ("profile", _design_profile)):
        p = _leaf(design, name, handler, f"design {name}", "Containment counts of a block set")
        p.add_argument("--blocks", required=True, help="'all' or a file with one subspace per line")
        p.add_argument("--n", type=int, required=True)
        p.add_argument("--k", type=int, required=True)
        p.add_argument("--q", type=int, required=True)
        if name == "verify":
            p.add_argument("--t", type=int, required=True)
    p = _leaf(design, "splitting", _design_splitting, "design splitting", "Splitting subspaces")
    p.add_argument("--p", type=int, required=True)
    p.add_argument("--m", type=int, default=1)
    p.add_argument("--r", type=int, required=True)
    p.add_argument("--s", type=int, required=True)
    p.add_argument("--t", type=int, default=None)
    p.add_argument("--conjugate", type=_non_negative_int, default=0, help="Use alpha^(q^j) as multiplier")
    p.add_argument("--count-bases", action="store_true", help="Also count ordered bases N (q^(n r) tuples)")
    p = _leaf(design, "pg-lines", _design_pg_lines, "design pg-lines", "Lines of PG(m-1,2)")
    p.add_argument("--m", type=int, required=True)
    p = _leaf(design, "triangle", _design_triangle, "design triangle", "Invariant subgrassmannian design")
    _add_group_flags(p)
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--t", type=int, required=True)

    code = top.add_parser("code", help="Codes").add_subparsers(dest="action", parser_class=QDKArgumentParser)
    code.required = True
    for subparsers in (code, top):
        p = _leaf(subparsers, "cyclic", _code_cyclic, "code cyclic", "Cyclic code from a root set")
        p.add_argument("--n", type=int, required=True)
        p.add_argument("--q", type=int, required=True)
        p.add_argument("--roots", required=True, help="Comma-separated exponents")
        p.add_argument("--min-distance", action="store_true")
    p = _leaf(code, "rs", _code_rs, "code rs", "Doubly extended Reed-Solomon code")
    p.add_argument("--q", type=int, required=True)
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--len", type=int, required=True)
    p.add_argument("--min-distance", action="store_true")
    p = _leaf(code, "min-distance", _code_min_distance, "code min-distance", "Parameters of a linear code")
    p.add_argument("--q", type=int, required=True)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--matrix", required=True)
    p = _leaf(code, "arc", _code_arc, "code arc", "Arc check")
    p.add_argument("--q", type=int, required=True)
    p.add_argument("--r", type=int, required=True)
    p.add_argument("--nrc-deg", type=int, default=None)
    p.add_argument("--points", default=None)
    p.add_argument("--n", type=int, default=None)
    p = _leaf(code, "count-cyclic", _code_count_cyclic, "code count-cyclic", "Count cyclic codes")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--q", type=int, required=True)
    return parser


def _error(message: str, kind: str, exit_code: int) -> CommandResult:
    payload = {"schema": SCHEMA, "status": STATUS_ERROR, "error_kind": kind, "message": message}
    return error_result(payload, kind, exit_code)


def run(argv: Sequence[str], config: Optional[QDKConfig] = None) -> CommandResult:
    """
    Execute one qdk command.

    Args:
        argv: Tokens after the program name
        config: Base configuration (``--threads`` overrides its worker budget)

    Returns:
        CommandResult; exit code 0 ok, 1 domain error, 2 usage error
    """
    config = config or default_config
    parser = build_parser()
    try:
        args = parser.parse_args(list(argv))
    except _HelpShown:
        return ok_result({"schema": SCHEMA, "command": "help", "status": STATUS_OK})
    except UsageError as e:
        return _error(str(e), e.kind, EXIT_USAGE_ERROR)

    overrides = {}
    if args.threads is not None:
        if args.threads < 1:
            return _error(f"--threads must be positive, got {args.threads}", "BadArguments", EXIT_USAGE_ERROR)
        overrides["workers"] = args.threads
    if args.log_level:
        overrides["log_level"] = args.log_level.upper()
        setup_logging(overrides["log_level"])
    if overrides:
        config = config.with_overrides(**overrides)

    logger.debug(f"Running {args.command}")
    try:
        data = args.handler(args, config)
    except UsageError as e:
        return _error(str(e), e.kind, EXIT_USAGE_ERROR)
    except QDesignsError as e:
        logger.info(f"{args.command} failed: {e.kind}: {e}")
        return _error(str(e), e.kind, 1)
    except OSError as e:
        return _error(str(e), "BadArguments", EXIT_USAGE_ERROR)
    except ValueError as e:
        return _error(str(e), "BadArguments", EXIT_USAGE_ERROR)
    except Exception as e:
        logger.error(f"{args.command} raised {type(e).__name__}: {e}")
        return _error(f"{type(e).__name__}: {e}", "InternalError", 1)

    payload = {"schema": SCHEMA, "command": args.command, "status": STATUS_OK, **data}
    check = validate_payload(args.command, payload)
    if not check.is_valid:
        return _error("; ".join(check.errors), "SchemaViolation", 1)
    return ok_result(payload)

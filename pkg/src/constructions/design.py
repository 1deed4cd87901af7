#!/usr/bin/env python3
"""
Verification and construction of q-ary t-designs.

A block set is checked by counting, for every t-subspace, how many blocks
contain it. The double-count identity sum(counts) = |blocks| * [k, t]_q is
asserted on every run. Constructions covered here: splitting subspaces of
GF(q^n) under a multiplier, invariant subgrassmannians and orbits of matrix
groups, and the classical line design of PG(m-1, 2).

Location: src/constructions/design.py
"""

from __future__ import annotations

import itertools
from collections import Counter
from dataclasses import dataclass, field
from typing import Dict, Iterable, List, Optional, Sequence, Tuple

from config.settings import QDKConfig, default_config
from ..core.gf import FieldSpec, field_create
from ..core.grassmann import (
    Subspace,
    contains,
    enumerate_subspaces,
    gaussian_binomial,
    rref_rows,
    subspace_from_generators,
)
from ..core.groupact import (
    GroupElement,
    MatrixGroup,
    act,
    general_linear_order,
    identity,
    invariant_subspaces,
    orbit,
    singer_matrix,
)
from ..utils.exceptions import CapExceededError, DesignError
from ..utils.logging_config import get_logger
from ..utils.parallel import chunked_map

logger = get_logger(__name__)

PG_LINES_MAX_M = 6


@dataclass(frozen=True)
class DesignCandidate:
    """A sorted, duplicate-free set of k-subspaces of F_q^n."""
    spec: FieldSpec
    n: int
    k: int
    blocks: Tuple[Subspace, ...]


@dataclass(frozen=True)
class DesignReport:
    """Containment statistics of a block set at strength t."""
    t: int
    lambda_min: int
    lambda_max: int
    lambda_: Optional[int]
    is_design: bool
    num_t_subspaces: int
    histogram: Dict[int, int] = field(default_factory=dict)
    num_blocks: int = 0


@dataclass(frozen=True)
class SplittingWitness:
    """W together with its translates W, T(W), ..., T^(s-1)(W)."""
    W: Subspace
    translates: Tuple[Subspace, ...]
    direct_sum_ok: bool


@dataclass(frozen=True)
class SplittingCount:
    S: int
    N: int
    gl_order: int
    quotient_check: bool


@dataclass(frozen=True)
class ClassicalDesignReport:
    """Point/block incidence summary of the lines of PG(m-1, 2)."""
    v: int
    b: int
    block_size: int
    is_steiner: bool


def design_candidate(spec: FieldSpec, n: int, k: int, blocks: Iterable[Subspace]) -> DesignCandidate:
    """Validate, deduplicate and sort a block set."""
    unique = set()
    for block in blocks:
        if block.spec != spec or block.n != n or block.k != k:
            raise DesignError(f"Block {block} is not a {k}-subspace of F_{spec.q}^{n}",
                              kind="DimensionMismatch")
        unique.add(block)
    return DesignCandidate(spec, n, k, tuple(sorted(unique, key=lambda U: U.sort_key)))


def _containment_counts(blocks: Tuple[Subspace, ...], pieces) -> List[int]:
    return [sum(1 for block in blocks if contains(block, T)) for piece in pieces for T in piece]


def verify_design(cand: DesignCandidate, t: int, config: Optional[QDKConfig] = None) -> DesignReport:
    """
    Count the blocks through every t-subspace.

    Args:
        cand: Block set
        t: Strength, 0 <= t <= k
        config: Supplies ``enumeration_cap`` and ``workers``

    Returns:
        DesignReport with the full count histogram
    """
    config = config or default_config
    if cand.n < 1:
        raise DesignError("Ambient space has dimension 0", kind="EmptyAmbient")
    if not 0 <= t <= cand.k:
        raise DesignError(f"Strength t={t} outside 0..{cand.k}", kind="BadParameters")

    stream = enumerate_subspaces(cand.spec, cand.n, t, config)
    pieces = stream.partition(config.workers)
    parts = chunked_map(lambda chunk: _containment_counts(cand.blocks, chunk), pieces, config.workers)
    counts = [count for part in parts for count in part]

    expected = len(cand.blocks) * gaussian_binomial(cand.k, t, cand.spec.q)
    if sum(counts) != expected:
        raise DesignError(f"Double count failed: {sum(counts)} != {expected}", kind="DoubleCountFailed")

    histogram = dict(sorted(Counter(counts).items()))
    low, high = min(counts), max(counts)
    is_design = low == high
    if not cand.blocks:
        logger.info("Empty block set treated as a degenerate design with lambda 0")
    logger.debug(f"t={t}: {len(counts)} t-subspaces, lambda range [{low}, {high}]")
    return DesignReport(
        t=t,
        lambda_min=low,
        lambda_max=high,
        lambda_=low if is_design else None,
        is_design=is_design,
        num_t_subspaces=len(counts),
        histogram=histogram,
        num_blocks=len(cand.blocks),
    )


def lambda_profile(cand: DesignCandidate, config: Optional[QDKConfig] = None) -> List[DesignReport]:
    """verify_design for every t = 0..k."""
    return [verify_design(cand, t, config) for t in range(cand.k + 1)]


def complete_design_lambda(n: int, k: int, t: int, q: int) -> int:
    """lambda of the complete design G_{k,n}(F_q) at strength t: [n-t, k-t]_q."""
    return gaussian_binomial(n - t, k - t, q)


def complete_design(spec: FieldSpec, n: int, k: int, config: Optional[QDKConfig] = None) -> DesignCandidate:
    """All k-subspaces of F_q^n as a block set."""
    return DesignCandidate(spec, n, k, tuple(enumerate_subspaces(spec, n, k, config)))


def _check_factorization(r: int, s: int) -> int:
    if r < 1 or s < 1:
        raise DesignError(f"Need r, s >= 1, got r={r}, s={s}", kind="BadFactorization")
    return r * s


def _is_splitting(W: Subspace, powers: List[GroupElement]) -> Optional[Tuple[Subspace, ...]]:
    translates = tuple(act(W, power) for power in powers)
    rows = [row for translate in translates for row in translate.rows]
    if len(rref_rows(W.spec, W.n, rows)) != W.n:
        return None
    return translates


def splitting_subspaces(p: int, base_m: int, r: int, s: int, multiplier: Optional[GroupElement] = None,
                        config: Optional[QDKConfig] = None) -> List[SplittingWitness]:
    """
    All r-subspaces W of F_q^(rs) with W + T(W) + ... + T^(s-1)(W) direct and equal to the space.

    Args:
        p, base_m: The base field GF(p^base_m)
        r, s: Subspace dimension and number of translates
        multiplier: T; defaults to the Singer matrix of GF(q^(rs)) over GF(q)
        config: Supplies the caps

    Returns:
        Witnesses sorted by W
    """
    config = config or default_config
    n = _check_factorization(r, s)
    T = multiplier if multiplier is not None else singer_matrix(p, base_m, n, config)
    spec = field_create(p, base_m, config)
    if T.spec != spec or T.n != n:
        raise DesignError(f"Multiplier must be {n}x{n} over GF({spec.q})", kind="BadFactorization")

    powers = [identity(spec, n)]
    for _ in range(s - 1):
        powers.append(powers[-1] * T)

    witnesses = []
    for W in enumerate_subspaces(spec, n, r, config):
        translates = _is_splitting(W, powers)
        if translates is not None:
            witnesses.append(SplittingWitness(W, translates, True))
    witnesses.sort(key=lambda witness: witness.W.sort_key)
    logger.debug(f"{len(witnesses)} splitting subspaces for q={spec.q}, r={r}, s={s}")
    return witnesses


def count_splitting(p: int, base_m: int, r: int, s: int, multiplier: Optional[GroupElement] = None,
                    config: Optional[QDKConfig] = None,
                    witnesses: Optional[Sequence[SplittingWitness]] = None) -> SplittingCount:
    """
    S splitting subspaces against N ordered bases spanning one.

    N is counted over all r-tuples of vectors of F_q^n, so q^(n r) must stay
    within ``enumeration_cap``. Pass ``witnesses`` from splitting_subspaces to
    skip enumerating them again.
    """
    config = config or default_config
    n = _check_factorization(r, s)
    spec = field_create(p, base_m, config)
    tuples = spec.q ** (n * r)
    if tuples > config.enumeration_cap:
        raise CapExceededError(f"ordered {r}-tuples in F_{spec.q}^{n}", tuples, config.enumeration_cap)
    if witnesses is None:
        witnesses = splitting_subspaces(p, base_m, r, s, multiplier, config)

    splitting = {witness.W for witness in witnesses}
    vectors = list(itertools.product(spec.ordered_values(), repeat=n))
    ordered_bases = 0
    for basis in itertools.product(vectors, repeat=r):
        span = subspace_from_generators(spec, n, basis)
        if span.k == r and span in splitting:
            ordered_bases += 1

    gl_order = general_linear_order(r, spec.q)
    return SplittingCount(
        S=len(witnesses),
        N=ordered_bases,
        gl_order=gl_order,
        quotient_check=ordered_bases == len(witnesses) * gl_order,
    )


def splitting_design_report(p: int, base_m: int, r: int, s: int, t: int,
                            multiplier: Optional[GroupElement] = None,
                            config: Optional[QDKConfig] = None,
                            witnesses: Optional[Sequence[SplittingWitness]] = None) -> DesignReport:
    """Design test of the splitting subspaces at strength t."""
    if witnesses is None:
        witnesses = splitting_subspaces(p, base_m, r, s, multiplier, config)
    spec = field_create(p, base_m, config)
    cand = design_candidate(spec, r * s, r, (witness.W for witness in witnesses))
    return verify_design(cand, t, config)


def pg_lines_design(m: int, config: Optional[QDKConfig] = None) -> ClassicalDesignReport:
    """
    Points and lines of PG(m-1, 2) as a classical design.

    Every pair of points must lie on exactly one line for a Steiner triple system.
    """
    if m < 2:
        raise DesignError(f"Need m >= 2, got {m}", kind="BadParameters")
    if m > PG_LINES_MAX_M:
        raise CapExceededError(f"PG({m - 1},2) line design", 2 ** m - 1, 2 ** PG_LINES_MAX_M - 1)

    spec = field_create(2, 1, config)
    points = list(enumerate_subspaces(spec, m, 1, config))
    lines = list(enumerate_subspaces(spec, m, 2, config))
    blocks = [tuple(i for i, point in enumerate(points) if contains(line, point)) for line in lines]

    coverage = Counter(pair for block in blocks for pair in itertools.combinations(block, 2))
    all_pairs = len(points) * (len(points) - 1) // 2
    is_steiner = (all(len(block) == 3 for block in blocks)
                  and len(coverage) == all_pairs
                  and all(count == 1 for count in coverage.values()))
    return ClassicalDesignReport(v=len(points), b=len(blocks), block_size=3, is_steiner=is_steiner)


def triangle_invariant_design(G: MatrixGroup, k: int, t: int,
                              config: Optional[QDKConfig] = None) -> DesignReport:
    """Design test of the G-invariant k-subspaces at strength t."""
    G.require_closed()
    blocks = invariant_subspaces(G, k, config)
    return verify_design(design_candidate(G.spec, G.n, k, blocks), t, config)


def orbit_design(G: MatrixGroup, U: Subspace, t: int, config: Optional[QDKConfig] = None) -> DesignReport:
    """Design test of the orbit of U under G at strength t."""
    blocks = orbit(U, G)
    return verify_design(design_candidate(U.spec, U.n, U.k, blocks), t, config)

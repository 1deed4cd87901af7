#!/usr/bin/env python3
"""
Cyclic and Reed-Solomon codes with brute-force parameters.

The root set J of a cyclic code defines its GENERATOR polynomial
g(x) = prod_{j in J} (x - beta^j); the parity-check polynomial (x^n - 1)/g(x)
is derived from it. Minimum distances are exact: every codeword is generated,
in vectorised batches, and the least nonzero weight is kept.

Location: src/constructions/codes.py
"""

from __future__ import annotations

import itertools
import math
import sys
from dataclasses import dataclass
from fractions import Fraction
from typing import Any, Dict, Iterable, List, Optional, Sequence, Tuple

import galois
import numpy as np
from tqdm import tqdm

from config.settings import QDKConfig, default_config
from ..core.gf import FieldSpec, field_for_order
from ..core.grassmann import (
    Rows,
    Subspace,
    contains_vector,
    rref_rows,
    subspace_from_generators,
)
from ..core.polyring import (
    Poly,
    affine_group_order,
    cyclotomic_cosets,
    falling_factorial,
    poly_arith,
    root_product,
    splitting_data,
)
from ..utils.exceptions import CapExceededError, CodeError
from ..utils.logging_config import get_logger
from ..utils.parallel import chunked_map, range_chunks

logger = get_logger(__name__)

_BATCH_MESSAGES = 1 << 14


@dataclass(frozen=True)
class CyclicCode:
    """Ideal of GF(q)[x]/(x^n - 1) generated by g(x), J a union of cyclotomic cosets."""
    spec: FieldSpec
    n: int
    root_exponents: Tuple[int, ...]
    gen_poly: Poly
    k: int


@dataclass(frozen=True)
class LinearCode:
    """[n, k] code given by an RREF generator matrix (element codes)."""
    spec: FieldSpec
    n: int
    k: int
    rows: Rows

    @property
    def gen_matrix(self):
        return self.spec.gf(np.array(self.rows, dtype=np.int64).reshape(self.k, self.n))

    @property
    def subspace(self) -> Subspace:
        return Subspace(self.spec, self.n, self.k, self.rows)


@dataclass(frozen=True)
class CodeParams:
    n: int
    k: int
    d: int
    mds: bool

    def __post_init__(self):
        if not 1 <= self.d <= self.n - self.k + 1:
            raise CodeError(f"[{self.n},{self.k},{self.d}] violates the Singleton bound",
                            kind="SingletonViolated")
        if self.mds != (self.d == self.n - self.k + 1):
            raise CodeError("MDS flag disagrees with the Singleton bound", kind="SingletonViolated")


@dataclass(frozen=True)
class CyclicCount:
    """Divisor-lattice count of cyclic codes next to the quotient (q)_k / (q^2 - q)."""
    n: int
    q: int
    oracle: int
    num_cosets: int
    formula_values: Tuple[Fraction, ...]


def _check_coprime(n: int, q: int) -> None:
    if n < 1:
        raise CodeError(f"Length must be positive, got {n}", kind="BadParameters")
    if math.gcd(n, q) != 1:
        raise CodeError(f"gcd({n}, {q}) != 1", kind="NotCoprime", n=n, q=q)


def cyclic_code_from_roots(n: int, q: int, J: Iterable[int], config: Optional[QDKConfig] = None) -> CyclicCode:
    """
    Cyclic code whose generator polynomial vanishes exactly at beta^j, j in J.

    Raises:
        CodeError: NotCoprime, NotCosetClosed, or BadParameters when |J| >= n
    """
    _check_coprime(n, q)
    spec = field_for_order(q, config)
    exponents = tuple(sorted({j % n for j in J}))
    if len(exponents) >= n:
        raise CodeError(f"Root set of size {len(exponents)} leaves no code of length {n}",
                        kind="BadParameters")
    partition = cyclotomic_cosets(n, q)
    if not partition.is_union_of_cosets(exponents):
        raise CodeError(f"Root set {list(exponents)} is not a union of {q}-cyclotomic cosets mod {n}",
                        kind="NotCosetClosed")

    gen_poly = root_product(spec, splitting_data(n, spec, config), exponents)
    remainder = poly_arith(Poly.xn_minus_1(spec, n), gen_poly, "divmod")[1]
    if not remainder.is_zero:
        raise CodeError(f"g(x) = {gen_poly.render()} does not divide x^{n}-1", kind="BadParameters")
    logger.debug(f"Cyclic code n={n}, q={q}, J={list(exponents)}: g = {gen_poly.render()}")
    return CyclicCode(spec, n, exponents, gen_poly, n - len(exponents))


def parity_check_poly(c: CyclicCode) -> Poly:
    """h(x) = (x^n - 1) / g(x)."""
    return poly_arith(Poly.xn_minus_1(c.spec, c.n), c.gen_poly, "divmod")[0]


def linear_code(spec: FieldSpec, n: int, rows: Sequence[Sequence[int]]) -> LinearCode:
    """Canonical LinearCode spanned by ``rows``."""
    reduced = rref_rows(spec, n, rows)
    if not reduced:
        raise CodeError("The zero code has no generator matrix", kind="BadParameters")
    return LinearCode(spec, n, len(reduced), reduced)


def code_to_linear(c: CyclicCode) -> LinearCode:
    """Generator matrix with rows x^i g(x), i < k, reduced to RREF."""
    values = c.gen_poly.values
    rows = [(0,) * i + values + (0,) * (c.n - len(values) - i) for i in range(c.k)]
    return linear_code(c.spec, c.n, rows)


def _min_weight(spec: FieldSpec, generator, k: int, indices: range, show_progress: bool) -> int:
    q = spec.q
    weights = q ** np.arange(k, dtype=np.int64)
    best = generator.shape[1] + 1
    starts = range(indices.start, indices.stop, _BATCH_MESSAGES)
    for start in tqdm(starts, disable=not show_progress, file=sys.stderr, desc="codewords"):
        stop = min(start + _BATCH_MESSAGES, indices.stop)
        idx = np.arange(max(start, 1), stop, dtype=np.int64)
        if len(idx) == 0:
            continue
        messages = (idx[:, None] // weights[None, :]) % q
        codewords = spec.gf(messages) @ generator
        best = min(best, int(np.count_nonzero(codewords.view(np.ndarray), axis=1).min()))
    return best


def min_distance(c: LinearCode, config: Optional[QDKConfig] = None) -> CodeParams:
    """
    Exact minimum Hamming distance by enumerating all q^k codewords.

    Raises:
        CapExceededError: when q^k exceeds ``codeword_cap``
    """
    config = config or default_config
    size = c.spec.q ** c.k
    if size > config.codeword_cap:
        raise CapExceededError(f"codewords of a [{c.n},{c.k}] code over GF({c.spec.q})", size,
                               config.codeword_cap)
    generator = c.gen_matrix
    parts = chunked_map(
        lambda chunk: [_min_weight(c.spec, generator, c.k, r, config.show_progress) for r in chunk],
        range_chunks(size, config.workers),
        config.workers,
    )
    d = min(weight for part in parts for weight in part)
    return CodeParams(n=c.n, k=c.k, d=d, mds=d == c.n - c.k + 1)


def is_codeword(c: LinearCode, vector: Sequence[int]) -> bool:
    """Membership by reduction against the RREF generator matrix."""
    if len(vector) != c.n:
        raise CodeError(f"Vector of length {len(vector)} for a code of length {c.n}", kind="BadParameters")
    return contains_vector(c.subspace, vector)


def cyclic_shift(vector: Sequence[int]) -> Tuple[int, ...]:
    """(c_0, ..., c_{n-1}) -> (c_{n-1}, c_0, ..., c_{n-2}), i.e. multiplication by x."""
    vector = tuple(vector)
    return vector[-1:] + vector[:-1]


def codewords(c: LinearCode, config: Optional[QDKConfig] = None) -> List[Tuple[int, ...]]:
    """Every codeword, in message order; bounded by ``codeword_cap``."""
    config = config or default_config
    size = c.spec.q ** c.k
    if size > config.codeword_cap:
        raise CapExceededError("codeword list", size, config.codeword_cap)
    messages = list(itertools.product(range(c.spec.q), repeat=c.k))
    words = c.spec.gf(np.array(messages, dtype=np.int64).reshape(size, c.k)) @ c.gen_matrix
    return [tuple(int(v) for v in row) for row in words.view(np.ndarray).tolist()]


def nrc_points(deg: int, q: int, config: Optional[QDKConfig] = None) -> List[Subspace]:
    """(1, x, ..., x^deg) for x in GF(q) in canonical order, then (0, ..., 0, 1) for infinity."""
    if deg < 1:
        raise CodeError(f"Degree must be positive, got {deg}", kind="BadParameters")
    spec = field_for_order(q, config)
    points = [subspace_from_generators(spec, deg + 1, [[spec.power(x, i) for i in range(deg + 1)]])
              for x in spec.ordered_values()]
    points.append(subspace_from_generators(spec, deg + 1, [[0] * deg + [1]]))
    return points


def arc_check(points: Sequence[Subspace], r: int, config: Optional[QDKConfig] = None) -> bool:
    """
    True iff every r of the points are linearly independent.

    Raises:
        CapExceededError: when C(|points|, r) exceeds ``enumeration_cap``
    """
    config = config or default_config
    if not points:
        return True
    spec, n = points[0].spec, points[0].n
    if any(P.spec != spec or P.n != n or P.k != 1 for P in points):
        raise CodeError("Arc points must be 1-subspaces of one ambient space", kind="BadParameters")
    if not 1 <= r <= n:
        raise CodeError(f"r={r} outside 1..{n}", kind="BadParameters")
    subsets = math.comb(len(points), r)
    if subsets > config.enumeration_cap:
        raise CapExceededError(f"{r}-subsets of {len(points)} points", subsets, config.enumeration_cap)
    for chosen in itertools.combinations(points, r):
        if len(rref_rows(spec, n, [P.rows[0] for P in chosen])) != r:
            return False
    return True


def rs_code(q: int, k: int, length: int, config: Optional[QDKConfig] = None) -> LinearCode:
    """
    Doubly extended Reed-Solomon code evaluating 1, x, ..., x^(k-1).

    The first ``length`` points of GF(q) followed by infinity are used; a
    polynomial's value at infinity is its x^(k-1) coefficient.
    """
    if not 1 <= k <= length <= q + 1:
        raise CodeError(f"Need 1 <= k <= len <= q+1, got k={k}, len={length}, q={q}", kind="BadParameters")
    spec = field_for_order(q, config)
    xs = spec.ordered_values()[:length]
    rows = []
    for i in range(k):
        row = [spec.power(x, i) for x in xs]
        if length == q + 1:
            row.append(1 if i == k - 1 else 0)
        rows.append(row)
    return linear_code(spec, length, rows)


def count_cyclic_codes(n: int, q: int, config: Optional[QDKConfig] = None) -> CyclicCount:
    """
    Number of monic divisors of x^n - 1 over GF(q) next to (q)_k / (q^2 - q), k = 0..n.

    The divisors are formed from the factor list galois returns, independent of
    the cyclotomic-coset factorization.
    """
    config = config or default_config
    _check_coprime(n, q)
    spec = field_for_order(q, config)
    xn1 = galois.Poly([1] + [0] * (n - 1) + [spec.neg(1)], field=spec.gf)
    factors, multiplicities = xn1.factors()
    if any(int(e) != 1 for e in multiplicities):
        raise CodeError(f"x^{n}-1 is not squarefree over GF({q})", kind="NotCoprime")
    if 2 ** len(factors) > config.enumeration_cap:
        raise CapExceededError(f"divisor subsets of x^{n}-1", 2 ** len(factors), config.enumeration_cap)

    divisors = set()
    for size in range(len(factors) + 1):
        for chosen in itertools.combinations(factors, size):
            product = galois.Poly.One(field=spec.gf)
            for factor in chosen:
                product = product * factor
            divisors.add(tuple(int(c) for c in product.coeffs))

    num_cosets = len(cyclotomic_cosets(n, q).cosets)
    formula = tuple(Fraction(falling_factorial(q, k), affine_group_order(q)) for k in range(n + 1))
    return CyclicCount(n=n, q=q, oracle=len(divisors), num_cosets=num_cosets, formula_values=formula)


def cyclic_code_report(c: CyclicCode, with_distance: bool = False,
                       config: Optional[QDKConfig] = None) -> Dict[str, Any]:
    """
    Parameters of a cyclic code, with the d = n - k + 1 claim checked when d is known.
    """
    report: Dict[str, Any] = {"n": c.n, "k": c.k}
    if with_distance:
        params = min_distance(code_to_linear(c), config)
        report["d"] = params.d
        report["mds"] = params.mds
        if not params.mds:
            logger.info(f"[{c.n},{c.k}] cyclic code has d={params.d}, not n-k+1={c.n - c.k + 1}")
    report["generator_poly"] = c.gen_poly.render()
    report["root_exponents"] = list(c.root_exponents)
    report["parity_check_poly"] = parity_check_poly(c).render()
    return report

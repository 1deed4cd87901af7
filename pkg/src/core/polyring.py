#!/usr/bin/env python3
"""
Univariate polynomial algebra over the canonical finite fields.

Covers dense polynomial arithmetic, gcd, cyclotomic cosets, the factorization
of x^n - 1 through its splitting field, and the split-polynomial counting
formula next to the brute-force enumeration it is checked against.

Location: src/core/polyring.py
"""

from __future__ import annotations

import math
import sys
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import List, Optional, Sequence, Tuple, Union

import galois
import numpy as np
from tqdm import tqdm

from config.settings import QDKConfig, default_config
from .gf import (
    FieldElement,
    FieldSpec,
    field_create,
    field_for_order,
    primitive_element,
    render_coefficients,
    subfield_embedding,
)
from ..utils.exceptions import CapExceededError, PolynomialError
from ..utils.logging_config import get_logger
from ..utils.parallel import chunked_map, range_chunks

logger = get_logger(__name__)

NEG_INF = float("-inf")

SPLIT_MODES = ("monic_distinct_roots", "affine_orbits")
_BATCH_ROWS = 1 << 16


@dataclass(frozen=True)
class Poly:
    """Dense polynomial over a FieldSpec; ``values`` are ascending coefficient codes."""
    spec: FieldSpec
    values: Tuple[int, ...]

    def __post_init__(self):
        values = tuple(self.values)
        while values and values[-1] == 0:
            values = values[:-1]
        object.__setattr__(self, "values", values)

    @classmethod
    def constant(cls, spec: FieldSpec, value: int) -> "Poly":
        return cls(spec, (value,))

    @classmethod
    def monomial(cls, spec: FieldSpec, power: int, value: int = 1) -> "Poly":
        return cls(spec, (0,) * power + (value,))

    @classmethod
    def from_elements(cls, spec: FieldSpec, coeffs: Sequence[FieldElement]) -> "Poly":
        return cls(spec, tuple(c.value for c in coeffs))

    @classmethod
    def xn_minus_1(cls, spec: FieldSpec, n: int) -> "Poly":
        return cls(spec, (spec.neg(1),) + (0,) * (n - 1) + (1,))

    @classmethod
    def from_galois(cls, spec: FieldSpec, poly: galois.Poly) -> "Poly":
        """Wrap a galois polynomial whose field is ``spec.gf``."""
        return cls(spec, tuple(int(c) for c in reversed(poly.coeffs)))

    def to_galois(self) -> galois.Poly:
        return galois.Poly(list(reversed(self.values)) or [0], field=self.spec.gf)

    @property
    def coeffs(self) -> Tuple[FieldElement, ...]:
        return tuple(self.spec.element(v) for v in self.values)

    @property
    def is_zero(self) -> bool:
        return not self.values

    @property
    def degree(self) -> Union[int, float]:
        return len(self.values) - 1 if self.values else NEG_INF

    @property
    def leading(self) -> int:
        return self.values[-1] if self.values else 0

    def monic(self) -> "Poly":
        if self.is_zero:
            return self
        scale = self.spec.inv(self.leading)
        return Poly(self.spec, tuple(self.spec.mul(v, scale) for v in self.values))

    def render(self) -> str:
        return render_coefficients(self.values, self.spec)

    def __str__(self) -> str:
        return self.render()

    def __call__(self, value: int) -> int:
        return poly_eval(self, value)

    def __add__(self, other: "Poly") -> "Poly":
        return poly_arith(self, other, "add")

    def __sub__(self, other: "Poly") -> "Poly":
        return poly_arith(self, other, "sub")

    def __mul__(self, other: "Poly") -> "Poly":
        return poly_arith(self, other, "mul")


def _check_same(a: Poly, b: Poly) -> None:
    if a.spec != b.spec:
        raise PolynomialError("Polynomials over different fields", kind="SpecMismatch")


def poly_arith(a: Poly, b: Poly, kind: str) -> Union[Poly, Tuple[Poly, Poly]]:
    """
    Ring arithmetic on polynomials over the same field.

    Args:
        a, b: Operands
        kind: One of add, sub, mul, divmod

    Returns:
        A Poly, or (quotient, remainder) for divmod
    """
    _check_same(a, b)
    spec = a.spec
    if kind == "add":
        return Poly.from_galois(spec, a.to_galois() + b.to_galois())
    if kind == "sub":
        return Poly.from_galois(spec, a.to_galois() - b.to_galois())
    if kind == "mul":
        return Poly.from_galois(spec, a.to_galois() * b.to_galois())
    if kind == "divmod":
        if b.is_zero:
            raise PolynomialError("Polynomial division by zero", kind="DivisionByZero")
        quotient, remainder = divmod(a.to_galois(), b.to_galois())
        return Poly.from_galois(spec, quotient), Poly.from_galois(spec, remainder)
    raise PolynomialError(f"Unknown polynomial operation {kind!r}", kind="BadParameters")


def poly_gcd(a: Poly, b: Poly) -> Poly:
    """Monic greatest common divisor."""
    _check_same(a, b)
    if a.is_zero and b.is_zero:
        raise PolynomialError("gcd(0, 0) is undefined", kind="BothZero")
    return Poly.from_galois(a.spec, galois.gcd(a.to_galois(), b.to_galois())).monic()


def poly_eval(f: Poly, value: int) -> int:
    """Evaluate at an element code."""
    return int(f.to_galois()(f.spec.gf(value)))


def poly_pow_mod(f: Poly, exponent: int, modulus: Poly) -> Poly:
    """f^exponent mod ``modulus``."""
    _check_same(f, modulus)
    if exponent < 0:
        raise PolynomialError(f"Exponent must be nonnegative, got {exponent}", kind="IndexOutOfRange")
    if modulus.is_zero:
        raise PolynomialError("Reduction modulo the zero polynomial", kind="DivisionByZero")
    return Poly.from_galois(f.spec, pow(f.to_galois(), exponent, modulus.to_galois()))


def compose_affine(f: Poly, a: int, b: int) -> Poly:
    """f(a*x + b)."""
    gf = f.spec.gf
    linear = galois.Poly([a, b], field=gf)
    result = galois.Poly.Zero(gf)
    for coefficient in reversed(f.values):
        result = result * linear + galois.Poly([coefficient], field=gf)
    return Poly.from_galois(f.spec, result)


@dataclass(frozen=True)
class CosetPartition:
    """Orbits of Z_n under multiplication by q, ordered by least element."""
    n: int
    q: int
    cosets: Tuple[Tuple[int, ...], ...]

    def coset_of(self, j: int) -> Tuple[int, ...]:
        for coset in self.cosets:
            if j % self.n in coset:
                return coset
        raise PolynomialError(f"{j} not covered", kind="IndexOutOfRange")

    def is_union_of_cosets(self, exponents: Sequence[int]) -> bool:
        chosen = {j % self.n for j in exponents}
        return all(set(self.coset_of(j)) <= chosen for j in chosen)


def cyclotomic_cosets(n: int, q: int) -> CosetPartition:
    """Partition {0..n-1} into q-cyclotomic cosets."""
    if n < 1:
        raise PolynomialError(f"Length must be positive, got {n}", kind="BadParameters")
    if math.gcd(n, q) != 1:
        raise PolynomialError(f"gcd({n}, {q}) != 1", kind="NotCoprime", n=n, q=q)
    seen = set()
    cosets = []
    for start in range(n):
        if start in seen:
            continue
        coset = []
        j = start
        while j not in coset:
            coset.append(j)
            j = (j * q) % n
        seen.update(coset)
        cosets.append(tuple(sorted(coset)))
    return CosetPartition(n, q, tuple(cosets))


def multiplicative_order_mod(q: int, n: int) -> int:
    """Least l >= 1 with q^l = 1 (mod n)."""
    if n == 1:
        return 1
    if math.gcd(n, q) != 1:
        raise PolynomialError(f"gcd({n}, {q}) != 1", kind="NotCoprime", n=n, q=q)
    order = 1
    power = q % n
    while power != 1:
        power = (power * q) % n
        order += 1
    return order


@dataclass(frozen=True)
class SplittingData:
    """A primitive n-th root of unity beta inside GF(q^l) plus the way back to GF(q)."""
    big: FieldSpec
    beta: int
    extension_degree: int


def splitting_data(n: int, spec: FieldSpec, config: Optional[QDKConfig] = None) -> SplittingData:
    """beta = alpha^((q^l - 1)/n) for the canonical primitive alpha of GF(q^l), l = ord_n(q)."""
    l = multiplicative_order_mod(spec.q, n)
    big = field_create(spec.p, spec.m * l, config)
    alpha = primitive_element(big).value
    beta = big.power(alpha, (big.q - 1) // n)
    return SplittingData(big, beta, l)


def root_product(spec: FieldSpec, data: SplittingData, exponents: Sequence[int]) -> Poly:
    """
    prod_{j in exponents} (x - beta^j), brought back to GF(q).

    Raises NotASubfield when a coefficient does not land in GF(q).
    """
    big = data.big
    roots = [big.power(data.beta, j) for j in exponents]
    if not roots:
        return Poly.constant(spec, 1)
    product = Poly.from_galois(big, galois.Poly.Roots(roots, field=big.gf))
    if big == spec:
        return product
    embedding = subfield_embedding(spec, big)
    return Poly(spec, tuple(embedding.restrict(v) for v in product.values))


def factor_xn_minus_1(n: int, spec: FieldSpec, config: Optional[QDKConfig] = None) -> List[Poly]:
    """
    Monic irreducible factors of x^n - 1 over GF(q), one per cyclotomic coset.

    Returns:
        Factors sorted by their rendering
    """
    partition = cyclotomic_cosets(n, spec.q)
    data = splitting_data(n, spec, config)
    logger.debug(f"x^{n}-1 over GF({spec.q}) splits in GF({data.big.q})")
    factors = [root_product(spec, data, coset) for coset in partition.cosets]
    return sorted(factors, key=Poly.render)


def falling_factorial(q: int, k: int) -> int:
    """q (q-1) ... (q-k+1); 1 for k = 0."""
    if k < 0:
        raise PolynomialError(f"k must be nonnegative, got {k}", kind="IndexOutOfRange")
    result = 1
    for i in range(k):
        result *= q - i
    return result


@lru_cache(maxsize=None)
def stirling_first(n: int, k: int) -> int:
    """Signed Stirling number of the first kind s(n, k)."""
    if n < 0 or k < 0 or k > n:
        raise PolynomialError(f"s({n}, {k}) is out of range", kind="IndexOutOfRange")
    if n == k:
        return 1
    if k == 0:
        return 0
    below = stirling_first(n - 1, k - 1) if k - 1 <= n - 1 else 0
    same = stirling_first(n - 1, k) if k <= n - 1 else 0
    return below - (n - 1) * same


def affine_group_order(q: int) -> int:
    """|AGL(1, q)| = q^2 - q."""
    return q * q - q


def count_split_polys_formula(n: int, q: int) -> Fraction:
    """The split-polynomial count as printed: sum_{k=1..n} (q)_k / (q^2 - q), unrounded."""
    if q < 2:
        raise PolynomialError(f"q must be at least 2, got {q}", kind="BadParameters")
    total = sum(falling_factorial(q, k) for k in range(1, n + 1))
    value = Fraction(total, affine_group_order(q))
    if value.denominator != 1:
        logger.info(f"Split-polynomial formula is not integral at n={n}, q={q}: {value}")
    return value


def _count_rows(spec: FieldSpec, n: int, vandermonde, indices: range, show_progress: bool) -> np.ndarray:
    """Lower coefficient rows (codes) of the monic candidates in ``indices`` with n roots."""
    q = spec.q
    weights = q ** np.arange(n, dtype=np.int64)
    kept = []
    starts = range(indices.start, indices.stop, _BATCH_ROWS)
    for start in tqdm(starts, disable=not show_progress, file=sys.stderr, desc="split polys"):
        stop = min(start + _BATCH_ROWS, indices.stop)
        idx = np.arange(start, stop, dtype=np.int64)
        lower = (idx[:, None] // weights[None, :]) % q
        full = np.hstack([lower, np.ones((len(idx), 1), dtype=np.int64)])
        values = spec.gf(full) @ vandermonde
        roots = np.count_nonzero(values.view(np.ndarray) == 0, axis=1)
        kept.append(lower[roots == n])
    if not kept:
        return np.zeros((0, n), dtype=np.int64)
    return np.vstack(kept)


def _affine_orbit_count(spec: FieldSpec, n: int, rows: np.ndarray) -> int:
    members = {tuple(int(v) for v in row) + (1,) for row in rows}
    nonzero = [v for v in spec.ordered_values() if v]
    remaining = set(members)
    orbits = 0
    while remaining:
        seed = min(remaining)
        orbit = set()
        for a in nonzero:
            for b in spec.ordered_values():
                image = compose_affine(Poly(spec, seed), a, b).monic()
                orbit.add(image.values)
        if not orbit <= members:
            raise PolynomialError("Affine substitution left the split-polynomial set",
                                  kind="BadParameters")
        remaining -= orbit
        orbits += 1
    return orbits


def brute_count_split_polys(n: int, q: int, mode: str = "monic_distinct_roots",
                            config: Optional[QDKConfig] = None) -> int:
    """
    Enumerate monic degree-n polynomials over GF(q) with n distinct roots in GF(q).

    Args:
        n: Degree (>= 1)
        q: Field order (prime power)
        mode: monic_distinct_roots counts the polynomials; affine_orbits counts
              their orbits under x -> a x + b followed by monic normalization
        config: Supplies ``poly_enum_cap``, ``workers`` and ``show_progress``

    Returns:
        The exact count
    """
    config = config or default_config
    if mode not in SPLIT_MODES:
        raise PolynomialError(f"Unknown mode {mode!r}", kind="BadParameters")
    if n < 1:
        raise PolynomialError(f"Degree must be positive, got {n}", kind="BadParameters")
    spec = field_for_order(q, config)
    if q ** (n + 1) > config.poly_enum_cap:
        raise CapExceededError(f"split-polynomial candidates (n={n}, q={q})", q ** (n + 1),
                               config.poly_enum_cap)

    points = spec.ordered_values()
    vandermonde = spec.gf([[spec.power(x, i) for x in points] for i in range(n + 1)])
    chunks = range_chunks(q ** n, config.workers)
    parts = chunked_map(
        lambda chunk: [_count_rows(spec, n, vandermonde, r, config.show_progress) for r in chunk],
        chunks,
        config.workers,
    )
    rows = [block for part in parts for block in part]
    accepted = np.vstack(rows) if rows else np.zeros((0, n), dtype=np.int64)
    logger.debug(f"{len(accepted)} split monic polynomials of degree {n} over GF({q})")

    if mode == "monic_distinct_roots":
        return int(len(accepted))
    return _affine_orbit_count(spec, n, accepted)

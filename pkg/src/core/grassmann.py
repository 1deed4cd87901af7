#!/usr/bin/env python3
"""
Subspaces of F_q^n in canonical form and the Grassmannians they live in.

A Subspace is stored as its reduced row echelon basis (element codes), which
makes equality, hashing and sorting exact and O(size). Enumeration builds
RREF matrices directly: pivot-column sets in colexicographic order, then the
free entries in odometer order (last free entry fastest).

Location: src/core/grassmann.py
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable, Iterator, List, Optional, Sequence, Tuple, Union

import numpy as np

from config.settings import QDKConfig, default_config
from .gf import FieldElement, FieldSpec, parse_element, parse_prime_power
from ..utils.exceptions import CapExceededError, SubspaceError
from ..utils.logging_config import get_logger

logger = get_logger(__name__)

Rows = Tuple[Tuple[int, ...], ...]
VectorLike = Sequence[Union[int, FieldElement]]


@dataclass(frozen=True)
class Subspace:
    """A k-dimensional subspace of F_q^n given by its RREF basis (element codes)."""
    spec: FieldSpec
    n: int
    k: int
    rows: Rows

    @property
    def basis(self) -> Tuple[Tuple[FieldElement, ...], ...]:
        return tuple(tuple(self.spec.element(v) for v in row) for row in self.rows)

    @property
    def matrix(self):
        """The basis as a k x n galois FieldArray."""
        return self.spec.gf(np.array(self.rows, dtype=np.int64).reshape(self.k, self.n))

    @property
    def pivots(self) -> Tuple[int, ...]:
        return tuple(next(j for j, v in enumerate(row) if v) for row in self.rows)

    @property
    def sort_key(self) -> Rows:
        return self.rows

    def token(self) -> str:
        return serialize_rows(self.spec, self.rows)

    def __lt__(self, other: "Subspace") -> bool:
        return (self.k, self.rows) < (other.k, other.rows)

    def __str__(self) -> str:
        return f"<{self.token()}>" if self.k else "<0>"


def serialize_rows(spec: FieldSpec, rows: Iterable[Sequence[int]]) -> str:
    """Rows separated by ';', element tokens within a row separated by spaces."""
    return ";".join(" ".join(spec.render_value(v) for v in row) for row in rows)


def parse_rows(spec: FieldSpec, text: str) -> List[Tuple[int, ...]]:
    """Inverse of ``serialize_rows``."""
    rows = []
    for chunk in text.strip().split(";"):
        if not chunk.strip():
            continue
        rows.append(tuple(parse_element(spec, token).value for token in chunk.split()))
    return rows


def _as_codes(spec: FieldSpec, row: VectorLike) -> Tuple[int, ...]:
    codes = []
    for entry in row:
        if isinstance(entry, FieldElement):
            if entry.spec != spec:
                raise SubspaceError("Vector entry from another field", kind="AmbientMismatch")
            codes.append(entry.value)
        else:
            value = int(entry)
            if not 0 <= value < spec.q:
                raise SubspaceError(f"Entry {value} is not an element of GF({spec.q})",
                                    kind="AmbientMismatch")
            codes.append(value)
    return tuple(codes)


def rref_rows(spec: FieldSpec, n: int, rows: Sequence[Sequence[int]]) -> Rows:
    """Canonical RREF of the row space spanned by ``rows`` (zero rows dropped)."""
    if not rows:
        return ()
    reduced = spec.gf(np.array(rows, dtype=np.int64).reshape(len(rows), n)).row_reduce()
    kept = [tuple(int(v) for v in row) for row in reduced.view(np.ndarray).tolist() if any(row)]
    return tuple(kept)


def subspace_from_generators(spec: FieldSpec, n: int, rows: Sequence[VectorLike]) -> Subspace:
    """
    Canonical subspace spanned by the given vectors.

    All-zero input yields the zero subspace (k = 0) rather than an error.
    """
    codes = [_as_codes(spec, row) for row in rows]
    for row in codes:
        if len(row) != n:
            raise SubspaceError(f"Vector of length {len(row)} in F_q^{n}", kind="AmbientMismatch")
    reduced = rref_rows(spec, n, codes)
    return Subspace(spec, n, len(reduced), reduced)


def zero_subspace(spec: FieldSpec, n: int) -> Subspace:
    return Subspace(spec, n, 0, ())


def full_space(spec: FieldSpec, n: int) -> Subspace:
    rows = tuple(tuple(1 if i == j else 0 for j in range(n)) for i in range(n))
    return Subspace(spec, n, n, rows)


@lru_cache(maxsize=None)
def _check_field_order(q: int) -> None:
    parse_prime_power(q)


def gaussian_binomial(n: int, k: int, q: int) -> int:
    """Number of k-dimensional subspaces of F_q^n; 0 outside 0 <= k <= n. q must be a prime power."""
    _check_field_order(q)
    if k < 0 or k > n:
        return 0
    numerator = 1
    denominator = 1
    for i in range(k):
        numerator *= q ** (n - i) - 1
        denominator *= q ** (k - i) - 1
    return numerator // denominator


def colex_pivot_sets(n: int, k: int) -> List[Tuple[int, ...]]:
    """k-subsets of range(n) in colexicographic order."""
    return sorted(itertools.combinations(range(n), k), key=lambda pivots: pivots[::-1])


class GrassmannianIter:
    """
    Deterministic stream of every k-subspace of F_q^n.

    Each pass yields RREF subspaces ordered by pivot set (colex) and then by
    free entries (odometer). ``partition`` splits the pivot sets so several
    consumers can enumerate disjoint pieces whose union is the serial stream.
    """

    def __init__(self, spec: FieldSpec, n: int, k: int, pivot_sets: Optional[Sequence[Tuple[int, ...]]] = None):
        self.spec = spec
        self.n = n
        self.k = k
        if pivot_sets is None:
            pivot_sets = colex_pivot_sets(n, k) if 0 <= k <= n else []
        self.pivot_sets = list(pivot_sets)

    def __len__(self) -> int:
        q = self.spec.q
        total = 0
        for pivots in self.pivot_sets:
            total += q ** len(self._free_positions(pivots))
        return total

    def __iter__(self) -> Iterator[Subspace]:
        values = self.spec.ordered_values()
        for pivots in self.pivot_sets:
            free = self._free_positions(pivots)
            for assignment in itertools.product(values, repeat=len(free)):
                rows = [[0] * self.n for _ in range(self.k)]
                for i, column in enumerate(pivots):
                    rows[i][column] = 1
                for (i, column), value in zip(free, assignment):
                    rows[i][column] = value
                yield Subspace(self.spec, self.n, self.k, tuple(tuple(row) for row in rows))

    def _free_positions(self, pivots: Tuple[int, ...]) -> List[Tuple[int, int]]:
        pivot_set = set(pivots)
        return [(i, column)
                for i, pivot in enumerate(pivots)
                for column in range(pivot + 1, self.n)
                if column not in pivot_set]

    def partition(self, parts: int) -> List["GrassmannianIter"]:
        """Split into at most ``parts`` iterators over disjoint pivot sets."""
        parts = max(1, min(parts, len(self.pivot_sets) or 1))
        groups = [self.pivot_sets[i::parts] for i in range(parts)]
        return [GrassmannianIter(self.spec, self.n, self.k, group) for group in groups if group]


def enumerate_subspaces(spec: FieldSpec, n: int, k: int, config: Optional[QDKConfig] = None) -> GrassmannianIter:
    """
    Stream all k-subspaces of F_q^n.

    Raises:
        CapExceededError: when [n, k]_q exceeds ``enumeration_cap``
    """
    config = config or default_config
    size = gaussian_binomial(n, k, spec.q)
    if size > config.enumeration_cap:
        raise CapExceededError(f"Grassmannian G({k},{n}) over GF({spec.q})", size, config.enumeration_cap)
    logger.debug(f"Enumerating {size} subspaces of dimension {k} in F_{spec.q}^{n}")
    return GrassmannianIter(spec, n, k)


def _check_ambient(U: Subspace, V: Subspace) -> None:
    if U.spec != V.spec or U.n != V.n:
        raise SubspaceError(f"Subspaces of F_{U.spec.q}^{U.n} and F_{V.spec.q}^{V.n} are not comparable",
                            kind="AmbientMismatch")


def reduce_vector(U: Subspace, vector: Sequence[int]) -> Tuple[int, ...]:
    """Residue of a vector after clearing U's pivot columns; zero iff the vector is in U."""
    spec = U.spec
    residue = list(vector)
    for row, pivot in zip(U.rows, U.pivots):
        factor = residue[pivot]
        if factor == 0:
            continue
        for j, v in enumerate(row):
            if v:
                residue[j] = spec.sub(residue[j], spec.mul(factor, v))
    return tuple(residue)


def contains_vector(U: Subspace, vector: Sequence[int]) -> bool:
    return not any(reduce_vector(U, vector))


def contains(U: Subspace, V: Subspace) -> bool:
    """True iff V is a subspace of U."""
    _check_ambient(U, V)
    if V.k > U.k:
        return False
    return all(contains_vector(U, row) for row in V.rows)


def subspace_sum(U: Subspace, V: Subspace) -> Subspace:
    """U + V."""
    _check_ambient(U, V)
    reduced = rref_rows(U.spec, U.n, list(U.rows) + list(V.rows))
    return Subspace(U.spec, U.n, len(reduced), reduced)


def intersect(U: Subspace, V: Subspace) -> Subspace:
    """U ∩ V by the Zassenhaus block reduction [[U, U], [V, 0]]."""
    _check_ambient(U, V)
    n = U.n
    if U.k == 0 or V.k == 0:
        return zero_subspace(U.spec, n)
    stacked = [row + row for row in U.rows] + [row + (0,) * n for row in V.rows]
    reduced = rref_rows(U.spec, 2 * n, stacked)
    meet = [row[n:] for row in reduced if not any(row[:n])]
    return subspace_from_generators(U.spec, n, meet) if meet else zero_subspace(U.spec, n)


def subspace_distance(U: Subspace, V: Subspace) -> int:
    """dim U + dim V - 2 dim(U ∩ V)."""
    _check_ambient(U, V)
    return U.k + V.k - 2 * intersect(U, V).k


def code_min_distance(code: Sequence[Subspace]) -> Optional[int]:
    """
    Least subspace distance between distinct members of a subspace code.

    Returns None for codes with fewer than two distinct members.
    """
    members = sorted(set(code))
    if len(members) < 2:
        return None
    return min(subspace_distance(U, V) for U, V in itertools.combinations(members, 2))


def parse_subspace(spec: FieldSpec, n: int, text: str) -> Subspace:
    """Parse generator rows in the serialized form and canonicalize them."""
    return subspace_from_generators(spec, n, parse_rows(spec, text))

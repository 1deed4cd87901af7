#!/usr/bin/env python3
"""
Finite matrix groups acting on Grassmannians by right multiplication.

Vectors are rows, so a group element g sends the subspace spanned by the rows
of U to the span of the rows of U * g. Scalar matrices act trivially, which
makes the induced action the projective one without quotient bookkeeping.

Location: src/core/groupact.py
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from typing import Dict, List, Optional, Sequence, Tuple

import galois
import numpy as np

from config.settings import QDKConfig, default_config
from .gf import FieldSpec, canonical_irreducible, field_create, field_for_order, primitive_element
from .grassmann import (
    Rows,
    Subspace,
    enumerate_subspaces,
    parse_rows,
    rref_rows,
    serialize_rows,
)
from ..utils.exceptions import CapExceededError, GroupError
from ..utils.logging_config import get_logger
from ..utils.parallel import chunked_map

logger = get_logger(__name__)


@dataclass(frozen=True)
class GroupElement:
    """An invertible n x n matrix over GF(q), rows stored as element codes."""
    spec: FieldSpec
    n: int
    rows: Rows

    @property
    def mat(self):
        return tuple(tuple(self.spec.element(v) for v in row) for row in self.rows)

    @property
    def array(self):
        """The matrix as a galois FieldArray."""
        return self.spec.gf(np.array(self.rows, dtype=np.int64).reshape(self.n, self.n))

    @property
    def key(self) -> Rows:
        return self.rows

    @property
    def is_identity(self) -> bool:
        return self.rows == _identity_rows(self.n)

    def token(self) -> str:
        return serialize_rows(self.spec, self.rows)

    def __mul__(self, other: "GroupElement") -> "GroupElement":
        _check_compatible(self, other)
        return _from_array(self.spec, self.array @ other.array)

    def inverse(self) -> "GroupElement":
        return _from_array(self.spec, np.linalg.inv(self.array))

    def power(self, exponent: int) -> "GroupElement":
        base = self if exponent >= 0 else self.inverse()
        exponent = abs(exponent)
        result = identity(self.spec, self.n)
        while exponent:
            if exponent & 1:
                result = result * base
            base = base * base
            exponent >>= 1
        return result

    def __lt__(self, other: "GroupElement") -> bool:
        return self.rows < other.rows


def _identity_rows(n: int) -> Rows:
    return tuple(tuple(1 if i == j else 0 for j in range(n)) for i in range(n))


def _from_array(spec: FieldSpec, array) -> GroupElement:
    rows = tuple(tuple(int(v) for v in row) for row in array.view(np.ndarray).tolist())
    return GroupElement(spec, len(rows), rows)


def _check_compatible(g: GroupElement, h: GroupElement) -> None:
    if g.spec != h.spec or g.n != h.n:
        raise GroupError(f"Cannot combine a {g.n}x{g.n} matrix over GF({g.spec.q}) "
                         f"with a {h.n}x{h.n} matrix over GF({h.spec.q})", kind="DimensionMismatch")


def identity(spec: FieldSpec, n: int) -> GroupElement:
    return GroupElement(spec, n, _identity_rows(n))


def group_element(spec: FieldSpec, rows: Sequence[Sequence[int]]) -> GroupElement:
    """
    Validated constructor from element codes.

    Raises:
        GroupError: WrongDimension for non-square input, NotInvertible for a
            singular matrix
    """
    n = len(rows)
    if n == 0 or any(len(row) != n for row in rows):
        raise GroupError("Group elements must be square nonempty matrices", kind="WrongDimension")
    codes = tuple(tuple(int(v) for v in row) for row in rows)
    if any(not 0 <= v < spec.q for row in codes for v in row):
        raise GroupError(f"Matrix entries must be elements of GF({spec.q})", kind="WrongDimension")
    element = GroupElement(spec, n, codes)
    if int(np.linalg.det(element.array)) == 0:
        raise GroupError(f"Matrix {element.token()} is singular", kind="NotInvertible")
    return element


def parse_matrix(spec: FieldSpec, text: str) -> GroupElement:
    """Parse a ';'-separated row-major matrix of element tokens."""
    return group_element(spec, parse_rows(spec, text))


def matrix_order(g: GroupElement, limit: Optional[int] = None) -> int:
    """Least e >= 1 with g^e = I (bounded by |GL(n,q)| unless ``limit`` is given)."""
    if limit is None:
        limit = general_linear_order(g.n, g.spec.q)
    current = g
    for exponent in range(1, limit + 1):
        if current.is_identity:
            return exponent
        current = current * g
    raise GroupError(f"Order of {g.token()} exceeds {limit}", kind="NotInvertible")


def general_linear_order(n: int, q: int) -> int:
    """|GL(n, q)| = prod_{i<n} (q^n - q^i)."""
    order = 1
    for i in range(n):
        order *= q ** n - q ** i
    return order


@dataclass(frozen=True)
class MatrixGroup:
    """A finitely generated matrix group, optionally with its enumerated elements."""
    spec: FieldSpec
    n: int
    generators: Tuple[GroupElement, ...]
    elements: Optional[Tuple[GroupElement, ...]] = None

    @property
    def closed(self) -> bool:
        return self.elements is not None

    def require_closed(self) -> Tuple[GroupElement, ...]:
        if self.elements is None:
            raise GroupError("Group elements have not been enumerated", kind="GroupNotClosed")
        return self.elements


@dataclass(frozen=True)
class TrianglePresentation:
    """Witnesses x, y, z for x^r = y^m = z^w = xyz = 1."""
    r: int
    m: int
    w: int
    x: GroupElement
    y: GroupElement
    z: GroupElement


def group_closure(generators: Sequence[GroupElement], cap: Optional[int] = None,
                  config: Optional[QDKConfig] = None) -> MatrixGroup:
    """
    Breadth-first closure of a generator set under right multiplication.

    Args:
        generators: Invertible matrices sharing field and dimension
        cap: Maximum group size (defaults to ``group_cap``)
        config: Configuration supplying the default cap

    Returns:
        MatrixGroup with elements sorted by their row encoding
    """
    config = config or default_config
    cap = cap if cap is not None else config.group_cap
    if not generators:
        raise GroupError("A group needs at least one generator", kind="BadArguments")
    first = generators[0]
    for g in generators:
        _check_compatible(first, g)
        if int(np.linalg.det(g.array)) == 0:
            raise GroupError(f"Generator {g.token()} is singular", kind="NotInvertible")

    start = identity(first.spec, first.n)
    seen: Dict[Rows, GroupElement] = {start.rows: start}
    queue = deque([start])
    while queue:
        current = queue.popleft()
        for g in generators:
            product = current * g
            if product.rows in seen:
                continue
            if len(seen) >= cap:
                raise CapExceededError("group closure", len(seen) + 1, cap)
            seen[product.rows] = product
            queue.append(product)

    elements = tuple(seen[key] for key in sorted(seen))
    logger.debug(f"Closed {len(generators)} generators to a group of order {len(elements)}")
    return MatrixGroup(first.spec, first.n, tuple(generators), elements)


def _companion_rows(spec: FieldSpec, poly: Sequence[int]) -> Rows:
    """Rows are the images of 1, a, ..., a^(d-1) under multiplication by a root a of ``poly``."""
    degree = len(poly) - 1
    rows = []
    for i in range(degree - 1):
        rows.append(tuple(1 if j == i + 1 else 0 for j in range(degree)))
    rows.append(tuple(spec.neg(c) for c in poly[:degree]))
    return tuple(rows)


def singer_matrix(p: int, base_m: int, ext_n: int, config: Optional[QDKConfig] = None) -> GroupElement:
    """
    Multiplication by the canonical generator of GF(q^ext_n) over GF(q), q = p^base_m.

    For ext_n >= 2 this is the companion matrix of the canonical irreducible of
    degree ext_n over GF(q); for ext_n = 1 it is the 1x1 matrix of the
    primitive element of GF(q).
    """
    field_create(p, base_m * ext_n, config)
    base = field_create(p, base_m, config)
    if ext_n == 1:
        return group_element(base, [[primitive_element(base).value]])
    modulus = canonical_irreducible(base, ext_n)
    return group_element(base, _companion_rows(base, modulus))


def multiplication_matrix(p: int, base_m: int, ext_n: int, element_coeffs: Sequence[int],
                          config: Optional[QDKConfig] = None) -> GroupElement:
    """Matrix of multiplication by sum_i b_i alpha^i, i.e. the same polynomial in the Singer matrix."""
    singer = singer_matrix(p, base_m, ext_n, config)
    spec = singer.spec
    total = spec.gf.Zeros((ext_n, ext_n))
    power = identity(spec, ext_n).array
    for coefficient in element_coeffs:
        total = total + spec.gf(int(coefficient)) * power
        power = power @ singer.array
    return group_element(spec, total.view(np.ndarray).tolist())


def mobius_multiplier(p: int, base_m: int, ext_n: int, a: int, b: int, c: int, d: int,
                      frob: int = 0, config: Optional[QDKConfig] = None) -> GroupElement:
    """
    Multiplication by (a*gamma + b) / (c*gamma + d) with gamma = alpha^(q^frob).

    Raises:
        GroupError: NotInvertible when ad - bc = 0 or c*gamma + d = 0
    """
    singer = singer_matrix(p, base_m, ext_n, config)
    spec = singer.spec
    if spec.sub(spec.mul(a, d), spec.mul(b, c)) == 0:
        raise GroupError(f"Mobius coefficients ({a},{b};{c},{d}) are singular", kind="NotInvertible")
    gamma = singer.power(spec.q ** frob).array
    eye = identity(spec, ext_n).array
    numerator = spec.gf(a) * gamma + spec.gf(b) * eye
    denominator = spec.gf(c) * gamma + spec.gf(d) * eye
    if int(np.linalg.det(denominator)) == 0:
        raise GroupError("c*gamma + d is not invertible", kind="NotInvertible")
    return group_element(spec, (numerator @ np.linalg.inv(denominator)).view(np.ndarray).tolist())


def sym_power_rep(g: GroupElement, deg: int) -> GroupElement:
    """
    Induced action of a 2x2 matrix on binary forms of degree ``deg``.

    The basis is x0^deg, x0^(deg-1) x1, ..., x1^deg. The substitution sends
    x_j to sum_i g[1-j][1-i] x_i and row e holds the expansion of the image of
    the e-th monomial, so sym(g h) = sym(g) sym(h).
    """
    if g.n != 2:
        raise GroupError(f"Symmetric powers need a 2x2 matrix, got {g.n}x{g.n}", kind="WrongDimension")
    if deg < 1:
        raise GroupError(f"Degree must be positive, got {deg}", kind="WrongDimension")
    spec = g.spec
    rows = g.rows
    # Forms are polynomials in x1/x0, coefficient i belonging to x0^(deg-i) x1^i.
    image_x0 = galois.Poly([rows[1][0], rows[1][1]], field=spec.gf)
    image_x1 = galois.Poly([rows[0][0], rows[0][1]], field=spec.gf)

    result = []
    for e in range(deg + 1):
        form = image_x0 ** (deg - e) * image_x1 ** e
        coeffs = [int(c) for c in reversed(form.coeffs)]
        result.append(tuple(coeffs + [0] * (deg + 1 - len(coeffs))))
    return group_element(spec, result)


def act(U: Subspace, g: GroupElement) -> Subspace:
    """The subspace spanned by the rows of U * g, in canonical form."""
    if U.spec != g.spec or U.n != g.n:
        raise GroupError(f"Cannot act with a {g.n}x{g.n} matrix on a subspace of F^{U.n}",
                         kind="DimensionMismatch")
    if U.k == 0:
        return U
    reduced = rref_rows(U.spec, U.n, (U.matrix @ g.array).view(np.ndarray).tolist())
    return Subspace(U.spec, U.n, len(reduced), reduced)


def orbit(U: Subspace, G: MatrixGroup) -> List[Subspace]:
    """Sorted, deduplicated {act(U, g) : g in G}."""
    elements = G.require_closed()
    return sorted({act(U, g) for g in elements}, key=lambda V: V.sort_key)


def stabilizer(U: Subspace, G: MatrixGroup) -> List[GroupElement]:
    """Elements of G fixing U setwise."""
    return [g for g in G.require_closed() if act(U, g) == U]


def group_order(G: MatrixGroup) -> int:
    return len(G.require_closed())


def _is_invariant(U: Subspace, generators: Sequence[GroupElement]) -> bool:
    return all(act(U, g) == U for g in generators)


def invariant_subspaces(G: MatrixGroup, k: int, config: Optional[QDKConfig] = None) -> List[Subspace]:
    """
    Every k-subspace fixed by all generators of G.

    The Grassmannian stream is split by pivot sets across ``workers`` threads;
    the sorted result does not depend on the split.
    """
    config = config or default_config
    stream = enumerate_subspaces(G.spec, G.n, k, config)
    pieces = stream.partition(config.workers)
    found = chunked_map(
        lambda chunk: [U for piece in chunk for U in piece if _is_invariant(U, G.generators)],
        pieces,
        config.workers,
    )
    return sorted((U for part in found for U in part), key=lambda V: V.sort_key)


def orbits(G: MatrixGroup, k: int, config: Optional[QDKConfig] = None) -> List[List[Subspace]]:
    """Partition of G_{k,n} into G-orbits, ordered by least member."""
    G.require_closed()
    remaining = set(enumerate_subspaces(G.spec, G.n, k, config))
    result = []
    while remaining:
        seed = min(remaining, key=lambda V: V.sort_key)
        members = orbit(seed, G)
        remaining.difference_update(members)
        result.append(members)
    return result


def check_triangle_relations(t: TrianglePresentation) -> bool:
    """True iff x^r = y^m = z^w = xyz = I."""
    _check_compatible(t.x, t.y)
    _check_compatible(t.x, t.z)
    return (t.x.power(t.r).is_identity
            and t.y.power(t.m).is_identity
            and t.z.power(t.w).is_identity
            and (t.x * t.y * t.z).is_identity)


def dihedral_generators(q: int, m: int, config: Optional[QDKConfig] = None) -> Tuple[GroupElement, GroupElement]:
    """
    Rotation and reflection generating the dihedral group of order 2m in GL(2, q).

    The rotation is [[0, -1], [1, t]] for the first t in canonical order whose
    matrix has order m; the reflection swaps the coordinates.
    """
    spec = field_for_order(q, config)
    for t in spec.ordered_values():
        rotation = group_element(spec, [[0, spec.neg(1)], [1, t]])
        if matrix_order(rotation) == m:
            reflection = group_element(spec, [[0, 1], [1, 0]])
            return rotation, reflection
    raise GroupError(f"No rotation of order {m} of this form in GL(2,{q})", kind="BadArguments")


def dihedral_triangle(q: int, m: int, config: Optional[QDKConfig] = None) -> TrianglePresentation:
    """Triangle witnesses (2, 2, m): x = S, y = S R, z = R^-1."""
    rotation, reflection = dihedral_generators(q, m, config)
    return TrianglePresentation(2, 2, m, reflection, reflection * rotation, rotation.inverse())


def trivial_group(spec: FieldSpec, n: int) -> MatrixGroup:
    return group_closure([identity(spec, n)])


def lift_group(G: MatrixGroup, deg: int, config: Optional[QDKConfig] = None) -> MatrixGroup:
    """Closure of the symmetric-power images of the generators of a 2x2 group."""
    return group_closure([sym_power_rep(g, deg) for g in G.generators], config=config)


def builtin_group(text: str, config: Optional[QDKConfig] = None) -> MatrixGroup:
    """
    Build a named group: ``singer:p,m,n``, ``dihedral:q,m`` or ``trivial:q,n``.

    Raises:
        GroupError: BadArguments for an unknown name or malformed parameters
    """
    name, _, params = text.partition(":")
    try:
        values = [int(v) for v in params.split(",") if v.strip()]
    except ValueError:
        raise GroupError(f"Bad group parameters {params!r}", kind="BadArguments")
    expected = {"singer": 3, "dihedral": 2, "trivial": 2}
    if name not in expected or len(values) != expected[name]:
        raise GroupError(f"Unknown group {text!r}; use singer:p,m,n, dihedral:q,m or trivial:q,n",
                         kind="BadArguments")
    if name == "singer":
        return group_closure([singer_matrix(*values, config=config)], config=config)
    if name == "dihedral":
        return group_closure(list(dihedral_generators(*values, config=config)), config=config)
    q, n = values
    return trivial_group(field_for_order(q, config), n)

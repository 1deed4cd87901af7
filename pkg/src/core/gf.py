#!/usr/bin/env python3
"""
Finite field construction and exact arithmetic in GF(p^m).

Elements are coordinate vectors in the polynomial basis 1, x, ..., x^(m-1)
modulo a deterministic canonical modulus: the monic irreducible of degree m
with the least integer code sum(c_i * p^i), i.e. lexicographically least when
the coefficients are read from c_(m-1) down to c_0. Two FieldSpec values with
the same (p, m) are therefore identical. Elements are ordered the same way.

Internally every element also has an integer code sum(c_i * p^i), which is the
integer representation galois uses for the same polynomial basis, so vectors
and matrices can be handed to galois FieldArrays without translation.

Location: src/core/gf.py
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import TYPE_CHECKING, Dict, List, Optional, Sequence, Tuple, Type

import galois
import numpy as np

from config.settings import QDKConfig, default_config
from ..utils.exceptions import CapExceededError, FieldError
from ..utils.logging_config import get_logger

if TYPE_CHECKING:
    from .polyring import Poly

logger = get_logger(__name__)

TABLE_MAX_ORDER = 256


@lru_cache(maxsize=None)
def _galois_field(p: int, m: int, modulus: Tuple[int, ...]) -> Type[galois.FieldArray]:
    """Build (once) the galois field class matching a canonical modulus."""
    if m == 1:
        return galois.GF(p)
    irreducible = galois.Poly(list(reversed(modulus)), field=galois.GF(p))
    return galois.GF(p ** m, irreducible_poly=irreducible)


@lru_cache(maxsize=None)
def _arith_tables(p: int, m: int, modulus: Tuple[int, ...]) -> Optional[Tuple[List[List[int]], ...]]:
    """Addition, subtraction and multiplication tables computed by galois; None above TABLE_MAX_ORDER."""
    if p ** m > TABLE_MAX_ORDER:
        return None
    elements = _galois_field(p, m, modulus).elements
    left, right = elements[:, None], elements[None, :]
    return tuple((table.view(np.ndarray).tolist())
                 for table in (left + right, left - right, left * right))


@dataclass(frozen=True)
class FieldSpec:
    """GF(p^m) with its canonical modulus (ascending coefficients, monic)."""
    p: int
    m: int
    modulus: Tuple[int, ...]

    @property
    def q(self) -> int:
        return self.p ** self.m

    @property
    def gf(self) -> Type[galois.FieldArray]:
        """The galois FieldArray class for this field."""
        return _galois_field(self.p, self.m, self.modulus)

    def __repr__(self) -> str:
        return f"FieldSpec(GF({self.p}^{self.m}), modulus={render_coefficients(self.modulus)})"

    # Scalar arithmetic on integer codes, carried out by galois

    def _tables(self) -> Optional[Tuple[List[List[int]], ...]]:
        return _arith_tables(self.p, self.m, self.modulus)

    def add(self, a: int, b: int) -> int:
        tables = self._tables()
        if tables is not None:
            return tables[0][a][b]
        return int(self.gf(a) + self.gf(b))

    def neg(self, a: int) -> int:
        tables = self._tables()
        if tables is not None:
            return tables[1][0][a]
        return int(-self.gf(a))

    def sub(self, a: int, b: int) -> int:
        tables = self._tables()
        if tables is not None:
            return tables[1][a][b]
        return int(self.gf(a) - self.gf(b))

    def mul(self, a: int, b: int) -> int:
        tables = self._tables()
        if tables is not None:
            return tables[2][a][b]
        return int(self.gf(a) * self.gf(b))

    def inv(self, a: int) -> int:
        if a == 0:
            raise FieldError("Inverse of zero", kind="DivisionByZero")
        return int(np.reciprocal(self.gf(a)))

    def power(self, a: int, e: int) -> int:
        if a == 0 and e < 0:
            raise FieldError("Negative power of zero", kind="DivisionByZero")
        return int(self.gf(a) ** e)

    # Codes <-> coordinates

    def digits(self, value: int) -> Tuple[int, ...]:
        coeffs = []
        for _ in range(self.m):
            value, digit = divmod(value, self.p)
            coeffs.append(digit)
        return tuple(coeffs)

    def encode(self, coeffs: Sequence[int]) -> int:
        value = 0
        for digit in reversed(coeffs):
            value = value * self.p + digit
        return value

    def element(self, value: int) -> "FieldElement":
        return FieldElement(self, self.digits(value))

    def zero(self) -> "FieldElement":
        return FieldElement(self, (0,) * self.m)

    def one(self) -> "FieldElement":
        return FieldElement(self, (1,) + (0,) * (self.m - 1))

    def ordered_values(self) -> List[int]:
        """All integer codes in canonical element order."""
        return _ordered_values(self.p, self.m)

    def in_prime_field(self, value: int) -> bool:
        return value < self.p

    def render_value(self, value: int) -> str:
        return ",".join(str(c) for c in self.digits(value))


@lru_cache(maxsize=None)
def _ordered_values(p: int, m: int) -> List[int]:
    return list(range(p ** m))


@dataclass(frozen=True)
class FieldElement:
    """An element of GF(p^m) as its coordinates in the basis 1, x, ..., x^(m-1)."""
    spec: FieldSpec
    coeffs: Tuple[int, ...]

    def __post_init__(self):
        if len(self.coeffs) != self.spec.m or any(not 0 <= c < self.spec.p for c in self.coeffs):
            raise FieldError(
                f"Coefficients {self.coeffs} are not a reduced element of GF({self.spec.q})",
                kind="BadParameters",
            )

    @property
    def value(self) -> int:
        return self.spec.encode(self.coeffs)

    @property
    def is_zero(self) -> bool:
        return not any(self.coeffs)

    def token(self) -> str:
        return ",".join(str(c) for c in self.coeffs)

    def __str__(self) -> str:
        return self.token()

    def __add__(self, other: "FieldElement") -> "FieldElement":
        return fe_arith(self, other, "add")

    def __sub__(self, other: "FieldElement") -> "FieldElement":
        return fe_arith(self, other, "sub")

    def __mul__(self, other: "FieldElement") -> "FieldElement":
        return fe_arith(self, other, "mul")

    def __neg__(self) -> "FieldElement":
        return self.spec.element(self.spec.neg(self.value))

    def __truediv__(self, other: "FieldElement") -> "FieldElement":
        return self * fe_inv(other)

    def __pow__(self, exponent: int) -> "FieldElement":
        return self.spec.element(self.spec.power(self.value, exponent))


def _check_prime(p: int) -> None:
    if not isinstance(p, int) or p < 2 or not galois.is_prime(p):
        raise FieldError(f"{p} is not prime", kind="NotPrime", p=p)


def _search_irreducible(base: FieldSpec, degree: int) -> Tuple[int, ...]:
    """Monic irreducible of a degree over ``base`` with the least integer code; coefficient codes ascending."""
    q = base.q
    for code in range(q ** degree):
        lower = [(code // q ** i) % q for i in range(degree)]
        if degree > 1 and lower[0] == 0:
            continue
        coeffs = tuple(lower) + (1,)
        candidate = galois.Poly(list(reversed(coeffs)), field=base.gf)
        if candidate.is_irreducible():
            return coeffs
    raise FieldError(f"No irreducible of degree {degree} over GF({base.q})", kind="BadParameters")


@lru_cache(maxsize=None)
def _build_spec(p: int, m: int) -> FieldSpec:
    prime = FieldSpec(p, 1, (0, 1))
    if m == 1:
        return prime
    modulus = _search_irreducible(prime, m)
    logger.debug(f"Canonical modulus for GF({p}^{m}): {render_coefficients(modulus)}")
    return FieldSpec(p, m, modulus)


def field_create(p: int, m: int, config: Optional[QDKConfig] = None) -> FieldSpec:
    """
    Return the canonical FieldSpec for GF(p^m).

    Args:
        p: Characteristic (must be prime)
        m: Extension degree (>= 1)
        config: Supplies ``field_cap``

    Returns:
        The canonical, deterministic FieldSpec
    """
    config = config or default_config
    _check_prime(p)
    if not isinstance(m, int) or m < 1:
        raise FieldError(f"Extension degree must be a positive integer, got {m}", kind="BadParameters")
    if p ** m > config.field_cap:
        raise CapExceededError(f"field GF({p}^{m})", p ** m, config.field_cap)
    return _build_spec(p, m)


def parse_prime_power(q: int) -> Tuple[int, int]:
    """Split a prime power q into (p, m)."""
    if not isinstance(q, int) or q < 2 or not galois.is_prime_power(q):
        raise FieldError(f"{q} is not a prime power", kind="NotPrime", q=q)
    primes, exponents = galois.factors(q)
    return int(primes[0]), int(exponents[0])


def field_for_order(q: int, config: Optional[QDKConfig] = None) -> FieldSpec:
    """The canonical field with q elements."""
    p, m = parse_prime_power(q)
    return field_create(p, m, config)


def field_elements(spec: FieldSpec) -> List[FieldElement]:
    """Every element of the field, in canonical (integer code) order."""
    return [FieldElement(spec, spec.digits(value)) for value in spec.ordered_values()]


def parse_element(spec: FieldSpec, token: str) -> FieldElement:
    """Parse an element token ``c0,c1,...`` (a bare integer is a prime-field element)."""
    parts = [part for part in token.strip().split(",") if part != ""]
    try:
        digits = [int(part) for part in parts]
    except ValueError:
        raise FieldError(f"Bad element token {token!r}", kind="BadParameters")
    if len(digits) == 1 and spec.m > 1:
        digits = digits + [0] * (spec.m - 1)
    return FieldElement(spec, tuple(digits))


def _check_same(a: FieldElement, b: FieldElement) -> None:
    if a.spec != b.spec:
        raise FieldError(f"Elements of GF({a.spec.q}) and GF({b.spec.q}) cannot be combined",
                         kind="SpecMismatch")


def fe_arith(a: FieldElement, b: FieldElement, kind: str) -> FieldElement:
    """Exact field addition, subtraction or multiplication."""
    _check_same(a, b)
    spec = a.spec
    if kind == "add":
        return spec.element(spec.add(a.value, b.value))
    if kind == "sub":
        return spec.element(spec.sub(a.value, b.value))
    if kind == "mul":
        return spec.element(spec.mul(a.value, b.value))
    raise FieldError(f"Unknown arithmetic kind {kind!r}", kind="BadParameters")


def fe_inv(a: FieldElement) -> FieldElement:
    """Multiplicative inverse; zero raises DivisionByZero."""
    return a.spec.element(a.spec.inv(a.value))


def element_order(a: FieldElement) -> int:
    """Least e >= 1 with a^e = 1."""
    if a.is_zero:
        raise FieldError("Zero has no multiplicative order", kind="DivisionByZero")
    return int(a.spec.gf(a.value).multiplicative_order())


def primitive_element(spec: FieldSpec) -> FieldElement:
    """The generator of GF(q)* that comes first in canonical element order."""
    return spec.element(_primitive_value(spec))


@lru_cache(maxsize=None)
def _primitive_value(spec: FieldSpec) -> int:
    for value in spec.ordered_values():
        if value and element_order(spec.element(value)) == spec.q - 1:
            return value
    raise FieldError(f"GF({spec.q}) has no primitive element", kind="BadParameters")


def frobenius(a: FieldElement, base_power: int) -> FieldElement:
    """a^(p^base_power)."""
    spec = a.spec
    return spec.element(spec.power(a.value, spec.p ** (base_power % spec.m)))


def minimal_polynomial(a: FieldElement, subfield_degree: int) -> "Poly":
    """
    Minimal polynomial of ``a`` over the subfield GF(p^subfield_degree).

    The result lives over ``a.spec`` with every coefficient inside the
    subfield; it is the product of (x - c) over the Frobenius orbit of ``a``.
    """
    from .polyring import Poly

    spec = a.spec
    if subfield_degree < 1 or spec.m % subfield_degree:
        raise FieldError(f"GF({spec.p}^{subfield_degree}) is not a subfield of GF({spec.q})",
                         kind="NotASubfield")

    conjugates = [a.value]
    current = frobenius(a, subfield_degree).value
    while current != a.value:
        conjugates.append(current)
        current = spec.power(current, spec.p ** subfield_degree)
    return Poly.from_galois(spec, galois.Poly.Roots(conjugates, field=spec.gf))


def in_subfield(spec: FieldSpec, value: int, subfield_degree: int) -> bool:
    """Membership of an element code in GF(p^subfield_degree) inside ``spec``."""
    return spec.power(value, spec.p ** subfield_degree) == value


def canonical_irreducible(base: FieldSpec, degree: int) -> Tuple[int, ...]:
    """
    Least monic irreducible of ``degree`` over ``base`` (coefficient codes, ascending).

    Over a prime field this coincides with the canonical modulus.
    """
    if base.m == 1 and degree > 1:
        return _build_spec(base.p, degree).modulus
    return _search_irreducible(base, degree)


@dataclass(frozen=True)
class SubfieldEmbedding:
    """Field embedding GF(p^b) -> GF(p^(b*l)) fixed by the image of the small generator."""
    small: FieldSpec
    big: FieldSpec
    forward: Dict[int, int]
    backward: Dict[int, int]

    def lift(self, value: int) -> int:
        return self.forward[value]

    def restrict(self, value: int) -> int:
        if value not in self.backward:
            raise FieldError(f"Element {self.big.render_value(value)} of GF({self.big.q}) "
                             f"is outside GF({self.small.q})", kind="NotASubfield")
        return self.backward[value]


@lru_cache(maxsize=None)
def subfield_embedding(small: FieldSpec, big: FieldSpec) -> SubfieldEmbedding:
    """
    Embed the canonical GF(p^b) into the canonical GF(p^(b*l)).

    The small generator is sent to the root of the small modulus that comes
    first in canonical order among the q elements of the subfield.
    """
    if small.p != big.p or big.m % small.m:
        raise FieldError(f"GF({small.q}) does not embed in GF({big.q})", kind="NotASubfield")

    if small == big:
        forward = {value: value for value in range(small.q)}
        return SubfieldEmbedding(small, big, forward, dict(forward))
    if small.m == 1:
        forward = {value: value for value in range(small.p)}
        return SubfieldEmbedding(small, big, forward, dict(forward))

    generator = _primitive_value(big)
    omega = big.power(generator, (big.q - 1) // (small.q - 1))
    subfield = big.gf(sorted({0} | {big.power(omega, i) for i in range(small.q - 1)}))

    small_modulus = galois.Poly(list(reversed(small.modulus)), field=big.gf)
    roots = subfield[small_modulus(subfield) == 0]
    root = big.gf(int(roots[0]))

    forward: Dict[int, int] = {}
    for value in small.ordered_values():
        image = galois.Poly(list(reversed(small.digits(value))), field=big.gf)(root)
        forward[value] = int(image)
    backward = {image: value for value, image in forward.items()}
    return SubfieldEmbedding(small, big, forward, backward)


def render_coefficients(coeffs: Sequence[int], spec: Optional[FieldSpec] = None) -> str:
    """
    Render ascending coefficient codes as ``x^2+x+1`` (descending powers).

    Prime-field coefficients print as integers; other coefficients print as a
    parenthesised element token.
    """
    terms = []
    for power in range(len(coeffs) - 1, -1, -1):
        value = coeffs[power]
        if value == 0:
            continue
        if spec is None or spec.in_prime_field(value):
            coefficient = str(value)
        else:
            coefficient = f"({spec.render_value(value)})"
        if power == 0:
            terms.append(coefficient)
            continue
        monomial = "x" if power == 1 else f"x^{power}"
        terms.append(monomial if coefficient == "1" else f"{coefficient}{monomial}")
    return "+".join(terms) if terms else "0"


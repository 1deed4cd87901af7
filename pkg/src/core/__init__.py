# src/core/__init__.py
"""Finite fields, polynomials, Grassmannians and matrix group actions."""

from .gf import (
    FieldSpec,
    FieldElement,
    field_create,
    field_for_order,
    field_elements,
    fe_arith,
    fe_inv,
    element_order,
    primitive_element,
    minimal_polynomial,
    subfield_embedding,
)
from .polyring import (
    Poly,
    poly_arith,
    poly_gcd,
    cyclotomic_cosets,
    factor_xn_minus_1,
    stirling_first,
    falling_factorial,
    count_split_polys_formula,
    brute_count_split_polys,
)
from .grassmann import (
    Subspace,
    GrassmannianIter,
    subspace_from_generators,
    gaussian_binomial,
    enumerate_subspaces,
    intersect,
    contains,
    subspace_distance,
    subspace_sum,
)
from .groupact import (
    GroupElement,
    MatrixGroup,
    TrianglePresentation,
    group_closure,
    singer_matrix,
    sym_power_rep,
    act,
    orbit,
    invariant_subspaces,
    check_triangle_relations,
)

__all__ = [
    'FieldSpec', 'FieldElement', 'field_create', 'field_for_order', 'field_elements',
    'fe_arith', 'fe_inv', 'element_order', 'primitive_element', 'minimal_polynomial',
    'subfield_embedding',
    'Poly', 'poly_arith', 'poly_gcd', 'cyclotomic_cosets', 'factor_xn_minus_1',
    'stirling_first', 'falling_factorial', 'count_split_polys_formula', 'brute_count_split_polys',
    'Subspace', 'GrassmannianIter', 'subspace_from_generators', 'gaussian_binomial',
    'enumerate_subspaces', 'intersect', 'contains', 'subspace_distance', 'subspace_sum',
    'GroupElement', 'MatrixGroup', 'TrianglePresentation', 'group_closure', 'singer_matrix',
    'sym_power_rep', 'act', 'orbit', 'invariant_subspaces', 'check_triangle_relations',
]

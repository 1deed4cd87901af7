"""Polynomials, cyclotomic cosets, x^n - 1 and split-polynomial counts."""

import math
from fractions import Fraction

import galois
import pytest
from hypothesis import given, settings, strategies as st

from config.settings import default_config
from src.core.gf import field_for_order
from src.core.polyring import (
    Poly,
    affine_group_order,
    brute_count_split_polys,
    compose_affine,
    count_split_polys_formula,
    cyclotomic_cosets,
    factor_xn_minus_1,
    falling_factorial,
    multiplicative_order_mod,
    poly_arith,
    poly_eval,
    poly_gcd,
    poly_pow_mod,
    stirling_first,
)
from src.utils.exceptions import CapExceededError, PolynomialError


def product(polys):
    result = Poly.constant(polys[0].spec, 1)
    for f in polys:
        result = result * f
    return result


class TestArithmetic:

    def test_trailing_zeros_are_trimmed(self, gf3):
        assert Poly(gf3, (1, 2, 0, 0)).values == (1, 2)
        assert Poly(gf3, (0, 0)).is_zero
        assert Poly(gf3, ()).degree == float("-inf")

    def test_divmod(self, gf3):
        f = Poly(gf3, (2, 0, 1))  # x^2 - 1
        g = Poly(gf3, (2, 1))     # x - 1
        quotient, remainder = poly_arith(f, g, "divmod")
        assert quotient.values == (1, 1)
        assert remainder.is_zero

    def test_division_by_zero(self, gf3):
        with pytest.raises(PolynomialError) as info:
            poly_arith(Poly(gf3, (1,)), Poly(gf3, ()), "divmod")
        assert info.value.kind == "DivisionByZero"

    def test_gcd(self, gf3):
        f = Poly(gf3, (2, 0, 1))
        g = Poly(gf3, (1, 0, 0, 1))  # x^3 + 1 = (x + 1)^3
        assert poly_gcd(f, g).values == (1, 1)

    def test_gcd_of_zeros(self, gf3):
        with pytest.raises(PolynomialError) as info:
            poly_gcd(Poly(gf3, ()), Poly(gf3, ()))
        assert info.value.kind == "BothZero"

    def test_mixed_fields(self, gf2, gf3):
        with pytest.raises(PolynomialError):
            poly_arith(Poly(gf2, (1, 1)), Poly(gf3, (1, 1)), "add")

    def test_pow_mod_frobenius(self, gf2, gf8):
        modulus = Poly(gf2, gf8.modulus)
        x = Poly.monomial(gf2, 1)
        assert poly_pow_mod(x, 8, modulus).values == (0, 1)
        assert poly_pow_mod(x, 7, modulus).values == (1,)

    def test_compose_affine(self, gf3):
        square = Poly.monomial(gf3, 2)
        assert compose_affine(square, 1, 1).values == (1, 2, 1)

    def test_render_over_extension(self, gf4):
        f = Poly(gf4, (2, 1))
        assert f.render() == "x+(0,1)"

    @settings(max_examples=100, deadline=None)
    @given(st.lists(st.integers(0, 4), min_size=1, max_size=6),
           st.lists(st.integers(0, 4), min_size=1, max_size=4))
    def test_division_identity(self, a, b):
        spec = field_for_order(5)
        f, g = Poly(spec, tuple(a)), Poly(spec, tuple(b))
        if g.is_zero:
            return
        quotient, remainder = poly_arith(f, g, "divmod")
        assert quotient * g + remainder == f
        assert remainder.degree < g.degree

    @settings(max_examples=100, deadline=None)
    @given(st.lists(st.integers(0, 8), min_size=1, max_size=5),
           st.lists(st.integers(0, 8), min_size=1, max_size=5),
           st.integers(0, 8))
    def test_evaluation_is_a_ring_map(self, a, b, point):
        spec = field_for_order(9)
        f, g = Poly(spec, tuple(a)), Poly(spec, tuple(b))
        assert poly_eval(f * g, point) == spec.mul(poly_eval(f, point), poly_eval(g, point))
        assert poly_eval(f + g, point) == spec.add(poly_eval(f, point), poly_eval(g, point))

    @settings(max_examples=100, deadline=None)
    @given(st.lists(st.integers(0, 7), min_size=1, max_size=6),
           st.lists(st.integers(0, 7), min_size=1, max_size=6))
    def test_gcd_divides_both_over_gf8(self, a, b):
        spec = field_for_order(8)
        f, g = Poly(spec, tuple(a)), Poly(spec, tuple(b))
        if f.is_zero and g.is_zero:
            return
        d = poly_gcd(f, g)
        assert d.values[-1] == 1
        assert poly_arith(f, d, "divmod")[1].is_zero
        assert poly_arith(g, d, "divmod")[1].is_zero

    def test_coefficients_follow_the_element_codes(self, gf4):
        f = Poly(gf4, (3, 0, 2))
        assert f.to_galois() == galois.Poly([2, 0, 3], field=gf4.gf)
        assert Poly.from_galois(gf4, f.to_galois()) == f
        assert Poly.from_galois(gf4, galois.Poly.Zero(gf4.gf)).is_zero


class TestCyclotomicCosets:

    def test_n7_q2(self):
        assert cyclotomic_cosets(7, 2).cosets == ((0,), (1, 2, 4), (3, 5, 6))

    def test_n15_q2(self):
        cosets = cyclotomic_cosets(15, 2).cosets
        assert cosets == ((0,), (1, 2, 4, 8), (3, 6, 9, 12), (5, 10), (7, 11, 13, 14))

    @pytest.mark.parametrize("n, q", [(7, 2), (13, 3), (21, 4), (26, 5), (1, 2)])
    def test_partition(self, n, q):
        partition = cyclotomic_cosets(n, q)
        members = [j for coset in partition.cosets for j in coset]
        assert sorted(members) == list(range(n))
        for coset in partition.cosets:
            assert {(j * q) % n for j in coset} == set(coset)

    def test_not_coprime(self):
        with pytest.raises(PolynomialError) as info:
            cyclotomic_cosets(4, 2)
        assert info.value.kind == "NotCoprime"

    def test_union_of_cosets(self):
        partition = cyclotomic_cosets(7, 2)
        assert partition.is_union_of_cosets([1, 2, 4])
        assert not partition.is_union_of_cosets([1, 2])

    def test_multiplicative_order(self):
        assert multiplicative_order_mod(2, 7) == 3
        assert multiplicative_order_mod(3, 8) == 2
        assert multiplicative_order_mod(2, 1) == 1
        with pytest.raises(PolynomialError):
            multiplicative_order_mod(2, 6)


class TestFactorXnMinus1:

    def test_n7_q2(self, gf2):
        factors = factor_xn_minus_1(7, gf2)
        assert [f.render() for f in factors] == ["x+1", "x^3+x+1", "x^3+x^2+1"]

    def test_splits_over_gf5(self):
        spec = field_for_order(5)
        assert [f.render() for f in factor_xn_minus_1(4, spec)] == ["x+1", "x+2", "x+3", "x+4"]

    def test_n1(self, gf2):
        assert [f.render() for f in factor_xn_minus_1(1, gf2)] == ["x+1"]

    @pytest.mark.parametrize("n, q", [(7, 2), (15, 2), (9, 2), (8, 3), (13, 3), (5, 4), (21, 4)])
    def test_product_and_degrees(self, n, q):
        spec = field_for_order(q)
        factors = factor_xn_minus_1(n, spec)
        assert product(factors) == Poly.xn_minus_1(spec, n)
        partition = cyclotomic_cosets(n, q)
        assert sorted(f.degree for f in factors) == sorted(len(c) for c in partition.cosets)
        assert all(f.leading == 1 for f in factors)

    @pytest.mark.parametrize("q", [2, 3, 4, 5])
    def test_product_for_every_small_length(self, q):
        config = default_config.with_overrides(field_cap=4096)
        spec = field_for_order(q)
        for n in range(1, 31):
            if math.gcd(n, q) != 1:
                continue
            try:
                factors = factor_xn_minus_1(n, spec, config)
            except CapExceededError:
                assert q ** multiplicative_order_mod(q, n) > 4096
                continue
            assert product(factors) == Poly.xn_minus_1(spec, n)


class TestCountingFormulas:

    def test_falling_factorial(self):
        assert falling_factorial(5, 2) == 20
        assert falling_factorial(7, 0) == 1
        assert falling_factorial(3, 4) == 0
        with pytest.raises(PolynomialError):
            falling_factorial(3, -1)

    def test_stirling_values(self):
        assert stirling_first(4, 1) == -6
        assert stirling_first(4, 2) == 11
        assert stirling_first(4, 3) == -6
        assert stirling_first(5, 3) == 35
        assert stirling_first(6, 6) == 1
        assert stirling_first(3, 0) == 0
        assert stirling_first(0, 0) == 1

    def test_stirling_out_of_range(self):
        with pytest.raises(PolynomialError) as info:
            stirling_first(2, 3)
        assert info.value.kind == "IndexOutOfRange"

    @given(st.integers(0, 9), st.integers(0, 12))
    def test_stirling_expands_falling_factorial(self, n, q):
        assert sum(stirling_first(n, k) * q ** k for k in range(n + 1)) == falling_factorial(q, n)

    def test_formula_is_exact(self):
        assert count_split_polys_formula(2, 3) == Fraction(3, 2)
        assert count_split_polys_formula(1, 2) == Fraction(1, 1)
        assert affine_group_order(4) == 12

    def test_formula_needs_field_size(self):
        with pytest.raises(PolynomialError):
            count_split_polys_formula(2, 1)


class TestBruteCount:

    @pytest.mark.parametrize("n, q", [(1, 2), (2, 3), (3, 2), (2, 4), (3, 4), (2, 5), (4, 5), (3, 7), (2, 8), (3, 9)])
    def test_monic_count_is_binomial(self, n, q):
        assert brute_count_split_polys(n, q) == math.comb(q, n)

    @pytest.mark.parametrize("q", [2, 3, 4, 5, 7])
    def test_monic_count_for_every_degree_up_to_q(self, q):
        degrees = range(1, q + 1)
        assert [brute_count_split_polys(n, q) for n in degrees] == [math.comb(q, n) for n in degrees]

    @pytest.mark.parametrize("n, q", [(1, 3), (2, 3), (2, 5), (3, 4), (4, 4)])
    def test_affine_orbits_of_doubly_transitive_action(self, n, q):
        assert brute_count_split_polys(n, q, "affine_orbits") == 1

    def test_threads_do_not_change_counts(self, serial_config, threaded_config):
        assert (brute_count_split_polys(3, 7, config=serial_config)
                == brute_count_split_polys(3, 7, config=threaded_config))

    def test_unknown_mode(self):
        with pytest.raises(PolynomialError):
            brute_count_split_polys(2, 3, "everything")

    def test_cap(self, tiny_caps):
        with pytest.raises(CapExceededError):
            brute_count_split_polys(4, 3, config=tiny_caps)

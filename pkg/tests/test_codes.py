"""Cyclic codes, Reed-Solomon codes, arcs and the cyclic-code count."""

from fractions import Fraction

import pytest

from src.constructions.codes import (
    CodeParams,
    arc_check,
    code_to_linear,
    codewords,
    count_cyclic_codes,
    cyclic_code_from_roots,
    cyclic_code_report,
    cyclic_shift,
    is_codeword,
    linear_code,
    min_distance,
    nrc_points,
    parity_check_poly,
    rs_code,
)
from src.core.grassmann import enumerate_subspaces
from src.core.polyring import Poly, poly_arith
from src.utils.exceptions import CapExceededError, CodeError


class TestCyclicCodes:

    def test_hamming_code(self):
        code = cyclic_code_from_roots(7, 2, [1, 2, 4])
        assert code.gen_poly.render() == "x^3+x+1"
        assert code.k == 4
        params = min_distance(code_to_linear(code))
        assert (params.n, params.k, params.d, params.mds) == (7, 4, 3, False)

    def test_other_cubic(self):
        assert cyclic_code_from_roots(7, 2, [3, 5, 6]).gen_poly.render() == "x^3+x^2+1"

    def test_parity_check(self):
        code = cyclic_code_from_roots(7, 2, [1, 2, 4])
        h = parity_check_poly(code)
        assert h.render() == "x^4+x^2+x+1"
        assert code.gen_poly * h == Poly.xn_minus_1(code.spec, 7)

    def test_even_weight_code(self):
        code = cyclic_code_from_roots(7, 2, [0])
        assert code.gen_poly.render() == "x+1"
        assert min_distance(code_to_linear(code)).d == 2

    def test_empty_root_set_is_the_whole_space(self):
        code = cyclic_code_from_roots(5, 2, [])
        assert code.k == 5
        assert code.gen_poly.values == (1,)

    @pytest.mark.parametrize("n, q, J", [(7, 2, [1, 2, 4]), (8, 3, [1, 3]), (5, 4, [1, 4]), (11, 3, [1, 3, 4, 5, 9])])
    def test_closed_under_shift(self, n, q, J):
        code = code_to_linear(cyclic_code_from_roots(n, q, J))
        for word in codewords(code):
            assert is_codeword(code, cyclic_shift(word))

    def test_generator_divides(self):
        code = cyclic_code_from_roots(13, 3, [1, 3, 9])
        remainder = poly_arith(Poly.xn_minus_1(code.spec, 13), code.gen_poly, "divmod")[1]
        assert remainder.is_zero
        assert code.gen_poly.degree == 3

    def test_not_coset_closed(self):
        with pytest.raises(CodeError) as info:
            cyclic_code_from_roots(7, 2, [1])
        assert info.value.kind == "NotCosetClosed"

    def test_not_coprime(self):
        with pytest.raises(CodeError) as info:
            cyclic_code_from_roots(4, 2, [1])
        assert info.value.kind == "NotCoprime"

    def test_all_roots_leaves_nothing(self):
        with pytest.raises(CodeError) as info:
            cyclic_code_from_roots(3, 2, [0, 1, 2])
        assert info.value.kind == "BadParameters"

    def test_report(self):
        report = cyclic_code_report(cyclic_code_from_roots(7, 2, [1, 2, 4]), with_distance=True)
        assert list(report) == ["n", "k", "d", "mds", "generator_poly", "root_exponents", "parity_check_poly"]
        assert report["d"] == 3
        assert report["root_exponents"] == [1, 2, 4]


class TestLinearCodes:

    def test_singleton_violation(self):
        with pytest.raises(CodeError) as info:
            CodeParams(n=5, k=3, d=4, mds=False)
        assert info.value.kind == "SingletonViolated"

    def test_repetition_code(self, gf3):
        code = linear_code(gf3, 4, [[2, 2, 2, 2]])
        assert code.rows == ((1, 1, 1, 1),)
        params = min_distance(code)
        assert (params.d, params.mds) == (4, True)

    def test_zero_code(self, gf2):
        with pytest.raises(CodeError):
            linear_code(gf2, 3, [[0, 0, 0]])

    def test_codeword_membership(self, gf2):
        code = code_to_linear(cyclic_code_from_roots(7, 2, [1, 2, 4]))
        assert is_codeword(code, (1, 1, 0, 1, 0, 0, 0))
        assert not is_codeword(code, (1, 0, 0, 0, 0, 0, 0))
        with pytest.raises(CodeError):
            is_codeword(code, (1, 0))

    def test_threads_do_not_change_distance(self, serial_config, threaded_config):
        code = rs_code(8, 3, 9)
        assert min_distance(code, serial_config) == min_distance(code, threaded_config)

    def test_codeword_cap(self, tiny_caps):
        with pytest.raises(CapExceededError):
            min_distance(rs_code(5, 3, 6), tiny_caps)


class TestReedSolomon:

    @pytest.mark.parametrize("q, k, length", [(4, 2, 5), (5, 3, 6), (8, 3, 9), (7, 2, 8), (5, 2, 4), (9, 4, 10)])
    def test_mds(self, q, k, length):
        params = min_distance(rs_code(q, k, length))
        assert params.mds
        assert params.d == length - k + 1

    @pytest.mark.parametrize("q", [2, 3, 4, 5, 7, 8])
    def test_every_small_code_is_mds(self, q):
        for k in range(1, min(4, q + 1) + 1):
            for length in range(k, q + 2):
                params = min_distance(rs_code(q, k, length))
                assert (params.n, params.k, params.d) == (length, k, length - k + 1)

    def test_bad_parameters(self):
        with pytest.raises(CodeError):
            rs_code(4, 3, 6)
        with pytest.raises(CodeError):
            rs_code(4, 3, 2)


class TestArcs:

    def test_conic_points(self):
        tokens = [P.token() for P in nrc_points(2, 3)]
        assert tokens == ["1 0 0", "1 1 1", "1 2 1", "0 0 1"]

    @pytest.mark.parametrize("deg, q", [(2, 3), (2, 5), (2, 4), (3, 4), (3, 5)])
    def test_normal_rational_curve_is_an_arc(self, deg, q):
        points = nrc_points(deg, q)
        assert len(points) == q + 1
        assert arc_check(points, deg + 1)

    @pytest.mark.parametrize("q", [3, 4, 5, 7, 8, 9, 11])
    def test_normal_rational_curves_up_to_degree_q_minus_2(self, q):
        for deg in range(1, q - 1):
            points = nrc_points(deg, q)
            assert len(points) == q + 1
            assert arc_check(points, deg + 1)

    def test_fano_plane_is_not_an_arc(self, gf2):
        assert not arc_check(list(enumerate_subspaces(gf2, 3, 1)), 3)
        assert arc_check(list(enumerate_subspaces(gf2, 3, 1)), 2)

    def test_arc_validation(self, gf2):
        lines = list(enumerate_subspaces(gf2, 3, 2))
        with pytest.raises(CodeError):
            arc_check(lines, 2)
        with pytest.raises(CodeError):
            arc_check(nrc_points(2, 3), 4)

    def test_empty_point_set(self):
        assert arc_check([], 3)


class TestCountCyclic:

    @pytest.mark.parametrize("n, cosets", [(1, 1), (3, 2), (7, 3), (15, 5)])
    def test_oracle_over_gf2(self, n, cosets):
        counts = count_cyclic_codes(n, 2)
        assert counts.num_cosets == cosets
        assert counts.oracle == 2 ** cosets

    def test_gf3(self):
        counts = count_cyclic_codes(8, 3)
        assert counts.num_cosets == 5
        assert counts.oracle == 32

    def test_formula_values(self):
        counts = count_cyclic_codes(3, 2)
        assert counts.formula_values == (Fraction(1, 2), Fraction(1), Fraction(1), Fraction(0))

    def test_not_coprime(self):
        with pytest.raises(CodeError):
            count_cyclic_codes(6, 3)

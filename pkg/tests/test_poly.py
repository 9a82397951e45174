from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from qpacking import (
    AlphaFormCoeffs,
    NonConstantStepDifference,
    NonIntegralCoefficient,
    QuadPoly,
    UnimodularMap,
    alpha_form_d,
    format_factored,
    format_poly,
    make_sector,
    packing_polynomial,
    parse_poly,
    skew_map,
    step_difference,
    to_alpha_form,
    transformed_polynomial,
)

from helpers import coprime_sectors, product_poly
from test_geometry import unimodular_maps

EX1 = QuadPoly(2, -2, Fraction(1, 2), 0, Fraction(1, 2), 0)
CANTOR_F = product_poly(Fraction(1, 2), (1, 0), (1, 1), 1, 0, 0)
CANTOR_G = product_poly(Fraction(1, 2), (1, 0), (1, 1), 0, 1, 0)

rationals = st.fractions(min_value=-8, max_value=8, max_denominator=6)
quad_polys = st.builds(QuadPoly, *([rationals] * 6))


class TestEvaluate:
    def test_apex(self):
        assert EX1.evaluate((0, 0)) == 0

    def test_interior(self):
        assert EX1.evaluate((1, 1)) == 1
        assert EX1.evaluate((3, 4)) == 4

    def test_rational_point(self):
        assert EX1.evaluate((Fraction(1, 2), 1)) == Fraction(1, 2) - 1 + Fraction(1, 2) + Fraction(1, 2)


class TestAlphaForm:
    def test_cantor(self):
        assert to_alpha_form(CANTOR_F) == AlphaFormCoeffs(1, 1, 1, 2, 1, 0)

    def test_zero(self):
        assert to_alpha_form(QuadPoly(0, 0, 0, 0, 0, 0)) == AlphaFormCoeffs(0, 0, 0, 0, 0, 0)

    def test_non_integral(self):
        with pytest.raises(NonIntegralCoefficient) as err:
            to_alpha_form(QuadPoly(Fraction(1, 3), 0, 0, 0, 0, 0))
        assert err.value.monomial == "x^2"
        assert err.value.value == Fraction(2, 3)

    @given(*(st.integers(-60, 60) for _ in range(6)))
    def test_roundtrip(self, a, b, c, d, e, f):
        coeffs = AlphaFormCoeffs(a, b, c, d, e, f)
        assert to_alpha_form(coeffs.to_poly()) == coeffs


class TestConjugate:
    def test_skew_kills_mixed_terms(self):
        q = EX1.conjugate(skew_map(make_sector(4, 3)))
        assert q.c_xy == 0 and q.c_yy == 0

    @given(quad_polys)
    def test_identity(self, p):
        assert p.conjugate(UnimodularMap.identity()) == p

    @given(quad_polys, unimodular_maps)
    def test_roundtrip(self, p, m):
        assert p.conjugate(m).conjugate(m.inverse()) == p

    @given(quad_polys, unimodular_maps, unimodular_maps)
    def test_respects_composition(self, p, m1, m2):
        assert p.conjugate(m1 @ m2) == p.conjugate(m2).conjugate(m1)

    @given(quad_polys, unimodular_maps, st.integers(-6, 6), st.integers(-6, 6))
    def test_defining_property(self, p, m, x, y):
        q = p.conjugate(m)
        assert q.evaluate(m.apply((x, y))) == p.evaluate((x, y))


class TestStepDifference:
    def test_sector_4_3(self):
        assert step_difference(EX1, make_sector(4, 3)) == 1

    def test_cantor_signs(self):
        quadrant = make_sector(1, 0)
        assert step_difference(CANTOR_F, quadrant) == -1
        assert step_difference(CANTOR_G, quadrant) == 1

    @pytest.mark.parametrize("n", [1, 2, 3, 7])
    def test_integral_ascending(self, n):
        f_n = product_poly(Fraction(n, 2), (0, 0), (0, -1), 1, 1, 0)
        assert step_difference(f_n, make_sector(n, 1)) == 1

    def test_non_constant(self):
        with pytest.raises(NonConstantStepDifference):
            step_difference(QuadPoly(1, 0, 0, 0, 0, 0), make_sector(4, 3))


class TestPackingPolynomial:
    def test_sector_4_3(self):
        assert packing_polynomial(make_sector(4, 3), 1) == EX1

    def test_recovers_cantor(self):
        assert packing_polynomial(make_sector(1, 0), -1) == CANTOR_F
        assert packing_polynomial(make_sector(1, 0), 1) == CANTOR_G

    def test_12_7_with_constant(self):
        expected = product_poly(6, (Fraction(-1, 2), 0), (Fraction(-1, 2), Fraction(-3, 2)), 1, 1, 2)
        assert packing_polynomial(make_sector(12, 7), 3) == expected

    def test_rejects_bad_k(self):
        with pytest.raises(ValueError):
            packing_polynomial(make_sector(4, 3), 0)
        with pytest.raises(ValueError):
            packing_polynomial(make_sector(4, 3), 5)


class TestTransformedPolynomial:
    def test_matches_conjugation(self):
        s = make_sector(4, 3)
        assert transformed_polynomial(s, 1, 0) == packing_polynomial(s, 1).conjugate(skew_map(s))

    @pytest.mark.parametrize("n", [1, 2, 5, 8])
    def test_integral_sector(self, n):
        expected = product_poly(Fraction(n, 2), (0, 0), (0, -1), 1, 1, 0)
        assert transformed_polynomial(make_sector(n, 1), 1, 0) == expected

    def test_12_7_y_coefficient(self):
        assert transformed_polynomial(make_sector(12, 7), 3, 2).c_y == Fraction(3, 2)

    def test_rejects_non_divisible(self):
        with pytest.raises(ValueError):
            transformed_polynomial(make_sector(3, 2), 1, 0)

    def test_conjugation_identity_all_small_sectors(self):
        for s in coprime_sectors(30, 30):
            if (s.m - 1) ** 2 % s.n != 0:
                continue
            m = skew_map(s)
            for k in (1, -1, 2, -2, 3, -3):
                conjugated = packing_polynomial(s, k).conjugate(m)
                assert conjugated == transformed_polynomial(s, k, abs(k) - 1)


class TestForcedLinearCoefficient:
    def test_examples(self):
        assert alpha_form_d(make_sector(4, 3), 1) == 2
        assert alpha_form_d(make_sector(5, 1), 1) == 1
        assert alpha_form_d(make_sector(12, 7), 3) == -2

    def test_matches_alpha_form(self):
        for s in coprime_sectors(12, 12):
            if (s.m - 1) ** 2 % s.n != 0:
                continue
            for k in (1, -1, 3, -3):
                alpha = to_alpha_form(packing_polynomial(s, k))
                assert alpha_form_d(s, k) == alpha.D


class TestRendering:
    def test_format(self):
        assert format_poly(EX1) == "2*x^2 - 2*x*y + 1/2*y^2 + 1/2*y"
        assert format_poly(QuadPoly(0, 0, 0, 0, 0, 0)) == "0"
        assert format_poly(QuadPoly(-1, 0, 0, 1, 0, -2)) == "-x^2 + x - 2"

    def test_factored(self):
        assert format_factored(make_sector(12, 7), 3) == "6*(x - 1/2*y)*(x - 1/2*y - 3/2) + x + y + 2"
        assert format_factored(make_sector(1, 0), -1) == "1/2*(x + y)*(x + y + 1) + x"
        assert format_factored(make_sector(4, 1), 2) == "2*x*(x - 2) + x + 2*y + 1"

    def test_parse_examples(self):
        assert parse_poly("2*x^2 - 2*x*y + 1/2*y^2 + 1/2*y") == EX1
        assert parse_poly("0") == QuadPoly(0, 0, 0, 0, 0, 0)
        assert parse_poly("-x^2 + x - 2") == QuadPoly(-1, 0, 0, 1, 0, -2)

    def test_parse_rejects(self):
        with pytest.raises(ValueError):
            parse_poly("2*z^2")
        with pytest.raises(ValueError):
            parse_poly("x + x")
        with pytest.raises(ValueError):
            parse_poly("")

    @given(quad_polys)
    def test_roundtrip(self, p):
        assert parse_poly(format_poly(p)) == p

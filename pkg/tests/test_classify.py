from fractions import Fraction

import pytest

from qpacking import (
    admissible_ks,
    canonical_sector,
    classify,
    constant_term,
    flip_map,
    flipped_sector,
    forced_quadratic_coeffs,
    make_sector,
    no_qpp_reason,
    sector_arithmetic,
    shear_map,
    skew_map,
    step_difference,
    to_alpha_form,
    transformed_polynomial,
)

from helpers import all_classified, coprime_sectors, product_poly


class TestSectorArithmetic:
    def test_12_7(self):
        ar = sector_arithmetic(make_sector(12, 7))
        assert (ar.l, ar.n_over_l, ar.l2_over_n, ar.divides_n_l2) == (6, 2, 3, True)

    def test_8_5(self):
        ar = sector_arithmetic(make_sector(8, 5))
        assert (ar.l, ar.n_over_l, ar.l2_over_n, ar.divides_n_l2) == (4, 2, 2, True)

    def test_3_2(self):
        ar = sector_arithmetic(make_sector(3, 2))
        assert ar.l == 1
        assert not ar.divides_n_l2

    def test_quadrant(self):
        ar = sector_arithmetic(make_sector(1, 0))
        assert (ar.l, ar.n_over_l, ar.l2_over_n, ar.divides_n_l2) == (1, 1, 1, True)


class TestForcedQuadraticCoeffs:
    def test_4_3(self):
        assert forced_quadratic_coeffs(make_sector(4, 3)) == (4, -2, 1)

    def test_inadmissible(self):
        assert forced_quadratic_coeffs(make_sector(3, 2)) is None

    def test_quadrant(self):
        assert forced_quadratic_coeffs(make_sector(1, 0)) == (1, 1, 1)


class TestAdmissibleKs:
    def test_12_7(self):
        assert admissible_ks(make_sector(12, 7)) == {1, -1, 3, -3}

    def test_4_1(self):
        assert admissible_ks(make_sector(4, 1)) == {1, -1, 2, -2}

    def test_8_5(self):
        assert admissible_ks(make_sector(8, 5)) == {1, -1}

    def test_3_2_empty(self):
        assert admissible_ks(make_sector(3, 2)) == set()

    def test_sign_matched_congruence(self):
        # n/l >= 3 separates the signs: 9/4 admits only the ascending k = 1,
        # its descending partner living on the flipped sector 9/7
        assert admissible_ks(make_sector(9, 4)) == {1}
        assert admissible_ks(make_sector(9, 7)) == {-1}
        assert admissible_ks(make_sector(16, 5)) == {1}

    def test_mixed_magnitudes(self):
        # l^2/n = 4 with n/l = 3 pairs k = 1 with k = -2
        assert admissible_ks(make_sector(36, 13)) == {1, -2}


class TestClassify:
    def test_4_3(self):
        entries = classify(make_sector(4, 3))
        assert [e.k for e in entries] == [1, -1]
        assert entries[0].poly.coefficients() == (2, -2, Fraction(1, 2), 0, Fraction(1, 2), 0)

    def test_12_7_exact(self):
        entries = classify(make_sector(12, 7))
        half = Fraction(1, 2)
        expected = {
            1: product_poly(6, (-half, 0), (-half, -half), 1, 0, 0),
            -1: product_poly(6, (-half, 0), (-half, half), 1, -1, 0),
            3: product_poly(6, (-half, 0), (-half, Fraction(-3, 2)), 1, 1, 2),
            -3: product_poly(6, (-half, 0), (-half, Fraction(3, 2)), 1, -2, 2),
        }
        assert {e.k: e.poly for e in entries} == expected

    def test_cantor_pair(self):
        entries = classify(make_sector(1, 0))
        cantor_f = product_poly(Fraction(1, 2), (1, 0), (1, 1), 1, 0, 0)
        cantor_g = product_poly(Fraction(1, 2), (1, 0), (1, 1), 0, 1, 0)
        assert {e.k: e.poly for e in entries} == {-1: cantor_f, 1: cantor_g}

    def test_3_2_empty(self):
        assert classify(make_sector(3, 2)) == []

    def test_9_4_single(self):
        entries = classify(make_sector(9, 4))
        assert len(entries) == 1 and entries[0].k == 1

    def test_counts(self):
        for s in coprime_sectors(16, 16):
            assert len(classify(s)) in (0, 1, 2, 4)

    def test_step_difference_consistency(self):
        for e in all_classified(10, 10):
            assert step_difference(e.poly, e.sector) == e.k

    def test_alpha_slope_relation(self):
        for e in all_classified(10, 10):
            a = e.alpha_form
            assert a.A > 0 and a.B * a.B == a.A * a.C
            if a.B == 1:
                assert e.sector.m == 0
            else:
                assert Fraction(a.A, 1 - a.B) == e.sector.slope()

    def test_no_qpp_reason(self):
        assert no_qpp_reason(make_sector(3, 2)) == "3 does not divide (2-1)^2 = 1"
        assert no_qpp_reason(make_sector(4, 3)) is None
        assert no_qpp_reason(make_sector(25, 11)) is not None


class TestConstantTerm:
    def test_12_7_k3(self):
        assert constant_term(make_sector(12, 7), 3) == 2

    def test_k1_always_zero(self):
        for s in coprime_sectors(8, 8):
            if 1 in admissible_ks(s):
                assert constant_term(s, 1) == 0

    def test_4_1_k2(self):
        assert constant_term(make_sector(4, 1), 2) == 1

    def test_non_integral_signals(self):
        with pytest.raises(ValueError):
            constant_term(make_sector(8, 5), 2)  # l^2/n = 2 makes 2*1*3/12 non-integral

    def test_equals_abs_k_minus_one(self):
        for e in all_classified(12, 12):
            assert e.constant_F == abs(e.k) - 1
            assert constant_term(e.sector, e.k) == abs(e.k) - 1


class TestCanonicalSector:
    def test_examples(self):
        assert canonical_sector(make_sector(3, 4)) == make_sector(3, 1)
        assert canonical_sector(make_sector(12, 19)) == make_sector(12, 7)
        assert canonical_sector(make_sector(4, 1)) == make_sector(4, 1)
        assert canonical_sector(make_sector(1, 5)) == make_sector(1, 0)

    def test_shear_equivalence_of_classification(self):
        for s in coprime_sectors(20, 20):
            canon = canonical_sector(s)
            entries = classify(s)
            canon_entries = classify(canon)
            assert [e.k for e in entries] == [e.k for e in canon_entries]
            t = -(s.m // s.n)
            shear = shear_map(t)
            for mine, theirs in zip(entries, canon_entries):
                assert mine.poly.conjugate(shear) == theirs.poly


class TestFlipSymmetry:
    def test_flipped_sector(self):
        assert flipped_sector(make_sector(9, 4)) == make_sector(9, 7)
        assert flipped_sector(make_sector(9, 7)) == make_sector(9, 4)
        assert flipped_sector(make_sector(5, 1)) == make_sector(5, 1)
        assert flipped_sector(make_sector(1, 0)) == make_sector(1, 1)

    def test_flip_conjugation_swaps_sign(self):
        # skewing then flipping the k-polynomial gives the (-k)-polynomial of
        # the flipped sector, in its own skewed coordinates
        for s in coprime_sectors(12, 12):
            for e in classify(s):
                flipped = flipped_sector(s)
                hat = e.poly.conjugate(skew_map(s))
                check = hat.conjugate(flip_map(s.n))
                assert check == transformed_polynomial(s, -e.k, abs(e.k) - 1)
                partner_ks = [q.k for q in classify(flipped)]
                assert -e.k in partner_ks
                partner = next(q for q in classify(flipped) if q.k == -e.k)
                assert partner.poly.conjugate(skew_map(flipped)) == check

    def test_alpha_e_outliers(self):
        # these classified polynomials have alpha E outside [-15, 15]
        by_k = {e.k: e for e in classify(make_sector(1, 8))}
        assert to_alpha_form(by_k[1].poly).E == 22
        by_k = {e.k: e for e in classify(make_sector(1, 7))}
        assert to_alpha_form(by_k[1].poly).E == 16
        by_k = {e.k: e for e in classify(make_sector(3, 7))}
        assert to_alpha_form(by_k[3].poly).E == 16
        # and the widest alpha D at small scale
        by_k = {e.k: e for e in classify(make_sector(12, 7))}
        assert to_alpha_form(by_k[-3].poly).D == 16

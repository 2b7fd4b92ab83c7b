"""Quadratic form and class number tests."""

from fractions import Fraction

import pytest

from threesq import counts, qforms
from threesq.counts import Triple
from threesq.qforms import QuadForm


class TestEnumeration:
    def test_minus_44(self):
        assert [f.tuple() for f in qforms.enumerate_reduced(-44)] == [
            (1, 0, 11), (2, 2, 6), (3, -2, 4), (3, 2, 4),
        ]

    def test_minus_3_and_minus_4(self):
        assert [f.tuple() for f in qforms.enumerate_reduced(-3)] == [(1, 1, 1)]
        assert [f.tuple() for f in qforms.enumerate_reduced(-4)] == [(1, 0, 1)]

    @pytest.mark.parametrize("bad", [-5, -6, 0, 3, -1, -2])
    def test_rejects_non_discriminants(self, bad):
        with pytest.raises(ValueError, match="not a discriminant"):
            qforms.enumerate_reduced(bad)

    def test_every_enumerated_form_is_reduced(self):
        for n in range(1, 80):
            D = -4 * n
            for f in qforms.enumerate_reduced(D):
                assert f.is_reduced
                assert f.discriminant == D

    def test_boundary_sign_rule(self):
        # (3,-3,c) and (a,-b,a) are not reduced; positive twins are
        assert not QuadForm(3, -3, 5).is_reduced
        assert QuadForm(3, 3, 5).is_reduced
        assert not QuadForm(2, -1, 2).is_reduced
        assert QuadForm(2, 1, 2).is_reduced


class TestClassNumbers:
    @pytest.mark.parametrize(
        "D,h", [(-3, 1), (-4, 1), (-20, 2), (-44, 3), (-11, 1), (-8, 1), (-23, 3)]
    )
    def test_h_values(self, D, h):
        assert qforms.class_number_h(D) == h

    def test_omega(self):
        assert qforms.omega(-3) == 6
        assert qforms.omega(-4) == 4
        assert qforms.omega(-44) == 2

    @pytest.mark.parametrize(
        "N,value",
        [
            (3, Fraction(1, 3)),
            (4, Fraction(1, 2)),
            (12, Fraction(4, 3)),
            (44, Fraction(4)),
            (0, Fraction(-1, 12)),
            (1, Fraction(0)),
            (2, Fraction(0)),
        ],
    )
    def test_hurwitz_direct(self, N, value):
        assert qforms.hurwitz_direct(N) == value

    def test_hurwitz_divisor_sum_examples(self):
        assert qforms.hurwitz_divisor_sum(12) == Fraction(4, 3)
        assert qforms.hurwitz_divisor_sum(44) == Fraction(4)
        assert qforms.hurwitz_divisor_sum(3) == Fraction(1, 3)
        assert qforms.hurwitz_divisor_sum(5) == Fraction(0)

    def test_two_routes_agree_to_600(self):
        for N in range(3, 601):
            if N % 4 in (0, 3):
                assert qforms.hurwitz_direct(N) == qforms.hurwitz_divisor_sum(N), N

    def test_fundamental_H_equals_h_except_3_4(self):
        for N in range(5, 400):
            if qforms.is_fundamental(-N):
                assert qforms.hurwitz_direct(N) == qforms.class_number_h(-N), N


class TestKroneckerSymbol:
    def test_at_two(self):
        assert qforms.kronecker_symbol(-3, 2) == -1  # -3 = 5 mod 8
        assert qforms.kronecker_symbol(7, 2) == 1
        assert qforms.kronecker_symbol(4, 2) == 0
        assert qforms.kronecker_symbol(17, 2) == 1

    def test_euler_criterion_on_odd_primes(self):
        for p in (3, 5, 7, 11, 13, 17, 19, 23, 29):
            for a in range(-20, 21):
                euler = pow(a % p, (p - 1) // 2, p)
                expected = {0: 0, 1: 1, p - 1: -1}[euler]
                assert qforms.kronecker_symbol(a, p) == expected, (a, p)

    def test_bottom_multiplicativity(self):
        for a in range(-15, 16):
            for m in (3, 5, 7, 9, 15):
                for n in (3, 5, 7, 9):
                    assert qforms.kronecker_symbol(a, m * n) == qforms.kronecker_symbol(
                        a, m
                    ) * qforms.kronecker_symbol(a, n)

    def test_at_zero_and_negative(self):
        assert qforms.kronecker_symbol(1, 0) == 1
        assert qforms.kronecker_symbol(-1, 0) == 1
        assert qforms.kronecker_symbol(5, 0) == 0
        assert qforms.kronecker_symbol(-1, -1) == -1
        assert qforms.kronecker_symbol(1, -1) == 1


class TestDirichletRatio:
    def test_spec_examples(self):
        assert qforms.dirichlet_ratio_check(-3, 2)
        assert qforms.dirichlet_ratio_check(-4, 1)
        assert qforms.dirichlet_ratio_check(-3, 3)

    def test_rejects_non_fundamental(self):
        with pytest.raises(ValueError, match="fundamental"):
            qforms.dirichlet_ratio_check(-12, 2)

    def test_fundamentality(self):
        fundamental = [-3, -4, -7, -8, -11, -15, -19, -20, -23, -24]
        for D in fundamental:
            assert qforms.is_fundamental(D), D
        for D in (-9, -12, -16, -27, -28, -44, -45):
            assert not qforms.is_fundamental(D), D

    def test_sweep_to_100(self):
        for m in range(3, 101):
            if qforms.is_fundamental(-m):
                for f in range(1, 7):
                    assert qforms.dirichlet_ratio_check(-m, f), (-m, f)


class TestHurwitz4n:
    @pytest.mark.parametrize("n", [3, 7, 11, 15, 19, 23, 27, 31])
    def test_lemma(self, n):
        assert qforms.hurwitz_4n_lemma_check(n)

    def test_explicit_values(self):
        assert qforms.hurwitz_direct(44) == 4 * qforms.hurwitz_direct(11)
        assert qforms.hurwitz_direct(12) == 4 * qforms.hurwitz_direct(3)
        assert qforms.hurwitz_direct(28) == 2 * qforms.hurwitz_direct(7)

    def test_rejects_wrong_residue(self):
        with pytest.raises(ValueError):
            qforms.hurwitz_4n_lemma_check(5)


class TestBijection:
    def test_spec_images(self):
        assert qforms.triple_to_form(Triple(3, 2, 1)).tuple() == (3, 2, 4)
        assert qforms.triple_to_form(Triple(1, 1, 1)).tuple() == (2, 2, 2)
        assert qforms.triple_to_form(Triple(5, 1, 1)).tuple() == (2, 2, 6)

    def test_types_by_equality_pattern(self):
        assert qforms.triple_to_form(Triple(3, 2, 1)).form_type == "II"
        assert qforms.triple_to_form(Triple(5, 1, 1)).form_type == "III"
        assert qforms.triple_to_form(Triple(5, 5, 1)).form_type == "III"
        assert qforms.triple_to_form(Triple(2, 2, 2)).form_type == "IV"

    def test_census_match_to_300(self):
        for n in range(1, 301):
            trs = counts.triples(n)
            images = [qforms.triple_to_form(t) for t in trs]
            assert len(set(images)) == len(images), n  # injective
            census = qforms.classify_forms(-4 * n)
            expected = {f for f in census.forms if f.form_type != "I" and f.b > 0}
            assert set(images) == expected, n
            dec = counts.decompose_solutions(n)
            assert census.type_counts["II"] == 2 * dec.strict, n
            assert census.type_counts["III"] == dec.two_equal, n
            assert census.type_counts["IV"] == dec.all_equal, n
            assert census.type_counts["I"] == (counts.divisor_count(n) + 1) // 2, n


class TestCensus:
    def test_minus_44(self):
        census = qforms.classify_forms(-44)
        assert census.type_counts == {"I": 1, "II": 2, "III": 1, "IV": 0}
        assert census.A == 0
        assert census.imprimitive_even == 1

    def test_minus_4(self):
        census = qforms.classify_forms(-4)
        assert census.type_counts == {"I": 1, "II": 0, "III": 0, "IV": 0}

    def test_minus_36_has_odd_imprimitive(self):
        census = qforms.classify_forms(-36)
        assert census.A >= 1
        assert QuadForm(3, 0, 3) in census.forms


class TestGaussTheorems:
    @pytest.mark.parametrize("n,expected", [(1, 6), (11, 24), (5, 24)])
    def test_r3_values(self, n, expected):
        assert counts.r_squares(3, n) == expected
        assert qforms.gauss_r3_check(n)

    def test_r3_sweep_to_300(self):
        r3 = counts.r3_table(300)
        for n in range(1, 301):
            assert qforms.gauss_r3_check(n, lambda m: int(r3[m])), n

    def test_N3_spec_values(self):
        assert qforms.gauss_N3_check(1)
        assert qforms.gauss_N3_check(3)
        assert qforms.gauss_N3_check(5)

    def test_N3_sweep_to_200(self):
        n3 = counts.n3_table(200)
        for n in range(1, 201):
            if n % 8 in (1, 2, 3, 5, 6):
                assert qforms.gauss_N3_check(n, lambda m: int(n3[m])), n

    def test_N3_rejects_uncovered_class(self):
        for n in (4, 7, 8, 15):
            with pytest.raises(ValueError, match="does not apply"):
                qforms.gauss_N3_check(n)


class TestCache:
    def test_snapshot_restore_roundtrip(self):
        qforms.hurwitz_direct(44)
        qforms.class_number_h(-44)
        rows = qforms.cache_snapshot()
        assert (-44, 3, 1) in rows and (44, 4, 1) in rows
        qforms.cache_clear()
        qforms.cache_restore(rows)
        assert qforms.cache_snapshot() == sorted(rows)

    def test_recompute_for_key(self):
        assert qforms.recompute_for_key(-44) == 3
        assert qforms.recompute_for_key(12) == Fraction(4, 3)

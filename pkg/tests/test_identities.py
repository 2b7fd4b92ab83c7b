"""Exact identity checks: frozen leading coefficients and full
coefficient agreement at moderate orders (acceptance pushes to 500)."""

import pytest

from threesq import counts, identities
from threesq.identities import IdentityCheckResult
from threesq.series import IntSeries, equal_to_order


class TestSeriesR:
    def test_r3_leading_coeffs(self):
        # r_3(0..3) = 1, 6, 12, 8 with alternating sign
        assert identities.series_R(3, 3).coeffs == (1, -6, 12, -8)

    def test_r2_first_coeff(self):
        assert identities.series_R(2, 1)[1] == -4

    def test_r4_constant(self):
        assert identities.series_R(4, 0)[0] == 1

    def test_rejects_bad_power(self):
        with pytest.raises(ValueError):
            identities.series_R(5, 10)

    def test_matches_brute_force(self):
        r3 = counts.r3_table(150)
        series = identities.series_R(3, 150)
        for n in range(151):
            assert series[n] == (-1 if n % 2 else 1) * int(r3[n])


class TestTriangular3:
    def test_leading_coeffs(self):
        assert identities.series_triangular3(3).coeffs == (1, 3, 3, 4)

    def test_constant_term(self):
        assert identities.series_triangular3(0)[0] == 1

    def test_positivity_to_1000(self):
        s = identities.series_triangular3(1000)
        assert all(c >= 1 for c in s.coeffs)


class TestAndrewsIdentity:
    def test_rhs_leading_coeffs(self):
        s = identities.series_andrews_rhs(2)
        assert s[0] == 1 and s[1] == -6 and s[2] == 12

    def test_identity_order_300(self):
        res = identities.check_andrews516(300)
        assert res.passed, res.first_mismatch


class TestGaussGen:
    def test_leading_coeffs(self):
        s = identities.series_gauss_gen_rhs(1)
        assert s.coeffs == (1, -6)

    def test_identity_order_300(self):
        res = identities.check_gauss_gen(300)
        assert res.passed, res.first_mismatch


class TestEyphka:
    def test_leading_coeffs(self):
        assert identities.series_eyphka_rhs(2).coeffs == (1, 3, 3)

    def test_negative_branch_first_exponent(self):
        # below q^3 the bilateral triple sum contributes nothing: the
        # coefficients of q^0..q^2 come from 1 + 3*sum q^r alone, and at
        # q^3 the (r,s,t)=(1,1,1) re-indexed term joins the 3 from sum q^r
        s = identities.series_eyphka_rhs(3)
        assert s.coeffs == (1, 3, 3, 4)

    def test_identity_order_300(self):
        res = identities.check_eyphka(300)
        assert res.passed, res.first_mismatch


class TestEtaLimits:
    def test_all_pass_order_200(self):
        results = identities.series_eta_limit_checks(200)
        assert len(results) == 3
        assert all(r.passed for r in results), results

    def test_constant_terms(self):
        for r in identities.series_eta_limit_checks(0):
            assert r.passed

    def test_mismatch_injection_reports_exponent_zero(self):
        lhs = IntSeries([2])
        rhs = IntSeries([1])
        ok, mm = equal_to_order(lhs, rhs, 0)
        assert not ok and mm.exponent == 0
        res = IdentityCheckResult("eta-limits/theta-cube", 0, False, mm)
        assert not res.passed

    def test_result_consistency_enforced(self):
        with pytest.raises(ValueError):
            IdentityCheckResult("x", 1, True, (0, 1, 2))


class TestClassicalFormulas:
    def test_jacobi4_order_500(self):
        assert identities.check_jacobi4(500).passed

    def test_two_square_order_500(self):
        assert identities.check_two_square(500).passed

    def test_triple_product_order_500(self):
        assert identities.check_triple_product(500).passed

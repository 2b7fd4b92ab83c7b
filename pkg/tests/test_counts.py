"""Counting-oracle tests: frozen spec values, scalar/table agreement,
and the parity/decomposition lemmas on moderate ranges."""

import numpy as np
import pytest

from threesq import counts
from threesq.counts import DecompositionCounts, Triple


class TestRSquares:
    @pytest.mark.parametrize(
        "s,n,expected",
        [
            (3, 1, 6),
            (3, 7, 0),
            (3, 11, 24),
            (3, 0, 1),
            (2, 5, 8),
            (4, 1, 8),
            (1, 9, 2),
            (1, 0, 1),
            (1, 3, 0),
        ],
    )
    def test_values(self, s, n, expected):
        assert counts.r_squares(s, n) == expected

    def test_rejects_bad_s(self):
        with pytest.raises(ValueError):
            counts.r_squares(5, 1)

    def test_r3_vanishing_mod8(self):
        for n in range(7, 400, 8):
            assert counts.r_squares(3, n) == 0

    def test_r3_quarter_recursion(self):
        r3 = counts.r3_table(4000)
        for n in range(1, 1001):
            assert r3[4 * n] == r3[n]

    @pytest.mark.parametrize("s", [2, 3, 4])
    def test_scalar_matches_table(self, s):
        table = {2: counts.r2_table, 3: counts.r3_table, 4: counts.r4_table}[s](60)
        for n in range(61):
            assert counts.r_squares(s, n) == int(table[n])


class TestPrimitive:
    @pytest.mark.parametrize("n,expected", [(1, 6), (4, 0), (3, 8), (2, 12), (5, 24)])
    def test_values(self, n, expected):
        assert counts.n3_primitive(n) == expected

    def test_scalar_matches_table(self):
        table = counts.n3_table(80)
        for n in range(1, 81):
            assert counts.n3_primitive(n) == int(table[n])

    def test_primitive_bounded_by_total(self):
        r3 = counts.r3_table(200)
        n3 = counts.n3_table(200)
        assert (n3[1:] <= r3[1:]).all()


class TestTriangular:
    @pytest.mark.parametrize("n,expected", [(0, 1), (3, 4), (1, 3), (2, 3)])
    def test_values(self, n, expected):
        assert counts.r_triangular3(n) == expected

    def test_scalar_matches_table(self):
        table = counts.tri3_table(120)
        for n in range(121):
            assert counts.r_triangular3(n) == int(table[n])

    def test_every_n_represented_to_2000(self):
        assert (counts.tri3_table(2000) >= 1).all()


class TestDivisors:
    def test_mod4_counts(self):
        assert counts.divisor_count_mod4(5, 1) == 2
        assert counts.divisor_count_mod4(3, 3) == 1
        assert counts.r_squares(2, 5) == 4 * (2 - 0)

    def test_sigma_no4(self):
        assert counts.sigma_no4(1) == 1
        assert 8 * counts.sigma_no4(1) == counts.r_squares(4, 1)
        assert counts.sigma_no4(4) == 3
        assert counts.sigma_no4(2) == 3

    def test_tables_match_scalars(self):
        d, d1, d3, s4 = counts.divisor_tables(150)
        for n in range(1, 151):
            assert int(d[n]) == counts.divisor_count(n)
            assert int(d1[n]) == counts.divisor_count_mod4(n, 1)
            assert int(d3[n]) == counts.divisor_count_mod4(n, 3)
            assert int(s4[n]) == counts.sigma_no4(n)


class TestSignedSums:
    @pytest.mark.parametrize("n,expected", [(1, 1), (3, 2), (2, -2)])
    def test_pair_values(self, n, expected):
        assert counts.signed_pair_sum(n) == expected

    @pytest.mark.parametrize("n,expected", [(3, -1), (1, 0), (2, 0)])
    def test_triple_values(self, n, expected):
        assert counts.signed_triple_sum(n) == expected

    def test_composite_check_at_11(self):
        total = 6 * counts.signed_pair_sum(11) + 4 * counts.signed_triple_sum(11)
        assert total == 24 == counts.r_squares(3, 11)

    def test_scalars_match_tables(self):
        sp = counts.signed_pair_table(200)
        st = counts.signed_triple_table(200)
        for n in range(1, 201):
            assert counts.signed_pair_sum(n) == int(sp[n])
            assert counts.signed_triple_sum(n) == int(st[n])


class TestAndrewsCrandall:
    @pytest.mark.parametrize("n,expected", [(1, 6), (3, 8), (2, 12)])
    def test_values(self, n, expected):
        assert counts.andrews_crandall_r3(n) == expected

    def test_matches_brute_force_to_400(self):
        r3 = counts.r3_table(400)
        for n in range(1, 401):
            assert counts.andrews_crandall_r3(n) == int(r3[n]), n


class TestDecomposition:
    def test_triple_type_validation(self):
        with pytest.raises(ValueError):
            Triple(1, 2, 3)
        assert Triple(3, 2, 1).n == 11
        assert Triple(3, 2, 1).multiplicity() == 6
        assert Triple(5, 1, 1).multiplicity() == 3
        assert Triple(2, 2, 2).multiplicity() == 1

    def test_census_values(self):
        assert counts.decompose_solutions(3) == DecompositionCounts(3, 1, 0, 0, 1)
        d11 = counts.decompose_solutions(11)
        assert (d11.total, d11.strict, d11.two_equal, d11.all_equal) == (9, 1, 1, 0)
        d1 = counts.decompose_solutions(1)
        assert (d1.total, d1.strict, d1.two_equal, d1.all_equal) == (0, 0, 0, 0)

    def test_identity_holds_to_500(self):
        total, strict, two_eq, all_eq = counts.solution_tables(500)
        ns = np.arange(1, 501)
        assert (total[ns] == 6 * strict[ns] + 3 * two_eq[ns] + all_eq[ns]).all()

    def test_scalar_matches_tables(self):
        total, strict, two_eq, all_eq = counts.solution_tables(150)
        for n in range(1, 151):
            d = counts.decompose_solutions(n)
            assert (d.total, d.strict, d.two_equal, d.all_equal) == (
                int(total[n]), int(strict[n]), int(two_eq[n]), int(all_eq[n]),
            )

    def test_triples_enumeration(self):
        assert [(t.r, t.s, t.t) for t in counts.triples(11)] == [(3, 2, 1), (5, 1, 1)]
        assert counts.triples(1) == []


class TestParityAndPropositions:
    @pytest.mark.parametrize("n", [5, 2, 6, 1, 9, 10, 13])
    def test_parity_lemma(self, n):
        assert counts.parity_lemma_check(n)

    def test_parity_lemma_rejects_wrong_class(self):
        with pytest.raises(ValueError, match="lemma hypothesis violated"):
            counts.parity_lemma_check(4)
        with pytest.raises(ValueError, match="lemma hypothesis violated"):
            counts.parity_lemma_check(3)

    def test_proposition_pieces_at_5(self):
        dec = counts.decompose_solutions(5)
        assert counts.divisor_count(5) == 2
        assert dec.two_equal == 1 and dec.strict == 0
        assert 6 * 2 + 24 * 0 + 12 * 1 == 24 == counts.r_squares(3, 5)

    def test_proposition_pieces_at_2(self):
        assert 12 * counts.divisor_count(1) == 12 == counts.r_squares(3, 2)

    def test_odd_corollary_at_9(self):
        assert 6 * counts.divisor_count(9) + 4 * counts.signed_triple_sum(9) == 30
        assert counts.r_squares(3, 9) == 30

    def test_propositions_to_300(self):
        for n in range(1, 301):
            assert counts.proposition_checks(n), n

from fractions import Fraction
from math import comb, factorial

import pytest

from quilts.enumeration import (
    AntichainProfile,
    antichain_quilt_count,
    antichain_quilt_profile,
    asm_count_rect,
    asm_count_square,
    bernoulli_numbers,
    boolean_bound_check,
    chain_antichain_closed_form,
    chain_quilt_polynomial,
    chain_quilt_values,
    count_quilts_bruteforce,
    d1_count,
    enumerate_fundamental,
    enumerate_quilts,
    faulhaber_evaluate,
    faulhaber_polynomial,
    fundamental_counts,
    fundamental_topset_table,
    lower_bound_family,
    mt_top_set_count,
    rect_asm_leading_coefficient,
    sequence_terms,
    standard_count,
    standardize,
)
from quilts.errors import PosetError, TractabilityError
from quilts.poset import make_antichain, make_boolean, make_chain, product
from quilts.quilt import from_jump_sets, jump_sets, validate_quilt


class TestBruteForce:
    def test_known_counts(self):
        assert count_quilts_bruteforce(make_chain(2), make_boolean(3)) == 199
        assert count_quilts_bruteforce(make_boolean(2), make_boolean(2)) == 16

    def test_enumeration_is_exhaustive_and_valid(self):
        quilts = list(enumerate_quilts(make_chain(2), make_boolean(3)))
        assert len(quilts) == 199
        assert len({f.values for f in quilts}) == 199
        for f in quilts[::17]:
            validate_quilt(f.p, f.q, f.values)

    def test_node_cap_aborts(self):
        from quilts import enumeration

        enumeration._brute_cache.clear()
        with pytest.raises(TractabilityError):
            count_quilts_bruteforce(make_boolean(2), make_boolean(3), node_cap=100)

    def test_threaded_count_matches(self):
        from quilts import enumeration

        enumeration._brute_cache.clear()
        single = count_quilts_bruteforce(make_chain(2), make_boolean(3))
        enumeration._brute_cache.clear()
        multi = count_quilts_bruteforce(make_chain(2), make_boolean(3), threads=3)
        assert single == multi == 199


class TestAntichainEngine:
    def test_boolean_3_profile(self):
        assert antichain_quilt_profile(make_boolean(3)).terms == (
            (8, 2), (9, 3), (10, 6), (13, 6), (18, 1),
        )

    def test_profile_formula_rendering(self):
        prof = AntichainProfile(((8, 2), (18, 1)))
        assert prof.formula() == "2*8^j + 18^j"

    def test_chain_times_chain_profiles(self):
        assert antichain_quilt_profile(product(make_chain(2), make_chain(1))).terms == (
            (3, 1), (4, 2), (5, 2), (6, 2), (8, 1),
        )
        assert antichain_quilt_profile(product(make_chain(3), make_chain(1))).terms == (
            (3, 2), (4, 3), (5, 4), (6, 5), (7, 2), (8, 4), (9, 3), (11, 2), (13, 1),
        )

    def test_antichain_poset_gives_power_of_two(self):
        for i in (1, 2, 3):
            for j in (1, 2, 4):
                assert antichain_quilt_count(make_antichain(i), j) == 2 ** (i * j)

    def test_needs_rank_two(self):
        with pytest.raises(PosetError):
            antichain_quilt_profile(make_chain(1))

    def test_closed_form_matches_profile(self):
        for k in (2, 3, 4, 5):
            prof = antichain_quilt_profile(make_chain(k))
            for j in (1, 2, 3):
                assert prof.evaluate(j) == chain_antichain_closed_form(k, j)

    def test_c4_formula(self):
        for j in range(1, 11):
            assert chain_antichain_closed_form(4, j) == 3 * 2**j + 2 * 3**j + 4**j

    def test_json_serialization(self):
        prof = antichain_quilt_profile(make_boolean(3))
        assert prof.to_json_list()[0] == ["8", "2"]


class TestFaulhaber:
    def test_bernoulli_convention(self):
        assert bernoulli_numbers(7) == [
            Fraction(1), Fraction(1, 2), Fraction(1, 6), Fraction(0),
            Fraction(-1, 30), Fraction(0), Fraction(1, 42),
        ]

    def test_printed_polynomial(self):
        assert faulhaber_polynomial(3) == (
            Fraction(0), Fraction(-29, 30), Fraction(1, 4), Fraction(5, 12),
            Fraction(1, 4), Fraction(1, 20),
        )

    def test_evaluations_match_closed_form(self):
        for k in range(2, 21):
            assert faulhaber_evaluate(3, k) == chain_antichain_closed_form(k, 3)
        for j in range(1, 7):
            for k in range(2, 12):
                assert faulhaber_evaluate(j, k) == chain_antichain_closed_form(k, j)

    def test_triple_agreement_with_brute_force(self):
        # closed form, polynomial, and the search oracle at (k, j) = (3, 2)
        oracle = count_quilts_bruteforce(make_chain(3), make_antichain(2))
        assert chain_antichain_closed_form(3, 2) == oracle
        assert faulhaber_evaluate(2, 3) == oracle


class TestTransferEngine:
    def test_values_b2(self):
        assert chain_quilt_values(make_boolean(2), 4) == [1, 4, 4, 17, 46]

    def test_short_chain_values_against_oracle(self):
        for p in (make_boolean(2), make_boolean(3), make_antichain(3)):
            values = chain_quilt_values(p, 4)
            for n in range(5):
                assert values[n] == count_quilts_bruteforce(p, make_chain(n))

    def test_point_poset(self):
        assert chain_quilt_values(make_chain(0), 3) == [1, 1, 1, 1]

    def test_polynomial_b2(self):
        poly = chain_quilt_polynomial(make_boolean(2))
        assert dict(poly.coeffs) == {2: 4, 3: 5, 4: 2}
        assert poly.valid_from == 2

    def test_polynomial_matches_values_past_degree(self):
        for p in (make_boolean(2), make_antichain(2), make_chain(3)):
            poly = chain_quilt_polynomial(p)
            values = chain_quilt_values(p, p.rank_sum + 4)
            for n in range(p.rank, p.rank_sum + 5):
                assert poly.evaluate(n) == values[n]

    def test_monomial_expansion_b2(self):
        poly = chain_quilt_polynomial(make_boolean(2))
        assert poly.monomial_coefficients() == (
            Fraction(0), Fraction(-5, 6), Fraction(5, 12), Fraction(1, 3), Fraction(1, 12),
        )

    def test_stability_at_the_rank(self):
        for p in (
            make_boolean(2),
            make_boolean(3),
            make_antichain(1),
            make_antichain(2),
            make_antichain(3),
            make_antichain(4),
            product(make_chain(2), make_chain(1)),
        ):
            values = chain_quilt_values(p, p.rank)
            assert values[p.rank] == values[p.rank - 1]

    def test_json_shape(self):
        d = chain_quilt_polynomial(make_boolean(2)).to_json_dict()
        assert d == {
            "basis": "binomial",
            "valid_from": 2,
            "coeffs": {"2": "4", "3": "5", "4": "2"},
        }


class TestFundamental:
    def test_counts_b2(self):
        assert fundamental_counts(make_boolean(2)) == {2: 4, 3: 5, 4: 2}

    def test_standard_counts(self):
        assert standard_count(make_boolean(3)) == 1344
        assert standard_count(make_chain(3)) == 2

    def test_enumerate_matches_counts(self):
        b2 = make_boolean(2)
        for m in range(2, 5):
            quilts = list(enumerate_fundamental(b2, m))
            assert len(quilts) == fundamental_counts(b2)[m]
            for f in quilts:
                union = set()
                for s in jump_sets(f):
                    union |= set(s)
                assert union == set(range(1, m + 1))

    def test_standardize_canonical_quilt(self):
        b3 = make_boolean(3)
        canon = from_jump_sets(b3, 3, [tuple(range(1, b3.ranks[x] + 1)) for x in range(8)])
        std = standardize(canon)
        js = jump_sets(std)
        assert js[1:4] == ((7,), (6,), (5,))
        assert js[4:7] == ((4, 11), (3, 10), (2, 9))
        assert js[7] == (1, 8, 12)

    def test_standardize_output_is_standard(self):
        b2 = make_boolean(2)
        for f in enumerate_fundamental(b2, 3):
            std = standardize(f)
            union = sorted(x for s in jump_sets(std) for x in s)
            assert union == list(range(1, b2.rank_sum + 1))

    def test_standardize_needs_a_long_enough_chain(self):
        b2 = make_boolean(2)
        f = from_jump_sets(b2, 1, [(), (1,), (1,), (1,)])
        with pytest.raises(PosetError):
            standardize(f)


class TestTopSets:
    def test_b2_square_formula(self):
        b2 = make_boolean(2)
        for a1 in range(1, 8):
            for a2 in range(a1 + 1, 9):
                assert mt_top_set_count(b2, (a1, a2)) == (a2 - a1 + 1) ** 2

    def test_antichain_power_formula(self):
        for j in (1, 2, 3):
            aj = make_antichain(j)
            for a1 in range(1, 5):
                for a2 in range(a1 + 1, 6):
                    assert mt_top_set_count(aj, (a1, a2)) == (a2 - a1 + 1) ** j

    def test_b3_spot_value(self):
        assert mt_top_set_count(make_boolean(3), (2, 10, 16)) == 52202240

    def test_row_sums_match_polynomial(self):
        b3 = make_boolean(3)
        table = fundamental_topset_table(b3)
        sums = {}
        for t, c in table.items():
            sums[t[-1]] = sums.get(t[-1], 0) + c
        assert sums == dict(chain_quilt_polynomial(b3).coeffs)

    def test_initial_topset_gives_the_stable_count(self):
        for p in (make_boolean(2), make_boolean(3), make_antichain(3)):
            k = p.rank
            assert mt_top_set_count(p, tuple(range(1, k + 1))) == chain_quilt_values(p, k)[k]

    def test_partition_of_a_chain_lattice(self):
        # summing over all possible top sets recovers the total count
        from itertools import combinations

        p = make_boolean(2)
        n = 5
        total = sum(
            mt_top_set_count(p, t) for t in combinations(range(1, n + 1), p.rank)
        )
        assert total == chain_quilt_values(p, n)[n]

    def test_validates_topset(self):
        with pytest.raises(PosetError):
            mt_top_set_count(make_boolean(2), (2, 2))
        with pytest.raises(PosetError):
            mt_top_set_count(make_boolean(2), (1, 2, 3))


class TestAsmCounts:
    def test_square_diagonal(self):
        expected = (1, 2, 7, 42, 429, 7436, 218348, 10850216)
        assert tuple(asm_count_square(n) for n in range(1, 9)) == expected

    def test_rectangular_spot_values(self):
        assert asm_count_rect(3, 5) == 149
        assert asm_count_rect(2, 7) == 77
        assert asm_count_rect(10, 1) == 10

    def test_rect_agrees_with_square(self):
        for n in (1, 2, 3, 4, 5, 6):
            assert asm_count_rect(n, n) == asm_count_square(n)

    def test_symmetry(self):
        for k, n in ((2, 5), (3, 4), (1, 6)):
            assert asm_count_rect(k, n) == asm_count_rect(n, k)

    def test_leading_coefficient_cross_check(self):
        for k in range(1, 6):
            hook = rect_asm_leading_coefficient(k)
            assert hook == Fraction(
                standard_count(make_chain(k)), factorial(k * (k + 1) // 2)
            )


class TestBounds:
    def test_bound_report(self):
        report = boolean_bound_check(make_chain(2), 3)
        assert report.count == 199
        assert report.lower_bound == 2**3 and report.lower_ok
        assert report.improved_bound is None
        assert report.upper_ok

    def test_improved_bound_applies(self):
        report = boolean_bound_check(make_chain(2), 4)
        assert report.count == 47000
        assert report.improved_bound == d1_count(make_chain(2)) ** comb(4, 2)
        assert report.improved_ok

    def test_b2_b3_between_bounds(self):
        report = boolean_bound_check(make_boolean(2), 3)
        assert report.count == 2309 and report.ok

    def test_epsilon_family_b2_2(self):
        fam = list(lower_bound_family(make_boolean(2), 2, "epsilon"))
        assert len({f.values for f in fam}) == 4 == 2 ** comb(2, 1)

    def test_epsilon_family_staircase_regime(self):
        fam = list(lower_bound_family(make_chain(2), 4, "epsilon"))
        assert len({f.values for f in fam}) == 2 ** comb(4, 2)
        fam = list(lower_bound_family(make_boolean(2), 3, "epsilon"))
        assert len({f.values for f in fam}) == 2 ** comb(3, 1)

    def test_g_family(self):
        fam = list(lower_bound_family(make_chain(2), 4, "g"))
        assert len({f.values for f in fam}) == d1_count(make_chain(2)) ** comb(4, 2)
        with pytest.raises(PosetError):
            lower_bound_family(make_chain(2), 3, "g")

    def test_families_are_subsets_of_the_lattice(self):
        lattice = {f.values for f in enumerate_quilts(make_chain(2), make_boolean(2))}
        for kind in ("epsilon",):
            fam = {f.values for f in lower_bound_family(make_chain(2), 2, kind)}
            assert fam <= lattice


class TestEngineAgreement:
    POSETS = [
        make_chain(2), make_chain(3), make_chain(4),
        make_antichain(1), make_antichain(2), make_antichain(3),
        make_boolean(2), make_boolean(3),
        product(make_chain(2), make_chain(1)),
    ]

    @pytest.mark.parametrize("p", POSETS, ids=lambda p: f"size{p.size}rank{p.rank}")
    def test_three_engines_agree(self, p):
        values = chain_quilt_values(p, 3)
        for n in range(4):
            assert values[n] == count_quilts_bruteforce(p, make_chain(n))
        for j in (1, 2):
            predicted = antichain_quilt_count(p, j)
            assert predicted == count_quilts_bruteforce(p, make_antichain(j))

    def test_switch_symmetry_of_counts(self):
        pairs = [
            (make_chain(2), make_boolean(2)),
            (make_antichain(2), make_chain(3)),
            (make_boolean(2), make_antichain(3)),
        ]
        for p, q in pairs:
            assert count_quilts_bruteforce(p, q) == count_quilts_bruteforce(q, p)

    def test_upper_bound_boolean_growth_maps(self):
        for p, q in (
            (make_chain(2), make_boolean(3)),
            (make_boolean(2), make_boolean(3)),
            (make_chain(3), make_chain(5)),
        ):
            count = count_quilts_bruteforce(p, q)
            assert count <= d1_count(q) ** p.rank_sum

    def test_product_of_asm_counts(self):
        # gluing j copies of a chain raises the count to the j-th power
        from quilts.poset import disjoint_union

        def copies(p, j):
            out = p
            for _ in range(j - 1):
                out = disjoint_union(out, p)
            return out

        for k, n, j in ((3, 2, 2), (3, 3, 2), (2, 2, 3)):
            glued = copies(make_chain(k), j)
            assert count_quilts_bruteforce(glued, make_chain(n)) == asm_count_rect(k, n) ** j


class TestSequences:
    def test_prefixes(self):
        assert sequence_terms("boolean-chain", 10) == [1, 2, 4, 3, 4, 18, 4, 17, 199, 166]
        assert sequence_terms("antichain-chain", 10) == [2, 4, 2, 8, 4, 7, 16, 8, 17, 16]
        assert sequence_terms("chain-chain", 10) == [1, 2, 2, 3, 7, 7, 4, 16, 42, 42]

    def test_limit_zero(self):
        assert sequence_terms("chain-chain", 0) == []

    def test_unknown_name(self):
        with pytest.raises(PosetError):
            sequence_terms("chain-boolean", 5)

    def test_beyond_tabulated_range(self):
        with pytest.raises(TractabilityError):
            sequence_terms("boolean-boolean", 100)

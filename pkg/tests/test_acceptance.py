"""Acceptance suite: every criterion is exact (tolerance zero throughout).

Each test prints one pass/fail line for its criterion (visible with -s or in
the captured output).  Expected values are frozen here, independently of the
library's own verification tables.  Multi-minute brute-force confirmations
are marked slow; `pytest` runs them by default, `-m "not slow"` skips them.
"""

import random
import time
from fractions import Fraction
from math import comb, factorial

import pytest

from quilts.dedekind import dedekind_numbers
from quilts.embed import check_matroid_rank, iota_embed, matroid_to_quilt, quilt_from_matrix
from quilts.enumeration import (
    antichain_quilt_count,
    antichain_quilt_profile,
    asm_count_rect,
    asm_count_square,
    boolean_bound_check,
    chain_antichain_closed_form,
    chain_quilt_polynomial,
    chain_quilt_values,
    count_quilts_bruteforce,
    d1_count,
    faulhaber_evaluate,
    faulhaber_polynomial,
    fundamental_topset_table,
    lower_bound_family,
    mt_top_set_count,
    rect_asm_leading_coefficient,
    sequence_terms,
    standard_count,
    enumerate_quilts,
)
from quilts.errors import PosetError
from quilts.poset import (
    dedekind_macneille_completion,
    make_antichain,
    make_boolean,
    make_chain,
    orders_isomorphic,
    plain_order,
    product,
)
from quilts.quilt import (
    boolean_complement,
    covers_up,
    d4_orbit,
    join,
    meet,
    phi_map,
    quilt_rank,
    quilt_to_csm,
    switch,
)


def report(criterion: str, ok: bool, detail: str = "") -> None:
    status = "PASS" if ok else "FAIL"
    print(f"acceptance {criterion}: {status}{'  ' + detail if detail else ''}")
    assert ok, f"criterion {criterion} failed: {detail}"


# -- 1: the map-count table ----------------------------------------------------

DEDEKIND_TABLE = {
    0: (1,),
    1: (1, 1),
    2: (1, 4, 1),
    3: (1, 18, 18, 1),
    4: (1, 166, 656, 166, 1),
    5: (1, 7579, 189967, 189967, 7579, 1),
}


def test_criterion_1_dedekind_tables():
    actual = {0: dedekind_numbers(make_chain(0))}
    for n in range(1, 6):
        actual[n] = dedekind_numbers(make_boolean(n))
    report("1 (map-count tables)", actual == DEDEKIND_TABLE, f"rows 0..5, d_2 of rank 5 = {actual[5][2]}")


# -- 2: brute-force counts ------------------------------------------------------


def test_criterion_2_bruteforce_counts():
    ok = (
        count_quilts_bruteforce(make_chain(2), make_boolean(3)) == 199
        and count_quilts_bruteforce(make_boolean(2), make_boolean(2)) == 16
        and count_quilts_bruteforce(make_boolean(2), make_boolean(3)) == 2309
        and all(
            count_quilts_bruteforce(make_antichain(i), make_antichain(j)) == 2 ** (i * j)
            for i in range(1, 5)
            for j in range(1, 5)
        )
    )
    report("2 (brute-force counts)", ok, "199 / 16 / 2309 / 2^(ij)")


@pytest.mark.slow
def test_criterion_2_slow_b3_b3():
    from quilts import enumeration

    enumeration._brute_cache.pop((make_boolean(3), make_boolean(3)), None)
    start = time.monotonic()
    value = count_quilts_bruteforce(make_boolean(3), make_boolean(3))
    elapsed = time.monotonic() - start
    report(
        "2 (slow: rank-3 square count)",
        value == 2406862 and elapsed < 300,
        f"{value} in {elapsed:.0f}s",
    )


# -- 3: the antichain engine ----------------------------------------------------

B4_PROFILE = (
    (16, 2), (20, 12), (25, 6), (26, 24), (27, 8), (34, 24), (35, 8), (36, 14),
    (38, 8), (39, 24), (42, 24), (47, 6), (49, 24), (50, 12), (52, 24), (55, 24),
    (59, 24), (61, 12), (64, 49), (70, 24), (72, 20), (77, 24), (80, 12), (81, 4),
    (82, 12), (83, 12), (90, 24), (91, 24), (95, 8), (100, 6), (101, 24), (102, 6),
    (103, 8), (104, 24), (113, 2), (114, 24), (115, 24), (122, 8), (128, 12),
    (129, 4), (133, 12), (147, 8), (166, 1),
)


def test_criterion_3_antichain_profiles():
    checks = {
        "B3": antichain_quilt_profile(make_boolean(3)).terms
        == ((8, 2), (9, 3), (10, 6), (13, 6), (18, 1)),
        "B4": antichain_quilt_profile(make_boolean(4)).terms == B4_PROFILE,
        "C2xC1": antichain_quilt_profile(product(make_chain(2), make_chain(1))).terms
        == ((3, 1), (4, 2), (5, 2), (6, 2), (8, 1)),
        "C3xC1": antichain_quilt_profile(product(make_chain(3), make_chain(1))).terms
        == ((3, 2), (4, 3), (5, 4), (6, 5), (7, 2), (8, 4), (9, 3), (11, 2), (13, 1)),
    }
    report("3 (antichain engine)", all(checks.values()), f"43 bases for B4: {len(B4_PROFILE)}")


# -- 4: Faulhaber ----------------------------------------------------------------


def test_criterion_4_faulhaber():
    coeffs_ok = faulhaber_polynomial(3) == (
        Fraction(0), Fraction(-29, 30), Fraction(1, 4), Fraction(5, 12),
        Fraction(1, 4), Fraction(1, 20),
    )
    evals_ok = all(
        faulhaber_evaluate(3, k) == chain_antichain_closed_form(k, 3)
        for k in range(2, 21)
    )
    report("4 (Faulhaber)", coeffs_ok and evals_ok, "k^5/20 + k^4/4 + 5k^3/12 + k^2/4 - 29k/30")


# -- 5 and 6: the chain engine -----------------------------------------------------

B3_POLY = {
    3: 199, 4: 2456, 5: 12471, 6: 35876, 7: 65652, 8: 79788, 9: 64506,
    10: 33444, 11: 10080, 12: 1344,
}
B4_POLY = {
    4: 3813042, 5: 703244285, 6: 48063694812, 7: 1710540931365,
    8: 37512372358044, 9: 560131126345528, 10: 6073377257995792,
    11: 49970302238834940, 12: 321944626547285880, 13: 1662187981311784640,
    14: 6997548154002120846, 15: 24338243155860965610,
    16: 70636458716011510126, 17: 172335637248751133958,
    18: 355315109292664467516, 19: 621185943976110723780,
    20: 922421269447363713000, 21: 1163423387552452501296,
    22: 1244204557392229952160, 23: 1124093660783042183328,
    24: 852913906502788631808, 25: 538793272789014417984,
    26: 279881902757513059200, 27: 117471942156471614976,
    28: 38839556977856928768, 29: 9735818288500039680,
    30: 1738665057137541120, 31: 197055430584827904, 32: 10651644896477184,
}


def test_criterion_5_chain_engine_b3():
    poly = chain_quilt_polynomial(make_boolean(3))
    ok = dict(poly.coeffs) == B3_POLY and standard_count(make_boolean(3)) == 1344
    report("5 (chain engine, rank 3)", ok, "coefficients m=3..12 and 1344 standard quilts")


def test_criterion_6_chain_engine_b4():
    start = time.monotonic()
    poly = chain_quilt_polynomial(make_boolean(4))
    elapsed = time.monotonic() - start
    ok = dict(poly.coeffs) == B4_POLY and len(B4_POLY) == 29
    report("6 (chain engine, rank 4)", ok, f"29 coefficients in {elapsed:.1f}s")
    assert elapsed < 10


# -- 7: rectangular counting ---------------------------------------------------------

CHAIN_CHAIN_TABLE = {
    1: (1, 2, 3, 4, 5, 6, 7, 8, 9, 10),
    2: (2, 7, 16, 30, 50, 77, 112, 156, 210),
    3: (7, 42, 149, 406, 938, 1932, 3654, 6468),
    4: (42, 429, 2394, 9698, 31920, 90576, 229680),
    5: (429, 7436, 65910, 403572, 1931325, 7722110),
    6: (7436, 218348, 3096496, 29020904, 205140540),
    7: (218348, 10850216, 247587252, 3586953760),
    8: (10850216, 911835460, 33631201864),
}


def test_criterion_7_rectangular_asm_counts():
    table_ok = all(
        tuple(asm_count_rect(n, k) for k in range(n, 11)) == row
        for n, row in CHAIN_CHAIN_TABLE.items()
    )
    diagonal_ok = tuple(asm_count_square(n) for n in range(1, 9)) == (
        1, 2, 7, 42, 429, 7436, 218348, 10850216,
    )
    leading_ok = all(
        rect_asm_leading_coefficient(k)
        == Fraction(standard_count(make_chain(k)), factorial(k * (k + 1) // 2))
        for k in range(1, 6)
    )
    report("7 (rectangular counts)", table_ok and diagonal_ok and leading_ok, "table, diagonal, leading coefficients")


# -- 8: top-set counts ------------------------------------------------------------------


def test_criterion_8_top_set_counts():
    b2, b3 = make_boolean(2), make_boolean(3)
    square_ok = all(
        mt_top_set_count(b2, (a1, a2)) == (a2 - a1 + 1) ** 2
        for a1 in range(1, 9)
        for a2 in range(a1 + 1, 9)
    )
    spot_ok = mt_top_set_count(b3, (2, 10, 16)) == 52202240
    table = fundamental_topset_table(b3)
    spots_ok = (
        table[(1, 2, 3)] == 199
        and table[(1, 5, 9)] == 21294
        and table[(1, 8, 12)] == 288
    )
    sums = {}
    for t, c in table.items():
        sums[t[-1]] = sums.get(t[-1], 0) + c
    sums_ok = sums == dict(chain_quilt_polynomial(b3).coeffs)
    report(
        "8 (top sets)",
        square_ok and spot_ok and spots_ok and sums_ok,
        "square formula, 52202240, table spots, row sums (3428+5615+3428 = 12471)",
    )


# -- 9: sequence readings ------------------------------------------------------------------

SEQUENCES = {
    "boolean-chain": [
        1, 2, 4, 3, 4, 18, 4, 17, 199, 166, 5, 46, 199, 47000, 7579, 6, 100,
        3252, 3813042, 410131245, 7828352,
    ],
    "antichain-boolean": [
        2, 4, 4, 8, 16, 199, 16, 64, 2309, 47000, 32, 256, 28225, 4001278,
        410131245, 64, 1024, 364217, 384285926,
    ],
    "antichain-chain": [2, 4, 2, 8, 4, 7, 16, 8, 17, 16],
    "chain-chain": [
        1, 2, 2, 3, 7, 7, 4, 16, 42, 42, 5, 30, 149, 429, 429, 6, 50, 406,
        2394, 7436, 7436,
    ],
}


def test_criterion_9_sequences():
    ok = all(
        sequence_terms(name, len(expected)) == expected
        for name, expected in SEQUENCES.items()
    )
    prefix_ok = sequence_terms("boolean-boolean", 5) == [1, 4, 16, 18, 2309]
    report("9 (sequence readings)", ok and prefix_ok, "four full readings plus the square prefix")


@pytest.mark.slow
def test_criterion_9_slow_boolean_boolean():
    expected = [1, 4, 16, 18, 2309, 2406862, 166, 4001278]
    actual = sequence_terms("boolean-boolean", 8)
    report("9 (slow: boolean-boolean reading)", actual == expected, str(actual))


# -- 10: lattice structure on the 199-element lattice -----------------------------------------


def test_criterion_10_lattice_structure():
    p, q = make_chain(2), make_boolean(3)
    quilts = list(enumerate_quilts(p, q))
    values = {f.values for f in quilts}
    graded = all(
        g.values in values and quilt_rank(g) == quilt_rank(f) + 1
        for f in quilts
        for g in covers_up(f)
    )
    closed = all(
        meet(f, g).values in values and join(f, g).values in values
        for i, f in enumerate(quilts)
        for g in quilts[i + 1 :]
    )
    rng = random.Random(199)
    distributive = all(
        meet(join(f, g), h).values == join(meet(f, h), meet(g, h)).values
        and join(meet(f, g), h).values == meet(join(f, h), join(g, h)).values
        for f, g, h in (
            [quilts[rng.randrange(199)] for _ in range(3)] for _ in range(1000)
        )
    )
    csms = [quilt_to_csm(f) for f in enumerate_quilts(make_chain(2), make_chain(3))]
    images = [iota_embed(b, p, q) for b in csms]

    def csm_leq(a, b):
        return all(x <= y for ra, rb in zip(a.values, b.values) for x, y in zip(ra, rb))

    iota_ok = (
        len({f.values for f in images}) == 7
        and all(f.values in values for f in images)
        and all(
            csm_leq(csms[i], csms[j]) == images[i].leq(images[j])
            for i in range(7)
            for j in range(7)
        )
    )
    matroids = []
    for bits in range(3**8):
        ranks, x = [], bits
        for _ in range(8):
            ranks.append(x % 3)
            x //= 3
        if ranks[0] or ranks[7] != 2:
            continue
        try:
            check_matroid_rank(3, ranks)
        except PosetError:
            continue
        matroids.append(ranks)
    matroid_images = {matroid_to_quilt(3, r).values for r in matroids}
    matroid_ok = len(matroids) == 7 and len(matroid_images) == 7 and matroid_images <= values
    report(
        "10 (lattice structure)",
        len(quilts) == 199 and graded and closed and distributive and iota_ok and matroid_ok,
        "graded; closed under meet/join; distributive; 7 tables and 7 matroids embed",
    )


# -- 11: symmetries ------------------------------------------------------------------------------


def test_criterion_11_symmetries():
    counts_ok = all(
        count_quilts_bruteforce(a, b) == count_quilts_bruteforce(b, a)
        for a, b in (
            (make_chain(2), make_boolean(3)),
            (make_antichain(3), make_chain(4)),
            (make_boolean(2), make_boolean(3)),
        )
    )
    b2 = make_boolean(2)
    quilts = list(enumerate_quilts(b2, b2))
    phi = boolean_complement(2)
    rot4_ok = True
    for f in quilts:
        g = f
        for _ in range(4):
            g = switch(phi_map(g, phi))
        rot4_ok = rot4_ok and g.values == f.values
    seen = set()
    sizes = []
    for f in quilts:
        if f.values in seen:
            continue
        orbit = d4_orbit(f, phi)
        sizes.append(len(orbit))
        seen.update(g.values for g in orbit)
    orbits_ok = len(seen) == 16 and all(8 % s == 0 for s in sizes)
    report(
        "11 (symmetries)",
        counts_ok and rot4_ok and orbits_ok,
        f"counts symmetric; fourth power is the identity on all 16; orbit sizes {sorted(sizes)}",
    )


# -- 12: representability and completion ----------------------------------------------------------


def test_criterion_12_representability_and_completion():
    mats = (
        ((1, 0), (0, 1)), ((0, 1), (1, 0)), ((1, 1), (0, 1)), ((1, 0), (1, 1)),
        ((1, 1), (1, 0)), ((0, 1), (1, 1)), ((1, 1), (-1, 1)),
    )
    images = [quilt_from_matrix(m) for m in mats]
    distinct = len({f.values for f in images}) == 7
    pairs = [
        (i, j) for i in range(7) for j in range(7) if i != j and images[i].leq(images[j])
    ]
    induced = plain_order(7, pairs)
    reference = plain_order(7, [(0, 2), (0, 3), (1, 4), (1, 5), (2, 6), (3, 6), (4, 6), (5, 6)])
    completion = dedekind_macneille_completion(7, pairs)
    new = set(range(completion.order.size)) - set(completion.embedding)
    bottom_added = len(new) == 1 and all(
        completion.order.leq(next(iter(new)), v) for v in range(completion.order.size)
    )
    report(
        "12 (representability)",
        distinct
        and orders_isomorphic(induced, reference)
        and completion.order.size == 8
        and bottom_added,
        "7 distinct rank tables; completion adds exactly one bottom",
    )


# -- 13: property suites ----------------------------------------------------------------------------

BATTERY = [
    make_chain(2), make_chain(3), make_chain(4), make_chain(5),
    make_antichain(1), make_antichain(2), make_antichain(3), make_antichain(4),
    make_boolean(2), make_boolean(3),
    product(make_chain(2), make_chain(1)), product(make_chain(3), make_chain(1)),
]
_SLOW_CELL = 200_000


def _battery_cells(slow: bool):
    for p in BATTERY:
        values = chain_quilt_values(p, 5)
        for n in range(6):
            if (values[n] > _SLOW_CELL) == slow:
                yield p, make_chain(n), values[n]
        for j in range(1, 6):
            predicted = antichain_quilt_count(p, j)
            if (predicted > _SLOW_CELL) == slow:
                yield p, make_antichain(j), predicted


def test_criterion_13_engine_agreement_fast_cells():
    cells = 0
    ok = True
    for p, q, predicted in _battery_cells(slow=False):
        cells += 1
        ok = ok and predicted == count_quilts_bruteforce(p, q)
    report("13 (engine agreement, fast cells)", ok, f"{cells} cells")


@pytest.mark.slow
def test_criterion_13_engine_agreement_slow_cells():
    cells = 0
    ok = True
    for p, q, predicted in _battery_cells(slow=True):
        cells += 1
        ok = ok and predicted == count_quilts_bruteforce(p, q)
    report("13 (engine agreement, slow cells)", ok, f"{cells} cells")


def test_criterion_13_stability():
    posets = [
        make_boolean(2), make_boolean(3), make_boolean(4),
        make_antichain(1), make_antichain(2), make_antichain(3), make_antichain(4),
        product(make_chain(2), make_chain(1)),
    ]
    ok = True
    for p in posets:
        values = chain_quilt_values(p, p.rank)
        ok = ok and values[p.rank] == values[p.rank - 1]
    report("13 (count stability at the rank)", ok, f"{len(posets)} posets")


def test_criterion_13_bounds():
    upper_ok = True
    for p, q in (
        (make_chain(2), make_boolean(3)),
        (make_boolean(2), make_boolean(3)),
        (make_chain(3), make_chain(5)),
        (make_antichain(2), make_boolean(3)),
    ):
        count = count_quilts_bruteforce(p, q)
        upper_ok = upper_ok and count <= d1_count(q) ** p.rank_sum
    reports = [
        boolean_bound_check(make_chain(2), 2),
        boolean_bound_check(make_chain(2), 3),
        boolean_bound_check(make_chain(2), 4),
        boolean_bound_check(make_boolean(2), 2),
        boolean_bound_check(make_boolean(2), 3),
        boolean_bound_check(make_chain(3), 3),
    ]
    lower_ok = all(r.ok for r in reports)
    fam = list(lower_bound_family(make_boolean(2), 2, "epsilon"))
    fam_ok = len({f.values for f in fam}) == 4
    gfam = list(lower_bound_family(make_chain(2), 4, "g"))
    gfam_ok = len({f.values for f in gfam}) == d1_count(make_chain(2)) ** comb(4, 2)
    report(
        "13 (bounds)",
        upper_ok and lower_ok and fam_ok and gfam_ok,
        "map-count upper bound; two lower bounds with explicit families",
    )

from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from collatz_struct.classify import (
    BSubtype, Growth, Principal, chromologue_reversal_point, classify_sequence, classify_word,
    count_by_odd, count_types, increment, polychromologue_counts, proportion_trend,
    reversal_coefficient, reversal_coefficients, word_threshold,
)
from collatz_struct.structure import ParityWord, generate_sequence, parity_vector
from collatz_struct.tables import build_chromologue
from oracles import alpha_bruteforce, count_a_words, orbit


@pytest.mark.parametrize("n,alpha", [(8, 5), (1, 0), (2, 1), (3, 1), (5, 3), (19, 11)])
def test_reversal_coefficient_examples(n, alpha):
    assert reversal_coefficient(n) == alpha


def test_reversal_coefficient_matches_bruteforce():
    table = reversal_coefficients(300)
    for n in range(1, 301):
        assert reversal_coefficient(n) == table[n] == alpha_bruteforce(n)


@pytest.mark.parametrize("n", [1, 2, 63, 64, 65, 1000, 4096, 99_999])
def test_alpha_exactness(n):
    a = reversal_coefficient(n)
    assert 3**a < 2**n < 3 ** (a + 1)


def test_reversal_coefficient_rejects_zero():
    with pytest.raises(ValueError):
        reversal_coefficient(0)


def test_increment_examples():
    assert increment(4) == 1
    assert increment(1) == 0
    assert 25 < increment(100) < 27


def test_classify_sequence_examples():
    assert classify_sequence(7, 4).principal is Principal.A
    c = classify_sequence(17, 5)
    assert (c.principal, c.growth, c.b_subtype) == (Principal.B, Growth.SMINUS, BSubtype.BMINUS)


def test_classify_b_plus_instance():
    # terms of 2 are 1 2 1 2 1 with preterm 2 > 1
    c = classify_sequence(2, 5)
    assert (c.principal, c.b_subtype) == (Principal.B, BSubtype.BPLUS)


def test_equality_is_b_minus():
    # generator 1 at n=2: terms (2, 1) then preterm 2, equal to the first term
    s = generate_sequence(1, 2)
    assert s.preterm == s.first
    c = classify_sequence(1, 2)
    assert c.growth is Growth.SMINUS and c.b_subtype is BSubtype.BMINUS


@given(st.integers(1, 2**64), st.integers(1, 48))
def test_classification_coherence(p, n):
    c = classify_sequence(p, n)
    assert c.principal is classify_word(parity_vector(p, n, "G")).principal
    if c.principal is Principal.A:
        assert c.growth is Growth.SPLUS and c.b_subtype is None
    else:
        assert c.b_subtype.value == {"Splus": "Bplus", "Sminus": "Bminus"}[c.growth.value]


@given(st.integers(1, 2**64), st.integers(1, 48))
def test_classification_matches_orbit(p, n):
    o = orbit(p, n + 1)
    odd = sum(x & 1 for x in o[1:n + 1])
    c = classify_sequence(p, n)
    assert (c.principal is Principal.A) == (3**odd > 2**n)
    assert (c.growth is Growth.SPLUS) == (o[n + 1] > o[1])


def test_classify_word_examples():
    w = classify_word(parity_vector(17, 5, "G"))
    assert w.principal is Principal.B and w.reversal.threshold == Fraction(22, 23)
    w = classify_word(parity_vector(7, 4, "G"))
    assert w.principal is Principal.A and w.reversal is None
    w = classify_word(ParityWord((0,) * 7, "G"))
    assert w.reversal.threshold == 0


def test_classify_word_needs_generated():
    with pytest.raises(ValueError):
        classify_word(ParityWord((1, 0), "I"))


@given(st.integers(1, 2**40), st.integers(1, 24), st.integers(0, 50))
def test_threshold_separates_growth(p, n, i):
    # along a B chromologue, rows above the threshold decrease
    w = parity_vector(p, n, "G")
    if classify_word(w).principal is Principal.A:
        return
    t_star = word_threshold(w)
    q = p + (i << (n + 1))
    s = generate_sequence(q, n)
    if s.first > t_star:
        assert s.preterm < s.first


def test_reversal_point_examples():
    r = chromologue_reversal_point(17, 5)
    assert r.threshold == Fraction(22, 23) and r.i_max is None and r.p_i_max is None
    r = chromologue_reversal_point(2, 5)
    assert r.threshold == Fraction(37, 5) and (r.i_max, r.p_i_max) == (1, 2)
    assert classify_sequence(2 + 64, 5).b_subtype is BSubtype.BMINUS


def test_reversal_point_rejects_a():
    with pytest.raises(ValueError):
        chromologue_reversal_point(7, 4)


def test_b_plus_instances_have_reversal_point():
    found = 0
    for n in range(1, 11):
        for p in range(1, 2 ** (n + 1) + 1):
            if classify_sequence(p, n).b_subtype is BSubtype.BPLUS:
                r = chromologue_reversal_point(p, n)
                assert r.i_max >= 1
                after = classify_sequence(r.p_i_max + (2 << n), n)
                assert after.b_subtype is BSubtype.BMINUS
                found += 1
    assert found > 0


@pytest.mark.parametrize("n", [1, 2, 3, 5, 8, 11, 16])
def test_b_minus_heredity(n):
    checked = 0
    for p in range(1, min(2 ** (n + 1), 200) + 1):
        if classify_sequence(p, n).b_subtype is not BSubtype.BMINUS:
            continue
        c = build_chromologue(p, n, 64)
        assert all(classify_sequence(r.generator, n).b_subtype is BSubtype.BMINUS for r in c.rows)
        assert chromologue_reversal_point(p, n).i_max is None
        checked += 1
    assert checked > 0


@pytest.mark.parametrize("n,k,expected", [(4, 2, 6), (8, 5, 56), (10, 0, 1), (10, 10, 1)])
def test_count_by_odd(n, k, expected):
    assert count_by_odd(n, k) == expected


def test_count_by_odd_rows_sum():
    for n in range(0, 40):
        assert sum(count_by_odd(n, k) for k in range(n + 1)) == 2**n
    with pytest.raises(ValueError):
        count_by_odd(4, 5)


def test_count_types_examples():
    c = count_types(8)
    assert (c.a, c.b) == (37, 219)
    assert c.r_A == Fraction(37, 256)
    c = count_types(2)
    assert (c.a, c.b) == (1, 3)


@pytest.mark.parametrize("order", range(2, 17, 2))
def test_count_types_matches_enumeration(order):
    c = count_types(order)
    assert c.a == count_a_words(order) and c.a + c.b == 2**order


@pytest.mark.parametrize("order", [0, 3, 9])
def test_count_types_rejects(order):
    with pytest.raises(ValueError):
        count_types(order)


def test_proportion_trend():
    t = proportion_trend([8])
    assert t.counts[0].r_A == Fraction(37, 256)
    t = proportion_trend([8, 16, 32])
    assert t.strictly_decreasing
    assert proportion_trend([2048]).counts[0].r_A < Fraction(1, 10**6)
    with pytest.raises(ValueError):
        proportion_trend([8, 9])


def test_polychromologue_counts():
    p = polychromologue_counts(8)
    assert (p.h_A, p.h_B, p.method) == (37, 219, "table")
    p = polychromologue_counts(1)
    assert (p.h_A, p.h_B) == (1, 1)
    p = polychromologue_counts(4)
    assert p.h_A + p.h_B == 16


@pytest.mark.parametrize("n", range(1, 15))
def test_polychromologue_counts_match_row_classification(n):
    p = polychromologue_counts(n)
    rows = sum(classify_sequence(g, n).principal is Principal.A for g in range(1, 2 ** (n + 1), 2))
    assert p.h_A == rows == count_a_words(n)


def test_polychromologue_counts_fallback():
    p = polychromologue_counts(30, cap=10)
    assert p.method == "word-space" and p.h_A == count_types(30).a

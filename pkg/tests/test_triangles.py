import pytest

from shuflat.lattices import build_shuffle_lattice
from shuflat.polyalg import ONE, Q, T, BivarPoly
from shuflat.poset import NoBottom, build_poset
from shuflat.triangles import (
    CROSS_TERM_Q_MINUS_1,
    CROSS_TERM_Q_PLUS_1,
    adjudicate_series_cross_term,
    char_poly_brute,
    char_poly_formula,
    compute,
    h_triangle_brute,
    h_triangle_formula,
    m_series,
    m_triangle_brute,
    m_triangle_composition_sum,
    m_triangle_formula,
    m_triangle_interval,
    rank_generating_poly,
)
from shuflat.words import SizeLimitExceeded, shuffle_word_count

CORE = Q * T - T + 1  # qt - t + 1
M11 = BivarPoly({(2, 2): 1, (1, 2): -3, (0, 2): 2, (1, 1): 3, (0, 1): -3, (0, 0): 1})


def test_char_poly_brute_small_posets():
    single = build_poset(["*"], [])
    assert char_poly_brute(single) == ONE
    two_chain = build_poset([0, 1], [(0, 1)])
    assert char_poly_brute(two_chain) == ONE - Q
    assert char_poly_brute(build_shuffle_lattice(1, 1)) == 2 * Q**2 - 3 * Q + 1


def test_char_poly_brute_needs_bottom():
    antichain = build_poset([0, 1], [])
    with pytest.raises(NoBottom):
        char_poly_brute(antichain)


def test_char_poly_formula_examples():
    assert char_poly_formula(0, 0) == ONE
    assert char_poly_formula(1, 1) == 2 * Q**2 - 3 * Q + 1
    for m in range(5):
        assert char_poly_formula(m, 0) == (ONE - Q) ** m


def test_char_poly_methods_agree():
    for m in range(4):
        for n in range(4):
            assert char_poly_brute(build_shuffle_lattice(m, n)) == char_poly_formula(
                m, n
            )


def test_char_poly_vanishes_at_one():
    for m in range(5):
        for n in range(5):
            if m + n >= 1:
                assert char_poly_formula(m, n).evaluate(1, 0) == 0


def test_m_triangle_brute_examples():
    assert m_triangle_brute(0, 0) == ONE
    assert m_triangle_brute(1, 0) == CORE
    assert m_triangle_brute(1, 1) == M11


def test_m_triangle_formula_examples():
    for m in range(5):
        assert m_triangle_formula(m, 0) == CORE**m
    assert m_triangle_formula(1, 1) == M11
    for m, n in ((2, 2), (3, 1), (2, 4)):
        assert m_triangle_formula(m, n).subs_t(1) == Q ** (m + n)
        assert m_triangle_formula(m, n).subs_q(1) == ONE


def test_m_triangle_interval_matches_brute():
    assert m_triangle_interval(0, 0) == ONE
    for m in range(4):
        for n in range(4):
            assert m_triangle_interval(m, n) == m_triangle_brute(m, n)


def test_m_triangle_composition_sum_matches():
    assert m_triangle_composition_sum(0, 0) == ONE
    assert m_triangle_composition_sum(1, 1) == m_triangle_brute(1, 1)
    assert m_triangle_composition_sum(2, 3) == m_triangle_formula(2, 3)
    for m in range(5):
        for n in range(5):
            assert m_triangle_composition_sum(m, n) == m_triangle_formula(m, n)


def test_m_series_coefficients():
    series = m_series(5, 5)
    assert series.coefficient(0, 0) == ONE
    for m in range(6):
        assert series.coefficient(m, 0) == CORE**m
        assert series.coefficient(0, m) == CORE**m
    assert series.coefficient(1, 1) == M11
    for m in range(6):
        for n in range(6):
            assert series.coefficient(m, n) == m_triangle_formula(m, n)


def test_series_cross_term_adjudication():
    verdicts = adjudicate_series_cross_term()
    assert verdicts[CROSS_TERM_Q_MINUS_1] is True
    assert verdicts[CROSS_TERM_Q_PLUS_1] is False


def test_h_triangle_examples():
    assert h_triangle_brute(0, 0) == ONE
    expected = (Q * T + 1) ** 2 + Q
    assert h_triangle_brute(1, 1) == expected
    assert h_triangle_formula(1, 1) == expected
    for m in range(5):
        assert h_triangle_formula(m, 0) == (Q * T + 1) ** m
    assert h_triangle_formula(1, 2).evaluate(1, 1) == 12


def test_h_triangle_counts_words():
    for m, n in ((1, 2), (2, 2), (3, 1)):
        assert h_triangle_brute(m, n).evaluate(1, 1) == shuffle_word_count(m, n)


def test_h_triangle_methods_agree():
    for m in range(4):
        for n in range(4):
            assert h_triangle_brute(m, n) == h_triangle_formula(m, n)


def test_h_rank_generating_specialization():
    for m, n in ((2, 2), (1, 3), (3, 2)):
        assert h_triangle_brute(m, n).subs_t(1) == rank_generating_poly(m, n)


def test_triangle_symmetry():
    for m, n in ((1, 2), (0, 3), (2, 3)):
        assert m_triangle_formula(m, n) == m_triangle_formula(n, m)
        assert h_triangle_formula(m, n) == h_triangle_formula(n, m)
        assert char_poly_formula(m, n) == char_poly_formula(n, m)
    assert m_triangle_brute(1, 2) == m_triangle_brute(2, 1)


def test_brute_size_cap():
    assert shuffle_word_count(5, 5) > 4000
    with pytest.raises(SizeLimitExceeded):
        m_triangle_brute(5, 5)
    with pytest.raises(SizeLimitExceeded):
        h_triangle_brute(5, 5)
    with pytest.raises(SizeLimitExceeded):
        m_triangle_interval(5, 5)
    assert m_triangle_interval(5, 5, size_cap=20000) == m_triangle_formula(5, 5)


def test_compute_dispatch():
    result = compute("mtriangle", 1, 1, "series")
    assert result.value == M11
    assert result.kind == "mtriangle" and result.method == "series"
    assert compute("htriangle", 2, 1, "brute").value == h_triangle_formula(2, 1)
    assert compute("chpoly", 2, 2, "brute").value == char_poly_formula(2, 2)
    with pytest.raises(ValueError):
        compute("mtriangle", 1, 1, "nope")
    with pytest.raises(ValueError):
        compute("unknown", 1, 1, "brute")

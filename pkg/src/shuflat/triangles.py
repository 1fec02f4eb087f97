"""Characteristic polynomials, M-triangles, and H-triangles of shuffle
lattices, each computed by independent routes that cross-validate.

For a graded poset with a unique minimum, the reverse characteristic
polynomial is the sum of mu(min, v) q^rank(v) over all v, and the
M-triangle is the bivariate refinement sum of mu(u, v) q^rank(u)
t^rank(v) over all comparable pairs.  The H-triangle is the census of
q^in(u) t^in_indel(u) over all words, where the exponents count bubble
lower covers (total and of indel kind).

Routes implemented:

* brute force over the lattice (Mobius recursion, cover census);
* the interval decomposition: M(q,t) = sum over words u of
  (qt)^rank(u) times the product of factor characteristic polynomials
  in t given by the interval shape of u;
* closed formulas: ch(q) = sum_a C(m,a) C(n,a) (-q)^a (1-q)^(m+n-a),
  M(q,t) = sum_a C(m,a) C(n,a) t^a (1-t)^a (q-1)^a (qt-t+1)^(m+n-2a),
  H(q,t) = sum_a C(m,a) C(n,a) q^a (qt+1)^(m+n-2a);
* a composition-grouped double sum for M (via binomial identities);
* coefficient extraction from the rational generating function
  1 / ((1 - x(qt-t+1))(1 - y(qt-t+1)) - t(1-t)(q-1)xy).

The denominator's cross term is easy to get wrong by a sign slip when
moving between the plain and negated variable conventions;
``adjudicate_series_cross_term`` confirms against the brute-force
oracle that -t(1-t)(q-1)xy is the correct term and that the
tempting +t(1-t)(q+1)xy variant is not.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import comb

from .lattices import build_shuffle_lattice, degree_statistics
from .poset import NoBottom, Poset
from .polyalg import ONE, Q, T, BivarPoly, TruncatedSeries2, series_reciprocal
from .words import (
    SizeLimitExceeded,
    enumerate_shuffle_words,
    interval_shape,
    rank,
    shuffle_word_count,
)

#: Brute-force routes refuse lattices larger than this unless forced.
BRUTE_SIZE_CAP = 4000

CROSS_TERM_Q_MINUS_1 = "q_minus_1"  # cross term -t(1-t)(q-1)xy
CROSS_TERM_Q_PLUS_1 = "q_plus_1"  # cross term +t(1-t)(q+1)xy

M_METHODS = ("brute", "interval", "formula", "compsum", "series")
H_METHODS = ("brute", "formula")
CH_METHODS = ("brute", "formula")


@dataclass(frozen=True)
class TriangleResult:
    m: int
    n: int
    kind: str  # 'chpoly' | 'mtriangle' | 'htriangle'
    method: str
    value: BivarPoly


def _check_brute_cap(m, n, size_cap):
    predicted = shuffle_word_count(m, n)
    if predicted > size_cap:
        raise SizeLimitExceeded(predicted, size_cap)


# -- reverse characteristic polynomial --------------------------------


def char_poly_brute(p: Poset) -> BivarPoly:
    """sum of mu(bottom, v) q^rank(v); requires a unique minimum."""
    if p.bottom is None:
        raise NoBottom("characteristic polynomial needs a unique minimum")
    terms = {}
    for v, mu in p._mobius_row(p.bottom):
        key = (p.rank_of(v), 0)
        terms[key] = terms.get(key, 0) + mu
    return BivarPoly(terms)


def char_poly_formula(m: int, n: int) -> BivarPoly:
    """Closed form sum_a C(m,a) C(n,a) (-q)^a (1-q)^(m+n-a)."""
    one_minus_q = ONE - Q
    acc = BivarPoly()
    for a in range(min(m, n) + 1):
        c = comb(m, a) * comb(n, a)
        acc = acc + c * (-Q) ** a * one_minus_q ** (m + n - a)
    return acc


# -- M-triangle --------------------------------------------------------


def m_triangle_brute(m, n, size_cap=BRUTE_SIZE_CAP) -> BivarPoly:
    """Mobius sum over all comparable pairs of the shuffle lattice."""
    _check_brute_cap(m, n, size_cap)
    p = build_shuffle_lattice(m, n)
    size = m + n + 1
    coeff = [[0] * size for _ in range(size)]
    for a in range(p.n):
        row = coeff[p.rank_of(a)]
        for v, mu in p._mobius_row(a):
            row[p.rank_of(v)] += mu
    return BivarPoly(
        {
            (i, j): coeff[i][j]
            for i in range(size)
            for j in range(size)
            if coeff[i][j]
        }
    )


def m_triangle_interval(m, n, size_cap=BRUTE_SIZE_CAP) -> BivarPoly:
    """M-triangle via the interval decomposition of [u, top].

    Each word u contributes (qt)^rank(u) times the product, over its
    interval shape, of factor characteristic polynomials evaluated in t.
    """
    _check_brute_cap(m, n, size_cap)
    qt = Q * T
    factor_cache = {}

    def factor(e, l):
        poly = factor_cache.get((e, l))
        if poly is None:
            poly = char_poly_formula(e, l).swap_vars()
            factor_cache[(e, l)] = poly
        return poly

    acc = BivarPoly()
    for u in enumerate_shuffle_words(m, n, size_cap):
        shape = interval_shape(u, m, n)
        term = qt ** rank(u, m)
        for e, l in zip(shape.x_blocks, shape.y_gaps):
            term = term * factor(e, l)
        acc = acc + term
    return acc


def m_triangle_formula(m: int, n: int) -> BivarPoly:
    """Closed form sum_a C(m,a) C(n,a) t^a (1-t)^a (q-1)^a (qt-t+1)^(m+n-2a)."""
    core = Q * T - T + 1
    cross = T * (ONE - T) * (Q - 1)
    acc = BivarPoly()
    for a in range(min(m, n) + 1):
        c = comb(m, a) * comb(n, a)
        acc = acc + c * cross**a * core ** (m + n - 2 * a)
    return acc


def m_triangle_composition_sum(m: int, n: int) -> BivarPoly:
    """M-triangle from the composition-grouped double sum.

    Builds N(q,t) = sum over j <= m, k <= n of
    C(n,k) C(m,j) (qt)^(k+j) (t+1)^(n-k) *
    sum_l C(m-j+k, l+k) C(n+l, l) t^l,
    which equals the M-triangle with both variables negated; the result
    is recovered by negating them back.
    """
    qt = Q * T
    t_plus_1 = T + 1
    acc = BivarPoly()
    for j in range(m + 1):
        for k in range(n + 1):
            inner = BivarPoly(
                {
                    (0, l): comb(m - j + k, l + k) * comb(n + l, l)
                    for l in range(m - j + 1)
                }
            )
            if inner.is_zero():
                continue
            c = comb(n, k) * comb(m, j)
            acc = acc + c * qt ** (k + j) * t_plus_1 ** (n - k) * inner
    return acc.negate_vars()


def series_denominator_terms(cross_term=CROSS_TERM_Q_MINUS_1):
    """Sparse (x,y)-term map of the generating-function denominator.

    With A = qt - t + 1 the denominator is (1 - xA)(1 - yA) + cross*xy,
    where the cross term is -t(1-t)(q-1) or +t(1-t)(q+1) depending on
    the requested rendering.
    """
    core = Q * T - T + 1
    if cross_term == CROSS_TERM_Q_MINUS_1:
        cross = -(T * (ONE - T) * (Q - 1))
    elif cross_term == CROSS_TERM_Q_PLUS_1:
        cross = T * (ONE - T) * (Q + 1)
    else:
        raise ValueError(f"unknown cross term variant {cross_term!r}")
    return {
        (0, 0): ONE,
        (1, 0): -core,
        (0, 1): -core,
        (1, 1): core * core + cross,
    }


def m_series(max_m, max_n, cross_term=CROSS_TERM_Q_MINUS_1) -> TruncatedSeries2:
    """Truncated series whose (m, n) coefficient is the M-triangle of
    Shuf(m, n), extracted from the rational generating function."""
    return series_reciprocal(series_denominator_terms(cross_term), max_m, max_n)


def adjudicate_series_cross_term(max_m=2, max_n=2):
    """Which denominator cross term reproduces the brute-force M-triangle.

    Returns {variant: bool} after comparing every series coefficient up
    to (max_m, max_n) with m_triangle_brute.
    """
    brute = {
        (i, j): m_triangle_brute(i, j)
        for i in range(max_m + 1)
        for j in range(max_n + 1)
    }
    verdicts = {}
    for variant in (CROSS_TERM_Q_MINUS_1, CROSS_TERM_Q_PLUS_1):
        series = m_series(max_m, max_n, variant)
        verdicts[variant] = all(
            series.coefficient(i, j) == brute[(i, j)]
            for i in range(max_m + 1)
            for j in range(max_n + 1)
        )
    return verdicts


# -- H-triangle --------------------------------------------------------


def h_triangle_brute(m, n, size_cap=BRUTE_SIZE_CAP) -> BivarPoly:
    """Census sum of q^in(u) t^in_indel(u) over the bubble covers."""
    _check_brute_cap(m, n, size_cap)
    terms = {}
    for triple in degree_statistics(m, n, size_cap).values():
        key = (triple.in_total, triple.in_indel)
        terms[key] = terms.get(key, 0) + 1
    return BivarPoly(terms)


def h_triangle_formula(m: int, n: int) -> BivarPoly:
    """Closed form sum_a C(m,a) C(n,a) q^a (qt+1)^(m+n-2a)."""
    core = Q * T + 1
    acc = BivarPoly()
    for a in range(min(m, n) + 1):
        c = comb(m, a) * comb(n, a)
        acc = acc + c * Q**a * core ** (m + n - 2 * a)
    return acc


def rank_generating_poly(m, n, size_cap=BRUTE_SIZE_CAP) -> BivarPoly:
    """sum of q^rank(u) over all shuffle words."""
    _check_brute_cap(m, n, size_cap)
    terms = {}
    for u in enumerate_shuffle_words(m, n, size_cap):
        key = (rank(u, m), 0)
        terms[key] = terms.get(key, 0) + 1
    return BivarPoly(terms)


# -- dispatch ----------------------------------------------------------


def compute(kind, m, n, method, size_cap=BRUTE_SIZE_CAP) -> TriangleResult:
    """Uniform entry point used by the command line front end."""
    if kind == "mtriangle":
        if method == "brute":
            value = m_triangle_brute(m, n, size_cap)
        elif method == "interval":
            value = m_triangle_interval(m, n, size_cap)
        elif method == "formula":
            value = m_triangle_formula(m, n)
        elif method == "compsum":
            value = m_triangle_composition_sum(m, n)
        elif method == "series":
            value = m_series(m, n).coefficient(m, n)
        else:
            raise ValueError(f"unknown mtriangle method {method!r}")
    elif kind == "htriangle":
        if method == "brute":
            value = h_triangle_brute(m, n, size_cap)
        elif method == "formula":
            value = h_triangle_formula(m, n)
        else:
            raise ValueError(f"unknown htriangle method {method!r}")
    elif kind == "chpoly":
        if method == "brute":
            _check_brute_cap(m, n, size_cap)
            value = char_poly_brute(build_shuffle_lattice(m, n))
        elif method == "formula":
            value = char_poly_formula(m, n)
        else:
            raise ValueError(f"unknown chpoly method {method!r}")
    else:
        raise ValueError(f"unknown kind {kind!r}")
    return TriangleResult(m, n, kind, method, value)

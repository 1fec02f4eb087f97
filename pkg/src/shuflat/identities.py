"""Binomial-composition identities and the relations between triangles.

The central identity equates a sum over pairs of weak compositions
(eta into k+1 parts summing to m, lambda into k+1 parts summing to n)
of products of the factors

    sum_a C(lambda_i, a) C(eta_i, a) t^a (t+1)^(eta_i - a)

with the closed form C(n+k, k) sum_l C(m+k, l+k) C(n+k+l, l) t^l.
Both sides are computed independently here, together with the
Vandermonde rewrite of the factor and the three-binomial sum that the
double-counting proof reduces to.

The two substitution relations tie the triangles together:

    M(q,t)  = (1-t)^(m+n) H(t(q-1)/(1-t), q/(q-1))
    ch(q)   = q^(m+n) H((q-1)/q, (1-2q)/(q-1))

Both sides are polynomials of degree at most m+n in each variable, so
exact agreement on an integer grid of (m+n+1) values per variable,
chosen to avoid the excluded points q in {0, 1} and t = 1, settles each
identity; no symbolic rational-function arithmetic is needed.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import comb

from . import triangles
from .polyalg import ONE, Q, T, BivarPoly


def compositions(total, parts):
    """All weak compositions of ``total`` into ``parts`` parts, in
    reverse-lexicographic order (first part descending)."""
    if parts < 1:
        raise ValueError("parts must be >= 1")
    if parts == 1:
        return [(total,)]
    out = []
    for first in range(total, -1, -1):
        for rest in compositions(total - first, parts - 1):
            out.append((first,) + rest)
    return out


@lru_cache(maxsize=None)
def _factor(eta_i, lambda_i):
    # sum_a C(lambda_i, a) C(eta_i, a) t^a (t+1)^(eta_i - a)
    acc = BivarPoly()
    for a in range(min(eta_i, lambda_i) + 1):
        c = comb(lambda_i, a) * comb(eta_i, a)
        acc = acc + c * T**a * (T + 1) ** (eta_i - a)
    return acc


@lru_cache(maxsize=None)
def _factor_full_exponent(eta_i, lambda_i):
    # same factor with the exponent (t+1)^(eta_i + lambda_i - a)
    acc = BivarPoly()
    for a in range(min(eta_i, lambda_i) + 1):
        c = comb(lambda_i, a) * comb(eta_i, a)
        acc = acc + c * T**a * (T + 1) ** (eta_i + lambda_i - a)
    return acc


def _composition_product_sum(m, n, k, factor):
    acc = BivarPoly()
    for eta in compositions(m, k + 1):
        for lam in compositions(n, k + 1):
            term = ONE
            for e, l in zip(eta, lam):
                term = term * factor(e, l)
            acc = acc + term
    return acc


def inner_sum_lhs(m, n, k) -> BivarPoly:
    """Composition-pair sum of factor products (polynomial in t)."""
    return _composition_product_sum(m, n, k, _factor)


def inner_sum_lhs_full_exponent(m, n, k) -> BivarPoly:
    """Same sum with the (t+1)^(eta_i + lambda_i - a) factor variant."""
    return _composition_product_sum(m, n, k, _factor_full_exponent)


def inner_sum_rhs(m, n, k) -> BivarPoly:
    """Closed form C(n+k,k) sum_l C(m+k, l+k) C(n+k+l, l) t^l."""
    inner = BivarPoly(
        {(0, l): comb(m + k, l + k) * comb(n + k + l, l) for l in range(m + 1)}
    )
    return comb(n + k, k) * inner


def vandermonde_step(eta_i, lambda_i):
    """The factor written both ways; returns (sum form, rewritten form).

    The rewrite expands (t+1)^(eta_i - a) and collects powers of t:
    sum_j C(eta_i, eta_i - j) C(lambda_i + j, j) t^j.
    """
    lhs = _factor(eta_i, lambda_i)
    rhs = BivarPoly(
        {
            (0, j): comb(eta_i, eta_i - j) * comb(lambda_i + j, j)
            for j in range(eta_i + 1)
        }
    )
    return lhs, rhs


def r_sum_sides(m, n, k, l):
    """Both sides of sum_r C(n,r) C(m+k, r+k) C(m-r, l-r) =
    C(m+k, l+k) C(n+k+l, l), as plain integers."""
    lhs = sum(
        comb(n, r) * comb(m + k, r + k) * comb(m - r, l - r)
        for r in range(min(n, l) + 1)
    )
    rhs = comb(m + k, l + k) * comb(n + k + l, l)
    return lhs, rhs


@dataclass(frozen=True)
class IdentityVerdict:
    """Outcome of one identity check; lhs/rhs carry evidence on failure."""

    name: str
    params: tuple
    passed: bool
    lhs: object = None
    rhs: object = None
    detail: str = ""

    def to_json(self):
        return {
            "name": self.name,
            "params": list(self.params),
            "passed": self.passed,
            "lhs": None if self.lhs is None else str(self.lhs),
            "rhs": None if self.rhs is None else str(self.rhs),
            "detail": self.detail,
        }


def _verdict(name, params, lhs, rhs, detail=""):
    if lhs == rhs:
        return IdentityVerdict(name, params, True, detail=detail)
    return IdentityVerdict(name, params, False, lhs, rhs, detail)


def verify_h_to_m(m, n) -> IdentityVerdict:
    """Grid check of M(q,t) = (1-t)^(m+n) H(t(q-1)/(1-t), q/(q-1))."""
    m_poly = triangles.m_triangle_formula(m, n)
    h_poly = triangles.h_triangle_formula(m, n)
    degree = m + n
    for q0 in range(2, degree + 3):
        for t0 in range(2, degree + 3):
            lhs = m_poly.evaluate(q0, t0)
            q_arg = Fraction(t0 * (q0 - 1), 1 - t0)
            t_arg = Fraction(q0, q0 - 1)
            rhs = (1 - t0) ** degree * h_poly.evaluate(q_arg, t_arg)
            if lhs != rhs:
                return IdentityVerdict(
                    "h-to-m", (m, n), False, lhs, rhs, f"at q={q0}, t={t0}"
                )
    return IdentityVerdict("h-to-m", (m, n), True)


def verify_char_from_h(m, n) -> IdentityVerdict:
    """Grid check of ch(q) = q^(m+n) H((q-1)/q, (1-2q)/(q-1))."""
    ch_poly = triangles.char_poly_formula(m, n)
    h_poly = triangles.h_triangle_formula(m, n)
    degree = m + n
    for q0 in range(2, degree + 3):
        lhs = ch_poly.evaluate(q0, 0)
        q_arg = Fraction(q0 - 1, q0)
        t_arg = Fraction(1 - 2 * q0, q0 - 1)
        rhs = q0**degree * h_poly.evaluate(q_arg, t_arg)
        if lhs != rhs:
            return IdentityVerdict(
                "char-from-h", (m, n), False, lhs, rhs, f"at q={q0}"
            )
    return IdentityVerdict("char-from-h", (m, n), True)


# -- verification suites ------------------------------------------------


def run_identities_suite(max_m=6, max_n=6, max_k=4):
    """The composition identity on its stated ranges, plus the
    Vandermonde factor rewrite, the three-binomial sum, and the
    prefactor variant."""
    verdicts = []
    for m in range(max_m + 1):
        for n in range(max_n + 1):
            for k in range(max_k + 1):
                verdicts.append(
                    _verdict(
                        "composition-identity",
                        (m, n, k),
                        inner_sum_lhs(m, n, k),
                        inner_sum_rhs(m, n, k),
                    )
                )

    bad = next(
        (
            (e, l)
            for e in range(9)
            for l in range(9)
            if vandermonde_step(e, l)[0] != vandermonde_step(e, l)[1]
        ),
        None,
    )
    if bad is None:
        verdicts.append(IdentityVerdict("vandermonde-factor", (8, 8), True))
    else:
        lhs, rhs = vandermonde_step(*bad)
        verdicts.append(
            IdentityVerdict(
                "vandermonde-factor", (8, 8), False, lhs, rhs, f"at {bad}"
            )
        )

    bad = next(
        (
            (m, n, k, l)
            for m in range(max_m + 1)
            for n in range(max_n + 1)
            for k in range(max_k + 1)
            for l in range(m + 1)
            if r_sum_sides(m, n, k, l)[0] != r_sum_sides(m, n, k, l)[1]
        ),
        None,
    )
    if bad is None:
        verdicts.append(
            IdentityVerdict("three-binomial-sum", (max_m, max_n, max_k), True)
        )
    else:
        lhs, rhs = r_sum_sides(*bad)
        verdicts.append(
            IdentityVerdict(
                "three-binomial-sum",
                (max_m, max_n, max_k),
                False,
                lhs,
                rhs,
                f"at {bad}",
            )
        )

    bad = None
    for m in range(min(max_m, 5) + 1):
        for n in range(min(max_n, 5) + 1):
            for k in range(min(max_k, 3) + 1):
                full = inner_sum_lhs_full_exponent(m, n, k)
                expected = (T + 1) ** n * inner_sum_lhs(m, n, k)
                if full != expected:
                    bad = ((m, n, k), full, expected)
                    break
    if bad is None:
        verdicts.append(IdentityVerdict("prefactor-identity", (5, 5, 3), True))
    else:
        params, lhs, rhs = bad
        verdicts.append(
            IdentityVerdict(
                "prefactor-identity", (5, 5, 3), False, lhs, rhs, f"at {params}"
            )
        )
    return verdicts


def run_relations_suite(max_m=6, max_n=6):
    """Both triangle substitution relations on a grid of parameters."""
    verdicts = []
    for m in range(max_m + 1):
        for n in range(max_n + 1):
            verdicts.append(verify_h_to_m(m, n))
            verdicts.append(verify_char_from_h(m, n))
    return verdicts


def run_methods_suite(max_m=4, max_n=4, series_max=8):
    """Cross-validate every computation route and the specializations."""
    verdicts = []
    for m in range(max_m + 1):
        for n in range(max_n + 1):
            brute = triangles.m_triangle_brute(m, n)
            for method, value in (
                ("interval", triangles.m_triangle_interval(m, n)),
                ("formula", triangles.m_triangle_formula(m, n)),
                ("compsum", triangles.m_triangle_composition_sum(m, n)),
            ):
                verdicts.append(
                    _verdict(f"m-brute-vs-{method}", (m, n), brute, value)
                )
            ch_brute = triangles.compute("chpoly", m, n, "brute").value
            verdicts.append(
                _verdict(
                    "ch-brute-vs-formula",
                    (m, n),
                    ch_brute,
                    triangles.char_poly_formula(m, n),
                )
            )
            h_brute = triangles.h_triangle_brute(m, n)
            verdicts.append(
                _verdict(
                    "h-brute-vs-formula",
                    (m, n),
                    h_brute,
                    triangles.h_triangle_formula(m, n),
                )
            )
            verdicts.append(
                _verdict(
                    "h-rank-generating",
                    (m, n),
                    h_brute.subs_t(1),
                    triangles.rank_generating_poly(m, n),
                )
            )

    series = triangles.m_series(series_max, series_max)
    bad = next(
        (
            (m, n)
            for m in range(series_max + 1)
            for n in range(series_max + 1)
            if series.coefficient(m, n) != triangles.m_triangle_formula(m, n)
        ),
        None,
    )
    if bad is None:
        verdicts.append(
            IdentityVerdict("series-vs-formula", (series_max, series_max), True)
        )
    else:
        verdicts.append(
            IdentityVerdict(
                "series-vs-formula",
                (series_max, series_max),
                False,
                series.coefficient(*bad),
                triangles.m_triangle_formula(*bad),
                f"at {bad}",
            )
        )

    bad = None
    core = Q * T - T + 1
    for m in range(series_max + 1):
        for n in range(series_max + 1):
            poly = triangles.m_triangle_formula(m, n)
            checks = [
                (poly.subs_q(1), BivarPoly.constant(1), "M(1,t)"),
                (poly.subs_t(1), Q ** (m + n), "M(q,1)"),
            ]
            if n == 0:
                checks.append((poly, core**m, "M(q,t) at n=0"))
            if m + n >= 1:
                checks.append(
                    (
                        triangles.char_poly_formula(m, n).subs_q(1),
                        BivarPoly(),
                        "ch(1)",
                    )
                )
            for lhs, rhs, label in checks:
                if lhs != rhs:
                    bad = ((m, n), lhs, rhs, label)
                    break
    if bad is None:
        verdicts.append(
            IdentityVerdict("specializations", (series_max, series_max), True)
        )
    else:
        params, lhs, rhs, label = bad
        verdicts.append(
            IdentityVerdict(
                "specializations",
                (series_max, series_max),
                False,
                lhs,
                rhs,
                f"{label} at {params}",
            )
        )

    adjudication = triangles.adjudicate_series_cross_term()
    verdicts.append(
        IdentityVerdict(
            "series-cross-term-adjudication",
            (2, 2),
            adjudication[triangles.CROSS_TERM_Q_MINUS_1]
            and not adjudication[triangles.CROSS_TERM_Q_PLUS_1],
            detail=cross_term_note(adjudication),
        )
    )
    return verdicts


def cross_term_note(adjudication=None) -> str:
    """Human sentence stating which denominator cross term is the real one."""
    if adjudication is None:
        adjudication = triangles.adjudicate_series_cross_term()
    minus = adjudication[triangles.CROSS_TERM_Q_MINUS_1]
    plus = adjudication[triangles.CROSS_TERM_Q_PLUS_1]
    return (
        f"generating-function denominator cross term: -t(1-t)(q-1)xy matches "
        f"the brute-force M-triangle: {minus}; +t(1-t)(q+1)xy matches: {plus}"
    )


SUITES = {
    "identities": run_identities_suite,
    "relations": run_relations_suite,
    "methods": run_methods_suite,
}


def run_suites(names, max_m=None, max_n=None, series_max=8):
    """Run the named suites; returns (verdicts, notes).

    Default parameter bounds: brute-force comparisons up to (4, 4),
    formula and grid checks up to (6, 6), series extraction up to (8, 8).
    """
    verdicts = []
    notes = []
    for name in names:
        if name == "identities":
            verdicts.extend(
                run_identities_suite(
                    6 if max_m is None else max_m, 6 if max_n is None else max_n
                )
            )
        elif name == "relations":
            verdicts.extend(
                run_relations_suite(
                    6 if max_m is None else max_m, 6 if max_n is None else max_n
                )
            )
        elif name == "methods":
            produced = run_methods_suite(
                4 if max_m is None else max_m,
                4 if max_n is None else max_n,
                series_max,
            )
            verdicts.extend(produced)
            for v in produced:
                if v.name == "series-cross-term-adjudication":
                    notes.append(v.detail)
        else:
            raise ValueError(f"unknown suite {name!r}")
    return verdicts, notes

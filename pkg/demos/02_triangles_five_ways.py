#!/usr/bin/env python3
# The M-triangle of a shuffle lattice computed by five independent
# routes, plus the H-triangle and the characteristic polynomial.

from shuflat import build_shuffle_lattice
from shuflat.triangles import (
    char_poly_brute,
    char_poly_formula,
    h_triangle_brute,
    h_triangle_formula,
    m_series,
    m_triangle_brute,
    m_triangle_composition_sum,
    m_triangle_formula,
    m_triangle_interval,
)

m, n = 2, 2

routes = {
    "brute Mobius sum over pairs": m_triangle_brute(m, n),
    "interval decomposition": m_triangle_interval(m, n),
    "closed formula": m_triangle_formula(m, n),
    "composition-grouped sum": m_triangle_composition_sum(m, n),
    "series coefficient": m_series(m, n).coefficient(m, n),
}

print(f"M-triangle of Shuf({m},{n}) by five routes:")
for name, value in routes.items():
    print(f"  {name:30s} {value}")
assert len({str(v) for v in routes.values()}) == 1
print("all five agree exactly\n")

# Margin specializations: t = 1 telescopes the Mobius sums to q^(m+n),
# q = 1 collapses everything to 1.
poly = m_triangle_formula(m, n)
print("M(q, 1) =", poly.subs_t(1))
print("M(1, t) =", poly.subs_q(1))

# The H-triangle counts bubble lower covers; at q = t = 1 it counts words.
print(f"\nH-triangle of Bub({m},{n}):")
print("  census :", h_triangle_brute(m, n))
print("  formula:", h_triangle_formula(m, n))
print("  H(1,1) =", h_triangle_formula(m, n).evaluate(1, 1), "words")

# The reverse characteristic polynomial, brute and closed form.
print(f"\nreverse characteristic polynomial of Shuf({m},{n}):")
print("  brute  :", char_poly_brute(build_shuffle_lattice(m, n)))
print("  formula:", char_poly_formula(m, n))
print("  value at q=1:", char_poly_formula(m, n).evaluate(1, 0))

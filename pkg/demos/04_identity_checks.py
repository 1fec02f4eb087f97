#!/usr/bin/env python3
# Exact verification of the composition identity and of the
# substitution relations between the triangles.

from fractions import Fraction

from shuflat.identities import (
    compositions,
    inner_sum_lhs,
    inner_sum_rhs,
    r_sum_sides,
    vandermonde_step,
    verify_char_from_h,
    verify_h_to_m,
)
from shuflat.triangles import h_triangle_formula, m_triangle_formula

# Weak compositions are the summation index of the identity's hard side.
print("weak compositions of 4 into 3 parts:", len(compositions(4, 3)))
print("first few:", compositions(4, 3)[:4])

# The identity: a sum over pairs of compositions of products of small
# binomial factors collapses to a single closed form.
m, n, k = 4, 3, 2
lhs = inner_sum_lhs(m, n, k)
rhs = inner_sum_rhs(m, n, k)
print(f"\ncomposition identity at (m,n,k)=({m},{n},{k}):")
print("  sum over composition pairs:", lhs)
print("  closed form              :", rhs)
print("  equal:", lhs == rhs)

# Its two sub-steps: the Vandermonde rewrite of one factor, and the
# three-binomial sum the double count reduces to.
f_lhs, f_rhs = vandermonde_step(3, 2)
print("\nVandermonde factor rewrite at (3,2):", f_lhs == f_rhs, "->", f_lhs)
s_lhs, s_rhs = r_sum_sides(5, 4, 2, 3)
print("three-binomial sum at (5,4,2,3):", s_lhs, "=", s_rhs)

# Substitution relations: both sides are polynomials of degree at most
# m+n per variable, so exact agreement on an integer grid that avoids
# the excluded points settles them conclusively.
print("\nsubstitution relations:")
for mm, nn in ((2, 2), (3, 1), (4, 3)):
    a = verify_h_to_m(mm, nn)
    b = verify_char_from_h(mm, nn)
    print(f"  (m,n)=({mm},{nn}): M from H: {a.passed}, ch from H: {b.passed}")

# One grid point of the first relation, worked in the open:
mm, nn, q0, t0 = 2, 1, 3, 2
m_val = m_triangle_formula(mm, nn).evaluate(q0, t0)
h_val = h_triangle_formula(mm, nn).evaluate(
    Fraction(t0 * (q0 - 1), 1 - t0), Fraction(q0, q0 - 1)
)
print(f"\nat (q,t)=({q0},{t0}) with (m,n)=({mm},{nn}):")
print("  M(q,t)                        =", m_val)
print("  (1-t)^(m+n) H(t(q-1)/(1-t), q/(q-1)) =", (1 - t0) ** (mm + nn) * h_val)

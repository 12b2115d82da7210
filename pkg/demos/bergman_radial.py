"""Radial Bergman approximants on the unit disk.

For phi = c log|z| the m-th Bergman approximant psi_m is an explicit
log of a power series, so the classical approximation bounds become
checkable identities instead of abstract estimates.
"""

import math
from fractions import Fraction

from lctkit import (
    RadialWeight,
    build_approx,
    eval_psi_m,
    eval_tail_bound,
    lelong_of_psi_m,
    lower_bound_constant,
    minimal_degree,
)

weight = RadialWeight(Fraction(3, 4))
m = 2
approx = build_approx(weight, m)

# monomials below k_min have divergent weighted norm and drop out
print("k_min =", approx.k_min, " (mc =", weight.c * m, ")")
print("first few pi*sigma_k:", approx.pi_sigma[:4])

# the Lelong number of psi_m is exactly k_min/m, within 1/m of c
print("lelong(psi_m) =", lelong_of_psi_m(approx), " vs c =", weight.c)
print("gap <= 1/m:", abs(Fraction(approx.k_min, m) - weight.c) <= Fraction(1, m))

# pointwise: psi_m never falls more than C1/m below the weight itself
c1 = lower_bound_constant(approx)
print(f"C1 = {c1:.6f}")
for z in (0.2, 0.5, 0.9):
    psi = eval_psi_m(approx, z)
    phi = float(weight.c) * math.log(z)
    print(f"  z={z}: psi_m={psi:+.6f}  phi={phi:+.6f}  phi - C1/m={phi - c1 / m:+.6f}")

# truncating the series at k_max costs less than the printed tail bound
coarse = build_approx(weight, m, k_max=minimal_degree(weight, m) + 8)
fine = build_approx(weight, m, k_max=minimal_degree(weight, m) + 200)
z = 0.9
print("truncation at z=0.9:",
      f"coarse {eval_psi_m(coarse, z):.8f}",
      f"fine {eval_psi_m(fine, z):.8f}",
      f"bound {eval_tail_bound(coarse, z):.8f}")

# sanity: the unweighted case sums a geometric-type series in closed form
flat = build_approx(RadialWeight(Fraction(0)), 1)
x = 0.25
closed = 0.5 * math.log(1.0 / (math.pi * (1.0 - x) ** 2))
print("unweighted psi_1 at |z|=0.5:", eval_psi_m(flat, 0.5), "closed form:", closed)

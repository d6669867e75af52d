# The support-point families behind the closed-form designs.
#
# All optimal supports are extremal points of equioscillating polynomials:
# Chebyshev polynomials of the first kind for odd coefficient indices, and
# an even composed polynomial for even indices. This script shows the
# three families and the equioscillation that makes them work.

import numpy as np

from polydesign import chebyshev_t, e_polynomial, s_points, t_points, x_points

np.set_printoptions(precision=6, suppress=True)

k = 2
s = s_points(k)   # 2k extrema of the degree-(2k-1) Chebyshev polynomial
x = x_points(k)   # 2k+2 extrema of the degree-(2k+1) Chebyshev polynomial
t = t_points(k)   # 2k extrema of the even degree-2k polynomial

print(f"k = {k}")
print("S family:", s.points)
print("X family:", x.points)
print("T family:", t.points, "(inner points are +-sqrt(sqrt(2) - 1))")
print()

# Values at the family points alternate between +1 and -1:
t3 = chebyshev_t(2 * k - 1)
t5 = chebyshev_t(2 * k + 1)
e4 = e_polynomial(k)
print("T3 at S family:", np.round(t3(s.points), 12))
print("T5 at X family:", np.round(t5(x.points), 12))
print("E4 at T family:", np.round(e4(t.points), 12), "(pairs across the center)")
print()

# The even polynomial is a Chebyshev polynomial composed with a quadratic
# that maps [-1, 1] onto the interval where the oscillation happens:
print("E4 coefficients:", e4.coeffs)
print("equioscillation bound on a dense grid:",
      np.abs(e4(np.linspace(-1, 1, 100001))).max())
print()

# Families are exactly symmetric (the negative half is a mirrored copy)
# and always contain the endpoints:
for fam, name in ((s, "S"), (x, "X"), (t, "T")):
    mirrored = np.all(fam.points + fam.points[::-1] == 0.0)
    print(f"{name}: endpoints ({fam.points[0]}, {fam.points[-1]}), exact mirror symmetry: {mirrored}")

# Cross-checking the closed forms against a linear-programming oracle.
#
# The optimal variance equals 1/t**2 where t is the largest scaling with
# t * e_p inside the convex hull of {+-f(x)}. On a finite grid that is a
# plain LP, solved here with an entirely different code path than the
# closed-form solver, so agreement is strong evidence both are right.

import math

import numpy as np

from polydesign import DesignProblem, elfving_lp, oracle_variance, solve

problem = DesignProblem(n=4, p=2)
result = solve(problem)
print(f"solver variance for degree 4, coefficient 2: {result.variance:.12f}")
print(f"(exactly 12 + 8 sqrt(2) = {12 + 8 * math.sqrt(2):.12f})")
print()

# With the solver's support included in the grid the LP lands on the
# continuous optimum; restricted to a pure uniform grid it can only be
# larger, and tightens as the grid refines.
included = oracle_variance(problem, grid_size=2001, include_solver_support=True)
print(f"LP with support in grid:   {included:.12f}   gap {included - result.variance:+.2e}")
for size in (101, 1001, 10001):
    free = oracle_variance(problem, grid_size=size, include_solver_support=False)
    print(f"LP on uniform grid {size:>6}: {free:.12f}   gap {free - result.variance:+.2e}")
print()

# The LP also returns the design it found and a dual certificate vector u
# with |u . f(x)| <= 1 on the grid -- the same geometry the closed-form
# certificate lives in.
grid = np.union1d(np.linspace(-1, 1, 2001), result.designs[0].support)
lp = elfving_lp(problem, grid)
print("LP design support:", np.round(lp.design.support, 6))
print("LP design weights:", np.round(lp.design.weights, 6))
print("dual certificate highest coefficient:", round(lp.dual[-1], 6))
print("certificate from the solver:         ", round(result.certificate.coeffs[-1], 6))

"""Tour of rank-1 lattice point sets and their transforms.

A rank-1 rule places N points at the fractional parts of n z / N.  The tent
map folds them into a symmetric configuration; symmetrization reflects them
across every coordinate.  Both transforms keep all coordinates on the exact
grid i/N, which this library exploits to count points and test dual-lattice
membership in integer arithmetic.
"""

import numpy as np

from latticeqmc import (
    LatticeRule,
    character_sum,
    distinct_count,
    dual_projected,
    fibonacci_rule,
    rank1_points,
    symmetrize,
    tent_transform,
)

rule = LatticeRule(N=5, z=(1, 2))
plain = rank1_points(rule)
print("plain rank-1 points, N=5, z=(1,2):")
print(plain.points)

print("\ntent-transformed (duplicates retained, cardinality preserved):")
print(tent_transform(plain).points)

sym = symmetrize(plain)
print(f"\nsymmetrized multiset: {len(sym)} listed points, "
      f"{distinct_count(sym)} distinct (2^(s-1)(N+1) = {2 * (5 + 1)})")

# The dual lattice indexes the Fourier modes the rule fails to integrate.
print("\ndual vectors with |k_j| <= 4:", dual_projected(rule, [1, 2], 4))
print("character sum at k=(2,-1):", character_sum(rule, (2, -1)),
      " (in the dual: the rule sums this mode to 1, not 0)")
print("character sum at k=(1,0): ", character_sum(rule, (1, 0)))
print("float cross-check        :", round(character_sum(rule, (2, -1), method="float"), 15))

# Fibonacci rules: the classical two-dimensional family used in the
# bivariate convergence study.
fib = fibonacci_rule(10)
print(f"\nFibonacci rule m=10: N={fib.N}, z={fib.z}")

# Everything exports to CSV/JSON with 17 significant digits.
print("\nJSON export of the N=2 set:", rank1_points(LatticeRule(N=2, z=(1,))).to_json())

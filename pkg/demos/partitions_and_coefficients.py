#!/usr/bin/env python3
"""Where the coefficients come from: restricted set partitions.

Every numerator term of a higher-derivative formula is indexed by a set
partition obeying a singleton rule.  This script enumerates the small
cases, maps partitions to monomials, and confirms the counting identities
that make the enumeration unnecessary at scale.

Run: python demos/partitions_and_coefficients.py
"""

from nthderiv import (
    count_implicit_partitions,
    count_parametric_partitions,
    double_factorial,
    enumerate_implicit_partitions,
    enumerate_parametric_partitions,
    i_recur,
    monomial_from_parametric_partition,
    p_recur,
    render_layer,
    render_monomial,
)

BAR = "-" * 72

print(BAR)
print("The third parametric derivative, k = 1: partitions of {1,2,3,4}")
print("into two blocks where only the block containing 1 may be a singleton")
print(BAR)
for p in enumerate_parametric_partitions(3, 1):
    m = monomial_from_parametric_partition(p)
    print("  %-14s ->  %s" % (p, render_monomial(m)))
print("merged layer: %s" % render_layer(p_recur(3, 1)))

print()
print(BAR)
print("The block containing 1 sets the g order; every other block an f order.")
print("Partitions with the same block sizes merge, which is where integer")
print("coefficients like the 3 above come from.")
print(BAR)

print()
print("Parametric coefficient rows (layer sums = partition counts):")
for n in range(1, 7):
    sums = [p_recur(n, k).coefficient_sum() for k in range(n)]
    counts = [count_parametric_partitions(n, k) for k in range(n)]
    assert sums == counts
    print("  n=%d  %s" % (n, sums))

print()
print("Implicit coefficient rows:")
for n in range(1, 6):
    sums = [i_recur(n, k).coefficient_sum() for k in range(1, 2 * n)]
    counts = [count_implicit_partitions(n, k) for k in range(1, 2 * n)]
    assert sums == counts
    print("  n=%d  %s" % (n, sums))

print()
print(BAR)
print("Implicit partitions carry roles: elements up to n are small (x orders),")
print("later ones large (y orders), and large elements never sit alone.")
print(BAR)
for p in enumerate_implicit_partitions(3, 4):
    print("  %s" % p)
print("merged layer: %s" % render_layer(i_recur(3, 4)))

print()
print(BAR)
print("The extreme layers close up: the top layer is a perfect matching")
print("count, the double factorial (2n-3)!!")
print(BAR)
for n in range(2, 9):
    top = p_recur(n, n - 1)
    print("  n=%d  %-22s  (2n-3)!! = %d" % (n, render_layer(top),
                                            double_factorial(2 * n - 3)))

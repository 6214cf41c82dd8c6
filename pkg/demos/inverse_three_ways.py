#!/usr/bin/env python3
"""One result, three derivations: the nth derivative of an inverse
function.

The inverse-function formula drops out of the parametric family (set
g = identity), out of the implicit family (set F(x, y) = f(y) - x), and
out of pure series reversion.  The first two agree exactly as monomial
algebra; the third agrees numerically.

Run: python demos/inverse_three_ways.py
"""

import numpy as np

from nthderiv import (
    Jet,
    ParametricTable,
    eval_parametric,
    inverse_formula,
    inverse_via_implicit,
    render,
    revert,
)

BAR = "-" * 72

print(BAR)
print("Route 1: parametric with g(t) = t -- only g' survives, becomes 1")
print(BAR)
for n in range(1, 6):
    print("d^%d = %s" % (n, render(inverse_formula(n), "text")))

print()
print(BAR)
print("Route 2: implicit with F(x, y) = f(y) - x")
print(BAR)
print("Every mixed partial of F vanishes, F_x = -1, and pure-y partials")
print("are derivatives of f.  Only layers k >= n survive, and re-indexing")
print("by n lands exactly on the parametric grid:")
print()
for n in range(1, 7):
    same = inverse_via_implicit(n) == inverse_formula(n)
    print("  n=%d  inverse_via_implicit == inverse_formula: %s" % (n, same))

print()
print(BAR)
print("Route 3: numeric series reversion, no formula at all")
print(BAR)
rng = np.random.default_rng(3)
f_derivs = [float(rng.uniform(0.5, 2.0))] + [float(v) for v in rng.uniform(-2, 2, 5)]
print("random f derivatives at t0 = 0: %s" % ["%.3f" % v for v in f_derivs])
print()
tbl = ParametricTable(0.0, f_derivs, ())
jet = Jet.from_derivatives(0.0, [0.0] + f_derivs)
inverse_jet = revert(jet).derivatives()
print("  n   layered formula      reverted series")
for n in range(1, 7):
    direct = eval_parametric(inverse_formula(n), tbl)
    print("  %d   % 16.10f   % 16.10f" % (n, direct, inverse_jet[n]))

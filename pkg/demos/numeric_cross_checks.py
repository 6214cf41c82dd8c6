#!/usr/bin/env python3
"""Evaluating formulas at points, and the series routes that double-check
them.

Three concrete curves with known derivatives: y = x^(3/2) built
parametrically, the unit circle built implicitly, and ln x as an inverse
function.  Each value is computed twice: once by plugging raw derivative
values into the layered formula, once from truncated power series that
never see a formula at all.

Run: python demos/numeric_cross_checks.py
"""

from math import factorial

from nthderiv import (
    BivariateJet,
    ImplicitTable,
    Jet,
    ParametricTable,
    eval_implicit,
    eval_parametric,
    implicit_formula,
    implicit_series_oracle,
    inverse_formula,
    parametric_formula,
    revert,
    series_reversion_oracle,
)

BAR = "-" * 72

print(BAR)
print("y = x^(3/2) at x = 1, parametrized as x = t^2, y = t^3 at t = 1")
print(BAR)
tbl = ParametricTable(1.0, (2.0, 2.0, 0.0), (3.0, 6.0, 6.0))
f_jet = Jet.from_derivatives(1.0, [1.0, 2.0, 2.0, 0.0])
g_jet = Jet.from_derivatives(1.0, [1.0, 3.0, 6.0, 6.0])
series = series_reversion_oracle(f_jet, g_jet, 3)
for n in range(1, 4):
    direct = eval_parametric(parametric_formula(n), tbl)
    print("  n=%d  formula % .6f   series % .6f" % (n, direct, series[n - 1]))
print("  (closed form: 3/2, 3/4, -3/8)")

print()
print(BAR)
print("Unit circle x^2 + y^2 = 1 at (0.6, 0.8)")
print(BAR)
partials = {(1, 0): 1.2, (0, 1): 1.6, (2, 0): 2.0, (0, 2): 2.0, (1, 1): 0.0}
circle = ImplicitTable(0.6, 0.8, partials)
F_jet = BivariateJet.from_partials((0.6, 0.8), partials, 2)
series = implicit_series_oracle(F_jet, 2)
for n in (1, 2):
    direct = eval_implicit(implicit_formula(n), circle)
    print("  n=%d  formula % .6f   series % .6f" % (n, direct, series[n - 1]))
print("  (geometry: y' = -x/y = -0.75, y'' = -1/y^3 = -1.953125)")

print()
print(BAR)
print("ln x at x = 1 as the inverse of x = e^y at y = 0")
print(BAR)
tbl = ParametricTable(0.0, (1.0,) * 8, ())
for n in range(1, 9):
    got = eval_parametric(inverse_formula(n), tbl)
    want = (-1) ** (n - 1) * factorial(n - 1)
    flag = "ok" if abs(got - want) < 1e-9 * abs(want) else "MISMATCH"
    print("  n=%d  formula % 10.1f   (-1)^(n-1) (n-1)! = % 6d   %s"
          % (n, got, want, flag))

print()
print(BAR)
print("Series reversion on its own: the sqrt jet from the square jet")
print(BAR)
sq = Jet.from_derivatives(1.0, [1.0, 2.0, 2.0, 0.0, 0.0])
print("  x = t^2 at t=1      derivatives %s" % sq.derivatives())
print("  t = sqrt(x) at x=1  derivatives %s" % revert(sq).derivatives())

#!/usr/bin/env python3
"""A tour of the three formula families and their renderings.

Builds the nth-derivative formulas for parametric curves, implicit
curves, and inverse functions, and shows the same object in text, LaTeX,
and JSON form.

Run: python demos/tour_of_formulas.py
"""

from nthderiv import implicit_formula, inverse_formula, parametric_formula, render

BAR = "-" * 72

print(BAR)
print("Parametric: x = f(t), y = g(t)")
print(BAR)
for n in range(1, 5):
    print("d^%d y/dx^%d = %s" % (n, n, render(parametric_formula(n), "text")))

print()
print("Each formula is a sum of layers indexed by k.  Layer k carries the")
print("sign (-1)^k and the prefactor [f'(t)]^(-n-k); all the combinatorial")
print("content lives in the positive integer coefficients.")
print()

f = parametric_formula(4)
for layer in f.layers:
    print("  k=%d  sign %+d  prefactor exponent %d  coefficients %s"
          % (layer.k, f.sign(layer.k), f.prefactor_exponent(layer.k),
             list(layer.coefficients())))

print()
print(BAR)
print("Implicit: F(x, y) = 0, layers k = 1..2n-1 with prefactor F_y^(-k)")
print(BAR)
for n in (1, 2):
    print("d^%d y/dx^%d = %s" % (n, n, render(implicit_formula(n), "text")))

print()
print(BAR)
print("Inverse: y = f^(-1)(x), the parametric family with g the identity")
print(BAR)
for n in range(1, 4):
    print("d^%d y/dx^%d = %s" % (n, n, render(inverse_formula(n), "text")))

print()
print(BAR)
print("The same second derivative three ways")
print(BAR)
g = parametric_formula(2)
print("text : %s" % render(g, "text"))
print("latex: %s" % render(g, "latex"))
print("json :")
print(render(g, "json"))

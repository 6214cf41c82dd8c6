"""Coefficient layers for the nth derivative of a parametrically defined
function, computed two independent ways, and the assembled formulas.

For x = f(t), y = g(t) the nth derivative is the alternating sum of
layers P(n,k), k = 0..n-1, with prefactor [f'(t)]^(-n-k).  A layer can
be built directly from its defining set partitions, or bottom-up from
the recurrence P(n+1,k) = d/dt P(n,k) + (n+k-1) f'' P(n,k-1); both
routes must agree, which is the core self-check of the engine.
"""

from collections import Counter
from dataclasses import dataclass, replace
from math import comb

from .algebra import (
    INVERSE,
    PARAMETRIC,
    DerivativeFormula,
    FormulaLayer,
    ParametricMonomial,
    monomial_from_parametric_partition,
    normalize,
)
from .partitions import double_factorial, enumerate_parametric_partitions

__all__ = [
    "p_enum",
    "p_recur",
    "d_dt",
    "parametric_formula",
    "closed_form_check",
    "ClosedFormReport",
    "inverse_formula",
]


def p_enum(n, k):
    """The layer P(n,k) built directly from its definition: one unit
    monomial per admissible partition of {1..n+k}, merged.  Zero layer
    when k is out of range.

    >>> from .algebra import render_layer
    >>> render_layer(p_enum(4, 1))
    "6 g'''f'' + 4 g''f''' + g'f''''"
    """
    if n < 1:
        raise ValueError("n must be >= 1")
    monos = normalize(monomial_from_parametric_partition(p)
                      for p in enumerate_parametric_partitions(n, k))
    return FormulaLayer(k, monos)


def d_dt(layer):
    """One t-derivative of a layer by the product rule: every monomial
    spawns one copy per distinct factor (g included) with that factor's
    order raised and the coefficient scaled by the factor's multiplicity.
    The result is not normalized; callers merge it themselves.
    """
    out = []
    for m in layer.monomials:
        if m.g_order:
            out.append(replace(m, g_order=m.g_order + 1))
        for j, mult in Counter(m.f_orders).items():
            raised = list(m.f_orders)
            raised.remove(j)
            raised.append(j + 1)
            out.append(ParametricMonomial(m.coefficient * mult, m.g_order, raised))
    return out


_rows = {1: (FormulaLayer(0, (ParametricMonomial(1, 1, ()),)),)}


def _recur_row(n):
    # cached rows, grown iteratively; row n holds layers k = 0..n-1
    while (top := max(_rows)) < n:
        prev = _rows[top]
        row = []
        for k in range(top + 1):
            terms = []
            if k < top:
                terms.extend(d_dt(prev[k]))
            if 1 <= k <= top:
                for m in prev[k - 1].monomials:
                    terms.append(ParametricMonomial(m.coefficient * (top + k - 1),
                                                    m.g_order, m.f_orders + (2,)))
            row.append(FormulaLayer(k, normalize(terms)))
        _rows[top + 1] = tuple(row)
    return _rows[n]


def p_recur(n, k):
    """The layer P(n,k) from the recurrence
    P(n+1,k) = d/dt P(n,k) + (n+k-1) f'' P(n,k-1), base P(1,0) = g'.

    >>> from .algebra import render_layer
    >>> render_layer(p_recur(4, 3))
    "15 g'(f'')^3"
    >>> render_layer(p_recur(5, 7))
    '0'
    """
    if n < 1:
        raise ValueError("n must be >= 1")
    if k < 0 or k > n - 1:
        return FormulaLayer(k, ())
    return _recur_row(n)[k]


def _layer_method(method):
    if method == "enum":
        return p_enum
    if method == "recur":
        return p_recur
    raise ValueError("method must be 'enum' or 'recur'")


def parametric_formula(n, method="recur"):
    """dny/dxn for x = f(t), y = g(t).

    >>> from .algebra import render
    >>> render(parametric_formula(2), "text")
    "g''(t)*[f'(t)]^-2 - g'(t)*f''(t)*[f'(t)]^-3"
    """
    layer = _layer_method(method)
    return DerivativeFormula(n, PARAMETRIC, tuple(layer(n, k) for k in range(n)))


@dataclass(frozen=True)
class ClosedFormReport:
    """Per-case result of checking the two extreme layers of one order."""

    n: int
    top_ok: bool      # P(n,n-1) against the double-factorial form
    second_ok: bool   # P(n,n-2) against the two-term form

    def __bool__(self):
        return self.top_ok and self.second_ok


def closed_form_check(n):
    """Check the recurrence output against the closed forms of the two
    highest layers: P(n,n-1) = (2n-3)!! g'(f'')^(n-1) and
    P(n,n-2) = (2n-3)!! g''(f'')^(n-2) + C(2n-3,3) (2n-7)!! g'(f'')^(n-3)f'''.

    >>> closed_form_check(4)
    ClosedFormReport(n=4, top_ok=True, second_ok=True)
    """
    if n < 2:
        raise ValueError("n must be >= 2")
    top = normalize([ParametricMonomial(double_factorial(2 * n - 3), 1, (2,) * (n - 1))])
    second = normalize([
        ParametricMonomial(double_factorial(2 * n - 3), 2, (2,) * (n - 2)),
        ParametricMonomial(comb(2 * n - 3, 3) * double_factorial(2 * n - 7),
                           1, (2,) * (n - 3) + (3,)),
    ])
    return ClosedFormReport(n,
                            p_recur(n, n - 1) == FormulaLayer(n - 1, top),
                            p_recur(n, n - 2) == FormulaLayer(n - 2, second))


def inverse_formula(n):
    """dny/dxn for the inverse function of x = f(y): the parametric formula
    specialized to g the identity, so only monomials with g_order 1
    survive and their g' factor becomes the constant 1.

    >>> from .algebra import render
    >>> render(inverse_formula(2), "text")
    "- f''(t)*[f'(t)]^-3"
    """
    layers = []
    for k in range(n):
        monos = [replace(m, g_order=0) for m in p_recur(n, k).monomials if m.g_order == 1]
        layers.append(FormulaLayer(k, normalize(monos)))
    return DerivativeFormula(n, INVERSE, tuple(layers))

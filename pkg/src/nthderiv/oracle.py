"""Independent routes to the same derivatives, used to validate the
layered formulas.

Two symbolic oracles rebuild the formulas by brute-force repeated
differentiation -- no partitions, no recurrences -- and must agree with
the layer modules exactly.  Two numeric oracles obtain the derivative
values from truncated power series alone (reversion for the parametric
problem, order-by-order substitution for the implicit one) and must
agree with pointwise evaluation of the formulas to tight tolerance.
"""

from collections import Counter
from dataclasses import dataclass
from math import factorial

import numpy as np

from .algebra import (
    IMPLICIT,
    PARAMETRIC,
    DerivativeFormula,
    FormulaLayer,
    ImplicitMonomial,
    ParametricMonomial,
    normalize,
)
from .jets import BivariateJet, Jet, compose, revert

__all__ = [
    "DegeneratePointError",
    "MissingOrderError",
    "ParametricTable",
    "ImplicitTable",
    "eval_parametric",
    "eval_implicit",
    "symbolic_parametric_oracle",
    "symbolic_implicit_oracle",
    "series_reversion_oracle",
    "implicit_series_oracle",
]


class DegeneratePointError(ValueError):
    """The point makes the formula singular: f'(t0) = 0 or F_y = 0."""


class MissingOrderError(ValueError):
    """The table or jet does not reach a derivative order the formula needs."""


@dataclass(frozen=True)
class ParametricTable:
    """Point data for evaluating a parametric formula: t0 and the raw
    derivative values (f'(t0), f''(t0), ...), (g'(t0), g''(t0), ...)."""

    t0: float
    f_derivs: tuple
    g_derivs: tuple

    def __post_init__(self):
        object.__setattr__(self, "f_derivs", tuple(float(v) for v in self.f_derivs))
        object.__setattr__(self, "g_derivs", tuple(float(v) for v in self.g_derivs))

    def f(self, order):
        if not 1 <= order <= len(self.f_derivs):
            raise MissingOrderError("table lacks f derivative of order %d" % order)
        return self.f_derivs[order - 1]

    def g(self, order):
        if not 1 <= order <= len(self.g_derivs):
            raise MissingOrderError("table lacks g derivative of order %d" % order)
        return self.g_derivs[order - 1]


@dataclass(frozen=True)
class ImplicitTable:
    """Point data for evaluating an implicit formula: (x0, y0) and raw
    partial values keyed by (a, b).  The value at (0, 0) is F(x0, y0)
    itself, zero if omitted; it must vanish within on_curve_tol for the
    point to lie on the curve."""

    x0: float
    y0: float
    partials: dict
    on_curve_tol: float = 1e-6

    def __post_init__(self):
        clean = {(int(a), int(b)): float(v) for (a, b), v in self.partials.items()}
        object.__setattr__(self, "partials", clean)
        if abs(clean.get((0, 0), 0.0)) > self.on_curve_tol:
            raise ValueError("base point is not on the curve: |F(x0, y0)| = %g"
                             % abs(clean[(0, 0)]))
        if clean.get((0, 1), None) == 0.0:
            raise DegeneratePointError("F_y is zero at the base point")

    def partial(self, a, b):
        try:
            return self.partials[(a, b)]
        except KeyError:
            raise MissingOrderError("table lacks the partial of order (%d, %d)" % (a, b))


def eval_parametric(f, tbl):
    """Numeric value of a parametric or inverse formula at the table point.

    >>> from .parametric import parametric_formula
    >>> tbl = ParametricTable(1.0, (2.0, 2.0), (3.0, 6.0))   # f = t^2, g = t^3
    >>> eval_parametric(parametric_formula(2), tbl)
    0.75
    """
    fp = tbl.f(1)
    if fp == 0.0:
        raise DegeneratePointError("f'(t0) is zero")
    total = 0.0
    for layer in f.layers:
        acc = 0.0
        for m in layer.monomials:
            term = float(m.coefficient)
            if m.g_order:
                term *= tbl.g(m.g_order)
            for j in m.f_orders:
                term *= tbl.f(j)
            acc += term
        total += f.sign(layer.k) * acc * fp ** f.prefactor_exponent(layer.k)
    return total


def eval_implicit(f, tbl):
    """Numeric value of an implicit formula at the table point.

    >>> from .implicit import implicit_formula
    >>> circle = ImplicitTable(0.6, 0.8, {(1, 0): 1.2, (0, 1): 1.6,
    ...                                   (2, 0): 2.0, (0, 2): 2.0, (1, 1): 0.0})
    >>> eval_implicit(implicit_formula(1), circle)
    -0.75
    """
    fy = tbl.partial(0, 1)
    if fy == 0.0:
        raise DegeneratePointError("F_y is zero at the base point")
    total = 0.0
    for layer in f.layers:
        acc = 0.0
        for m in layer.monomials:
            term = float(m.coefficient)
            for a, b in m.factors:
                term *= tbl.partial(a, b)
            acc += term
        total += f.sign(layer.k) * acc * fy ** f.prefactor_exponent(layer.k)
    return total


def _desc(orders):
    return tuple(sorted(orders, reverse=True))


def symbolic_parametric_oracle(n):
    """The parametric formula rebuilt with no partition machinery: apply
    the operator (1/f') d/dt to dy/dx = g'/f' a total of n-1 times,
    tracking each term's f'-power, then group terms into layers by that
    power.  Must equal parametric_formula(n).
    """
    if n < 1:
        raise ValueError("n must be >= 1")
    terms = {(1, (), -1): 1}    # g' times [f']^(-1)
    for _ in range(n - 1):
        new = Counter()
        for (g_ord, f_ords, e), c in terms.items():
            new[(g_ord + 1, f_ords, e - 1)] += c
            for j, mult in Counter(f_ords).items():
                raised = list(f_ords)
                raised.remove(j)
                raised.append(j + 1)
                new[(g_ord, _desc(raised), e - 1)] += c * mult
            new[(g_ord, _desc(f_ords + (2,)), e - 2)] += c * e
        terms = {key: c for key, c in new.items() if c}
    by_k = {}
    for (g_ord, f_ords, e), c in terms.items():
        k = -e - n
        by_k.setdefault(k, []).append(ParametricMonomial(c if k % 2 == 0 else -c,
                                                         g_ord, f_ords))
    stray = set(by_k) - set(range(n))
    if stray:
        raise ValueError("oracle produced f'-powers outside the layer grid: %s"
                         % sorted(stray))
    layers = tuple(FormulaLayer(k, normalize(by_k.get(k, ()))) for k in range(n))
    return DerivativeFormula(n, PARAMETRIC, layers)


def _canon_factors(factors):
    return tuple(sorted(factors, key=lambda ab: (ab[0] + ab[1], ab[0]), reverse=True))


def _raise_factor(factors, fac, dx, dy):
    rest = list(factors)
    rest.remove(fac)
    rest.append((fac[0] + dx, fac[1] + dy))
    return rest


def symbolic_implicit_oracle(n):
    """The implicit formula rebuilt by brute force: apply the total
    derivative d/dx = partial_x + y' partial_y with y' = -F_x/F_y to
    dy/dx = -F_x/F_y a total of n-1 times, tracking each term's F_y-power,
    then group into layers.  Must equal implicit_formula(n).
    """
    if n < 1:
        raise ValueError("n must be >= 1")
    terms = {(((1, 0),), -1): -1}
    for _ in range(n - 1):
        new = Counter()
        for (factors, e), c in terms.items():
            for fac, mult in Counter(factors).items():
                new[(_canon_factors(_raise_factor(factors, fac, 1, 0)), e)] += c * mult
            new[(_canon_factors(factors + ((1, 1),)), e - 1)] += c * e
            for fac, mult in Counter(factors).items():
                new[(_canon_factors(_raise_factor(factors, fac, 0, 1) + [(1, 0)]),
                     e - 1)] -= c * mult
            new[(_canon_factors(factors + ((1, 0), (0, 2))), e - 2)] -= c * e
        terms = {key: c for key, c in new.items() if c}
    by_k = {}
    for (factors, e), c in terms.items():
        k = -e
        by_k.setdefault(k, []).append(ImplicitMonomial(c if k % 2 == 0 else -c, factors))
    stray = set(by_k) - set(range(1, 2 * n))
    if stray:
        raise ValueError("oracle produced F_y-powers outside the layer grid: %s"
                         % sorted(stray))
    layers = tuple(FormulaLayer(k, normalize(by_k.get(k, ()))) for k in range(1, 2 * n))
    return DerivativeFormula(n, IMPLICIT, layers)


def series_reversion_oracle(f_jet, g_jet, n):
    """Derivatives [y', ..., y^(n)] of y(x) = g(f^{-1}(x)) at x0 = f(t0),
    obtained purely by series reversion and composition.

    >>> f = Jet.from_derivatives(1.0, [1.0, 2.0, 2.0, 0.0])   # t^2 at 1
    >>> g = Jet.from_derivatives(1.0, [1.0, 3.0, 6.0, 6.0])   # t^3 at 1
    >>> [round(v, 12) for v in series_reversion_oracle(f, g, 3)]
    [1.5, 0.75, -0.375]
    """
    if f_jet.base_point != g_jet.base_point:
        raise ValueError("jets must share the base point")
    if f_jet.order < n or g_jet.order < n:
        raise MissingOrderError("jets truncated below order %d" % n)
    if f_jet.coefficients[1] == 0.0:
        raise DegeneratePointError("f'(t0) is zero; series is not invertible")
    y = compose(g_jet, revert(f_jet))
    return y.derivatives()[1:n + 1]


def implicit_series_oracle(F_jet, n, on_curve_tol=1e-6):
    """Derivatives [y', ..., y^(n)] of the y(x) defined by F(x, y) = 0 near
    the jet's base point, obtained by substituting an undetermined series
    for y and zeroing one power of (x - x0) at a time.

    >>> F = BivariateJet.from_partials((0.6, 0.8), {(1, 0): 1.2, (0, 1): 1.6,
    ...                                             (2, 0): 2.0, (0, 2): 2.0}, 2)
    >>> [round(v, 12) for v in implicit_series_oracle(F, 2)]
    [-0.75, -1.953125]
    """
    c = F_jet.coefficients
    if F_jet.order < n:
        raise MissingOrderError("jet truncated below order %d" % n)
    if abs(c[0, 0]) > on_curve_tol:
        raise ValueError("base point is not on the curve: |F| = %g" % abs(c[0, 0]))
    if c[0, 1] == 0.0:
        raise DegeneratePointError("F_y is zero at the base point")
    d = np.zeros(n + 1)     # coefficients of y - y0
    for m in range(1, n + 1):
        # the u^m coefficient of F(x0+u, y0+w(u)) with d[m] still zero;
        # only the c[0,1] d[m] cross-term is missing, so solve for it
        wpow = np.zeros(m + 1)
        wpow[0] = 1.0
        gm = 0.0
        for b in range(F_jet.order + 1):
            if b:
                wpow = np.convolve(wpow, d[:m + 1])[:m + 1]
            for a in range(m + 1):
                if a + b <= F_jet.order:
                    gm += c[a, b] * wpow[m - a]
        d[m] = -gm / c[0, 1]
    return [float(d[m]) * factorial(m) for m in range(1, n + 1)]

"""Coefficient layers for the nth derivative of an implicitly defined
function, computed two independent ways, and the assembled formulas.

For F(x, y) = 0 with y a function of x, the nth derivative is the
alternating sum over k = 1..2n-1 of layers I(n,k) with prefactor
F_y^(-k).  A layer can be built from its defining set partitions --
small elements contribute x-orders, large ones y-orders -- or from the
four-term recurrence; agreement of the two routes is the self-check.

The inverse-function formula falls out as the special case
F(x, y) = f(y) - x, giving an independent derivation of the same result
the parametric module reaches through g = identity.
"""

from collections import Counter

from .algebra import (
    IMPLICIT,
    INVERSE,
    DerivativeFormula,
    FormulaLayer,
    ImplicitMonomial,
    ParametricMonomial,
    monomial_from_implicit_partition,
    normalize,
)
from .partitions import RoleSplit, enumerate_implicit_partitions

__all__ = [
    "i_enum",
    "i_recur",
    "partial_x",
    "partial_y",
    "implicit_formula",
    "inverse_via_implicit",
]


def i_enum(n, k):
    """The layer I(n,k) built directly from its definition: one unit
    monomial per admissible partition of {1..n+k-1} under the small/large
    roles, merged.  Zero layer when k is out of range.

    >>> from .algebra import render_layer
    >>> render_layer(i_enum(3, 4))
    'F_x^3 F_yyy + 9 F_x^2 F_xy F_yy'
    """
    if n < 1:
        raise ValueError("n must be >= 1")
    roles = RoleSplit(n)
    monos = normalize(monomial_from_implicit_partition(p, roles)
                      for p in enumerate_implicit_partitions(n, k))
    return FormulaLayer(k, monos)


def _leibniz(ms, dx, dy):
    out = []
    for m in ms:
        for (a, b), mult in Counter(m.factors).items():
            rest = list(m.factors)
            rest.remove((a, b))
            rest.append((a + dx, b + dy))
            out.append(ImplicitMonomial(m.coefficient * mult, rest))
    return out


def partial_x(ms):
    """Leibniz x-derivative of a monomial sequence: each factor in turn has
    its x-order raised, weighted by the factor's multiplicity.  Not
    normalized."""
    return _leibniz(ms, 1, 0)


def partial_y(ms):
    """Same as partial_x with the y-order raised instead."""
    return _leibniz(ms, 0, 1)


_rows = {1: (FormulaLayer(1, (ImplicitMonomial(1, ((1, 0),)),)),)}


def _recur_row(n):
    # cached rows, grown iteratively; row n holds layers k = 1..2n-1
    while (top := max(_rows)) < n:
        prev = _rows[top]

        def monos(k):
            return prev[k - 1].monomials if 1 <= k <= 2 * top - 1 else ()

        row = []
        for k in range(1, 2 * top + 2):
            terms = list(partial_x(monos(k)))
            for t in partial_y(monos(k - 1)):
                terms.append(ImplicitMonomial(t.coefficient, t.factors + ((1, 0),)))
            for m in monos(k - 1):
                terms.append(ImplicitMonomial(m.coefficient * (k - 1), m.factors + ((1, 1),)))
            for m in monos(k - 2):
                terms.append(ImplicitMonomial(m.coefficient * (k - 2),
                                              m.factors + ((1, 0), (0, 2))))
            row.append(FormulaLayer(k, normalize(terms)))
        _rows[top + 1] = tuple(row)
    return _rows[n]


def i_recur(n, k):
    """The layer I(n,k) from the recurrence I(n+1,k) = partial_x I(n,k)
    + F_x partial_y I(n,k-1) + (k-1) F_xy I(n,k-1) + (k-2) F_x F_yy I(n,k-2),
    base I(1,1) = F_x.

    >>> from .algebra import render_layer
    >>> render_layer(i_recur(2, 2))
    '2 F_x F_xy'
    >>> render_layer(i_recur(3, 5))
    '3 F_x^3 F_yy^2'
    """
    if n < 1:
        raise ValueError("n must be >= 1")
    if k < 1 or k > 2 * n - 1:
        return FormulaLayer(k, ())
    return _recur_row(n)[k - 1]


def _layer_method(method):
    if method == "enum":
        return i_enum
    if method == "recur":
        return i_recur
    raise ValueError("method must be 'enum' or 'recur'")


def implicit_formula(n, method="recur"):
    """dny/dxn for y defined by F(x, y) = 0.

    >>> from .algebra import render
    >>> render(implicit_formula(1), "text")
    '- F_x * F_y^-1'
    """
    layer = _layer_method(method)
    return DerivativeFormula(n, IMPLICIT, tuple(layer(n, k) for k in range(1, 2 * n)))


def inverse_via_implicit(n):
    """The inverse-function derivative read off the implicit formula with
    F(x, y) = f(y) - x: pure-y partials become f derivatives, the single
    x-partial is the constant -1, every mixed partial vanishes.

    Only monomials made of n factors F_x plus pure-y factors survive,
    which forces k >= n; re-indexing the surviving layer k to k - n
    absorbs the n signs from F_x = -1 and lands exactly on the layer
    grid of inverse_formula.  Equality with inverse_formula is the
    cross-problem consistency check.

    >>> from .algebra import render
    >>> render(inverse_via_implicit(3), "text")
    "- f'''(t)*[f'(t)]^-4 + 3*[f''(t)]^2*[f'(t)]^-5"
    """
    if n < 1:
        raise ValueError("n must be >= 1")
    layers = []
    for new_k in range(n):
        monos = []
        for m in i_recur(n, n + new_k).monomials:
            pure_y = [b for a, b in m.factors if a == 0]
            x_singles = m.factors.count((1, 0))
            if x_singles == n and x_singles + len(pure_y) == len(m.factors):
                monos.append(ParametricMonomial(m.coefficient, 0, pure_y))
        layers.append(FormulaLayer(new_k, normalize(monos)))
    return DerivativeFormula(n, INVERSE, tuple(layers))

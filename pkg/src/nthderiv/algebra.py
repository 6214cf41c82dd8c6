"""Exact monomial algebra for layered derivative formulas.

Monomials are products of derivative factors with an exact integer
coefficient.  A parametric monomial is c * g^(i) * f^(j1) * f^(j2) * ...
with every f order >= 2; an implicit monomial is c * prod of partials
F_{x^a y^b}.  Formulas collect monomials into layers indexed by k; the
sign (-1)^k and the reciprocal prefactor power belong to the layer, so
all stored coefficients stay positive.

Monomials are kept in a canonical order: descending by derivative-order
keys, which is how the assembled formulas are conventionally displayed.
Within a single monomial the factors *display* in ascending order
(g' f'' f''', F_x^2 F_xy F_yy) even though they are stored descending.
"""

import json
from dataclasses import dataclass, replace

PARAMETRIC = "parametric"
IMPLICIT = "implicit"
INVERSE = "inverse"
KINDS = (PARAMETRIC, IMPLICIT, INVERSE)

__all__ = [
    "ParametricMonomial",
    "ImplicitMonomial",
    "FormulaLayer",
    "DerivativeFormula",
    "monomial_from_parametric_partition",
    "monomial_from_implicit_partition",
    "normalize",
    "render",
    "render_layer",
    "render_monomial",
    "parse_json",
    "PARAMETRIC",
    "IMPLICIT",
    "INVERSE",
]


@dataclass(frozen=True)
class ParametricMonomial:
    """coefficient * g^(g_order) * product of f^(j) for j in f_orders.

    g_order 0 means no g factor at all (used by the inverse-function
    specialization, where g is the identity); otherwise g_order >= 1.
    Every f order is >= 2 -- a bare f' never appears in a numerator, it
    lives in the layer prefactor instead.
    """

    coefficient: int
    g_order: int
    f_orders: tuple

    def __post_init__(self):
        object.__setattr__(self, "f_orders", tuple(sorted(self.f_orders, reverse=True)))
        if self.g_order < 0:
            raise ValueError("g_order must be >= 0")
        if any(j < 2 for j in self.f_orders):
            raise ValueError("f factors must have order >= 2")

    def sort_key(self):
        # identifies the monomial up to its coefficient
        return (self.g_order, self.f_orders)


@dataclass(frozen=True)
class ImplicitMonomial:
    """coefficient * product of partials d^(a+b) F / dx^a dy^b.

    Factors are unordered (a, b) pairs, stored descending by total order
    then x-order; mixed partials are assumed symmetric so the pair is all
    that matters.  A pure-y factor needs b >= 2: a bare F_y never appears
    in a numerator, it lives in the layer prefactor.
    """

    coefficient: int
    factors: tuple

    def __post_init__(self):
        factors = tuple(sorted((tuple(f) for f in self.factors),
                               key=lambda ab: (ab[0] + ab[1], ab[0]), reverse=True))
        object.__setattr__(self, "factors", factors)
        for a, b in factors:
            if a < 0 or b < 0 or a + b < 1:
                raise ValueError("factor orders must be >= 0 with a+b >= 1")
            if a == 0 and b == 1:
                raise ValueError("bare F_y factor is not admissible")

    def sort_key(self):
        return tuple((a + b, a) for a, b in self.factors)


def monomial_from_parametric_partition(p):
    """Unit monomial read off a partition: the block containing 1 gives the
    g order, every other block gives an f order.  Partitions with a
    singleton block other than {1} are rejected.

    >>> from .partitions import SetPartition
    >>> monomial_from_parametric_partition(SetPartition([[1], [2, 3, 4]]))
    ParametricMonomial(coefficient=1, g_order=1, f_orders=(3,))
    """
    first, *rest = p.blocks
    return ParametricMonomial(1, len(first), tuple(len(b) for b in rest))


def monomial_from_implicit_partition(p, roles):
    """Unit monomial read off a partition: each block becomes one partial
    factor (a, b) counting its small and large elements.  Partitions with
    a large singleton are rejected.

    >>> from .partitions import SetPartition, RoleSplit
    >>> monomial_from_implicit_partition(SetPartition([[1], [2], [3, 4]]), RoleSplit(2))
    ImplicitMonomial(coefficient=1, factors=((0, 2), (1, 0), (1, 0)))
    """
    if roles.small_count > p.ground_size:
        raise ValueError("small_count exceeds the ground set")
    factors = []
    for b in p.blocks:
        a = sum(1 for e in b if roles.is_small(e))
        factors.append((a, len(b) - a))
    return ImplicitMonomial(1, tuple(factors))


def normalize(ms):
    """Merge monomials with equal factor content by adding coefficients,
    drop zeros, and sort into the canonical descending order.  Idempotent
    and insensitive to the input order.
    """
    merged = {}
    for m in ms:
        key = m.sort_key()
        if key in merged:
            merged[key] = replace(merged[key], coefficient=merged[key].coefficient + m.coefficient)
        else:
            merged[key] = m
    out = [m for m in merged.values() if m.coefficient != 0]
    out.sort(key=lambda m: m.sort_key(), reverse=True)
    return tuple(out)


@dataclass(frozen=True)
class FormulaLayer:
    """All monomials sharing the layer index k, in canonical order with
    distinct factor content and nonzero coefficients."""

    k: int
    monomials: tuple

    def __post_init__(self):
        object.__setattr__(self, "monomials", tuple(self.monomials))
        keys = [m.sort_key() for m in self.monomials]
        if any(m.coefficient == 0 for m in self.monomials):
            raise ValueError("zero coefficient in layer")
        if len(set(keys)) != len(keys):
            raise ValueError("duplicate monomial in layer")
        if keys != sorted(keys, reverse=True):
            raise ValueError("layer not in canonical order")

    def is_zero(self):
        return not self.monomials

    def coefficient_sum(self):
        return sum(m.coefficient for m in self.monomials)

    def coefficients(self):
        return tuple(m.coefficient for m in self.monomials)


def _check_parametric_layer(n, layer, inverse=False):
    for m in layer.monomials:
        if not isinstance(m, ParametricMonomial):
            raise ValueError("expected parametric monomials")
        if inverse:
            if m.g_order != 0 or sum(m.f_orders) != n + layer.k - 1:
                raise ValueError("bad inverse monomial in layer %d" % layer.k)
        else:
            if m.g_order < 1 or m.g_order + sum(m.f_orders) != n + layer.k:
                raise ValueError("bad parametric monomial in layer %d" % layer.k)
        if len(m.f_orders) != layer.k:
            raise ValueError("bad factor count in layer %d" % layer.k)


def _check_implicit_layer(n, layer):
    for m in layer.monomials:
        if not isinstance(m, ImplicitMonomial):
            raise ValueError("expected implicit monomials")
        a_total = sum(a for a, b in m.factors)
        b_total = sum(b for a, b in m.factors)
        if a_total != n or b_total != layer.k - 1 or len(m.factors) != layer.k:
            raise ValueError("bad implicit monomial in layer %d" % layer.k)


@dataclass(frozen=True)
class DerivativeFormula:
    """The n-th derivative dny/dxn as a sum of signed, prefactored layers.

    kind "parametric" or "inverse": layers k = 0..n-1, each carrying the
    sign (-1)^k and the prefactor [f'(t)]^(-n-k).  kind "implicit":
    layers k = 1..2n-1 with sign (-1)^k and prefactor F_y^(-k).
    """

    n: int
    kind: str
    layers: tuple

    def __post_init__(self):
        if self.kind not in KINDS:
            raise ValueError("unknown kind %r" % (self.kind,))
        if self.n < 1:
            raise ValueError("n must be >= 1")
        object.__setattr__(self, "layers", tuple(self.layers))
        expected = list(self.layer_range())
        if [layer.k for layer in self.layers] != expected:
            raise ValueError("layers must cover k = %d..%d" % (expected[0], expected[-1]))
        for layer in self.layers:
            if self.kind == IMPLICIT:
                _check_implicit_layer(self.n, layer)
            else:
                _check_parametric_layer(self.n, layer, inverse=self.kind == INVERSE)

    def layer_range(self):
        if self.kind == IMPLICIT:
            return range(1, 2 * self.n)
        return range(0, self.n)

    def layer(self, k):
        return self.layers[k - self.layer_range().start]

    def sign(self, k):
        return -1 if k % 2 else 1

    def prefactor_exponent(self, k):
        if self.kind == IMPLICIT:
            return -k
        return -self.n - k


# ---------------------------------------------------------------------------
# rendering

def _prime_name(base, order, arg=""):
    if order <= 4:
        return base + "'" * order + arg
    return "%s^(%d)%s" % (base, order, arg)


def _partial_name(a, b):
    if a + b <= 4:
        return "F_" + "x" * a + "y" * b
    return "F_(%d,%d)" % (a, b)


def _group_runs(items):
    # multiplicities of adjacent equal factors, preserving the given order
    groups = []
    for it in items:
        if groups and groups[-1][0] == it:
            groups[-1][1] += 1
        else:
            groups.append([it, 1])
    return groups


def _parametric_term_text(m, exponent):
    pieces = []
    if m.coefficient != 1:
        pieces.append(str(m.coefficient))
    if m.g_order:
        pieces.append(_prime_name("g", m.g_order, "(t)"))
    for j, mult in _group_runs(sorted(m.f_orders)):
        name = _prime_name("f", j, "(t)")
        pieces.append(name if mult == 1 else "[%s]^%d" % (name, mult))
    pieces.append("[f'(t)]^%d" % exponent)
    return "*".join(pieces)


def _implicit_term_text(m, exponent):
    pieces = []
    if m.coefficient != 1:
        pieces.append(str(m.coefficient))
    for (a, b), mult in _group_runs(_display_factors(m)):
        name = _partial_name(a, b)
        pieces.append(name if mult == 1 else "%s^%d" % (name, mult))
    pieces.append("F_y^%d" % exponent)
    return " * ".join(pieces)


def _display_factors(m):
    # ascending total order, x-heavy first within a total order
    return sorted(m.factors, key=lambda ab: (ab[0] + ab[1], -ab[0]))


def _prime_latex(base, order, arg=""):
    if order <= 4:
        return base + "'" * order + arg
    return "%s^{(%d)}%s" % (base, order, arg)


def _partial_latex(a, b):
    if a + b <= 4:
        return "F_{%s}" % ("x" * a + "y" * b)
    num = "\\partial^{%d}F" % (a + b)
    den = ""
    for var, order in (("x", a), ("y", b)):
        if order == 1:
            den += "\\partial %s" % var
        elif order > 1:
            den += "\\partial %s^{%d}" % (var, order)
    return "\\frac{%s}{%s}" % (num, den)


def _parametric_term_latex(m, exponent):
    out = "" if m.coefficient == 1 else str(m.coefficient)
    if m.g_order:
        out += _prime_latex("g", m.g_order, "(t)")
    for j, mult in _group_runs(sorted(m.f_orders)):
        name = _prime_latex("f", j, "(t)")
        out += name if mult == 1 else "\\left[%s\\right]^{%d}" % (name, mult)
    out += "\\left[f'(t)\\right]^{%d}" % exponent
    return out


def _implicit_term_latex(m, exponent):
    out = "" if m.coefficient == 1 else str(m.coefficient)
    for (a, b), mult in _group_runs(_display_factors(m)):
        name = _partial_latex(a, b)
        if mult == 1:
            out += name
        elif a + b <= 4:
            out += "%s^{%d}" % (name, mult)
        else:
            out += "\\left[%s\\right]^{%d}" % (name, mult)
    out += "F_{y}^{%d}" % exponent
    return out


def _render_terms(f, term_fn):
    out = ""
    for layer in f.layers:
        exponent = f.prefactor_exponent(layer.k)
        negative = f.sign(layer.k) < 0
        for m in layer.monomials:
            if not out:
                out = ("- " if negative else "") + term_fn(m, exponent)
            else:
                out += (" - " if negative else " + ") + term_fn(m, exponent)
    return out


def _formula_to_obj(f):
    layers = []
    for layer in f.layers:
        monomials = []
        for m in layer.monomials:
            if isinstance(m, ParametricMonomial):
                monomials.append({"coeff": str(m.coefficient),
                                  "g_order": m.g_order,
                                  "f_orders": list(m.f_orders)})
            else:
                monomials.append({"coeff": str(m.coefficient),
                                  "factors": [list(ab) for ab in m.factors]})
        layers.append({"k": layer.k,
                       "sign": f.sign(layer.k),
                       "prefactor_exponent": f.prefactor_exponent(layer.k),
                       "monomials": monomials})
    return {"n": f.n, "kind": f.kind, "layers": layers}


def render(f, fmt):
    """Serialize a formula as "text", "latex" or "json".  All three are
    deterministic; the json form round-trips through parse_json.

    >>> from .parametric import parametric_formula
    >>> render(parametric_formula(1), "text")
    "g'(t)*[f'(t)]^-1"
    >>> from .implicit import implicit_formula
    >>> render(implicit_formula(1), "text")
    '- F_x * F_y^-1'
    """
    if fmt == "text":
        term = _implicit_term_text if f.kind == IMPLICIT else _parametric_term_text
        return _render_terms(f, term)
    if fmt == "latex":
        term = _implicit_term_latex if f.kind == IMPLICIT else _parametric_term_latex
        return _render_terms(f, term)
    if fmt == "json":
        return json.dumps(_formula_to_obj(f), indent=2)
    raise ValueError("unknown format %r" % (fmt,))


def _parametric_mono_compact(m):
    out = "" if m.coefficient == 1 else "%d " % m.coefficient
    if m.g_order:
        out += _prime_name("g", m.g_order)
    for j, mult in _group_runs(sorted(m.f_orders)):
        name = _prime_name("f", j)
        out += name if mult == 1 else "(%s)^%d" % (name, mult)
    return out


def _implicit_mono_compact(m):
    out = "" if m.coefficient == 1 else "%d " % m.coefficient
    pieces = []
    for (a, b), mult in _group_runs(_display_factors(m)):
        name = _partial_name(a, b)
        pieces.append(name if mult == 1 else "%s^%d" % (name, mult))
    return out + " ".join(pieces)


def render_monomial(m):
    """Compact sign-free text for one monomial, coefficient included.

    >>> render_monomial(ParametricMonomial(10, 1, (2, 3)))
    "10 g'f''f'''"
    >>> render_monomial(ImplicitMonomial(9, ((1, 0), (1, 0), (1, 1), (0, 2))))
    '9 F_x^2 F_xy F_yy'
    """
    if isinstance(m, ParametricMonomial):
        return _parametric_mono_compact(m)
    return _implicit_mono_compact(m)


def render_layer(layer):
    """Compact sign-free text for a single coefficient layer, "0" if empty.

    >>> from .parametric import p_recur
    >>> render_layer(p_recur(4, 2))
    "15 g''(f'')^2 + 10 g'f''f'''"
    """
    if layer.is_zero():
        return "0"
    return " + ".join(render_monomial(m) for m in layer.monomials)


def parse_json(text):
    """Rebuild a DerivativeFormula from render(f, "json") output.

    The layer signs and prefactor exponents in the input are checked
    against the values the formula structure dictates.
    """
    obj = json.loads(text)
    try:
        kind = obj["kind"]
        layers = []
        for lo in obj["layers"]:
            monomials = []
            for mo in lo["monomials"]:
                coeff = int(mo["coeff"])
                if kind == IMPLICIT:
                    monomials.append(ImplicitMonomial(coeff, tuple(map(tuple, mo["factors"]))))
                else:
                    monomials.append(ParametricMonomial(coeff, mo["g_order"], tuple(mo["f_orders"])))
            layers.append(FormulaLayer(lo["k"], tuple(monomials)))
        f = DerivativeFormula(obj["n"], kind, tuple(layers))
    except (KeyError, TypeError) as exc:
        raise ValueError("malformed formula json: %s" % exc)
    for lo, layer in zip(obj["layers"], f.layers):
        if lo["sign"] != f.sign(layer.k) or lo["prefactor_exponent"] != f.prefactor_exponent(layer.k):
            raise ValueError("inconsistent sign or prefactor in layer %d" % layer.k)
    return f

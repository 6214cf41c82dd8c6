"""The implicit coefficient layers: enumeration, the four-term recurrence,
Leibniz derivatives, and the inverse function recovered as a special case."""

import pytest

from nthderiv.algebra import ImplicitMonomial, render, render_layer
from nthderiv.implicit import (
    i_enum,
    i_recur,
    implicit_formula,
    inverse_via_implicit,
    partial_x,
    partial_y,
)
from nthderiv.parametric import inverse_formula
from nthderiv.partitions import count_implicit_partitions, double_factorial

GOLDEN_ROWS = {
    1: ["F_x"],
    2: ["F_xx", "2 F_x F_xy", "F_x^2 F_yy"],
    3: ["F_xxx",
        "3 F_x F_xxy + 3 F_xx F_xy",
        "3 F_x^2 F_xyy + 3 F_x F_xx F_yy + 6 F_x F_xy^2",
        "F_x^3 F_yyy + 9 F_x^2 F_xy F_yy",
        "3 F_x^3 F_yy^2"],
}


@pytest.mark.parametrize("n,row", sorted(GOLDEN_ROWS.items()))
def test_golden_rows(n, row):
    assert [render_layer(i_enum(n, k)) for k in range(1, 2 * n)] == row
    assert [render_layer(i_recur(n, k)) for k in range(1, 2 * n)] == row


@pytest.mark.parametrize("n", range(1, 6))
def test_enum_equals_recur(n):
    for k in range(0, 2 * n + 1):
        assert i_enum(n, k) == i_recur(n, k)


@pytest.mark.parametrize("n", range(1, 7))
def test_layer_structure(n):
    for k in range(1, 2 * n):
        layer = i_recur(n, k)
        assert layer.k == k
        for m in layer.monomials:
            assert m.coefficient > 0
            assert len(m.factors) == k
            assert sum(a for a, b in m.factors) == n
            assert sum(b for a, b in m.factors) == k - 1
        assert layer.coefficient_sum() == count_implicit_partitions(n, k)


def test_out_of_range_layers_are_zero():
    assert i_recur(3, 0).is_zero() and i_recur(3, 6).is_zero()
    assert i_enum(3, 0).is_zero() and i_enum(3, 6).is_zero()
    with pytest.raises(ValueError):
        i_recur(0, 1)
    with pytest.raises(ValueError):
        i_enum(0, 1)


def test_partial_x_leibniz():
    got = partial_x([ImplicitMonomial(1, ((1, 0),))])
    assert [(m.coefficient, m.factors) for m in got] == [(1, ((2, 0),))]
    # equal factors merge their contributions through the multiplicity
    got = partial_x([ImplicitMonomial(1, ((1, 0), (1, 0)))])
    assert [(m.coefficient, m.factors) for m in got] == [(2, ((2, 0), (1, 0)))]


def test_partial_y_leibniz():
    got = partial_y([ImplicitMonomial(3, ((1, 0), (1, 1)))])
    assert sorted((m.coefficient, m.factors) for m in got) == \
        [(3, ((1, 1), (1, 1))), (3, ((1, 2), (1, 0)))]


def test_extreme_layers():
    for n in range(1, 8):
        assert i_recur(n, 1).monomials == (ImplicitMonomial(1, ((n, 0),)),)
        top = i_recur(n, 2 * n - 1).monomials
        assert len(top) == 1
        assert top[0].coefficient == double_factorial(2 * n - 3)
        assert top[0].factors == ((0, 2),) * (n - 1) + ((1, 0),) * n


def test_formula_methods_agree():
    for n in range(1, 5):
        assert implicit_formula(n, "enum") == implicit_formula(n, "recur")
    with pytest.raises(ValueError):
        implicit_formula(2, "guess")


def test_formula_text_small_orders():
    assert render(implicit_formula(1), "text") == "- F_x * F_y^-1"
    assert render(implicit_formula(2), "text") == \
        "- F_xx * F_y^-1 + 2 * F_x * F_xy * F_y^-2 - F_x^2 * F_yy * F_y^-3"


@pytest.mark.parametrize("n", range(1, 7))
def test_inverse_via_implicit_matches_inverse_formula(n):
    assert inverse_via_implicit(n) == inverse_formula(n)


def test_inverse_via_implicit_rejects_bad_n():
    with pytest.raises(ValueError):
        inverse_via_implicit(0)


def test_i32_canonical_order():
    # the mixed layer orders F_x F_xxy before F_xx F_xy
    layer = i_recur(3, 2)
    assert [m.factors for m in layer.monomials] == \
        [((2, 1), (1, 0)), ((2, 0), (1, 1))]
    assert layer.coefficients() == (3, 3)

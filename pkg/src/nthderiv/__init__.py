"""Closed-form nth derivatives of parametric, implicit and inverse
functions, with exact set-partition coefficients and independent
symbolic and numeric cross-checks.
"""

from .algebra import (
    IMPLICIT,
    INVERSE,
    PARAMETRIC,
    DerivativeFormula,
    FormulaLayer,
    ImplicitMonomial,
    ParametricMonomial,
    monomial_from_implicit_partition,
    monomial_from_parametric_partition,
    normalize,
    parse_json,
    render,
    render_layer,
    render_monomial,
)
from .implicit import (
    i_enum,
    i_recur,
    implicit_formula,
    inverse_via_implicit,
    partial_x,
    partial_y,
)
from .jets import BivariateJet, Jet, compose, revert
from .oracle import (
    DegeneratePointError,
    ImplicitTable,
    MissingOrderError,
    ParametricTable,
    eval_implicit,
    eval_parametric,
    implicit_series_oracle,
    series_reversion_oracle,
    symbolic_implicit_oracle,
    symbolic_parametric_oracle,
)
from .parametric import (
    closed_form_check,
    d_dt,
    inverse_formula,
    p_enum,
    p_recur,
    parametric_formula,
)
from .partitions import (
    RoleSplit,
    SetPartition,
    count_implicit_partitions,
    count_parametric_partitions,
    count_restricted_partitions,
    double_factorial,
    enumerate_implicit_partitions,
    enumerate_parametric_partitions,
)

__version__ = "0.1.0"

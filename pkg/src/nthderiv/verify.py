"""Cross-checking suites pitting every route to a formula against the
others: enumeration vs recurrence, brute-force symbolic differentiation
vs the layered formulas, partition counts vs coefficient sums, the
closed-form extreme layers, and numeric series oracles vs pointwise
evaluation.  The command line's verify command runs all five.
"""

import math
from dataclasses import dataclass, field

import numpy as np

from .algebra import FormulaLayer, ImplicitMonomial, render_monomial
from .implicit import i_enum, i_recur, implicit_formula
from .jets import BivariateJet, Jet
from .oracle import (
    ImplicitTable,
    ParametricTable,
    eval_implicit,
    eval_parametric,
    implicit_series_oracle,
    series_reversion_oracle,
    symbolic_implicit_oracle,
    symbolic_parametric_oracle,
)
from .parametric import closed_form_check, p_enum, p_recur, parametric_formula
from .partitions import (
    count_implicit_partitions,
    count_parametric_partitions,
    double_factorial,
)

__all__ = [
    "SuiteResult",
    "check_enum_recur",
    "check_counts",
    "check_closed_forms",
    "check_oracles",
    "check_numeric",
    "run_all",
    "format_report",
    "DEFAULT_SEED",
]

DEFAULT_SEED = 1729


@dataclass
class SuiteResult:
    name: str
    cases: int = 0
    failures: list = field(default_factory=list)

    @property
    def ok(self):
        return not self.failures


def _mono_text(m):
    return render_monomial(m) if m is not None else "nothing"


def _layer_diff(label, n, got, want):
    # first differing monomial, in canonical order
    got_by = {m.sort_key(): m for m in got.monomials}
    want_by = {m.sort_key(): m for m in want.monomials}
    for key in sorted(set(got_by) | set(want_by), reverse=True):
        a, b = got_by.get(key), want_by.get(key)
        if a != b:
            return "%s n=%d k=%d: got %s, want %s" % (
                label, n, got.k, _mono_text(a), _mono_text(b))
    return "%s n=%d k=%d: layers differ" % (label, n, got.k)


def _formula_diff(label, got, want):
    for lg, lw in zip(got.layers, want.layers):
        if lg != lw:
            return _layer_diff(label, got.n, lg, lw)
    return "%s n=%d: formulas differ" % (label, got.n)


def check_enum_recur(max_n_parametric=6, max_n_implicit=5):
    """Layer-by-layer equality of the enumeration and recurrence routes."""
    r = SuiteResult("enum vs recur")
    for n in range(1, max_n_parametric + 1):
        for k in range(n):
            got, want = p_recur(n, k), p_enum(n, k)
            r.cases += 1
            if got != want:
                r.failures.append(_layer_diff("parametric", n, got, want))
    for n in range(1, max_n_implicit + 1):
        for k in range(1, 2 * n):
            got, want = i_recur(n, k), i_enum(n, k)
            r.cases += 1
            if got != want:
                r.failures.append(_layer_diff("implicit", n, got, want))
    return r


def check_counts(max_n_parametric=10, max_n_implicit=8):
    """Coefficient sums of the recurrence layers against the counting DP."""
    r = SuiteResult("counts vs sums")
    for n in range(1, max_n_parametric + 1):
        for k in range(n):
            got = p_recur(n, k).coefficient_sum()
            want = count_parametric_partitions(n, k)
            r.cases += 1
            if got != want:
                r.failures.append("parametric n=%d k=%d: sum %d, count %d"
                                  % (n, k, got, want))
    for n in range(1, max_n_implicit + 1):
        for k in range(1, 2 * n):
            got = i_recur(n, k).coefficient_sum()
            want = count_implicit_partitions(n, k)
            r.cases += 1
            if got != want:
                r.failures.append("implicit n=%d k=%d: sum %d, count %d"
                                  % (n, k, got, want))
    return r


def check_closed_forms(max_n_parametric=10, max_n_implicit=8):
    """The extreme layers against their closed forms."""
    r = SuiteResult("closed forms")
    for n in range(2, max_n_parametric + 1):
        report = closed_form_check(n)
        r.cases += 2
        if not report.top_ok:
            r.failures.append("parametric n=%d k=%d: double-factorial form fails"
                              % (n, n - 1))
        if not report.second_ok:
            r.failures.append("parametric n=%d k=%d: two-term form fails" % (n, n - 2))
    for n in range(1, max_n_implicit + 1):
        first = FormulaLayer(1, (ImplicitMonomial(1, ((n, 0),)),))
        r.cases += 1
        if i_recur(n, 1) != first:
            r.failures.append("implicit n=%d k=1: expected the single pure-x partial" % n)
        top = FormulaLayer(2 * n - 1, (ImplicitMonomial(
            double_factorial(2 * n - 3), ((1, 0),) * n + ((0, 2),) * (n - 1)),))
        r.cases += 1
        if i_recur(n, 2 * n - 1) != top:
            r.failures.append("implicit n=%d k=%d: double-factorial form fails"
                              % (n, 2 * n - 1))
    return r


def check_oracles(max_n_parametric=6, max_n_implicit=5):
    """Brute-force repeated differentiation against the layered formulas."""
    r = SuiteResult("symbolic oracles")
    for n in range(1, max_n_parametric + 1):
        got, want = symbolic_parametric_oracle(n), parametric_formula(n)
        r.cases += 1
        if got != want:
            r.failures.append(_formula_diff("parametric", got, want))
    for n in range(1, max_n_implicit + 1):
        got, want = symbolic_implicit_oracle(n), implicit_formula(n)
        r.cases += 1
        if got != want:
            r.failures.append(_formula_diff("implicit", got, want))
    return r


def check_numeric(seed=DEFAULT_SEED, cases=100, max_n_parametric=8, max_n_implicit=6,
                  rel_tol=1e-9):
    """Pointwise formula evaluation against the series oracles on seeded
    pseudo-random well-conditioned tables (|f'| and |F_y| at least 0.5,
    everything else at most 2 in magnitude).  Closeness is relative, with
    a 1e-12 absolute floor for values that land near zero."""
    r = SuiteResult("numeric")
    rng = np.random.default_rng(seed)
    for i in range(cases):
        n = int(rng.integers(1, max_n_parametric + 1))
        t0 = float(rng.uniform(-1, 1))
        fp = float(rng.uniform(0.5, 2.0)) * float(rng.choice([-1.0, 1.0]))
        f_derivs = (fp,) + tuple(float(v) for v in rng.uniform(-2, 2, n - 1))
        g_derivs = tuple(float(v) for v in rng.uniform(-2, 2, n))
        direct = eval_parametric(parametric_formula(n),
                                 ParametricTable(t0, f_derivs, g_derivs))
        via_series = series_reversion_oracle(Jet.from_derivatives(t0, (0.0,) + f_derivs),
                                             Jet.from_derivatives(t0, (0.0,) + g_derivs),
                                             n)[-1]
        r.cases += 1
        if not math.isclose(direct, via_series, rel_tol=rel_tol, abs_tol=1e-12):
            r.failures.append("parametric case %d (n=%d): %r vs %r"
                              % (i, n, direct, via_series))
    for i in range(cases):
        n = int(rng.integers(1, max_n_implicit + 1))
        x0, y0 = (float(v) for v in rng.uniform(-1, 1, 2))
        partials = {}
        for a in range(n + 1):
            for b in range(n + 1 - a):
                if a + b >= 1:
                    partials[(a, b)] = float(rng.uniform(-2, 2))
        partials[(0, 1)] = float(rng.uniform(0.5, 2.0)) * float(rng.choice([-1.0, 1.0]))
        direct = eval_implicit(implicit_formula(n), ImplicitTable(x0, y0, partials))
        via_series = implicit_series_oracle(
            BivariateJet.from_partials((x0, y0), partials, n), n)[-1]
        r.cases += 1
        if not math.isclose(direct, via_series, rel_tol=rel_tol, abs_tol=1e-12):
            r.failures.append("implicit case %d (n=%d): %r vs %r"
                              % (i, n, direct, via_series))
    return r


def run_all(max_n_parametric=None, max_n_implicit=None, seed=DEFAULT_SEED):
    """Run all five suites.  The optional bounds lower each suite's default
    order ceiling; they never raise it."""

    def bound(default, cap):
        return default if cap is None else min(default, cap)

    return [
        check_enum_recur(bound(6, max_n_parametric), bound(5, max_n_implicit)),
        check_counts(bound(10, max_n_parametric), bound(8, max_n_implicit)),
        check_closed_forms(bound(10, max_n_parametric), bound(8, max_n_implicit)),
        check_oracles(bound(6, max_n_parametric), bound(5, max_n_implicit)),
        check_numeric(seed=seed,
                      max_n_parametric=bound(8, max_n_parametric),
                      max_n_implicit=bound(6, max_n_implicit)),
    ]


def format_report(results):
    lines = ["%-16s %4d cases  %s" % (r.name, r.cases, "ok" if r.ok else "FAIL")
             for r in results]
    for r in results:
        if not r.ok:
            lines.append("first counterexample (%s): %s" % (r.name, r.failures[0]))
            break
    return "\n".join(lines)

"""Command-line front end: print formulas and coefficient layers, evaluate
them at a point, and run the cross-checking suites.

Exit codes: 0 success, 1 verification failure, 2 usage or parse error,
3 numeric precondition failure (f'(t0) = 0 or F_y = 0).
"""

import argparse
import os
import sys

from . import verify as checks
from .algebra import render, render_layer
from .implicit import i_recur, implicit_formula
from .oracle import (
    DegeneratePointError,
    ImplicitTable,
    ParametricTable,
    eval_implicit,
    eval_parametric,
)
from .parametric import inverse_formula, p_recur, parametric_formula
from .partitions import count_implicit_partitions, count_parametric_partitions

ENUM_CAP = 12
RECUR_CAP = 30
CAP_ENV = "NTHDERIV_MAX_N"


def _cap(args, method):
    override = getattr(args, "max_n", None)
    if override is not None:
        return override
    env = os.environ.get(CAP_ENV)
    if env is not None:
        try:
            return int(env)
        except ValueError:
            raise ValueError("%s must be an integer, got %r" % (CAP_ENV, env))
    return ENUM_CAP if method == "enum" else RECUR_CAP


def _check_n(n, cap):
    if n < 1:
        raise ValueError("n must be >= 1")
    if n > cap:
        raise ValueError("n = %d exceeds the cap %d (override with --max-n or %s)"
                         % (n, cap, CAP_ENV))


def cmd_formula(args):
    _check_n(args.n, _cap(args, args.method))
    if args.kind == "parametric":
        f = parametric_formula(args.n, args.method)
    elif args.kind == "implicit":
        f = implicit_formula(args.n, args.method)
    else:
        f = inverse_formula(args.n)
    print(render(f, args.format))
    return 0


def cmd_coeff(args):
    _check_n(args.n, _cap(args, "recur"))
    if args.kind == "parametric":
        layer = p_recur(args.n, args.k)
        count = count_parametric_partitions(args.n, args.k)
    else:
        layer = i_recur(args.n, args.k)
        count = count_implicit_partitions(args.n, args.k)
    print(render_layer(layer))
    print("count = %d" % count)
    return 0


def _floats(text):
    try:
        return tuple(float(v) for v in text.split(","))
    except ValueError:
        raise ValueError("expected comma-separated numbers, got %r" % text)


def _key_values(text):
    out = {}
    for lineno, line in enumerate(text.splitlines(), 1):
        line = line.strip()
        if not line or line.startswith("#"):
            continue
        key, eq, value = line.partition("=")
        if not eq:
            raise ValueError("table line %d is not key=value: %r" % (lineno, line))
        key = key.strip()
        if key in out:
            raise ValueError("duplicate table key %r" % key)
        out[key] = value.strip()
    return out


def parse_parametric_table(text):
    """Parse the parametric table format: one line each of t0=..., f=v1,v2,...
    and g=v1,v2,... where the lists hold f'(t0), f''(t0), ... in order.
    Blank lines and #-comments are ignored."""
    fields = _key_values(text)
    try:
        t0 = float(fields.pop("t0"))
        f_derivs = _floats(fields.pop("f"))
        g_derivs = _floats(fields.pop("g"))
    except KeyError as exc:
        raise ValueError("table is missing the %s line" % exc)
    if fields:
        raise ValueError("unknown table keys: %s" % ", ".join(sorted(fields)))
    return ParametricTable(t0, f_derivs, g_derivs)


def _partial_pair(text):
    parts = text.split("_")
    if len(parts) == 2:
        try:
            return int(parts[0]), int(parts[1])
        except ValueError:
            pass
    raise ValueError("expected a partial order pair like 1_0, got %r" % text)


def parse_implicit_table(text):
    """Parse the implicit table format: x0=..., y0=..., and one line
    F_a_b=value per partial (F_0_0 is F at the point, zero if omitted)."""
    fields = _key_values(text)
    try:
        x0 = float(fields.pop("x0"))
        y0 = float(fields.pop("y0"))
    except KeyError as exc:
        raise ValueError("table is missing the %s line" % exc)
    partials = {}
    for key, value in fields.items():
        if not key.startswith("F_"):
            raise ValueError("unknown table key %r" % key)
        partials[_partial_pair(key[2:])] = float(value)
    return ImplicitTable(x0, y0, partials)


def _read_source(path):
    if path == "-":
        return sys.stdin.read()
    with open(path) as handle:
        return handle.read()


def _parametric_table(args, need_g=True):
    if args.table:
        return parse_parametric_table(_read_source(args.table))
    if args.t0 is None or args.f is None or (need_g and args.g is None):
        raise ValueError("eval needs --table, or all of --t0, --f and --g")
    g = _floats(args.g) if args.g is not None else ()
    return ParametricTable(args.t0, _floats(args.f), g)


def _implicit_table(args):
    if args.table:
        return parse_implicit_table(_read_source(args.table))
    if args.x0 is None or args.y0 is None or not args.partial:
        raise ValueError("eval needs --table, or --x0, --y0 and --F entries")
    partials = {}
    for item in args.partial:
        key, eq, value = item.partition("=")
        if not eq:
            raise ValueError("--F expects A_B=VALUE, got %r" % item)
        partials[_partial_pair(key)] = float(value)
    return ImplicitTable(args.x0, args.y0, partials)


def cmd_eval(args):
    _check_n(args.n, _cap(args, "recur"))
    if args.kind == "implicit":
        value = eval_implicit(implicit_formula(args.n), _implicit_table(args))
    elif args.kind == "parametric":
        value = eval_parametric(parametric_formula(args.n), _parametric_table(args))
    else:
        # the inverse formula never consults g, so --g may be omitted
        value = eval_parametric(inverse_formula(args.n),
                                _parametric_table(args, need_g=False))
    print("%.15g" % value)
    return 0


def cmd_verify(args):
    results = checks.run_all(args.max_n_parametric, args.max_n_implicit, args.seed)
    print(checks.format_report(results))
    return 0 if all(r.ok for r in results) else 1


def build_parser():
    parser = argparse.ArgumentParser(
        prog="nthderiv",
        description="Closed-form nth derivatives of parametric, implicit and "
                    "inverse functions.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("formula", help="print the full nth-derivative formula")
    p.add_argument("kind", choices=("parametric", "implicit", "inverse"))
    p.add_argument("n", type=int)
    p.add_argument("--format", choices=("text", "latex", "json"), default="text")
    p.add_argument("--method", choices=("enum", "recur"), default="recur",
                   help="build layers by partition enumeration or by recurrence")
    p.add_argument("--max-n", type=int, default=None,
                   help="raise the order cap (default %d enum, %d recur)"
                        % (ENUM_CAP, RECUR_CAP))
    p.set_defaults(func=cmd_formula)

    p = sub.add_parser("coeff", help="print one coefficient layer and its partition count")
    p.add_argument("kind", choices=("parametric", "implicit"))
    p.add_argument("n", type=int)
    p.add_argument("k", type=int)
    p.add_argument("--max-n", type=int, default=None)
    p.set_defaults(func=cmd_coeff)

    p = sub.add_parser("eval", help="evaluate the nth derivative at a point")
    p.add_argument("kind", choices=("parametric", "implicit", "inverse"))
    p.add_argument("n", type=int)
    p.add_argument("--table", metavar="PATH", help="table file (- for stdin)")
    p.add_argument("--t0", type=float, help="parametric/inverse: the parameter value")
    p.add_argument("--f", help="comma-separated f'(t0), f''(t0), ...")
    p.add_argument("--g", help="comma-separated g'(t0), g''(t0), ...")
    p.add_argument("--x0", type=float, help="implicit: x at the point")
    p.add_argument("--y0", type=float, help="implicit: y at the point")
    p.add_argument("--F", dest="partial", action="append", metavar="A_B=V",
                   help="implicit: one partial value, e.g. --F 1_0=1.2 (repeatable)")
    p.set_defaults(func=cmd_eval)

    p = sub.add_parser("verify", help="run the cross-checking suites")
    p.add_argument("--max-n-parametric", type=int, default=None,
                   help="lower the parametric order ceilings")
    p.add_argument("--max-n-implicit", type=int, default=None,
                   help="lower the implicit order ceilings")
    p.add_argument("--seed", type=int, default=checks.DEFAULT_SEED,
                   help="seed for the random numeric tables (default %d)"
                        % checks.DEFAULT_SEED)
    p.set_defaults(func=cmd_verify)
    return parser


def main(argv=None):
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except DegeneratePointError as exc:
        print("error: %s" % exc, file=sys.stderr)
        return 3
    except (ValueError, OSError) as exc:
        print("error: %s" % exc, file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())

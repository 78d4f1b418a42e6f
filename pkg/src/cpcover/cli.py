"""Command-line front end: intervals, coverage, bound curves, simulations.

Subcommands mirror the library one-to-one:

    ci          exact interval for (n, k, delta)
    coverage    exact coverage at one p or over a p-grid
    bound       conservatism bound curves over an n-grid (the figure)
    simulate    replicated estimation at a known p vs. the exact coverage
    demo-robust instability-probability estimate for an uncertain polynomial

Formats: json (default), csv, or svg for the curve-producing commands.
Numeric output carries 15 significant digits, locale-independent.
Exit codes: 0 success, 2 usage or validation error, 3 runtime computation
error.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from .coverage import (
    BoundaryMode,
    bound_curve,
    classify_regime,
    conservatism_bound,
    coverage_curve,
    default_p_grid,
    log_spaced_trial_grid,
)
from .intervals import ConfidenceSpec, interval
from .montecarlo import TrialError, empirical_coverage, estimate_instability_probability
from .stability import UncertainPolynomial
from .svg import line_chart

DEFAULT_BOUND_DELTAS = (0.001, 0.01, 0.05)


def _fmt(x: float) -> str:
    return format(float(x), ".15g")


def _rounded(x: float) -> float:
    return float(_fmt(x))


def _json(payload) -> str:
    return json.dumps(payload) + "\n"


def _csv(header: list[str], rows: list[list[str]]) -> str:
    lines = [",".join(header)] + [",".join(row) for row in rows]
    return "\n".join(lines) + "\n"


def _require_curve_format(fmt: str, is_curve: bool) -> None:
    if fmt == "svg" and not is_curve:
        raise ValueError("svg output is only available for curve-producing commands")


def cmd_ci(args: argparse.Namespace) -> str:
    _require_curve_format(args.format, is_curve=False)
    spec = ConfidenceSpec(args.n, args.k, args.delta)
    iv = interval(spec)
    if args.format == "csv":
        return _csv(
            ["n", "k", "delta", "lower", "upper"],
            [[str(spec.n), str(spec.k), _fmt(spec.delta), _fmt(iv.lower), _fmt(iv.upper)]],
        )
    return _json(
        {
            "n": spec.n,
            "k": spec.k,
            "delta": _rounded(spec.delta),
            "lower": _rounded(iv.lower),
            "upper": _rounded(iv.upper),
        }
    )


def cmd_coverage(args: argparse.Namespace) -> str:
    if args.p is not None and args.grid is not None:
        raise ValueError("give either --p or --grid, not both")
    single_point = args.p is not None
    _require_curve_format(args.format, is_curve=not single_point)
    mode = BoundaryMode(args.boundary)
    grid = [args.p] if single_point else default_p_grid(args.grid if args.grid is not None else 999)
    curve = coverage_curve(args.n, args.delta, grid, mode)
    if args.format == "svg":
        ps = [pt.p for pt in curve.points]
        cs = [pt.coverage for pt in curve.points]
        label = f"n = {args.n}, delta = {args.delta:g} ({mode.value})"
        return line_chart(
            [(label, ps, cs)],
            title="Clopper-Pearson coverage probability",
            x_label="true proportion",
            y_label="coverage probability",
        )
    if args.format == "csv":
        rows = [[_fmt(pt.p), _fmt(pt.coverage)] for pt in curve.points]
        return _csv(["p", "coverage"], rows)
    return _json([{"p": _rounded(pt.p), "coverage": _rounded(pt.coverage)} for pt in curve.points])


def cmd_bound(args: argparse.Namespace) -> str:
    deltas = args.delta if args.delta else list(DEFAULT_BOUND_DELTAS)
    grid = log_spaced_trial_grid(args.n_min, args.n_max, args.points)
    if not grid:
        raise ValueError("trial grid is empty")
    curves = [(delta, bound_curve(delta, grid)) for delta in deltas]
    if args.format == "svg":
        chart = [
            (f"delta = {delta:g}", [float(n) for n, _ in pts], [b for _, b in pts])
            for delta, pts in curves
        ]
        return line_chart(
            chart,
            title="Conservatism bound of the Clopper-Pearson interval",
            x_label="sample size",
            y_label="proportion bound 1-(delta/2)^(1/n)",
            log_x=True,
            log_y=True,
        )
    if args.format == "csv":
        rows = [[_fmt(delta), str(n), _fmt(b)] for delta, pts in curves for n, b in pts]
        return _csv(["delta", "n", "bound"], rows)
    return _json(
        [
            {"delta": _rounded(delta), "n": n, "bound": _rounded(b)}
            for delta, pts in curves
            for n, b in pts
        ]
    )


def cmd_simulate(args: argparse.Namespace) -> str:
    _require_curve_format(args.format, is_curve=False)
    report = empirical_coverage(args.p, args.n, args.delta, args.reps, args.seed)
    fields = [
        ("p", _rounded(args.p)),
        ("n", args.n),
        ("delta", _rounded(args.delta)),
        ("replications", report.replications),
        ("seed", args.seed),
        ("hits", report.hits),
        ("empirical_coverage", _rounded(report.empirical_coverage)),
        ("exact_coverage", _rounded(report.exact_coverage_reference)),
    ]
    if args.format == "csv":
        return _csv([name for name, _ in fields], [[_fmt(v) if isinstance(v, float) else str(v) for _, v in fields]])
    return _json(dict(fields))


def load_polynomial_config(path: str | Path) -> UncertainPolynomial:
    """Parse the flat `key = value` demo config into an UncertainPolynomial.

    Recognized keys: `degree`, then `coeff_{i}_low` / `coeff_{i}_high` for
    each coefficient index i = 0..degree (ascending powers).  `#` starts a
    comment; blank lines are ignored.
    """
    entries: dict[str, str] = {}
    with open(path, encoding="utf-8") as fh:
        for lineno, raw in enumerate(fh, 1):
            line = raw.split("#", 1)[0].strip()
            if not line:
                continue
            key, sep, value = line.partition("=")
            if not sep:
                raise ValueError(f"{path}:{lineno}: expected 'key = value', got {line!r}")
            entries[key.strip()] = value.strip()
    if "degree" not in entries:
        raise ValueError(f"{path}: missing 'degree'")
    degree = int(entries.pop("degree"))
    intervals = []
    for i in range(degree + 1):
        lo_key, hi_key = f"coeff_{i}_low", f"coeff_{i}_high"
        if lo_key not in entries or hi_key not in entries:
            raise ValueError(f"{path}: missing '{lo_key}' / '{hi_key}'")
        intervals.append((float(entries.pop(lo_key)), float(entries.pop(hi_key))))
    if entries:
        raise ValueError(f"{path}: unknown keys {sorted(entries)}")
    return UncertainPolynomial(degree=degree, coefficient_intervals=tuple(intervals))


def cmd_demo_robust(args: argparse.Namespace) -> str:
    _require_curve_format(args.format, is_curve=False)
    poly = load_polynomial_config(args.config)
    result = estimate_instability_probability(poly, args.n, args.delta, args.seed)
    if 0.0 < result.p_hat < 1.0:
        regime = classify_regime(args.n, args.delta, result.p_hat).regime.value
    else:
        regime = None  # regime classification is defined for interior p only
    fields = [
        ("n", result.n),
        ("delta", _rounded(result.delta)),
        ("seed", args.seed),
        ("k", result.k),
        ("p_hat", _rounded(result.p_hat)),
        ("lower", _rounded(result.interval.lower)),
        ("upper", _rounded(result.interval.upper)),
        ("bound", _rounded(conservatism_bound(args.n, args.delta))),
        ("regime", regime),
    ]
    if args.format == "csv":
        row = []
        for _, v in fields:
            if v is None:
                row.append("")
            elif isinstance(v, float):
                row.append(_fmt(v))
            else:
                row.append(str(v))
        return _csv([name for name, _ in fields], [row])
    return _json(dict(fields))


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="cpcover",
        description="Exact Clopper-Pearson intervals, their true coverage, and conservatism bounds.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add_format(p: argparse.ArgumentParser) -> None:
        p.add_argument("--format", choices=["json", "csv", "svg"], default="json")

    p_ci = sub.add_parser("ci", help="exact confidence interval for (n, k, delta)")
    p_ci.add_argument("--n", type=int, required=True, help="number of trials")
    p_ci.add_argument("--k", type=int, required=True, help="number of successes")
    p_ci.add_argument("--delta", type=float, required=True, help="confidence parameter in (0, 1)")
    add_format(p_ci)
    p_ci.set_defaults(handler=cmd_ci)

    p_cov = sub.add_parser("coverage", help="exact coverage probability at p or over a grid")
    p_cov.add_argument("--n", type=int, required=True)
    p_cov.add_argument("--delta", type=float, required=True)
    p_cov.add_argument("--p", type=float, help="single true proportion in (0, 1)")
    p_cov.add_argument("--grid", type=int, help="evaluate at i/(grid+1) for i = 1..grid")
    p_cov.add_argument("--boundary", choices=["closed", "open"], default="closed")
    add_format(p_cov)
    p_cov.set_defaults(handler=cmd_coverage)

    p_bound = sub.add_parser("bound", help="conservatism bound curves over an n-grid")
    p_bound.add_argument("--delta", type=float, action="append", help="repeatable; default 0.001 0.01 0.05")
    p_bound.add_argument("--n-min", type=int, default=100)
    p_bound.add_argument("--n-max", type=int, default=100_000)
    p_bound.add_argument("--points", type=int, default=200, help="log-spaced grid size")
    add_format(p_bound)
    p_bound.set_defaults(handler=cmd_bound)

    p_sim = sub.add_parser("simulate", help="replicated estimation at a known p")
    p_sim.add_argument("--p", type=float, required=True)
    p_sim.add_argument("--n", type=int, required=True)
    p_sim.add_argument("--delta", type=float, required=True)
    p_sim.add_argument("--reps", type=int, default=1000)
    p_sim.add_argument("--seed", type=int, default=0)
    add_format(p_sim)
    p_sim.set_defaults(handler=cmd_simulate)

    p_demo = sub.add_parser("demo-robust", help="instability probability of an uncertain polynomial")
    p_demo.add_argument("--config", required=True, help="key = value file describing the polynomial")
    p_demo.add_argument("--n", type=int, default=10_000)
    p_demo.add_argument("--delta", type=float, default=0.01)
    p_demo.add_argument("--seed", type=int, default=0)
    add_format(p_demo)
    p_demo.set_defaults(handler=cmd_demo_robust)

    return parser


def main(argv: list[str] | None = None) -> int:
    args = _build_parser().parse_args(argv)
    try:
        output = args.handler(args)
    except TrialError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 3
    except (ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    sys.stdout.write(output)
    return 0


if __name__ == "__main__":
    sys.exit(main())

"""Command-line front end.

Every number printed here round-trips through the library API; the CLI only
parses flags, builds grids, collects rows and renders tables.  Exit codes:
0 success, 1 verification failure, 2 usage error.
"""
from __future__ import annotations

import json
import math
import sys

import click
import numpy as np

from . import bounds as bounds_mod
from . import cumulative as cum
from . import residual as res
from . import tsallis as ts
from .distributions import parse_model_spec
from .errors import DivergenceError, DomainError, InfeasibleConstruction
from .report import OutputTable, render_figure, write_table
from .simulate import SimulationConfig, mc_entropy_estimate
from .tsallis import DesignSpec

PAIRS = {
    "rss-srs": ("rss", "srs"),
    "mrssu-srs": ("mrssu", "srs"),
    "rss-mrssu": ("rss", "mrssu"),
}


def _model(spec: str):
    try:
        return parse_model_spec(spec)
    except DomainError as exc:
        raise click.UsageError(str(exc))


def _grid(single, rng, name, default=None):
    """Resolve a --x / --x-range pair into a list of floats."""
    if single is not None and rng is not None:
        raise click.UsageError(f"--{name} and --{name}-range are mutually exclusive")
    if rng is not None:
        parts = rng.split(":")
        if len(parts) != 3:
            raise click.UsageError(f"--{name}-range must be lo:hi:steps")
        try:
            lo, hi, steps = float(parts[0]), float(parts[1]), int(parts[2])
        except ValueError:
            raise click.UsageError(f"could not parse --{name}-range {rng!r}")
        if steps < 1:
            raise click.UsageError("steps must be >= 1")
        return [float(v) for v in np.linspace(lo, hi, steps)]
    if single is not None:
        return [float(single)]
    return default


def _is_shannon_limit(a: float) -> bool:
    """Grid sweeps may land exactly on alpha = 1, where the Tsallis measures
    have a removable singularity; such rows are flagged instead of aborting
    the whole sweep."""
    return a == 1.0


def _emit(table: OutputTable, out, plot=None, x=None, y=()):
    text = write_table(table, out)
    if out is None:
        click.echo(text, nl=False)
    if plot is not None:
        render_figure(table, x, list(y), plot)


def _json_cell(obj):
    return json.dumps(obj, sort_keys=True) if obj is not None else ""


fmt_option = click.option("--format", "fmt", type=click.Choice(["csv", "json"]), default="csv")
out_option = click.option("--out", type=click.Path(dir_okay=False, writable=True), default=None)
plot_option = click.option(
    "--plot", type=click.Path(dir_okay=False, writable=True), default=None,
    help="Also render the table as a figure at this path.",
)
model_option = click.option("--model", "model_spec", required=True)


@click.group()
def main():
    """Entropy measures of SRS/RSS/MRSSU sampling designs."""


@main.command()
@model_option
@click.option("--design", type=click.Choice(["srs", "rss", "mrssu"]), default="srs")
@click.option("--n", type=int, default=1)
@click.option("--alpha", type=float, default=None)
@click.option("--alpha-range", default=None)
@fmt_option
@out_option
@plot_option
def entropy(model_spec, design, n, alpha, alpha_range, fmt, out, plot):
    """Tsallis entropy of a sampling design over an alpha grid."""
    model = _model(model_spec)
    alphas = _grid(alpha, alpha_range, "alpha")
    if alphas is None:
        raise click.UsageError("one of --alpha / --alpha-range is required")
    spec = DesignSpec(design, n)
    table = OutputTable(["alpha", "value", "method", "error_estimate", "status"], format=fmt)
    for a in alphas:
        if _is_shannon_limit(a):
            table.add_row(a, math.nan, "", math.nan, "alpha-limit")
            continue
        try:
            rep = ts.tsallis_design(model, a, spec)
            table.add_row(a, rep.value, rep.method, rep.error_estimate, "ok")
        except DivergenceError:
            table.add_row(a, math.nan, "", math.nan, "divergent")
        except DomainError as exc:
            raise click.UsageError(str(exc))
    _emit(table, out, plot, "alpha", ["value"])


@main.command()
@model_option
@click.option("--pair", type=click.Choice(sorted(PAIRS)), required=True)
@click.option("--n", type=int, default=2)
@click.option("--alpha", type=float, default=None)
@click.option("--alpha-range", default=None)
@fmt_option
@out_option
@plot_option
def delta(model_spec, pair, n, alpha, alpha_range, fmt, out, plot):
    """Entropy difference between two designs over an alpha grid."""
    model = _model(model_spec)
    alphas = _grid(alpha, alpha_range, "alpha")
    if alphas is None:
        raise click.UsageError("one of --alpha / --alpha-range is required")
    d1, d2 = (DesignSpec(d, n) for d in PAIRS[pair])
    table = OutputTable(["alpha", "delta", "status"], format=fmt)
    for a in alphas:
        if _is_shannon_limit(a):
            table.add_row(a, math.nan, "alpha-limit")
            continue
        try:
            s1 = ts.tsallis_design(model, a, d1)
            s2 = ts.tsallis_design(model, a, d2)
            table.add_row(a, s1.value - s2.value, "ok")
        except DivergenceError:
            table.add_row(a, math.nan, "divergent")
        except DomainError as exc:
            raise click.UsageError(str(exc))
    _emit(table, out, plot, "alpha", ["delta"])


@main.command()
@model_option
@click.option("--design", type=click.Choice(["srs", "mrssu"]), default="srs")
@click.option("--n", type=int, default=1)
@click.option("--alpha", type=float, default=None)
@click.option("--alpha-range", default=None)
@click.option("--t", type=float, default=None)
@click.option("--t-range", default=None)
@fmt_option
@out_option
@plot_option
def cumulative(model_spec, design, n, alpha, alpha_range, t, t_range, fmt, out, plot):
    """Cumulative Tsallis entropy table over (alpha, t) grids.

    Without a truncation time the unconditional measure is computed; with
    --t / --t-range the dynamic (past-lifetime) version is.
    """
    model = _model(model_spec)
    alphas = _grid(alpha, alpha_range, "alpha")
    if alphas is None:
        raise click.UsageError("one of --alpha / --alpha-range is required")
    ts_grid = _grid(t, t_range, "t")
    spec = DesignSpec(design, n)
    table = OutputTable(["alpha", "t", "value", "method", "error_estimate", "status"], format=fmt)
    for a in alphas:
        for tv in ts_grid if ts_grid is not None else [None]:
            if _is_shannon_limit(a):
                table.add_row(a, "" if tv is None else tv, math.nan, "", math.nan, "alpha-limit")
                continue
            try:
                if tv is None:
                    rep = cum.cte_design(model, a, spec)
                elif design == "srs":
                    rep = cum.cte_dynamic_srs(model, a, n, tv)
                else:
                    rep = cum.cte_dynamic_mrssu(model, a, n, tv)
                table.add_row(a, "" if tv is None else tv, rep.value, rep.method,
                              rep.error_estimate, "ok")
            except DivergenceError:
                table.add_row(a, "" if tv is None else tv, math.nan, "", math.nan, "divergent")
            except DomainError as exc:
                raise click.UsageError(str(exc))
    _emit(table, out, plot, "alpha", ["value"])


@main.command()
@model_option
@click.option("--design", type=click.Choice(["srs", "mrssu"]), default="mrssu")
@click.option("--n", type=int, default=1)
@click.option("--alpha", type=float, default=None)
@click.option("--alpha-range", default=None)
@click.option("--t", type=float, default=None)
@click.option("--t-range", default=None)
@fmt_option
@out_option
@plot_option
def residual(model_spec, design, n, alpha, alpha_range, t, t_range, fmt, out, plot):
    """Residual Tsallis entropy table over (alpha, t) grids."""
    model = _model(model_spec)
    alphas = _grid(alpha, alpha_range, "alpha")
    if alphas is None:
        raise click.UsageError("one of --alpha / --alpha-range is required")
    t_grid = _grid(t, t_range, "t", default=[0.0])
    fn = res.residual_srs if design == "srs" else res.residual_mrssu
    table = OutputTable(["alpha", "t", "value", "method", "error_estimate", "status"], format=fmt)
    for a in alphas:
        for tv in t_grid:
            if _is_shannon_limit(a):
                table.add_row(a, tv, math.nan, "", math.nan, "alpha-limit")
                continue
            try:
                rep = fn(model, a, n, tv)
                table.add_row(a, tv, rep.value, rep.method, rep.error_estimate, "ok")
            except (DivergenceError, DomainError) as exc:
                if isinstance(exc, DomainError) and "alpha" in str(exc):
                    raise click.UsageError(str(exc))
                table.add_row(a, tv, math.nan, "", math.nan, "error")
    x = "t" if len(t_grid) > 1 else "alpha"
    _emit(table, out, plot, x, ["value"])


@main.command()
@model_option
@click.option("--n", type=int, default=2)
@click.option("--alpha", type=float, default=None)
@click.option("--alpha-range", default=None)
@click.option("--t", type=float, default=None,
              help="Truncation time; selects the dynamic cumulative sandwich.")
@click.option("--variant", type=click.Choice(["proof", "statement"]), default="proof")
@fmt_option
@out_option
def bounds(model_spec, n, alpha, alpha_range, t, variant, fmt, out):
    """Sandwich bounds with per-row verdicts.

    Without --t: Steffensen bounds on the MRSSU Tsallis entropy.  With --t:
    Hayashi bounds on the dynamic MRSSU cumulative Tsallis entropy.
    """
    model = _model(model_spec)
    alphas = _grid(alpha, alpha_range, "alpha")
    if alphas is None:
        raise click.UsageError("one of --alpha / --alpha-range is required")
    table = OutputTable(["alpha", "lower", "upper", "value", "status"], format=fmt)
    failures = 0
    for a in alphas:
        if _is_shannon_limit(a):
            table.add_row(a, math.nan, math.nan, math.nan, "alpha-limit")
            continue
        try:
            if t is None:
                interval = bounds_mod.steffensen_bounds(model, a, n, variant=variant)
                value = ts.tsallis_mrssu(model, a, n).value
            else:
                interval = bounds_mod.hayashi_bounds(model, a, t, n)
                value = cum.cte_dynamic_mrssu(model, a, n, t).value
        except InfeasibleConstruction:
            table.add_row(a, math.nan, math.nan, math.nan, "infeasible")
            continue
        except DomainError as exc:
            raise click.UsageError(str(exc))
        ok = interval.contains(value)
        failures += 0 if ok else 1
        table.add_row(a, interval.lower, interval.upper, value, "holds" if ok else "violated")
    _emit(table, out)
    if failures:
        sys.exit(1)


@main.command()
@model_option
@click.option("--design", type=click.Choice(["srs", "rss", "mrssu"]), default="mrssu")
@click.option("--n", type=int, default=2)
@click.option("--alpha", type=float, default=None)
@click.option("--alpha-range", default=None)
@click.option("--measure", type=click.Choice(["tsallis", "residual"]), default="tsallis")
@click.option("--t", type=float, default=0.0)
@click.option("--seed", type=int, default=0)
@click.option("--reps", type=int, default=10000)
@fmt_option
@out_option
def simulate(model_spec, design, n, alpha, alpha_range, measure, t, seed, reps, fmt, out):
    """Monte Carlo design-entropy estimates with analytic cross-checks."""
    model = _model(model_spec)
    alphas = _grid(alpha, alpha_range, "alpha")
    if alphas is None:
        raise click.UsageError("one of --alpha / --alpha-range is required")
    if measure == "residual" and design == "rss":
        raise click.UsageError("residual analytics cover the srs and mrssu designs")
    spec = DesignSpec(design, n)
    cfg = SimulationConfig(seed, reps, spec, model)
    table = OutputTable(
        ["alpha", "estimate", "halfwidth", "analytic", "within_3_halfwidths"], format=fmt
    )
    for a in alphas:
        if _is_shannon_limit(a):
            table.add_row(a, math.nan, math.nan, math.nan, "alpha-limit")
            continue
        try:
            mc = mc_entropy_estimate(cfg, a, measure=measure, t=t)
            if measure == "tsallis":
                analytic = ts.tsallis_design(model, a, spec).value
            elif design == "srs":
                analytic = res.residual_srs(model, a, n, t).value
            else:
                analytic = res.residual_mrssu(model, a, n, t).value
        except DomainError as exc:
            raise click.UsageError(str(exc))
        ok = abs(mc.value - analytic) <= 3.0 * mc.error_estimate
        table.add_row(a, mc.value, mc.error_estimate, analytic, ok)
    _emit(table, out)


@main.command()
@click.option("--suite", type=click.Choice(["all"]), default="all")
@fmt_option
@out_option
def verify(suite, fmt, out):
    """Run the theorem suite and emit the ledger; exit 1 on hard failures."""
    ledger = bounds_mod.theorem_suite()
    table = OutputTable(
        ["theorem", "instance", "hypothesis", "conclusion", "witness"], format=fmt
    )
    for entry in ledger:
        table.add_row(
            entry["theorem"],
            _json_cell(entry["instance"]),
            entry["hypothesis"],
            entry["conclusion"],
            _json_cell(entry["witness"]),
        )
    _emit(table, out)
    if bounds_mod.suite_has_hard_failures(ledger):
        sys.exit(1)


if __name__ == "__main__":
    main()

"""Implement the `isdc` command line interface."""
import logging

import click
import yaml

from isdc.core.multigrid import AUTO, JACOBI, MULTICOLOR
from isdc.core.quadrature import NODE_RULES
from isdc.core.sweeper import GUESS_POLICIES, MODES
from isdc.experiments import (
    METHODS,
    METHOD_SEQ,
    REF_SEMIDISCRETE,
    REFERENCES,
    ExperimentSpec,
    ProbAblation,
    ProbMatrix,
    RunRecord,
    ablation_specs,
    compute_savings,
    format_csv,
    published_matrix,
    render_order_table,
    render_table,
    run_order_study,
    run_specs,
    write_csv,
    write_points_csv,
)
from isdc.experiments.order import (
    DEFAULT_DTS,
    DEFAULT_FINAL_TIME,
    DEFAULT_SWEEPS,
    SolOrderStudy,
)
from isdc.utils.logging import configure_logger

from .report import get_report

logger = logging.getLogger(__name__)

PRESETS = ("heat", "burgers", "all")

SPEC_OPTIONS = [
    click.option("--problem", type=click.Choice(["heat", "burgers", "dahlquist"])),
    click.option("--nu", type=float, help="Diffusion coefficient."),
    click.option("--nodes", "num_nodes", type=int, help="Number of nodes M."),
    click.option("--rule", type=click.Choice(NODE_RULES)),
    click.option("--mode", type=click.Choice(MODES)),
    click.option("--l-cycles", "num_cycles", type=int, help="V-cycles per solve."),
    click.option(
        "--early-stop/--no-early-stop",
        default=None,
        help="End an ISDC solve once the defect meets the inner tolerance.",
    ),
    click.option("--dt", type=float, help="Step size."),
    click.option("--grid", type=int, help="Grid resolution."),
    click.option("--tol", "residual_tol", type=float, help="Residual threshold."),
    click.option("--inner-tol", type=float, help="Tolerance of the full solves."),
    click.option("--max-sweeps", type=int, help="Maximum number of sweeps."),
    click.option("--guess", type=click.Choice(GUESS_POLICIES)),
    click.option("--ic", type=click.Choice(["radial", "x"])),
    click.option("--smoother", type=click.Choice([AUTO, MULTICOLOR, JACOBI])),
    click.option(
        "--convention", "grid_convention", type=click.Choice(["spacing", "points"])
    ),
    click.option(
        "--config",
        "config_path",
        type=click.Path(dir_okay=False),
        help="Configuration file in key = value form.",
    ),
    click.option("--out", type=click.Path(dir_okay=False), help="Output CSV file."),
    click.option(
        "--json",
        "json_dir",
        type=click.Path(file_okay=False),
        help="Directory of the per-run JSON records.",
    ),
]

SPEC_KEYS = (
    "problem",
    "nu",
    "num_nodes",
    "rule",
    "mode",
    "num_cycles",
    "early_stop",
    "dt",
    "grid",
    "residual_tol",
    "inner_tol",
    "max_sweeps",
    "guess",
    "ic",
    "smoother",
    "grid_convention",
)


def spec_options(func):
    """Add the experiment setting flags to a command."""
    for option in reversed(SPEC_OPTIONS):
        func = option(func)
    return func


def save_options(func):
    """Add the solution directory flags to a command."""
    func = click.option(
        "--name", default="results", show_default=True, help="Solution name."
    )(func)
    return click.option(
        "--save",
        "save_dir",
        type=click.Path(file_okay=False),
        help="Parent directory of the solution directory.",
    )(func)


def _overrides(kwargs):
    return {k: kwargs[k] for k in SPEC_KEYS if kwargs.get(k) is not None}


def _build_specs(kwargs, preset=None):
    """Return the runs described by the flags, the configuration file or a preset.

    Raises
    ------
    click.ClickException
        If the configuration file cannot be read or a setting is invalid.
    """
    overrides = _overrides(kwargs)
    try:
        if preset is not None:
            return published_matrix(preset, **overrides)
        if kwargs.get("config_path") is not None:
            return ExperimentSpec.from_config(kwargs["config_path"], **overrides)
        return ExperimentSpec.expand(overrides)
    except (FileNotFoundError, ValueError) as e:
        raise click.ClickException(str(e))


def _single_setup(specs, command):
    if len(specs) != 1:
        raise click.ClickException(
            f"Command '{command}' expects one setup, the settings describe "
            f"{len(specs)}."
        )
    return specs[0]


def _save_records(specs, outcomes, json_dir):
    for i, (spec, (row, stats)) in enumerate(zip(specs, outcomes)):
        RunRecord(f"run_{i:04d}", json_dir, spec=spec, stats=stats, row=row).save()


def _solve(prob, kwargs, method, n_proc):
    """Solve an experiment into the directory given by `--save`."""
    try:
        sol = prob.solve(
            kwargs["name"], kwargs["save_dir"], method, n_proc, records=True
        )
    except OSError as e:
        raise click.ClickException(f"Could not write the results: {e}")
    click.echo(sol.get_table())
    return sol


def _run(specs, kwargs, method=METHOD_SEQ, n_proc=1, title="Accumulated V-cycles"):
    """Run `specs` and write the outputs.

    The CSV goes to `--out` and the table view to the standard output. Without `--out`,
    the CSV goes to the standard output.
    """
    outcomes = run_specs(specs, method, n_proc)
    rows = compute_savings([row for row, _ in outcomes])
    try:
        if kwargs.get("json_dir") is not None:
            _save_records(specs, outcomes, kwargs["json_dir"])
        if kwargs.get("out") is None:
            click.echo(format_csv(rows), nl=False)
            return rows
        write_csv(rows, kwargs["out"])
    except OSError as e:
        raise click.ClickException(f"Could not write the results: {e}")
    click.echo(render_table(rows, title=f"{title} (sweeps)"))
    return rows


@click.group()
@click.option("-v", "--verbose", is_flag=True, help="Log debug messages.")
@click.option("-q", "--quiet", is_flag=True, help="Log warnings and errors only.")
def cli(verbose, quiet):
    """Run SDC and ISDC benchmarks on 2D diffusion problems."""
    level = logging.INFO
    if verbose:
        level = logging.DEBUG
    elif quiet:
        level = logging.WARNING
    configure_logger(level)


@cli.command()
@spec_options
def single(**kwargs):
    """Run a single experiment."""
    _run([_single_setup(_build_specs(kwargs), "single")], kwargs)


@cli.command()
@spec_options
@click.option("--preset", type=click.Choice(PRESETS), help="Published matrix to run.")
@click.option("--method", type=click.Choice(METHODS), default=METHOD_SEQ)
@click.option("--n-proc", type=int, default=1, help="Number of processes.")
@save_options
def matrix(preset, method, n_proc, **kwargs):
    """Run a matrix of SDC and ISDC experiments.

    Without a configuration file, the published matrix of `--preset` (heat by default)
    is run with the other flags applied to every run. With `--save`, the results are
    written as a solution directory instead.
    """
    if preset is None and kwargs.get("config_path") is None:
        preset = "heat"
    specs = _build_specs(kwargs, preset)
    if kwargs.get("save_dir") is not None:
        _solve(ProbMatrix(specs=specs), kwargs, method, n_proc)
        return
    _run(specs, kwargs, method, n_proc)


@cli.command()
@spec_options
@click.option("--method", type=click.Choice(METHODS), default=METHOD_SEQ)
@click.option("--n-proc", type=int, default=1, help="Number of processes.")
@save_options
def ablation(method, n_proc, **kwargs):
    """Run SDC and ISDC under every initial guess policy."""
    spec = _single_setup(_build_specs(kwargs), "ablation")
    if kwargs.get("save_dir") is not None:
        _solve(ProbAblation(spec=spec), kwargs, method, n_proc)
        return
    _run(ablation_specs(spec), kwargs, method, n_proc, "Initial guess ablation")


@cli.command()
@spec_options
@click.option("--sweeps", type=int, multiple=True, help="Sweeps per step (repeatable).")
@click.option("--dts", type=float, multiple=True, help="Step size (repeatable).")
@click.option("--final-time", type=float, default=DEFAULT_FINAL_TIME)
@click.option("--reference", type=click.Choice(REFERENCES), default=REF_SEMIDISCRETE)
def order(sweeps, dts, final_time, reference, **kwargs):
    """Measure the temporal order of a fixed number of sweeps."""
    spec = _single_setup(_build_specs(kwargs), "order")
    try:
        points = run_order_study(
            spec, sweeps or DEFAULT_SWEEPS, dts or DEFAULT_DTS, final_time, reference
        )
    except ValueError as e:
        raise click.ClickException(str(e))
    try:
        if kwargs.get("json_dir") is not None:
            SolOrderStudy("order", kwargs["json_dir"], points=points).save()
        if kwargs.get("out") is not None:
            write_points_csv(points, kwargs["out"])
    except OSError as e:
        raise click.ClickException(f"Could not write the results: {e}")
    click.echo(render_order_table(points))


@cli.command()
def report():
    """Print the environment as YAML."""
    click.echo(yaml.dump(get_report()))

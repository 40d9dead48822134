"""Run single experiments and collections of experiments."""
import itertools as iter
import logging
import multiprocessing as mp

from isdc.core.objects import ObjFile
from isdc.core.sweeper import RunStats, run_step
from isdc.utils.logging import log_duration

from .row import ResultRow

logger = logging.getLogger(__name__)

METHOD_SEQ = "sequential"
METHOD_MUL = "multiprocessing"
METHODS = (METHOD_SEQ, METHOD_MUL)


class RunRecord(ObjFile):
    """Store the settings and the full statistics of one run as JSON.

    Parameters
    ----------
    name : str
        The name of the record.
    parent_path : str, byte or os.PathLike
        The path to the parent directory of the record.

    Other Parameters
    ----------------
    spec : dict
        The settings of the run.
    stats : dict
        The statistics of the run.
    row : dict
        The result row of the run.
    """

    def __init__(self, name, parent_path, **kwargs):
        super().__init__(name, parent_path)
        self.update(
            {
                "spec": dict(kwargs.get("spec", {})),
                "stats": dict(kwargs.get("stats", {})),
                "row": dict(kwargs.get("row", {})),
            }
        )

    @property
    def stats(self):
        """Return the statistics of the run.

        Returns
        -------
        isdc.core.sweeper.RunStats
            The statistics.
        """
        return RunStats(**self["stats"])


def run_spec(spec):
    """Run one experiment.

    Failures are caught and recorded in the row so that a matrix can continue.

    Parameters
    ----------
    spec : isdc.experiments.ExperimentSpec
        The settings.

    Returns
    -------
    isdc.experiments.ResultRow
        The result row.
    isdc.core.sweeper.RunStats
        The statistics, empty if the run failed.
    """
    logger.info(f"Running '{spec.label}'.")
    with log_duration(logger, spec.label) as timer:
        try:
            spec.check()
            problem = spec.build_problem()
            solver = spec.build_solver(problem)
            _, stats = run_step(
                problem.initial(),
                problem,
                spec.build_table(),
                solver,
                spec.build_sweep_config(),
                spec["dt"],
            )
            error = None
        except (ArithmeticError, RuntimeError, ValueError) as e:
            logger.warning(f"Run '{spec.label}' failed: {e}")
            stats, error = RunStats(), e
    if error is not None:
        return ResultRow.from_error(spec, error, timer.elapsed), stats
    row = ResultRow.from_run(spec, stats, timer.elapsed)
    logger.info(
        f"'{spec.label}': {row['inner_cycles']}({row['sweeps']}), "
        f"converged={row['converged']}."
    )
    return row, stats


def _run_one(spec):
    return run_spec(spec)


def run_specs(specs, method=METHOD_SEQ, n_proc=1):
    """Run several experiments, in order.

    Parameters
    ----------
    specs : list [isdc.experiments.ExperimentSpec]
        The settings.
    method : str, optional
        ``'sequential'`` or ``'multiprocessing'``. (The default is ``'sequential'``)
    n_proc : int, optional
        The number of processes with ``'multiprocessing'``. (The default is ``1``)

    Returns
    -------
    list [tuple [isdc.experiments.ResultRow, isdc.core.sweeper.RunStats]]
        The outcomes, in the order of `specs`.

    Raises
    ------
    ValueError
        If `method` is unknown.
    """
    if method not in METHODS:
        raise ValueError(
            f"Argument 'method' must be one of {', '.join(METHODS)}, not '{method}'."
        )
    logger.info(f"Running {len(specs)} experiments ({method}).")
    generator = ([s] for s in specs)
    if method == METHOD_MUL and n_proc > 1:
        with mp.Pool(processes=n_proc) as p:
            return list(p.starmap(_run_one, generator))
    return list(iter.starmap(_run_one, generator))

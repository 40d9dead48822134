"""Run the benchmark matrix and compute the ISDC savings."""
import logging

from isdc.core.sweeper import ISDC_FIXED, SDC_EXACT

from .abc import ProbExpABC, SolRowsABC
from .reference import published_matrix
from .runner import METHOD_SEQ, run_specs
from .spec import ExperimentSpec
from .tables import render_table

logger = logging.getLogger(__name__)


def compute_savings(rows):
    """Fill the savings of every ISDC row paired with an SDC row.

    Rows are paired when their settings agree except for the mode and the cycle count.
    The savings are ``100 (1 - isdc_cycles / sdc_cycles)``. Failed runs are skipped.

    Parameters
    ----------
    rows : list [isdc.experiments.ResultRow]
        The rows. They are modified in place.

    Returns
    -------
    list [isdc.experiments.ResultRow]
        The same rows.
    """
    sdc_rows = {}
    for row in rows:
        if row["mode"] == SDC_EXACT and not row.failed:
            sdc_rows.setdefault((row.pair_key, row["guess"]), row)
    for row in rows:
        if row["mode"] != ISDC_FIXED or row.failed:
            continue
        sdc = sdc_rows.get((row.pair_key, row["guess"]))
        if sdc is None or not sdc["inner_cycles"]:
            continue
        row["savings_pct"] = 100.0 * (1.0 - row["inner_cycles"] / sdc["inner_cycles"])
    return rows


def run_matrix(specs, method=METHOD_SEQ, n_proc=1):
    """Run a list of experiments and pair their results.

    Parameters
    ----------
    specs : list [isdc.experiments.ExperimentSpec]
        The settings.
    method : str, optional
        ``'sequential'`` or ``'multiprocessing'``. (The default is ``'sequential'``)
    n_proc : int, optional
        The number of processes. (The default is ``1``)

    Returns
    -------
    list [isdc.experiments.ResultRow]
        One row per spec, in the order of `specs`, with the savings filled.
    """
    outcomes = run_specs(specs, method, n_proc)
    return compute_savings([row for row, _ in outcomes])


class SolMatrix(SolRowsABC):
    """Store the results of a benchmark matrix.

    Parameters
    ----------
    name : str
        The name of the solution.
    parent_path : str, byte or os.PathLike
        The path to the parent directory of the solution.
    """


class ProbMatrix(ProbExpABC):
    """Define a benchmark matrix.

    Parameters
    ----------
    specs : list [isdc.experiments.ExperimentSpec], optional
        The runs. If not set, `preset` is used.
    preset : str, optional
        ``'heat'``, ``'burgers'`` or ``'all'`` for the published matrix. (The default
        is ``'heat'``)

    Other Parameters
    ----------------
    **overrides
        Settings applied to every spec of the preset.
    """

    def __init__(self, specs=None, preset="heat", **overrides):
        if specs is None:
            specs = published_matrix(preset, **overrides)
        super().__init__(specs=[ExperimentSpec(**s) for s in specs])

    @property
    def specs(self):
        """Return the runs of the matrix."""
        return self["specs"]

    def solve(self, name, parent_path, method=METHOD_SEQ, n_proc=1, records=False):
        """Run the matrix and write the results.

        Parameters
        ----------
        name : str
            The name of the solution.
        parent_path : str, byte or os.PathLike
            The path to the parent directory of the solution.
        method : str, optional
            ``'sequential'`` or ``'multiprocessing'``. (The default is
            ``'sequential'``)
        n_proc : int, optional
            The number of processes. (The default is ``1``)
        records : bool, optional
            If set to ``True``, one JSON record per run is written. (The default is
            ``False``)

        Returns
        -------
        isdc.experiments.SolMatrix
            The solution.
        """
        sol = SolMatrix(name, parent_path)
        outcomes = run_specs(self.specs, method, n_proc)
        rows = compute_savings([row for row, _ in outcomes])
        if records:
            self._save_records(sol, self.specs, outcomes)
        sol.finalize(rows, render_table(rows))
        return sol

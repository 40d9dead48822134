"""Compare the initial guess policies of the inner solves."""
import logging

from isdc.core.sweeper import GUESS_POLICIES, MODES

from .abc import ProbExpABC, SolRowsABC
from .matrix import compute_savings, run_matrix
from .runner import METHOD_SEQ, run_specs
from .spec import ExperimentSpec
from .tables import render_table

logger = logging.getLogger(__name__)


def ablation_specs(spec, policies=GUESS_POLICIES):
    """Return one SDC and one ISDC run of `spec` per initial guess policy.

    Parameters
    ----------
    spec : isdc.experiments.ExperimentSpec
        The base settings. Its mode and guess policy are ignored.
    policies : tuple [str], optional
        The policies to compare.

    Returns
    -------
    list [isdc.experiments.ExperimentSpec]
        The runs, grouped by policy.
    """
    spec = ExperimentSpec(**spec)
    return [spec.copy_with(mode=m, guess=g) for g in policies for m in MODES]


def run_ablation(spec, policies=GUESS_POLICIES, method=METHOD_SEQ, n_proc=1):
    """Run SDC and ISDC under every initial guess policy.

    Returns
    -------
    list [isdc.experiments.ResultRow]
        The rows, with the savings computed per policy.
    """
    return run_matrix(ablation_specs(spec, policies), method, n_proc)


class SolAblation(SolRowsABC):
    """Store the results of an initial guess ablation."""


class ProbAblation(ProbExpABC):
    """Define an initial guess ablation.

    Parameters
    ----------
    spec : dict, optional
        The base settings.
    policies : list [str], optional
        The policies to compare. (The default is every policy)
    """

    def __init__(self, spec=None, policies=GUESS_POLICIES):
        unknown = [p for p in policies if p not in GUESS_POLICIES]
        if unknown:
            raise ValueError(f"Unknown initial guess policies: {', '.join(unknown)}.")
        super().__init__(spec=ExperimentSpec(**(spec or {})), policies=list(policies))

    def solve(self, name, parent_path, method=METHOD_SEQ, n_proc=1, records=False):
        """Run the ablation and write the results.

        Returns
        -------
        isdc.experiments.SolAblation
            The solution.
        """
        sol = SolAblation(name, parent_path)
        specs = ablation_specs(self["spec"], self["policies"])
        outcomes = run_specs(specs, method, n_proc)
        rows = compute_savings([row for row, _ in outcomes])
        if records:
            self._save_records(sol, specs, outcomes)
        sol.finalize(rows, render_table(rows, title="Initial guess ablation"))
        return sol

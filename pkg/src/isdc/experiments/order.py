"""Measure the temporal order of a fixed number of sweeps."""
import logging

import numpy as np

from isdc.core.sweeper import integrate

from .abc import ProbExpABC, SolExpABC
from .spec import ExperimentSpec
from .tables import render_order_table, write_points_csv

logger = logging.getLogger(__name__)

REF_SEMIDISCRETE = "semidiscrete"
REF_ANALYTIC = "analytic"
REFERENCES = (REF_SEMIDISCRETE, REF_ANALYTIC)

DEFAULT_SWEEPS = (1, 2, 3, 4)
DEFAULT_DTS = (4e-3, 2e-3, 1e-3)
DEFAULT_FINAL_TIME = 8e-3


def _num_steps(final_time, dt):
    num_steps = final_time / dt
    if not np.isclose(num_steps, round(num_steps), rtol=0.0, atol=1e-9):
        raise ValueError(
            f"Final time {final_time} is not a multiple of the step size {dt}."
        )
    return int(round(num_steps))


def _reference(problem, final_time, reference):
    if reference not in REFERENCES:
        raise ValueError(
            f"Argument 'reference' must be one of {', '.join(REFERENCES)}, "
            f"not '{reference}'."
        )
    if reference == REF_SEMIDISCRETE:
        exact = problem.semidiscrete_exact(final_time)
    else:
        exact = problem.exact(final_time)
    if exact is None:
        raise ValueError(
            f"Problem '{problem.name}' has no {reference} reference solution."
        )
    return exact


def run_order_study(
    spec,
    sweeps=DEFAULT_SWEEPS,
    dts=DEFAULT_DTS,
    final_time=DEFAULT_FINAL_TIME,
    reference=REF_SEMIDISCRETE,
):
    """Integrate with a fixed number of sweeps for decreasing step sizes.

    The error of each run is the maximum norm of the difference with the reference at
    `final_time`. The observed order compares a run with the previous step size for the
    same number of sweeps.

    Parameters
    ----------
    spec : dict
        The settings. Its step size and sweep count are overriden.
    sweeps : tuple [int], optional
        The numbers of sweeps per step.
    dts : tuple [float], optional
        The step sizes, in decreasing order.
    final_time : float, optional
        The final time. It must be a multiple of every step size.
    reference : str, optional
        ``'semidiscrete'`` for the exact solution of the spatially discrete system or
        ``'analytic'`` for the continuous one. (The default is ``'semidiscrete'``)

    Returns
    -------
    list [dict]
        The points with keys ``sweeps``, ``dt``, ``num_steps``, ``error`` and
        ``order``. The order of the first step size is ``None``.

    Raises
    ------
    ValueError
        If the problem has no reference solution or `final_time` is not a multiple of
        a step size.
    """
    spec = ExperimentSpec(**spec)
    problem = spec.build_problem()
    exact = _reference(problem, final_time, reference)
    steps = [_num_steps(final_time, dt) for dt in dts]
    table = spec.build_table()
    solver = spec.build_solver(problem)
    u0 = problem.initial()
    points = []
    for k in sweeps:
        config = spec.copy_with(num_sweeps=k).build_sweep_config()
        previous = None
        for dt, num_steps in zip(dts, steps):
            u, _ = integrate(u0, problem, table, solver, config, dt, num_steps)
            error = float(np.max(np.abs(u.values - exact.values)))
            order = None
            if previous is not None and error > 0.0 and previous[1] > 0.0:
                order = float(np.log(previous[1] / error) / np.log(previous[0] / dt))
            points.append(
                {
                    "sweeps": int(k),
                    "dt": float(dt),
                    "num_steps": num_steps,
                    "error": error,
                    "order": order,
                }
            )
            logger.info(f"{k} sweeps, dt={dt:.1e}: error={error:.3e}.")
            previous = (dt, error)
    return points


class SolOrderStudy(SolExpABC):
    """Store the results of an order study.

    Other Parameters
    ----------------
    points : list [dict]
        The points of the study.
    """

    def __init__(self, name, parent_path, **kwargs):
        super().__init__(name, parent_path, **kwargs)
        self["points"] = list(kwargs.get("points", []))

    @property
    def points(self):
        """Return the points of the study."""
        return self["points"]

    def get_orders(self, sweeps):
        """Return the observed orders for a number of sweeps, ``None`` excluded."""
        return [
            p["order"]
            for p in self.points
            if p["sweeps"] == sweeps and p["order"] is not None
        ]


class ProbOrderStudy(ProbExpABC):
    """Define an order study.

    Parameters
    ----------
    spec : dict, optional
        The settings.
    sweeps : tuple [int], optional
        The numbers of sweeps per step.
    dts : tuple [float], optional
        The step sizes.
    final_time : float, optional
        The final time.
    reference : str, optional
        ``'semidiscrete'`` or ``'analytic'``.
    """

    def __init__(
        self,
        spec=None,
        sweeps=DEFAULT_SWEEPS,
        dts=DEFAULT_DTS,
        final_time=DEFAULT_FINAL_TIME,
        reference=REF_SEMIDISCRETE,
    ):
        super().__init__(
            spec=ExperimentSpec(**(spec or {})),
            sweeps=[int(k) for k in sweeps],
            dts=[float(dt) for dt in dts],
            final_time=float(final_time),
            reference=reference,
        )

    def solve(self, name, parent_path, **kwargs):
        """Run the study and write the results.

        Returns
        -------
        isdc.experiments.SolOrderStudy
            The solution.
        """
        sol = SolOrderStudy(name, parent_path)
        sol["points"] = run_order_study(
            self["spec"],
            self["sweeps"],
            self["dts"],
            self["final_time"],
            self["reference"],
        )
        path = write_points_csv(sol.points, sol.path / f"{sol.name}.csv")
        sol.set_file("csv_path", path)
        sol._write_view(render_order_table(sol.points))
        sol.save()
        return sol

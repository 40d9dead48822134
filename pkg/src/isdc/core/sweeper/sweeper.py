"""Implement the deferred correction sweeps, the residual and the step driver."""
import logging

import numpy as np

from ..multigrid import ConvergenceError
from ..spatial import Field2D
from .config import (
    GUESS_PREVIOUS_NODE,
    GUESS_PREVIOUS_SWEEP,
    GUESS_ZERO,
    RESIDUAL_WEIGHTED,
    SweepConfig,
)
from .state import SweepState
from .stats import RunStats

logger = logging.getLogger(__name__)


def _values(u):
    return u.values if isinstance(u, Field2D) else np.asarray(u, dtype=float)


def initialize(u0, table, config, problem, dt):
    """Spread the initial value to every node and evaluate the split right-hand side.

    Parameters
    ----------
    u0 : isdc.core.spatial.Field2D or numpy.ndarray
        The initial value of the step.
    table : isdc.core.quadrature.CollocationTable
        The collocation table.
    config : isdc.core.sweeper.SweepConfig
        The sweep settings.
    problem : isdc.core.problems.ProbABC
        The problem.
    dt : float
        The step size.

    Returns
    -------
    isdc.core.sweeper.SweepState
        The state, every node holding a copy of `u0`.

    Raises
    ------
    ValueError
        If `dt` is not positive.
    FloatingPointError
        If `u0` holds non-finite values.
    """
    if dt <= 0:
        raise ValueError(f"Argument 'dt' must be positive, got {dt}.")
    values = Field2D(problem.grid, _values(u0)).check_finite().values.copy()
    num_nodes = table.num_nodes
    u = np.repeat(values[np.newaxis], num_nodes, axis=0)
    f_expl = np.repeat(problem.f_expl(values)[np.newaxis], num_nodes, axis=0)
    f_impl_w = np.repeat(
        problem.f_impl_weighted(values)[np.newaxis], num_nodes, axis=0
    )
    logger.debug(
        f"Spread state with {num_nodes} nodes and {config.mode} sweeps, dt={dt}."
    )
    return SweepState(table, dt, values, u, f_expl, f_impl_w)


def _solver(state, problem, mg, index, fraction):
    solver = state.solvers.get(index)
    if solver is None:
        solver = mg.with_shift(problem.nu * state.dt * fraction)
        state.solvers[index] = solver
    return solver


def _guess(policy, old, previous):
    if policy == GUESS_PREVIOUS_SWEEP:
        return old
    if policy == GUESS_ZERO:
        return np.zeros_like(old)
    if policy == GUESS_PREVIOUS_NODE:
        return previous
    raise ValueError(f"Unknown initial guess policy '{policy}'.")


def sweep(state, problem, mg, config):
    """Perform one sweep of weighted Euler updates over the nodes.

    Each substep solves

    ``(W - dt_m nu A) u_{m+1}^{k+1} = W u_m^{k+1} + dt_m W (f_E(u_m^{k+1}) - f_E(u_m^k))
    - dt_m nu A u_{m+1}^k + dt S_m (W f_E(u^k) + nu A u^k)``

    with a full solve or a fixed number of cycles, depending on the mode.

    Parameters
    ----------
    state : isdc.core.sweeper.SweepState
        The state. It is updated in place.
    problem : isdc.core.problems.ProbABC
        The problem.
    mg : isdc.core.multigrid.SolverABC
        The inner solver with a zero shift.
    config : isdc.core.sweeper.SweepConfig
        The sweep settings.

    Returns
    -------
    isdc.core.sweeper.SweepState
        The updated state.
    int
        The implicit solve cycles of the sweep.

    Raises
    ------
    isdc.core.multigrid.ConvergenceError
        If a full solve reaches its cap.
    FloatingPointError
        If a node value becomes non-finite.
    """
    dt = state.dt
    u_old = state.u.copy()
    f_expl_old = state.f_expl.copy()
    f_impl_w_old = state.f_impl_w.copy()
    f_weighted_old = f_impl_w_old.copy()
    if problem.has_explicit:
        for j in range(state.num_nodes):
            f_weighted_old[j] += problem.weight(f_expl_old[j])
    sweep_index = state.k + 1
    cycles = 0
    for index, step in enumerate(state.table.substeps):
        target, previous = step.target, step.previous
        dt_m = dt * step.fraction
        u_prev = state.u0 if previous < 0 else state.u[previous]
        explicit = u_prev
        if problem.has_explicit and previous >= 0:
            explicit = u_prev + dt_m * (state.f_expl[previous] - f_expl_old[previous])
        rhs = (
            problem.weight(explicit)
            - dt_m * f_impl_w_old[target]
            + dt * np.tensordot(step.weights, f_weighted_old, axes=1)
        )
        solver = _solver(state, problem, mg, index, step.fraction)
        guess = _guess(config.initial_guess_policy, u_old[target], u_prev)
        if config.is_exact:
            u_new, report = solver.solve_full(
                rhs, guess, config.inner_tol, config.inner_cap
            )
            if not report.converged:
                raise ConvergenceError(
                    f"Implicit solve did not reach {config.inner_tol:.1e} within "
                    f"{config.inner_cap} cycles.",
                    residual=report.final_defect_norm,
                    cycles=report.cycles_used,
                    node=target,
                    sweep=sweep_index,
                )
        else:
            u_new, report = solver.solve_inexact(
                rhs,
                guess,
                config.num_cycles,
                ref_tol=config.inner_tol,
                stop_tol=config.inner_tol if config.early_stop else None,
            )
        cycles += report.cycles_used
        logger.debug(
            f"Sweep {sweep_index}, node {target}: {report.cycles_used} cycles, "
            f"defect {report.final_defect_norm:.3e}."
        )
        state.u[target] = u_new
        if problem.has_explicit:
            state.f_expl[target] = problem.f_expl(u_new)
        state.f_impl_w[target] = problem.f_impl_weighted(u_new)
    for m in range(state.num_nodes):
        Field2D(problem.grid, state.u[m]).check_finite()
    state.k = sweep_index
    return state, cycles


def _unweighted_rhs(state, problem, mg, config):
    """Return the unweighted right-hand side at every node.

    The weighted implicit parts are inverted once per node, warm started from the last
    evaluation. The results are cached until the next sweep.
    """
    if state.f_impl is not None and state.f_impl_k == state.k:
        return state.f_expl + state.f_impl
    f_impl = np.empty_like(state.f_impl_w)
    for m in range(state.num_nodes):
        b = state.f_impl_w[m]
        guess = None if state.f_impl is None else state.f_impl[m]
        tol = config.w_tol * max(1.0, float(np.max(np.abs(b))))
        f_impl[m], cycles = problem.invert_weighting(b, mg, tol, guess=guess)
        state.w_cycles += cycles
    state.f_impl = f_impl
    state.f_impl_k = state.k
    return state.f_expl + f_impl


def residual(state, problem, mg=None, config=None):
    """Return the maximum norm of the collocation residual.

    The residual at node m is ``u_m - u_0 - dt sum_j q_mj f(u_j)`` with the unweighted
    right-hand side f. The weighted form multiplies it by W and needs no inversion.

    Parameters
    ----------
    state : isdc.core.sweeper.SweepState
        The state.
    problem : isdc.core.problems.ProbABC
        The problem.
    mg : isdc.core.multigrid.SolverABC, optional
        The inner solver used to invert W. If set to ``None``, the problem builds one.
    config : isdc.core.sweeper.SweepConfig, optional
        The sweep settings. If set to ``None``, the defaults are used.

    Returns
    -------
    float
        The residual. The cycles of the weighting inversions are added to
        `state.w_cycles`.
    """
    config = SweepConfig() if config is None else config
    q = state.table.full_weights
    if config.residual_form == RESIDUAL_WEIGHTED:
        f_weighted = state.f_impl_w.copy()
        if problem.has_explicit:
            for j in range(state.num_nodes):
                f_weighted[j] += problem.weight(state.f_expl[j])
        defect = np.array(
            [problem.weight(state.u[m] - state.u0) for m in range(state.num_nodes)]
        ) - state.dt * np.tensordot(q, f_weighted, axes=1)
    else:
        mg = problem.build_solver() if mg is None else mg
        f = _unweighted_rhs(state, problem, mg, config)
        defect = state.u - state.u0 - state.dt * np.tensordot(q, f, axes=1)
    value = float(np.max(np.abs(defect)))
    if config.relative_residual:
        scale = float(np.max(np.abs(state.u0)))
        if scale > 0.0:
            value /= scale
    return value


def terminal_value(state, problem, mg, config):
    """Return the value at the end of the step.

    It is the last node value when the last node is the end of the step, and the
    collocation update ``u_0 + dt sum_j b_j f(u_j)`` otherwise.
    """
    if state.table.right_is_node:
        return state.u[-1].copy()
    f = _unweighted_rhs(state, problem, mg, config)
    return state.u0 + state.dt * np.tensordot(state.table.end_weights, f, axes=1)


def run_step(u0, problem, table, mg, config, dt):
    """Perform one time step with sweeps until the residual meets the threshold.

    The residual is evaluated before the first sweep, so a converged spread state
    returns without sweeping, and after every sweep. When `config.num_sweeps` is set,
    exactly that number of sweeps is performed.

    Parameters
    ----------
    u0 : isdc.core.spatial.Field2D or numpy.ndarray
        The initial value.
    problem : isdc.core.problems.ProbABC
        The problem.
    table : isdc.core.quadrature.CollocationTable
        The collocation table.
    mg : isdc.core.multigrid.SolverABC
        The inner solver with a zero shift. If set to ``None``, the problem builds one.
    config : isdc.core.sweeper.SweepConfig
        The sweep settings.
    dt : float
        The step size.

    Returns
    -------
    isdc.core.spatial.Field2D
        The value at the end of the step.
    isdc.core.sweeper.RunStats
        The statistics. Not reaching the threshold is reported with
        ``converged=False``, never raised.
    """
    mg = problem.build_solver() if mg is None else mg
    state = initialize(u0, table, config, problem, dt)
    stats = RunStats()
    res = residual(state, problem, mg, config)
    stats["initial_residual"] = res
    fixed = config.num_sweeps is not None
    limit = int(config.num_sweeps) if fixed else int(config.max_sweeps)
    converged = res <= config.residual_tol
    while state.k < limit and (fixed or not converged):
        _, cycles = sweep(state, problem, mg, config)
        res = residual(state, problem, mg, config)
        stats.add_sweep(cycles, res)
        converged = res <= config.residual_tol
        logger.debug(f"Sweep {state.k}: {cycles} cycles, residual {res:.3e}.")
    u_final = terminal_value(state, problem, mg, config)
    stats["converged"] = converged
    stats["w_inversion_cycles"] = state.w_cycles
    if not converged and not fixed:
        logger.warning(
            f"Residual {res:.3e} above {config.residual_tol:.1e} after "
            f"{stats.sweeps} sweeps."
        )
    logger.info(
        f"Step done in {stats.sweeps} sweeps and {stats.inner_cycles} cycles, "
        f"residual {res:.3e}."
    )
    return Field2D(problem.grid, u_final), stats


def integrate(u0, problem, table, mg, config, dt, num_steps):
    """Perform `num_steps` steps of size `dt`.

    Returns
    -------
    isdc.core.spatial.Field2D
        The value at the final time.
    list [isdc.core.sweeper.RunStats]
        The statistics of every step.
    """
    if num_steps < 1:
        raise ValueError(f"Argument 'num_steps' must be at least 1, got {num_steps}.")
    mg = problem.build_solver() if mg is None else mg
    u = u0
    history = []
    for _ in range(int(num_steps)):
        u, stats = run_step(u, problem, table, mg, config, dt)
        history.append(stats)
    return u, history

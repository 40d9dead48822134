"""Reproduce the published benchmark trends at full resolution."""
import numpy as np
import pytest

from isdc.core.sweeper import (
    GUESS_PREVIOUS_SWEEP,
    GUESS_ZERO,
    ISDC_FIXED,
    SDC_EXACT,
    integrate,
)
from isdc.experiments import (
    ExperimentSpec,
    ablation_specs,
    lookup,
    published_matrix,
    run_matrix,
    run_order_study,
    run_spec,
)

HEAT_CELLS = [(nu, m) for nu in (1.0, 10.0, 100.0) for m in (3, 5, 7)]
BURGERS_CELLS = [(nu, m) for nu in (0.1, 1.0, 10.0) for m in (3, 5, 7)]


def _cells(rows):
    cells = {}
    for row in rows:
        cells.setdefault((row["nu"], row["num_nodes"]), {})[row["mode"]] = row
    return cells


@pytest.fixture(scope="module")
def heat_cells():
    return _cells(run_matrix(published_matrix("heat")))


@pytest.fixture(scope="module")
def burgers_cells():
    return _cells(run_matrix(published_matrix("burgers")))


@pytest.mark.slow
@pytest.mark.parametrize("nu, num_nodes", HEAT_CELLS)
def test_heat_sweeps_match_published_counts(heat_cells, nu, num_nodes):
    runs = heat_cells[(nu, num_nodes)]
    for mode, bar in ((SDC_EXACT, 2), (ISDC_FIXED, 3)):
        row = runs[mode]
        _, published = lookup("heat", nu, num_nodes, mode)
        pytest.assume(row["converged"])
        pytest.assume(row["error"] is None)
        pytest.assume(abs(row["sweeps"] - published) <= bar)


@pytest.mark.slow
@pytest.mark.parametrize(
    "nu, num_nodes", [cell for cell in HEAT_CELLS if cell[0] > 1.0]
)
def test_isdc_saves_cycles_on_stiff_heat(heat_cells, nu, num_nodes):
    runs = heat_cells[(nu, num_nodes)]
    pytest.assume(runs[ISDC_FIXED]["inner_cycles"] < runs[SDC_EXACT]["inner_cycles"])
    if nu == 10.0:
        pytest.assume(runs[ISDC_FIXED]["savings_pct"] >= 20.0)


@pytest.mark.slow
@pytest.mark.parametrize(
    "nu, num_nodes", [cell for cell in BURGERS_CELLS if cell[0] > 0.1]
)
def test_isdc_saves_cycles_on_stiff_burgers(burgers_cells, nu, num_nodes):
    runs = burgers_cells[(nu, num_nodes)]
    pytest.assume(all(row["converged"] for row in runs.values()))
    pytest.assume(runs[ISDC_FIXED]["inner_cycles"] < runs[SDC_EXACT]["inner_cycles"])


@pytest.mark.slow
@pytest.mark.parametrize("num_nodes", [3, 5, 7])
def test_isdc_reduces_to_sdc_on_mild_burgers(burgers_cells, num_nodes):
    runs = burgers_cells[(0.1, num_nodes)]
    sdc, isdc = runs[SDC_EXACT], runs[ISDC_FIXED]
    pytest.assume(sdc["converged"] and isdc["converged"])
    pytest.assume(isdc["sweeps"] == sdc["sweeps"])
    gap = abs(isdc["inner_cycles"] - sdc["inner_cycles"])
    pytest.assume(gap <= 0.1 * sdc["inner_cycles"])


@pytest.mark.slow
def test_zero_guess_breaks_isdc_but_not_sdc():
    base = ExperimentSpec(nu=100.0, num_nodes=5)
    rows = {}
    for spec in ablation_specs(base, policies=(GUESS_PREVIOUS_SWEEP, GUESS_ZERO)):
        row, _ = run_spec(spec)
        rows[(spec["guess"], spec["mode"])] = row
    warm_sdc = rows[(GUESS_PREVIOUS_SWEEP, SDC_EXACT)]
    zero_sdc = rows[(GUESS_ZERO, SDC_EXACT)]
    pytest.assume(rows[(GUESS_PREVIOUS_SWEEP, ISDC_FIXED)]["converged"])
    pytest.assume(not rows[(GUESS_ZERO, ISDC_FIXED)]["converged"])
    pytest.assume(rows[(GUESS_ZERO, ISDC_FIXED)]["sweeps"] == 100)
    pytest.assume(warm_sdc["converged"] and zero_sdc["converged"])
    pytest.assume(zero_sdc["sweeps"] == warm_sdc["sweeps"])
    # with an absolute inner tolerance the gap is set by log(|u| / |du|)
    pytest.assume(zero_sdc["inner_cycles"] >= 1.3 * warm_sdc["inner_cycles"])


@pytest.mark.slow
def test_heat_order_grows_with_sweeps():
    points = run_order_study({"inner_tol": 1e-13}, sweeps=(1, 2, 3, 4))
    for point in points:
        if point["order"] is not None:
            pytest.assume(abs(point["order"] - point["sweeps"]) <= 0.3)


@pytest.mark.slow
def test_converged_step_reaches_spatial_floor():
    spec = ExperimentSpec(num_nodes=5, residual_tol=1e-11, inner_tol=1e-13)
    problem = spec.build_problem()
    mg = spec.build_solver(problem)
    config = spec.build_sweep_config()
    u, history = integrate(
        problem.initial(), problem, spec.build_table(), mg, config, 1e-3, 1
    )
    exact = problem.exact(1e-3).values
    floor = np.max(np.abs(problem.semidiscrete_exact(1e-3).values - exact))
    pytest.assume(history[0].converged)
    pytest.assume(np.max(np.abs(u.values - exact)) <= 10.0 * floor)

import numpy as np
import pytest

from isdc.core.multigrid import (
    JACOBI,
    MULTICOLOR,
    ConvergenceError,
    DirectSolver,
    SmootherConfig,
    SolveReport,
    build_hierarchy,
    prolong,
    restrict,
    select_smoother,
)
from isdc.core.spatial import (
    DIRICHLET,
    PERIODIC,
    Grid2D,
    laplacian_stencil,
    stencil_matrix,
    weighting_stencil,
)


def test_restrict_and_prolong_shapes():
    pytest.assume(restrict(np.ones((15, 15)), False).shape == (7, 7))
    pytest.assume(prolong(np.ones((7, 7)), False).shape == (15, 15))
    pytest.assume(restrict(np.ones((16, 16)), True).shape == (8, 8))
    pytest.assume(prolong(np.ones((8, 8)), True).shape == (16, 16))


def test_periodic_transfers_keep_constants():
    pytest.assume(np.allclose(restrict(np.full((8, 8), 3.0), True), 3.0))
    pytest.assume(np.allclose(prolong(np.full((4, 4), 3.0), True), 3.0))


def test_dirichlet_prolongation_is_linear_interpolation():
    xc, yc = Grid2D.unit_square(7).mesh()
    xf, yf = Grid2D.unit_square(15).mesh()
    fine = prolong(xc * yc, False)
    # x y only vanishes on the left and bottom edges
    assert np.allclose(fine[:-1, :-1], (xf * yf)[:-1, :-1])


def test_restriction_is_scaled_transpose_of_prolongation():
    for periodic, nc in [(True, 4), (False, 3)]:
        nf = 2 * nc if periodic else 2 * nc + 1
        p = np.column_stack(
            [prolong(e.reshape(nc, nc), periodic).ravel() for e in np.eye(nc * nc)]
        )
        r = np.column_stack(
            [restrict(e.reshape(nf, nf), periodic).ravel() for e in np.eye(nf * nf)]
        )
        pytest.assume(np.allclose(r, p.T / 4.0))


def test_hierarchy_levels():
    mg = build_hierarchy(Grid2D.unit_square(63), 1.0, 0.01)
    shapes = [level.grid.nx for level in mg.levels]
    assert shapes == [63, 31, 15, 7, 3]


def test_periodic_hierarchy_levels():
    mg = build_hierarchy(Grid2D.square(64, -1.0, 1.0, PERIODIC), 1.0, 0.01)
    assert [level.grid.nx for level in mg.levels] == [64, 32, 16, 8, 4]


def test_hierarchy_rejects_small_grid():
    with pytest.raises(ValueError):
        build_hierarchy(Grid2D.unit_square(3), 1.0, 0.0)


def test_hierarchy_rejects_mismatched_bc():
    with pytest.raises(ValueError):
        build_hierarchy(Grid2D.unit_square(15), 1.0, 0.0, bc=PERIODIC)


def test_with_shift_shares_grids(dirichlet_grid):
    mg = build_hierarchy(dirichlet_grid, 1.0, 0.0)
    shifted = mg.with_shift(0.5)
    pytest.assume(shifted.shift == 0.5 and mg.shift == 0.0)
    for level, other in zip(mg.levels, shifted.levels):
        pytest.assume(level.grid is other.grid)
        pytest.assume(level.masks is other.masks)
        pytest.assume(level.stencil_a is other.stencil_a)
        shifted_stencil = level.stencil_w - 0.5 * level.stencil_a
        pytest.assume(np.allclose(other.stencil, shifted_stencil))
    pytest.assume(np.allclose(mg.levels[0].stencil, mg.levels[0].stencil_w))


def test_with_shift_matches_fresh_hierarchy(dirichlet_grid, rng):
    b = rng.standard_normal(dirichlet_grid.shape)
    u = np.zeros_like(b)
    shifted = build_hierarchy(dirichlet_grid, 1.0, 0.0).with_shift(0.2)
    fresh = build_hierarchy(dirichlet_grid, 1.0, 0.2)
    assert np.array_equal(shifted.v_cycle(b, u), fresh.v_cycle(b, u))


def test_negative_shift_is_rejected(dirichlet_grid):
    with pytest.raises(ValueError):
        build_hierarchy(dirichlet_grid, 1.0, -1.0)


@pytest.mark.parametrize("smoother", [JACOBI, MULTICOLOR])
@pytest.mark.parametrize("gamma", [0.0, 1e-3, 1e-2, 1e-1])
@pytest.mark.parametrize("bc, n", [(DIRICHLET, 63), (PERIODIC, 64)])
def test_v_cycle_contracts(bc, n, gamma, smoother, rng):
    grid = Grid2D(n, n, bc=bc)
    mg = build_hierarchy(grid, 1.0, gamma, smoother=SmootherConfig(smoother=smoother))
    u_star = rng.standard_normal(grid.shape)
    b = mg.apply(u_star)
    u = np.zeros(grid.shape)
    norms = [mg.defect_norm(b, u)]
    for _ in range(5):
        u = mg.v_cycle(b, u)
        norms.append(mg.defect_norm(b, u))
    factors = [b / a for a, b in zip(norms[1:-1], norms[2:])]
    assert max(factors) <= 0.2


def test_solve_full_reaches_tolerance(dirichlet_grid, rng):
    mg = build_hierarchy(dirichlet_grid, 1.0, 0.05)
    u_star = rng.standard_normal(dirichlet_grid.shape)
    b = mg.apply(u_star)
    u, report = mg.solve_full(b, np.zeros_like(b), 1e-10, 100)
    pytest.assume(report.converged)
    pytest.assume(report.final_defect_norm <= 1e-10)
    pytest.assume(0 < report.cycles_used <= 100)
    pytest.assume(np.allclose(u, u_star, atol=1e-8))


def test_solve_full_from_exact_solution_uses_no_cycle(dirichlet_grid, rng):
    mg = build_hierarchy(dirichlet_grid, 1.0, 0.05)
    u_star = rng.standard_normal(dirichlet_grid.shape)
    _, report = mg.solve_full(mg.apply(u_star), u_star, 1e-10)
    assert report == SolveReport(0, report.final_defect_norm, True)


def test_solve_full_reports_cap(dirichlet_grid, rng):
    mg = build_hierarchy(dirichlet_grid, 1.0, 0.05)
    b = rng.standard_normal(dirichlet_grid.shape)
    u, report = mg.solve_full(b, np.zeros_like(b), 1e-15, 2)
    pytest.assume(not report.converged)
    pytest.assume(report.cycles_used == 2)
    pytest.assume(u.shape == b.shape)


@pytest.mark.parametrize("num_cycles", [1, 2, 5])
def test_solve_inexact_applies_exact_budget(dirichlet_grid, rng, num_cycles):
    mg = build_hierarchy(dirichlet_grid, 1.0, 0.05)
    b = rng.standard_normal(dirichlet_grid.shape)
    u0 = np.zeros_like(b)
    u, report = mg.solve_inexact(b, u0, num_cycles)
    pytest.assume(report.cycles_used == num_cycles)
    pytest.assume(np.all(u0 == 0.0))
    expected = u0
    for _ in range(num_cycles):
        expected = mg.v_cycle(b, expected)
    pytest.assume(np.array_equal(u, expected))


def test_solve_inexact_with_large_budget_matches_full_solve(dirichlet_grid, rng):
    mg = build_hierarchy(dirichlet_grid, 1.0, 0.05)
    b = rng.standard_normal(dirichlet_grid.shape)
    u0 = np.zeros_like(b)
    u_full, full = mg.solve_full(b, u0, 1e-12)
    u_fixed, fixed = mg.solve_inexact(b, u0, 50, ref_tol=1e-12)
    pytest.assume(full.converged and fixed.converged)
    pytest.assume(fixed.cycles_used == 50)
    pytest.assume(np.max(np.abs(u_fixed - u_full)) < 1e-10)


def test_solve_inexact_stops_early_at_tolerance(dirichlet_grid, rng):
    mg = build_hierarchy(dirichlet_grid, 1.0, 0.05)
    b = rng.standard_normal(dirichlet_grid.shape)
    u0 = np.zeros_like(b)
    u_full, full = mg.solve_full(b, u0, 1e-10)
    u, report = mg.solve_inexact(b, u0, 100, ref_tol=1e-10, stop_tol=1e-10)
    pytest.assume(report.cycles_used == full.cycles_used)
    pytest.assume(report.converged)
    pytest.assume(np.array_equal(u, u_full))
    _, short = mg.solve_inexact(b, u0, 2, stop_tol=1e-10)
    pytest.assume(short.cycles_used == 2 and not short.converged)


def test_solve_inexact_from_exact_solution_may_use_no_cycle(dirichlet_grid, rng):
    mg = build_hierarchy(dirichlet_grid, 1.0, 0.05)
    u_star = rng.standard_normal(dirichlet_grid.shape)
    b = mg.apply(u_star)
    _, report = mg.solve_inexact(b, u_star, 2, stop_tol=1e-10)
    _, fixed = mg.solve_inexact(b, u_star, 2)
    pytest.assume(report.cycles_used == 0)
    pytest.assume(fixed.cycles_used == 2)


def test_solve_inexact_rejects_zero_budget(dirichlet_grid):
    mg = build_hierarchy(dirichlet_grid, 1.0, 0.05)
    with pytest.raises(ValueError):
        mg.solve_inexact(np.zeros(dirichlet_grid.shape), None, 0)


def test_shape_mismatch_is_rejected(dirichlet_grid):
    mg = build_hierarchy(dirichlet_grid, 1.0, 0.05)
    with pytest.raises(ValueError):
        mg.v_cycle(np.zeros((7, 7)), np.zeros((7, 7)))


def test_jacobi_smoother_converges(dirichlet_grid, rng):
    smoother = SmootherConfig(smoother=JACOBI)
    mg = build_hierarchy(dirichlet_grid, 1.0, 0.05, smoother=smoother)
    b = rng.standard_normal(dirichlet_grid.shape)
    _, report = mg.solve_full(b, np.zeros_like(b), 1e-9, 100)
    pytest.assume(smoother.damping == 0.8)
    pytest.assume(report.converged)


def test_smoother_config_defaults():
    config = SmootherConfig()
    pytest.assume(config.smoother == JACOBI)
    pytest.assume(config.damping == 0.8)
    pytest.assume((config.pre_steps, config.post_steps) == (2, 2))
    pytest.assume(SmootherConfig(smoother=MULTICOLOR).damping == 1.0)


def test_smoother_config_rejects_bad_damping():
    with pytest.raises(ValueError):
        SmootherConfig(damping=2.5)


@pytest.mark.parametrize(
    "cfl, expected",
    [(0.41, MULTICOLOR), (1.0, MULTICOLOR), (4.1, JACOBI), (410, JACOBI)],
)
def test_select_smoother_from_cfl(cfl, expected):
    assert select_smoother(cfl) == expected


def test_direct_solver_matches_dense_solve(rng):
    grid = Grid2D(3, 3, bc=DIRICHLET)
    solver = DirectSolver.from_grid(grid, gamma=0.2)
    a = stencil_matrix(laplacian_stencil(grid.h), grid.shape, grid.bc)
    w = stencil_matrix(weighting_stencil(), grid.shape, grid.bc)
    b = rng.standard_normal(grid.shape)
    expected = np.linalg.solve(w - 0.2 * a, b.ravel()).reshape(grid.shape)
    u, report = solver.solve_full(b, np.zeros_like(b))
    pytest.assume(np.allclose(u, expected))
    pytest.assume(report.cycles_used == 1)


def test_convergence_error_carries_context():
    error = ConvergenceError("Failed.", residual=1e-3, cycles=100, node=2, sweep=4)
    pytest.assume("node 2" in str(error) and "sweep 4" in str(error))
    pytest.assume(error.cycles == 100)
    pytest.assume(isinstance(error, RuntimeError))

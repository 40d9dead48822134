import numpy as np
import pytest

from isdc.core.spatial import (
    DIRICHLET,
    PERIODIC,
    STENCIL_A,
    STENCIL_W,
    CompactLaplacian,
    Field2D,
    Grid2D,
    apply_stencil,
    export_field,
    invert_weighting,
    load_field,
    stencil_matrix,
)
from isdc.core.multigrid import ConvergenceError, build_hierarchy


def test_stencil_sums():
    pytest.assume(np.isclose(STENCIL_A.sum(), 0.0))
    pytest.assume(np.isclose(STENCIL_W.sum(), 1.0))
    pytest.assume(np.allclose(STENCIL_A, STENCIL_A.T))


def test_dirichlet_grid_geometry(dirichlet_grid):
    pytest.assume(dirichlet_grid.shape == (15, 15))
    pytest.assume(np.isclose(dirichlet_grid.h, 1.0 / 16))
    pytest.assume(np.isclose(dirichlet_grid.x[0], 1.0 / 16))
    pytest.assume(np.isclose(dirichlet_grid.x[-1], 15.0 / 16))


def test_periodic_grid_geometry(periodic_grid):
    pytest.assume(np.isclose(periodic_grid.h, 0.125))
    pytest.assume(periodic_grid.x[0] == -1.0)
    pytest.assume(np.isclose(periodic_grid.x[-1], 0.875))


def test_anisotropic_grid_has_no_common_spacing():
    with pytest.raises(ValueError):
        Grid2D(7, 15).h


def test_grid_rejects_unknown_boundary_condition():
    with pytest.raises(ValueError):
        Grid2D(8, 8, bc="neumann")


@pytest.mark.parametrize(
    "n, bc, coarse",
    [(15, DIRICHLET, 7), (7, DIRICHLET, 3), (16, PERIODIC, 8), (4, PERIODIC, 2)],
)
def test_coarsen(n, bc, coarse):
    grid = Grid2D(n, n, bc=bc)
    pytest.assume(grid.is_coarsenable)
    pytest.assume(grid.coarsen().shape == (coarse, coarse))
    pytest.assume(grid.coarsen().domain == grid.domain)


@pytest.mark.parametrize("n, bc", [(16, DIRICHLET), (15, PERIODIC)])
def test_coarsen_rejects_mismatched_counts(n, bc):
    grid = Grid2D(n, n, bc=bc)
    pytest.assume(not grid.is_coarsenable)
    with pytest.raises(ValueError):
        grid.coarsen()


def test_field_rejects_wrong_size(dirichlet_grid):
    with pytest.raises(ValueError):
        Field2D(dirichlet_grid, np.zeros(10))


def test_field_check_finite(dirichlet_grid):
    field = Field2D.zeros(dirichlet_grid)
    field.values[3, 4] = np.nan
    with pytest.raises(FloatingPointError):
        field.check_finite()


def test_laplacian_is_exact_on_quadratics(dirichlet_grid):
    x, y = dirichlet_grid.mesh()
    op = CompactLaplacian(dirichlet_grid)
    lap = op.apply_laplacian(x ** 2 + y ** 2)
    assert np.allclose(lap[1:-1, 1:-1], 4.0, atol=1e-9)


def test_constant_nullspace_on_periodic_grid(periodic_grid):
    op = CompactLaplacian(periodic_grid)
    ones = np.ones(periodic_grid.shape)
    pytest.assume(np.allclose(op.apply_laplacian(ones), 0.0, atol=1e-10))
    pytest.assume(np.allclose(op.apply_weighting(ones), 1.0))


def test_constant_nullspace_away_from_dirichlet_boundary(dirichlet_grid):
    op = CompactLaplacian(dirichlet_grid)
    ones = np.ones(dirichlet_grid.shape)
    pytest.assume(np.allclose(op.apply_laplacian(ones)[1:-1, 1:-1], 0.0, atol=1e-10))
    pytest.assume(np.allclose(op.apply_weighting(ones)[1:-1, 1:-1], 1.0))


def test_operators_keep_the_field_type(dirichlet_grid, rng):
    op = CompactLaplacian(dirichlet_grid)
    field = Field2D(dirichlet_grid, rng.standard_normal(dirichlet_grid.shape))
    pytest.assume(isinstance(op.apply_laplacian(field), Field2D))
    pytest.assume(isinstance(op.apply_weighting(field.values), np.ndarray))


def test_operator_rejects_field_of_other_grid(dirichlet_grid):
    op = CompactLaplacian(dirichlet_grid)
    with pytest.raises(ValueError):
        op.apply_laplacian(Field2D.zeros(Grid2D.unit_square(7)))


@pytest.mark.parametrize("bc", [DIRICHLET, PERIODIC])
def test_operators_are_symmetric(bc):
    grid = Grid2D(6, 6, bc=bc)
    op = CompactLaplacian(grid)
    a = stencil_matrix(op.stencil_A, grid.shape, bc)
    w = stencil_matrix(op.stencil_W, grid.shape, bc)
    pytest.assume(np.allclose(a, a.T))
    pytest.assume(np.allclose(w, w.T))
    pytest.assume(np.all(np.linalg.eigvalsh(w) > 0.0))
    pytest.assume(np.all(np.linalg.eigvalsh(a) < 1e-9))


def test_stencil_matrix_matches_apply_stencil(rng):
    u = rng.standard_normal((5, 5))
    matrix = stencil_matrix(STENCIL_A, u.shape, PERIODIC)
    expected = apply_stencil(u, STENCIL_A, PERIODIC)
    assert np.allclose(matrix @ u.ravel(), expected.ravel())


def _eigen_ratio_error(n):
    grid = Grid2D.unit_square(n - 1)
    op = CompactLaplacian(grid)
    x, y = grid.mesh()
    u = np.sin(np.pi * x) * np.sin(np.pi * y)
    a_u, w_u = op.apply_laplacian(u), op.apply_weighting(u)
    centre = (n // 2 - 1, n // 2 - 1)
    return abs(a_u[centre] / w_u[centre] + 2.0 * np.pi ** 2)


def test_compact_symbol_is_fourth_order():
    coarse, fine = _eigen_ratio_error(8), _eigen_ratio_error(16)
    assert coarse / fine > 12.0


def _truncation_error(n):
    grid = Grid2D.unit_square(n - 1)
    op = CompactLaplacian(grid)
    x, y = grid.mesh()
    u = np.exp(x) * np.sin(np.pi * x) * np.sin(np.pi * y)
    sx, cx = np.sin(np.pi * x), np.cos(np.pi * x)
    shape_x = (1.0 - 2.0 * np.pi ** 2) * sx + 2.0 * np.pi * cx
    lap = np.exp(x) * np.sin(np.pi * y) * shape_x
    error = op.apply_laplacian(u) - op.apply_weighting(lap)
    # the weighting of the exact Laplacian needs its boundary values
    return np.max(np.abs(error[1:-1, 1:-1]))


def test_compact_scheme_is_fourth_order():
    errors = [_truncation_error(n) for n in (16, 32, 64)]
    orders = np.log2(np.array(errors[:-1]) / np.array(errors[1:]))
    assert np.all(orders >= 3.7)


def test_invert_weighting(dirichlet_grid, rng):
    op = CompactLaplacian(dirichlet_grid)
    mg = build_hierarchy(dirichlet_grid, 1.0, 0.3)
    u = rng.standard_normal(dirichlet_grid.shape)
    b = op.apply_weighting(u)
    solution, cycles = invert_weighting(op, b, mg, 1e-12)
    pytest.assume(np.allclose(solution, u, atol=1e-10))
    pytest.assume(0 < cycles <= 50)


def test_invert_weighting_raises_at_cap(dirichlet_grid, rng):
    op = CompactLaplacian(dirichlet_grid)
    mg = build_hierarchy(dirichlet_grid, 1.0, 0.0)
    b = rng.standard_normal(dirichlet_grid.shape)
    with pytest.raises(ConvergenceError):
        op.invert_weighting(b, mg, 1e-15, cap=1)


@pytest.mark.parametrize("suffix", [".csv", ".bin", ".h5"])
def test_export_and_load_field(tmp_path, periodic_grid, rng, suffix):
    field = Field2D(periodic_grid, rng.standard_normal(periodic_grid.shape))
    path = export_field(field, tmp_path / f"snapshot{suffix}", time=0.25)
    loaded, time = load_field(path)
    pytest.assume(loaded.grid == periodic_grid)
    pytest.assume(time == 0.25)
    pytest.assume(np.allclose(loaded.values, field.values, rtol=0.0, atol=1e-15))


def test_export_rejects_unknown_suffix(tmp_path, periodic_grid):
    with pytest.raises(ValueError):
        export_field(Field2D.zeros(periodic_grid), tmp_path / "snapshot.txt")

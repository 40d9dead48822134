"""Shared fixtures of the test suite."""
import numpy as np
import pytest

from isdc.core.multigrid import build_hierarchy
from isdc.core.problems import DahlquistProblem, HeatProblem
from isdc.core.quadrature import CollocationTable
from isdc.core.spatial import PERIODIC, Grid2D


@pytest.fixture
def rng():
    return np.random.default_rng(1234)


@pytest.fixture
def dirichlet_grid():
    return Grid2D.unit_square(15)


@pytest.fixture
def periodic_grid():
    return Grid2D.square(16, -1.0, 1.0, PERIODIC)


@pytest.fixture
def lobatto3():
    return CollocationTable("gauss-lobatto", 3)


@pytest.fixture
def small_heat():
    return HeatProblem(1.0, n=16)


@pytest.fixture
def small_heat_mg(small_heat):
    return build_hierarchy(small_heat.grid, small_heat.nu, 0.0)


@pytest.fixture
def dahlquist():
    return DahlquistProblem(-1.0)


@pytest.fixture
def collocation_solution():
    """Return the node values of the collocation problem of ``u' = lam u``."""

    def solve(table, lam, dt, u0=1.0):
        q = np.asarray(table.full_weights)
        m = table.num_nodes
        return np.linalg.solve(np.eye(m) - dt * lam * q, u0 * np.ones(m))

    return solve

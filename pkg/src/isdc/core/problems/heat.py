"""Implement the `HeatProblem` class."""
import numpy as np

from ..spatial import Field2D, Grid2D
from .abc import ProbABC

SPACING = "spacing"
POINTS = "points"
GRID_CONVENTIONS = (SPACING, POINTS)


def heat_exact(x, y, t, nu):
    """Return ``exp(-2 pi^2 nu t) sin(pi x) sin(pi y)``.

    Parameters
    ----------
    x : float or numpy.ndarray
        The x coordinates.
    y : float or numpy.ndarray
        The y coordinates.
    t : float
        The time.
    nu : float
        The diffusion coefficient.

    Returns
    -------
    float or numpy.ndarray
        The analytic solution of the heat equation on the unit square.
    """
    return np.exp(-2.0 * np.pi ** 2 * nu * t) * np.sin(np.pi * x) * np.sin(np.pi * y)


def heat_initial(grid):
    """Return ``sin(pi x) sin(pi y)`` sampled on `grid`."""
    x, y = grid.mesh()
    return Field2D(grid, heat_exact(x, y, 0.0, 1.0))


def check_convention(convention):
    """Check a grid convention name.

    Raises
    ------
    ValueError
        If `convention` is unknown.
    """
    if convention not in GRID_CONVENTIONS:
        raise ValueError(
            f"Argument 'convention' must be one of {', '.join(GRID_CONVENTIONS)}, "
            f"not '{convention}'."
        )


class HeatProblem(ProbABC):
    """The heat equation ``u_t = nu Laplacian(u)`` on the unit square.

    Boundary values are zero and the initial condition is ``sin(pi x) sin(pi y)``.

    Parameters
    ----------
    nu : float
        The diffusion coefficient.
    n : int, optional
        The resolution. Under the ``'spacing'`` convention the spacing is ``1 / n``, so
        the grid holds ``n - 1`` interior unknowns per direction. Under the
        ``'points'`` convention it holds ``n`` of them. (The default is ``64``)
    convention : str, optional
        The grid convention, ``'spacing'`` or ``'points'``. (The default is
        ``'spacing'``)

    Notes
    -----
    A multigrid hierarchy needs ``2^k - 1`` interior unknowns, that is ``n = 2^k``
    under ``'spacing'`` and ``n = 2^k - 1`` under ``'points'``.
    """

    def __init__(self, nu, n=64, convention=SPACING):
        check_convention(convention)
        if n < 2:
            raise ValueError(f"Argument 'n' must be at least 2, got {n}.")
        points = int(n) - 1 if convention == SPACING else int(n)
        super().__init__(
            "heat", nu, Grid2D.unit_square(points), n=int(n), convention=convention
        )

    def initial(self):
        return heat_initial(self.grid)

    def exact(self, t):
        x, y = self.grid.mesh()
        return Field2D(self.grid, heat_exact(x, y, t, self.nu))

    @property
    def discrete_eigenvalue(self):
        """Return the eigenvalue of ``W^-1 A`` for the initial condition.

        ``sin(pi x) sin(pi y)`` is an eigenvector of both stencils. The eigenvalue is
        the ratio of their symbols at the angle ``pi h`` in both directions.
        """
        h = self.grid.h
        c = np.cos(np.pi * h)
        symbol_a = (-20.0 + 16.0 * c + 4.0 * c * c) / (6.0 * h ** 2)
        symbol_w = (8.0 + 4.0 * c) / 12.0
        return symbol_a / symbol_w

    def semidiscrete_exact(self, t):
        factor = np.exp(self.nu * self.discrete_eigenvalue * t)
        return Field2D(self.grid, factor * self.initial().values)

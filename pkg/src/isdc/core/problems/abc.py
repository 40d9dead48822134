"""Implement the `ProbABC` class."""
from abc import ABC, abstractmethod
import logging

from ..multigrid import DirectSolver, build_hierarchy
from ..spatial import CompactLaplacian

logger = logging.getLogger(__name__)


class ProbABC(dict, ABC):
    """A base class for any test problem ``W u_t = W f_E(u) + nu A u``.

    A problem provides the split right-hand side on value arrays of shape
    ``grid.shape`` and builds the inner solver of its implicit part. The sweeper only
    talks to problems through this interface.

    Parameters
    ----------
    name : str
        The name of the problem.
    nu : float
        The diffusion coefficient.
    grid : isdc.core.spatial.Grid2D
        The grid.

    Other Parameters
    ----------------
    **kwargs
        Any additional parameter stored in the problem.

    Raises
    ------
    ValueError
        If `nu` is not positive.
    """

    def __init__(self, name, nu, grid, **kwargs):
        nu = float(nu)
        if nu <= 0:
            raise ValueError(f"Argument 'nu' must be positive, got {nu}.")
        super().__init__(name=name, nu=nu, grid=grid, **kwargs)
        self._laplacian = CompactLaplacian(grid, nu)

    @property
    def name(self):
        """Return the name of the problem."""
        return self["name"]

    @property
    def nu(self):
        """Return the diffusion coefficient."""
        return self["nu"]

    @property
    def grid(self):
        """Return the grid.

        Returns
        -------
        isdc.core.spatial.Grid2D
            The grid.
        """
        return self["grid"]

    @property
    def laplacian(self):
        """Return the compact Laplacian of the problem.

        Returns
        -------
        isdc.core.spatial.CompactLaplacian
            The operator.
        """
        return self._laplacian

    @property
    def has_explicit(self):
        """Return ``True`` if the problem has an explicit part."""
        return False

    @abstractmethod
    def initial(self):
        """Return the initial condition.

        Returns
        -------
        isdc.core.spatial.Field2D
            The initial condition.
        """

    def f_expl(self, u):
        """Return the explicit part of the right-hand side, unweighted."""
        return 0.0 * u

    def f_impl_weighted(self, u):
        """Return the weighted implicit part ``nu A u``."""
        return self.nu * self._laplacian.apply_laplacian(u)

    def weight(self, u):
        """Return ``W u``."""
        return self._laplacian.apply_weighting(u)

    def build_solver(self, threshold=4, smoother=None):
        """Build the inner solver of the implicit part with a zero shift.

        A multigrid hierarchy is built when the grid is large enough, a direct solver
        otherwise.

        Parameters
        ----------
        threshold : int, optional
            The coarsest-level size of the hierarchy. (The default is ``4``)
        smoother : isdc.core.multigrid.SmootherConfig, optional
            The relaxation settings of the hierarchy.

        Returns
        -------
        isdc.core.multigrid.SolverABC
            The solver.
        """
        if max(self.grid.shape) <= threshold:
            logger.debug(f"Grid {self.grid.shape} solved directly.")
            return DirectSolver.from_grid(self.grid)
        return build_hierarchy(
            self.grid, self.nu, 0.0, threshold=threshold, smoother=smoother
        )

    def exact(self, t):
        """Return the analytic solution at time `t`, or ``None`` if unknown."""
        return None

    def semidiscrete_exact(self, t):
        """Return the exact solution of the spatially discrete system, or ``None``."""
        return None

    def invert_weighting(self, b, solver, tol, guess=None):
        """Solve ``W u = b`` with the zero-shift `solver`.

        Returns
        -------
        numpy.ndarray
            The solution.
        int
            The number of cycles used.

        See Also
        --------
        isdc.core.spatial.CompactLaplacian.invert_weighting
        """
        return self._laplacian.invert_weighting(b, solver, tol, guess=guess)

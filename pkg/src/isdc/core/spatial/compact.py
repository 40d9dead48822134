"""Implement the `CompactLaplacian` class and its functional API."""
import logging

import numpy as np

from ..multigrid.report import ConvergenceError
from .grid import Field2D
from .stencil import apply_stencil, laplacian_stencil, weighting_stencil

logger = logging.getLogger(__name__)

W_INVERSION_CAP = 50


class CompactLaplacian(object):
    """The fourth-order compact discretization of ``nu * Laplacian`` on a `Grid2D`.

    The scheme approximates ``W u_t = nu A u``: the 9-point stencil A is paired with the
    5-point weighting stencil W applied to the right-hand side.

    Parameters
    ----------
    grid : isdc.core.spatial.Grid2D
        The grid. It must be isotropic.
    nu : float, optional
        The diffusion coefficient. (The default is ``1.0``)

    Raises
    ------
    ValueError
        If `nu` is negative.
        If the grid is not isotropic.

    Notes
    -----
    ``A = 1/(6h^2) [1 4 1; 4 -20 4; 1 4 1]`` and ``W = 1/12 [0 1 0; 1 8 1; 0 1 0]``.
    `apply_laplacian` returns ``A u`` without the diffusion coefficient.
    """

    def __init__(self, grid, nu=1.0):
        if nu < 0:
            raise ValueError(f"Argument 'nu' must be non-negative, got {nu}.")
        self.grid = grid
        self.nu = float(nu)
        self._stencil_a = laplacian_stencil(grid.h)
        self._stencil_w = weighting_stencil()

    @property
    def stencil_A(self):
        """Return the 3x3 Laplacian stencil."""
        return self._stencil_a.copy()

    @property
    def stencil_W(self):
        """Return the 3x3 weighting stencil."""
        return self._stencil_w.copy()

    def shifted_stencil(self, gamma):
        """Return the stencil of ``W - gamma A``."""
        return self._stencil_w - gamma * self._stencil_a

    def _values(self, u):
        if isinstance(u, Field2D):
            u.check_grid(self.grid)
            return u.values, u.like
        values = np.asarray(u, dtype=float)
        if values.shape != self.grid.shape:
            raise ValueError(
                f"Array of shape {values.shape} does not match grid {self.grid.shape}."
            )
        return values, lambda v: v

    def apply_laplacian(self, u):
        """Return ``A u``.

        Parameters
        ----------
        u : isdc.core.spatial.Field2D or numpy.ndarray
            The field or its value array.

        Returns
        -------
        isdc.core.spatial.Field2D or numpy.ndarray
            ``A u``, with the type of `u`.

        Raises
        ------
        ValueError
            If `u` does not live on the grid of the operator.
        """
        values, wrap = self._values(u)
        return wrap(apply_stencil(values, self._stencil_a, self.grid.bc))

    def apply_weighting(self, u):
        """Return ``W u``, with the type of `u`.

        Raises
        ------
        ValueError
            If `u` does not live on the grid of the operator.
        """
        values, wrap = self._values(u)
        return wrap(apply_stencil(values, self._stencil_w, self.grid.bc))

    def invert_weighting(self, b, mg, tol, cap=W_INVERSION_CAP, guess=None):
        """Solve ``W u = b`` with multigrid.

        Parameters
        ----------
        b : isdc.core.spatial.Field2D or numpy.ndarray
            The right-hand side.
        mg : isdc.core.multigrid.SolverABC
            A solver on the grid of the operator. It is re-shifted to zero if needed.
        tol : float
            The tolerance on the maximum norm of ``W u - b``.
        cap : int, optional
            The maximum number of cycles. (The default is ``50``)
        guess : numpy.ndarray, optional
            The initial guess. If set to ``None``, `b` itself is used as W is close to
            the identity.

        Returns
        -------
        isdc.core.spatial.Field2D or numpy.ndarray
            The solution, with the type of `b`.
        int
            The number of cycles used.

        Raises
        ------
        ValueError
            If `tol` is not positive.
        isdc.core.multigrid.ConvergenceError
            If the tolerance is not met within `cap` cycles.
        """
        if tol <= 0:
            raise ValueError(f"Argument 'tol' must be positive, got {tol}.")
        values, wrap = self._values(b)
        solver = mg if mg.shift == 0.0 else mg.with_shift(0.0)
        u0 = values if guess is None else np.asarray(guess, dtype=float)
        u, report = solver.solve_full(values, u0, tol, cap)
        if not report.converged:
            raise ConvergenceError(
                f"Weighting inversion did not reach {tol:.1e} within {cap} cycles.",
                residual=report.final_defect_norm,
                cycles=report.cycles_used,
            )
        logger.debug(f"Weighting inverted in {report.cycles_used} cycles.")
        return wrap(u), report.cycles_used


def apply_laplacian(op, u):
    """Return ``A u`` for the operator `op`.

    See Also
    --------
    CompactLaplacian.apply_laplacian
    """
    return op.apply_laplacian(u)


def apply_weighting(op, u):
    """Return ``W u`` for the operator `op`.

    See Also
    --------
    CompactLaplacian.apply_weighting
    """
    return op.apply_weighting(u)


def invert_weighting(op, b, mg, tol):
    """Solve ``W u = b`` and return the solution with the cycle count.

    See Also
    --------
    CompactLaplacian.invert_weighting
    """
    return op.invert_weighting(b, mg, tol)

"""Implement the `DirectSolver` class."""
import numpy as np
from scipy.linalg import lu_factor, lu_solve

from ..spatial.stencil import laplacian_stencil, stencil_matrix, weighting_stencil
from .abc import SolverABC


class DirectSolver(SolverABC):
    """Solve ``(W - gamma A) u = b`` with a dense LU factorization.

    Each solve counts as one cycle, so the cycle accounting of the sweeper is unchanged
    with respect to a multigrid hierarchy.

    Parameters
    ----------
    a_matrix : numpy.ndarray
        The dense matrix A.
    w_matrix : numpy.ndarray
        The dense matrix W.
    shape : tuple [int, int]
        The shape of the value arrays.
    gamma : float, optional
        The shift. (The default is ``0.0``)
    """

    def __init__(self, a_matrix, w_matrix, shape, gamma=0.0):
        super().__init__(gamma)
        self._a = np.atleast_2d(np.asarray(a_matrix, dtype=float))
        self._w = np.atleast_2d(np.asarray(w_matrix, dtype=float))
        self._shape = tuple(shape)
        self._matrix = self._w - self.shift * self._a
        self._lu = lu_factor(self._matrix)

    @classmethod
    def from_grid(cls, grid, gamma=0.0):
        """Assemble the compact operator of a small grid.

        Parameters
        ----------
        grid : isdc.core.spatial.Grid2D
            The grid.
        gamma : float, optional
            The shift. (The default is ``0.0``)

        Returns
        -------
        DirectSolver
            The solver.
        """
        a = stencil_matrix(laplacian_stencil(grid.h), grid.shape, grid.bc)
        w = stencil_matrix(weighting_stencil(), grid.shape, grid.bc)
        return cls(a, w, grid.shape, gamma)

    @property
    def shape(self):
        return self._shape

    def with_shift(self, gamma):
        return DirectSolver(self._a, self._w, self._shape, gamma)

    def apply(self, u):
        return (self._matrix @ u.ravel()).reshape(self._shape)

    def cycle(self, b, u):
        return lu_solve(self._lu, b.ravel()).reshape(self._shape)

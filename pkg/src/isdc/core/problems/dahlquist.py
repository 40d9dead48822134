"""Implement the `DahlquistProblem` class."""
import numpy as np

from ..multigrid import DirectSolver
from ..spatial import PERIODIC, Field2D, Grid2D
from .abc import ProbABC


class DahlquistProblem(ProbABC):
    """The scalar test equation ``u' = lam u`` stored on a 1x1 grid.

    A is the scalar `lam`, W is one and the diffusion coefficient is one, so the sweeper
    runs its weighted update unchanged.

    Parameters
    ----------
    lam : float
        The eigenvalue.
    u0 : float, optional
        The initial value. (The default is ``1.0``)
    """

    def __init__(self, lam, u0=1.0):
        super().__init__(
            "dahlquist", 1.0, Grid2D(1, 1, bc=PERIODIC), lam=float(lam), u0=float(u0)
        )

    @property
    def lam(self):
        """Return the eigenvalue."""
        return self["lam"]

    def initial(self):
        return Field2D(self.grid, [[self["u0"]]])

    def f_impl_weighted(self, u):
        return self.lam * u

    def weight(self, u):
        return np.array(u, dtype=float, copy=True)

    def build_solver(self, **kwargs):
        return DirectSolver([[self.lam]], [[1.0]], self.grid.shape)

    def exact(self, t):
        return Field2D(self.grid, np.exp(self.lam * t) * self.initial().values)

    def semidiscrete_exact(self, t):
        return self.exact(t)

    def invert_weighting(self, b, solver, tol, guess=None):
        return np.array(b, dtype=float, copy=True), 0

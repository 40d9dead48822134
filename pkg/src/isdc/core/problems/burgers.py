"""Implement the `BurgersProblem` class."""
import numpy as np

from ..spatial import PERIODIC, WENO_Z, Field2D, Grid2D, weno5_divergence
from .abc import ProbABC
from .heat import SPACING, check_convention

IC_RADIAL = "radial"
IC_X = "x"
INITIAL_CONDITIONS = (IC_RADIAL, IC_X)


def _check_initial(sigma, ic):
    if sigma <= 0:
        raise ValueError(f"Argument 'sigma' must be positive, got {sigma}.")
    if ic not in INITIAL_CONDITIONS:
        raise ValueError(
            f"Argument 'ic' must be one of {', '.join(INITIAL_CONDITIONS)}, not '{ic}'."
        )


def burgers_initial(grid, sigma=0.1, ic=IC_RADIAL):
    """Return the Gaussian pulse the Burgers problem starts from.

    Parameters
    ----------
    grid : isdc.core.spatial.Grid2D
        The grid.
    sigma : float, optional
        The width of the pulse. (The default is ``0.1``)
    ic : str, optional
        ``'radial'`` for ``exp(-(x^2 + y^2) / sigma^2)`` or ``'x'`` for
        ``exp(-x^2 / sigma^2)``. (The default is ``'radial'``)

    Returns
    -------
    isdc.core.spatial.Field2D
        The initial condition.

    Raises
    ------
    ValueError
        If `sigma` is not positive.
        If `ic` is unknown.
    """
    _check_initial(sigma, ic)
    x, y = grid.mesh()
    r2 = x ** 2 + y ** 2 if ic == IC_RADIAL else x ** 2
    return Field2D(grid, np.exp(-r2 / sigma ** 2))


class BurgersProblem(ProbABC):
    """The viscous Burgers equation ``u_t + u u_x + u u_y = nu Laplacian(u)``.

    The domain is the periodic square [-1, 1]^2. The advection term is explicit and
    discretized with WENO5, the diffusion is implicit.

    Parameters
    ----------
    nu : float
        The diffusion coefficient.
    sigma : float, optional
        The width of the initial pulse. (The default is ``0.1``)
    n : int, optional
        The resolution. Under the ``'spacing'`` convention the spacing is ``1 / n``, so
        the grid holds ``2 n`` points per direction. Under the ``'points'``
        convention it holds ``n`` points. (The default is ``64``)
    ic : str, optional
        The initial condition, ``'radial'`` or ``'x'``. (The default is ``'radial'``)
    convention : str, optional
        The grid convention. (The default is ``'spacing'``)
    weno_weights : str, optional
        The nonlinear weights of WENO5. (The default is ``'z'``)
    """

    def __init__(
        self, nu, sigma=0.1, n=64, ic=IC_RADIAL, convention=SPACING, weno_weights=WENO_Z
    ):
        check_convention(convention)
        points = 2 * int(n) if convention == SPACING else int(n)
        super().__init__(
            "burgers",
            nu,
            Grid2D.square(points, -1.0, 1.0, PERIODIC),
            sigma=float(sigma),
            n=int(n),
            ic=ic,
            convention=convention,
            weno_weights=weno_weights,
        )
        _check_initial(self.sigma, ic)

    @property
    def sigma(self):
        """Return the width of the initial pulse."""
        return self["sigma"]

    @property
    def has_explicit(self):
        return True

    def initial(self):
        return burgers_initial(self.grid, self.sigma, self["ic"])

    def f_expl(self, u):
        return weno5_divergence(
            u, self.grid.hx, self.grid.hy, weights=self["weno_weights"]
        )

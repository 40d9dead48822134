"""Implement the `SmootherConfig` class and the relaxation kernels."""
import logging

import numpy as np

from ..spatial.stencil import apply_stencil

logger = logging.getLogger(__name__)

MULTICOLOR = "multicolor"
JACOBI = "jacobi"
SMOOTHERS = (MULTICOLOR, JACOBI)
AUTO = "auto"

# Largest diffusive CFL number for which `select_smoother` picks Gauss-Seidel.
AUTO_CFL_LIMIT = 1.0

DEFAULT_DAMPING = {MULTICOLOR: 1.0, JACOBI: 0.8}
COLORS = ((0, 0), (1, 0), (0, 1), (1, 1))


class SmootherConfig(dict):
    """Store the relaxation settings of a multigrid hierarchy.

    Other Parameters
    ----------------
    smoother : str
        ``'multicolor'`` for Gauss-Seidel in four colours given by the parities of the
        two indices, or ``'jacobi'`` for damped Jacobi. (The default is ``'jacobi'``)
    pre_steps : int
        The number of relaxations before the coarse correction. (The default is ``2``)
    post_steps : int
        The number of relaxations after the coarse correction. (The default is ``2``)
    damping : float
        The relaxation weight. If not set, ``1.0`` is used for ``'multicolor'`` and
        ``0.8`` for ``'jacobi'``.

    Notes
    -----
    The four colour ordering extends the red-black ordering to the 9-point stencil: no
    two nodes of one colour are coupled, so each colour is relaxed at once. It mixes
    Fourier modes: part of a smooth error ends up in the checkerboard modes, which a
    stiff sweep damps slowly. Damped Jacobi only mixes modes through the grid transfers.
    See `select_smoother`.
    """

    def __init__(self, **kwargs):
        smoother = kwargs.get("smoother", JACOBI)
        damping = kwargs.get("damping", None)
        super().__init__(
            smoother=smoother,
            pre_steps=int(kwargs.get("pre_steps", 2)),
            post_steps=int(kwargs.get("post_steps", 2)),
            damping=float(
                DEFAULT_DAMPING.get(smoother, 1.0) if damping is None else damping
            ),
        )
        self.check()

    @property
    def smoother(self):
        """Return the name of the smoother."""
        return self["smoother"]

    @property
    def pre_steps(self):
        """Return the number of pre-smoothing steps."""
        return self["pre_steps"]

    @property
    def post_steps(self):
        """Return the number of post-smoothing steps."""
        return self["post_steps"]

    @property
    def damping(self):
        """Return the relaxation weight."""
        return self["damping"]

    def check(self):
        """Check the configuration.

        Raises
        ------
        ValueError
            If the smoother is unknown.
            If a step count is negative or both are zero.
            If the damping is not in (0, 2).
        """
        if self.smoother not in SMOOTHERS:
            raise ValueError(
                f"Argument 'smoother' must be one of {', '.join(SMOOTHERS)}, "
                f"not '{self.smoother}'."
            )
        if self.pre_steps < 0 or self.post_steps < 0:
            raise ValueError("Smoothing step counts must be non-negative.")
        if self.pre_steps + self.post_steps == 0:
            raise ValueError("At least one smoothing step is required.")
        if not 0.0 < self.damping < 2.0:
            raise ValueError(
                f"Argument 'damping' must lie in (0, 2), got {self.damping}."
            )


def color_masks(shape):
    """Return the four boolean masks of the colour ordering."""
    i, j = np.indices(shape)
    return [((i % 2) == ci) & ((j % 2) == cj) for ci, cj in COLORS]


def multicolor_gauss_seidel(u, b, stencil, bc, masks, damping=1.0):
    """Relax every colour in turn, in place.

    Parameters
    ----------
    u : numpy.ndarray
        The iterate. It is modified.
    b : numpy.ndarray
        The right-hand side.
    stencil : numpy.ndarray
        The 3x3 stencil of the operator.
    bc : str
        The boundary condition.
    masks : list [numpy.ndarray]
        The colour masks, see `color_masks`.
    damping : float, optional
        The over-relaxation weight. (The default is ``1.0``)

    Returns
    -------
    numpy.ndarray
        The relaxed iterate.
    """
    centre = stencil[1, 1]
    for mask in masks:
        update = (b - apply_stencil(u, stencil, bc, skip_centre=True)) / centre
        u[mask] += damping * (update[mask] - u[mask])
    return u


def damped_jacobi(u, b, stencil, bc, masks=None, damping=0.8):
    """Relax all nodes at once with damped Jacobi and return the new iterate."""
    centre = stencil[1, 1]
    return u + damping * (b - apply_stencil(u, stencil, bc)) / centre


def get_smoother(name):
    """Return the relaxation kernel called `name`."""
    return {MULTICOLOR: multicolor_gauss_seidel, JACOBI: damped_jacobi}[name]


def select_smoother(cfl, limit=AUTO_CFL_LIMIT):
    """Return the smoother suited to a step of diffusive CFL number `cfl`.

    Up to `limit` the weighting term dominates the shifted operator and Gauss-Seidel
    meets the tolerance within two cycles. Above it damped Jacobi is used.

    Parameters
    ----------
    cfl : float
        The number ``nu dt / h^2``.
    limit : float, optional
        The largest number for which Gauss-Seidel is picked. (The default is ``1.0``)

    Returns
    -------
    str
        ``'multicolor'`` or ``'jacobi'``.
    """
    return MULTICOLOR if cfl <= limit else JACOBI

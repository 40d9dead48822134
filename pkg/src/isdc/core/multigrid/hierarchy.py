"""Implement the geometric multigrid hierarchy for ``(W - gamma A) u = b``."""
import copy
import logging

import numpy as np
from scipy.linalg import lu_factor, lu_solve

from ..spatial.stencil import (
    apply_stencil,
    laplacian_stencil,
    stencil_matrix,
    weighting_stencil,
)
from .abc import SolverABC
from .smoothers import SmootherConfig, color_masks, get_smoother
from .transfer import prolong, restrict

logger = logging.getLogger(__name__)

COARSEST_THRESHOLD = 4


class Level(object):
    """One level of a hierarchy: a grid and the rediscretized stencils on it.

    Parameters
    ----------
    grid : isdc.core.spatial.Grid2D
        The grid of the level.
    gamma : float
        The shift.
    """

    def __init__(self, grid, gamma):
        self.grid = grid
        self.stencil_a = laplacian_stencil(grid.h)
        self.stencil_w = weighting_stencil()
        self.stencil = self.stencil_w - gamma * self.stencil_a
        self.masks = color_masks(grid.shape)

    def with_shift(self, gamma):
        """Return a level on the same grid with the shift `gamma`.

        The grid, the unshifted stencils and the colour masks are shared.
        """
        level = copy.copy(self)
        level.stencil = self.stencil_w - gamma * self.stencil_a
        return level

    def apply(self, u):
        """Return the shifted operator applied to `u`."""
        return apply_stencil(u, self.stencil, self.grid.bc)

    def __repr__(self):
        return f"Level(shape={self.grid.shape})"


class MgHierarchy(SolverABC):
    """A geometric multigrid solver for the shifted compact operator.

    Coarse operators are rediscretizations of the same stencils. The coarsest level is
    solved with a dense LU factorization.

    Parameters
    ----------
    grids : list [isdc.core.spatial.Grid2D]
        The grids from the finest to the coarsest.
    nu : float
        The diffusion coefficient the hierarchy serves.
    gamma : float
        The shift.
    smoother : isdc.core.multigrid.SmootherConfig
        The relaxation settings.
    levels : list [Level], optional
        Levels of a hierarchy on the same grids. If set, they are shifted instead of
        being rebuilt.

    See Also
    --------
    build_hierarchy
    """

    def __init__(self, grids, nu, gamma, smoother, levels=None):
        super().__init__(gamma)
        self.nu = float(nu)
        self.smoother = smoother
        self._grids = list(grids)
        if levels is None:
            self._levels = [Level(grid, self.shift) for grid in self._grids]
        else:
            self._levels = [level.with_shift(self.shift) for level in levels]
        self._relax = get_smoother(smoother.smoother)
        coarsest = self._levels[-1]
        self._coarse_lu = lu_factor(
            stencil_matrix(coarsest.stencil, coarsest.grid.shape, coarsest.grid.bc)
        )

    @property
    def levels(self):
        """Return the levels from the finest to the coarsest.

        Returns
        -------
        list [Level]
            The levels.
        """
        return self._levels

    @property
    def grid(self):
        """Return the finest grid."""
        return self._grids[0]

    @property
    def shape(self):
        return self.grid.shape

    def with_shift(self, gamma):
        """Return a hierarchy sharing the grids of this one with the shift `gamma`.

        The grids, the unshifted stencils and the colour masks are shared. Only the
        shifted stencils and the coarse factorization are recomputed.
        """
        return MgHierarchy(
            self._grids, self.nu, gamma, self.smoother, levels=self._levels
        )

    def apply(self, u):
        return self._levels[0].apply(u)

    def _smooth(self, level, u, b, num_steps):
        for _ in range(num_steps):
            u = self._relax(
                u,
                b,
                level.stencil,
                level.grid.bc,
                masks=level.masks,
                damping=self.smoother.damping,
            )
        return u

    def _cycle(self, index, b, u):
        level = self._levels[index]
        if index == len(self._levels) - 1:
            return lu_solve(self._coarse_lu, b.ravel()).reshape(b.shape)
        periodic = level.grid.is_periodic
        u = self._smooth(level, u, b, self.smoother.pre_steps)
        defect = b - level.apply(u)
        coarse_b = restrict(defect, periodic)
        coarse_e = self._cycle(index + 1, coarse_b, np.zeros_like(coarse_b))
        u = u + prolong(coarse_e, periodic)
        return self._smooth(level, u, b, self.smoother.post_steps)

    def cycle(self, b, u):
        return self._cycle(0, b, np.array(u, dtype=float, copy=True))

    def v_cycle(self, b, u):
        """Apply one V-cycle.

        Parameters
        ----------
        b : numpy.ndarray
            The right-hand side on the finest grid.
        u : numpy.ndarray
            The iterate on the finest grid. It is not modified.

        Returns
        -------
        numpy.ndarray
            The new iterate.

        Raises
        ------
        ValueError
            If the arrays do not match the finest grid.
        """
        return self.cycle(self._check(b, "b"), self._check(u, "u"))

    def __repr__(self):
        shapes = " -> ".join(str(level.grid.nx) for level in self._levels)
        return f"MgHierarchy(levels={shapes}, shift={self.shift:.3e})"


def build_hierarchy(
    grid, nu, gamma, bc=None, threshold=COARSEST_THRESHOLD, smoother=None
):
    """Build a multigrid hierarchy by repeated coarsening of `grid`.

    Parameters
    ----------
    grid : isdc.core.spatial.Grid2D
        The finest grid.
    nu : float
        The diffusion coefficient.
    gamma : float
        The shift of ``W - gamma A``.
    bc : str, optional
        The boundary condition. If set, it must match the one of `grid`.
    threshold : int, optional
        Coarsening stops once both point counts are at or below this value. (The
        default is ``4``)
    smoother : isdc.core.multigrid.SmootherConfig, optional
        The relaxation settings. If set to ``None``, V(2,2) damped Jacobi is used.

    Returns
    -------
    isdc.core.multigrid.MgHierarchy
        The hierarchy.

    Raises
    ------
    ValueError
        If `bc` does not match the grid.
        If the grid is already at or below the threshold.
        If a level above the threshold cannot be coarsened.
    """
    if bc is not None and bc != grid.bc:
        raise ValueError(
            f"Argument 'bc' is '{bc}' but the grid has boundary condition '{grid.bc}'."
        )
    if max(grid.nx, grid.ny) <= threshold:
        raise ValueError(
            f"Grid {grid.shape} is too small for a hierarchy with threshold "
            f"{threshold}, use a direct solver."
        )
    grids = [grid]
    while max(grids[-1].nx, grids[-1].ny) > threshold:
        grids.append(grids[-1].coarsen())
    smoother = SmootherConfig() if smoother is None else smoother
    hierarchy = MgHierarchy(grids, nu, gamma, smoother)
    logger.debug(f"Built {hierarchy!r}.")
    return hierarchy

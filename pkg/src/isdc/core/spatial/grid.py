"""Implement the `Grid2D` and `Field2D` classes."""
import numpy as np

DIRICHLET = "dirichlet-zero"
PERIODIC = "periodic"
BOUNDARY_CONDITIONS = (DIRICHLET, PERIODIC)


class Grid2D(dict):
    """A uniform two-dimensional grid of unknowns.

    Dirichlet grids hold the interior nodes only, the boundary values being identically
    zero. Periodic grids hold one node per period cell, the right and top edges being
    copies of the left and bottom ones.

    Parameters
    ----------
    nx : int
        The number of unknowns along x.
    ny : int
        The number of unknowns along y.
    domain : Iterable [float], optional
        The bounding box ``(xmin, xmax, ymin, ymax)``. (The default is the unit square)
    bc : str, optional
        The boundary condition, either ``'dirichlet-zero'`` or ``'periodic'``. (The
        default is ``'dirichlet-zero'``)

    Raises
    ------
    ValueError
        If a point count is not positive.
        If the domain is empty.
        If `bc` is unknown.
    """

    def __init__(self, nx, ny, domain=(0.0, 1.0, 0.0, 1.0), bc=DIRICHLET):
        nx, ny = int(nx), int(ny)
        if nx < 1 or ny < 1:
            raise ValueError(f"Point counts must be positive, got ({nx}, {ny}).")
        domain = tuple(float(d) for d in domain)
        if len(domain) != 4 or domain[1] <= domain[0] or domain[3] <= domain[2]:
            raise ValueError(f"Argument 'domain' is not a valid box: {domain}.")
        if bc not in BOUNDARY_CONDITIONS:
            raise ValueError(
                f"Argument 'bc' must be one of {', '.join(BOUNDARY_CONDITIONS)}, "
                f"not '{bc}'."
            )
        super().__init__(nx=nx, ny=ny, domain=list(domain), bc=bc)

    @classmethod
    def unit_square(cls, n):
        """Return the Dirichlet grid of the unit square with `n` unknowns per side."""
        return cls(n, n, (0.0, 1.0, 0.0, 1.0), DIRICHLET)

    @classmethod
    def square(cls, n, xmin, xmax, bc):
        """Return a square grid.

        Parameters
        ----------
        n : int
            The number of unknowns per direction.
        xmin : float
            The lower bound of both coordinates.
        xmax : float
            The upper bound of both coordinates.
        bc : str
            The boundary condition.

        Returns
        -------
        Grid2D
            The grid.
        """
        return cls(n, n, (xmin, xmax, xmin, xmax), bc)

    @property
    def nx(self):
        """Return the number of unknowns along x."""
        return self["nx"]

    @property
    def ny(self):
        """Return the number of unknowns along y."""
        return self["ny"]

    @property
    def domain(self):
        """Return the bounding box ``(xmin, xmax, ymin, ymax)``."""
        return tuple(self["domain"])

    @property
    def bc(self):
        """Return the boundary condition."""
        return self["bc"]

    @property
    def is_periodic(self):
        """Return ``True`` if the grid is periodic."""
        return self.bc == PERIODIC

    @property
    def shape(self):
        """Return the shape ``(nx, ny)`` of the value arrays."""
        return (self.nx, self.ny)

    @property
    def size(self):
        """Return the total number of unknowns."""
        return self.nx * self.ny

    def _spacing(self, length, n):
        return length / n if self.is_periodic else length / (n + 1)

    @property
    def hx(self):
        """Return the spacing along x."""
        xmin, xmax, _, _ = self.domain
        return self._spacing(xmax - xmin, self.nx)

    @property
    def hy(self):
        """Return the spacing along y."""
        _, _, ymin, ymax = self.domain
        return self._spacing(ymax - ymin, self.ny)

    @property
    def h(self):
        """Return the common spacing of an isotropic grid.

        Returns
        -------
        float
            The spacing.

        Raises
        ------
        ValueError
            If the spacings along x and y differ.
        """
        if not np.isclose(self.hx, self.hy, rtol=1e-12, atol=0.0):
            raise ValueError(
                f"Grid is not isotropic (hx={self.hx}, hy={self.hy})."
            )
        return self.hx

    def _coords(self, lower, h, n):
        offset = 0 if self.is_periodic else 1
        return lower + h * np.arange(offset, n + offset)

    @property
    def x(self):
        """Return the x coordinates of the unknowns."""
        return self._coords(self.domain[0], self.hx, self.nx)

    @property
    def y(self):
        """Return the y coordinates of the unknowns."""
        return self._coords(self.domain[2], self.hy, self.ny)

    def mesh(self):
        """Return the coordinates of every unknown.

        Returns
        -------
        numpy.ndarray
            The x coordinates, with shape ``(nx, ny)``.
        numpy.ndarray
            The y coordinates, with shape ``(nx, ny)``.
        """
        return np.meshgrid(self.x, self.y, indexing="ij")

    @staticmethod
    def _coarse_count(n, periodic):
        if periodic:
            return n // 2 if n % 2 == 0 and n >= 4 else None
        return (n - 1) // 2 if n % 2 == 1 and n >= 3 else None

    @property
    def is_coarsenable(self):
        """Return ``True`` if the grid admits one more vertex-centred coarsening.

        Periodic grids need an even point count, coarse node i sitting on fine node 2i.
        Dirichlet grids need an odd interior count, coarse node i sitting on fine node
        2i+1.
        """
        return all(
            self._coarse_count(n, self.is_periodic) is not None
            for n in (self.nx, self.ny)
        )

    def coarsen(self):
        """Return the next coarser grid.

        Returns
        -------
        Grid2D
            The grid with half the spacing count per direction over the same domain.

        Raises
        ------
        ValueError
            If the grid cannot be coarsened.
        """
        if not self.is_coarsenable:
            raise ValueError(
                f"Grid {self.shape} with boundary condition '{self.bc}' cannot be "
                "coarsened."
            )
        nx = self._coarse_count(self.nx, self.is_periodic)
        ny = self._coarse_count(self.ny, self.is_periodic)
        return Grid2D(nx, ny, self.domain, self.bc)


class Field2D(object):
    """A scalar field sampled on the unknowns of a `Grid2D`.

    Parameters
    ----------
    grid : isdc.core.spatial.Grid2D
        The grid.
    values : numpy.ndarray
        The values, either with shape ``(nx, ny)`` or flat in row-major order.

    Raises
    ------
    ValueError
        If the number of values does not match the grid.
    """

    def __init__(self, grid, values):
        values = np.asarray(values, dtype=float)
        if values.size != grid.size:
            raise ValueError(
                f"Field has {values.size} values but the grid holds {grid.size}."
            )
        self.grid = grid
        self.values = values.reshape(grid.shape)

    @classmethod
    def zeros(cls, grid):
        """Return a field of zeros on `grid`."""
        return cls(grid, np.zeros(grid.shape))

    def like(self, values):
        """Return a new field on the same grid holding `values`."""
        return Field2D(self.grid, values)

    def copy(self):
        """Return a deep copy of the field."""
        return Field2D(self.grid, self.values.copy())

    def max_norm(self):
        """Return the maximum norm of the values."""
        return float(np.max(np.abs(self.values)))

    def check_grid(self, grid):
        """Check the field lives on `grid`.

        Raises
        ------
        ValueError
            If the grids differ.
        """
        if self.grid != grid:
            raise ValueError(
                f"Grid mismatch: field is on {dict(self.grid)}, expected {dict(grid)}."
            )

    def check_finite(self):
        """Check every value is finite.

        Returns
        -------
        Field2D
            The field itself.

        Raises
        ------
        FloatingPointError
            If some values are NaN or infinite.
        """
        num_bad = int(np.count_nonzero(~np.isfinite(self.values)))
        if num_bad:
            raise FloatingPointError(
                f"Field holds {num_bad} non-finite values out of {self.values.size}."
            )
        return self

    def __repr__(self):
        return f"Field2D(shape={self.grid.shape}, bc='{self.grid.bc}')"

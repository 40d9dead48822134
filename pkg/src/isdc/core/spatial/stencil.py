"""Apply 3x3 stencils on `Grid2D` value arrays.

Stencil entry ``[a, b]`` multiplies the value at offset ``(a - 1, b - 1)`` from the
centre, the first axis being x.
"""
import numpy as np

from .grid import PERIODIC

STENCIL_A = np.array([[1.0, 4.0, 1.0], [4.0, -20.0, 4.0], [1.0, 4.0, 1.0]]) / 6.0
STENCIL_W = np.array([[0.0, 1.0, 0.0], [1.0, 8.0, 1.0], [0.0, 1.0, 0.0]]) / 12.0
STENCIL_A.setflags(write=False)
STENCIL_W.setflags(write=False)


def laplacian_stencil(h):
    """Return the compact fourth-order Laplacian stencil for the spacing `h`."""
    return STENCIL_A / h ** 2


def weighting_stencil():
    """Return a copy of the right-hand side weighting stencil."""
    return STENCIL_W.copy()


def pad(values, bc):
    """Pad an array with one layer of ghost values.

    Dirichlet grids are padded with the homogeneous boundary data, periodic grids with
    the wrapped values.
    """
    if bc == PERIODIC:
        return np.pad(values, 1, mode="wrap")
    return np.pad(values, 1, mode="constant")


def apply_stencil(values, stencil, bc, skip_centre=False):
    """Apply a 3x3 stencil to an array of unknowns.

    Parameters
    ----------
    values : numpy.ndarray
        The values with shape ``(nx, ny)``.
    stencil : numpy.ndarray
        The 3x3 stencil.
    bc : str
        The boundary condition of the grid.
    skip_centre : bool, optional
        If set to ``True``, the centre coefficient is ignored. Smoothers use it for the
        off-diagonal part of the operator. (The default is ``False``)

    Returns
    -------
    numpy.ndarray
        The stencil applied to `values`.
    """
    nx, ny = values.shape
    padded = pad(values, bc)
    out = np.zeros_like(values, dtype=float)
    for a in range(3):
        for b in range(3):
            if stencil[a, b] == 0.0 or (skip_centre and a == 1 and b == 1):
                continue
            out += stencil[a, b] * padded[a : a + nx, b : b + ny]
    return out


def stencil_matrix(stencil, shape, bc):
    """Assemble the dense matrix of a stencil on a small grid.

    Column k is the stencil applied to the k-th unit vector in row-major order.

    Parameters
    ----------
    stencil : numpy.ndarray
        The 3x3 stencil.
    shape : tuple [int, int]
        The shape of the grid.
    bc : str
        The boundary condition of the grid.

    Returns
    -------
    numpy.ndarray
        The ``(nx * ny, nx * ny)`` matrix.
    """
    size = shape[0] * shape[1]
    matrix = np.empty((size, size))
    unit = np.zeros(size)
    for k in range(size):
        unit[k] = 1.0
        matrix[:, k] = apply_stencil(unit.reshape(shape), stencil, bc).ravel()
        unit[k] = 0.0
    return matrix

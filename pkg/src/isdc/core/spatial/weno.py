"""Fifth order WENO discretization of the Burgers advection term."""
import numpy as np

from .grid import Field2D

WENO_JS = "js"
WENO_Z = "z"
WENO_WEIGHTS = (WENO_JS, WENO_Z)

LINEAR_WEIGHTS = (0.1, 0.6, 0.3)
Z_POWER = 2


def _reconstruct(vm2, vm1, v0, vp1, vp2, eps, weights):
    """Return the left-biased reconstruction at the right face of the centre cell."""
    q0 = (2.0 * vm2 - 7.0 * vm1 + 11.0 * v0) / 6.0
    q1 = (-vm1 + 5.0 * v0 + 2.0 * vp1) / 6.0
    q2 = (2.0 * v0 + 5.0 * vp1 - vp2) / 6.0
    b0 = 13.0 / 12.0 * (vm2 - 2.0 * vm1 + v0) ** 2 + 0.25 * (
        vm2 - 4.0 * vm1 + 3.0 * v0
    ) ** 2
    b1 = 13.0 / 12.0 * (vm1 - 2.0 * v0 + vp1) ** 2 + 0.25 * (vm1 - vp1) ** 2
    b2 = 13.0 / 12.0 * (v0 - 2.0 * vp1 + vp2) ** 2 + 0.25 * (
        3.0 * v0 - 4.0 * vp1 + vp2
    ) ** 2
    d0, d1, d2 = LINEAR_WEIGHTS
    if weights == WENO_Z:
        tau = np.abs(b0 - b2)
        a0 = d0 * (1.0 + (tau / (b0 + eps)) ** Z_POWER)
        a1 = d1 * (1.0 + (tau / (b1 + eps)) ** Z_POWER)
        a2 = d2 * (1.0 + (tau / (b2 + eps)) ** Z_POWER)
    else:
        a0 = d0 / (eps + b0) ** 2
        a1 = d1 / (eps + b1) ** 2
        a2 = d2 / (eps + b2) ** 2
    return (a0 * q0 + a1 * q1 + a2 * q2) / (a0 + a1 + a2)


def _flux_derivative(u, h, axis, alpha, eps, weights):
    """Return the conservative derivative of ``u^2 / 2`` along `axis`."""
    flux = 0.5 * u ** 2
    f_plus = 0.5 * (flux + alpha * u)
    f_minus = 0.5 * (flux - alpha * u)

    def shift(v, k):
        return np.roll(v, k, axis=axis)

    face = _reconstruct(
        shift(f_plus, 2),
        shift(f_plus, 1),
        f_plus,
        shift(f_plus, -1),
        shift(f_plus, -2),
        eps,
        weights,
    ) + _reconstruct(
        shift(f_minus, -3),
        shift(f_minus, -2),
        shift(f_minus, -1),
        f_minus,
        shift(f_minus, 1),
        eps,
        weights,
    )
    return (face - shift(face, 1)) / h


def weno5_divergence(values, hx, hy, eps=1e-6, weights=WENO_Z):
    """Return ``-(u u_x + u u_y)`` for a periodic value array.

    Parameters
    ----------
    values : numpy.ndarray
        The values with shape ``(nx, ny)``, x along the first axis.
    hx : float
        The spacing along x.
    hy : float
        The spacing along y.
    eps : float, optional
        The regularization of the smoothness indicators. (The default is ``1e-6``)
    weights : str, optional
        The nonlinear weights, ``'js'`` or ``'z'``. (The default is ``'z'``)

    Returns
    -------
    numpy.ndarray
        The advection term.
    """
    if weights not in WENO_WEIGHTS:
        raise ValueError(
            f"Argument 'weights' must be one of {', '.join(WENO_WEIGHTS)}, "
            f"not '{weights}'."
        )
    alpha = float(np.max(np.abs(values))) if values.size else 0.0
    return -(
        _flux_derivative(values, hx, 0, alpha, eps, weights)
        + _flux_derivative(values, hy, 1, alpha, eps, weights)
    )


def weno5_advection(u, eps=1e-6, weights=WENO_Z):
    """Evaluate the Burgers advection term ``-(u u_x + u u_y)`` with WENO5.

    The flux ``u^2 / 2`` is split with a global Lax-Friedrichs splitting, ``alpha``
    being the maximum of ``|u|``, and each part is reconstructed at the cell faces from
    the upwind side with fifth order WENO.

    Parameters
    ----------
    u : isdc.core.spatial.Field2D
        The field. Its grid must be periodic.
    eps : float, optional
        The regularization of the smoothness indicators. (The default is ``1e-6``)
    weights : str, optional
        ``'js'`` for the classical Jiang-Shu weights or ``'z'`` for weights built on the
        global indicator ``|beta_0 - beta_2|``, which keep fifth order at smooth
        extrema. (The default is ``'z'``)

    Returns
    -------
    isdc.core.spatial.Field2D
        The advection term.

    Raises
    ------
    ValueError
        If the grid is not periodic.
        If `weights` is unknown.
    """
    if not u.grid.is_periodic:
        raise ValueError(
            f"WENO advection requires a periodic grid, got '{u.grid.bc}'."
        )
    return Field2D(
        u.grid, weno5_divergence(u.values, u.grid.hx, u.grid.hy, eps, weights)
    )

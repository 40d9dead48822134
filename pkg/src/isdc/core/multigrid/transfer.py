"""Grid transfer operators between vertex-centred levels.

Periodic levels pair coarse node ``I`` with fine node ``2I``. Dirichlet levels hold the
interior nodes only and pair coarse node ``I`` with fine node ``2I + 1``.
"""
import numpy as np


def _restrict_axis0(fine, periodic):
    if periodic:
        smoothed = 0.25 * (
            np.roll(fine, 1, axis=0) + 2.0 * fine + np.roll(fine, -1, axis=0)
        )
        return smoothed[::2]
    padded = np.pad(fine, ((1, 1), (0, 0)))
    smoothed = 0.25 * (padded[:-2] + 2.0 * padded[1:-1] + padded[2:])
    return smoothed[1::2]


def _prolong_axis0(coarse, periodic):
    nc = coarse.shape[0]
    if periodic:
        fine = np.empty((2 * nc,) + coarse.shape[1:])
        fine[::2] = coarse
        fine[1::2] = 0.5 * (coarse + np.roll(coarse, -1, axis=0))
        return fine
    fine = np.empty((2 * nc + 1,) + coarse.shape[1:])
    padded = np.pad(coarse, ((1, 1), (0, 0)))
    fine[1::2] = coarse
    fine[::2] = 0.5 * (padded[:-1] + padded[1:])
    return fine


def restrict(fine, periodic):
    """Restrict a fine array with full weighting.

    The 9-point full weighting stencil ``[1 2 1; 2 4 2; 1 2 1] / 16`` is applied as the
    product of the 1D stencil ``[1 2 1] / 4`` along both axes.

    Parameters
    ----------
    fine : numpy.ndarray
        The fine values.
    periodic : bool
        ``True`` for periodic levels, ``False`` for Dirichlet levels.

    Returns
    -------
    numpy.ndarray
        The coarse values.
    """
    coarse = _restrict_axis0(fine, periodic)
    return _restrict_axis0(coarse.T, periodic).T


def prolong(coarse, periodic):
    """Interpolate a coarse array bilinearly onto the next finer level.

    Parameters
    ----------
    coarse : numpy.ndarray
        The coarse values.
    periodic : bool
        ``True`` for periodic levels, ``False`` for Dirichlet levels.

    Returns
    -------
    numpy.ndarray
        The fine values.
    """
    fine = _prolong_axis0(coarse, periodic)
    return _prolong_axis0(fine.T, periodic).T

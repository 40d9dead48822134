"""Implement the `SolverABC` class."""
from abc import ABC, abstractmethod
import logging

import numpy as np

from .report import SolveReport

logger = logging.getLogger(__name__)

FULL_SOLVE_TOL = 1e-11
FULL_SOLVE_CAP = 100


class SolverABC(ABC):
    """A base class for solvers of the shifted system ``(W - gamma A) u = b``.

    Subclasses provide the operator application and one solver cycle. The run to
    tolerance and fixed budget strategies are shared.

    Parameters
    ----------
    shift : float
        The shift gamma.

    Raises
    ------
    ValueError
        If `shift` is negative.
    """

    def __init__(self, shift):
        if shift < 0:
            raise ValueError(f"Argument 'shift' must be non-negative, got {shift}.")
        self._shift = float(shift)

    @property
    def shift(self):
        """Return the shift gamma."""
        return self._shift

    @property
    @abstractmethod
    def shape(self):
        """Return the shape of the value arrays the solver works on."""

    @abstractmethod
    def with_shift(self, gamma):
        """Return a solver of the same system with the shift `gamma`."""

    @abstractmethod
    def apply(self, u):
        """Return ``(W - gamma A) u``."""

    @abstractmethod
    def cycle(self, b, u):
        """Return the iterate after one cycle started from `u`."""

    def _check(self, array, name):
        array = np.asarray(array, dtype=float)
        if array.shape != self.shape:
            raise ValueError(
                f"Argument '{name}' has shape {array.shape}, expected {self.shape}."
            )
        return array

    def defect(self, b, u):
        """Return the defect ``b - (W - gamma A) u``.

        Parameters
        ----------
        b : numpy.ndarray
            The right-hand side.
        u : numpy.ndarray
            The iterate.

        Returns
        -------
        numpy.ndarray
            The defect.
        """
        return self._check(b, "b") - self.apply(self._check(u, "u"))

    def defect_norm(self, b, u):
        """Return the maximum norm of the defect."""
        return float(np.max(np.abs(self.defect(b, u))))

    def solve_full(self, b, u0, tol=FULL_SOLVE_TOL, cap=FULL_SOLVE_CAP):
        """Apply cycles until the defect meets a tolerance.

        Parameters
        ----------
        b : numpy.ndarray
            The right-hand side.
        u0 : numpy.ndarray
            The initial guess. It is not modified.
        tol : float, optional
            The tolerance on the maximum norm of the defect. (The default is ``1e-11``)
        cap : int, optional
            The maximum number of cycles. (The default is ``100``)

        Returns
        -------
        numpy.ndarray
            The last iterate, returned even if the cap was reached.
        isdc.core.multigrid.SolveReport
            The exact number of cycles and the final defect.

        Raises
        ------
        ValueError
            If `tol` is not positive.
            If `cap` is smaller than 1.
        """
        if tol <= 0:
            raise ValueError(f"Argument 'tol' must be positive, got {tol}.")
        if cap < 1:
            raise ValueError(f"Argument 'cap' must be at least 1, got {cap}.")
        b = self._check(b, "b")
        u = self._check(u0, "u0").copy()
        norm = self.defect_norm(b, u)
        cycles = 0
        while norm > tol and cycles < cap:
            u = self.cycle(b, u)
            cycles += 1
            norm = self.defect_norm(b, u)
        if norm > tol:
            logger.warning(
                f"Solve stopped at the cap of {cap} cycles with defect {norm:.3e}."
            )
        return u, SolveReport(cycles, norm, norm <= tol)

    def solve_inexact(
        self, b, u0, num_cycles, ref_tol=FULL_SOLVE_TOL, stop_tol=None
    ):
        """Apply exactly `num_cycles` cycles, whatever the defect.

        With `stop_tol` set, `num_cycles` is a budget instead: the solve ends as soon as
        the defect meets `stop_tol`, possibly before the first cycle.

        Parameters
        ----------
        b : numpy.ndarray
            The right-hand side.
        u0 : numpy.ndarray
            The initial guess. It is not modified.
        num_cycles : int
            The number of cycles L.
        ref_tol : float, optional
            The tolerance the `converged` flag of the report is measured against. (The
            default is ``1e-11``)
        stop_tol : float, optional
            The tolerance ending the budget early. (The default is ``None``, the whole
            budget is spent)

        Returns
        -------
        numpy.ndarray
            The last iterate.
        isdc.core.multigrid.SolveReport
            The report, `cycles_used` being `num_cycles` unless the budget ended early.

        Raises
        ------
        ValueError
            If `num_cycles` is smaller than 1.
        """
        if num_cycles < 1:
            raise ValueError(
                f"Argument 'num_cycles' must be at least 1, got {num_cycles}."
            )
        b = self._check(b, "b")
        u = self._check(u0, "u0").copy()
        if stop_tol is None:
            for _ in range(num_cycles):
                u = self.cycle(b, u)
            norm = self.defect_norm(b, u)
            return u, SolveReport(num_cycles, norm, norm <= ref_tol)
        norm = self.defect_norm(b, u)
        cycles = 0
        while norm > stop_tol and cycles < num_cycles:
            u = self.cycle(b, u)
            cycles += 1
            norm = self.defect_norm(b, u)
        return u, SolveReport(cycles, norm, norm <= ref_tol)

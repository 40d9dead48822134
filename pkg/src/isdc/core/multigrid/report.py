"""Implement the `SolveReport` class and the `ConvergenceError` exception."""


class SolveReport(dict):
    """Store the outcome of one inner solve.

    Parameters
    ----------
    cycles_used : int
        The number of cycles applied.
    final_defect_norm : float
        The maximum norm of the final defect.
    converged : bool
        ``True`` if the defect met the tolerance.
    """

    def __init__(self, cycles_used, final_defect_norm, converged):
        super().__init__(
            cycles_used=int(cycles_used),
            final_defect_norm=float(final_defect_norm),
            converged=bool(converged),
        )

    @property
    def cycles_used(self):
        """Return the number of cycles applied."""
        return self["cycles_used"]

    @property
    def final_defect_norm(self):
        """Return the maximum norm of the final defect."""
        return self["final_defect_norm"]

    @property
    def converged(self):
        """Return ``True`` if the defect met the tolerance."""
        return self["converged"]


class ConvergenceError(RuntimeError):
    """Raised when an iterative solve exhausts its cycle cap.

    Parameters
    ----------
    message : str
        The description of the failure.
    residual : float
        The maximum norm of the last defect.
    cycles : int
        The number of cycles applied.
    node : int, optional
        The collocation node being solved for, if any.
    sweep : int, optional
        The sweep during which the failure occurred, if any.
    """

    def __init__(self, message, residual, cycles, node=None, sweep=None):
        context = []
        if node is not None:
            context.append(f"node {node}")
        if sweep is not None:
            context.append(f"sweep {sweep}")
        if context:
            message = f"{message} ({', '.join(context)})"
        super().__init__(f"{message} Last defect: {residual:.3e}.")
        self.residual = residual
        self.cycles = cycles
        self.node = node
        self.sweep = sweep

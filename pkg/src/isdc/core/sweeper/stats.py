"""Implement the `RunStats` class."""


class RunStats(dict):
    """Store the statistics of one time step.

    Inner solve cycles and weighting inversion cycles are accumulated separately.

    Other Parameters
    ----------------
    sweeps : int
        The number of sweeps performed.
    inner_cycles : int
        The accumulated cycles of the implicit solves.
    w_inversion_cycles : int
        The accumulated cycles of the weighting inversions.
    residual_history : list [float]
        The residual after every sweep.
    converged : bool
        ``True`` if the residual met the threshold.
    initial_residual : float
        The residual of the spread initial state.
    cycles_per_sweep : list [int]
        The implicit solve cycles of every sweep.
    """

    def __init__(self, **kwargs):
        super().__init__(
            sweeps=kwargs.get("sweeps", 0),
            inner_cycles=kwargs.get("inner_cycles", 0),
            w_inversion_cycles=kwargs.get("w_inversion_cycles", 0),
            residual_history=list(kwargs.get("residual_history", [])),
            converged=kwargs.get("converged", False),
            initial_residual=kwargs.get("initial_residual", None),
            cycles_per_sweep=list(kwargs.get("cycles_per_sweep", [])),
        )

    @property
    def sweeps(self):
        """Return the number of sweeps performed."""
        return self["sweeps"]

    @property
    def inner_cycles(self):
        """Return the accumulated cycles of the implicit solves."""
        return self["inner_cycles"]

    @property
    def w_inversion_cycles(self):
        """Return the accumulated cycles of the weighting inversions."""
        return self["w_inversion_cycles"]

    @property
    def residual_history(self):
        """Return the residual after every sweep."""
        return self["residual_history"]

    @property
    def converged(self):
        """Return ``True`` if the residual met the threshold."""
        return self["converged"]

    @property
    def initial_residual(self):
        """Return the residual before the first sweep."""
        return self["initial_residual"]

    @property
    def cycles_per_sweep(self):
        """Return the implicit solve cycles of every sweep."""
        return self["cycles_per_sweep"]

    @property
    def final_residual(self):
        """Return the last residual evaluated.

        Returns
        -------
        float or None
            The residual after the last sweep, the initial residual if no sweep was
            performed.
        """
        if self.residual_history:
            return self.residual_history[-1]
        return self.initial_residual

    def add_sweep(self, cycles, residual):
        """Record one sweep.

        Parameters
        ----------
        cycles : int
            The implicit solve cycles of the sweep.
        residual : float
            The residual after the sweep.
        """
        self["sweeps"] += 1
        self["inner_cycles"] += int(cycles)
        self["cycles_per_sweep"].append(int(cycles))
        self["residual_history"].append(float(residual))

    def to_row(self):
        """Return the flat record the harness stores in its tables.

        Returns
        -------
        dict [str, Any]
            The sweep count, the cycle counts, the final residual and the convergence
            flag.
        """
        return {
            "sweeps": self.sweeps,
            "inner_cycles": self.inner_cycles,
            "w_cycles": self.w_inversion_cycles,
            "final_residual": self.final_residual,
            "converged": self.converged,
            "cycles_per_sweep": " ".join(str(c) for c in self.cycles_per_sweep),
        }

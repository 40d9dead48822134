"""Implement the `SweepConfig` class."""
SDC_EXACT = "sdc-exact"
ISDC_FIXED = "isdc-fixed"
MODES = (SDC_EXACT, ISDC_FIXED)

GUESS_PREVIOUS_SWEEP = "previous-sweep-value"
GUESS_ZERO = "zero"
GUESS_PREVIOUS_NODE = "previous-node-value"
GUESS_POLICIES = (GUESS_PREVIOUS_SWEEP, GUESS_ZERO, GUESS_PREVIOUS_NODE)

RESIDUAL_UNWEIGHTED = "unweighted"
RESIDUAL_WEIGHTED = "weighted"
RESIDUAL_FORMS = (RESIDUAL_UNWEIGHTED, RESIDUAL_WEIGHTED)

DEFAULTS = {
    "mode": SDC_EXACT,
    "num_cycles": 2,
    "early_stop": False,
    "residual_tol": 5e-8,
    "max_sweeps": 100,
    "inner_tol": 1e-11,
    "initial_guess_policy": GUESS_PREVIOUS_SWEEP,
    "residual_form": RESIDUAL_UNWEIGHTED,
    "relative_residual": False,
    "num_sweeps": None,
    "inner_cap": 100,
    "w_tol": None,
}


def _choice(value, name, choices):
    if value not in choices:
        raise ValueError(
            f"Argument '{name}' must be one of {', '.join(choices)}, not '{value}'."
        )


class SweepConfig(dict):
    """Store the settings of the deferred correction iteration.

    Other Parameters
    ----------------
    mode : str
        ``'sdc-exact'`` solves every implicit system to `inner_tol`, ``'isdc-fixed'``
        applies exactly `num_cycles` cycles. (The default is ``'sdc-exact'``)
    num_cycles : int
        The number of cycles L per implicit solve in ``'isdc-fixed'`` mode. (The
        default is ``2``)
    early_stop : bool
        If set to ``True``, an ``'isdc-fixed'`` solve ends before its `num_cycles`
        cycles once the defect meets `inner_tol`. (The default is ``False``)
    residual_tol : float
        The stopping threshold on the maximum norm of the collocation residual. (The
        default is ``5e-8``)
    max_sweeps : int
        The maximum number of sweeps. (The default is ``100``)
    inner_tol : float
        The defect tolerance of the full solves. (The default is ``1e-11``)
    initial_guess_policy : str
        The initial guess of the inner solves: ``'previous-sweep-value'``, ``'zero'``
        or ``'previous-node-value'``. (The default is ``'previous-sweep-value'``)
    residual_form : str
        ``'unweighted'`` measures ``u - u0 - dt Q f``, ``'weighted'`` measures the same
        defect multiplied by W. (The default is ``'unweighted'``)
    relative_residual : bool
        If set to ``True``, the residual is divided by the maximum norm of the initial
        value. (The default is ``False``)
    num_sweeps : int
        If set, exactly this number of sweeps is performed and the residual does not
        stop the iteration. (The default is ``None``)
    inner_cap : int
        The cycle cap of the full solves. (The default is ``100``)
    w_tol : float
        The tolerance of the weighting inversions, relative to ``max(1, |b|)``. If not
        set, `inner_tol` is used. (The default is ``None``)

    Raises
    ------
    ValueError
        If a setting is invalid.
    """

    def __init__(self, **kwargs):
        unknown = set(kwargs) - set(DEFAULTS)
        if unknown:
            raise ValueError(f"Unknown sweep settings: {', '.join(sorted(unknown))}.")
        super().__init__({**DEFAULTS, **kwargs})
        self.check()

    @property
    def mode(self):
        """Return the solve mode."""
        return self["mode"]

    @property
    def is_exact(self):
        """Return ``True`` in ``'sdc-exact'`` mode."""
        return self.mode == SDC_EXACT

    @property
    def num_cycles(self):
        """Return the number of cycles L per implicit solve."""
        return self["num_cycles"]

    @property
    def early_stop(self):
        """Return ``True`` if fixed-budget solves may end early."""
        return bool(self["early_stop"])

    @property
    def residual_tol(self):
        """Return the residual threshold."""
        return self["residual_tol"]

    @property
    def max_sweeps(self):
        """Return the maximum number of sweeps."""
        return self["max_sweeps"]

    @property
    def inner_tol(self):
        """Return the tolerance of the full solves."""
        return self["inner_tol"]

    @property
    def initial_guess_policy(self):
        """Return the initial guess policy."""
        return self["initial_guess_policy"]

    @property
    def residual_form(self):
        """Return the residual form."""
        return self["residual_form"]

    @property
    def relative_residual(self):
        """Return ``True`` if the residual is relative."""
        return self["relative_residual"]

    @property
    def num_sweeps(self):
        """Return the fixed number of sweeps, or ``None``."""
        return self["num_sweeps"]

    @property
    def inner_cap(self):
        """Return the cycle cap of the full solves."""
        return self["inner_cap"]

    @property
    def w_tol(self):
        """Return the tolerance of the weighting inversions."""
        return self.inner_tol if self["w_tol"] is None else self["w_tol"]

    def check(self):
        """Check the settings.

        Raises
        ------
        ValueError
            If a choice is unknown or a number is out of range.
        """
        _choice(self.mode, "mode", MODES)
        _choice(self.initial_guess_policy, "initial_guess_policy", GUESS_POLICIES)
        _choice(self.residual_form, "residual_form", RESIDUAL_FORMS)
        if self.mode == ISDC_FIXED and int(self.num_cycles) < 1:
            raise ValueError(
                f"Argument 'num_cycles' must be at least 1, got {self.num_cycles}."
            )
        if not self.residual_tol > 0:
            raise ValueError(
                f"Argument 'residual_tol' must be positive, got {self.residual_tol}."
            )
        if not self.inner_tol > 0 or not self.w_tol > 0:
            raise ValueError("Inner tolerances must be positive.")
        if int(self.max_sweeps) < 1 or int(self.inner_cap) < 1:
            raise ValueError("Arguments 'max_sweeps' and 'inner_cap' must be positive.")
        if self.num_sweeps is not None and int(self.num_sweeps) < 0:
            raise ValueError(
                f"Argument 'num_sweeps' must be non-negative, got {self.num_sweeps}."
            )

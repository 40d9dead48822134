"""Implement the `ExperimentSpec` class."""
import itertools as iter
import logging

from isdc.core.multigrid import AUTO, SmootherConfig, select_smoother
from isdc.core.problems import diffusive_cfl, make_problem
from isdc.core.quadrature import CollocationTable
from isdc.core.sweeper import GUESS_PREVIOUS_SWEEP, ISDC_FIXED, SweepConfig

from .config import read_config

logger = logging.getLogger(__name__)

FIELDS = {
    "name": str,
    "problem": str,
    "nu": float,
    "num_nodes": int,
    "rule": str,
    "mode": str,
    "num_cycles": int,
    "early_stop": bool,
    "dt": float,
    "grid": int,
    "residual_tol": float,
    "inner_tol": float,
    "max_sweeps": int,
    "guess": str,
    "grid_convention": str,
    "ic": str,
    "sigma": float,
    "lam": float,
    "residual_form": str,
    "relative_residual": bool,
    "smoother": str,
    "threshold": int,
    "num_sweeps": int,
    "out": str,
}

DEFAULTS = {
    "name": "",
    "problem": "heat",
    "nu": 1.0,
    "num_nodes": 3,
    "rule": "gauss-lobatto",
    "mode": "sdc-exact",
    "num_cycles": 2,
    "early_stop": True,
    "dt": 1e-3,
    "grid": 64,
    "residual_tol": 5e-8,
    "inner_tol": 1e-11,
    "max_sweeps": 100,
    "guess": GUESS_PREVIOUS_SWEEP,
    "grid_convention": "spacing",
    "ic": "radial",
    "sigma": 0.1,
    "lam": -1.0,
    "residual_form": "unweighted",
    "relative_residual": False,
    "smoother": AUTO,
    "threshold": 4,
    "num_sweeps": None,
    "out": None,
}

ALIASES = {
    "nodes": "num_nodes",
    "l_cycles": "num_cycles",
    "L": "num_cycles",
    "tol": "residual_tol",
    "convention": "grid_convention",
    "initial_guess_policy": "guess",
}

PAIR_EXCLUDED = ("name", "mode", "num_cycles", "guess", "out")


def _coerce(key, value):
    if value is None:
        return None
    kind = FIELDS[key]
    if kind is bool:
        if isinstance(value, str):
            if value.lower() in ("true", "yes", "1"):
                return True
            if value.lower() in ("false", "no", "0"):
                return False
            raise ValueError(f"Argument '{key}' expects a boolean, got '{value}'.")
        return bool(value)
    if kind is int:
        number = float(value)
        if not number.is_integer():
            raise ValueError(f"Argument '{key}' expects an integer, got '{value}'.")
        return int(number)
    return kind(value)


def normalize_keys(mapping):
    """Return `mapping` with aliases resolved and dashes replaced by underscores.

    Raises
    ------
    ValueError
        If a key is unknown.
    """
    out = {}
    for key, value in mapping.items():
        key = key.replace("-", "_")
        key = ALIASES.get(key, key)
        if key not in FIELDS:
            raise ValueError(f"Unknown experiment setting '{key}'.")
        out[key] = value
    return out


def pair_key(mapping):
    """Return the key pairing SDC and ISDC runs of the same setup.

    It holds every setting but the name, the mode, the cycle count, the guess policy
    and the output path.
    """
    return tuple(
        (key, mapping.get(key, DEFAULTS[key]))
        for key in FIELDS
        if key not in PAIR_EXCLUDED
    )


class ExperimentSpec(dict):
    """Store the settings of one run of the benchmark.

    Every setting is coerced to its type on construction. The defaults reproduce a
    single step of length 0.001 on the 64 resolution heat problem.

    Other Parameters
    ----------------
    problem : str
        ``'heat'``, ``'burgers'`` or ``'dahlquist'``.
    nu : float
        The diffusion coefficient.
    num_nodes : int
        The number of collocation nodes M.
    rule : str
        The node rule.
    mode : str
        ``'sdc-exact'`` or ``'isdc-fixed'``.
    num_cycles : int
        The number of cycles L per implicit solve in ISDC mode.
    early_stop : bool
        If ``True``, an ISDC solve ends before its L cycles once the defect meets
        `inner_tol`, so that ISDC and SDC coincide when the full solves take at most L
        cycles.
    dt : float
        The step size.
    grid : int
        The grid resolution.
    residual_tol : float
        The residual threshold.
    inner_tol : float
        The tolerance of the full solves.
    max_sweeps : int
        The maximum number of sweeps.
    guess : str
        The initial guess policy of the inner solves.
    grid_convention : str
        ``'spacing'`` or ``'points'``.
    ic : str
        The Burgers initial condition, ``'radial'`` or ``'x'``.
    sigma : float
        The width of the Burgers pulse.
    lam : float
        The eigenvalue of the scalar test problem.
    residual_form : str
        ``'unweighted'`` or ``'weighted'``.
    relative_residual : bool
        If ``True``, the residual is relative to the initial value.
    smoother : str
        ``'multicolor'``, ``'jacobi'`` or ``'auto'``, picking the smoother from the
        diffusive CFL number of the step.
    threshold : int
        The coarsest grid size of the multigrid hierarchy.
    num_sweeps : int
        A fixed number of sweeps, or ``None``.
    out : str
        The output path, or ``None``.
    name : str
        A free name. If empty, `label` is used.

    Raises
    ------
    ValueError
        If a setting is unknown or cannot be coerced.
    """

    def __init__(self, **kwargs):
        values = {**DEFAULTS, **normalize_keys(kwargs)}
        super().__init__({k: _coerce(k, v) for k, v in values.items()})

    @property
    def is_isdc(self):
        """Return ``True`` for fixed-budget runs."""
        return self["mode"] == ISDC_FIXED

    @property
    def label(self):
        """Return a short human readable description of the run."""
        label = f"{self['problem']} nu={self['nu']:g} M={self['num_nodes']} "
        label += f"{self['mode']}"
        if self.is_isdc:
            label += f" L={self['num_cycles']}"
        if self["guess"] != GUESS_PREVIOUS_SWEEP:
            label += f" guess={self['guess']}"
        return label

    @property
    def pair_key(self):
        """Return the key pairing this run with its SDC or ISDC counterpart."""
        return pair_key(self)

    def copy_with(self, **kwargs):
        """Return a copy with some settings replaced."""
        return ExperimentSpec(**{**self, **kwargs})

    def build_problem(self):
        """Build the problem.

        Returns
        -------
        isdc.core.problems.ProbABC
            The problem.
        """
        name = self["problem"]
        if name == "heat":
            kwargs = {"nu": self["nu"], "n": self["grid"]}
            kwargs["convention"] = self["grid_convention"]
        elif name == "burgers":
            kwargs = {
                "nu": self["nu"],
                "sigma": self["sigma"],
                "n": self["grid"],
                "ic": self["ic"],
                "convention": self["grid_convention"],
            }
        else:
            kwargs = {"lam": self["lam"]}
        return make_problem(name, **kwargs)

    def build_table(self):
        """Build the collocation table."""
        return CollocationTable(self["rule"], self["num_nodes"])

    def build_sweep_config(self):
        """Build the sweep settings.

        Returns
        -------
        isdc.core.sweeper.SweepConfig
            The settings.
        """
        return SweepConfig(
            mode=self["mode"],
            num_cycles=self["num_cycles"],
            early_stop=self["early_stop"],
            residual_tol=self["residual_tol"],
            max_sweeps=self["max_sweeps"],
            inner_tol=self["inner_tol"],
            initial_guess_policy=self["guess"],
            residual_form=self["residual_form"],
            relative_residual=self["relative_residual"],
            num_sweeps=self["num_sweeps"],
        )

    def build_smoother(self, problem=None):
        """Build the relaxation settings of the multigrid hierarchy.

        Parameters
        ----------
        problem : isdc.core.problems.ProbABC, optional
            The problem. If not set, it is built from the settings.

        Returns
        -------
        isdc.core.multigrid.SmootherConfig
            The settings.
        """
        name = self["smoother"]
        if name == AUTO:
            problem = self.build_problem() if problem is None else problem
            cfl = diffusive_cfl(problem.nu, self["dt"], problem.grid.h)
            name = select_smoother(cfl)
            logger.debug(f"Diffusive CFL {cfl:.3g} selects the '{name}' smoother.")
        return SmootherConfig(smoother=name)

    def build_solver(self, problem):
        """Build the inner solver of `problem`."""
        return problem.build_solver(
            threshold=self["threshold"], smoother=self.build_smoother(problem)
        )

    def check(self):
        """Check every setting by building the run components.

        Raises
        ------
        ValueError
            If a setting is invalid.
        """
        if self["dt"] <= 0:
            raise ValueError(f"Argument 'dt' must be positive, got {self['dt']}.")
        problem = self.build_problem()
        self.build_table()
        self.build_sweep_config()
        self.build_smoother(problem)
        return self

    @classmethod
    def expand(cls, base=None, **lists):
        """Build the cartesian product of the list valued settings.

        Parameters
        ----------
        base : dict [str, Any], optional
            Scalar or list valued settings.

        Other Parameters
        ----------------
        **lists
            More settings, overriding `base`.

        Returns
        -------
        list [ExperimentSpec]
            One spec per combination, the last key varying fastest.
        """
        settings = normalize_keys({**(base or {}), **lists})
        keys = list(settings)
        choices = [
            v if isinstance(v, (list, tuple)) else [v] for v in settings.values()
        ]
        return [cls(**dict(zip(keys, combo))) for combo in iter.product(*choices)]

    @classmethod
    def from_config(cls, path, **overrides):
        """Build the specs described by a configuration file.

        Parameters
        ----------
        path : str, byte or os.PathLike
            The path to the configuration file.

        Other Parameters
        ----------------
        **overrides
            Settings overriding the file, typically command line flags.

        Returns
        -------
        list [ExperimentSpec]
            The expanded specs.
        """
        config = normalize_keys(read_config(path))
        config.update(normalize_keys(overrides))
        specs = cls.expand(config)
        logger.info(f"Configuration '{path}' expands to {len(specs)} runs.")
        return specs

"""Build problems by name."""
from .burgers import BurgersProblem
from .dahlquist import DahlquistProblem
from .heat import HeatProblem

PROBLEMS = {
    "heat": HeatProblem,
    "burgers": BurgersProblem,
    "dahlquist": DahlquistProblem,
}


def diffusive_cfl(nu, dt, h):
    """Return the diffusive CFL number ``nu dt / h^2``.

    Raises
    ------
    ValueError
        If an argument is not positive.
    """
    if nu <= 0 or dt <= 0 or h <= 0:
        raise ValueError(
            f"Arguments must be positive, got nu={nu}, dt={dt} and h={h}."
        )
    return nu * dt / h ** 2


def make_problem(name, **kwargs):
    """Build a problem from its name.

    Parameters
    ----------
    name : str
        ``'heat'``, ``'burgers'`` or ``'dahlquist'``.

    Other Parameters
    ----------------
    **kwargs
        The arguments of the problem class.

    Returns
    -------
    isdc.core.problems.ProbABC
        The problem.

    Raises
    ------
    ValueError
        If `name` is unknown.
    """
    if name not in PROBLEMS:
        raise ValueError(
            f"Argument 'name' must be one of {', '.join(PROBLEMS)}, not '{name}'."
        )
    return PROBLEMS[name](**kwargs)

"""API for `isdc.core.problems`."""
from .abc import ProbABC
from .heat import GRID_CONVENTIONS, HeatProblem, heat_exact, heat_initial
from .burgers import INITIAL_CONDITIONS, BurgersProblem, burgers_initial
from .dahlquist import DahlquistProblem
from .factory import PROBLEMS, diffusive_cfl, make_problem

__all__ = [
    "ProbABC",
    "GRID_CONVENTIONS",
    "HeatProblem",
    "heat_exact",
    "heat_initial",
    "INITIAL_CONDITIONS",
    "BurgersProblem",
    "burgers_initial",
    "DahlquistProblem",
    "PROBLEMS",
    "diffusive_cfl",
    "make_problem",
]

"""API for `isdc.core.multigrid`."""
from .report import ConvergenceError, SolveReport
from .abc import FULL_SOLVE_CAP, FULL_SOLVE_TOL, SolverABC
from .smoothers import AUTO, JACOBI, MULTICOLOR, SmootherConfig, select_smoother
from .transfer import prolong, restrict
from .hierarchy import COARSEST_THRESHOLD, Level, MgHierarchy, build_hierarchy
from .direct import DirectSolver

__all__ = [
    "ConvergenceError",
    "SolveReport",
    "FULL_SOLVE_CAP",
    "FULL_SOLVE_TOL",
    "SolverABC",
    "AUTO",
    "JACOBI",
    "MULTICOLOR",
    "SmootherConfig",
    "select_smoother",
    "prolong",
    "restrict",
    "COARSEST_THRESHOLD",
    "Level",
    "MgHierarchy",
    "build_hierarchy",
    "DirectSolver",
]

"""API for `isdc.core.sweeper`."""
from .config import (
    GUESS_POLICIES,
    GUESS_PREVIOUS_NODE,
    GUESS_PREVIOUS_SWEEP,
    GUESS_ZERO,
    ISDC_FIXED,
    MODES,
    RESIDUAL_FORMS,
    RESIDUAL_UNWEIGHTED,
    RESIDUAL_WEIGHTED,
    SDC_EXACT,
    SweepConfig,
)
from .state import SweepState
from .stats import RunStats
from .sweeper import initialize, integrate, residual, run_step, sweep, terminal_value

__all__ = [
    "GUESS_POLICIES",
    "GUESS_PREVIOUS_NODE",
    "GUESS_PREVIOUS_SWEEP",
    "GUESS_ZERO",
    "ISDC_FIXED",
    "MODES",
    "RESIDUAL_FORMS",
    "RESIDUAL_UNWEIGHTED",
    "RESIDUAL_WEIGHTED",
    "SDC_EXACT",
    "SweepConfig",
    "SweepState",
    "RunStats",
    "initialize",
    "integrate",
    "residual",
    "run_step",
    "sweep",
    "terminal_value",
]

"""Published accumulated V-cycle and sweep counts of the benchmark matrix."""
from isdc.core.sweeper import ISDC_FIXED, SDC_EXACT

from .spec import ExperimentSpec

# (problem, nu, M) -> {mode: (cycles, sweeps)}
PUBLISHED_TABLE = {
    ("heat", 1.0, 3): {SDC_EXACT: (16, 4), ISDC_FIXED: (12, 4)},
    ("heat", 1.0, 5): {SDC_EXACT: (23, 3), ISDC_FIXED: (20, 3)},
    ("heat", 1.0, 7): {SDC_EXACT: (32, 3), ISDC_FIXED: (28, 3)},
    ("heat", 10.0, 3): {SDC_EXACT: (36, 5), ISDC_FIXED: (20, 5)},
    ("heat", 10.0, 5): {SDC_EXACT: (61, 5), ISDC_FIXED: (40, 5)},
    ("heat", 10.0, 7): {SDC_EXACT: (79, 4), ISDC_FIXED: (47, 4)},
    ("heat", 100.0, 3): {SDC_EXACT: (106, 13), ISDC_FIXED: (52, 13)},
    ("heat", 100.0, 5): {SDC_EXACT: (150, 10), ISDC_FIXED: (104, 13)},
    ("heat", 100.0, 7): {SDC_EXACT: (187, 9), ISDC_FIXED: (167, 14)},
    ("burgers", 0.1, 3): {SDC_EXACT: (21, 8), ISDC_FIXED: (21, 8)},
    ("burgers", 0.1, 5): {SDC_EXACT: (26, 6), ISDC_FIXED: (26, 6)},
    ("burgers", 0.1, 7): {SDC_EXACT: (33, 5), ISDC_FIXED: (33, 5)},
    ("burgers", 1.0, 3): {SDC_EXACT: (97, 17), ISDC_FIXED: (66, 17)},
    ("burgers", 1.0, 5): {SDC_EXACT: (140, 17), ISDC_FIXED: (117, 17)},
    ("burgers", 1.0, 7): {SDC_EXACT: (160, 15), ISDC_FIXED: (143, 15)},
    ("burgers", 10.0, 3): {SDC_EXACT: (207, 25), ISDC_FIXED: (100, 25)},
    ("burgers", 10.0, 5): {SDC_EXACT: (523, 38), ISDC_FIXED: (298, 38)},
    ("burgers", 10.0, 7): {SDC_EXACT: (902, 50), ISDC_FIXED: (578, 50)},
}

PUBLISHED_NUS = {"heat": (1.0, 10.0, 100.0), "burgers": (0.1, 1.0, 10.0)}
PUBLISHED_NODES = (3, 5, 7)
PUBLISHED_NUM_CYCLES = 2


def lookup(problem, nu, num_nodes, mode):
    """Return the published counts of one run.

    Returns
    -------
    tuple [int, int] or tuple [None, None]
        The accumulated cycles and the sweeps, ``(None, None)`` if not published.
    """
    entry = PUBLISHED_TABLE.get((problem, float(nu), int(num_nodes)), {})
    return entry.get(mode, (None, None))


def published_matrix(problem, **overrides):
    """Return the specs of the published matrix of one problem.

    Parameters
    ----------
    problem : str
        ``'heat'``, ``'burgers'`` or ``'all'``.

    Other Parameters
    ----------------
    **overrides
        Settings applied to every spec.

    Returns
    -------
    list [isdc.experiments.ExperimentSpec]
        For every nu and M, the SDC run followed by the ISDC run with L=2.

    Raises
    ------
    ValueError
        If `problem` is unknown.
    """
    if problem == "all":
        return published_matrix("heat", **overrides) + published_matrix(
            "burgers", **overrides
        )
    if problem not in PUBLISHED_NUS:
        raise ValueError(
            f"Argument 'problem' must be one of heat, burgers, all, not '{problem}'."
        )
    return ExperimentSpec.expand(
        {
            **overrides,
            "problem": problem,
            "nu": list(PUBLISHED_NUS[problem]),
            "num_nodes": list(PUBLISHED_NODES),
            "mode": [SDC_EXACT, ISDC_FIXED],
            "num_cycles": PUBLISHED_NUM_CYCLES,
        }
    )

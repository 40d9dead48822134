"""API for `isdc.experiments`."""
from .abc import ProbExpABC, SolExpABC, SolRowsABC
from .ablation import ProbAblation, SolAblation, ablation_specs, run_ablation
from .config import parse_config, parse_value, read_config
from .matrix import ProbMatrix, SolMatrix, compute_savings, run_matrix
from .order import (
    REF_ANALYTIC,
    REF_SEMIDISCRETE,
    REFERENCES,
    ProbOrderStudy,
    SolOrderStudy,
    run_order_study,
)
from .reference import (
    PUBLISHED_NODES,
    PUBLISHED_NUM_CYCLES,
    PUBLISHED_NUS,
    PUBLISHED_TABLE,
    lookup,
    published_matrix,
)
from .row import CSV_FIELDS, SCHEMA_VERSION, ResultRow
from .runner import METHOD_MUL, METHOD_SEQ, METHODS, RunRecord, run_spec, run_specs
from .spec import ExperimentSpec, pair_key
from .tables import (
    POINT_FIELDS,
    cycles_sweeps,
    format_csv,
    read_csv,
    render_order_table,
    render_table,
    write_csv,
    write_points_csv,
)

__all__ = [
    "ProbExpABC",
    "SolExpABC",
    "SolRowsABC",
    "ProbAblation",
    "SolAblation",
    "ablation_specs",
    "run_ablation",
    "parse_config",
    "parse_value",
    "read_config",
    "ProbMatrix",
    "SolMatrix",
    "compute_savings",
    "run_matrix",
    "REF_ANALYTIC",
    "REF_SEMIDISCRETE",
    "REFERENCES",
    "ProbOrderStudy",
    "SolOrderStudy",
    "run_order_study",
    "PUBLISHED_NODES",
    "PUBLISHED_NUM_CYCLES",
    "PUBLISHED_NUS",
    "PUBLISHED_TABLE",
    "lookup",
    "published_matrix",
    "CSV_FIELDS",
    "SCHEMA_VERSION",
    "ResultRow",
    "METHOD_MUL",
    "METHOD_SEQ",
    "METHODS",
    "RunRecord",
    "run_spec",
    "run_specs",
    "ExperimentSpec",
    "pair_key",
    "POINT_FIELDS",
    "cycles_sweeps",
    "format_csv",
    "read_csv",
    "render_order_table",
    "render_table",
    "write_csv",
    "write_points_csv",
]

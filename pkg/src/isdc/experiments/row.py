"""Implement the `ResultRow` class and its CSV schema."""
from .reference import lookup
from .spec import FIELDS, ExperimentSpec, _coerce, pair_key

SCHEMA_VERSION = 1

SPEC_FIELDS = [key for key in FIELDS if key != "out"]
RESULT_FIELDS = [
    "sweeps",
    "inner_cycles",
    "w_cycles",
    "savings_pct",
    "final_residual",
    "converged",
    "wall_time",
    "published_cycles",
    "published_sweeps",
    "cycles_per_sweep",
    "error",
]
CSV_FIELDS = ["schema_version", "label"] + SPEC_FIELDS + RESULT_FIELDS

_RESULT_TYPES = {
    "sweeps": int,
    "inner_cycles": int,
    "w_cycles": int,
    "savings_pct": float,
    "final_residual": float,
    "converged": bool,
    "wall_time": float,
    "published_cycles": int,
    "published_sweeps": int,
    "cycles_per_sweep": str,
    "error": str,
}


class ResultRow(dict):
    """Store the outcome of one run together with the settings that produced it.

    Other Parameters
    ----------------
    **kwargs
        The values of `CSV_FIELDS`. Missing values are ``None``.
    """

    def __init__(self, **kwargs):
        super().__init__({key: kwargs.get(key, None) for key in CSV_FIELDS})
        self["schema_version"] = SCHEMA_VERSION

    @classmethod
    def _from_spec(cls, spec, wall_time):
        published_cycles, published_sweeps = lookup(
            spec["problem"], spec["nu"], spec["num_nodes"], spec["mode"]
        )
        if spec["num_cycles"] != 2 and spec.is_isdc:
            published_cycles, published_sweeps = None, None
        return cls(
            label=spec.label,
            wall_time=float(wall_time),
            published_cycles=published_cycles,
            published_sweeps=published_sweeps,
            **{key: spec[key] for key in SPEC_FIELDS},
        )

    @classmethod
    def from_run(cls, spec, stats, wall_time=0.0):
        """Build the row of a completed run.

        Parameters
        ----------
        spec : isdc.experiments.ExperimentSpec
            The settings of the run.
        stats : isdc.core.sweeper.RunStats
            The statistics of the run.
        wall_time : float, optional
            The wall time of the run [s].

        Returns
        -------
        ResultRow
            The row.
        """
        row = cls._from_spec(spec, wall_time)
        row.update(stats.to_row())
        return row

    @classmethod
    def from_error(cls, spec, error, wall_time=0.0):
        """Build the row of a run that raised `error`."""
        row = cls._from_spec(spec, wall_time)
        row["converged"] = False
        row["error"] = f"{type(error).__name__}: {error}"
        return row

    @classmethod
    def from_csv(cls, record):
        """Build a row from a CSV record of strings.

        Raises
        ------
        ValueError
            If the schema version is not supported.
        """
        version = int(record.get("schema_version") or 0)
        if version != SCHEMA_VERSION:
            raise ValueError(
                f"Unsupported result schema version {version}, "
                f"expected {SCHEMA_VERSION}."
            )
        values = {}
        for key in SPEC_FIELDS + RESULT_FIELDS:
            text = record.get(key, "")
            if text in ("", None):
                values[key] = None
                continue
            if key in _RESULT_TYPES:
                kind = _RESULT_TYPES[key]
                values[key] = (text == "True") if kind is bool else kind(text)
            else:
                values[key] = _coerce(key, text)
        values["label"] = record.get("label", "")
        return cls(**values)

    @property
    def spec(self):
        """Return the settings of the run.

        Returns
        -------
        isdc.experiments.ExperimentSpec
            The settings.
        """
        return ExperimentSpec(**{key: self[key] for key in SPEC_FIELDS})

    @property
    def pair_key(self):
        """Return the key pairing this row with its SDC or ISDC counterpart."""
        return pair_key(self)

    @property
    def failed(self):
        """Return ``True`` if the run raised an error."""
        return self["error"] is not None

    def to_csv(self):
        """Return the row as CSV strings, floats written with full precision."""
        out = {}
        for key in CSV_FIELDS:
            value = self[key]
            if value is None:
                out[key] = ""
            elif isinstance(value, float):
                out[key] = repr(value)
            else:
                out[key] = str(value)
        return out

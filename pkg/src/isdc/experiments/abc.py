"""Implement the `ProbExpABC` and `SolExpABC` classes."""
from abc import ABC, abstractmethod
import logging

from isdc.core.objects import ObjDir

from .runner import METHOD_MUL, METHOD_SEQ, RunRecord
from .tables import read_csv, write_csv

logger = logging.getLogger(__name__)


class ProbExpABC(dict, ABC):
    """A base class for any experiment.

    Experiments are defined as problem/solution pairs. The problem holds the settings
    and its `solve` method writes a solution directory.
    """

    METHOD_SEQ = METHOD_SEQ
    METHOD_MUL = METHOD_MUL

    @abstractmethod
    def solve(self, name, parent_path, **kwargs):
        """Run the experiment and build the solution object.

        Parameters
        ----------
        name : str
            The name of the solution.
        parent_path : str, byte or os.PathLike
            The path to the parent directory of the solution.

        Returns
        -------
        isdc.experiments.SolExpABC
            The solution.
        """

    @staticmethod
    def _save_records(sol, specs, outcomes):
        """Write one JSON record per run in the `records` sub-directory."""
        records_path = sol.records_path
        for i, (spec, (row, stats)) in enumerate(zip(specs, outcomes)):
            record = RunRecord(
                f"{sol.name}_{i:04d}", records_path, spec=spec, stats=stats, row=row
            )
            record.save()
        logger.info(f"Wrote {len(outcomes)} run records to '{records_path}'.")


class SolExpABC(ObjDir):
    """Store the result directory of an experiment.

    Parameters
    ----------
    name : str
        The name of the solution.
    parent_path : str, byte or os.PathLike
        The path to the parent directory of the solution.

    Other Parameters
    ----------------
    csv_path : str
        The path to the data file, relative to the solution directory.
    table_path : str
        The path to the rendered view, relative to the solution directory.
    """

    def __init__(self, name, parent_path, **kwargs):
        super().__init__(name, parent_path)
        self.update(
            {
                "csv_path": kwargs.get("csv_path", None),
                "table_path": kwargs.get("table_path", None),
            }
        )

    @property
    def csv_path(self):
        """Return the path to the data file, ``None`` if not written yet."""
        return self.get_file("csv_path")

    @property
    def table_path(self):
        """Return the path to the rendered view, ``None`` if not written yet."""
        return self.get_file("table_path")

    @property
    def records_path(self):
        """Return the path to the directory of the per-run records."""
        return self.path / "records"

    def get_table(self):
        """Return the rendered view.

        Raises
        ------
        FileNotFoundError
            If the view was not written.
        """
        return self.read_text("table_path")

    def get_records(self):
        """Return the per-run records, empty if they were not written.

        Returns
        -------
        list [isdc.experiments.RunRecord]
            The records, in run order.
        """
        return RunRecord.load_all(self.records_path)

    def _write_view(self, text):
        self.write_text("table_path", text)


class SolRowsABC(SolExpABC):
    """A base class for experiment results stored as result rows."""

    def get_rows(self):
        """Return the result rows.

        Returns
        -------
        list [isdc.experiments.ResultRow]
            The rows.
        """
        if self.csv_path is None:
            raise FileNotFoundError(f"Solution '{self.name}' holds no data file.")
        return read_csv(self.csv_path)

    def finalize(self, rows, text):
        """Write the data file, the rendered view and the JSON index.

        Parameters
        ----------
        rows : list [isdc.experiments.ResultRow]
            The rows.
        text : str
            The rendered view.
        """
        self.set_file("csv_path", write_csv(rows, self.path / f"{self.name}.csv"))
        self._write_view(text)
        self.save()
        logger.info(f"Solution '{self.name}' written to '{self.path}'.")

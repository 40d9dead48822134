"""Implement the `ObjFile` class."""
import logging
from pathlib import Path

from .abc import ObjABC

logger = logging.getLogger(__name__)


class ObjFile(ObjABC):
    """A record stored as a single ``<name>.json`` file.

    Records of the same kind are usually gathered in one directory, see `load_all`.
    """

    @property
    def path(self):
        return self.json_path

    @property
    def json_path(self):
        return self.parent_path / f"{self.name}.json"

    @classmethod
    def _split_json_path(cls, json_path):
        return json_path.stem, json_path.parent

    @classmethod
    def load_all(cls, parent_path):
        """Load every record of a directory, sorted by name.

        Parameters
        ----------
        parent_path : str, byte or os.PathLike
            The directory containing the records.

        Returns
        -------
        list [ObjFile]
            The records, empty if the directory does not exist.
        """
        parent_path = Path(parent_path)
        if not parent_path.is_dir():
            logger.warning(f"Directory '{parent_path}' does not exist.")
            return []
        return [cls.load(p) for p in sorted(parent_path.glob("*.json"))]

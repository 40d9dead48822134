"""Implement the `ObjDir` class."""
import logging
from pathlib import Path

from .abc import ObjABC

logger = logging.getLogger(__name__)


class ObjDir(ObjABC):
    """A result stored as a directory holding a JSON index and its data files.

    Data files are registered in the index under a key, with a path relative to the
    directory, so the whole directory can be moved or archived.

    Parameters
    ----------
    name : str
        The name of the object.
    parent_path : str, byte or os.PathLike
        The path to the parent directory of the object.
    """

    def __init__(self, name, parent_path):
        super().__init__(name, parent_path)
        self.path.mkdir(parents=True, exist_ok=True)

    @property
    def path(self):
        return self.parent_path / self.name

    @property
    def json_path(self):
        return self.path / f"{self.name}.json"

    @classmethod
    def _split_json_path(cls, json_path):
        return json_path.stem, json_path.parents[1]

    def get_relative_path(self, path):
        """Return the path of a file inside the object directory, relative to it.

        Raises
        ------
        ValueError
            If the file is outside of the object directory.
        """
        return str(Path(path).resolve().relative_to(self.path.resolve()))

    def set_file(self, key, path):
        """Register a data file of the directory under `key`.

        Parameters
        ----------
        key : str
            The key of the file in the index.
        path : str, byte or os.PathLike
            The path to the file, inside the object directory.
        """
        self[key] = self.get_relative_path(path)

    def get_file(self, key):
        """Return the absolute path of the data file registered under `key`.

        Returns
        -------
        pathlib.Path or None
            The path, ``None`` if nothing is registered under `key`.
        """
        if self.get(key, None) is None:
            return None
        return self.path / self[key]

    def write_text(self, key, text, suffix=".txt"):
        """Write `text` to ``<name><suffix>`` and register it under `key`.

        Returns
        -------
        pathlib.Path
            The path to the written file.
        """
        path = self.path / f"{self.name}{suffix}"
        with open(path, "w") as f:
            f.write(text)
        self.set_file(key, path)
        logger.debug(f"Wrote '{key}' of '{self.name}' to '{path}'.")
        return path

    def read_text(self, key):
        """Return the content of the text file registered under `key`.

        Raises
        ------
        FileNotFoundError
            If no file is registered under `key` or if it was removed.
        """
        path = self.get_file(key)
        if path is None or not path.exists():
            raise FileNotFoundError(f"'{self.name}' holds no '{key}' file.")
        with open(path, "r") as f:
            return f.read()

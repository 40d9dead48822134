"""Implement the `ObjABC` class."""
from abc import ABC, abstractclassmethod, abstractproperty
import json
import logging
from pathlib import Path

import numpy as np

logger = logging.getLogger(__name__)


class NumpyEncoder(json.JSONEncoder):
    """A JSON encoder aware of numpy scalars and arrays and of paths."""

    def default(self, obj):
        if isinstance(obj, np.integer):
            return int(obj)
        if isinstance(obj, np.floating):
            return float(obj)
        if isinstance(obj, np.bool_):
            return bool(obj)
        if isinstance(obj, np.ndarray):
            return obj.tolist()
        if isinstance(obj, Path):
            return str(obj)
        return super().default(obj)


class ObjABC(dict, ABC):
    """A base class for run records and experiment results stored as JSON.

    The content of the dictionary is the content of the JSON file. Subclasses accept
    every saved key as a keyword argument of their constructor so that `load` can
    rebuild them.

    Parameters
    ----------
    name : str
        The name of the object.
    parent_path : str, byte or os.PathLike
        The path to the parent directory of the object.

    Raises
    ------
    TypeError
        If argument `name` is not a `str`.
    """

    def __init__(self, name, parent_path):
        super().__init__()
        if not isinstance(name, str):
            raise TypeError(f"Argument 'name' expects type str, not {type(name)}.")
        self._name = name
        self._parent_path = Path(parent_path)

    @property
    def name(self):
        """str: The name of the object."""
        return self._name

    @property
    def parent_path(self):
        """pathlib.Path: The path to the parent directory of the object."""
        return self._parent_path

    @abstractproperty
    def path(self):
        """pathlib.Path: The path to the object."""

    @abstractproperty
    def json_path(self):
        """pathlib.Path: The path to the JSON file of the object."""

    @abstractclassmethod
    def _split_json_path(cls, json_path):
        """Return the name and the parent directory matching a JSON file."""

    def save(self, exist_ok=True):
        """Write the object to its JSON file.

        Numpy values are converted to plain JSON types.

        Parameters
        ----------
        exist_ok : bool, optional
            If set to ``False`` and the JSON file already exists, nothing is written.
            (The default is ``True``)

        Raises
        ------
        FileExistsError
            If `exist_ok` is set to ``False`` and the JSON file already exists.
        """
        if not exist_ok and self.json_path.exists():
            raise FileExistsError(
                f"File '{self.json_path}' already exists, set 'exist_ok' to overwrite."
            )
        self.json_path.parent.mkdir(parents=True, exist_ok=True)
        with open(self.json_path, "w") as f:
            json.dump(self, f, indent=4, sort_keys=True, cls=NumpyEncoder)
        logger.debug(f"Saved '{self.name}' to '{self.json_path}'.")

    @classmethod
    def load(cls, json_path):
        """Rebuild an object from its JSON file.

        Parameters
        ----------
        json_path : str, byte or os.PathLike
            The path to the JSON file.

        Returns
        -------
        ObjABC
            The object.

        Raises
        ------
        FileNotFoundError
            If the JSON file does not exist.
        ValueError
            If `json_path` does not end with ``.json``.
        """
        json_path = Path(json_path)
        if json_path.suffix != ".json":
            raise ValueError(f"Path '{json_path}' does not point to a JSON file.")
        if not json_path.exists():
            raise FileNotFoundError(f"File '{json_path}' does not exist.")
        with open(json_path, "r") as f:
            data = json.load(f)
        return cls(*cls._split_json_path(json_path), **data)

"""Export and load field snapshots for plotting scripts."""
import logging
from pathlib import Path

import h5py
import numpy as np

from .grid import Field2D, Grid2D

logger = logging.getLogger(__name__)

FMT_CSV = "csv"
FMT_BIN = "bin"
FMT_HDF5 = "hdf5"
FORMATS = (FMT_CSV, FMT_BIN, FMT_HDF5)

_SUFFIXES = {".csv": FMT_CSV, ".bin": FMT_BIN, ".h5": FMT_HDF5, ".hdf5": FMT_HDF5}


def _guess_format(path, fmt):
    if fmt is None:
        fmt = _SUFFIXES.get(path.suffix.lower())
        if fmt is None:
            raise ValueError(
                f"Cannot infer the snapshot format from '{path.name}', pass 'fmt'."
            )
    if fmt not in FORMATS:
        raise ValueError(
            f"Argument 'fmt' must be one of {', '.join(FORMATS)}, not '{fmt}'."
        )
    return fmt


def _header(field, time):
    grid = field.grid
    return {
        "nx": grid.nx,
        "ny": grid.ny,
        "hx": grid.hx,
        "hy": grid.hy,
        "bc": grid.bc,
        "time": float(time),
        "domain": " ".join(repr(d) for d in grid.domain),
    }


def _header_path(path):
    return path.with_suffix(".hdr")


def _parse_header_lines(lines):
    header = {}
    for line in lines:
        key, _, value = line.partition("=")
        header[key.strip()] = value.strip()
    return header


def export_field(field, path, fmt=None, time=0.0):
    """Write a field snapshot to disk.

    Every format stores a header holding ``nx``, ``ny``, ``hx``, ``hy``, ``bc``,
    ``time`` and the domain.

    Parameters
    ----------
    field : isdc.core.spatial.Field2D
        The field.
    path : str, byte or os.PathLike
        The path to the snapshot file.
    fmt : str, optional
        ``'csv'`` (header lines prefixed by ``#``), ``'bin'`` (raw row-major float64 and
        a ``.hdr`` text header next to it) or ``'hdf5'`` (header stored as attributes).
        If set to ``None``, the format is inferred from the suffix of `path`.
    time : float, optional
        The time of the snapshot. (The default is ``0.0``)

    Returns
    -------
    pathlib.Path
        The path to the snapshot file.

    Raises
    ------
    ValueError
        If the format is unknown or cannot be inferred.
    """
    path = Path(path)
    fmt = _guess_format(path, fmt)
    header = _header(field, time)
    if fmt == FMT_CSV:
        np.savetxt(
            path,
            field.values,
            delimiter=",",
            header="\n".join(f"{k} = {v}" for k, v in header.items()),
            comments="# ",
        )
    elif fmt == FMT_BIN:
        field.values.astype("<f8").tofile(path)
        with open(_header_path(path), "w") as f:
            f.write("".join(f"{k} = {v}\n" for k, v in header.items()))
    else:
        with h5py.File(path, "w") as f:
            f.create_dataset("values", data=field.values)
            for key, value in header.items():
                f.attrs[key] = value
    logger.debug(f"Field snapshot written to '{path}'.")
    return path


def load_field(path, fmt=None):
    """Load a snapshot written by `export_field`.

    Parameters
    ----------
    path : str, byte or os.PathLike
        The path to the snapshot file.
    fmt : str, optional
        The format. If set to ``None``, it is inferred from the suffix of `path`.

    Returns
    -------
    isdc.core.spatial.Field2D
        The field.
    float
        The time of the snapshot.

    Raises
    ------
    FileNotFoundError
        If the snapshot or its header does not exist.
    """
    path = Path(path)
    fmt = _guess_format(path, fmt)
    if not path.exists():
        raise FileNotFoundError(f"Snapshot '{path}' does not exist.")
    if fmt == FMT_CSV:
        with open(path, "r") as f:
            lines = [line[2:] for line in f if line.startswith("# ")]
        header = _parse_header_lines(lines)
        values = np.loadtxt(path, delimiter=",", ndmin=2)
    elif fmt == FMT_BIN:
        header_path = _header_path(path)
        if not header_path.exists():
            raise FileNotFoundError(f"Snapshot header '{header_path}' does not exist.")
        with open(header_path, "r") as f:
            header = _parse_header_lines(f.read().splitlines())
        values = np.fromfile(path, dtype="<f8")
    else:
        with h5py.File(path, "r") as f:
            values = f["values"][()]
            header = {key: f.attrs[key] for key in f.attrs}
        header = {
            k: v.decode() if isinstance(v, bytes) else v for k, v in header.items()
        }
    domain = [float(d) for d in str(header["domain"]).split()]
    grid = Grid2D(
        int(header["nx"]), int(header["ny"]), domain, str(header["bc"])
    )
    return Field2D(grid, values), float(header["time"])

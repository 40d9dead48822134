"""Read ``key = value`` experiment configuration files."""
import logging
from pathlib import Path

import yaml

logger = logging.getLogger(__name__)


def parse_value(text):
    """Parse one configuration value with the YAML scalar and flow rules.

    Parameters
    ----------
    text : str
        The raw value.

    Returns
    -------
    Any
        The typed value: a number, a boolean, a string, ``None`` or a list.

    Raises
    ------
    ValueError
        If the value is not valid YAML.
    """
    try:
        return yaml.safe_load(text)
    except yaml.YAMLError as e:
        raise ValueError(f"Cannot parse value '{text}': {e}.") from e


def parse_config(text, source="<string>"):
    """Parse the content of a configuration file.

    Each non-empty line holds ``key = value``. Text after ``#`` is a comment. Dashes in
    keys are read as underscores.

    Parameters
    ----------
    text : str
        The content.
    source : str, optional
        The name of the source used in error messages.

    Returns
    -------
    dict [str, Any]
        The parsed values in file order.

    Raises
    ------
    ValueError
        If a line is malformed or a key is repeated.
    """
    config = {}
    for num, line in enumerate(text.splitlines(), start=1):
        line = line.split("#", 1)[0].strip()
        if not line:
            continue
        key, sep, value = line.partition("=")
        key = key.strip().replace("-", "_")
        if not sep or not key:
            raise ValueError(f"{source}:{num}: expected 'key = value', got '{line}'.")
        if key in config:
            raise ValueError(f"{source}:{num}: key '{key}' is repeated.")
        config[key] = parse_value(value.strip())
    return config


def read_config(path):
    """Read a configuration file.

    Parameters
    ----------
    path : str, byte or os.PathLike
        The path to the file.

    Returns
    -------
    dict [str, Any]
        The parsed values.

    Raises
    ------
    FileNotFoundError
        If the file does not exist.
    ValueError
        If the file is malformed.
    """
    path = Path(path)
    if not path.is_file():
        raise FileNotFoundError(f"Configuration file '{path}' does not exist.")
    with open(path, "r") as f:
        config = parse_config(f.read(), source=str(path))
    logger.info(f"Read {len(config)} settings from '{path}'.")
    return config

"""Report the environment of a benchmark run."""
from importlib import metadata
import os
import platform

import click
import numpy as np
import yaml

PACKAGES = ["isdc", "numpy", "scipy", "click", "pyyaml", "jinja2", "h5py"]


def _get_os_info():
    info = os.uname()
    return {
        "os": info.sysname,
        "release": info.release,
        "version": info.version,
        "architecture": info.machine,
    }


def _get_python_info():
    return {
        "implementation": platform.python_implementation(),
        "version": platform.python_version(),
        "cpu-count": os.cpu_count(),
    }


def _get_pip_info(packages=PACKAGES):
    info = {}
    for package in packages:
        try:
            info[package] = metadata.version(package)
        except metadata.PackageNotFoundError:
            info[package] = None
    return info


def _get_blas_info():
    config = getattr(np, "show_config", None)
    if config is None:
        return None
    try:
        return {
            k: v.get("name")
            for k, v in config(mode="dicts")["Build Dependencies"].items()
        }
    except (TypeError, KeyError, AttributeError):
        return None


def get_report():
    """Return the environment report.

    Returns
    -------
    dict [str, dict]
        The operating system, the interpreter, the linear algebra backend and the
        versions of the packages in use.
    """
    return {
        "os": _get_os_info(),
        "python": _get_python_info(),
        "blas": _get_blas_info(),
        "packages": _get_pip_info(),
    }


@click.command()
def main():
    """Print the environment report as YAML."""
    click.echo(yaml.dump(get_report()))

"""API for `isdc.cli`."""
from .main import cli
from .report import get_report

__all__ = ["cli", "get_report"]

"""API for `isdc.utils.logging`."""
from contextlib import contextmanager
import logging
import sys
import time

LOG_FORMAT = "[%(levelname)s] %(message)s"


def configure_logger(level=logging.INFO, stream=None, fmt=LOG_FORMAT):
    """Attach a stream handler to the package logger.

    The library itself never installs handlers. Command line entry points and scripts
    call this function once.

    Parameters
    ----------
    level : int, optional
        The logging level. (The default is ``logging.INFO``)
    stream : io.TextIOBase, optional
        The stream to write to. If set to ``None``, `sys.stderr` is used. (The default
        is ``None``)
    fmt : str, optional
        The format of the messages. (The default is ``"[%(levelname)s] %(message)s"``)

    Returns
    -------
    logging.Logger
        The configured package logger.
    """
    logger = logging.getLogger("isdc")
    for handler in list(logger.handlers):
        if getattr(handler, "_isdc_handler", False):
            logger.removeHandler(handler)
    handler = logging.StreamHandler(sys.stderr if stream is None else stream)
    handler.setFormatter(logging.Formatter(fmt))
    handler._isdc_handler = True
    logger.addHandler(handler)
    logger.setLevel(level)
    return logger


class Timer(object):
    """Store the wall time spent in a `log_duration` block."""

    def __init__(self):
        self.start = time.perf_counter()
        self.elapsed = 0.0

    def stop(self):
        """Freeze the elapsed time and return it.

        Returns
        -------
        float
            The elapsed wall time [s].
        """
        self.elapsed = time.perf_counter() - self.start
        return self.elapsed


@contextmanager
def log_duration(logger=None, label="", log_level=logging.DEBUG):
    """A context manager measuring and logging the wall time of its block.

    Parameters
    ----------
    logger : logging.Logger, optional
        The logger to report to. If set to ``None``, the module logger is used.
    label : str, optional
        A short description of the timed block.
    log_level : int, optional
        The logging level of the report. (The default is ``logging.DEBUG``)

    Yields
    ------
    Timer
        The timer; its `elapsed` attribute is set when the block exits.
    """
    logger = logging.getLogger(__name__) if logger is None else logger
    timer = Timer()
    try:
        yield timer
    finally:
        timer.stop()
        logger.log(log_level, f"{label} took {timer.elapsed:.3f} s.")

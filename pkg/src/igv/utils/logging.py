"""Logging setup for command-line runs.

One stderr handler shows warnings and errors. When a run workspace exists a
second handler writes ``<run>/logs/run.log`` at the configured level. Every
record carries the run id.
"""

from __future__ import annotations

import logging
import sys
from pathlib import Path

ROOT_LOGGER_NAME = "igv"
LOG_FORMAT = "%(asctime)s [%(run_id)s] %(levelname)s %(name)s: %(message)s"
CONSOLE_FORMAT = "%(levelname)s: %(message)s"

_HANDLER_MARK = "_igv_handler"


class RunIdFilter(logging.Filter):
    def __init__(self, run_id: str) -> None:
        super().__init__()
        self.run_id = run_id

    def filter(self, record: logging.LogRecord) -> bool:
        record.run_id = self.run_id
        return True


def _mark(handler: logging.Handler) -> logging.Handler:
    setattr(handler, _HANDLER_MARK, True)
    return handler


def reset_logging() -> None:
    """Remove the handlers installed by ``configure_logging`` and propagate to the root again."""

    logger = logging.getLogger(ROOT_LOGGER_NAME)
    logger.propagate = True
    for handler in list(logger.handlers):
        if getattr(handler, _HANDLER_MARK, False):
            logger.removeHandler(handler)
            handler.close()


def configure_logging(
    log_file: Path | None = None, *, level: str = "INFO", run_id: str = "-"
) -> logging.Logger:
    """Install the console and run-log handlers on the ``igv`` logger.

    Calling it again replaces the previous handlers instead of adding more.
    """

    reset_logging()
    logger = logging.getLogger(ROOT_LOGGER_NAME)
    numeric_level = logging.getLevelName(level.upper())
    if not isinstance(numeric_level, int):
        raise ValueError(f"unknown log level: {level!r}")
    logger.setLevel(numeric_level)
    logger.propagate = False
    run_filter = RunIdFilter(run_id)

    console = _mark(logging.StreamHandler(sys.stderr))
    console.setLevel(max(logging.WARNING, numeric_level))
    console.setFormatter(logging.Formatter(CONSOLE_FORMAT))
    console.addFilter(run_filter)
    logger.addHandler(console)

    if log_file is not None:
        log_file.parent.mkdir(parents=True, exist_ok=True)
        file_handler = _mark(logging.FileHandler(log_file, encoding="utf-8"))
        file_handler.setLevel(numeric_level)
        file_handler.setFormatter(logging.Formatter(LOG_FORMAT))
        file_handler.addFilter(run_filter)
        logger.addHandler(file_handler)
    return logger

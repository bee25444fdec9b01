"""Tests for the run logging setup."""

from __future__ import annotations

import logging
from pathlib import Path

import pytest

from igv.utils import configure_logging, reset_logging
from igv.utils.logging import ROOT_LOGGER_NAME


@pytest.fixture(autouse=True)
def _clean_logging():
    yield
    reset_logging()


def test_run_log_carries_run_id(tmp_path: Path) -> None:
    log_file = tmp_path / "logs" / "run.log"
    configure_logging(log_file, level="INFO", run_id="run-1")

    logging.getLogger("igv.census").info("counted %s systems", 64)
    logging.getLogger("igv.census").debug("hidden")
    reset_logging()

    text = log_file.read_text(encoding="utf-8")
    assert "[run-1] INFO igv.census: counted 64 systems" in text
    assert "hidden" not in text


def test_console_shows_warnings_only(capsys: pytest.CaptureFixture[str]) -> None:
    configure_logging(level="DEBUG")

    logging.getLogger("igv.values").info("quiet")
    logging.getLogger("igv.values").warning("loud")

    err = capsys.readouterr().err
    assert "WARNING: loud" in err
    assert "quiet" not in err


def test_configure_is_idempotent(tmp_path: Path) -> None:
    configure_logging(tmp_path / "a.log")
    configure_logging(tmp_path / "b.log")

    logger = logging.getLogger(ROOT_LOGGER_NAME)
    assert len(logger.handlers) == 2
    assert logger.propagate is False


def test_reset_restores_propagation() -> None:
    configure_logging()
    reset_logging()

    logger = logging.getLogger(ROOT_LOGGER_NAME)
    assert logger.handlers == []
    assert logger.propagate is True


def test_unknown_level_is_rejected() -> None:
    with pytest.raises(ValueError):
        configure_logging(level="LOUD")

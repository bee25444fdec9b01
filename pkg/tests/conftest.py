"""Test configuration for import path setup and shared fixtures."""

from __future__ import annotations

import sys
from pathlib import Path

import pytest

SRC_PATH = Path(__file__).resolve().parents[1] / "src"
sys.path.insert(0, str(SRC_PATH))

FIXTURES_DIR = Path(__file__).resolve().parent / "fixtures"

from igv.backend.domain.models import IncompleteGame  # noqa: E402
from igv.backend.ingest import parse_game_file  # noqa: E402
from igv.backend.persistence import paths as paths_mod  # noqa: E402


@pytest.fixture()
def load_game():
    """Read a game from ``tests/fixtures`` by stem, exactly by default."""

    def _load(name: str, *, exact: bool = True) -> IncompleteGame:
        return parse_game_file(FIXTURES_DIR / f"{name}.game", exact=exact)

    return _load


@pytest.fixture()
def runtime_base(tmp_path: Path, monkeypatch: pytest.MonkeyPatch) -> Path:
    """Redirect the per-user data dir into a temp directory."""

    monkeypatch.setattr(paths_mod, "_resolve_user_data_base", lambda: tmp_path)
    return tmp_path

"""Run workspace layout.

Every recorded run gets its own directory under the per-user data root:
``<data>/IncompleteGameValues/runs/<run_id>/{data,logs,output}``. Paths are
resolved once per run and passed explicitly to the modules that write files.
"""

from __future__ import annotations

import os
import sys
from dataclasses import dataclass
from datetime import datetime, timezone
from itertools import count
from pathlib import Path

APP_DIR_NAME = "IncompleteGameValues"
RUNS_DIR_NAME = "runs"
RUN_SUBDIRS = ("data", "logs", "output")
DB_FILE_NAME = "run.sqlite"
LOG_FILE_NAME = "run.log"

# (environment variables tried in order, fallback under the home directory)
_DATA_ROOTS = {
    "nt": (("LOCALAPPDATA", "APPDATA"), ("AppData", "Local")),
    "darwin": ((), ("Library", "Application Support")),
    "posix": (("XDG_DATA_HOME",), (".local", "share")),
}


def _resolve_user_data_base() -> Path:
    platform = "nt" if os.name == "nt" else "darwin" if sys.platform == "darwin" else "posix"
    variables, fallback = _DATA_ROOTS[platform]
    for variable in variables:
        if value := os.environ.get(variable):
            return Path(value)
    return Path.home().joinpath(*fallback)


def get_runs_base_dir() -> Path:
    """Return (and create) the directory holding every run workspace."""

    runs_dir = _resolve_user_data_base() / APP_DIR_NAME / RUNS_DIR_NAME
    runs_dir.mkdir(parents=True, exist_ok=True)
    return runs_dir


def generate_run_id(suffix: str | None = None) -> str:
    """UTC timestamp run id, optionally followed by a label such as the command name."""

    timestamp = datetime.now(timezone.utc).strftime("%Y%m%d_%H%M%S_%fZ")
    if not suffix:
        return timestamp
    cleaned = suffix.strip().replace(" ", "-")
    if os.sep in cleaned or (os.altsep and os.altsep in cleaned):
        raise ValueError("Run suffix must not contain path separators.")
    return f"{timestamp}_{cleaned}"


def _reserve_run_dir(runs_base_dir: Path, run_id: str) -> tuple[str, Path]:
    # mkdir without exist_ok is the reservation; a clash moves on to run_id_02, _03, ...
    for attempt in count(1):
        candidate = run_id if attempt == 1 else f"{run_id}_{attempt:02d}"
        try:
            (runs_base_dir / candidate).mkdir(parents=True)
        except FileExistsError:
            continue
        return candidate, runs_base_dir / candidate
    raise AssertionError("unreachable")


@dataclass(frozen=True)
class RuntimePaths:
    run_id: str
    run_dir: Path
    data_dir: Path
    logs_dir: Path
    output_dir: Path

    @property
    def db_path(self) -> Path:
        return self.data_dir / DB_FILE_NAME

    @property
    def log_file(self) -> Path:
        return self.logs_dir / LOG_FILE_NAME

    @classmethod
    def create(cls, *, run_id: str | None = None, suffix: str | None = None) -> "RuntimePaths":
        """Create a fresh run directory with its subdirectories.

        A clashing run id gets a counter appended instead of reusing the
        existing directory.
        """

        if run_id and suffix:
            raise ValueError("Provide either run_id or suffix, not both.")
        resolved_run_id, run_dir = _reserve_run_dir(
            get_runs_base_dir(), run_id or generate_run_id(suffix)
        )
        subdirs = {name: run_dir / name for name in RUN_SUBDIRS}
        for path in subdirs.values():
            path.mkdir(parents=True, exist_ok=True)
        return cls(
            run_id=resolved_run_id,
            run_dir=run_dir,
            data_dir=subdirs["data"],
            logs_dir=subdirs["logs"],
            output_dir=subdirs["output"],
        )

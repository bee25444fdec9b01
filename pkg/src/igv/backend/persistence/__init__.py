"""Persistence subsystem.
- Cross-platform per-user run workspaces
- One SQLite database per run, schema-first and append-only
- Provenance: version, command line and seed of every run
"""

from .db import Database, RunMetadata
from .paths import RuntimePaths, generate_run_id, get_runs_base_dir

__all__ = [
    "Database",
    "RunMetadata",
    "RuntimePaths",
    "generate_run_id",
    "get_runs_base_dir",
]

"""Per-run SQLite record of what a run computed.

The database is created schema-first in WAL mode together with its metadata
row. Result tables only accept inserts; triggers abort updates and deletes.
"""

from __future__ import annotations

import sqlite3
from dataclasses import dataclass
from datetime import datetime, timezone
from pathlib import Path
from typing import TYPE_CHECKING, Iterable, Protocol

if TYPE_CHECKING:
    from igv.backend.axioms.models import AxiomReport
    from igv.backend.experiments.census import CensusRow
    from igv.backend.experiments.differences import DifferenceReport


class RuntimePathsLike(Protocol):
    run_id: str
    db_path: Path


@dataclass(frozen=True)
class RunMetadata:
    run_id: str
    app_version: str
    command_line: str
    seed: int | None = None
    created_at: str | None = None


APPEND_ONLY_TABLES = ("census_rows", "system_results", "axiom_reports")

SCHEMA_SQL = """
CREATE TABLE metadata (
    run_id TEXT PRIMARY KEY,
    created_at TEXT NOT NULL,
    app_version TEXT NOT NULL,
    command_line TEXT NOT NULL,
    seed INTEGER
);

CREATE TABLE census_rows (
    id INTEGER PRIMARY KEY AUTOINCREMENT,
    n INTEGER NOT NULL,
    total INTEGER NOT NULL,
    ic_count INTEGER NOT NULL,
    unique_nonic_count INTEGER NOT NULL,
    samples INTEGER,
    seed INTEGER
);

CREATE TABLE system_results (
    id INTEGER PRIMARY KEY AUTOINCREMENT,
    reference TEXT NOT NULL,
    system TEXT NOT NULL,
    series TEXT NOT NULL,
    games INTEGER NOT NULL,
    mean REAL NOT NULL,
    sd REAL NOT NULL
);

CREATE TABLE axiom_reports (
    id INTEGER PRIMARY KEY AUTOINCREMENT,
    axiom TEXT NOT NULL,
    value_kind TEXT NOT NULL,
    status TEXT NOT NULL,
    discrepancy REAL,
    note TEXT NOT NULL
);
""" + "".join(
    f"""
CREATE TRIGGER {table}_no_update
BEFORE UPDATE ON {table}
BEGIN
    SELECT RAISE(ABORT, '{table} is append-only');
END;

CREATE TRIGGER {table}_no_delete
BEFORE DELETE ON {table}
BEGIN
    SELECT RAISE(ABORT, '{table} is append-only');
END;
"""
    for table in APPEND_ONLY_TABLES
)


class Database:
    """Run-scoped database; every call opens its own connection."""

    def __init__(self, paths: RuntimePathsLike) -> None:
        self._db_path = paths.db_path
        self._run_id = paths.run_id

    @property
    def db_path(self) -> Path:
        return self._db_path

    def connect(self) -> sqlite3.Connection:
        return sqlite3.connect(self._db_path)

    def initialize(self, metadata: RunMetadata) -> None:
        """Create the schema and insert the metadata row in one transaction.

        Raises:
            FileExistsError: If the run database already exists.
        """

        if metadata.run_id != self._run_id:
            raise ValueError("Run metadata run_id must match runtime paths run_id.")
        if self._db_path.exists():
            raise FileExistsError(f"Run database already exists: {self._db_path}")

        conn = sqlite3.connect(self._db_path)
        try:
            result = conn.execute("PRAGMA journal_mode=WAL;").fetchone()
            if not result or str(result[0]).lower() != "wal":
                raise RuntimeError("Failed to enable SQLite WAL mode.")
            with conn:
                conn.executescript(SCHEMA_SQL)
                conn.execute(
                    "INSERT INTO metadata (run_id, created_at, app_version, command_line, seed) "
                    "VALUES (?, ?, ?, ?, ?);",
                    (
                        metadata.run_id,
                        metadata.created_at or _utc_now_iso(),
                        metadata.app_version,
                        metadata.command_line,
                        metadata.seed,
                    ),
                )
        finally:
            conn.close()

    def record_census(self, row: "CensusRow") -> None:
        with self.connect() as conn:
            conn.execute(
                "INSERT INTO census_rows (n, total, ic_count, unique_nonic_count, samples, seed) "
                "VALUES (?, ?, ?, ?, ?, ?);",
                (row.n, row.total, row.ic_count, row.unique_nonic_count, row.samples, row.seed),
            )

    def record_differences(self, report: "DifferenceReport") -> None:
        payload = [
            (
                report.reference,
                str(result.system),
                series,
                result.games,
                result.means[series],
                result.sds[series],
            )
            for result in report.results
            for series in report.series
        ]
        with self.connect() as conn:
            conn.executemany(
                "INSERT INTO system_results (reference, system, series, games, mean, sd) "
                "VALUES (?, ?, ?, ?, ?, ?);",
                payload,
            )

    def record_axiom_reports(self, reports: Iterable["AxiomReport"]) -> None:
        payload = [
            (
                report.axiom.value,
                report.kind.value,
                report.status.value,
                None if report.discrepancy is None else float(report.discrepancy),
                report.note,
            )
            for report in reports
        ]
        with self.connect() as conn:
            conn.executemany(
                "INSERT INTO axiom_reports (axiom, value_kind, status, discrepancy, note) "
                "VALUES (?, ?, ?, ?, ?);",
                payload,
            )


def _utc_now_iso() -> str:
    return datetime.now(timezone.utc).isoformat(timespec="seconds").replace("+00:00", "Z")

"""CSV report writers.

Every file starts with ``# `` comment lines naming the tool version, the full
command line and the seed, followed by one header row and the data rows.
Floats carry 12 significant digits.
"""

from __future__ import annotations

import csv
import io
from pathlib import Path
from typing import Iterable, Sequence, TextIO

from igv.backend.axioms.models import AxiomReport
from igv.backend.domain.models import IncompleteGame
from igv.backend.domain.numeric import Scalar, format_scalar
from igv.backend.experiments.census import CensusRow
from igv.backend.experiments.differences import DifferenceReport
from igv.backend.experiments.summary import HistogramBin, RankTable

CENSUS_COLUMNS = (
    "n",
    "total",
    "ic_count",
    "ic_prop",
    "unique_nonic_count",
    "unique_nonic_prop",
    "samples",
    "seed",
    "ic_stderr",
    "unique_stderr",
)
RANK_COLUMNS = ("series", "rank_1", "rank_2", "rank_3", "tied_systems")
HISTOGRAM_COLUMNS = ("series", "bin_low", "bin_high", "count", "clipped")
AXIOM_COLUMNS = ("axiom", "value_kind", "status", "witness", "discrepancy")


def output_header(version: str, command_line: str, seed: int | None) -> list[str]:
    return [
        f"igv {version}",
        f"command: {command_line}",
        f"seed: {'' if seed is None else seed}",
    ]


def _number(value: Scalar | None) -> str:
    if value is None:
        return ""
    if isinstance(value, int) and not isinstance(value, bool):
        return str(value)
    return format_scalar(value)


def _write(
    target: Path | str | TextIO,
    header: Sequence[str],
    columns: Sequence[str],
    rows: Iterable[Sequence[object]],
) -> None:
    buffer = io.StringIO()
    for line in header:
        buffer.write(f"# {line}\n")
    writer = csv.writer(buffer, lineterminator="\n")
    writer.writerow(columns)
    writer.writerows(rows)
    if isinstance(target, (str, Path)):
        Path(target).write_text(buffer.getvalue(), encoding="utf-8")
    else:
        target.write(buffer.getvalue())


def differences_columns(report: DifferenceReport) -> list[str]:
    columns = ["system", "games"]
    for series in report.series:
        columns.extend((f"mean_{series}", f"sd_{series}"))
    return columns


def write_census_csv(
    rows: Sequence[CensusRow], target: Path | str | TextIO, *, header: Sequence[str] = ()
) -> None:
    _write(
        target,
        header,
        CENSUS_COLUMNS,
        (
            (
                row.n,
                row.total,
                row.ic_count,
                _number(row.ic_prop),
                row.unique_nonic_count,
                _number(row.unique_nonic_prop),
                _number(row.samples),
                _number(row.seed),
                _number(row.ic_stderr),
                _number(row.unique_stderr),
            )
            for row in rows
        ),
    )


def write_differences_csv(
    report: DifferenceReport, target: Path | str | TextIO, *, header: Sequence[str] = ()
) -> None:
    def cells(result) -> list[object]:
        row: list[object] = [result.system, result.games]
        for series in report.series:
            row.extend((_number(result.means[series]), _number(result.sds[series])))
        return row

    _write(target, header, differences_columns(report), (cells(r) for r in report.results))


def write_rank_csv(
    table: RankTable, target: Path | str | TextIO, *, header: Sequence[str] = ()
) -> None:
    _write(
        target,
        header,
        RANK_COLUMNS,
        ((row.series, *row.counts, table.tied_systems) for row in table.rows),
    )


def write_histogram_csv(
    bins: Sequence[HistogramBin], target: Path | str | TextIO, *, header: Sequence[str] = ()
) -> None:
    _write(
        target,
        header,
        HISTOGRAM_COLUMNS,
        (
            (item.series, _number(item.low), _number(item.high), item.count, item.clipped)
            for item in bins
        ),
    )


def _echo_game(game: IncompleteGame) -> str:
    known = ";".join(
        f"{mask}:{format_scalar(game.worth[mask], exact=True)}"
        for mask in game.system.coalitions[1:]
    )
    return f"players={game.n};{known}"


def describe_witness(report: AxiomReport) -> str:
    witness = report.witness
    if witness is None:
        return report.note
    parts = [_echo_game(game) for game in witness.games]
    if witness.coalitions:
        parts.append("coalitions=" + ",".join(str(mask) for mask in witness.coalitions))
    if witness.players:
        parts.append("players=" + ",".join(str(p) for p in witness.players))
    return " | ".join(parts)


def write_axiom_csv(
    reports: Sequence[AxiomReport], target: Path | str | TextIO, *, header: Sequence[str] = ()
) -> None:
    _write(
        target,
        header,
        AXIOM_COLUMNS,
        (
            (
                report.axiom.value,
                report.kind.value,
                report.status.value,
                describe_witness(report),
                _number(report.discrepancy),
            )
            for report in reports
        ),
    )


def read_csv_table(path: Path | str) -> tuple[list[str], list[dict[str, str]]]:
    """Column names and rows of a report written by this module; comments skipped."""

    text = Path(path).read_text(encoding="utf-8")
    content = [line for line in text.splitlines() if line and not line.startswith("#")]
    if not content:
        return [], []
    reader = csv.DictReader(content)
    rows = list(reader)
    return list(reader.fieldnames or []), rows

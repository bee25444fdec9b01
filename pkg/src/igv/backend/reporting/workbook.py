"""Excel export of census and experiment tables."""

from __future__ import annotations

from pathlib import Path
from typing import Sequence

from openpyxl import Workbook

from igv.backend.experiments.census import CensusRow
from igv.backend.experiments.differences import DifferenceReport
from igv.backend.experiments.summary import HistogramBin, RankTable

from .csv_report import CENSUS_COLUMNS, HISTOGRAM_COLUMNS, RANK_COLUMNS, differences_columns


def _census_cells(row: CensusRow) -> list[object]:
    return [
        row.n,
        row.total,
        row.ic_count,
        row.ic_prop,
        row.unique_nonic_count,
        row.unique_nonic_prop,
        row.samples,
        row.seed,
        row.ic_stderr,
        row.unique_stderr,
    ]


def write_workbook(
    path: Path | str,
    *,
    header: Sequence[str],
    census: Sequence[CensusRow] = (),
    report: DifferenceReport | None = None,
    ranks: RankTable | None = None,
    bins: Sequence[HistogramBin] = (),
) -> Path:
    """One sheet per table, plus a ``run`` sheet with the provenance lines."""

    workbook = Workbook()
    run_sheet = workbook.active
    run_sheet.title = "run"
    for line in header:
        run_sheet.append([line])

    if census:
        sheet = workbook.create_sheet("census")
        sheet.append(list(CENSUS_COLUMNS))
        for row in census:
            sheet.append(_census_cells(row))

    if report is not None:
        sheet = workbook.create_sheet("systems")
        sheet.append(differences_columns(report))
        for result in report.results:
            cells: list[object] = [str(result.system), result.games]
            for series in report.series:
                cells.extend((result.means[series], result.sds[series]))
            sheet.append(cells)

    if ranks is not None:
        sheet = workbook.create_sheet("ranks")
        sheet.append(list(RANK_COLUMNS))
        for row in ranks.rows:
            sheet.append([row.series, *row.counts, ranks.tied_systems])

    if bins:
        sheet = workbook.create_sheet("histogram")
        sheet.append(list(HISTOGRAM_COLUMNS))
        for item in bins:
            sheet.append([item.series, item.low, item.high, item.count, item.clipped])

    target = Path(path)
    workbook.save(target)
    return target

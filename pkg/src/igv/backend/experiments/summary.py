from __future__ import annotations

import logging
from dataclasses import dataclass
from typing import Literal

import numpy as np

from igv.backend.domain.errors import InputError

from .differences import DifferenceReport

logger = logging.getLogger(__name__)

SummaryKind = Literal["rank_frequency", "histogram"]

# means closer than this are treated as a tie
TIE_TOLERANCE = 1e-12

PAIRWISE_RANGE = (0.0, 1.2)
ED_RANGE = (0.5, 1.7)
DEFAULT_BIN_WIDTH = 0.1


@dataclass(frozen=True)
class RankRow:
    series: str
    counts: tuple[int, ...]


@dataclass(frozen=True)
class RankTable:
    """How often each series has the smallest, second or largest mean.

    Tied means share the better rank; ``tied_systems`` counts systems with
    at least one tie.
    """

    rows: tuple[RankRow, ...]
    tied_systems: int
    systems: int


@dataclass(frozen=True)
class HistogramBin:
    series: str
    low: float
    high: float
    count: int
    clipped: int


def _require_results(report: DifferenceReport) -> None:
    if not report.results:
        raise InputError("cannot summarize an empty report")


def rank_frequency(report: DifferenceReport) -> RankTable:
    """Tally the competition rank of every series in every system.

    Each series row sums to the number of systems. Rank columns do not: a
    tie puts both series on the better rank and leaves the next rank empty
    for that system, so a column can exceed or fall short of ``systems``.
    """

    _require_results(report)
    series = report.series
    counts = {name: [0] * len(series) for name in series}
    tied_systems = 0
    for result in report.results:
        means = [result.means[name] for name in series]
        tied = False
        for name, mean in zip(series, means):
            better = sum(1 for other in means if other < mean - TIE_TOLERANCE)
            equal = sum(1 for other in means if abs(other - mean) <= TIE_TOLERANCE)
            tied = tied or equal > 1
            counts[name][better] += 1
        tied_systems += tied
    return RankTable(
        rows=tuple(RankRow(name, tuple(counts[name])) for name in series),
        tied_systems=tied_systems,
        systems=len(report.results),
    )


def default_range(report: DifferenceReport) -> tuple[float, float]:
    return PAIRWISE_RANGE if report.reference == "pairwise" else ED_RANGE


def histogram(
    report: DifferenceReport,
    *,
    bin_width: float = DEFAULT_BIN_WIDTH,
    value_range: tuple[float, float] | None = None,
) -> list[HistogramBin]:
    """Bin the per-system means of every series.

    Means outside the range are counted in the nearest edge bin and reported
    in its ``clipped`` column.
    """

    _require_results(report)
    low, high = value_range or default_range(report)
    if bin_width <= 0 or high <= low:
        raise InputError(f"invalid histogram range [{low}, {high}] with width {bin_width}")
    bins = max(1, int(round((high - low) / bin_width)))
    edges = np.linspace(low, high, bins + 1)
    table = []
    for name in report.series:
        means = np.array([result.means[name] for result in report.results])
        below = int((means < low).sum())
        above = int((means > high).sum())
        if below or above:
            logger.info("Histogram %s: clipped %s below and %s above range", name, below, above)
        counts, _ = np.histogram(np.clip(means, low, high), bins=edges)
        for k, count in enumerate(counts):
            clipped = (below if k == 0 else 0) + (above if k == bins - 1 else 0)
            table.append(
                HistogramBin(name, float(edges[k]), float(edges[k + 1]), int(count), clipped)
            )
    return table


def summarize(
    report: DifferenceReport,
    kind: SummaryKind,
    *,
    bin_width: float = DEFAULT_BIN_WIDTH,
    value_range: tuple[float, float] | None = None,
) -> RankTable | list[HistogramBin]:
    if kind == "rank_frequency":
        return rank_frequency(report)
    if kind == "histogram":
        return histogram(report, bin_width=bin_width, value_range=value_range)
    raise InputError(f"unknown summary kind: {kind!r}")

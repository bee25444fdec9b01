"""Static SVG charts rendered from the toolkit's CSV reports.

Charts are assembled as text, one element per line, with fixed coordinate
precision so identical input gives byte-identical files.
"""

from __future__ import annotations

import logging
from html import escape
from pathlib import Path
from typing import Literal, Mapping, Sequence

from igv.backend.domain.errors import GameError

from .csv_report import HISTOGRAM_COLUMNS, RANK_COLUMNS, read_csv_table

logger = logging.getLogger(__name__)

PlotKind = Literal["lines", "ranks", "hist"]

WIDTH = 800
HEIGHT = 420
MARGIN_LEFT = 64
MARGIN_RIGHT = 150
MARGIN_TOP = 36
MARGIN_BOTTOM = 56
PALETTE = ("#1f77b4", "#d62728", "#2ca02c", "#9467bd", "#ff7f0e", "#8c564b")


class PlotError(GameError):
    """CSV input cannot be drawn as the requested chart."""

    default_code = "plot_input"


def _fmt(value: float) -> str:
    return f"{value:.2f}"


def _require(columns: Sequence[str], required: Sequence[str]) -> None:
    for column in required:
        if column not in columns:
            raise PlotError(f"missing column '{column}'")


def _float(row: Mapping[str, str], column: str) -> float:
    text = row.get(column, "")
    try:
        return float(text)
    except ValueError as exc:
        raise PlotError(f"column '{column}' holds a non-numeric value {text!r}") from exc


class _Canvas:
    def __init__(self, title: str, y_max: float, y_label: str) -> None:
        self.y_max = y_max if y_max > 0 else 1.0
        self.plot_w = WIDTH - MARGIN_LEFT - MARGIN_RIGHT
        self.plot_h = HEIGHT - MARGIN_TOP - MARGIN_BOTTOM
        self.lines = [
            f'<svg xmlns="http://www.w3.org/2000/svg" width="{WIDTH}" height="{HEIGHT}" '
            f'viewBox="0 0 {WIDTH} {HEIGHT}" font-family="sans-serif" font-size="11">',
            f'<rect width="{WIDTH}" height="{HEIGHT}" fill="white"/>',
            f'<text x="{WIDTH / 2:.2f}" y="20" text-anchor="middle" font-size="14">{escape(title)}</text>',
        ]
        self._axes(y_label)

    def y(self, value: float) -> float:
        return MARGIN_TOP + self.plot_h * (1 - value / self.y_max)

    def _axes(self, y_label: str) -> None:
        bottom = MARGIN_TOP + self.plot_h
        right = MARGIN_LEFT + self.plot_w
        self.lines.append(
            f'<line x1="{MARGIN_LEFT}" y1="{bottom}" x2="{right}" y2="{bottom}" stroke="black"/>'
        )
        self.lines.append(
            f'<line x1="{MARGIN_LEFT}" y1="{MARGIN_TOP}" x2="{MARGIN_LEFT}" y2="{bottom}" stroke="black"/>'
        )
        for step in range(5):
            value = self.y_max * step / 4
            y = self.y(value)
            self.lines.append(
                f'<text x="{MARGIN_LEFT - 6}" y="{_fmt(y + 4)}" text-anchor="end">{value:.3g}</text>'
            )
        self.lines.append(
            f'<text x="16" y="{_fmt(MARGIN_TOP + self.plot_h / 2)}" text-anchor="middle" '
            f'transform="rotate(-90 16 {_fmt(MARGIN_TOP + self.plot_h / 2)})">{escape(y_label)}</text>'
        )

    def x_label(self, x: float, text: str) -> None:
        y = MARGIN_TOP + self.plot_h + 14
        self.lines.append(f'<text x="{_fmt(x)}" y="{y}" text-anchor="middle">{escape(text)}</text>')

    def legend(self, names: Sequence[str]) -> None:
        x = MARGIN_LEFT + self.plot_w + 16
        for k, name in enumerate(names):
            y = MARGIN_TOP + 18 * k
            color = PALETTE[k % len(PALETTE)]
            self.lines.append(f'<rect x="{x}" y="{y}" width="12" height="12" fill="{color}"/>')
            self.lines.append(f'<text x="{x + 18}" y="{y + 10}">{escape(name)}</text>')

    def render(self) -> str:
        return "\n".join([*self.lines, "</svg>"]) + "\n"


def render_lines(columns: Sequence[str], rows: Sequence[Mapping[str, str]]) -> str:
    """Per-system means with one-standard-deviation whiskers."""

    _require(columns, ("system",))
    series = [column[len("mean_"):] for column in columns if column.startswith("mean_")]
    if not series:
        raise PlotError("missing column 'mean_*'")
    _require(columns, [f"sd_{name}" for name in series])

    y_max = max(
        _float(row, f"mean_{name}") + _float(row, f"sd_{name}") for row in rows for name in series
    )
    canvas = _Canvas("Mean l1 distance per set system", y_max * 1.05, "mean distance")
    count = len(rows)

    def x_at(index: int) -> float:
        if count == 1:
            return MARGIN_LEFT + canvas.plot_w / 2
        return MARGIN_LEFT + canvas.plot_w * index / (count - 1)

    for k, name in enumerate(series):
        color = PALETTE[k % len(PALETTE)]
        points = []
        for index, row in enumerate(rows):
            mean = _float(row, f"mean_{name}")
            sd = _float(row, f"sd_{name}")
            x = x_at(index)
            points.append(f"{_fmt(x)},{_fmt(canvas.y(mean))}")
            canvas.lines.append(
                f'<line x1="{_fmt(x)}" y1="{_fmt(canvas.y(max(mean - sd, 0.0)))}" '
                f'x2="{_fmt(x)}" y2="{_fmt(canvas.y(mean + sd))}" stroke="{color}" stroke-opacity="0.4"/>'
            )
        canvas.lines.append(
            f'<polyline fill="none" stroke="{color}" stroke-width="1.5" points="{" ".join(points)}"/>'
        )
    tick_every = max(1, count // 10)
    for index in range(0, count, tick_every):
        canvas.x_label(x_at(index), rows[index]["system"])
    canvas.legend(series)
    return canvas.render()


def _grouped_bars(
    canvas: _Canvas, groups: Sequence[str], series: Sequence[str], heights: Sequence[Sequence[float]]
) -> None:
    group_w = canvas.plot_w / len(groups)
    bar_w = group_w * 0.8 / len(series)
    bottom = MARGIN_TOP + canvas.plot_h
    for g, group in enumerate(groups):
        left = MARGIN_LEFT + g * group_w + group_w * 0.1
        for s in range(len(series)):
            top = canvas.y(heights[s][g])
            canvas.lines.append(
                f'<rect x="{_fmt(left + s * bar_w)}" y="{_fmt(top)}" width="{_fmt(bar_w)}" '
                f'height="{_fmt(bottom - top)}" fill="{PALETTE[s % len(PALETTE)]}"/>'
            )
        canvas.x_label(left + group_w * 0.4, group)


def render_ranks(columns: Sequence[str], rows: Sequence[Mapping[str, str]]) -> str:
    """Grouped bars: for each rank, how many systems each series holds it in."""

    _require(columns, RANK_COLUMNS)
    ranks = [column for column in RANK_COLUMNS if column.startswith("rank_")]
    series = [row["series"] for row in rows]
    heights = [[_float(row, rank) for rank in ranks] for row in rows]
    y_max = max(max(h) for h in heights)
    canvas = _Canvas("Rank frequency of mean distances", y_max * 1.05, "systems")
    _grouped_bars(canvas, ["smallest", "second", "largest"], series, heights)
    canvas.legend(series)
    return canvas.render()


def render_hist(columns: Sequence[str], rows: Sequence[Mapping[str, str]]) -> str:
    """Grouped bars of per-system means binned by width."""

    _require(columns, HISTOGRAM_COLUMNS)
    series: list[str] = []
    bins: list[str] = []
    counts: dict[tuple[str, str], float] = {}
    for row in rows:
        name = row["series"]
        label = f"{_float(row, 'bin_low'):.1f}"
        if name not in series:
            series.append(name)
        if label not in bins:
            bins.append(label)
        counts[(name, label)] = _float(row, "count")
    heights = [[counts.get((name, label), 0.0) for label in bins] for name in series]
    y_max = max(max(h) for h in heights)
    canvas = _Canvas("Distribution of mean distances", y_max * 1.05, "systems")
    _grouped_bars(canvas, bins, series, heights)
    canvas.legend(series)
    return canvas.render()


RENDERERS = {"lines": render_lines, "ranks": render_ranks, "hist": render_hist}


def emit_plot(csv_path: Path | str, kind: PlotKind, svg_path: Path | str) -> Path:
    """Render ``csv_path`` as an SVG chart.

    Raises:
        PlotError: If the CSV is empty, lacks a required column or the kind is
            unknown. No file is written in that case.
    """

    renderer = RENDERERS.get(kind)
    if renderer is None:
        raise PlotError(f"unknown plot kind: {kind!r}")
    try:
        columns, rows = read_csv_table(csv_path)
    except OSError as exc:
        raise PlotError(f"cannot read {csv_path}: {exc}") from exc
    if not rows:
        raise PlotError(f"{csv_path} holds no data rows")
    document = renderer(columns, rows)
    target = Path(svg_path)
    target.write_text(document, encoding="utf-8")
    logger.info("Wrote %s chart with %s rows to %s", kind, len(rows), target)
    return target

"""Tests for CSV reports, SVG charts and the workbook export."""

from __future__ import annotations

import io
from pathlib import Path

import pytest
from openpyxl import load_workbook

from igv.backend.axioms import check_fairness
from igv.backend.experiments import (
    census_exhaustive,
    difference_experiment,
    histogram,
    ic_systems,
    rank_frequency,
)
from igv.backend.reporting import (
    PlotError,
    emit_plot,
    output_header,
    read_csv_table,
    write_axiom_csv,
    write_census_csv,
    write_differences_csv,
    write_histogram_csv,
    write_rank_csv,
    write_workbook,
)

HEADER = output_header("0.1.0", "igv census 3", 7)


@pytest.fixture(scope="module")
def report():
    return difference_experiment(ic_systems(3)[:5], 3, 1)


def test_output_header_lines() -> None:
    assert HEADER == ["igv 0.1.0", "command: igv census 3", "seed: 7"]
    assert output_header("0.1.0", "igv value", None)[-1] == "seed: "


def test_census_csv() -> None:
    buffer = io.StringIO()
    write_census_csv([census_exhaustive(3)], buffer, header=HEADER)
    lines = buffer.getvalue().splitlines()

    assert lines[:3] == ["# igv 0.1.0", "# command: igv census 3", "# seed: 7"]
    assert lines[3].startswith("n,total,ic_count,ic_prop,unique_nonic_count")
    assert lines[4] == "3,64,45,0.703125,0,0,,,,"


def test_differences_csv_reads_back(tmp_path: Path, report) -> None:
    path = tmp_path / "diff.csv"
    write_differences_csv(report, path, header=HEADER)
    columns, rows = read_csv_table(path)

    assert columns[:4] == ["system", "games", "mean_R_IC", "sd_R_IC"]
    assert columns[4:] == ["mean_R_UD", "sd_R_UD", "mean_UD_IC", "sd_UD_IC"]
    assert len(rows) == 5
    assert float(rows[0]["mean_R_UD"]) == pytest.approx(report.results[0].means["R_UD"])


def test_rank_and_histogram_csv(tmp_path: Path, report) -> None:
    write_rank_csv(rank_frequency(report), tmp_path / "ranks.csv")
    write_histogram_csv(histogram(report), tmp_path / "hist.csv")

    rank_columns, rank_rows = read_csv_table(tmp_path / "ranks.csv")
    assert rank_columns == ["series", "rank_1", "rank_2", "rank_3", "tied_systems"]
    assert [row["series"] for row in rank_rows] == ["R_IC", "R_UD", "UD_IC"]

    _, hist_rows = read_csv_table(tmp_path / "hist.csv")
    assert len(hist_rows) == 36
    assert sum(int(row["count"]) for row in hist_rows) == 15


def test_axiom_csv_echoes_witness(load_game) -> None:
    buffer = io.StringIO()
    write_axiom_csv([check_fairness("ud", load_game("example1"), 0b011)], buffer)
    lines = buffer.getvalue().splitlines()

    assert lines[0] == "axiom,value_kind,status,witness,discrepancy"
    assert lines[1] == (
        'fairness,ud,violated,"players=3;1:0;3:0;7:1 | coalitions=3 | players=1,2",0.166666666667'
    )


@pytest.mark.parametrize(("name", "kind"), [("diff", "lines"), ("ranks", "ranks"), ("hist", "hist")])
def test_emit_plot_writes_svg(tmp_path: Path, report, name: str, kind: str) -> None:
    write_differences_csv(report, tmp_path / "diff.csv")
    write_rank_csv(rank_frequency(report), tmp_path / "ranks.csv")
    write_histogram_csv(histogram(report), tmp_path / "hist.csv")

    target = emit_plot(tmp_path / f"{name}.csv", kind, tmp_path / f"{name}.svg")  # type: ignore[arg-type]
    text = target.read_text(encoding="utf-8")
    assert text.startswith("<svg")
    assert text.rstrip().endswith("</svg>")

    again = emit_plot(tmp_path / f"{name}.csv", kind, tmp_path / "again.svg")  # type: ignore[arg-type]
    assert again.read_text(encoding="utf-8") == text


def test_emit_plot_missing_column(tmp_path: Path) -> None:
    source = tmp_path / "bad.csv"
    source.write_text("series,rank_1\nR_IC,3\n", encoding="utf-8")
    target = tmp_path / "bad.svg"

    with pytest.raises(PlotError) as excinfo:
        emit_plot(source, "ranks", target)
    assert excinfo.value.code == "plot_input"
    assert not target.exists()


def test_emit_plot_empty_and_unknown(tmp_path: Path) -> None:
    source = tmp_path / "empty.csv"
    source.write_text("# igv 0.1.0\nsystem,games\n", encoding="utf-8")
    with pytest.raises(PlotError):
        emit_plot(source, "lines", tmp_path / "x.svg")
    with pytest.raises(PlotError):
        emit_plot(source, "pie", tmp_path / "x.svg")  # type: ignore[arg-type]
    with pytest.raises(PlotError):
        emit_plot(tmp_path / "missing.csv", "lines", tmp_path / "x.svg")
    assert not (tmp_path / "x.svg").exists()


def test_workbook_has_one_sheet_per_table(tmp_path: Path, report) -> None:
    path = write_workbook(
        tmp_path / "out.xlsx",
        header=HEADER,
        census=[census_exhaustive(3)],
        report=report,
        ranks=rank_frequency(report),
        bins=histogram(report),
    )
    workbook = load_workbook(path)
    try:
        assert workbook.sheetnames == ["run", "census", "systems", "ranks", "histogram"]
        assert workbook["run"]["A2"].value == "command: igv census 3"
        assert workbook["census"]["C2"].value == 45
        assert workbook["systems"].max_row == 6
    finally:
        workbook.close()

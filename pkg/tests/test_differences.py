"""Orderings of the value distances over every intersection-closed system at n=3."""

from __future__ import annotations

import pytest

from igv.backend.experiments import difference_experiment, ic_systems, rank_frequency


def _smallest_share(games: int) -> float:
    report = difference_experiment(ic_systems(3), games, 7, "pairwise")
    counts = {row.series: row.counts for row in rank_frequency(report).rows}
    return counts["R_UD"][0] / len(report)


def _ed_extremes(games: int) -> tuple[int, int, int]:
    report = difference_experiment(ic_systems(3), games, 7, "equal_division")
    closest = sum(
        1 for result in report.results if result.means["IC_ED"] <= min(result.means.values())
    )
    furthest = sum(
        1 for result in report.results if result.means["UD_ED"] >= max(result.means.values())
    )
    return closest, furthest, len(report)


def test_r_and_ud_are_usually_closest() -> None:
    assert _smallest_share(25) >= 0.7


@pytest.mark.slow
def test_r_and_ud_are_usually_closest_full() -> None:
    assert _smallest_share(100) >= 0.8


def test_ic_nearest_and_ud_furthest_from_equal_division() -> None:
    closest, furthest, systems = _ed_extremes(25)
    assert systems == 45
    assert closest >= 20
    assert furthest >= 20


@pytest.mark.slow
def test_ic_nearest_and_ud_furthest_from_equal_division_full() -> None:
    closest, furthest, systems = _ed_extremes(100)
    assert closest > systems / 2
    assert furthest > systems / 2

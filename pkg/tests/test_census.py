"""Tests for the set-system census."""

from __future__ import annotations

import math

import pytest

from igv.backend.domain.errors import ExhaustiveLimitError, InputError
from igv.backend.domain.models import SetSystem
from igv.backend.domain.setsys import is_intersection_closed
from igv.backend.domain.values import is_ud_unique, uniqueness_oracle
from igv.backend.experiments import census_exhaustive, census_sampled, symmetric_unique_family


@pytest.mark.parametrize(
    ("n", "total", "ic_count"),
    [(1, 1, 1), (2, 4, 4), (3, 64, 45)],
)
def test_exhaustive_census_small(n: int, total: int, ic_count: int) -> None:
    row = census_exhaustive(n)

    assert (row.total, row.ic_count, row.unique_nonic_count) == (total, ic_count, 0)
    assert not row.sampled
    assert row.family_matches is None


def test_exhaustive_census_n3_proportions() -> None:
    row = census_exhaustive(3)
    assert row.ic_prop == pytest.approx(45 / 64)
    assert row.unique_nonic_prop == 0


def test_exhaustive_census_is_independent_of_workers() -> None:
    assert census_exhaustive(3, workers=3) == census_exhaustive(3)


def test_exhaustive_census_rejects_large_n() -> None:
    with pytest.raises(ExhaustiveLimitError):
        census_exhaustive(5)


@pytest.mark.slow
def test_exhaustive_census_n4() -> None:
    row = census_exhaustive(4, workers=2)

    assert (row.total, row.ic_count, row.unique_nonic_count) == (16384, 2271, 15)
    assert row.family_matches is True


def test_symmetric_unique_family() -> None:
    family = symmetric_unique_family(4)

    assert len(family) == 15
    assert len({system.members for system in family}) == 15
    for system in family:
        assert system.has_grand
        assert not is_intersection_closed(system)
        assert is_ud_unique(system)


def test_symmetric_unique_family_needs_two_players() -> None:
    with pytest.raises(InputError):
        symmetric_unique_family(1)


def test_sampled_census_is_seeded() -> None:
    first = census_sampled(4, 200, 17)
    assert first == census_sampled(4, 200, 17)
    assert first.sampled and first.total == 200
    assert 0 <= first.ic_count <= 200
    assert first.ic_stderr is not None and first.ic_stderr >= 0


def test_sampled_census_is_independent_of_workers() -> None:
    assert census_sampled(4, 120, 3, workers=2) == census_sampled(4, 120, 3)


def test_sampled_census_rejects_zero_samples() -> None:
    with pytest.raises(InputError):
        census_sampled(4, 0, 1)


@pytest.mark.slow
def test_sampled_census_n5() -> None:
    row = census_sampled(5, 20_000, 5, workers=2)

    assert 5e-4 <= row.ic_prop <= 2.5e-3
    # sampled five-player systems almost never pin down a single Shapley image
    assert row.unique_nonic_prop < 0.01
    assert row.unique_stderr is not None
    for mask in row.witnesses:
        system = SetSystem(5, mask)
        assert not is_intersection_closed(system)
        assert uniqueness_oracle(system, mask)


def test_sampled_census_witnesses_are_unique_and_not_closed() -> None:
    row = census_sampled(4, 3_000, 8)
    for mask in row.witnesses:
        system = SetSystem(4, mask)
        assert not is_intersection_closed(system)
        assert is_ud_unique(system)


def test_sampled_census_stderr_is_binomial() -> None:
    row = census_sampled(3, 900, 21)
    p = row.ic_count / 900
    assert row.ic_stderr == pytest.approx(math.sqrt(p * (1 - p) / 900))


def test_sampled_census_stderr_shrinks_with_root_of_samples() -> None:
    small = census_sampled(3, 400, 2)
    large = census_sampled(3, 1_600, 2)

    assert small.ic_stderr is not None and large.ic_stderr is not None
    # proportions near 0.7 at both sizes, so quadrupling the draws halves the error
    assert small.ic_stderr / large.ic_stderr == pytest.approx(2.0, rel=0.15)

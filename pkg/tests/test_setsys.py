"""Tests for coalition encodings, closure and set-system enumeration."""

from __future__ import annotations

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from igv.backend.domain.errors import ExhaustiveLimitError, InputError
from igv.backend.domain.models import SetSystem
from igv.backend.domain.setsys import (
    closure,
    closure_partition,
    decode_coalition,
    decode_system,
    encode_coalition,
    encode_system,
    enumerate_systems,
    intersection_closure,
    is_intersection_closed,
    iter_subsets,
    sample_system,
    system_count,
)
from tests.strategies import set_systems

CHAIN = encode_system([0b001, 0b011, 0b111], 3)
EXAMPLE2 = encode_system([0b001, 0b010, 0b011, 0b110, 0b111], 3)


def test_encode_coalition_examples() -> None:
    assert encode_coalition([1, 2, 5], 5) == 19
    assert encode_coalition([], 3) == 0
    assert encode_coalition([1, 2, 3], 3) == 7


def test_decode_coalition_returns_sorted_players() -> None:
    assert decode_coalition(19, 5) == (1, 2, 5)
    assert decode_coalition(0, 3) == ()


@pytest.mark.parametrize("players", [[0], [4], [1, 1]])
def test_encode_coalition_rejects_bad_indices(players: list[int]) -> None:
    with pytest.raises(InputError):
        encode_coalition(players, 3)


def test_encode_system_examples() -> None:
    assert decode_system(CHAIN) == 139
    assert decode_system(encode_system([], 2)) == 1
    assert decode_system(encode_system(range(8), 3)) == 255


def test_decode_135_is_two_singletons_and_grand() -> None:
    assert SetSystem(3, 135).coalitions == (0, 0b001, 0b010, 0b111)


def test_encode_system_forces_empty_coalition() -> None:
    assert 0 in encode_system([3], 2)


def test_encode_system_rejects_wide_mask() -> None:
    with pytest.raises(InputError):
        encode_system([8], 3)


def test_set_system_requires_empty_coalition() -> None:
    with pytest.raises(InputError):
        SetSystem(3, 0b10)


def test_iter_subsets_covers_every_subset() -> None:
    subsets = list(iter_subsets(0b101))
    assert subsets == [0b101, 0b100, 0b001, 0]


def test_closure_examples() -> None:
    assert closure(EXAMPLE2, 0b100) == 0b110
    assert closure(CHAIN, 0b110) == 0b111
    for member in EXAMPLE2:
        assert closure(EXAMPLE2, member) == member


def test_closure_of_uncovered_coalition_is_grand() -> None:
    system = encode_system([0b001], 3)
    assert closure(system, 0b100) == 0b111


def test_closure_partition_chain() -> None:
    partition = closure_partition(CHAIN)
    sizes = {cls.representative: cls.members for cls in partition.classes}

    assert sizes == {
        0: (0,),
        0b001: (0b001,),
        0b011: (0b010, 0b011),
        0b111: (0b100, 0b101, 0b110, 0b111),
    }


def test_closure_partition_of_power_set_is_discrete() -> None:
    partition = closure_partition(SetSystem.power_set(3))
    assert all(cls.size == 1 for cls in partition.classes)


def test_closure_partition_can_exceed_system() -> None:
    pairs = encode_system([0b011, 0b101, 0b110, 0b111], 3)
    assert len(closure_partition(pairs).classes) == 8
    assert len(pairs) == 5


@settings(max_examples=80)
@given(set_systems())
def test_closure_partition_laws(system: SetSystem) -> None:
    rep = closure_partition(system).rep
    classes = closure_partition(system).classes

    assert sum(cls.size for cls in classes) == 1 << system.n
    for mask, image in enumerate(rep):
        assert mask & image == mask
        assert rep[image] == image
        assert image == closure(system, mask)
    for member in system:
        assert rep[member] == member
    for mask in range(1 << system.n):
        for sub in iter_subsets(mask):
            assert rep[sub] & rep[mask] == rep[sub]


def test_is_intersection_closed_examples() -> None:
    assert is_intersection_closed(CHAIN)
    assert is_intersection_closed(EXAMPLE2)
    assert not is_intersection_closed(encode_system([0b011, 0b110, 0b111], 3))
    assert is_intersection_closed(encode_system([], 3))


@settings(max_examples=80)
@given(set_systems())
def test_intersection_closure_is_smallest_closed_superset(system: SetSystem) -> None:
    closed = intersection_closure(system)

    assert is_intersection_closed(closed)
    assert closed.members & system.members == system.members
    if is_intersection_closed(system):
        assert closed == system


def test_system_count() -> None:
    assert system_count(3) == 64
    assert system_count(3, require_grand=False) == 128
    assert system_count(4) == 16384


def test_enumerate_systems_is_ascending_and_complete() -> None:
    systems = list(enumerate_systems(3))
    members = [system.members for system in systems]

    assert len(systems) == 64
    assert members == sorted(members)
    assert all(system.has_grand and 0 in system for system in systems)
    assert sum(is_intersection_closed(system) for system in systems) == 45


def test_enumerate_systems_index_range() -> None:
    full = list(enumerate_systems(3))
    assert list(enumerate_systems(3, start=10, stop=20)) == full[10:20]


def test_enumerate_systems_without_grand() -> None:
    assert len(list(enumerate_systems(2, require_grand=False))) == 8


def test_enumerate_systems_respects_limit() -> None:
    with pytest.raises(ExhaustiveLimitError) as excinfo:
        next(enumerate_systems(5))
    assert excinfo.value.code == "exhaustive_limit"


@given(st.integers(min_value=0, max_value=2**32 - 1))
def test_sample_system_contains_empty_and_grand(seed: int) -> None:
    system = sample_system(3, "uniform", seed)
    assert 0 in system and system.has_grand


def test_sample_system_is_seeded() -> None:
    assert sample_system(5, "uniform", 7) == sample_system(5, "uniform", 7)


def test_sample_system_ic_biased_is_closed() -> None:
    for seed in range(20):
        assert is_intersection_closed(sample_system(4, "ic_biased", seed))


def test_sample_system_rejects_unknown_mode() -> None:
    with pytest.raises(InputError):
        sample_system(3, "lattice", 0)  # type: ignore[arg-type]

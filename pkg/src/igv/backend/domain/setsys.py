"""Coalitions and set systems over a ground set of ``n`` players.

A coalition is an ``n``-bit mask (player ``i`` on bit ``i-1``). A set system is
a ``2^n``-bit mask with bit ``m`` set when coalition ``m`` belongs to it. Both
encodings are the decimal integers used in game files and report columns.
"""

from __future__ import annotations

from functools import lru_cache
from typing import Iterable, Iterator, Literal

import numpy as np

from .errors import ExhaustiveLimitError, InputError
from .models import ClosureClass, ClosurePartition, Coalition, SetSystem, iter_bits

DEFAULT_EXHAUSTIVE_LIMIT = 4

SampleMode = Literal["uniform", "ic_biased"]


def encode_coalition(players: Iterable[int], n: int) -> Coalition:
    """Encode 1-based player indices as a coalition mask.

    Raises:
        InputError: On out-of-range or repeated indices.
    """

    mask = 0
    for player in players:
        if not 1 <= player <= n:
            raise InputError(f"player index {player} out of range 1..{n}")
        bit = 1 << (player - 1)
        if mask & bit:
            raise InputError(f"player {player} listed twice")
        mask |= bit
    return mask


def decode_coalition(mask: Coalition, n: int) -> tuple[int, ...]:
    _check_mask(mask, n)
    return tuple(bit + 1 for bit in iter_bits(mask))


def encode_system(coalitions: Iterable[Coalition], n: int) -> SetSystem:
    """Build a set system from coalition masks; the empty coalition is forced in."""

    members = 1
    for mask in coalitions:
        _check_mask(mask, n)
        members |= 1 << mask
    return SetSystem(n, members)


def decode_system(system: SetSystem) -> int:
    return system.members


def iter_subsets(mask: Coalition) -> Iterator[Coalition]:
    """Yield every subset of ``mask``, itself first and the empty set last."""

    sub = mask
    while True:
        yield sub
        if sub == 0:
            return
        sub = (sub - 1) & mask


def closure(system: SetSystem, coalition: Coalition) -> Coalition:
    """Intersection of all members containing ``coalition``; the grand coalition if none does."""

    _check_mask(coalition, system.n)
    result = system.grand
    for member in system:
        if member & coalition == coalition:
            result &= member
    return result


@lru_cache(maxsize=4096)
def closure_partition(system: SetSystem) -> ClosurePartition:
    """Partition all ``2^n`` coalitions by their closure."""

    grand = system.grand
    rep = [grand] * (1 << system.n)
    for member in system:
        for sub in iter_subsets(member):
            rep[sub] &= member

    grouped: dict[Coalition, list[Coalition]] = {}
    for coalition, representative in enumerate(rep):
        grouped.setdefault(representative, []).append(coalition)
    classes = tuple(
        ClosureClass(representative, tuple(members))
        for representative, members in sorted(grouped.items())
    )
    return ClosurePartition(n=system.n, rep=tuple(rep), classes=classes)


def is_intersection_closed(system: SetSystem) -> bool:
    members = system.coalitions
    for index, left in enumerate(members):
        for right in members[index + 1 :]:
            if not system.members >> (left & right) & 1:
                return False
    return True


def intersection_closure(system: SetSystem) -> SetSystem:
    """Smallest intersection-closed system containing ``system``."""

    members = system.members
    pending = list(system.coalitions)
    while pending:
        left = pending.pop()
        for right in iter_bits(members):
            meet = left & right
            if not members >> meet & 1:
                members |= 1 << meet
                pending.append(meet)
    return SetSystem(system.n, members)


def system_count(n: int, *, require_grand: bool = True) -> int:
    """Number of set systems containing the empty set (and ``N`` when required)."""

    free = (1 << n) - (2 if require_grand else 1)
    return 1 << free


def enumerate_systems(
    n: int,
    *,
    require_grand: bool = True,
    limit: int = DEFAULT_EXHAUSTIVE_LIMIT,
    start: int = 0,
    stop: int | None = None,
) -> Iterator[SetSystem]:
    """Yield every set system in ascending membership-mask order.

    ``start``/``stop`` select an index range of the full stream so a census can
    be sharded across workers.

    Raises:
        ExhaustiveLimitError: If ``n`` exceeds ``limit``.
    """

    if n < 1:
        raise InputError(f"player count must be positive, got {n}")
    if n > limit:
        raise ExhaustiveLimitError(
            f"exhaustive enumeration is capped at n={limit}; use sampling for n={n}"
        )
    total = system_count(n, require_grand=require_grand)
    stop = total if stop is None else min(stop, total)
    grand_bit = 1 << ((1 << n) - 1) if require_grand else 0
    for index in range(max(start, 0), stop):
        yield SetSystem(n, 1 | (index << 1) | grand_bit)


def sample_system(
    n: int,
    mode: SampleMode = "uniform",
    rng_seed: int | np.random.Generator | np.random.SeedSequence | None = None,
) -> SetSystem:
    """Draw a random set system containing the empty and the grand coalition.

    ``uniform`` includes every other coalition independently with probability
    1/2. ``ic_biased`` closes a uniform draw under intersection; its
    distribution over intersection-closed systems is not uniform.
    """

    if n < 1:
        raise InputError(f"player count must be positive, got {n}")
    if mode not in ("uniform", "ic_biased"):
        raise InputError(f"unknown sampling mode: {mode!r}")
    rng = np.random.default_rng(rng_seed)
    free = (1 << n) - 2
    bits = int.from_bytes(rng.bytes((free + 7) // 8), "little") & ((1 << free) - 1)
    system = SetSystem(n, 1 | (bits << 1) | (1 << ((1 << n) - 1)))
    if mode == "ic_biased":
        return intersection_closure(system)
    return system


def _check_mask(mask: Coalition, n: int) -> None:
    if mask < 0 or mask >> n:
        raise InputError(f"coalition mask {mask} out of range for n={n}")

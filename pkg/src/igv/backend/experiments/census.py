"""Census of set systems: how many are intersection-closed, how many have a unique UD-value.

Small ground sets are enumerated exhaustively; larger ones are estimated from
uniform samples with binomial standard errors.
"""

from __future__ import annotations

import logging
import math
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from itertools import combinations

import numpy as np

from igv.backend.domain.errors import InputError
from igv.backend.domain.models import SetSystem
from igv.backend.domain.setsys import (
    DEFAULT_EXHAUSTIVE_LIMIT,
    encode_system,
    enumerate_systems,
    is_intersection_closed,
    sample_system,
    system_count,
)
from igv.backend.domain.values import is_ud_unique

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class CensusRow:
    """Counts over all set systems containing the empty and the grand coalition.

    ``samples`` is None for an exhaustive row; ``total`` is then the exact
    number of systems. Sampled rows count over the drawn systems and report
    binomial standard errors.
    """

    n: int
    total: int
    ic_count: int
    unique_nonic_count: int
    samples: int | None = None
    seed: int | None = None
    ic_stderr: float | None = None
    unique_stderr: float | None = None
    witnesses: tuple[int, ...] = field(default=(), compare=False)
    family_matches: bool | None = None

    @property
    def ic_prop(self) -> float:
        return self.ic_count / self.total

    @property
    def unique_nonic_prop(self) -> float:
        return self.unique_nonic_count / self.total

    @property
    def sampled(self) -> bool:
        return self.samples is not None


def symmetric_unique_family(n: int) -> list[SetSystem]:
    """All pairs, the empty and grand coalitions, and any proper subset of the singletons.

    With every singleton present the system would be intersection-closed.
    """

    if n < 2:
        raise InputError(f"the family needs at least two players, got {n}")
    grand = (1 << n) - 1
    pairs = [(1 << i) | (1 << j) for i, j in combinations(range(n), 2)]
    singletons = [1 << i for i in range(n)]
    family = []
    for chosen in range((1 << n) - 1):
        extra = [s for k, s in enumerate(singletons) if chosen >> k & 1]
        family.append(encode_system([*pairs, grand, *extra], n))
    return sorted(family, key=lambda system: system.members)


def _classify(system: SetSystem) -> tuple[bool, bool]:
    closed = is_intersection_closed(system)
    return closed, (not closed) and is_ud_unique(system)


def _census_shard(n: int, start: int, stop: int, limit: int) -> tuple[int, int, list[int]]:
    ic_count = 0
    witnesses = []
    for system in enumerate_systems(n, limit=limit, start=start, stop=stop):
        closed, unique_nonic = _classify(system)
        if closed:
            ic_count += 1
        elif unique_nonic:
            witnesses.append(system.members)
    return ic_count, len(witnesses), witnesses


def _shards(total: int, workers: int) -> list[tuple[int, int]]:
    size = math.ceil(total / workers)
    return [(start, min(start + size, total)) for start in range(0, total, size)]


def census_exhaustive(
    n: int, *, limit: int = DEFAULT_EXHAUSTIVE_LIMIT, workers: int = 1
) -> CensusRow:
    """Classify every set system containing the empty and the grand coalition.

    The enumeration is split into contiguous index ranges, one per worker;
    shard results are merged in index order.
    """

    total = system_count(n)
    # validates n against the limit before any worker starts
    next(enumerate_systems(n, limit=limit, stop=1))
    shards = _shards(total, max(1, workers))
    if workers > 1 and len(shards) > 1:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            parts = list(
                pool.map(
                    _census_shard,
                    [n] * len(shards),
                    [s for s, _ in shards],
                    [e for _, e in shards],
                    [limit] * len(shards),
                )
            )
    else:
        parts = [_census_shard(n, start, stop, limit) for start, stop in shards]

    ic_count = sum(part[0] for part in parts)
    witnesses = tuple(members for part in parts for members in part[2])
    family_matches = None
    if n == 4:
        expected = {system.members for system in symmetric_unique_family(n)}
        family_matches = set(witnesses) == expected
        if not family_matches:
            logger.warning("Unique non-closed systems at n=4 differ from the symmetric family")
    logger.info(
        "Exhaustive census n=%s: %s systems, %s intersection-closed, %s unique non-closed",
        n,
        total,
        ic_count,
        len(witnesses),
    )
    return CensusRow(
        n=n,
        total=total,
        ic_count=ic_count,
        unique_nonic_count=len(witnesses),
        witnesses=witnesses,
        family_matches=family_matches,
    )


def _sampled_shard(n: int, members: list[int]) -> tuple[int, list[int]]:
    ic_count = 0
    witnesses = []
    for mask in members:
        closed, unique_nonic = _classify(SetSystem(n, mask))
        if closed:
            ic_count += 1
        elif unique_nonic:
            witnesses.append(mask)
    return ic_count, witnesses


def _stderr(count: int, samples: int) -> float:
    p = count / samples
    return math.sqrt(p * (1 - p) / samples)


def census_sampled(n: int, samples: int, seed: int, *, workers: int = 1) -> CensusRow:
    """Estimate census proportions from uniformly drawn set systems.

    Systems are drawn sequentially from one seeded generator before any
    parallel evaluation, so the row depends only on ``(n, samples, seed)``.
    """

    if samples < 1:
        raise InputError(f"sample count must be positive, got {samples}")
    rng = np.random.default_rng(np.random.SeedSequence(seed))
    drawn = [sample_system(n, "uniform", rng).members for _ in range(samples)]
    chunks = [drawn[start:end] for start, end in _shards(samples, max(1, workers))]
    if workers > 1 and len(chunks) > 1:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            parts = list(pool.map(_sampled_shard, [n] * len(chunks), chunks))
    else:
        parts = [_sampled_shard(n, chunk) for chunk in chunks]

    ic_count = sum(part[0] for part in parts)
    witnesses = tuple(mask for part in parts for mask in part[1])
    logger.info(
        "Sampled census n=%s: %s draws, %s intersection-closed, %s unique non-closed",
        n,
        samples,
        ic_count,
        len(witnesses),
    )
    return CensusRow(
        n=n,
        total=samples,
        ic_count=ic_count,
        unique_nonic_count=len(witnesses),
        samples=samples,
        seed=seed,
        ic_stderr=_stderr(ic_count, samples),
        unique_stderr=_stderr(len(witnesses), samples),
        witnesses=witnesses,
    )

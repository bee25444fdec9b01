"""Distances between the R-, IC- and UD-values on random games.

For every set system a batch of games with worths drawn from ``U[0, 1]`` is
evaluated. ``pairwise`` mode measures the three l1 distances between the
values; ``equal_division`` mode measures each value's l1 distance to equal
division.
"""

from __future__ import annotations

import logging
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from typing import Literal, Mapping, Sequence

import numpy as np

from igv.backend.domain.errors import InputError, UnsupportedStructureError
from igv.backend.domain.games import equal_division, random_game
from igv.backend.domain.models import SetSystem, ValueKind
from igv.backend.domain.setsys import is_intersection_closed
from igv.backend.domain.values import value

logger = logging.getLogger(__name__)

Reference = Literal["pairwise", "equal_division"]

PAIRWISE_SERIES = ("R_IC", "R_UD", "UD_IC")
ED_SERIES = ("R_ED", "UD_ED", "IC_ED")


@dataclass(frozen=True)
class SystemResult:
    system: int
    n: int
    games: int
    means: Mapping[str, float]
    sds: Mapping[str, float]


@dataclass(frozen=True)
class DifferenceReport:
    reference: Reference
    series: tuple[str, ...]
    games_per_system: int
    seed: int
    results: tuple[SystemResult, ...]
    skipped: tuple[int, ...] = ()

    def __len__(self) -> int:
        return len(self.results)


def series_for(reference: Reference) -> tuple[str, ...]:
    if reference == "pairwise":
        return PAIRWISE_SERIES
    if reference == "equal_division":
        return ED_SERIES
    raise InputError(f"unknown reference: {reference!r}")


def system_seed(seed: int, system: SetSystem) -> np.random.SeedSequence:
    """Seed of one system's games, derived from the master seed and the system encoding."""

    return np.random.SeedSequence([seed, system.members])


def _distances(system: SetSystem, games: int, seed: int, reference: Reference) -> SystemResult:
    rng = np.random.default_rng(system_seed(seed, system))
    series = series_for(reference)
    rows = np.zeros((games, len(series)))
    for k in range(games):
        game = random_game(system, rng)
        r = np.array(value(game, ValueKind.R).payoffs, dtype=float)
        ic = np.array(value(game, ValueKind.IC).payoffs, dtype=float)
        ud = np.array(value(game, ValueKind.UD).payoffs, dtype=float)
        if reference == "pairwise":
            pairs = ((r, ic), (r, ud), (ud, ic))
        else:
            ed = np.array(equal_division(game).payoffs, dtype=float)
            pairs = ((r, ed), (ud, ed), (ic, ed))
        rows[k] = [np.abs(a - b).sum() for a, b in pairs]
    ddof = 1 if games > 1 else 0
    means = rows.mean(axis=0)
    sds = rows.std(axis=0, ddof=ddof)
    return SystemResult(
        system=system.members,
        n=system.n,
        games=games,
        means=dict(zip(series, (float(x) for x in means))),
        sds=dict(zip(series, (float(x) for x in sds))),
    )


def difference_experiment(
    systems: Sequence[SetSystem],
    games_per_system: int = 100,
    seed: int = 0,
    reference: Reference = "pairwise",
    *,
    strict: bool = False,
    workers: int = 1,
) -> DifferenceReport:
    """Mean and standard deviation of value distances per set system.

    Systems outside the domain of the R- and IC-values are skipped and logged,
    or rejected when ``strict`` is set. Each system draws its games from its
    own seed, so results do not depend on ``workers`` or on system order.

    Raises:
        UnsupportedStructureError: A system is unsupported and ``strict`` is set.
    """

    if games_per_system < 1:
        raise InputError(f"games per system must be positive, got {games_per_system}")
    series = series_for(reference)
    supported: list[SetSystem] = []
    skipped: list[int] = []
    for system in systems:
        if system.has_grand and is_intersection_closed(system):
            supported.append(system)
            continue
        if strict:
            raise UnsupportedStructureError(
                f"set system {system.members} is not intersection-closed with the grand coalition"
            )
        logger.warning("Skipping unsupported set system %s", system.members)
        skipped.append(system.members)

    count = len(supported)
    if workers > 1 and count > 1:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            results = list(
                pool.map(
                    _distances,
                    supported,
                    [games_per_system] * count,
                    [seed] * count,
                    [reference] * count,
                )
            )
    else:
        results = [_distances(system, games_per_system, seed, reference) for system in supported]

    logger.info(
        "Difference experiment (%s): %s systems, %s games each, %s skipped",
        reference,
        count,
        games_per_system,
        len(skipped),
    )
    return DifferenceReport(
        reference=reference,
        series=series,
        games_per_system=games_per_system,
        seed=seed,
        results=tuple(results),
        skipped=tuple(skipped),
    )

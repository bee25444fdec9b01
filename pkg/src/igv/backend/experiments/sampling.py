"""Sample sizes and the set systems experiments run on."""

from __future__ import annotations

import logging
import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Literal

import numpy as np

from igv.backend.domain.errors import InputError
from igv.backend.domain.models import SetSystem
from igv.backend.domain.setsys import (
    DEFAULT_EXHAUSTIVE_LIMIT,
    enumerate_systems,
    is_intersection_closed,
    sample_system,
)

from .differences import difference_experiment

logger = logging.getLogger(__name__)

SizeFormula = Literal["yamane", "cochran"]


def _exact(number: float | int | str) -> Fraction:
    # decimal literals such as 2.576 are taken at face value, not as binary floats
    return Fraction(str(number))


def sample_size(kind: SizeFormula, z: float, p_or_s: float, e: float) -> int:
    """Required sample size, rounded up.

    ``yamane``: ``Z^2 p (1-p) / E^2`` for a proportion ``p``.
    ``cochran``: ``(Z s / E)^2`` for a standard deviation ``s``.
    """

    if e <= 0:
        raise InputError(f"margin of error must be positive, got {e}")
    z_, x_, e_ = _exact(z), _exact(p_or_s), _exact(e)
    if kind == "yamane":
        if not 0 <= x_ <= 1:
            raise InputError(f"proportion must lie in [0, 1], got {p_or_s}")
        size = z_ * z_ * x_ * (1 - x_) / (e_ * e_)
    elif kind == "cochran":
        if x_ < 0:
            raise InputError(f"standard deviation must be non-negative, got {p_or_s}")
        size = (z_ * x_ / e_) ** 2
    else:
        raise InputError(f"unknown sample size formula: {kind!r}")
    return math.ceil(size)


def ic_systems(
    n: int,
    *,
    samples: int | None = None,
    seed: int | None = None,
    limit: int = DEFAULT_EXHAUSTIVE_LIMIT,
) -> list[SetSystem]:
    """Intersection-closed systems containing the grand coalition.

    Without ``samples`` every such system is enumerated. Otherwise ``samples``
    uniform draws are closed under intersection and repeated systems dropped,
    keeping first occurrences.
    """

    if samples is None:
        return [system for system in enumerate_systems(n, limit=limit) if is_intersection_closed(system)]
    if samples < 1:
        raise InputError(f"sample count must be positive, got {samples}")
    rng = np.random.default_rng(np.random.SeedSequence(seed))
    seen: dict[int, SetSystem] = {}
    for _ in range(samples):
        system = sample_system(n, "ic_biased", rng)
        seen.setdefault(system.members, system)
    if len(seen) < samples:
        logger.info("Dropped %s repeated systems out of %s draws", samples - len(seen), samples)
    return list(seen.values())


@dataclass(frozen=True)
class SamplePlan:
    pilot_systems: int
    pilot_sd: float
    size: int


def plan_sample_size(
    n: int,
    seed: int,
    *,
    pilot_systems: int = 30,
    games_per_system: int = 100,
    z: float = 1.96,
    e: float = 0.01,
    reference: Literal["pairwise", "equal_division"] = "pairwise",
) -> SamplePlan:
    """Pilot-then-Cochran sizing of a difference experiment.

    Runs the experiment on ``pilot_systems`` sampled systems and takes the
    largest standard deviation of the per-system mean distances as ``s``.
    """

    pilot = ic_systems(n, samples=pilot_systems, seed=seed)
    report = difference_experiment(pilot, games_per_system, seed, reference)
    spread = 0.0
    for series in report.series:
        means = np.array([result.means[series] for result in report.results])
        if len(means) > 1:
            spread = max(spread, float(np.std(means, ddof=1)))
    size = sample_size("cochran", z, round(spread, 12), e)
    logger.info("Pilot of %s systems: s=%.6f, sample size %s", len(pilot), spread, size)
    return SamplePlan(pilot_systems=len(pilot), pilot_sd=spread, size=size)

"""Values of incomplete games: the R-, IC- and uniform-dividend (UD) values.

The UD-value spreads every undetermined dividend uniformly over the closure
class that carries it. On intersection-closed systems containing the grand
coalition the class dividends follow from a triangular recursion; on other
systems the same conditions form an affine system whose Shapley image may or
may not be unique.
"""

from __future__ import annotations

import logging
import math
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Sequence

import numpy as np

from .errors import (
    GRAND_COALITION_MISSING,
    NOT_INTERSECTION_CLOSED,
    InputError,
    NonUniqueValueError,
    NotExtendableError,
    UnsupportedStructureError,
)
from .games import shapley, shapley_from_dividends, to_values
from .linalg import AffineSolution, bareiss_rank, mat_vec, solve_affine
from .models import (
    Allocation,
    Coalition,
    CompleteGame,
    Dividends,
    IncompleteGame,
    SetSystem,
    ValueKind,
    iter_bits,
    popcount,
)
from .numeric import DEFAULT_TOLERANCE, Scalar, divide
from .setsys import closure_partition, is_intersection_closed

logger = logging.getLogger(__name__)

DeltaSurpluses = dict[Coalition, Scalar]

DEFAULT_BATCH_SIZE = 10_000


@dataclass(frozen=True)
class UDSystem:
    """Linear conditions on class dividends; depends only on the set system.

    ``a[r][c]`` is the size of class ``columns[c]`` when that class lies inside
    ``rows[r]``. ``shapley_map[i][c]`` is the share of player ``i+1`` in a unit
    dividend on every member of class ``columns[c]``.
    """

    system: SetSystem
    rows: tuple[Coalition, ...]
    columns: tuple[Coalition, ...]
    a: tuple[tuple[int, ...], ...]
    shapley_map: tuple[tuple[Fraction, ...], ...]

    def rhs(self, game: IncompleteGame) -> list[Scalar]:
        if game.system != self.system:
            raise InputError("game does not live on this set system")
        return [game.worth[row] for row in self.rows]

    def scaled_shapley_map(self) -> list[list[int]]:
        """Shapley map multiplied by lcm(1..n) so every entry is an integer."""

        scale = math.lcm(*range(1, self.system.n + 1))
        return [[int(entry * scale) for entry in row] for row in self.shapley_map]


@dataclass(frozen=True)
class UniquenessReport:
    unique: bool
    intersection_closed: bool
    has_grand: bool
    rank_a: int | None
    rank_stacked: int | None
    rows: int
    columns: int


def _require_grand(system: SetSystem) -> None:
    if not system.has_grand:
        raise UnsupportedStructureError(
            "the grand coalition is not a known coalition", code=GRAND_COALITION_MISSING
        )


def _require_intersection_closed(system: SetSystem) -> None:
    if not is_intersection_closed(system):
        raise UnsupportedStructureError(
            "the set system is not intersection-closed", code=NOT_INTERSECTION_CLOSED
        )


def _nonnegative(value: Scalar, tol: float) -> bool:
    if isinstance(value, (int, Fraction)):
        return value >= 0
    return value >= -tol


def delta_surpluses(game: IncompleteGame) -> DeltaSurpluses:
    """Surplus forced onto each known coalition by the known worths.

    Members are visited in ascending mask order, so every proper subset is
    settled before its supersets.
    """

    delta: DeltaSurpluses = {}
    for mask in game.system:
        forced = sum(
            (value for sub, value in delta.items() if sub & mask == sub),
            0,
        )
        delta[mask] = game.worth[mask] - forced
    return delta


def is_p_extendable(game: IncompleteGame, *, tol: float = DEFAULT_TOLERANCE) -> bool:
    """True when some positive complete game agrees with ``game`` on its known coalitions."""

    _require_intersection_closed(game.system)
    return all(_nonnegative(value, tol) for value in delta_surpluses(game).values())


@lru_cache(maxsize=4096)
def build_ud_system(system: SetSystem) -> UDSystem:
    partition = closure_partition(system)
    columns = tuple(cls.representative for cls in partition.classes if cls.representative)
    rows = system.coalitions[1:]
    sizes = {cls.representative: cls.size for cls in partition.classes}
    a = tuple(
        tuple(sizes[col] if col & row == col else 0 for col in columns) for row in rows
    )
    shapley_map = [[Fraction(0)] * len(columns) for _ in range(system.n)]
    index = {col: c for c, col in enumerate(columns)}
    for cls in partition.classes:
        if not cls.representative:
            continue
        c = index[cls.representative]
        for member in cls.members:
            share = Fraction(1, popcount(member))
            for bit in iter_bits(member):
                shapley_map[bit][c] += share
    return UDSystem(
        system=system,
        rows=rows,
        columns=columns,
        a=a,
        shapley_map=tuple(tuple(row) for row in shapley_map),
    )


def ud_dividends(game: IncompleteGame) -> Dividends:
    """UD dividends on an intersection-closed system containing the grand coalition."""

    system = game.system
    _require_grand(system)
    _require_intersection_closed(system)
    partition = closure_partition(system)
    sizes = {cls.representative: cls.size for cls in partition.classes}

    class_dividend: dict[Coalition, Scalar] = {0: 0}
    for mask in system.coalitions[1:]:
        forced = sum(
            (
                sizes[sub] * value
                for sub, value in class_dividend.items()
                if sub & mask == sub
            ),
            0,
        )
        class_dividend[mask] = divide(game.worth[mask] - forced, sizes[mask])
    return Dividends(game.n, tuple(class_dividend[rep] for rep in partition.rep))


def solve_ud_system(game: IncompleteGame) -> AffineSolution:
    """Affine set of class-dividend vectors meeting the UD conditions, for any system."""

    ud_system = build_ud_system(game.system)
    solution = solve_affine(ud_system.a, ud_system.rhs(game))
    if solution is None:
        # rows of A always have a private pivot, so this cannot happen
        raise InputError("UD conditions are inconsistent")
    return solution


@lru_cache(maxsize=65536)
def uniqueness_report(system: SetSystem) -> UniquenessReport:
    """Decide whether the UD conditions pin down a single Shapley image."""

    closed = is_intersection_closed(system)
    ud_system = build_ud_system(system)
    rows, columns = len(ud_system.rows), len(ud_system.columns)
    if not system.has_grand:
        return UniquenessReport(False, closed, False, None, None, rows, columns)
    if closed:
        return UniquenessReport(True, True, True, rows, rows, rows, columns)
    a = [list(row) for row in ud_system.a]
    rank_a = bareiss_rank(a)
    rank_stacked = bareiss_rank(a + ud_system.scaled_shapley_map())
    return UniquenessReport(
        unique=rank_stacked == rank_a,
        intersection_closed=False,
        has_grand=True,
        rank_a=rank_a,
        rank_stacked=rank_stacked,
        rows=rows,
        columns=columns,
    )


def is_ud_unique(system: SetSystem) -> bool:
    return uniqueness_report(system).unique


def uniqueness_oracle(
    system: SetSystem,
    rng_seed: int | np.random.Generator | np.random.SeedSequence | None = None,
) -> bool:
    """Randomized check: two random UD solutions must share their Shapley image.

    Uses random integer worths and random integer nullspace combinations;
    independent of the rank test in ``uniqueness_report``.
    """

    rng = np.random.default_rng(rng_seed)
    ud_system = build_ud_system(system)
    rhs = [int(x) for x in rng.integers(-1000, 1001, size=len(ud_system.rows))]
    solution = solve_affine(ud_system.a, rhs)
    if solution is None:
        raise InputError("UD conditions are inconsistent")

    def draw_point() -> list[Fraction]:
        point = list(solution.particular)
        for basis in solution.nullspace:
            weight = int(rng.integers(-1000, 1001))
            point = [p + weight * b for p, b in zip(point, basis)]
        return point

    first = mat_vec(ud_system.shapley_map, draw_point())
    second = mat_vec(ud_system.shapley_map, draw_point())
    return first == second


def _ud_value_general(game: IncompleteGame) -> Allocation:
    report = uniqueness_report(game.system)
    if not report.unique:
        raise NonUniqueValueError(
            f"UD-value is not unique on set system {game.system.members}"
        )
    ud_system = build_ud_system(game.system)
    payoffs = mat_vec(ud_system.shapley_map, solve_ud_system(game).particular)
    if not game.exact:
        return Allocation(tuple(float(x) for x in payoffs))
    return Allocation(tuple(payoffs))


def special_game(game: IncompleteGame, kind: ValueKind | str) -> CompleteGame:
    """The R-, IC- or UD-game completing ``game``."""

    kind = ValueKind.parse(kind)
    system = game.system
    _require_grand(system)
    _require_intersection_closed(system)
    if kind is ValueKind.R:
        delta = delta_surpluses(game)
        zero: Scalar = 0 if game.exact else 0.0
        dividends = tuple(delta.get(mask, zero) for mask in range(1 << game.n))
        return to_values(Dividends(game.n, dividends))
    if kind is ValueKind.IC:
        rep = closure_partition(system).rep
        return CompleteGame(game.n, tuple(game.worth[rep[mask]] for mask in range(1 << game.n)))
    return to_values(ud_dividends(game))


def value(game: IncompleteGame, kind: ValueKind | str) -> Allocation:
    """Shapley value of the completion named by ``kind``.

    The UD-value is also defined on systems that are not intersection-closed,
    as long as the UD conditions determine its Shapley image.

    Raises:
        UnsupportedStructureError: Missing grand coalition, or R/IC on a
            system that is not intersection-closed.
        NonUniqueValueError: UD on a system whose UD-value is not unique.
    """

    kind = ValueKind.parse(kind)
    if kind is ValueKind.UD:
        _require_grand(game.system)
        if not is_intersection_closed(game.system):
            return _ud_value_general(game)
        return shapley_from_dividends(ud_dividends(game))
    return shapley(special_game(game, kind))


def _extendable_surpluses(game: IncompleteGame, tol: float) -> DeltaSurpluses:
    _require_grand(game.system)
    _require_intersection_closed(game.system)
    delta = delta_surpluses(game)
    if not all(_nonnegative(v, tol) for v in delta.values()):
        raise NotExtendableError("some surplus is negative; no positive extension exists")
    return delta


def _extension_plan(game: IncompleteGame, tol: float) -> list[tuple[float, np.ndarray]]:
    """Per closure class: its surplus and the member-to-player share matrix."""

    delta = _extendable_surpluses(game, tol)
    plan = []
    for cls in closure_partition(game.system).classes:
        surplus = float(delta[cls.representative])
        if cls.representative == 0 or surplus <= 0:
            continue
        shares = np.zeros((cls.size, game.n))
        for row, member in enumerate(cls.members):
            for bit in iter_bits(member):
                shares[row, bit] = 1.0 / popcount(member)
        plan.append((surplus, shares))
    return plan


def sample_p_extension(
    game: IncompleteGame,
    rng_seed: int | np.random.Generator | np.random.SeedSequence | None = None,
    *,
    tol: float = DEFAULT_TOLERANCE,
) -> CompleteGame:
    """Draw a positive extension uniformly from the product of class simplices.

    Surpluses down to ``-tol`` count as zero.
    """

    delta = _extendable_surpluses(game, tol)
    rng = np.random.default_rng(rng_seed)
    dividends = [0.0] * (1 << game.n)
    for cls in closure_partition(game.system).classes:
        surplus = float(delta[cls.representative])
        if cls.representative == 0 or surplus <= 0:
            continue
        draws = rng.exponential(scale=1.0, size=cls.size)
        weights = draws / draws.sum()
        for member, weight in zip(cls.members, weights):
            dividends[member] = surplus * float(weight)
    return to_values(Dividends(game.n, tuple(dividends)))


def _mc_batch(
    plan: Sequence[tuple[float, np.ndarray]],
    n: int,
    count: int,
    seed: np.random.SeedSequence,
) -> np.ndarray:
    rng = np.random.default_rng(seed)
    total = np.zeros(n)
    for surplus, shares in plan:
        draws = rng.exponential(scale=1.0, size=(count, shares.shape[0]))
        weights = draws / draws.sum(axis=1, keepdims=True)
        total += surplus * (weights.sum(axis=0) @ shares)
    return total


def expected_shapley_mc(
    game: IncompleteGame,
    samples: int,
    rng_seed: int | np.random.SeedSequence | None = None,
    *,
    batch_size: int = DEFAULT_BATCH_SIZE,
    workers: int = 1,
    tol: float = DEFAULT_TOLERANCE,
) -> Allocation:
    """Mean Shapley value over uniformly drawn positive extensions.

    Draws are split into batches with seeds spawned from one master seed and
    summed in batch order, so the estimate does not depend on ``workers``.
    """

    if samples < 1:
        raise InputError(f"sample count must be positive, got {samples}")
    if batch_size < 1:
        raise InputError(f"batch size must be positive, got {batch_size}")
    plan = _extension_plan(game, tol)
    master = (
        rng_seed if isinstance(rng_seed, np.random.SeedSequence) else np.random.SeedSequence(rng_seed)
    )
    counts = [batch_size] * (samples // batch_size)
    if samples % batch_size:
        counts.append(samples % batch_size)
    seeds = master.spawn(len(counts))
    logger.debug("Monte-Carlo estimate: %s draws in %s batches", samples, len(counts))

    if workers > 1 and len(counts) > 1:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            partials = list(
                pool.map(_mc_batch, [plan] * len(counts), [game.n] * len(counts), counts, seeds)
            )
    else:
        partials = [_mc_batch(plan, game.n, count, seed) for count, seed in zip(counts, seeds)]

    total = np.zeros(game.n)
    for partial in partials:
        total += partial
    return Allocation(tuple(float(x) for x in total / samples))

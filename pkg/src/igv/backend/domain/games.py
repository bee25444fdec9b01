"""Complete games, dividend transforms, the Shapley value and game generators."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Literal, Sequence

import numpy as np

from .errors import GRAND_COALITION_MISSING, InputError, UnsupportedStructureError
from .models import (
    Allocation,
    Coalition,
    CompleteGame,
    Dividends,
    IncompleteGame,
    SetSystem,
    iter_bits,
    popcount,
)
from .numeric import DEFAULT_TOLERANCE, Scalar, close, divide
from .setsys import closure_partition

Direction = Literal["to_dividends", "to_values"]
BasisKind = Literal["unanimity", "half_dividend"]


@dataclass(frozen=True)
class GameClass:
    positive: bool
    monotone: bool


@dataclass(frozen=True)
class ReducedGame:
    """Game after a player's withdrawal.

    ``players[k]`` is the original 1-based index of the player now numbered ``k+1``.
    """

    game: IncompleteGame
    players: tuple[int, ...]
    removed: int


def _moebius(table: list[Scalar], n: int) -> list[Scalar]:
    for bit in range(n):
        step = 1 << bit
        for mask in range(1 << n):
            if mask & step:
                table[mask] -= table[mask ^ step]
    return table


def _zeta(table: list[Scalar], n: int) -> list[Scalar]:
    for bit in range(n):
        step = 1 << bit
        for mask in range(1 << n):
            if mask & step:
                table[mask] += table[mask ^ step]
    return table


def to_dividends(game: CompleteGame) -> Dividends:
    """Harsanyi dividends of ``game`` (Moebius inversion over the subset lattice)."""

    return Dividends(game.n, tuple(_moebius(list(game.values), game.n)))


def to_values(dividends: Dividends) -> CompleteGame:
    """Worths recovered from dividends: ``v(S)`` is the sum of ``d(T)`` over ``T`` in ``S``."""

    return CompleteGame(dividends.n, tuple(_zeta(list(dividends.d), dividends.n)))


def dividend_transform(
    game: CompleteGame | Dividends, direction: Direction
) -> Dividends | CompleteGame:
    if direction == "to_dividends":
        if not isinstance(game, CompleteGame):
            raise InputError("to_dividends expects a complete game")
        return to_dividends(game)
    if direction == "to_values":
        if not isinstance(game, Dividends):
            raise InputError("to_values expects dividends")
        return to_values(game)
    raise InputError(f"unknown transform direction: {direction!r}")


def shapley_from_dividends(dividends: Dividends) -> Allocation:
    """Split every dividend equally among the members of its coalition."""

    payoffs: list[Scalar] = [0] * dividends.n
    for mask in range(1, 1 << dividends.n):
        share = dividends.d[mask]
        if share == 0:
            continue
        share = divide(share, popcount(mask))
        for bit in iter_bits(mask):
            payoffs[bit] += share
    return Allocation(tuple(payoffs))


def shapley(game: CompleteGame) -> Allocation:
    return shapley_from_dividends(to_dividends(game))


def classify(game: CompleteGame, *, tol: float = DEFAULT_TOLERANCE) -> GameClass:
    """Report positivity (all dividends non-negative) and monotonicity."""

    dividends = to_dividends(game).d
    positive = all(d >= -tol for d in dividends)
    values = game.values
    # adding one player at a time covers every inclusion by transitivity
    monotone = all(
        values[mask] <= values[mask | (1 << bit)] + tol
        for mask in range(1 << game.n)
        for bit in range(game.n)
        if not mask >> bit & 1
    )
    return GameClass(positive=positive, monotone=monotone)


def _compress(mask: Coalition, bit: int) -> Coalition:
    low = mask & ((1 << bit) - 1)
    return low | ((mask >> (bit + 1)) << bit)


def remove_player(game: IncompleteGame, player: int) -> ReducedGame:
    """Drop every known coalition containing ``player`` and re-index the rest densely."""

    if not 1 <= player <= game.n:
        raise InputError(f"player index {player} out of range 1..{game.n}")
    if game.n == 1:
        raise InputError("cannot remove the only player")
    bit = player - 1
    worth = {
        _compress(mask, bit): value
        for mask, value in game.worth.items()
        if not mask >> bit & 1
    }
    members = 0
    for mask in worth:
        members |= 1 << mask
    system = SetSystem(game.n - 1, members)
    remaining = tuple(p for p in range(1, game.n + 1) if p != player)
    return ReducedGame(IncompleteGame(game.n - 1, system, worth), remaining, player)


def random_game(
    system: SetSystem,
    rng_seed: int | np.random.Generator | np.random.SeedSequence | None = None,
    low: float = 0.0,
    high: float = 1.0,
) -> IncompleteGame:
    """Draw ``v(S)`` uniformly from ``[low, high]`` for every non-empty known coalition."""

    if low > high:
        raise InputError(f"low bound {low} exceeds high bound {high}")
    rng = np.random.default_rng(rng_seed)
    known = system.coalitions[1:]
    draws = rng.uniform(low, high, size=len(known))
    worth: dict[Coalition, Scalar] = {0: 0.0}
    worth.update(zip(known, (float(x) for x in draws)))
    return IncompleteGame(system.n, system, worth)


def basis_game(kind: BasisKind, coalition: Coalition, n: int) -> CompleteGame:
    """Unanimity game ``u_S`` or the game with dividend ``1/2^|S|`` on every subset of ``S``."""

    if coalition == 0:
        raise InputError("basis games need a non-empty coalition")
    if coalition < 0 or coalition >> n:
        raise InputError(f"coalition mask {coalition} out of range for n={n}")
    if kind == "unanimity":
        return CompleteGame(
            n, tuple(1 if mask & coalition == coalition else 0 for mask in range(1 << n))
        )
    if kind == "half_dividend":
        share = Fraction(1, 1 << popcount(coalition))
        dividends = tuple(
            share if mask and mask & coalition == mask else Fraction(0)
            for mask in range(1 << n)
        )
        return to_values(Dividends(n, dividends))
    raise InputError(f"unknown basis game kind: {kind!r}")


def is_in_ud_class(
    game: CompleteGame, system: SetSystem, *, tol: float = DEFAULT_TOLERANCE
) -> bool:
    """True when the dividends of ``game`` are constant on every closure class of ``system``."""

    if game.n != system.n:
        raise InputError("player count mismatch between game and set system")
    dividends = to_dividends(game).d
    for cls in closure_partition(system).classes:
        first = dividends[cls.members[0]]
        if not all(close(dividends[mask], first, tol) for mask in cls.members[1:]):
            return False
    return True


def permute_mask(mask: Coalition, permutation: Sequence[int]) -> Coalition:
    image = 0
    for bit in iter_bits(mask):
        image |= 1 << (permutation[bit] - 1)
    return image


def permute_players(game: IncompleteGame, permutation: Sequence[int]) -> IncompleteGame:
    """Relabel players; player ``k+1`` becomes player ``permutation[k]``."""

    if sorted(permutation) != list(range(1, game.n + 1)):
        raise InputError(f"not a permutation of 1..{game.n}: {list(permutation)}")
    worth = {permute_mask(mask, permutation): value for mask, value in game.worth.items()}
    members = 0
    for mask in worth:
        members |= 1 << mask
    return IncompleteGame(game.n, SetSystem(game.n, members), worth)


def permute_allocation(allocation: Allocation, permutation: Sequence[int]) -> Allocation:
    payoffs: list[Scalar] = [0] * len(allocation)
    for index, payoff in enumerate(allocation):
        payoffs[permutation[index] - 1] = payoff
    return Allocation(tuple(payoffs))


def equal_division(game: IncompleteGame) -> Allocation:
    """Every player receives ``v(N)/n``."""

    if not game.system.has_grand:
        raise UnsupportedStructureError(
            "equal division needs the worth of the grand coalition",
            code=GRAND_COALITION_MISSING,
        )
    share = divide(game.grand_worth, game.n)
    return Allocation(tuple(share for _ in range(game.n)))

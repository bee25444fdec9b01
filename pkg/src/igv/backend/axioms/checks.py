"""Instance-level axiom checks for the R-, IC- and UD-values.

Each check evaluates one axiom on concrete games and returns an
``AxiomReport``. A violated report carries the witness it was computed on, so
``replay_witness`` can recompute the gap from scratch.
"""

from __future__ import annotations

import logging
from itertools import combinations
from typing import Iterable, Literal, Sequence

import numpy as np

from igv.backend.domain.errors import InputError, NonUniqueValueError, UnsupportedStructureError
from igv.backend.domain.games import is_in_ud_class, random_game, remove_player, shapley
from igv.backend.domain.models import (
    Allocation,
    Coalition,
    CompleteGame,
    IncompleteGame,
    SetSystem,
    ValueKind,
    iter_bits,
)
from igv.backend.domain.numeric import DEFAULT_TOLERANCE, Scalar, close
from igv.backend.domain.values import special_game, value

from .models import Axiom, AxiomReport, AxiomStatus, AxiomWitness

logger = logging.getLogger(__name__)

BasicAxiom = Literal["efficiency", "additivity", "equality", "phi_consistency"]
ClassAxiom = Literal["null_player", "equal_treatment"]


def _try_value(game: IncompleteGame, kind: ValueKind) -> Allocation | str:
    """The value, or the reason it is undefined for this game."""

    try:
        return value(game, kind)
    except (UnsupportedStructureError, NonUniqueValueError) as exc:
        return exc.code


def _gap(left: Sequence[Scalar], right: Sequence[Scalar]) -> Scalar:
    return max((abs(a - b) for a, b in zip(left, right)), default=0)


def _compare(
    axiom: Axiom,
    kind: ValueKind,
    witness: AxiomWitness,
    tol: float,
) -> AxiomReport:
    agrees = all(close(a, b, tol) for a, b in zip(witness.left, witness.right))
    status = AxiomStatus.SATISFIED if agrees else AxiomStatus.VIOLATED
    return AxiomReport(axiom, kind, status, witness, _gap(witness.left, witness.right))


def _inapplicable(axiom: Axiom, kind: ValueKind, note: str) -> AxiomReport:
    logger.debug("%s/%s inapplicable: %s", axiom.value, kind.value, note)
    return AxiomReport(axiom, kind, AxiomStatus.INAPPLICABLE, note=note)


def check_basic(
    kind: ValueKind | str,
    game: IncompleteGame,
    axiom: BasicAxiom | Axiom,
    other: IncompleteGame | None = None,
    *,
    tol: float = DEFAULT_TOLERANCE,
) -> AxiomReport:
    """Efficiency, additivity, equality or phi-consistency on one instance.

    Additivity and equality take a second game on the same set system.
    """

    kind = ValueKind.parse(kind)
    axiom = Axiom(axiom)
    if axiom in (Axiom.ADDITIVITY, Axiom.EQUALITY):
        if other is None:
            raise InputError(f"{axiom.value} needs a second game")
        if other.n != game.n or other.system != game.system:
            raise InputError("paired games must share players and set system")

    payoffs = _try_value(game, kind)
    if isinstance(payoffs, str):
        return _inapplicable(axiom, kind, payoffs)

    if axiom is Axiom.EFFICIENCY:
        witness = AxiomWitness(
            games=(game,), left=(payoffs.total(),), right=(game.grand_worth,)
        )
        return _compare(axiom, kind, witness, tol)

    if axiom is Axiom.ADDITIVITY:
        assert other is not None
        other_payoffs = _try_value(other, kind)
        joint_payoffs = _try_value(game + other, kind)
        if isinstance(other_payoffs, str) or isinstance(joint_payoffs, str):
            return _inapplicable(axiom, kind, "value undefined on a paired game")
        witness = AxiomWitness(
            games=(game, other),
            left=joint_payoffs.payoffs,
            right=tuple(a + b for a, b in zip(payoffs, other_payoffs)),
        )
        return _compare(axiom, kind, witness, tol)

    if axiom is Axiom.EQUALITY:
        assert other is not None
        if not all(close(game.worth[m], other.worth[m], tol) for m in game.system):
            return _inapplicable(axiom, kind, "games differ on a known coalition")
        other_payoffs = _try_value(other, kind)
        if isinstance(other_payoffs, str):
            return _inapplicable(axiom, kind, other_payoffs)
        witness = AxiomWitness(
            games=(game, other), left=payoffs.payoffs, right=other_payoffs.payoffs
        )
        return _compare(axiom, kind, witness, tol)

    if axiom is Axiom.PHI_CONSISTENCY:
        if game.system != SetSystem.power_set(game.n):
            return _inapplicable(axiom, kind, "not every coalition is known")
        complete = CompleteGame(game.n, tuple(game.worth[m] for m in range(1 << game.n)))
        witness = AxiomWitness(
            games=(game,), left=payoffs.payoffs, right=shapley(complete).payoffs
        )
        return _compare(axiom, kind, witness, tol)

    raise InputError(f"{axiom.value} is not a basic axiom")


def null_players(game: CompleteGame, *, tol: float = DEFAULT_TOLERANCE) -> list[int]:
    """Players whose joining never changes the worth."""

    values = game.values
    return [
        bit + 1
        for bit in range(game.n)
        if all(
            close(values[mask | (1 << bit)], values[mask], tol)
            for mask in range(1 << game.n)
            if not mask >> bit & 1
        )
    ]


def equal_pairs(game: CompleteGame, *, tol: float = DEFAULT_TOLERANCE) -> list[tuple[int, int]]:
    """Pairs of players that are interchangeable in every coalition."""

    values = game.values
    pairs = []
    for i, j in combinations(range(game.n), 2):
        both = (1 << i) | (1 << j)
        if all(
            close(values[mask | (1 << i)], values[mask | (1 << j)], tol)
            for mask in range(1 << game.n)
            if not mask & both
        ):
            pairs.append((i + 1, j + 1))
    return pairs


def check_ud_class_axioms(
    game: CompleteGame,
    system: SetSystem,
    axiom: ClassAxiom | Axiom,
    *,
    tol: float = DEFAULT_TOLERANCE,
) -> AxiomReport:
    """Null player or equal treatment for the UD-value on games of the UD class."""

    axiom = Axiom(axiom)
    kind = ValueKind.UD
    if axiom not in (Axiom.NULL_PLAYER, Axiom.EQUAL_TREATMENT):
        raise InputError(f"{axiom.value} is not a UD-class axiom")
    if not is_in_ud_class(game, system, tol=tol):
        return _inapplicable(axiom, kind, "dividends vary inside a closure class")
    restricted = game.restrict(system)
    payoffs = _try_value(restricted, kind)
    if isinstance(payoffs, str):
        return _inapplicable(axiom, kind, payoffs)

    if axiom is Axiom.NULL_PLAYER:
        players = tuple(null_players(game, tol=tol))
        left = tuple(payoffs[p - 1] for p in players)
        right: tuple[Scalar, ...] = tuple(0 for _ in players)
    else:
        pairs = equal_pairs(game, tol=tol)
        players = tuple(p for pair in pairs for p in pair)
        left = tuple(payoffs[i - 1] for i, _ in pairs)
        right = tuple(payoffs[j - 1] for _, j in pairs)
    witness = AxiomWitness(
        games=(restricted,), complete=game, players=players, left=left, right=right
    )
    return _compare(axiom, kind, witness, tol)


def check_fairness(
    kind: ValueKind | str,
    game: IncompleteGame,
    coalition: Coalition,
    *,
    tol: float = DEFAULT_TOLERANCE,
) -> AxiomReport:
    """Forgetting ``v(S)`` must shift the payoff of every member of ``S`` equally."""

    kind = ValueKind.parse(kind)
    axiom = Axiom.FAIRNESS
    if coalition not in game.system:
        raise InputError(f"coalition {coalition} is not a known coalition")
    if coalition in (0, game.system.grand):
        return _inapplicable(axiom, kind, "the empty and the grand coalition cannot be forgotten")
    members = tuple(bit + 1 for bit in iter_bits(coalition))
    if len(members) < 2:
        return _inapplicable(axiom, kind, "a single player has nobody to be compared with")

    reduced_system = game.system.without_member(coalition)
    reduced = IncompleteGame(
        game.n,
        reduced_system,
        {mask: worth for mask, worth in game.worth.items() if mask != coalition},
    )
    full = _try_value(game, kind)
    if isinstance(full, str):
        return _inapplicable(axiom, kind, full)
    partial = _try_value(reduced, kind)
    if isinstance(partial, str):
        return _inapplicable(axiom, kind, f"reduced system: {partial}")

    shifts = [full[p - 1] - partial[p - 1] for p in members]
    witness = AxiomWitness(
        games=(game,),
        coalitions=(coalition,),
        players=members,
        left=tuple(shifts[:-1]),
        right=tuple(shifts[1:]),
    )
    return _compare(axiom, kind, witness, tol)


def check_balanced_contributions(
    kind: ValueKind | str,
    game: IncompleteGame,
    i: int,
    j: int,
    *,
    tol: float = DEFAULT_TOLERANCE,
) -> AxiomReport:
    """``f_i(v) - f_i(v_-j)`` must equal ``f_j(v) - f_j(v_-i)``."""

    kind = ValueKind.parse(kind)
    axiom = Axiom.BALANCED_CONTRIBUTIONS
    if i == j:
        raise InputError("balanced contributions compares two distinct players")
    for player in (i, j):
        if not 1 <= player <= game.n:
            raise InputError(f"player index {player} out of range 1..{game.n}")
    if game.n < 2:
        return _inapplicable(axiom, kind, "needs at least two players")

    full = _try_value(game, kind)
    if isinstance(full, str):
        return _inapplicable(axiom, kind, full)
    without_j = remove_player(game, j)
    without_i = remove_player(game, i)
    payoffs_without_j = _try_value(without_j.game, kind)
    payoffs_without_i = _try_value(without_i.game, kind)
    if isinstance(payoffs_without_j, str) or isinstance(payoffs_without_i, str):
        reason = payoffs_without_j if isinstance(payoffs_without_j, str) else payoffs_without_i
        return _inapplicable(axiom, kind, f"reduced game: {reason}")

    loss_i = full[i - 1] - payoffs_without_j[without_j.players.index(i)]
    loss_j = full[j - 1] - payoffs_without_i[without_i.players.index(j)]
    witness = AxiomWitness(games=(game,), players=(i, j), left=(loss_i,), right=(loss_j,))
    return _compare(axiom, kind, witness, tol)


def is_partner_coalition(
    game: IncompleteGame, partners: Coalition, *, tol: float = DEFAULT_TOLERANCE
) -> bool:
    """No proper part of ``partners`` adds known worth on its own.

    For every known ``S`` missing some partner: if ``S`` minus the partners is
    known it must be worth as much as ``S``; otherwise every known coalition
    inside ``S`` minus the partners must be worth zero.
    """

    for mask in game.system:
        if partners & ~mask == 0:
            continue
        rest = mask & ~partners
        if rest in game.system:
            if not close(game.worth[mask], game.worth[rest], tol):
                return False
        elif not all(
            close(game.worth[known], 0, tol)
            for known in game.system
            if known & rest == known
        ):
            return False
    return True


def find_partner_coalitions(
    game: IncompleteGame, *, tol: float = DEFAULT_TOLERANCE
) -> list[Coalition]:
    return [
        mask
        for mask in range(1, 1 << game.n)
        if mask.bit_count() >= 2 and is_partner_coalition(game, mask, tol=tol)
    ]


def check_symmetric_partnership(
    kind: ValueKind | str,
    game: IncompleteGame,
    partners: Coalition,
    *,
    tol: float = DEFAULT_TOLERANCE,
) -> AxiomReport:
    """Members of a coalition of partners must receive equal payoffs."""

    kind = ValueKind.parse(kind)
    axiom = Axiom.SYMMETRIC_PARTNERSHIP
    if partners.bit_count() < 2 or not is_partner_coalition(game, partners, tol=tol):
        return _inapplicable(axiom, kind, f"{partners} is not a coalition of partners")
    payoffs = _try_value(game, kind)
    if isinstance(payoffs, str):
        return _inapplicable(axiom, kind, payoffs)
    members = tuple(bit + 1 for bit in iter_bits(partners))
    shares = [payoffs[p - 1] for p in members]
    witness = AxiomWitness(
        games=(game,),
        coalitions=(partners,),
        players=members,
        left=tuple(shares[:-1]),
        right=tuple(shares[1:]),
    )
    return _compare(axiom, kind, witness, tol)


def check_invariance(
    kind: ValueKind | str,
    game: IncompleteGame,
    other: IncompleteGame,
    *,
    tol: float = DEFAULT_TOLERANCE,
) -> AxiomReport:
    """Games sharing the same completion must share the value."""

    kind = ValueKind.parse(kind)
    axiom = Axiom.INVARIANCE
    if other.n != game.n:
        raise InputError("paired games must share players")
    try:
        completion = special_game(game, kind)
        other_completion = special_game(other, kind)
    except (UnsupportedStructureError, NonUniqueValueError) as exc:
        return _inapplicable(axiom, kind, exc.code)
    if not all(close(a, b, tol) for a, b in zip(completion.values, other_completion.values)):
        return _inapplicable(axiom, kind, "the completions differ")
    witness = AxiomWitness(
        games=(game, other),
        left=value(game, kind).payoffs,
        right=value(other, kind).payoffs,
    )
    return _compare(axiom, kind, witness, tol)


def replay_witness(report: AxiomReport, *, tol: float = DEFAULT_TOLERANCE) -> Scalar:
    """Recompute the gap of a report from its witness alone."""

    witness = report.witness
    if witness is None:
        raise InputError("report carries no witness")
    axiom, kind = report.axiom, report.kind
    if axiom in (Axiom.EFFICIENCY, Axiom.PHI_CONSISTENCY):
        fresh = check_basic(kind, witness.games[0], axiom, tol=tol)
    elif axiom in (Axiom.ADDITIVITY, Axiom.EQUALITY):
        fresh = check_basic(kind, witness.games[0], axiom, witness.games[1], tol=tol)
    elif axiom in (Axiom.NULL_PLAYER, Axiom.EQUAL_TREATMENT):
        assert witness.complete is not None
        fresh = check_ud_class_axioms(witness.complete, witness.games[0].system, axiom, tol=tol)
    elif axiom is Axiom.FAIRNESS:
        fresh = check_fairness(kind, witness.games[0], witness.coalitions[0], tol=tol)
    elif axiom is Axiom.BALANCED_CONTRIBUTIONS:
        i, j = witness.players
        fresh = check_balanced_contributions(kind, witness.games[0], i, j, tol=tol)
    elif axiom is Axiom.SYMMETRIC_PARTNERSHIP:
        fresh = check_symmetric_partnership(kind, witness.games[0], witness.coalitions[0], tol=tol)
    else:
        fresh = check_invariance(kind, witness.games[0], witness.games[1], tol=tol)
    if fresh.discrepancy is None:
        raise InputError(f"{axiom.value} is no longer applicable to its witness")
    return fresh.discrepancy


def audit_game(
    game: IncompleteGame,
    rng_seed: int | np.random.SeedSequence | None = None,
    *,
    kinds: Iterable[ValueKind | str] = tuple(ValueKind),
    tol: float = DEFAULT_TOLERANCE,
) -> list[AxiomReport]:
    """Run every axiom check that makes sense for ``game``.

    Additivity pairs the game with a random game on the same system; equality
    pairs it with a copy; the UD-class checks run on the UD-game itself.
    """

    rng = np.random.default_rng(rng_seed)
    partner_game = random_game(game.system, rng)
    copy = IncompleteGame(game.n, game.system, dict(game.worth))
    partners = find_partner_coalitions(game, tol=tol)
    reports: list[AxiomReport] = []
    for raw_kind in kinds:
        kind = ValueKind.parse(raw_kind)
        reports.append(check_basic(kind, game, Axiom.EFFICIENCY, tol=tol))
        reports.append(check_basic(kind, game, Axiom.ADDITIVITY, partner_game, tol=tol))
        reports.append(check_basic(kind, game, Axiom.EQUALITY, copy, tol=tol))
        reports.append(check_basic(kind, game, Axiom.PHI_CONSISTENCY, tol=tol))
        for coalition in game.system.coalitions[1:]:
            if coalition != game.system.grand:
                reports.append(check_fairness(kind, game, coalition, tol=tol))
        for i, j in combinations(range(1, game.n + 1), 2):
            reports.append(check_balanced_contributions(kind, game, i, j, tol=tol))
        for mask in partners:
            reports.append(check_symmetric_partnership(kind, game, mask, tol=tol))
        if kind is ValueKind.UD:
            reports.extend(_ud_game_checks(game, tol))
    logger.info(
        "Audit finished: %s checks, %s violated",
        len(reports),
        sum(1 for report in reports if report.violated),
    )
    return reports


def _ud_game_checks(game: IncompleteGame, tol: float) -> list[AxiomReport]:
    try:
        completion = special_game(game, ValueKind.UD)
    except UnsupportedStructureError as exc:
        return [
            _inapplicable(axiom, ValueKind.UD, exc.code)
            for axiom in (Axiom.NULL_PLAYER, Axiom.EQUAL_TREATMENT, Axiom.INVARIANCE)
        ]
    full_information = completion.restrict(SetSystem.power_set(game.n))
    return [
        check_ud_class_axioms(completion, game.system, Axiom.NULL_PLAYER, tol=tol),
        check_ud_class_axioms(completion, game.system, Axiom.EQUAL_TREATMENT, tol=tol),
        check_invariance(ValueKind.UD, game, full_information, tol=tol),
    ]


def search_balanced_contributions(
    kind: ValueKind | str,
    systems: Iterable[SetSystem],
    games_per_system: int,
    rng_seed: int | np.random.SeedSequence | None = None,
    *,
    tol: float = DEFAULT_TOLERANCE,
) -> AxiomReport | None:
    """Random games on each system until some pair violates balanced contributions."""

    kind = ValueKind.parse(kind)
    rng = np.random.default_rng(rng_seed)
    for system in systems:
        for _ in range(games_per_system):
            game = random_game(system, rng)
            for i, j in combinations(range(1, system.n + 1), 2):
                report = check_balanced_contributions(kind, game, i, j, tol=tol)
                if report.violated:
                    logger.info("Balanced contributions witness on system %s", system.members)
                    return report
    return None

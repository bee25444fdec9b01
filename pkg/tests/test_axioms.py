"""Tests for axiom checks, witnesses and whole-game audits."""

from __future__ import annotations

from fractions import Fraction

import pytest

from igv.backend.axioms import (
    Axiom,
    AxiomStatus,
    audit_game,
    check_balanced_contributions,
    check_basic,
    check_fairness,
    check_invariance,
    check_symmetric_partnership,
    check_ud_class_axioms,
    find_partner_coalitions,
    replay_witness,
    search_balanced_contributions,
)
from igv.backend.axioms.models import AxiomReport
from igv.backend.domain.errors import InputError
from igv.backend.domain.models import CompleteGame, IncompleteGame, SetSystem, ValueKind
from igv.backend.domain.setsys import encode_system, enumerate_systems, is_intersection_closed
from igv.backend.domain.values import special_game

F = Fraction


def test_ud_violates_fairness_on_forgotten_pair(load_game) -> None:
    report = check_fairness("ud", load_game("example1"), 0b011)

    assert report.status is AxiomStatus.VIOLATED
    assert report.witness is not None
    assert report.witness.players == (1, 2)
    # shifts of 5/24 - 2/9 and 5/24 - 7/18
    assert report.witness.left == (F(-1, 72),)
    assert report.witness.right == (F(-13, 72),)
    assert report.discrepancy == F(1, 6)


def test_r_value_satisfies_fairness_on_same_instance(load_game) -> None:
    report = check_fairness("r", load_game("example1"), 0b011)
    assert report.status is AxiomStatus.SATISFIED
    assert report.discrepancy == 0


def test_fairness_inapplicable_for_singletons_and_grand(load_game) -> None:
    game = load_game("example1")
    assert check_fairness("ud", game, 0b001).status is AxiomStatus.INAPPLICABLE
    assert check_fairness("ud", game, 0b111).status is AxiomStatus.INAPPLICABLE


def test_fairness_rejects_unknown_coalition(load_game) -> None:
    with pytest.raises(InputError):
        check_fairness("ud", load_game("example1"), 0b110)


def test_example3_partners(load_game) -> None:
    game = load_game("example3")
    partners = find_partner_coalitions(game)
    assert 0b011 in partners
    assert 0b101 not in partners


def test_ud_violates_symmetric_partnership(load_game) -> None:
    report = check_symmetric_partnership("ud", load_game("example3"), 0b011)

    assert report.violated
    assert report.witness is not None
    assert report.witness.left == (0,)
    assert report.witness.right == (F(1, 4),)


def test_symmetric_partnership_needs_partners(load_game) -> None:
    report = check_symmetric_partnership("ud", load_game("example3"), 0b101)
    assert report.status is AxiomStatus.INAPPLICABLE


def test_balanced_contributions_holds_for_ud_on_closed_systems_n3() -> None:
    closed = [system for system in enumerate_systems(3) if is_intersection_closed(system)]
    assert search_balanced_contributions("ud", closed, 3, 0) is None


def test_balanced_contributions_example2(load_game) -> None:
    report = check_balanced_contributions("ud", load_game("example2"), 1, 3)
    assert report.status is AxiomStatus.SATISFIED


def test_balanced_contributions_inapplicable_when_grand_is_lost(load_game) -> None:
    report = check_balanced_contributions("ud", load_game("example3"), 1, 2)
    assert report.status is AxiomStatus.INAPPLICABLE
    assert "grand_coalition_missing" in report.note


def test_balanced_contributions_rejects_same_player(load_game) -> None:
    with pytest.raises(InputError):
        check_balanced_contributions("ud", load_game("example2"), 2, 2)


@pytest.mark.parametrize("kind", list(ValueKind))
def test_basic_axioms_on_example2(load_game, kind: ValueKind) -> None:
    game = load_game("example2")
    other = IncompleteGame(
        game.n, game.system, {mask: 2 * game.worth[mask] + 1 if mask else 0 for mask in game.system}
    )

    assert check_basic(kind, game, "efficiency").status is AxiomStatus.SATISFIED
    assert check_basic(kind, game, "additivity", other).status is AxiomStatus.SATISFIED
    assert check_basic(kind, game, "equality", other).status is AxiomStatus.INAPPLICABLE
    copy = IncompleteGame(game.n, game.system, dict(game.worth))
    assert check_basic(kind, game, "equality", copy).status is AxiomStatus.SATISFIED
    assert check_basic(kind, game, "phi_consistency").status is AxiomStatus.INAPPLICABLE


def test_phi_consistency_on_full_information() -> None:
    game = CompleteGame(2, (0, 1, 2, 4)).restrict(SetSystem.power_set(2))
    for kind in ValueKind:
        assert check_basic(kind, game, "phi_consistency").status is AxiomStatus.SATISFIED


def test_paired_axioms_need_second_game(load_game) -> None:
    with pytest.raises(InputError):
        check_basic("ud", load_game("example2"), "additivity")


def test_null_player_in_ud_class() -> None:
    game = CompleteGame(2, (0, 1, 0, 1))
    report = check_ud_class_axioms(game, SetSystem.power_set(2), Axiom.NULL_PLAYER)

    assert report.status is AxiomStatus.SATISFIED
    assert report.witness is not None and report.witness.players == (2,)


def test_equal_treatment_on_intro_ud_game(load_game) -> None:
    game = load_game("intro")
    completion = special_game(game, "ud")
    report = check_ud_class_axioms(completion, game.system, "equal_treatment")
    assert report.status is AxiomStatus.SATISFIED


def test_ud_class_axioms_outside_class() -> None:
    chain = encode_system([0b001, 0b011, 0b111], 3)
    game = CompleteGame(3, (0, 1, 1, 2, 0, 1, 1, 3))
    report = check_ud_class_axioms(game, chain, "null_player")
    assert report.status is AxiomStatus.INAPPLICABLE


def test_invariance_against_full_information(load_game) -> None:
    game = load_game("example2")
    full = special_game(game, "ud").restrict(SetSystem.power_set(3))
    assert check_invariance("ud", game, full).status is AxiomStatus.SATISFIED


def test_replay_witness_reproduces_gap(load_game) -> None:
    report = check_fairness("ud", load_game("example1"), 0b011)
    assert replay_witness(report) == report.discrepancy


def test_replay_witness_needs_witness() -> None:
    report = AxiomReport(Axiom.FAIRNESS, ValueKind.UD, AxiomStatus.INAPPLICABLE)
    with pytest.raises(InputError):
        replay_witness(report)


def test_audit_game_example1(load_game) -> None:
    reports = audit_game(load_game("example1"), 5)

    efficiency = [r for r in reports if r.axiom is Axiom.EFFICIENCY]
    assert len(efficiency) == len(ValueKind)
    assert all(r.status is AxiomStatus.SATISFIED for r in efficiency)
    assert any(r.violated and r.axiom is Axiom.FAIRNESS and r.kind is ValueKind.UD for r in reports)
    for report in reports:
        if report.violated:
            assert replay_witness(report) == pytest.approx(report.discrepancy)


def test_audit_game_restricted_kinds(load_game) -> None:
    reports = audit_game(load_game("example3"), 0, kinds=["r"])
    assert {report.kind for report in reports} == {ValueKind.R}

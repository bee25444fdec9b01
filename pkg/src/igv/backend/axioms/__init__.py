"""Axiom checks for values of incomplete games.
- Instance-level checks returning satisfied / violated / inapplicable
- Witnesses that reproduce every violation
- Whole-game audits and randomized counterexample search
"""

from .checks import (
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
from .models import Axiom, AxiomReport, AxiomStatus, AxiomWitness

__all__ = [
    "Axiom",
    "AxiomReport",
    "AxiomStatus",
    "AxiomWitness",
    "audit_game",
    "check_balanced_contributions",
    "check_basic",
    "check_fairness",
    "check_invariance",
    "check_symmetric_partnership",
    "check_ud_class_axioms",
    "find_partner_coalitions",
    "replay_witness",
    "search_balanced_contributions",
]

from __future__ import annotations

from dataclasses import dataclass, field
from enum import Enum

from igv.backend.domain.models import Coalition, CompleteGame, IncompleteGame, ValueKind
from igv.backend.domain.numeric import Scalar


class AxiomStatus(Enum):
    SATISFIED = "satisfied"
    VIOLATED = "violated"
    INAPPLICABLE = "inapplicable"


class Axiom(Enum):
    """Properties an allocation rule for incomplete games may satisfy."""

    EFFICIENCY = "efficiency"
    ADDITIVITY = "additivity"
    EQUALITY = "equality"
    PHI_CONSISTENCY = "phi_consistency"
    NULL_PLAYER = "null_player"
    EQUAL_TREATMENT = "equal_treatment"
    INVARIANCE = "invariance"
    FAIRNESS = "fairness"
    BALANCED_CONTRIBUTIONS = "balanced_contributions"
    SYMMETRIC_PARTNERSHIP = "symmetric_partnership"


@dataclass(frozen=True)
class AxiomWitness:
    """Instance a check was evaluated on, plus the two compared quantities."""

    games: tuple[IncompleteGame, ...]
    complete: CompleteGame | None = None
    coalitions: tuple[Coalition, ...] = ()
    players: tuple[int, ...] = ()
    left: tuple[Scalar, ...] = ()
    right: tuple[Scalar, ...] = ()


@dataclass(frozen=True)
class AxiomReport:
    axiom: Axiom
    kind: ValueKind
    status: AxiomStatus
    witness: AxiomWitness | None = None
    discrepancy: Scalar | None = None
    note: str = field(default="", compare=False)

    @property
    def violated(self) -> bool:
        return self.status is AxiomStatus.VIOLATED

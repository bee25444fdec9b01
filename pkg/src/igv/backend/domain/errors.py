"""Domain error taxonomy.

Every error raised by the toolkit carries a machine-readable ``code`` so the
frontend can report it without inspecting message text.
"""

from __future__ import annotations


class GameError(Exception):
    """Base class for all toolkit errors."""

    default_code = "game_error"

    def __init__(self, message: str, *, code: str | None = None) -> None:
        super().__init__(message)
        self.code = code or self.default_code


class InputError(GameError, ValueError):
    """Invalid argument supplied to a domain operation."""

    default_code = "invalid_input"


class ExhaustiveLimitError(InputError):
    """Exhaustive enumeration requested above the configured player limit."""

    default_code = "exhaustive_limit"


class UnsupportedStructureError(GameError):
    """The set system lies outside the domain of the requested operation."""

    default_code = "not_intersection_closed"


class NotExtendableError(GameError):
    """The incomplete game has no positive extension."""

    default_code = "not_p_extendable"


class NonUniqueValueError(GameError):
    """The UD conditions admit Shapley images that differ."""

    default_code = "ud_not_unique"


NOT_INTERSECTION_CLOSED = "not_intersection_closed"
GRAND_COALITION_MISSING = "grand_coalition_missing"

"""Domain package.
- Coalitions, set systems and the closure operator
- Complete and incomplete games, dividends and the Shapley value
- R-, IC- and UD-values, UD uniqueness and positive extensions
- Exact rank and affine solves backing the uniqueness decision
"""

from .errors import (
    ExhaustiveLimitError,
    GameError,
    InputError,
    NonUniqueValueError,
    NotExtendableError,
    UnsupportedStructureError,
)
from .games import (
    classify,
    dividend_transform,
    equal_division,
    is_in_ud_class,
    permute_players,
    random_game,
    remove_player,
    shapley,
    to_dividends,
    to_values,
)
from .models import (
    Allocation,
    ClosurePartition,
    CompleteGame,
    Dividends,
    IncompleteGame,
    SetSystem,
    ValueKind,
)
from .setsys import (
    closure,
    closure_partition,
    encode_coalition,
    encode_system,
    enumerate_systems,
    intersection_closure,
    is_intersection_closed,
    sample_system,
)
from .values import (
    delta_surpluses,
    expected_shapley_mc,
    is_p_extendable,
    is_ud_unique,
    special_game,
    ud_dividends,
    uniqueness_report,
    value,
)

__all__ = [
    "Allocation",
    "ClosurePartition",
    "CompleteGame",
    "Dividends",
    "ExhaustiveLimitError",
    "GameError",
    "IncompleteGame",
    "InputError",
    "NonUniqueValueError",
    "NotExtendableError",
    "SetSystem",
    "UnsupportedStructureError",
    "ValueKind",
    "classify",
    "closure",
    "closure_partition",
    "delta_surpluses",
    "dividend_transform",
    "encode_coalition",
    "encode_system",
    "enumerate_systems",
    "equal_division",
    "expected_shapley_mc",
    "intersection_closure",
    "is_in_ud_class",
    "is_intersection_closed",
    "is_p_extendable",
    "is_ud_unique",
    "permute_players",
    "random_game",
    "remove_player",
    "sample_system",
    "shapley",
    "special_game",
    "to_dividends",
    "to_values",
    "ud_dividends",
    "uniqueness_report",
    "value",
]

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from functools import cached_property
from typing import Iterator, Mapping

from .errors import InputError
from .numeric import Scalar, is_exact

Coalition = int
"""Coalition as an n-bit mask; player i occupies bit i-1."""


class ValueKind(Enum):
    """Allocation rules for incomplete games."""

    R = "r"
    IC = "ic"
    UD = "ud"

    @classmethod
    def parse(cls, text: str | "ValueKind") -> "ValueKind":
        if isinstance(text, ValueKind):
            return text
        try:
            return cls(text.strip().lower())
        except ValueError as exc:
            raise InputError(f"unknown value kind: {text!r}") from exc


def iter_bits(mask: int) -> Iterator[int]:
    """Yield the positions of the set bits of ``mask`` in ascending order."""

    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def popcount(mask: int) -> int:
    return mask.bit_count()


@dataclass(frozen=True)
class SetSystem:
    """Family of coalitions over ``n`` players, stored as a 2^n-bit mask."""

    n: int
    members: int

    def __post_init__(self) -> None:
        if self.n < 1:
            raise InputError(f"player count must be positive, got {self.n}")
        if self.members < 0 or self.members >> (1 << self.n):
            raise InputError(f"membership mask {self.members} too wide for n={self.n}")
        if not self.members & 1:
            raise InputError("set system must contain the empty coalition")

    @property
    def grand(self) -> Coalition:
        return (1 << self.n) - 1

    @property
    def has_grand(self) -> bool:
        return bool(self.members >> self.grand & 1)

    @cached_property
    def coalitions(self) -> tuple[Coalition, ...]:
        """Members in ascending mask order; a linear extension of inclusion."""

        return tuple(iter_bits(self.members))

    def __contains__(self, coalition: object) -> bool:
        if not isinstance(coalition, int) or coalition < 0:
            return False
        return bool(self.members >> coalition & 1)

    def __iter__(self) -> Iterator[Coalition]:
        return iter(self.coalitions)

    def __len__(self) -> int:
        return popcount(self.members)

    def with_member(self, coalition: Coalition) -> "SetSystem":
        return SetSystem(self.n, self.members | (1 << coalition))

    def without_member(self, coalition: Coalition) -> "SetSystem":
        if coalition == 0:
            raise InputError("the empty coalition cannot be removed")
        return SetSystem(self.n, self.members & ~(1 << coalition))

    @classmethod
    def power_set(cls, n: int) -> "SetSystem":
        return cls(n, (1 << (1 << n)) - 1)


@dataclass(frozen=True)
class ClosureClass:
    """Coalitions sharing one closure; ``representative`` is that closure."""

    representative: Coalition
    members: tuple[Coalition, ...]

    @property
    def size(self) -> int:
        return len(self.members)


@dataclass(frozen=True)
class ClosurePartition:
    n: int
    rep: tuple[Coalition, ...]
    classes: tuple[ClosureClass, ...]

    @cached_property
    def by_representative(self) -> dict[Coalition, ClosureClass]:
        return {cls.representative: cls for cls in self.classes}

    def size_of(self, representative: Coalition) -> int:
        return self.by_representative[representative].size


@dataclass(frozen=True)
class CompleteGame:
    """Worth of every coalition, indexed by mask."""

    n: int
    values: tuple[Scalar, ...]

    def __post_init__(self) -> None:
        if len(self.values) != 1 << self.n:
            raise InputError(f"expected {1 << self.n} values, got {len(self.values)}")
        if self.values[0] != 0:
            raise InputError("the empty coalition must have worth 0")

    def __getitem__(self, coalition: Coalition) -> Scalar:
        return self.values[coalition]

    def restrict(self, system: SetSystem) -> "IncompleteGame":
        """Reveal only the coalitions in ``system``."""

        if system.n != self.n:
            raise InputError("player count mismatch between game and set system")
        return IncompleteGame(self.n, system, {mask: self.values[mask] for mask in system})


@dataclass(frozen=True)
class Dividends:
    """Harsanyi dividends indexed by mask (``d_v`` or realized ``delta``)."""

    n: int
    d: tuple[Scalar, ...]

    def __post_init__(self) -> None:
        if len(self.d) != 1 << self.n:
            raise InputError(f"expected {1 << self.n} dividends, got {len(self.d)}")

    def __getitem__(self, coalition: Coalition) -> Scalar:
        return self.d[coalition]


@dataclass(frozen=True)
class IncompleteGame:
    """Worth known exactly on the members of ``system``."""

    n: int
    system: SetSystem
    worth: Mapping[Coalition, Scalar]

    def __post_init__(self) -> None:
        if self.system.n != self.n:
            raise InputError("player count mismatch between game and set system")
        if set(self.worth) != set(self.system.coalitions):
            raise InputError("worth must be defined exactly on the known coalitions")
        if self.worth[0] != 0:
            raise InputError("the empty coalition must have worth 0")

    @classmethod
    def from_values(cls, n: int, values: Mapping[Coalition, Scalar]) -> "IncompleteGame":
        """Build a game whose set system is the listed masks plus the empty set."""

        members = 1
        for mask in values:
            if mask < 0 or mask >> n:
                raise InputError(f"coalition mask {mask} out of range for n={n}")
            members |= 1 << mask
        worth = {0: 0, **values}
        return cls(n, SetSystem(n, members), worth)

    @property
    def grand_worth(self) -> Scalar:
        return self.worth[self.system.grand]

    @property
    def exact(self) -> bool:
        return is_exact(self.worth.values())

    def __getitem__(self, coalition: Coalition) -> Scalar:
        return self.worth[coalition]

    def _check_same_domain(self, other: "IncompleteGame") -> None:
        if other.n != self.n or other.system != self.system:
            raise InputError("paired games must share players and set system")

    def __add__(self, other: "IncompleteGame") -> "IncompleteGame":
        self._check_same_domain(other)
        return IncompleteGame(
            self.n, self.system, {mask: self.worth[mask] + other.worth[mask] for mask in self.system}
        )

    def scaled(self, factor: Scalar) -> "IncompleteGame":
        return IncompleteGame(
            self.n, self.system, {mask: factor * self.worth[mask] for mask in self.system}
        )


@dataclass(frozen=True)
class Allocation:
    """Payoff vector; entry k belongs to player k+1."""

    payoffs: tuple[Scalar, ...]

    def __len__(self) -> int:
        return len(self.payoffs)

    def __getitem__(self, index: int) -> Scalar:
        return self.payoffs[index]

    def __iter__(self) -> Iterator[Scalar]:
        return iter(self.payoffs)

    def total(self) -> Scalar:
        return sum(self.payoffs, 0)

    def l1_distance(self, other: "Allocation") -> Scalar:
        if len(other) != len(self):
            raise InputError("allocations differ in length")
        return sum((abs(a - b) for a, b in zip(self.payoffs, other.payoffs)), 0)

    def max_deviation(self, other: "Allocation") -> Scalar:
        if len(other) != len(self):
            raise InputError("allocations differ in length")
        return max(abs(a - b) for a, b in zip(self.payoffs, other.payoffs))

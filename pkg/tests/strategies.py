"""Hypothesis strategies for set systems, games and permutations."""

from __future__ import annotations

from fractions import Fraction

from hypothesis import strategies as st

from igv.backend.domain.models import CompleteGame, IncompleteGame, SetSystem
from igv.backend.domain.setsys import intersection_closure

players = st.integers(min_value=1, max_value=4)

small_fractions = st.fractions(min_value=-5, max_value=5, max_denominator=6)
positive_fractions = st.fractions(min_value=0, max_value=5, max_denominator=6)


@st.composite
def set_systems(draw, n: int | None = None, *, grand: bool = False) -> SetSystem:
    n = draw(players) if n is None else n
    members = draw(st.integers(min_value=0, max_value=(1 << (1 << n)) - 1)) | 1
    if grand:
        members |= 1 << ((1 << n) - 1)
    return SetSystem(n, members)


@st.composite
def closed_systems(draw, n: int | None = None) -> SetSystem:
    """Intersection-closed systems that contain the grand coalition."""

    return intersection_closure(draw(set_systems(n, grand=True)))


@st.composite
def games_on(draw, system: SetSystem, values=small_fractions) -> IncompleteGame:
    worth: dict[int, Fraction] = {0: Fraction(0)}
    for mask in system.coalitions[1:]:
        worth[mask] = draw(values)
    return IncompleteGame(system.n, system, worth)


@st.composite
def closed_games(draw, n: int | None = None, values=small_fractions) -> IncompleteGame:
    return draw(games_on(draw(closed_systems(n)), values))


@st.composite
def complete_games(draw, n: int | None = None) -> CompleteGame:
    n = draw(players) if n is None else n
    tail = draw(st.lists(small_fractions, min_size=(1 << n) - 1, max_size=(1 << n) - 1))
    return CompleteGame(n, (Fraction(0), *tail))


@st.composite
def permutations(draw, n: int) -> tuple[int, ...]:
    return tuple(draw(st.permutations(range(1, n + 1))))


@st.composite
def extendable_games(draw, n: int | None = None) -> IncompleteGame:
    """Closed games built from non-negative surpluses, so a positive extension exists."""

    system = draw(closed_systems(n))
    surplus: dict[int, Fraction] = {}
    worth: dict[int, Fraction] = {0: Fraction(0)}
    for mask in system.coalitions[1:]:
        surplus[mask] = draw(positive_fractions)
        worth[mask] = sum((s for sub, s in surplus.items() if sub & mask == sub), Fraction(0))
    return IncompleteGame(system.n, system, worth)

"""The finite-automaton robot contract.

A controller is a pure transition function over (state, local view) pairs.
The view is strictly local: the robot's own vertex, its four neighbours, and
the published state tokens of robots standing on those neighbours.  Nothing
else about the world may influence a transition, which is what makes the
locality fuzz test in the suite pass by construction.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Mapping

from .grid import Direction, DIRECTIONS, GridWorld, Position, UnknownRobot


@dataclass(frozen=True)
class LocalView:
    here_occupied: bool
    neighbor_occupied: Mapping[Direction, bool]
    adjacent_robots: Mapping[Direction, tuple[str, str] | None]

    def occupied(self, d: Direction) -> bool:
        return self.neighbor_occupied[d]

    def robot(self, d: Direction) -> tuple[str, str] | None:
        return self.adjacent_robots[d]

    def robot_dir(self, rid_prefix: str | None = None) -> Direction | None:
        """Direction of an adjacent robot (any, or one whose id starts with prefix)."""
        for d in DIRECTIONS:
            r = self.adjacent_robots[d]
            if r is not None and (rid_prefix is None or r[0].startswith(rid_prefix)):
                return d
        return None


# Actions ---------------------------------------------------------------------

@dataclass(frozen=True)
class Move:
    direction: Direction

    def __str__(self) -> str:
        return f"Move({self.direction.name})"


@dataclass(frozen=True)
class PlaceTileHere:
    def __str__(self) -> str:
        return "Place"


@dataclass(frozen=True)
class RemoveTileHere:
    def __str__(self) -> str:
        return "Remove"


@dataclass(frozen=True)
class Stay:
    def __str__(self) -> str:
        return "Stay"


Action = Move | PlaceTileHere | RemoveTileHere | Stay


class IllegalState(Exception):
    """The protocol's transition table has no entry for (state, view).

    Signals a protocol bug, not a user error.
    """


def observe(world: GridWorld, rid: str,
            tokens: Mapping[str, str] | None = None) -> LocalView:
    """Faithful snapshot of the robot's 5-vertex neighbourhood.

    ``tokens`` maps robot ids to their currently published state tokens;
    adjacent robots show up in the view together with that token.
    """
    if rid not in world.robots:
        raise UnknownRobot(rid)
    tokens = tokens or {}
    pos = world.robots[rid]
    here = pos in world.tiles
    occ: dict[Direction, bool] = {}
    bots: dict[Direction, tuple[str, str] | None] = {}
    by_pos = {p: r for r, p in world.robots.items() if r != rid}
    for d in DIRECTIONS:
        q = d.step(pos)
        occ[d] = q in world.tiles
        other = by_pos.get(q)
        bots[d] = (other, tokens.get(other, "")) if other is not None else None
    return LocalView(here, occ, bots)


class Protocol:
    """Base class for robot controllers.

    Subclasses provide pure ``step`` transitions plus the bookkeeping needed
    by the engine and the test suite: initial states, terminal predicate,
    published tokens, and an input-independent enumeration of the state
    space (finite for fixed construction parameters).
    """

    name = "protocol"

    def initial_states(self, world: GridWorld) -> dict[str, object]:
        raise NotImplementedError

    def step(self, state, view: LocalView):
        """Pure transition: (state, view) -> (state', action)."""
        raise NotImplementedError

    def is_done(self, state) -> bool:
        raise NotImplementedError

    def token(self, state) -> str:
        """Short stable string other robots see during their Look phase."""
        return state_token(state)

    def enumerate_states(self) -> frozenset:
        raise NotImplementedError


def state_token(state) -> str:
    return str(state)


def step_controller(protocol: Protocol, state, view: LocalView):
    """Apply one Compute step; wraps transition faults in IllegalState."""
    try:
        result = protocol.step(state, view)
    except IllegalState:
        raise
    except Exception as exc:  # a fall-through in the table is a protocol bug
        raise IllegalState(f"{protocol.name}: no transition for {state} / view {view}: {exc}") from exc
    if result is None:
        raise IllegalState(f"{protocol.name}: no transition for state {state}")
    return result

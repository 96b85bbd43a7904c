"""Shared plumbing for the protocol controllers.

All controllers in this package keep their working memory in small frozen
dataclasses whose fields range over finite domains that depend only on the
construction parameter c (never on the input shape), so the full state space
can be enumerated mechanically.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, replace

from ..grid import Direction, DIRECTIONS, GridWorld
from ..automaton import (
    IllegalState,
    LocalView,
    Move,
    PlaceTileHere,
    Protocol,
    RemoveTileHere,
    Stay,
)

N, E, S, W = Direction.N, Direction.E, Direction.S, Direction.W
DIR_OR_NONE = (None,) + DIRECTIONS


def dirname(d: Direction | None) -> str:
    return d.name if d is not None else "-"


def enumerate_product(state_cls, domains: dict[str, tuple]) -> frozenset:
    """Cartesian-product enumeration of a controller state space."""
    names = list(domains)
    out = []
    for combo in itertools.product(*(domains[n] for n in names)):
        out.append(state_cls(**dict(zip(names, combo))))
    return frozenset(out)


# --- follower memory ----------------------------------------------------------
#
# The trailing robot steps onto the vertex the leader just vacated.  Because
# the engine activates the leader first in every round, the follower usually
# cannot see the leader at Look time and walks on remembered directions: one
# slot for the pending step, one for the announced turn.  The leader announces
# every direction change with a Stay whose token names the new direction.

@dataclass(frozen=True)
class FollowMemory:
    mem: Direction | None = None
    pend: Direction | None = None


def follow_step(memory: FollowMemory, view: LocalView, leader: str,
                lead_prefix: str = "lead") -> tuple[FollowMemory, Move | Stay] | None:
    """One activation of the generic trail-follower.

    Returns None when the view shows the leader publishing something other
    than a lead token (caller decides what that means).
    """
    for d in DIRECTIONS:
        r = view.robot(d)
        if r is not None and r[0] == leader:
            token = r[1]
            if token.startswith(lead_prefix + ":"):
                new = token.split(":", 1)[1]
                nd = Direction[new] if new != "-" else None
                return FollowMemory(mem=d, pend=nd), Stay()
            return None
    if memory.mem is not None:
        nxt = FollowMemory(mem=memory.pend, pend=None)
        return nxt, Move(memory.mem)
    return FollowMemory(), Stay()

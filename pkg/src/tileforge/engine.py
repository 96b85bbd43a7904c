"""Deterministic scheduler: sequential round-robin activation with tracing.

One activation = one full Look-Compute-Move cycle for one robot.  Robots are
activated in fixed id order each round; finished robots are skipped.  After
every activation the connectivity invariant is re-checked (with cheap exact
short-cuts for actions that provably cannot disconnect the union graph).
"""

from __future__ import annotations

import os
from dataclasses import dataclass, field

from .grid import Direction, GridWorld, Position, neighbors4
from .automaton import (
    Action,
    IllegalState,
    LocalView,
    Move,
    PlaceTileHere,
    Protocol,
    RemoveTileHere,
    Stay,
    observe,
    step_controller,
)

DEFAULT_MAX_STEPS = 2_000_000


def default_max_steps() -> int:
    env = os.environ.get("TILEFORGE_MAX_STEPS")
    if env:
        return int(env)
    return DEFAULT_MAX_STEPS


class ConnectivityViolation(Exception):
    def __init__(self, record: "TraceRecord"):
        super().__init__(f"connectivity lost at step {record.step} ({record.robot}: {record.action})")
        self.record = record


class StepBudgetExceeded(Exception):
    pass


class InvalidAction(Exception):
    """A controller emitted an action the model forbids (protocol bug)."""


@dataclass(frozen=True)
class TraceRecord:
    step: int
    robot: str
    state_pre: str
    view: LocalView | None
    action: str
    state_post: str
    connected: bool

    def line(self) -> str:
        return (f"step={self.step} robot={self.robot} state_pre={self.state_pre} "
                f"action={self.action} state_post={self.state_post} "
                f"connected={'true' if self.connected else 'false'}")


@dataclass
class Trace:
    records: list[TraceRecord] = field(default_factory=list)
    moves: int = 0
    tile_ops: int = 0
    stays: int = 0
    terminated: bool = False
    visit_counts: dict[Position, int] = field(default_factory=dict)
    visited: set[Position] = field(default_factory=set)
    placed: set[Position] = field(default_factory=set)

    @property
    def activations(self) -> int:
        return self.moves + self.tile_ops + self.stays

    def serialize(self) -> str:
        header = "tileforge-trace v1"
        body = "\n".join(r.line() for r in self.records)
        return header + ("\n" + body if body else "") + "\n"


def count_steps(trace: Trace) -> int:
    """Counted steps: every activation except pure-Stay republishes."""
    return trace.moves + trace.tile_ops


def count_auxiliary(trace: Trace) -> int:
    return trace.stays


@dataclass
class RunConfig:
    max_steps: int = 0  # 0 -> default budget (env-overridable)
    check_connectivity: bool = True
    record_trace: bool = True

    def budget(self) -> int:
        if self.max_steps <= 0:
            return default_max_steps()
        return self.max_steps


def run(world: GridWorld, robots: dict[str, object], protocol: Protocol,
        config: RunConfig | None = None) -> tuple[Trace, GridWorld]:
    """Run ``protocol`` to termination on a copy of ``world``.

    ``robots`` maps robot id -> initial controller state.  Returns the trace
    and the final world.  Raises ConnectivityViolation / StepBudgetExceeded /
    InvalidAction / IllegalState on failure, with the offending record noted.
    """
    config = config or RunConfig()
    world = world.copy()
    states = dict(robots)
    order = sorted(states)
    for rid in order:
        if rid not in world.robots:
            raise ValueError(f"robot {rid} has a state but no position in the world")

    trace = Trace()
    budget = config.budget()
    step_index = 0
    for p in world.robots.values():
        trace.visited.add(p)
        trace.visit_counts[p] = trace.visit_counts.get(p, 0) + 1

    while True:
        if all(protocol.is_done(states[r]) for r in order):
            trace.terminated = True
            break
        progressed = False
        for rid in order:
            state = states[rid]
            if protocol.is_done(state):
                continue
            progressed = True
            if step_index >= budget:
                raise StepBudgetExceeded(f"budget of {budget} activations exhausted")
            tokens = {r: protocol.token(states[r]) for r in order}
            view = observe(world, rid, tokens)
            new_state, action = step_controller(protocol, state, view)
            connected = _apply(world, rid, action, trace, config)
            states[rid] = new_state
            if config.record_trace:
                trace.records.append(TraceRecord(
                    step_index, rid, protocol.token(state), view,
                    str(action), protocol.token(new_state), connected))
            step_index += 1
            if not connected:
                rec = TraceRecord(step_index - 1, rid, protocol.token(state), view,
                                  str(action), protocol.token(new_state), False)
                raise ConnectivityViolation(rec)
        if not progressed:
            trace.terminated = True
            break
    return trace, world


def _apply(world: GridWorld, rid: str, action: Action, trace: Trace,
           config: RunConfig) -> bool:
    """Mutate the world by one action; return the post-action connectivity."""
    pos = world.robots[rid]
    needs_check = False
    if isinstance(action, Stay):
        trace.stays += 1
    elif isinstance(action, Move):
        target = action.direction.step(pos)
        occupant = world.robot_at(target)
        if occupant is not None:
            raise InvalidAction(f"{rid} moved into {occupant} at {target}")
        world.robots[rid] = target
        trace.moves += 1
        trace.visited.add(target)
        trace.visit_counts[target] = trace.visit_counts.get(target, 0) + 1
        # Leaving a tiled vertex cannot disconnect; landing next to any
        # occupied vertex keeps the newcomer attached.
        left_tiled = pos in world.tiles
        attached = (target in world.tiles
                    or any(q in world.tiles or world.robot_at(q) is not None
                           for q in neighbors4(target)))
        needs_check = not (left_tiled and attached)
    elif isinstance(action, PlaceTileHere):
        if pos in world.tiles:
            raise InvalidAction(f"{rid} placed a tile on occupied vertex {pos}")
        world.tiles.add(pos)
        trace.tile_ops += 1
        trace.placed.add(pos)
        # merging only: a placement at the robot's own vertex never disconnects
        needs_check = False
    elif isinstance(action, RemoveTileHere):
        if pos not in world.tiles:
            raise InvalidAction(f"{rid} removed a tile from empty vertex {pos}")
        world.tiles.remove(pos)
        trace.tile_ops += 1
        needs_check = True
    else:
        raise InvalidAction(f"unknown action {action!r}")

    if not config.check_connectivity:
        return True
    if not needs_check:
        return True
    return world.is_connected()

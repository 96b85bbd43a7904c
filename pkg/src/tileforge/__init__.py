"""tileforge: finite-automaton robots rearranging passive tiles on the square grid.

The package simulates a hybrid programmable-matter system: passive unit
tiles forming polyominoes, and one or two constant-memory robots that walk
the grid, sense only their own vertex and its four neighbours, and place or
remove tiles -- all while the union of tiles and robots stays connected.
"""

from .grid import (
    Direction,
    GridWorld,
    Polyomino,
    Extents,
    AlreadyOccupied,
    NotOccupied,
    parse_world,
    dump_world,
)
from .engine import run, RunConfig, Trace, count_steps

__all__ = [
    "Direction",
    "GridWorld",
    "Polyomino",
    "Extents",
    "AlreadyOccupied",
    "NotOccupied",
    "parse_world",
    "dump_world",
    "run",
    "RunConfig",
    "Trace",
    "count_steps",
]

"""Canonical initial configurations for the protocols.

Each protocol op has a conventional starting arrangement; these builders
produce it from a bare polyomino so ops can be tested and chained without
rerunning their producers.
"""

from __future__ import annotations

from .grid import Direction, GridWorld, Polyomino, Position
from .oracles import bounding_ring, scale_naive


def anchor_cell(p: Polyomino) -> Position:
    """Deterministic start tile: northernmost, then easternmost."""
    return max(p.cells, key=lambda q: (q[1], q[0]))


def bbox_start_world(p: Polyomino) -> GridWorld:
    """Two robots for the general bounding-box build: R2 on the anchor tile,
    R1 on an adjacent tile when one exists, else on the empty vertex north."""
    world = GridWorld(set(p.cells))
    a = anchor_cell(p)
    world.add_robot("R2", a)
    for d in (Direction.S, Direction.W, Direction.E, Direction.N):
        q = d.step(a)
        if q in p.cells:
            world.add_robot("R1", q)
            return world
    world.add_robot("R1", Direction.N.step(a))
    return world


def bbox_simple_start_world(p: Polyomino) -> GridWorld:
    """One robot on the anchor tile (simple-polyomino variant)."""
    world = GridWorld(set(p.cells))
    world.add_robot("R1", anchor_cell(p))
    return world


def south_connection_column(p: Polyomino) -> int:
    """Westernmost column of the shape's bottom row."""
    y0 = p.extents().y_min
    return min(x for x, y in p.cells if y == y0)


def boxed_world(p: Polyomino, connector_tile: bool = False,
                connection_col: int | None = None) -> GridWorld:
    """A finished bounding-box configuration: P, its ring, robots parked at
    the south connection (R1 on the ring's south row, R2 one above).  With
    ``connector_tile`` a tile occupies R2's vertex, as after the imperfect
    bounding-box finish."""
    ext = p.extents()
    xc = connection_col if connection_col is not None else south_connection_column(p)
    if (xc, ext.y_min) not in p.cells:
        raise ValueError("connection column must carry a cell of the bottom row")
    world = GridWorld(set(p.cells) | set(bounding_ring(p)))
    if connector_tile:
        world.place_tile((xc, ext.y_min - 1))
    world.add_robot("R1", (xc, ext.y_min - 2))
    world.add_robot("R2", (xc, ext.y_min - 1))
    return world


def monotone_start_world(p: Polyomino) -> GridWorld:
    """Two robots placed together on the polyomino for monotone scaling."""
    world = GridWorld(set(p.cells))
    a = anchor_cell(p)
    world.add_robot("R1", a)
    for d in (Direction.S, Direction.W, Direction.E, Direction.N):
        q = d.step(a)
        if q in p.cells:
            world.add_robot("R2", q)
            return world
    world.add_robot("R2", Direction.N.step(a))
    return world


def segment_rectangle_world(p: Polyomino, c: int) -> GridWorld:
    """The down-scaling start: the full cw x ch segment rectangle encoding P
    (occupied cell -> solid block, empty -> block blank at its centre), the
    three-tile southern rail extension to the east, and one robot on the
    rail's end."""
    scaled = scale_naive(p, c)
    ext = p.extents()
    tiles: set[Position] = set()
    blank = c // 2
    for gx in range(ext.x_min, ext.x_max + 1):
        for gy in range(ext.y_min, ext.y_max + 1):
            occupied = (gx, gy) in p.cells
            for i in range(c):
                for j in range(c):
                    if not occupied and i == blank and j == blank:
                        continue
                    tiles.add((c * gx + i, c * gy + j))
    x_east = c * (ext.x_max + 1) - 1
    y_south = c * ext.y_min
    for k in range(1, 4):
        tiles.add((x_east + k, y_south))
    world = GridWorld(tiles)
    world.add_robot("R1", (x_east + 3, y_south))
    return world

"""Sparse infinite-grid world state and polyomino geometry.

Positions are plain ``(x, y)`` integer tuples; y grows northward.  The world
holds a finite set of occupied vertices (tiles) plus the robots standing on
vertices.  Connectivity is always judged on the union graph of tiles and
robot positions under 4-adjacency.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field
from enum import Enum
from typing import Iterable, Iterator

Position = tuple[int, int]


class Direction(Enum):
    N = (0, 1)
    E = (1, 0)
    S = (0, -1)
    W = (-1, 0)

    @property
    def dx(self) -> int:
        return self.value[0]

    @property
    def dy(self) -> int:
        return self.value[1]

    def step(self, p: Position, n: int = 1) -> Position:
        return (p[0] + n * self.value[0], p[1] + n * self.value[1])

    @property
    def opposite(self) -> "Direction":
        return _OPPOSITE[self]

    @property
    def right(self) -> "Direction":
        """90 degrees clockwise (a right turn for a walker facing this way)."""
        return _RIGHT[self]

    @property
    def left(self) -> "Direction":
        return _LEFT[self]


_RIGHT = {Direction.N: Direction.E, Direction.E: Direction.S,
          Direction.S: Direction.W, Direction.W: Direction.N}
_LEFT = {v: k for k, v in _RIGHT.items()}
_OPPOSITE = {Direction.N: Direction.S, Direction.S: Direction.N,
             Direction.E: Direction.W, Direction.W: Direction.E}

DIRECTIONS = (Direction.N, Direction.E, Direction.S, Direction.W)


def neighbors4(p: Position) -> tuple[Position, Position, Position, Position]:
    x, y = p
    return ((x, y + 1), (x + 1, y), (x, y - 1), (x - 1, y))


class AlreadyOccupied(Exception):
    """A tile was placed on a vertex that already holds one."""


class NotOccupied(Exception):
    """A tile was removed from a vertex that has none."""


class UnknownRobot(Exception):
    pass


@dataclass
class GridWorld:
    """Mutable world snapshot: tile set plus robot registry (id -> position)."""

    tiles: set[Position] = field(default_factory=set)
    robots: dict[str, Position] = field(default_factory=dict)

    def copy(self) -> "GridWorld":
        return GridWorld(set(self.tiles), dict(self.robots))

    def place_tile(self, p: Position) -> None:
        if p in self.tiles:
            raise AlreadyOccupied(f"tile already at {p}")
        self.tiles.add(p)

    def remove_tile(self, p: Position) -> None:
        if p not in self.tiles:
            raise NotOccupied(f"no tile at {p}")
        self.tiles.remove(p)

    def add_robot(self, rid: str, p: Position) -> None:
        if rid in self.robots:
            raise ValueError(f"duplicate robot id {rid!r}")
        if p in self.robots.values():
            raise ValueError(f"two robots on {p}")
        self.robots[rid] = p

    def move_robot(self, rid: str, d: Direction) -> None:
        if rid not in self.robots:
            raise UnknownRobot(rid)
        self.robots[rid] = d.step(self.robots[rid])

    def robot_at(self, p: Position) -> str | None:
        for rid, q in self.robots.items():
            if q == p:
                return rid
        return None

    def occupied_vertices(self) -> set[Position]:
        """Tiles plus robot positions: the vertex set of the union graph."""
        return self.tiles | set(self.robots.values())

    def is_connected(self) -> bool:
        return _connected(self.occupied_vertices())

    def translate(self, dx: int, dy: int) -> "GridWorld":
        return GridWorld(
            {(x + dx, y + dy) for x, y in self.tiles},
            {r: (x + dx, y + dy) for r, (x, y) in self.robots.items()},
        )


def _connected(cells: set[Position]) -> bool:
    if not cells:
        return True
    seen = set()
    start = next(iter(cells))
    queue = deque([start])
    seen.add(start)
    while queue:
        p = queue.popleft()
        for q in neighbors4(p):
            if q in cells and q not in seen:
                seen.add(q)
                queue.append(q)
    return len(seen) == len(cells)


class Extents(tuple):
    """Axis-aligned bounding extents (x_min, x_max, y_min, y_max)."""

    def __new__(cls, x_min: int, x_max: int, y_min: int, y_max: int):
        return super().__new__(cls, (x_min, x_max, y_min, y_max))

    @property
    def x_min(self) -> int:
        return self[0]

    @property
    def x_max(self) -> int:
        return self[1]

    @property
    def y_min(self) -> int:
        return self[2]

    @property
    def y_max(self) -> int:
        return self[3]

    @property
    def w(self) -> int:
        return self[1] - self[0] + 1

    @property
    def h(self) -> int:
        return self[3] - self[2] + 1


def extents_of(cells: Iterable[Position]) -> Extents:
    xs = [p[0] for p in cells]
    ys = [p[1] for p in cells]
    if not xs:
        raise ValueError("empty cell set has no extents")
    return Extents(min(xs), max(xs), min(ys), max(ys))


@dataclass(frozen=True)
class Polyomino:
    """A nonempty 4-connected set of occupied cells.

    Note on monotonicity: for a 4-connected polyomino, "every vertical line
    crosses the boundary at most twice" is equivalent to "the occupied cells
    of every column form one contiguous interval".  A vertical line through
    column x enters/exits the shape once per maximal run of occupied cells,
    so at most two boundary crossings means at most one run; conversely one
    run yields exactly two crossings.  ``is_x_monotone`` tests the interval
    form, ``is_y_monotone`` the transpose.
    """

    cells: frozenset[Position]

    def __post_init__(self):
        if not self.cells:
            raise ValueError("polyomino must be nonempty")
        if not _connected(set(self.cells)):
            raise ValueError("polyomino cells must form one 4-connected component")

    @staticmethod
    def of(cells: Iterable[Position]) -> "Polyomino":
        return Polyomino(frozenset(cells))

    def __len__(self) -> int:
        return len(self.cells)

    def __iter__(self) -> Iterator[Position]:
        return iter(self.cells)

    def __contains__(self, p: Position) -> bool:
        return p in self.cells

    def extents(self) -> Extents:
        return extents_of(self.cells)

    def boundary(self) -> frozenset[Position]:
        """Cells with at least one of their 4 neighbours outside the shape."""
        return frozenset(
            p for p in self.cells if any(q not in self.cells for q in neighbors4(p))
        )

    def has_hole(self) -> bool:
        """True iff the complement has a bounded component (shape is non-simple)."""
        ext = self.extents()
        x0, x1 = ext.x_min - 1, ext.x_max + 1
        y0, y1 = ext.y_min - 1, ext.y_max + 1
        total_empty = (x1 - x0 + 1) * (y1 - y0 + 1) - len(self.cells)
        seen = set()
        queue = deque([(x0, y0)])
        seen.add((x0, y0))
        while queue:
            x, y = queue.popleft()
            for q in ((x, y + 1), (x + 1, y), (x, y - 1), (x - 1, y)):
                if (x0 <= q[0] <= x1 and y0 <= q[1] <= y1
                        and q not in self.cells and q not in seen):
                    seen.add(q)
                    queue.append(q)
        return len(seen) != total_empty

    def is_x_monotone(self) -> bool:
        return _columns_are_intervals(self.cells, axis=0)

    def is_y_monotone(self) -> bool:
        return _columns_are_intervals(self.cells, axis=1)

    def translate(self, dx: int, dy: int) -> "Polyomino":
        return Polyomino(frozenset((x + dx, y + dy) for x, y in self.cells))

    def normalize(self) -> "Polyomino":
        """Translate so the extents' south-west corner sits at the origin."""
        ext = self.extents()
        return self.translate(-ext.x_min, -ext.y_min)


def _columns_are_intervals(cells: frozenset[Position], axis: int) -> bool:
    lanes: dict[int, list[int]] = {}
    for p in cells:
        lanes.setdefault(p[axis], []).append(p[1 - axis])
    for vals in lanes.values():
        if max(vals) - min(vals) + 1 != len(vals):
            return False
    return True


def same_up_to_translation(a: Iterable[Position], b: Iterable[Position]) -> bool:
    sa, sb = set(a), set(b)
    if len(sa) != len(sb):
        return False
    if not sa:
        return True
    ax = min(p[0] for p in sa)
    ay = min(p[1] for p in sa if p[0] == ax)
    bx = min(p[0] for p in sb)
    by = min(p[1] for p in sb if p[0] == bx)
    dx, dy = bx - ax, by - ay
    return {(x + dx, y + dy) for x, y in sa} == sb


# --- text format ------------------------------------------------------------
#
# Rectangular ASCII grid, first line = northernmost row:
#   '#' tile        '.' empty
#   '1','2' robot R1/R2 standing on a tile
#   'a','b' robot R1/R2 standing on an empty vertex

_ROBOT_ON_TILE = {"1": "R1", "2": "R2"}
_ROBOT_ON_EMPTY = {"a": "R1", "b": "R2"}


class FormatError(ValueError):
    pass


def parse_world(text: str) -> GridWorld:
    lines = [ln for ln in text.splitlines() if ln.strip() != ""]
    if not lines:
        raise FormatError("empty polyomino file")
    width = len(lines[0])
    if any(len(ln) != width for ln in lines):
        raise FormatError("non-rectangular grid")
    world = GridWorld()
    height = len(lines)
    for row, ln in enumerate(lines):
        y = height - 1 - row
        for x, ch in enumerate(ln):
            if ch == "#":
                world.tiles.add((x, y))
            elif ch == ".":
                continue
            elif ch in _ROBOT_ON_TILE:
                world.tiles.add((x, y))
                world.add_robot(_ROBOT_ON_TILE[ch], (x, y))
            elif ch in _ROBOT_ON_EMPTY:
                world.add_robot(_ROBOT_ON_EMPTY[ch], (x, y))
            else:
                raise FormatError(f"unexpected character {ch!r} at row {row}, col {x}")
    return world


def dump_world(world: GridWorld) -> str:
    occ = world.occupied_vertices()
    if not occ:
        return ".\n"
    ext = extents_of(occ)
    by_pos = {p: rid for rid, p in world.robots.items()}
    rows = []
    for y in range(ext.y_max, ext.y_min - 1, -1):
        row = []
        for x in range(ext.x_min, ext.x_max + 1):
            p = (x, y)
            rid = by_pos.get(p)
            if rid is not None:
                if p in world.tiles:
                    row.append("1" if rid == "R1" else "2")
                else:
                    row.append("a" if rid == "R1" else "b")
            elif p in world.tiles:
                row.append("#")
            else:
                row.append(".")
        rows.append("".join(row))
    return "\n".join(rows) + "\n"


def parse_polyomino(text: str) -> Polyomino:
    world = parse_world(text)
    if world.robots:
        raise FormatError("expected a plain polyomino file without robots")
    return Polyomino(frozenset(world.tiles))


def dump_polyomino(p: Polyomino) -> str:
    return dump_world(GridWorld(set(p.cells)))

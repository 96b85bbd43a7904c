"""Independent reference implementations used to validate protocol output.

Everything here is deliberately written against the geometric definitions,
not against any protocol code, so the two sides of every check stay
independent.
"""

from __future__ import annotations

import random
from typing import Iterable

from .grid import Direction, Polyomino, Position, extents_of, neighbors4


class NotAScaledShape(Exception):
    pass


def scale_naive(p: Polyomino, c: int) -> Polyomino:
    """Pixel replication: every cell becomes a c x c block."""
    if c < 1:
        raise ValueError("scale factor must be >= 1")
    cells = set()
    for x, y in p:
        for i in range(c):
            for j in range(c):
                cells.add((c * x + i, c * y + j))
    return Polyomino(frozenset(cells))


def downscale_naive(p: Polyomino, c: int) -> Polyomino:
    """Inverse of scale_naive; raises NotAScaledShape if no preimage exists."""
    if c < 1:
        raise ValueError("scale factor must be >= 1")
    q = frozenset((x // c, y // c) for x, y in p)
    candidate = Polyomino(q)
    if scale_naive(candidate, c).cells != p.cells:
        raise NotAScaledShape(f"not a {c}-scaled shape")
    return candidate


def replicate_y(p: Polyomino, c: int) -> Polyomino:
    """Columnwise y-replication only (the intermediate of monotone scaling)."""
    cells = {(x, c * y + j) for x, y in p for j in range(c)}
    return Polyomino(frozenset(cells))


def bounding_ring(p: Polyomino) -> frozenset[Position]:
    """Perimeter of the extents padded by two: a unit ring with one cell of
    clearance between the shape and the ring on every side."""
    ext = p.extents()
    x0, x1 = ext.x_min - 2, ext.x_max + 2
    y0, y1 = ext.y_min - 2, ext.y_max + 2
    ring = set()
    for x in range(x0, x1 + 1):
        ring.add((x, y0))
        ring.add((x, y1))
    for y in range(y0, y1 + 1):
        ring.add((x0, y))
        ring.add((x1, y))
    return frozenset(ring)


# --- outer-boundary polygon walk ---------------------------------------------

_EDGE_CELLS = {
    # heading -> (left cell offset, right cell offset) relative to the vertex
    Direction.N: ((-1, 0), (0, 0)),
    Direction.E: ((0, 0), (0, -1)),
    Direction.S: ((0, -1), (-1, -1)),
    Direction.W: ((-1, -1), (-1, 0)),
}


def convex_corner_count(p: Polyomino) -> int:
    """Number of convex corners of the outer boundary polygon.

    The outer boundary is walked counterclockwise (interior on the left);
    convex corners are the left turns.  At diagonal pinch points the walk
    prefers the turn that keeps following the single outer contour.
    """
    cells = p.cells
    start_cell = min(cells, key=lambda q: (q[1], q[0]))
    start_vertex = start_cell  # its SW polygon corner
    heading = Direction.E

    def valid(vertex: Position, d: Direction) -> bool:
        (lx, ly), (rx, ry) = _EDGE_CELLS[d]
        left = (vertex[0] + lx, vertex[1] + ly) in cells
        right = (vertex[0] + rx, vertex[1] + ry) in cells
        return left and not right

    corners = 0
    vertex = start_vertex
    d = heading
    while True:
        vertex = d.step(vertex)
        # pinch-safe preference: right turn, straight, left turn
        for nd in (d.right, d, d.left):
            if valid(vertex, nd):
                break
        else:
            raise AssertionError("boundary walk lost the contour")
        if nd is d.left:
            corners += 1
        d = nd
        if vertex == start_vertex and d is heading:
            break
    return corners


def movement_area(trace, p: Polyomino) -> tuple[int, int]:
    """The w' x h' rectangle spanned by the shape, every visited vertex, and
    every placed tile of a run."""
    pts = set(p.cells) | set(trace.visited) | set(trace.placed)
    ext = extents_of(pts)
    return ext.w, ext.h


# --- generators ---------------------------------------------------------------

def random_polyomino(seed: int, n_cells: int, allow_holes: bool = True) -> Polyomino:
    """Random accretion growth, deterministic in the seed.

    When ``allow_holes`` is false, whole shapes are rejected until a simple
    one appears (accretion bias is acceptable here; uniformity is a non-goal).
    """
    if n_cells < 1:
        raise ValueError("n_cells must be >= 1")
    rng = random.Random(seed)
    while True:
        cells = {(0, 0)}
        frontier = set(neighbors4((0, 0)))
        while len(cells) < n_cells:
            q = rng.choice(sorted(frontier))
            cells.add(q)
            frontier.discard(q)
            for nb in neighbors4(q):
                if nb not in cells:
                    frontier.add(nb)
        poly = Polyomino(frozenset(cells))
        if allow_holes or not poly.has_hole():
            return poly


def random_polyomino_in_box(seed: int, max_w: int, max_h: int,
                            n_cells: int, allow_holes: bool = True) -> Polyomino:
    """Accretion growth restricted to a max_w x max_h window."""
    rng = random.Random(seed)
    while True:
        cells = {(0, 0)}
        frontier = set(neighbors4((0, 0)))
        stuck = False
        while len(cells) < n_cells:
            candidates = sorted(
                q for q in frontier
                if _fits_box(cells | {q}, max_w, max_h)
            )
            if not candidates:
                stuck = True
                break
            q = rng.choice(candidates)
            cells.add(q)
            frontier.discard(q)
            for nb in neighbors4(q):
                if nb not in cells:
                    frontier.add(nb)
        if stuck:
            continue
        poly = Polyomino(frozenset(cells))
        if allow_holes or not poly.has_hole():
            return poly


def _fits_box(cells: set[Position], max_w: int, max_h: int) -> bool:
    xs = [p[0] for p in cells]
    ys = [p[1] for p in cells]
    return max(xs) - min(xs) + 1 <= max_w and max(ys) - min(ys) + 1 <= max_h


def random_x_monotone(seed: int, max_w: int, max_h: int) -> Polyomino:
    """Direct column-interval sampler: every column one contiguous interval,
    consecutive intervals overlapping, hence 4-connected and x-monotone."""
    rng = random.Random(seed)
    w = rng.randint(1, max_w)
    lo = rng.randint(0, max_h - 1)
    hi = rng.randint(lo, max_h - 1)
    cells = {(0, y) for y in range(lo, hi + 1)}
    prev_lo, prev_hi = lo, hi
    for x in range(1, w):
        lo = rng.randint(0, prev_hi)
        hi = rng.randint(max(lo, prev_lo), max_h - 1)
        cells.update((x, y) for y in range(lo, hi + 1))
        prev_lo, prev_hi = lo, hi
    poly = Polyomino(frozenset(cells))
    assert poly.is_x_monotone() and poly.extents().h <= max_h
    return poly


def enumerate_polyominoes(max_cells: int) -> list[frozenset[Position]]:
    """All fixed polyominoes (up to translation) with <= max_cells cells."""
    def canon(cells: frozenset[Position]) -> frozenset[Position]:
        x0 = min(p[0] for p in cells)
        y0 = min(p[1] for p in cells)
        return frozenset((x - x0, y - y0) for x, y in cells)

    level = {frozenset({(0, 0)})}
    out: list[frozenset[Position]] = [next(iter(level))]
    for _ in range(max_cells - 1):
        nxt = set()
        for shape in level:
            for cell in shape:
                for nb in neighbors4(cell):
                    if nb not in shape:
                        nxt.add(canon(shape | {nb}))
        out.extend(nxt)
        level = nxt
    return out


def count_holes_by_components(cells: frozenset[Position]) -> int:
    """Independent hole counter: bounded components of the complement."""
    ext = extents_of(cells)
    x0, x1 = ext.x_min - 1, ext.x_max + 1
    y0, y1 = ext.y_min - 1, ext.y_max + 1
    empty = {(x, y) for x in range(x0, x1 + 1) for y in range(y0, y1 + 1)} - set(cells)
    holes = 0
    seen: set[Position] = set()
    for start in sorted(empty):
        if start in seen:
            continue
        comp = [start]
        seen.add(start)
        queue = [start]
        touches_border = False
        while queue:
            p = queue.pop()
            if p[0] in (x0, x1) or p[1] in (y0, y1):
                touches_border = True
            for q in neighbors4(p):
                if q in empty and q not in seen:
                    seen.add(q)
                    queue.append(q)
                    comp.append(q)
        if not touches_border:
            holes += 1
    return holes


# --- named instance families ---------------------------------------------------

def full_rect(w: int, h: int) -> Polyomino:
    return Polyomino(frozenset((x, y) for x in range(w) for y in range(h)))


def bar(n: int, horizontal: bool = True) -> Polyomino:
    if horizontal:
        return Polyomino(frozenset((i, 0) for i in range(n)))
    return Polyomino(frozenset((0, i) for i in range(n)))


def l_tromino() -> Polyomino:
    return Polyomino(frozenset({(0, 0), (1, 0), (0, 1)}))


def plus_pentomino() -> Polyomino:
    return Polyomino(frozenset({(0, 0), (1, 0), (-1, 0), (0, 1), (0, -1)}))


def ring_3x3() -> Polyomino:
    cells = {(x, y) for x in range(3) for y in range(3)} - {(1, 1)}
    return Polyomino(frozenset(cells))


def u_shape() -> Polyomino:
    return Polyomino(frozenset({(0, 0), (1, 0), (2, 0), (0, 1), (2, 1)}))


def comb_teeth(n_teeth: int, tooth_len: int, spacing: int = 2) -> Polyomino:
    """Spine along the top with teeth hanging down, deeper towards the west.

    Restart-heavy for the bounding-box builder: every westward tooth bottom
    is a new, strictly lower local y-minimum.
    """
    cells = set()
    width = n_teeth * spacing
    for x in range(width):
        cells.add((x, 0))
    for t in range(n_teeth):
        x = t * spacing
        depth = tooth_len + (n_teeth - 1 - t)
        for d in range(1, depth + 1):
            cells.add((x, -d))
    return Polyomino(frozenset(cells))


def staircase(steps: int, rise: int = 1, run: int = 2) -> Polyomino:
    """Ascending staircase, x-monotone."""
    cells = set()
    y = 0
    for s in range(steps):
        for i in range(run):
            x = s * run + i
            for dy in range(rise + 1):
                cells.add((x, y + dy))
        y += rise
    return Polyomino(frozenset(cells))

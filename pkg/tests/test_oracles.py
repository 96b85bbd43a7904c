import pytest

from tileforge.grid import Polyomino, same_up_to_translation
from tileforge.oracles import (
    NotAScaledShape,
    bar,
    bounding_ring,
    convex_corner_count,
    count_holes_by_components,
    downscale_naive,
    enumerate_polyominoes,
    full_rect,
    l_tromino,
    plus_pentomino,
    random_polyomino,
    random_x_monotone,
    ring_3x3,
    scale_naive,
)


def test_scale_naive_examples():
    assert scale_naive(Polyomino.of([(0, 0)]), 3).cells == full_rect(3, 3).cells
    assert scale_naive(Polyomino.of([(0, 0), (1, 0)]), 2).cells == full_rect(4, 2).cells
    p = random_polyomino(3, 9)
    assert scale_naive(p, 1).cells == p.cells


def test_scale_preserves_geometry_flags():
    for seed in range(12):
        p = random_polyomino(seed, 10)
        for c in (2, 3):
            s = scale_naive(p, c)
            assert s.has_hole() == p.has_hole()
            assert s.is_x_monotone() == p.is_x_monotone()
            assert s.is_y_monotone() == p.is_y_monotone()


def test_downscale_examples():
    assert downscale_naive(full_rect(3, 3), 3).cells == {(0, 0)}
    L = l_tromino()
    assert downscale_naive(scale_naive(L, 2), 2).cells == L.cells
    with pytest.raises(NotAScaledShape):
        downscale_naive(L, 2)


def test_downscale_roundtrip_exhaustive_small():
    shapes = enumerate_polyominoes(5)
    for cells in shapes:
        p = Polyomino(cells)
        for c in (2, 3, 4):
            assert downscale_naive(scale_naive(p, c), c).cells == p.cells


def test_bounding_ring_1x1():
    ring = bounding_ring(Polyomino.of([(0, 0)]))
    assert len(ring) == 16
    xs = {p[0] for p in ring}
    ys = {p[1] for p in ring}
    assert min(xs) == -2 and max(xs) == 2 and min(ys) == -2 and max(ys) == 2


def test_bounding_ring_count_formula():
    for seed in range(10):
        p = random_polyomino(seed, 14)
        ext = p.extents()
        assert len(bounding_ring(p)) == 2 * ext.w + 2 * ext.h + 12


def test_bounding_ring_translation_equivariance():
    p = random_polyomino(7, 9)
    moved = p.translate(4, -3)
    assert {(x + 4, y - 3) for x, y in bounding_ring(p)} == set(bounding_ring(moved))


def test_bounding_ring_clearance():
    for seed in range(10):
        p = random_polyomino(seed, 12)
        ring = bounding_ring(p)
        assert not (ring & p.cells)
        for rx, ry in ring:
            for px, py in p.cells:
                assert max(abs(rx - px), abs(ry - py)) >= 2


def test_convex_corner_count():
    assert convex_corner_count(full_rect(4, 3)) == 4
    assert convex_corner_count(Polyomino.of([(0, 0)])) == 4
    assert convex_corner_count(l_tromino()) == 5
    assert convex_corner_count(plus_pentomino()) == 8


def test_convex_corner_count_ring_outer_only():
    # hole boundaries are ignored: the 3x3 ring's outer boundary is a square
    assert convex_corner_count(ring_3x3()) == 4


def test_random_polyomino_deterministic():
    a = random_polyomino(11, 20, allow_holes=False)
    b = random_polyomino(11, 20, allow_holes=False)
    assert a.cells == b.cells
    assert len(a) == 20
    assert not a.has_hole()
    assert len(random_polyomino(0, 1)) == 1


def test_random_x_monotone():
    for seed in range(25):
        p = random_x_monotone(seed, 10, 10)
        assert p.is_x_monotone()
        ext = p.extents()
        assert ext.w <= 10 and ext.h <= 10


def test_has_hole_matches_component_oracle_exhaustively():
    # exhaustive cross-check on all fixed polyominoes with <= 10 cells
    shapes = enumerate_polyominoes(10)
    mismatches = 0
    for cells in shapes:
        p = Polyomino(cells)
        if p.has_hole() != (count_holes_by_components(cells) > 0):
            mismatches += 1
    assert mismatches == 0
    # sanity: enumeration sizes for n = 1..7 fixed polyominoes
    sizes = {}
    for cells in shapes:
        sizes[len(cells)] = sizes.get(len(cells), 0) + 1
    assert [sizes[n] for n in range(1, 8)] == [1, 2, 6, 19, 63, 216, 760]

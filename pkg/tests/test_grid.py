import pytest
from hypothesis import given, strategies as st

from tileforge.grid import (
    AlreadyOccupied,
    Direction,
    GridWorld,
    NotOccupied,
    Polyomino,
    dump_world,
    parse_polyomino,
    parse_world,
    same_up_to_translation,
    FormatError,
)
from tileforge.oracles import full_rect, bar, ring_3x3, u_shape


def test_place_and_remove_roundtrip():
    w = GridWorld()
    w.place_tile((0, 0))
    assert w.tiles == {(0, 0)}
    w.place_tile((1, 0))
    assert w.tiles == {(0, 0), (1, 0)}
    w.remove_tile((1, 0))
    assert w.tiles == {(0, 0)}
    w.remove_tile((0, 0))
    assert w.tiles == set()


def test_place_occupied_raises():
    w = GridWorld({(0, 0)})
    with pytest.raises(AlreadyOccupied):
        w.place_tile((0, 0))


def test_remove_empty_raises():
    with pytest.raises(NotOccupied):
        GridWorld().remove_tile((0, 0))


def test_connectivity_gap_and_bridge():
    w = GridWorld({(0, 0), (2, 0)})
    assert not w.is_connected()
    w.add_robot("R1", (1, 0))
    assert w.is_connected()


def test_connectivity_trivial_cases():
    assert GridWorld().is_connected()
    w = GridWorld()
    w.add_robot("R1", (5, 5))
    assert w.is_connected()


def test_boundary_single_cell():
    p = Polyomino.of([(0, 0)])
    assert p.boundary() == {(0, 0)}


def test_boundary_3x3_square_excludes_center():
    p = full_rect(3, 3)
    expected = {c for c in p.cells if c != (1, 1)}
    assert p.boundary() == expected


def test_boundary_bar_all_cells():
    p = bar(4)
    assert p.boundary() == p.cells


def test_has_hole():
    assert ring_3x3().has_hole()
    assert not full_rect(3, 3).has_hole()
    assert not Polyomino.of([(0, 0)]).has_hole()


def test_monotone_flags():
    b = bar(5)
    assert b.is_x_monotone() and b.is_y_monotone()
    u = u_shape()
    assert u.is_x_monotone()
    assert not u.is_y_monotone()
    r = full_rect(4, 2)
    assert r.is_x_monotone() and r.is_y_monotone()


def test_extents():
    p = Polyomino.of([(2, 3), (3, 3)])
    ext = p.extents()
    assert (ext.x_min, ext.x_max, ext.y_min, ext.y_max) == (2, 3, 3, 3)
    assert ext.w == 2 and ext.h == 1
    assert ring_3x3().extents().w == 3


def test_polyomino_rejects_disconnected():
    with pytest.raises(ValueError):
        Polyomino.of([(0, 0), (2, 0)])
    with pytest.raises(ValueError):
        Polyomino.of([])


coords = st.tuples(st.integers(-30, 30), st.integers(-30, 30))


@given(st.sets(coords, min_size=1, max_size=25), st.integers(-5, 5), st.integers(-5, 5))
def test_connectivity_translation_invariant(cells, dx, dy):
    w = GridWorld(set(cells))
    assert w.is_connected() == w.translate(dx, dy).is_connected()


@given(st.integers(0, 400), st.integers(-7, 7))
def test_x_monotone_translation_invariant(seed, dx):
    from tileforge.oracles import random_polyomino

    p = random_polyomino(seed, 12)
    assert p.is_x_monotone() == p.translate(dx, 0).is_x_monotone()


def test_parse_and_dump_roundtrip():
    text = "..#\n#1.\n.b.\n"
    w = parse_world(text)
    # row 0 of the file is the northernmost row (y=2)
    assert (2, 2) in w.tiles
    assert w.robots["R1"] == (1, 1) and (1, 1) in w.tiles
    assert w.robots["R2"] == (1, 0) and (1, 0) not in w.tiles
    assert dump_world(w) == text


def test_parse_rejects_ragged():
    with pytest.raises(FormatError):
        parse_world("##\n#\n")


def test_parse_polyomino_rejects_robots():
    with pytest.raises(FormatError):
        parse_polyomino("#1\n")


def test_same_up_to_translation():
    assert same_up_to_translation({(0, 0), (1, 0)}, {(5, 3), (6, 3)})
    assert not same_up_to_translation({(0, 0), (1, 0)}, {(0, 0), (0, 1)})

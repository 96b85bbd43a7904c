"""Dev driver: run the scale protocol on small shapes and diff against the oracle."""
import sys

sys.path.insert(0, "src")

from tileforge.grid import Polyomino, dump_world, same_up_to_translation, GridWorld
from tileforge.engine import run, RunConfig
from tileforge.oracles import scale_naive, random_polyomino, l_tromino, full_rect, bar
from tileforge.worlds import boxed_world
from tileforge.protocols.scale import ScaleProtocol


def drive(p, c, verbose=False, connector=False):
    world = boxed_world(p, connector_tile=connector)
    proto = ScaleProtocol(c)
    states = proto.initial_states(world)
    try:
        trace, final = run(world, states, proto, RunConfig(max_steps=400000, record_trace=False))
    except Exception as exc:
        print(f"FAIL c={c} {type(exc).__name__}: {exc}")
        print("input:")
        print(dump_world(world))
        raise
    want = scale_naive(p, c)
    ok = same_up_to_translation(final.tiles, want.cells)
    if not ok or verbose:
        print("input:")
        print(dump_world(world))
        print("final:")
        print(dump_world(final))
        print("expected (shape):")
        print(dump_world(GridWorld(set(want.cells))))
    return ok, trace


if __name__ == "__main__":
    cases = [
        ("1x1", Polyomino.of([(0, 0)])),
        ("domino", Polyomino.of([(0, 0), (1, 0)])),
        ("vbar3", bar(3, horizontal=False)),
        ("L", l_tromino()),
        ("rect32", full_rect(3, 2)),
    ]
    for name, p in cases:
        for c in (2, 3):
            ok, trace = drive(p, c)
            print(f"{name} c={c}: {'OK' if ok else 'MISMATCH'} steps={trace.moves + trace.tile_ops}")

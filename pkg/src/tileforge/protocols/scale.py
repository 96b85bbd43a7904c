"""Connected up-scaling by a factor c beside a boxed polyomino.

The leader robot consumes the shape column by column from the east, using
three working columns inside the ring (current column, solid fill column,
marker column with travelling gaps) and emits c x c segments west of the
ring: full blocks for cells, centre-blank blocks for gaps.  The helper robot
holds the south connection until the fill column takes over, is then led to
a parking cell inside a segment that is part of the final scaled shape, and
the leader finally clears the ring, the consumed original, and every
centre-blank segment, leaving exactly the scaled polyomino.

All controller memory consists of direction slots and counters bounded by c,
so the state space is enumerable for fixed c.
"""

from __future__ import annotations

from dataclasses import dataclass, replace

from ..automaton import IllegalState, LocalView, Move, PlaceTileHere, Protocol, RemoveTileHere, Stay
from ..grid import Direction, GridWorld
from .base import DIR_OR_NONE, E, FollowMemory, N, S, W, enumerate_product, follow_step


@dataclass(frozen=True)
class ScaleState:
    phase: str
    k: int = 0          # generic bounded counter (<= max(c, 3))
    ox: int = 0         # x offset inside the current segment
    oy: int = 0         # y offset inside the current segment
    kind: str = ""      # scratch: segment type / probe verdict / group flag
    first: bool = False  # building the first segment of a fresh column group
    mem: Direction | None = None   # follower slots (R2 only)
    pend: Direction | None = None


R2_PHASES = ("hold", "trail", "done2")

_NON_PHASE_METHODS = {"step_r2", "row_dir", "r1_phases"}


class ScaleProtocol(Protocol):
    """Two-robot up-scaling next to an existing bounding box (west side)."""

    name = "scale"

    def __init__(self, c: int):
        if c < 2:
            raise ValueError("scaling factor must be >= 2")
        self.c = c

    # -- wiring ---------------------------------------------------------------

    def initial_states(self, world: GridWorld) -> dict[str, ScaleState]:
        states = {"R1": ScaleState("p1_ride_e")}
        if "R2" in world.robots:
            states["R2"] = ScaleState("hold")
        return states

    def is_done(self, state: ScaleState) -> bool:
        return state.phase in ("done", "done2")

    def token(self, state: ScaleState) -> str:
        p = state.phase
        if p in ("ft_sig", "ft_sig2"):
            return "lead:W"
        if p in ("pk_sig_n", "pk_sig_n2"):
            return "lead:N"
        if p in ("pk_sig_e", "pk_sig_e2"):
            return "lead:E"
        if p in ("pk_park", "pk_park2"):
            return "park"
        return p

    @classmethod
    def _r1_phases(cls) -> tuple[str, ...]:
        names = []
        for attr in dir(cls):
            if attr.startswith("_") and not attr.startswith("__"):
                base = attr[1:]
                if base in _NON_PHASE_METHODS or base.endswith("_phases"):
                    continue
                if callable(getattr(cls, attr)):
                    names.append(base)
        names.append("done")
        return tuple(sorted(set(names)))

    def enumerate_states(self) -> frozenset:
        c = self.c
        kmax = max(c, 3)
        r1 = enumerate_product(ScaleState, {
            "phase": self._r1_phases(),
            "k": tuple(range(kmax + 1)),
            "ox": tuple(range(c)),
            "oy": tuple(range(c)),
            "kind": ("", "occ", "emp"),
            "first": (False, True),
            "mem": (None,),
            "pend": (None,),
        })
        r2 = enumerate_product(ScaleState, {
            "phase": R2_PHASES,
            "k": (0,), "ox": (0,), "oy": (0,), "kind": ("",), "first": (False,),
            "mem": DIR_OR_NONE,
            "pend": DIR_OR_NONE,
        })
        return r1 | r2

    # -- transition -----------------------------------------------------------

    def step(self, st: ScaleState, view: LocalView):
        if st.phase in R2_PHASES:
            return self._step_r2(st, view)
        handler = getattr(self, "_" + st.phase, None)
        if handler is None:
            raise IllegalState(f"scale: unhandled phase {st.phase}")
        return handler(st, view)

    def _step_r2(self, st: ScaleState, view: LocalView):
        d = view.robot_dir("R1")
        tok = view.robot(d)[1] if d is not None else None
        if st.phase == "hold":
            if tok is not None and tok.startswith("lead:"):
                mem, act = follow_step(FollowMemory(), view, "R1")
                return replace(st, phase="trail", mem=mem.mem, pend=mem.pend), act
            return st, Stay()
        if st.phase == "trail":
            if tok == "park":
                return replace(st, phase="done2", mem=None, pend=None), Stay()
            res = follow_step(FollowMemory(st.mem, st.pend), view, "R1")
            if res is None:
                return st, Stay()
            mem, act = res
            return replace(st, mem=mem.mem, pend=mem.pend), act
        raise IllegalState("scale R2: bad phase")

    # -- preparation: fill the east inner column, cut markers, place the stub --

    def _p1_ride_e(self, st, v):
        if v.occupied(E):
            return st, Move(E)
        return replace(st, phase="p1_w"), Move(N)

    def _p1_w(self, st, v):
        return replace(st, phase="p1_eval"), Move(W)

    def _p1_eval(self, st, v):
        # on the candidate fill cell, west of the ring's east column
        if v.occupied(N):
            return replace(st, phase="p2_down"), Move(E)
        return replace(st, phase="p1_e"), PlaceTileHere()

    def _p1_e(self, st, v):
        return replace(st, phase="p1_n"), Move(E)

    def _p1_n(self, st, v):
        return replace(st, phase="p1_w"), Move(N)

    def _p2_down(self, st, v):
        if v.occupied(S):
            return st, Move(S)
        return replace(st, phase="p2_up1"), RemoveTileHere()

    def _p2_up1(self, st, v):
        return replace(st, phase="p2_up2"), Move(N)

    def _p2_up2(self, st, v):
        return replace(st, phase="p2_cut"), Move(N)

    def _p2_cut(self, st, v):
        return replace(st, phase="p3_w1"), RemoveTileHere()

    def _p3_w1(self, st, v):
        return replace(st, phase="p3_s"), Move(W)

    def _p3_s(self, st, v):
        return replace(st, phase="p3_w2"), Move(S)

    def _p3_w2(self, st, v):
        return replace(st, phase="p3_place"), Move(W)

    def _p3_place(self, st, v):
        return replace(st, phase="p3_down", first=True), PlaceTileHere()

    def _p3_down(self, st, v):
        return replace(st, phase="nt_ride_e"), Move(S)

    # -- next-tile cycle --------------------------------------------------------

    def _nt_ride_e(self, st, v):
        if v.occupied(E):
            return st, Move(E)
        return replace(st, phase="nt_climb"), Move(E)

    def _nt_climb(self, st, v):
        if v.occupied(N):
            return st, Move(N)
        return replace(st, phase="nt_eval1"), Move(N)

    def _nt_eval1(self, st, v):
        # standing in the row-marker gap
        if not v.occupied(W):
            return replace(st, phase="nc_fill"), Stay()
        return replace(st, phase="nt_eval2"), Move(W)

    def _nt_eval2(self, st, v):
        if v.occupied(W):
            return replace(st, phase="mk_fill", kind="occ"), Move(E)
        return replace(st, phase="nt_ph", kind="emp"), Move(W)

    def _nt_ph(self, st, v):
        return replace(st, phase="nt_ret1"), PlaceTileHere()

    def _nt_ret1(self, st, v):
        return replace(st, phase="nt_ret2"), Move(E)

    def _nt_ret2(self, st, v):
        return replace(st, phase="mk_fill"), Move(E)

    def _mk_fill(self, st, v):
        return replace(st, phase="mk_up"), PlaceTileHere()

    def _mk_up(self, st, v):
        return replace(st, phase="mk_cut"), Move(N)

    def _mk_cut(self, st, v):
        if v.here_occupied:
            return replace(st, phase="sg_down"), RemoveTileHere()
        return replace(st, phase="sg_down"), Stay()

    # -- travel west, build one segment, come back -------------------------------

    def _sg_down(self, st, v):
        if v.occupied(S):
            return st, Move(S)
        return replace(st, phase="sg_gap"), Move(S)

    def _sg_gap(self, st, v):
        return replace(st, phase="sg_ride_w"), Move(W)

    def _sg_ride_w(self, st, v):
        if v.occupied(W):
            return st, Move(W)
        if st.first:
            return replace(st, phase="sb_place", ox=self.c - 1, oy=0), Move(W)
        return replace(st, phase="sg_climb"), Stay()

    def _sg_climb(self, st, v):
        if v.occupied(N):
            return st, Move(N)
        return replace(st, phase="sb_place", ox=0, oy=0), Move(N)

    def _row_dir(self, st) -> Direction:
        away = W if st.first else E
        back = E if st.first else W
        return away if st.oy % 2 == 0 else back

    def _sb_place(self, st, v):
        c = self.c
        if st.kind == "emp" and st.ox == c // 2 and st.oy == c // 2:
            return replace(st, phase="sb_move"), Stay()
        return replace(st, phase="sb_move"), PlaceTileHere()

    def _sb_move(self, st, v):
        c = self.c
        rd = self._row_dir(st)
        at_row_end = (st.ox == 0) if rd is W else (st.ox == c - 1)
        if not at_row_end:
            nxt = st.ox - 1 if rd is W else st.ox + 1
            return replace(st, phase="sb_place", ox=nxt), Move(rd)
        if st.oy < c - 1:
            return replace(st, phase="sb_place", oy=st.oy + 1), Move(N)
        return replace(st, phase="sx_top_w"), Stay()

    def _sx_top_w(self, st, v):
        if st.ox > 0:
            return replace(st, ox=st.ox - 1), Move(W)
        return replace(st, phase="sx_down"), Stay()

    def _sx_down(self, st, v):
        if v.occupied(S):
            return st, Move(S)
        return replace(st, phase="sx_ride_e", first=False, kind=""), Move(E)

    def _sx_ride_e(self, st, v):
        if v.occupied(E):
            return st, Move(E)
        return replace(st, phase="nt_climb"), Move(E)

    # -- new column ----------------------------------------------------------------

    def _nc_fill(self, st, v):
        return replace(st, phase="nc_down"), PlaceTileHere()

    def _nc_down(self, st, v):
        if v.occupied(S):
            return st, Move(S)
        return replace(st, phase="nc_sfill"), Move(S)

    def _nc_sfill(self, st, v):
        return replace(st, phase="nc_w1"), PlaceTileHere()

    def _nc_w1(self, st, v):
        return replace(st, phase="nc_w2"), Move(W)

    def _nc_w2(self, st, v):
        return replace(st, phase="nc_up1"), Move(W)

    def _nc_up1(self, st, v):
        return replace(st, phase="nc_probe"), Move(N)

    def _nc_probe(self, st, v):
        # on the previous stub; an occupied west neighbour is the ring
        if v.occupied(W):
            return replace(st, phase="ft_down"), Stay()
        return replace(st, phase="nc_e1"), Move(E)

    def _nc_e1(self, st, v):
        return replace(st, phase="nc_up2"), Move(N)

    def _nc_up2(self, st, v):
        return replace(st, phase="nc_cut1"), RemoveTileHere()

    def _nc_cut1(self, st, v):
        return replace(st, phase="nc_down2"), Move(S)

    def _nc_down2(self, st, v):
        return replace(st, phase="nc_down3"), Move(S)

    def _nc_down3(self, st, v):
        return replace(st, phase="nc_cut2"), RemoveTileHere()

    def _nc_cut2(self, st, v):
        return replace(st, phase="nc_w3"), Move(W)

    def _nc_w3(self, st, v):
        return replace(st, phase="nc_up3"), Move(N)

    def _nc_up3(self, st, v):
        return replace(st, phase="nc_w4"), Move(W)

    def _nc_w4(self, st, v):
        return replace(st, phase="nc_place_stub"), PlaceTileHere()

    def _nc_place_stub(self, st, v):
        return replace(st, phase="nc_down4", first=True), Move(S)

    def _nc_down4(self, st, v):
        return replace(st, phase="nt_ride_e"), Stay()

    # -- finish: mark a permanent parking segment, fetch and park the helper ---------

    def _ft_down(self, st, v):
        return replace(st, phase="mkx_ride_w"), Move(S)

    def _mkx_ride_w(self, st, v):
        if v.occupied(W):
            return st, Move(W)
        return replace(st, phase="mkx_count_e", ox=0), Stay()

    def _mkx_count_e(self, st, v):
        if st.ox == self.c // 2:
            return replace(st, phase="mkx_climb", k=0), Stay()
        return replace(st, ox=(st.ox + 1) % self.c), Move(E)

    def _mkx_climb(self, st, v):
        if st.k < self.c // 2 - 1:
            return replace(st, k=st.k + 1), Move(N)
        if v.occupied(N):
            return replace(st, phase="mkx_desc"), Stay()
        return replace(st, phase="mkx_desc_empty"), Stay()

    def _mkx_desc(self, st, v):
        if st.k > 0:
            return replace(st, k=st.k - 1), Move(S)
        return replace(st, phase="mkx_w_to_g0", k=self.c // 2), Stay()

    def _mkx_desc_empty(self, st, v):
        if st.k > 0:
            return replace(st, k=st.k - 1), Move(S)
        return replace(st, phase="mkx_count_e", ox=(st.ox + 1) % self.c), Move(E)

    def _mkx_w_to_g0(self, st, v):
        if st.k > 0:
            return replace(st, k=st.k - 1), Move(W)
        return replace(st, phase="mkx_mark_s"), Move(S)

    def _mkx_mark_s(self, st, v):
        return replace(st, phase="mkx_back_n"), PlaceTileHere()

    def _mkx_back_n(self, st, v):
        return replace(st, phase="ft_ride_e"), Move(N)

    def _ft_ride_e(self, st, v):
        r = v.robot(N)
        if r is not None and r[0] == "R2":
            return replace(st, phase="ft_sig"), Stay()
        return st, Move(E)

    def _ft_sig(self, st, v):
        return replace(st, phase="ft_sig2"), Stay()

    def _ft_sig2(self, st, v):
        return replace(st, phase="ft_lead_w"), Stay()

    def _ft_lead_w(self, st, v):
        if v.occupied(S):
            return replace(st, phase="pk_sig_n"), Stay()
        return st, Move(W)

    def _pk_sig_n(self, st, v):
        return replace(st, phase="pk_sig_n2"), Stay()

    def _pk_sig_n2(self, st, v):
        return replace(st, phase="pk_n"), Stay()

    def _pk_n(self, st, v):
        return replace(st, phase="pk_sig_e"), Move(N)

    def _pk_sig_e(self, st, v):
        return replace(st, phase="pk_sig_e2"), Stay()

    def _pk_sig_e2(self, st, v):
        return replace(st, phase="pk_e1"), Stay()

    def _pk_e1(self, st, v):
        return replace(st, phase="pk_e2"), Move(E)

    def _pk_e2(self, st, v):
        return replace(st, phase="pk_park"), Move(E)

    def _pk_park(self, st, v):
        return replace(st, phase="pk_park2"), Stay()

    def _pk_park2(self, st, v):
        return replace(st, phase="pk_exit_s"), Stay()

    def _pk_exit_s(self, st, v):
        return replace(st, phase="pk_ride_w"), Move(S)

    def _pk_ride_w(self, st, v):
        if v.occupied(S):
            return replace(st, phase="pk_mark_s"), Stay()
        return st, Move(W)

    def _pk_mark_s(self, st, v):
        return replace(st, phase="pk_mark_rm"), Move(S)

    def _pk_mark_rm(self, st, v):
        return replace(st, phase="pk_mark_n"), RemoveTileHere()

    def _pk_mark_n(self, st, v):
        return replace(st, phase="c1_ride_e"), Move(N)

    # -- cleanup 1: east column, north row, interior, south row, west column ---------

    def _c1_ride_e(self, st, v):
        if v.occupied(E):
            return st, Move(E)
        return replace(st, phase="c1e_rm"), Stay()

    def _c1e_rm(self, st, v):
        return replace(st, phase="c1e_up"), RemoveTileHere()

    def _c1e_up(self, st, v):
        if v.occupied(N):
            return replace(st, phase="c1e_rm"), Move(N)
        return replace(st, phase="c1n_rm"), Move(W)

    def _c1n_rm(self, st, v):
        return replace(st, phase="c1n_step"), RemoveTileHere()

    def _c1n_step(self, st, v):
        if v.occupied(W):
            return replace(st, phase="c1n_rm"), Move(W)
        return replace(st, phase="c1w_desc"), Move(S)

    def _c1w_desc(self, st, v):
        if v.occupied(S):
            return st, Move(S)
        return replace(st, phase="c1i_climb"), Move(E)

    def _c1i_climb(self, st, v):
        if v.occupied(N):
            return st, Move(N)
        return replace(st, phase="c1i_eat"), Stay()

    def _c1i_eat(self, st, v):
        return replace(st, phase="c1i_down"), RemoveTileHere()

    def _c1i_down(self, st, v):
        if v.occupied(S):
            return replace(st, phase="c1i_check"), Move(S)
        raise IllegalState("scale cleanup: interior column lost its footing")

    def _c1i_check(self, st, v):
        if v.occupied(S):
            return replace(st, phase="c1i_eat"), Stay()
        if v.occupied(E):
            return replace(st, phase="c1i_climb"), Move(E)
        return replace(st, phase="c1s_rm"), Stay()

    def _c1s_rm(self, st, v):
        return replace(st, phase="c1s_w"), RemoveTileHere()

    def _c1s_w(self, st, v):
        return replace(st, phase="c1s_chk"), Move(W)

    def _c1s_chk(self, st, v):
        if v.occupied(N):
            return replace(st, phase="c1w_climb"), Stay()
        return replace(st, phase="c1s_rm"), Stay()

    def _c1w_climb(self, st, v):
        if v.occupied(N):
            return st, Move(N)
        return replace(st, phase="c1w_eat"), Stay()

    def _c1w_eat(self, st, v):
        return replace(st, phase="c1w_down"), RemoveTileHere()

    def _c1w_down(self, st, v):
        if v.occupied(S):
            return replace(st, phase="c1w_eat"), Move(S)
        return replace(st, phase="c2_ride_w"), Move(W)

    # -- cleanup 2: W -> E over the segment groups, dropping blank segments ----------

    def _c2_ride_w(self, st, v):
        if v.occupied(W):
            return st, Move(W)
        return replace(st, phase="g_enter", ox=0, oy=0, k=0), Stay()

    def _g_enter(self, st, v):
        return replace(st, phase="g_chk_e", k=self.c - 1), Stay()

    def _g_chk_e(self, st, v):
        if st.k > 0:
            return replace(st, k=st.k - 1), Move(E)
        return replace(st, phase="g_chk_back", k=self.c - 1,
                       kind=("emp" if not v.occupied(E) else "occ")), Stay()

    def _g_chk_back(self, st, v):
        # kind borrowed: "emp" flags the east-most (last) group
        if st.k > 0:
            return replace(st, k=st.k - 1), Move(W)
        if st.kind == "emp":
            return replace(st, phase="l_climb", oy=0, kind=""), Stay()
        return replace(st, phase="u2c", k=0, kind=""), Stay()

    # upward scan on the group's west column (non-last groups)

    def _u2c(self, st, v):
        if st.k < self.c // 2:
            return replace(st, k=st.k + 1), Move(N)
        return replace(st, phase="u_probe_e", k=0), Stay()

    def _u_probe_e(self, st, v):
        if st.k < self.c // 2 - 1:
            return replace(st, k=st.k + 1), Move(E)
        return replace(st, phase="u_probe_back",
                       kind=("occ" if v.occupied(E) else "emp")), Stay()

    def _u_probe_back(self, st, v):
        if st.k > 0:
            return replace(st, k=st.k - 1), Move(W)
        if st.kind == "occ":
            return replace(st, phase="u_pass", k=self.c // 2, kind=""), Stay()
        return replace(st, phase="u_chk_top", k=self.c // 2, kind=""), Stay()

    def _u_pass(self, st, v):
        if st.k < self.c - 1:
            return replace(st, k=st.k + 1), Move(N)
        if v.occupied(N):
            return replace(st, phase="u2c", k=0), Move(N)
        return replace(st, phase="gx_top_desc", k=self.c - 1), Stay()

    def _gx_top_desc(self, st, v):
        if st.k > 0:
            return replace(st, k=st.k - 1), Move(S)
        return replace(st, phase="gx_row_e", k=self.c - 1), Stay()

    def _gx_row_e(self, st, v):
        if st.k > 0:
            return replace(st, k=st.k - 1), Move(E)
        return replace(st, phase="gx_desc"), Move(E)

    def _gx_desc(self, st, v):
        if v.occupied(S):
            return st, Move(S)
        return replace(st, phase="g_enter", ox=0), Stay()

    def _u_chk_top(self, st, v):
        if st.k < self.c - 1:
            return replace(st, k=st.k + 1), Move(N)
        if v.occupied(N):
            return replace(st, phase="u_back_down", k=self.c - 1), Stay()
        return replace(st, phase="te_eat", ox=0, oy=self.c - 1), Stay()

    def _u_back_down(self, st, v):
        if st.k > 0:
            return replace(st, k=st.k - 1), Move(S)
        return replace(st, phase="ue_row_nav_e", ox=0, oy=0), Stay()

    # eat a mid-stack blank segment bottom-up (support above and beside)

    def _ue_row_nav_e(self, st, v):
        if st.ox < self.c - 1:
            return replace(st, ox=st.ox + 1), Move(E)
        return replace(st, phase="ue_row0_eat"), Stay()

    def _ue_row0_eat(self, st, v):
        act = RemoveTileHere() if v.here_occupied else Stay()
        return replace(st, phase="ue_row0_step"), act

    def _ue_row0_step(self, st, v):
        if st.ox > 0:
            return replace(st, phase="ue_row0_eat", ox=st.ox - 1), Move(W)
        return replace(st, phase="ue_row_eat", oy=1), Move(N)

    def _ue_row_eat(self, st, v):
        act = RemoveTileHere() if v.here_occupied else Stay()
        return replace(st, phase="ue_row_step"), act

    def _ue_row_step(self, st, v):
        c = self.c
        if st.ox < c - 1:
            return replace(st, phase="ue_row_eat", ox=st.ox + 1), Move(E)
        if st.oy < c - 1:
            return replace(st, phase="ue_walk_w", oy=st.oy + 1, k=c - 1), Move(N)
        return replace(st, phase="ue_exit_w", k=c - 1), Move(N)

    def _ue_walk_w(self, st, v):
        if st.k > 0:
            return replace(st, k=st.k - 1), Move(W)
        return replace(st, phase="ue_row_eat", ox=0), Stay()

    def _ue_exit_w(self, st, v):
        # on row 0 of the segment above; return to its west column
        if st.k > 0:
            return replace(st, k=st.k - 1), Move(W)
        return replace(st, phase="u2c", k=0, ox=0, oy=0), Stay()

    # eat the stack-top blank segment top-down (support east and below)

    def _te_eat(self, st, v):
        act = RemoveTileHere() if v.here_occupied else Stay()
        return replace(st, phase="te_step"), act

    def _te_step(self, st, v):
        c = self.c
        if st.ox < c - 1:
            return replace(st, phase="te_eat", ox=st.ox + 1), Move(E)
        if st.oy > 0:
            return replace(st, phase="te_walk_w", oy=st.oy - 1, k=c - 1), Move(S)
        return replace(st, phase="gx_desc"), Move(E)

    def _te_walk_w(self, st, v):
        if st.k > 0:
            return replace(st, k=st.k - 1), Move(W)
        return replace(st, phase="te_eat", ox=0), Stay()

    # last group: trim from the top, descend, sweep up from the bottom

    def _l_climb(self, st, v):
        if st.oy < self.c - 1:
            return replace(st, oy=st.oy + 1), Move(N)
        if v.occupied(N):
            return replace(st, oy=0), Move(N)
        return replace(st, phase="l1_down_c", k=(self.c - 1) - self.c // 2, oy=0), Stay()

    def _l1_down_c(self, st, v):
        if st.k > 0:
            return replace(st, k=st.k - 1), Move(S)
        return replace(st, phase="l1_probe_e", k=0), Stay()

    def _l1_probe_e(self, st, v):
        if st.k < self.c // 2 - 1:
            return replace(st, k=st.k + 1), Move(E)
        return replace(st, phase="l1_probe_back",
                       kind=("occ" if v.occupied(E) else "emp")), Stay()

    def _l1_probe_back(self, st, v):
        if st.k > 0:
            return replace(st, k=st.k - 1), Move(W)
        if st.kind == "occ":
            return replace(st, phase="l2_desc", kind=""), Stay()
        return replace(st, phase="l1_up_top", k=(self.c - 1) - self.c // 2, kind=""), Stay()

    def _l1_up_top(self, st, v):
        if st.k > 0:
            return replace(st, k=st.k - 1), Move(N)
        return replace(st, phase="l1_row_eat", ox=0, oy=self.c - 1), Stay()

    def _l1_row_eat(self, st, v):
        act = RemoveTileHere() if v.here_occupied else Stay()
        return replace(st, phase="l1_row_step"), act

    def _l1_row_step(self, st, v):
        c = self.c
        if st.ox < c - 1:
            return replace(st, phase="l1_row_eat", ox=st.ox + 1), Move(E)
        if st.oy > 1:
            return replace(st, phase="l1_walk_w", oy=st.oy - 1, k=c - 1), Move(S)
        return replace(st, phase="l1_row0_eat", oy=0), Move(S)

    def _l1_walk_w(self, st, v):
        if st.k > 0:
            return replace(st, k=st.k - 1), Move(W)
        return replace(st, phase="l1_row_eat", ox=0), Stay()

    def _l1_row0_eat(self, st, v):
        act = RemoveTileHere() if v.here_occupied else Stay()
        return replace(st, phase="l1_row0_step"), act

    def _l1_row0_step(self, st, v):
        if st.ox > 0:
            return replace(st, phase="l1_row0_eat", ox=st.ox - 1), Move(W)
        return replace(st, phase="l1_next_c", k=(self.c - 1) - self.c // 2), Move(S)

    def _l1_next_c(self, st, v):
        # just dropped onto the segment below, on its north-west cell
        if st.k > 0:
            return replace(st, k=st.k - 1), Move(S)
        return replace(st, phase="l1_probe_e", k=0), Stay()

    def _l2_desc(self, st, v):
        if v.occupied(S):
            return st, Move(S)
        return replace(st, phase="l3_2c", k=0, ox=0, oy=0), Stay()

    def _l3_2c(self, st, v):
        if st.k < self.c // 2:
            return replace(st, k=st.k + 1), Move(N)
        return replace(st, phase="l3_probe_e", k=0), Stay()

    def _l3_probe_e(self, st, v):
        if st.k < self.c // 2 - 1:
            return replace(st, k=st.k + 1), Move(E)
        return replace(st, phase="l3_probe_back",
                       kind=("occ" if v.occupied(E) else "emp")), Stay()

    def _l3_probe_back(self, st, v):
        if st.k > 0:
            return replace(st, k=st.k - 1), Move(W)
        if st.kind == "occ":
            return replace(st, phase="l3_pass", k=self.c // 2, kind=""), Stay()
        return replace(st, phase="l3_down", k=self.c // 2, kind=""), Stay()

    def _l3_pass(self, st, v):
        if st.k < self.c - 1:
            return replace(st, k=st.k + 1), Move(N)
        if v.occupied(N):
            return replace(st, phase="l3_2c", k=0), Move(N)
        return replace(st, phase="done", kind=""), Stay()

    def _l3_down(self, st, v):
        if st.k > 0:
            return replace(st, k=st.k - 1), Move(S)
        return replace(st, phase="l3_row_nav_e", ox=0, oy=0), Stay()

    def _l3_row_nav_e(self, st, v):
        if st.ox < self.c - 1:
            return replace(st, ox=st.ox + 1), Move(E)
        return replace(st, phase="l3_row0_eat"), Stay()

    def _l3_row0_eat(self, st, v):
        act = RemoveTileHere() if v.here_occupied else Stay()
        return replace(st, phase="l3_row0_step"), act

    def _l3_row0_step(self, st, v):
        if st.ox > 0:
            return replace(st, phase="l3_row0_eat", ox=st.ox - 1), Move(W)
        return replace(st, phase="l3_row_eat", oy=1), Move(N)

    def _l3_row_eat(self, st, v):
        act = RemoveTileHere() if v.here_occupied else Stay()
        return replace(st, phase="l3_row_step"), act

    def _l3_row_step(self, st, v):
        c = self.c
        if st.ox < c - 1:
            return replace(st, phase="l3_row_eat", ox=st.ox + 1), Move(E)
        if st.oy < c - 1:
            return replace(st, phase="l3_walk_w", oy=st.oy + 1, k=c - 1), Move(N)
        return replace(st, phase="l3_exit_w", k=c - 1), Move(N)

    def _l3_walk_w(self, st, v):
        if st.k > 0:
            return replace(st, k=st.k - 1), Move(W)
        return replace(st, phase="l3_row_eat", ox=0), Stay()

    def _l3_exit_w(self, st, v):
        if st.k > 0:
            return replace(st, k=st.k - 1), Move(W)
        return replace(st, phase="l3_2c", k=0, ox=0, oy=0), Stay()

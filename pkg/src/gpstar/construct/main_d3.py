"""Five-star coloring of GP(n, k) with gcd(n, k) >= 3 and n/d not in {2, 5}.

Cycles take colors 0, 1, 2 and spokes 3, 4; at most one outer edge may be
forced into {3, 4}.  The work is split into six stages that each take and
return a :class:`StepState`.
"""

from __future__ import annotations

from ..coloring import PartialColoring
from ..gp_graph import GPGraph
from ..segments import (
    ExtensionInfeasible,
    cycle_five_constraints_seq,
    cycle_three_edges_seq,
    cycle_two_paths_seq,
    third,
)
from . import common as cm
from .repair import FIVE, Tier, repair_fallback
from .report import ColoringReport, Method, StepState, finish, offpalette_outer

PALETTE = cm.PALETTE

# seed rows: (predicate on (m, d, t), P1, P2, P3, P4); None marks "?"
_ODD_M = [
    # d odd, t odd
    (lambda m, d, t: d % 2 and t % 2 and t == 1 and d == 5, (3, 1), (0, 2), (2, 1), (0, 3)),
    (lambda m, d, t: d % 2 and t % 2 and t == 1, (2, 1), (0, 2), (2, 1), (0, 2)),
    (lambda m, d, t: d % 2 and t % 2 and t == m - 2, (2, 0), (0, 2), (2, 0), (0, 2)),
    (lambda m, d, t: d % 2 and t % 2, (0, 1), (0, 2), (0, 1), (0, 2)),
    # d odd, t even
    (lambda m, d, t: d % 2 and t == 2 and t != m - 1, (0, 2), (2, 0), (0, 2), (2, 0)),
    (lambda m, d, t: d % 2 and t == m - 1 and d == 5, (0, 1), (2, 3), (3, 1), (2, 0)),
    (lambda m, d, t: d % 2 and t == m - 1, (0, 1), (2, 0), (0, 1), (2, 0)),
    (lambda m, d, t: d % 2, (1, 0), (2, 0), (1, 0), (2, 0)),
    # d even, t odd
    (lambda m, d, t: t % 2 and t == 1, (2, 1), (0, 4), (2, 1), (0, 2)),
    (lambda m, d, t: t % 2 and t == m - 2, (0, 2), (2, 0), (0, 2), (2, 0)),
    (lambda m, d, t: t % 2, (1, 0), (2, 0), (1, 0), (2, 0)),
    # d even, t even
    (lambda m, d, t: t not in (m - 1, 2), (0, 1), (0, 2), (0, 1), (0, 2)),
    (lambda m, d, t: t == 2, (2, 0), (0, 2), (2, 0), (0, 2)),
    (lambda m, d, t: True, (0, 1), (2, 0), (0, 1), (2, 4)),
]
_EVEN_M = [
    (lambda m, d, t: d % 2, (2, 1), (None, 0), (0, 1), (None, 2)),
    (lambda m, d, t: t not in (m - 1, 1), (0, 1), (None, 0), (1, 2), (None, 2)),
    (lambda m, d, t: t == 1, (2, 0), (None, 0), (2, 1), (None, 2)),
    (lambda m, d, t: True, (0, 1), (None, 0), (0, 2), (None, 2)),
]


def path_seeds(m: int, d: int, t: int) -> dict[str, tuple[int | None, int | None]]:
    """Seed colors of P1..P4 for the given n/d, d and t."""
    rows = _ODD_M if m % 2 else _EVEN_M
    for pred, *cells in rows:
        if pred(m, d, t):
            return dict(zip(("P1", "P2", "P3", "P4"), cells))
    raise AssertionError("unreachable: the last row always matches")


def spoke_color(i: int, r: int) -> int:
    return 3 + (i + r) % 2


def anchor_spokes(m: int, d: int, t: int) -> tuple[int, ...]:
    """Colors of s^1_0, s^d_0, s^1_t, s^d_{m-1-t}, s^1_{m-1}, s^d_{m-1}, s^1_{t-1}, s^d_{m-t}."""
    return (
        spoke_color(1, 0),
        spoke_color(d, 0),
        spoke_color(1, t),
        spoke_color(d, m - 1 - t),
        spoke_color(1, m - 1),
        spoke_color(d, m - 1),
        spoke_color(1, t - 1),
        spoke_color(d, m - t),
    )


def path_ranges(g: GPGraph) -> dict[str, list[int]]:
    """Outer edge indices of P1..P4 and Q1..Q4 (edge j is u_j u_{j+1})."""
    n, d, ell = g.n, g.d, g.ell
    return {
        "P1": [n - 1, 0],
        "P2": [d - 2, d - 1],
        "P3": [ell - 1, ell],
        "P4": [ell + d - 2, ell + d - 1],
        "Q1": [n - 1] + list(range(0, d)),
        "Q2": list(range(ell - 1, ell + d)),
        "Q3": list(range(d, ell - 1)),
        "Q4": list(range(ell + d, n - 1)),
    }


# --- stages --------------------------------------------------------------


def stage1_spokes(state: StepState) -> StepState:
    state.stage = "step1"
    g = state.graph
    for i in range(1, g.d + 1):
        for r in range(g.m):
            state.coloring[g.spoke(i, r)] = spoke_color(i, r)
    return state


def stage2_first_last_cycles(state: StepState) -> StepState:
    state.stage = "step2"
    g = state.graph
    m, t, d = g.m, g.t, g.d
    try:
        # frame x_0 = v^1_{t-2}: P at frame e_0..e_2, P' at frame e_{m-t}
        seq = cycle_two_paths_seq(m, (m - t) % m, PALETTE)
    except (ValueError, ExtensionInfeasible) as exc:
        state.note(f"C^1 windows P, P' not extendable ({exc}); P kept, P' dropped")
        pre = {x: c for x, c in enumerate(PALETTE)}
        seq = cm.complete_cycle(m, pre)
        assert seq is not None
    for x, c in enumerate(seq):
        state.coloring[g.inner_edge(1, t - 2 + x)] = c
    for r in range(m):
        state.coloring[g.inner_edge(d, r)] = state.coloring[g.inner_edge(1, r + t)]
    return state


def stage3_connectors(state: StepState) -> StepState:
    state.stage = "step3"
    g = state.graph
    for r in range(g.m):
        conn, s1, sd = g.connector_for_spoke_pair(r)
        col = state.coloring
        if col[s1] != col[sd]:
            continue
        used = {col[g.inner_edge(1, r - 1)], col[g.inner_edge(1, r)]}
        (c,) = third(PALETTE, *used)
        if not cm.set_color(state, conn, c):
            state.note(f"connector {g.edges[conn].endpoints} already colored")
    return state


def _seed(state: StepState, seeds: dict[str, tuple], ranges: dict[str, list[int]]) -> None:
    g = state.graph
    for name, cells in seeds.items():
        for j, c in zip(ranges[name], cells):
            if c is None:
                continue
            e = g.outer_edge(j)
            old = state.coloring.get(e)
            if old is None:
                state.coloring[e] = c
            elif old != c:
                if c in (3, 4):
                    # the table deliberately overrides a forced connector color
                    state.coloring.recolor(e, c)
                else:
                    state.note(f"{name} seed {c} on e_{j % g.n} clashes with {old}")
        state.seeded_paths[name] = {"edges": [j % g.n for j in ranges[name]], "seed": cells}


def _extend_q12(state: StepState, ranges) -> bool:
    g = state.graph
    first, second = ("Q2", "Q1") if g.t == 1 else ("Q1", "Q2")
    if not cm.run_process(state, ranges[first], 2):
        return False
    if g.m % 2:
        # copy the pattern of the first path onto the uncolored edges of the second
        for j_src, j_dst in zip(ranges[first], ranges[second]):
            dst, src = g.outer_edge(j_dst), cm.outer_color(state, j_src)
            if state.coloring.get(dst) is None and src is not None:
                state.coloring[dst] = src
        return cm.clean(state)
    return cm.run_process(state, ranges[second], 1)


def _post_conditions(state: StepState) -> bool:
    g = state.graph
    d, ell = g.d, g.ell
    if not cm.single_neighbour_color(state, d - 2):
        return not cm.single_neighbour_color(state, ell + d - 2)
    return not cm.single_neighbour_color(state, ell)


def stage4_q1_q2(state: StepState) -> StepState:
    state.stage = "step4"
    g = state.graph
    ranges = path_ranges(g)
    seeds = path_seeds(g.m, g.d, g.t)
    for name in ("Q1", "Q2"):
        state.seeded_paths[name] = {"edges": [j % g.n for j in ranges[name]], "seed": None}
    if g.m % 2:
        _seed(state, seeds, ranges)
        if not _extend_q12(state, ranges):
            state.note("Q1/Q2 extension failed")
        return state
    # even n/d: the "?" cells are searched in ascending order
    base = state.coloring.copy()
    for q2 in PALETTE:
        for q4 in PALETTE:
            trial = StepState(g, base.copy(), dict(state.seeded_paths))
            filled = dict(seeds)
            filled["P2"] = (q2, seeds["P2"][1])
            filled["P4"] = (q4, seeds["P4"][1])
            _seed(trial, filled, ranges)
            if trial.deviations or not cm.clean(trial):
                continue
            if _extend_q12(trial, ranges) and _post_conditions(trial):
                state.coloring = trial.coloring
                state.seeded_paths = trial.seeded_paths
                return state
    state.note("no choice of the open seed cells meets the post-conditions")
    _seed(state, seeds, ranges)
    _extend_q12(state, ranges)
    return state


def _last_connector(state: StepState, view: list[int], c: int) -> None:
    """Treatment of the last connector at view position ``c`` for d in {3, 4}."""
    g = state.graph
    d = g.d
    j = view[c]
    e = g.outer_edge(j)
    at = lambda off: cm.outer_color(state, view[c + off]) if 0 <= c + off < len(view) else None
    cur = state.coloring.get(e)
    if cur is None:
        if d == 3:
            options = sorted({at(3), at(4)} - {at(-1), None})
        else:
            options = third(PALETTE, at(-1), at(5))
        if options:
            state.coloring[e] = options[0]
        return
    a = state.coloring[cm.spoke_at(state, j)]
    if (d == 3 and cur not in (at(3), at(4))) or (d == 4 and cur == at(5)):
        (b,) = {3, 4} - {a}
        state.coloring.recolor(e, b)


def _fill_segment(state: StepState, q: list[int], before: list[int], after: list[int], forward: bool) -> None:
    g = state.graph
    d = g.d
    if not forward:
        q = q[::-1]
        before, after = after[::-1], before[::-1]
    view = before + q
    view += after
    off = len(before)
    conns = [p for p, j in enumerate(q) if (j + 1) % d == 0]
    if not conns:
        if not cm.run_process(state, view, 2):
            state.note(f"process 2 failed on connector-free segment starting e_{q[0]}")
        return
    pc = conns[-1]
    if len(q) - pc != d:
        state.note(f"last connector block at e_{q[pc]} is not {d} edges long")
    head = before + q[:pc]
    if state.coloring.get(g.outer_edge(q[pc])) is not None:
        head.append(q[pc])  # visible to the rule, never refilled
    if pc and not cm.run_process(state, head, 1):
        state.note(f"process 1 failed before e_{q[pc]}")
    if d in (3, 4):
        _last_connector(state, view, off + pc)
    if not cm.run_process(state, view[off + pc - 2 :], 2):
        state.note(f"process 2 failed on block from e_{q[pc]}")


def stage5_q3_q4(state: StepState) -> StepState:
    state.stage = "step5"
    g = state.graph
    n, d, ell = g.n, g.d, g.ell
    ranges = path_ranges(g)
    forward = cm.single_neighbour_color(state, d - 2)
    segments = (
        (ranges["Q3"], [d - 2, d - 1], [ell - 1, ell]),
        (ranges["Q4"], [ell + d - 2, ell + d - 1], [n - 1, 0]),
    )
    for q, before, after in segments:
        if q:
            _fill_segment(state, q, before, after, forward)
    return state


def _wrap_options(state: StepState, i: int) -> list[int]:
    g = state.graph
    banned = cm.f0_vertex(state, i - 1) | cm.f0_vertex(state, g.ell + i - 1)
    return third(PALETTE, *banned)


def _vertex_constraints(state: StepState) -> dict[int, list[tuple[int, frozenset[int]]]]:
    """Per middle cycle, vertices whose two cycle edges are pinned to a color pair."""
    g = state.graph
    out: dict[int, list[tuple[int, frozenset[int]]]] = {}
    for e in offpalette_outer(state.coloring):
        x = g.edges[e].pos
        b = state.coloring[e]
        for y, nxt in ((x + 2, x + 1), (x - 1, x - 1)):
            if state.coloring[cm.spoke_at(state, y)] != b:
                continue
            i, r = g.locate(y)
            if not 2 <= i <= g.d - 1:
                continue
            pair = frozenset(third(PALETTE, cm.outer_color(state, nxt)))
            if len(pair) == 2:
                out.setdefault(i, []).append((r, pair))
    return out


def _extension_route(m: int, pre: dict[int, int], vsets) -> list[int] | None:
    """Use the three-edge or five-constraint extension when the shape fits."""
    if len(vsets) == 1 and len(pre) == 1:
        r, S = vsets[0]
        for a, b in (sorted(S), sorted(S)[::-1]):
            trial = dict(pre)
            if trial.get((r - 1) % m, a) != a or trial.get(r % m, b) != b:
                continue
            trial[(r - 1) % m], trial[r % m] = a, b
            if len(trial) != 3:
                continue
            try:
                seq, _ = cycle_three_edges_seq(m, trial, PALETTE)
                return seq
            except (ValueError, ExtensionInfeasible):
                continue
    if len(vsets) == 2 and len(pre) == 1:
        (w_pos, w), = pre.items()
        (r1, S1), (r2, S2) = sorted(vsets)
        common = S1 & S2
        if w_pos == m - 1 and len(common) == 1:
            (b,) = common
            (a,) = S1 - common
            (c,) = S2 - common
            # frame e_0 is the wrap edge, so frame vertex x_p is v_{p-1}
            try:
                frame, _ = cycle_five_constraints_seq(m, r1 + 1, r2 + 1, w, (a, b, c))
                return [frame[(x + 1) % m] for x in range(m)]
            except (ValueError, ExtensionInfeasible):
                pass
    return None


def stage6_middle_cycles(state: StepState) -> StepState:
    state.stage = "step6"
    g = state.graph
    m = g.m
    constraints = _vertex_constraints(state)
    for i in range(2, g.d):
        vsets = constraints.get(i, [])
        wraps = _wrap_options(state, i) if m % 2 else [None]
        if not wraps:
            state.note(f"no color for the closing edge of C^{i}")
            wraps = third(PALETTE, *cm.f0_vertex(state, i - 1)) or [0]
        seq = None
        for w in wraps:
            pre = {} if w is None else {m - 1: w}
            if not vsets:
                first = 0 if w is None else w
                # frame position 0 is the closing edge v^i_{m-1} v^i_0
                pat = cm.rotate_pattern(m, first)
                seq = [pat[(x + 1) % m] for x in range(m)]
                break
            seq = _extension_route(m, pre, vsets) or cm.complete_cycle(m, pre, vsets)
            if seq is not None:
                break
        if seq is None:
            state.note(f"C^{i} cannot meet its constraints; closing with a plain pattern")
            pat = cm.rotate_pattern(m, wraps[0])
            seq = [pat[(x + 1) % m] for x in range(m)]
        for r, c in enumerate(seq):
            state.coloring[g.inner_edge(i, r)] = c
    return state


STAGES = (
    stage1_spokes,
    stage2_first_last_cycles,
    stage3_connectors,
    stage4_q1_q2,
    stage5_q3_q4,
    stage6_middle_cycles,
)


def spare_connectors(g: GPGraph) -> frozenset[int]:
    """Outer edge ids that may carry color 3 or 4 in the main construction."""
    n, d, ell = g.n, g.d, g.ell
    idx = (n - 1, d - 1, ell + d - 1, ell - d - 1, n - d - 1, 2 * d - 1, ell + 2 * d - 1)
    return frozenset(g.outer_edge(j) for j in idx)


def _allowed(state: StepState):
    g = state.graph
    spare = spare_connectors(g)
    keep = [e for e in offpalette_outer(state.coloring) if e in spare][:1]
    col = state.coloring
    spokes = set(g.spokes)

    def allowed(e: int):
        if e in keep:
            return (col[e],) + PALETTE
        if e in spokes:
            return (3, 4)
        return PALETTE

    return allowed


def _tiers(state: StepState) -> tuple[Tier, ...]:
    # C^0 keeps at most one edge off the palette, and only on a spare connector
    g = state.graph
    col = state.coloring
    outer = set(g.outer_cycle)
    spokes = set(g.spokes)
    spare = spare_connectors(g)
    amo = [(e, c) for e in sorted(spare) for c in (3, 4)]

    def all_free(e: int):
        if e in outer:
            return FIVE if e in spare else PALETTE
        return FIVE

    def inner_free(e: int):
        return (col[e],) if e in spokes else all_free(e)

    return (Tier("free inner cycles", inner_free, amo), Tier("free spokes", all_free, amo))


def color_main_d3(graph: GPGraph) -> ColoringReport:
    if graph.d < 3 or graph.m in (2, 5):
        raise ValueError(f"main construction needs gcd >= 3 and n/d not in {{2, 5}}, got {graph!r}")
    state = StepState(graph, PartialColoring(graph))
    for stage in STAGES:
        stage(state)
    state.stage = "repair"
    spare = spare_connectors(graph)
    off = offpalette_outer(state.coloring)
    kept = [e for e in off if e in spare][:1]
    if not cm.clean(state) or not state.coloring.is_total() or off != kept:
        # only one off-palette edge of C^0 may stay, and only on a spare connector
        for e in off:
            if e not in kept:
                state.repair_log.append((e, state.coloring[e], None))
                state.coloring.recolor(e, None)
        repair_fallback(state, frozen=set(graph.spokes), allowed=_allowed(state), tiers=_tiers(state))
    return finish(state, Method.MAIN_D3)

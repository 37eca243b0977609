"""Colorings for n/d = 5 and n/d = 2."""

from __future__ import annotations

from ..coloring import PartialColoring
from ..gp_graph import GPGraph
from ..segments import cycle_two_paths_seq
from . import common as cm
from .repair import repair_fallback
from .report import ColoringReport, Method, StepState, finish

FIVE = (0, 1, 2, 3, 4)


def ratio_five_outer(n: int, d: int, k: int) -> list[int]:
    """Colors of e_0..e_{n-1} on the outer cycle."""
    if k % 5 == 0:
        # block b covers e_{bd-1}..e_{bd+d-2} and starts with color b
        return [((j + 1) // d + j + 1) % 5 for j in range(n)]
    return [j % 5 for j in range(n)]


def color_ratio_five(graph: GPGraph) -> ColoringReport:
    g = graph
    if g.m != 5:
        raise ValueError(f"needs n/d = 5, got {g!r}")
    state = StepState(g, PartialColoring(g))
    state.stage = "outer"
    for j, c in enumerate(ratio_five_outer(g.n, g.d, g.k)):
        state.coloring[g.outer_edge(j)] = c

    state.stage = "spokes"
    windows = {}
    for x in range(g.n):
        f2 = {cm.outer_color(state, x + off) for off in (-2, -1, 0, 1)}
        windows[x] = frozenset(f2)
        missing = sorted(set(FIVE) - f2)
        if len(missing) != 1:
            state.note(f"F2(u_{x}) has {len(f2)} colors")
        state.coloring[cm.spoke_at(state, x)] = missing[0]
    for i in range(1, g.d + 1):
        group = {windows[g.outer_of(i, r)] for r in range(5)}
        if len(group) != 5:
            state.note(f"F2 windows along C^{i} are not pairwise different")

    state.stage = "inner"
    for i in range(1, g.d + 1):
        for r in range(5):
            # the one spoke farther than two from v^i_r v^i_{r+1} sits at v^i_{r+3}
            state.coloring[g.inner_edge(i, r)] = state.coloring[g.spoke(i, r + 3)]

    state.stage = "repair"
    if not cm.clean(state):
        repair_fallback(state)
    return finish(state, Method.RATIO5)


def color_ratio_two(graph: GPGraph) -> ColoringReport:
    g = graph
    if g.n != 2 * g.k:
        raise ValueError(f"needs n = 2k, got {g!r}")
    n, d = g.n, g.d
    state = StepState(g, PartialColoring(g))
    state.stage = "outer"
    for j, c in enumerate(cycle_two_paths_seq(n, 0, (0, 1, 2))):
        state.coloring[g.outer_edge(j)] = c

    state.stage = "spokes"
    for i in range(1, d + 1):
        state.coloring[g.spoke(i, 0)] = 3 + i % 2
        state.coloring[g.spoke(i, 1)] = 3 + (i + 1) % 2

    state.stage = "inner"
    avoid = {cm.outer_color(state, n - 1), cm.outer_color(state, d - 1)}
    for i in range(1, d + 1):
        e = g.inner_edge(i, 0)
        used = {state.coloring[g.spoke(i, 0)], state.coloring[g.spoke(i, 1)]}
        if i in (1, d):
            used |= avoid
        state.coloring[e] = min(set(FIVE) - used)

    state.stage = "repair"
    if not cm.clean(state):
        repair_fallback(state)
    return finish(state, Method.RATIO2)

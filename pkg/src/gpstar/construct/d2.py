"""Five-star coloring of GP(n, k) with gcd(n, k) = 2 in the three covered residues."""

from __future__ import annotations

from ..coloring import PartialColoring
from ..gp_graph import GPGraph
from ..segments import third
from . import common as cm
from .main_d3 import stage1_spokes, stage3_connectors
from .repair import repair_fallback
from .report import ColoringReport, Method, StepState, Unsupported, finish

PALETTE = cm.PALETTE


def d2_case(graph: GPGraph) -> int | None:
    """Which covered residue class (1, 2 or 3) the instance falls in, if any."""
    if graph.d != 2 or graph.n == 2 * graph.k:
        return None
    n, t = graph.n, graph.t
    if n % 6 == 0:
        return 1
    if n % 6 == 2 and t % 3 == 2:
        return 2
    if n % 6 == 4 and t % 3 == 1:
        return 3
    return None


def first_cycle_pattern(case: int, m: int, t: int) -> list[int]:
    """Colors of v^1_r v^1_{r+1}, r = 0..m-1."""
    if case == 1:
        body = [1, 2, 0] * ((m - 3) // 3)
        # the printed tail 1, 2 would put two 2s side by side across the wrap
        return [2] + body + [1, 0] if t % 3 == 1 else [0] + body + [2, 1]
    if case == 2:
        return [0, 1, 2] * ((m - 1) // 3) + [1]
    return [0, 1, 2] * ((m - 5) // 3) + [0, 1, 0, 2, 1]


def p_seeds(case: int, t: int) -> tuple[tuple[int, ...], tuple[int, ...]] | None:
    """Colors of P1 = e_{n-1}, e_0, e_1 and P2 = e_{l-1}, e_l, e_{l+1}."""
    even = t % 2 == 0
    if case == 1 and t % 3 == 1:
        return ((1, 2, 0), (0, 2, 1)) if even else ((0, 1, 2), (2, 1, 0))
    if case == 1:
        return ((2, 0, 1), (1, 0, 2)) if even else ((1, 2, 0), (0, 2, 1))
    if case == 2:
        return ((2, 0, 1), (2, 1, 0)) if even else ((1, 2, 0), (0, 1, 2))
    return None


def _paint(state: StepState, j: int, c: int) -> None:
    e = state.graph.outer_edge(j)
    if not cm.set_color(state, e, c):
        state.note(f"e_{j % state.graph.n} colored {state.coloring[e]}, script asks {c}")


def _equal_neighbours(state: StepState) -> None:
    """Where consecutive connectors e, e+2 match, make e-2 and e+4 match and fill between."""
    g = state.graph
    n = g.n
    col = lambda j: cm.outer_color(state, j)
    for j in range(1, n, 2):
        x = col(j)
        if x is None or col(j + 2) != x:
            continue
        w = col(j - 2) if col(j - 2) is not None else col(j + 4)
        if w is None:
            banned = {x, col(j - 4), col(j + 6)}
            w = third(PALETTE, *banned)[0] if third(PALETTE, *banned) else third(PALETTE, x)[0]
        for y in (j - 2, j + 4):
            if col(y) is None:
                _paint(state, y, w)
        if col(j - 2) != col(j + 4):
            state.note(f"connectors around e_{j % n} cannot be matched")
            continue
        rest = third(PALETTE, x, w)
        if len(rest) != 1:
            state.note(f"connectors e_{(j - 2) % n}, e_{j % n}, e_{(j + 2) % n} share a color")
            continue
        (y,) = rest
        for pos, c in ((j - 1, y), (j + 1, w), (j + 3, y)):
            if col(pos) is None:
                _paint(state, pos, c)


def _case3_recolor(state: StepState) -> None:
    g = state.graph
    n, k, m = g.n, g.k, g.m
    # e = u_{n-1} u_0 and e' = u_{k(m-3)-1} u_{k(m-3)}, as outer indices
    for j, fe in ((n - 1, 0), ((k * (m - 3) - 1) % n, 1)):
        s_a, s_b = cm.spoke_at(state, j), cm.spoke_at(state, j + 1)
        c = state.coloring[s_a]
        if state.coloring[s_b] != c:
            state.note(f"spokes beside e_{j} differ; using the first")
        for s in (s_a, s_b):
            state.coloring.recolor(s, 2)
        for pos, colr in ((j, fe), (j - 2, 2), (j + 2, 2), (j - 1, c), (j + 1, c)):
            state.coloring.recolor(g.outer_edge(pos), colr)


def _finish_outer(state: StepState) -> None:
    g = state.graph
    n = g.n
    col = lambda j: cm.outer_color(state, j)
    for j in range(1, n, 2):
        if col(j) is None:
            options = third(PALETTE, col(j - 2), col(j + 2))
            _paint(state, j, options[0] if options else 0)
    for j in range(0, n, 2):
        if col(j) is None:
            options = third(PALETTE, col(j - 1), col(j + 1))
            if not options:
                state.note(f"no color left for e_{j}")
                options = [0]
            _paint(state, j, options[0])


def color_d2(graph: GPGraph) -> ColoringReport:
    if graph.d != 2 or graph.n <= 2 * graph.k:
        raise ValueError(f"d = 2 construction needs gcd(n, k) = 2 and n > 2k, got {graph!r}")
    case = d2_case(graph)
    if case is None:
        raise Unsupported(f"{graph!r} is outside the covered d = 2 residues")
    g = graph
    m, t = g.m, g.t
    state = StepState(g, PartialColoring(g))
    stage1_spokes(state)

    state.stage = "cycles"
    pat = first_cycle_pattern(case, m, t)
    for r, c in enumerate(pat):
        state.coloring[g.inner_edge(1, r)] = c
    for r in range(m):
        state.coloring[g.inner_edge(2, r)] = pat[(r + t) % m]
    stage3_connectors(state)

    state.stage = "outer"
    seeds = p_seeds(case, t)
    if seeds is not None:
        p1, p2 = seeds
        for j, c in zip((g.n - 1, 0, 1), p1):
            _paint(state, j, c)
        for j, c in zip((g.ell - 1, g.ell, g.ell + 1), p2):
            _paint(state, j, c)
        _equal_neighbours(state)
    else:
        _case3_recolor(state)
    _finish_outer(state)

    state.stage = "repair"
    if not cm.clean(state) or not state.coloring.is_total():
        repair_fallback(state, frozen=set(g.spokes))
    method = (Method.D2_CASE1, Method.D2_CASE2, Method.D2_CASE3)[case - 1]
    return finish(state, method)

"""Helpers shared by the constructions: outer-cycle queries and process runs."""

from __future__ import annotations

from typing import Sequence

from ..exact import consistent
from ..segments import RULES, complete_seq, third
from ..verify import star_index, verify_star
from .report import StepState

PALETTE = (0, 1, 2)


def outer_color(state: StepState, j: int) -> int | None:
    return state.coloring.get(state.graph.outer_edge(j))


def f0_vertex(state: StepState, x: int) -> set[int]:
    """Colors of the outer-cycle edges at ``u_x``."""
    return {c for c in (outer_color(state, x - 1), outer_color(state, x)) if c is not None}


def f0_edge(state: StepState, j: int) -> list[int | None]:
    """Colors of the two outer-cycle neighbours of ``e_j`` (None if uncolored)."""
    return [outer_color(state, j - 1), outer_color(state, j + 1)]


def single_neighbour_color(state: StepState, j: int) -> bool:
    """Whether both outer neighbours of ``e_j`` are colored alike."""
    a, b = f0_edge(state, j)
    return a is not None and a == b


def spoke_at(state: StepState, x: int) -> int:
    g = state.graph
    x %= g.n
    return g.eid(x, g.n + x)


def set_color(state: StepState, e: int, c: int) -> bool:
    """Color ``e`` unless it already has another color; report success."""
    old = state.coloring.get(e)
    if old is None:
        state.coloring[e] = c
        return True
    return old == c


def clean(state: StepState) -> bool:
    return not verify_star(state.graph, state.coloring)


def color_array(state: StepState) -> list[int]:
    col = state.coloring
    return [col.get(e) if col.get(e) is not None else -1 for e in range(len(state.graph.edges))]


def run_process(
    state: StepState,
    view: Sequence[int],
    process: int,
    palette: Sequence[int] = PALETTE,
    node_budget: int = 50_000,
) -> bool:
    """Fill the uncolored outer edges of ``view`` (outer indices, in order).

    Each uncolored edge takes a color its process rule admits, tried in
    ascending order; choices that create a defect anywhere in the colored
    part of the graph are undone.  Returns False, leaving ``view`` untouched,
    when no run of the process succeeds within the budget.
    """
    g = state.graph
    ids = [g.outer_edge(j) for j in view]
    colors = color_array(state)
    idx = star_index(g)
    rule = RULES[process]
    pending = [p for p, e in enumerate(ids) if colors[e] < 0]
    nodes = 0

    def rec(q: int) -> bool:
        nonlocal nodes
        if q == len(pending):
            return True
        p = pending[q]
        e = ids[p]
        sub = [colors[f] if colors[f] >= 0 else None for f in ids]
        for c in rule(sub, p, palette):
            nodes += 1
            if nodes > node_budget:
                return False
            colors[e] = c
            if consistent(idx, colors, e) and rec(q + 1):
                return True
        colors[e] = -1
        return False

    if not rec(0):
        return False
    for p in pending:
        state.coloring[ids[p]] = colors[ids[p]]
    return True


def rotate_pattern(m: int, first: int) -> list[int]:
    """3-star colors for a plain ``m``-cycle (m != 5) whose position 0 gets ``first``."""
    from ..segments import _case_start

    x, y = third(PALETTE, first)
    return _case_start(m, first, x, y)


def complete_cycle(
    m: int,
    pre: dict[int, int],
    vertex_sets: Sequence[tuple[int, frozenset[int]]] = (),
) -> list[int] | None:
    """Exhaustive 3-star completion of an ``m``-cycle.

    ``vertex_sets`` holds ``(r, S)``: edges ``r-1`` and ``r`` must carry
    exactly the two colors of ``S``.  Both orders of every pair are tried.
    """
    choices = [[]]
    for r, S in vertex_sets:
        a, b = sorted(S)
        pairs = (((r - 1) % m, a), (r % m, b)), (((r - 1) % m, b), (r % m, a))
        choices = [c + list(p) for c in choices for p in pairs]
    for extra in choices:
        seq: list[int | None] = [pre.get(x) for x in range(m)]
        ok = True
        for x, c in extra:
            if seq[x] is not None and seq[x] != c:
                ok = False
                break
            seq[x] = c
        if ok:
            out = complete_seq(seq, PALETTE, True)
            if out is not None:
                return out
    return None

"""Verified repair of a partial coloring: local backtracking, then SAT."""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from typing import Callable, Collection, Sequence

from ..coloring import PartialColoring
from ..exact import Indeterminate, search
from ..sat import solve_star
from ..verify import star_index, verify_star
from .report import RepairFailed, StepState

FIVE = tuple(range(5))
LOCAL_RADII = (0, 1, 2, 4)


@dataclass(frozen=True)
class Tier:
    """A whole-graph repair attempt: per-edge domains plus an optional at-most-one group."""

    name: str
    domain: Callable[[int], Sequence[int]]
    at_most_one: Collection[tuple[int, int]] = ()


def _ball(idx, seeds: Collection[int], radius: int) -> set[int]:
    """Edges within line-graph distance ``radius`` of ``seeds``."""
    dist = {e: 0 for e in seeds}
    queue = deque(seeds)
    while queue:
        e = queue.popleft()
        if dist[e] == radius:
            continue
        for f in idx.neighbors[e]:
            if f not in dist:
                dist[f] = dist[e] + 1
                queue.append(f)
    return set(dist)


def _order(idx, region: set[int], seeds: Collection[int]) -> list[int]:
    # BFS from the defects keeps the search local to them
    out, seen = [], set()
    queue = deque(sorted(s for s in seeds if s in region))
    seen.update(queue)
    while queue:
        e = queue.popleft()
        out.append(e)
        for f in idx.neighbors[e]:
            if f in region and f not in seen:
                seen.add(f)
                queue.append(f)
    out += sorted(region - seen)
    return out


def _adopt(state: StepState, sol: list[int], region: Collection[int]) -> PartialColoring:
    out = state.coloring.copy()
    for e in sorted(region):
        if out.get(e) != sol[e]:
            state.repair_log.append((e, out.get(e), sol[e]))
            out.recolor(e, sol[e])
    state.coloring = out
    return out


def _local(state, idx, bad, frozen, allowed, node_budget) -> PartialColoring | None:
    m = len(state.graph.edges)
    current = [c if c is not None else -1 for c in (state.coloring.get(e) for e in range(m))]
    prefer = {e: c for e, c in enumerate(current) if c >= 0}
    for radius in LOCAL_RADII:
        region = _ball(idx, bad, radius) - frozen
        if not region:
            continue
        colors = [(-1 if e in region else c) for e, c in enumerate(current)]
        if any(colors[e] < 0 for e in range(m) if e not in region):
            return None  # an uncolored edge is frozen
        try:
            sol, _ = search(state.graph, colors, _order(idx, region, bad), allowed,
                            node_budget * (1 + radius), prefer=prefer)
        except Indeterminate:
            continue
        if sol is not None:
            return _adopt(state, sol, region)
    return None


def repair_fallback(
    state: StepState,
    frozen: Collection[int] = (),
    allowed: Callable[[int], Sequence[int]] | None = None,
    tiers: Sequence[Tier] = (),
    node_budget: int = 20_000,
) -> PartialColoring:
    """Complete and fix ``state.coloring`` into a total star coloring.

    First, edges near a defect (line-graph radius 0, 1, 2, 4) are recolored
    by backtracking, keeping ``frozen`` edges and the ``allowed`` domains.
    Then the whole graph is handed to a SAT solver, under the same
    restrictions, then under each of ``tiers`` in turn, and finally with
    plain five colors.  The solver is steered towards the current colors.
    Each change is appended to ``state.repair_log`` and the repaired coloring
    is stored back into ``state``.
    """
    graph = state.graph
    viol = verify_star(graph, state.coloring, require_total=True)
    if not viol:
        return state.coloring
    idx = star_index(graph)
    bad = sorted({e for v in viol for e in v.witness})
    frozen = set(frozen)
    allowed = allowed or (lambda e: FIVE)

    out = _local(state, idx, bad, frozen, allowed, node_budget)
    if out is not None:
        return out

    col = state.coloring
    prefer = {e: c for e, c in col.as_dict().items()}
    strict = Tier("strict", lambda e: (col[e],) if e in frozen and col.get(e) is not None else allowed(e))
    for tier in (strict, *tiers, Tier("five", lambda e: FIVE)):
        sol = solve_star(graph, tier.domain, prefer=prefer, at_most_one=tier.at_most_one)
        if sol is not None:
            if tier.name != "strict":
                state.note(f"repair needed the {tier.name} tier")
            return _adopt(state, sol, range(len(graph.edges)))
    raise RepairFailed(f"no star coloring of {graph!r} with five colors")

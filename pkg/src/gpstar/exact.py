"""Exact star edge coloring by backtracking.

The search assigns edges in breadth-first order from vertex 0 and checks only
the 4-edge paths and cycles through the edge just colored.  With no frozen
edges, color symmetry is broken by letting each new edge open at most one
fresh color.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field
from typing import Callable, Iterable, Mapping, Sequence

from .coloring import Graph, PartialColoring
from .verify import star_index

DEFAULT_EDGE_BOUND = 120


class Infeasible(Exception):
    """The search space was exhausted: no coloring exists."""


class Indeterminate(Exception):
    """The node budget ran out before the search finished."""

    def __init__(self, msg: str, nodes: int):
        super().__init__(msg)
        self.nodes = nodes


@dataclass
class SearchConfig:
    max_colors: int = 5
    node_budget: int = 2_000_000
    symmetry_breaking: bool = True
    frozen: Mapping[int, int] = field(default_factory=dict)
    edge_bound: int = DEFAULT_EDGE_BOUND

    def __post_init__(self):
        if not 1 <= self.max_colors <= 7:
            raise ValueError(f"max_colors must lie in 1..7, got {self.max_colors}")
        if self.node_budget < 1:
            raise ValueError("node_budget must be positive")


def bfs_edge_order(graph: Graph, root: int = 0, among: Iterable[int] | None = None) -> list[int]:
    """Edges in order of first discovery by BFS from ``root``."""
    inc = graph.incident
    if root not in inc:
        root = next(iter(inc))
    wanted = set(range(len(graph.edges))) if among is None else set(among)
    seen_v = {root}
    seen_e: set[int] = set()
    order: list[int] = []
    queue = deque([root])
    while queue:
        x = queue.popleft()
        for e in inc[x]:
            if e in seen_e:
                continue
            seen_e.add(e)
            if e in wanted:
                order.append(e)
            y = graph.edges[e].u if graph.edges[e].v == x else graph.edges[e].v
            if y not in seen_v:
                seen_v.add(y)
                queue.append(y)
    # components not reached from root
    order += sorted(wanted - set(order))
    return order


def consistent(idx, colors: list[int], e: int) -> bool:
    """No defect among colored edges involves ``e``."""
    c = colors[e]
    for f in idx.neighbors[e]:
        if colors[f] == c:
            return False
    for w in idx.through[e]:
        a, b, x, y = colors[w[0]], colors[w[1]], colors[w[2]], colors[w[3]]
        if a == x and b == y and a >= 0 and b >= 0:
            return False
    return True


def search(
    graph: Graph,
    colors: list[int],
    order: Sequence[int],
    domain: Callable[[int], Sequence[int]],
    node_budget: int,
    symmetry: bool = False,
    prefer: Mapping[int, int] | None = None,
) -> tuple[list[int] | None, int]:
    """Depth-first completion of ``colors`` (``-1`` = free) over ``order``.

    Returns ``(solution, nodes)``; ``solution`` is ``None`` when the space is
    exhausted.  Raises :class:`Indeterminate` when ``node_budget`` runs out.
    """
    idx = star_index(graph)
    colors = list(colors)
    prefer = prefer or {}
    nodes = 0
    depth_max = len(order)

    def options(e: int, used: int) -> list[int]:
        dom = list(domain(e))
        if symmetry:
            dom = [c for c in dom if c <= used + 1]
        p = prefer.get(e)
        if p is not None and p in dom:
            dom.remove(p)
            dom.insert(0, p)
        return dom

    def rec(pos: int, used: int) -> bool:
        nonlocal nodes
        if pos == depth_max:
            return True
        e = order[pos]
        for c in options(e, used):
            nodes += 1
            if nodes > node_budget:
                raise Indeterminate(f"node budget {node_budget} exhausted", nodes)
            colors[e] = c
            if consistent(idx, colors, e) and rec(pos + 1, max(used, c)):
                return True
        colors[e] = -1
        return False

    # initial consistency of the fixed part
    for e, c in enumerate(colors):
        if c >= 0 and not consistent(idx, colors, e):
            return None, 0
    used = max((c for c in colors if c >= 0), default=-1)
    ok = rec(0, used)
    return (colors if ok else None), nodes


def find_star_coloring(graph: Graph, config: SearchConfig | None = None) -> PartialColoring:
    """A total star coloring with at most ``config.max_colors`` colors.

    Raises :class:`Infeasible` when none exists and :class:`Indeterminate`
    when the node budget is exhausted first.
    """
    config = config or SearchConfig()
    m = len(graph.edges)
    frozen = dict(config.frozen)
    if m > config.edge_bound and len(frozen) < m - config.edge_bound:
        raise ValueError(f"{m} edges exceed the solver bound of {config.edge_bound}")
    colors = [-1] * m
    for e, c in frozen.items():
        if not 0 <= c < config.max_colors:
            raise Infeasible(f"frozen color {c} outside 0..{config.max_colors - 1}")
        colors[e] = c
    free = [e for e in range(m) if colors[e] < 0]
    order = bfs_edge_order(graph, 0, free)
    palette = list(range(config.max_colors))
    sol, _ = search(
        graph,
        colors,
        order,
        lambda e: palette,
        config.node_budget,
        symmetry=config.symmetry_breaking and not frozen,
    )
    if sol is None:
        raise Infeasible(f"no star coloring with {config.max_colors} colors")
    return PartialColoring(graph, dict(enumerate(sol)))


def star_chromatic_index(graph: Graph, config: SearchConfig | None = None) -> int:
    """Least ``c`` admitting a star coloring, searching upward from max degree.

    ``config.max_colors`` caps the search; :class:`Infeasible` means the index
    exceeds it.
    """
    config = config or SearchConfig(max_colors=7)
    if len(graph.edges) == 0:
        return 0
    delta = max(len(v) for v in graph.incident.values())
    for c in range(max(delta, 1), config.max_colors + 1):
        trial = SearchConfig(
            max_colors=c,
            node_budget=config.node_budget,
            symmetry_breaking=config.symmetry_breaking,
            frozen=config.frozen,
            edge_bound=config.edge_bound,
        )
        try:
            find_star_coloring(graph, trial)
            return c
        except Infeasible:
            continue
    raise Infeasible(f"no star coloring with at most {config.max_colors} colors")

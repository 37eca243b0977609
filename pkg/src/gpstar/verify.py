"""Star edge coloring checks with explicit defect witnesses."""

from __future__ import annotations

import enum
from dataclasses import dataclass

from .coloring import Graph, PartialColoring


class Defect(str, enum.Enum):
    ADJACENT_EQUAL = "AdjacentEqual"
    BICOLORED_P4 = "BicoloredP4"
    BICOLORED_C4 = "BicoloredC4"
    UNCOLORED = "Uncolored"


@dataclass(frozen=True)
class Violation:
    kind: Defect
    witness: tuple[int, ...]
    colors: tuple[int, ...] = ()

    def to_dict(self, graph: Graph) -> dict:
        return {
            "kind": self.kind.value,
            "witness": [list(graph.edges[e].endpoints) for e in self.witness],
            "colors": list(self.colors),
        }


class StarIndex:
    """Precomputed adjacency and 4-edge paths/cycles of a (subcubic) graph.

    ``paths`` and ``cycles`` hold each 4-edge path or 4-cycle exactly once as
    a tuple of consecutive edge ids; ``through[e]`` lists those containing e.
    """

    def __init__(self, graph: Graph):
        self.graph = graph
        m = len(graph.edges)
        inc = graph.incident
        ends = [e.endpoints for e in graph.edges]
        self.neighbors: list[tuple[int, ...]] = []
        for e, (a, b) in enumerate(ends):
            self.neighbors.append(tuple(sorted({f for f in inc[a] + inc[b] if f != e})))

        paths: set[tuple[int, ...]] = set()
        cycles: set[tuple[int, ...]] = set()
        # grow from every vertex: x0 -e0- x1 -e1- x2 -e2- x3 -e3- x4
        for x0 in inc:
            for e0 in inc[x0]:
                x1 = _other(ends[e0], x0)
                for e1 in inc[x1]:
                    if e1 == e0:
                        continue
                    x2 = _other(ends[e1], x1)
                    if x2 == x0:
                        continue
                    for e2 in inc[x2]:
                        if e2 == e1:
                            continue
                        x3 = _other(ends[e2], x2)
                        if x3 in (x0, x1):
                            continue
                        for e3 in inc[x3]:
                            if e3 == e2:
                                continue
                            x4 = _other(ends[e3], x3)
                            if x4 in (x1, x2):
                                continue
                            w = (e0, e1, e2, e3)
                            if x4 == x0:
                                cycles.add(_canon_cycle(w))
                            else:
                                paths.add(min(w, w[::-1]))
        self.paths = sorted(paths)
        self.cycles = sorted(cycles)
        through: list[list[tuple[int, ...]]] = [[] for _ in range(m)]
        for w in self.paths + self.cycles:
            for e in set(w):
                through[e].append(w)
        self.through = [tuple(x) for x in through]


def _other(pair: tuple[int, int], x: int) -> int:
    return pair[1] if pair[0] == x else pair[0]


def _canon_cycle(w: tuple[int, ...]) -> tuple[int, ...]:
    reps = []
    for seq in (w, w[::-1]):
        for s in range(4):
            reps.append(seq[s:] + seq[:s])
    return min(reps)


def star_index(graph: Graph) -> StarIndex:
    idx = getattr(graph, "_star_index", None)
    if idx is None:
        idx = StarIndex(graph)
        # graphs are immutable, so caching on the instance is safe
        object.__setattr__(graph, "_star_index", idx)
    return idx


def bicolored(c: list[int | None] | dict, w: tuple[int, ...]) -> bool:
    a, b, x, y = (c[e] if not isinstance(c, dict) else c.get(e) for e in w)
    if a is None or b is None or x is None or y is None:
        return False
    return a == x and b == y and a != b


def verify_star(graph: Graph, coloring: PartialColoring, require_total: bool = False) -> list[Violation]:
    """All star-coloring defects of ``coloring``; empty means valid.

    Partial colorings are judged on colored edges only: a 4-path or 4-cycle
    counts once all four of its edges carry a color.
    """
    if coloring.graph is not graph:
        raise ValueError("coloring belongs to a different graph")
    idx = star_index(graph)
    col = coloring.as_dict()
    out: list[Violation] = []
    if require_total:
        out += [Violation(Defect.UNCOLORED, (e,)) for e in range(len(graph.edges)) if e not in col]
    for e, nbrs in enumerate(idx.neighbors):
        ce = col.get(e)
        if ce is None:
            continue
        for f in nbrs:
            if f > e and col.get(f) == ce:
                out.append(Violation(Defect.ADJACENT_EQUAL, (e, f), (ce,)))
    for kind, walks in ((Defect.BICOLORED_P4, idx.paths), (Defect.BICOLORED_C4, idx.cycles)):
        for w in walks:
            if bicolored(col, w):
                out.append(Violation(kind, w, (col[w[0]], col[w[1]])))
    return out


def is_star(graph: Graph, coloring: PartialColoring, require_total: bool = True) -> bool:
    return not verify_star(graph, coloring, require_total)


def count_colors(coloring: PartialColoring) -> int:
    return len(coloring.colors_used())

"""Partial edge colorings and the color-neighbourhood queries on them."""

from __future__ import annotations

import json
from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, Iterator, Mapping

from .gp_graph import GPGraph, norm

MAX_COLOR = 6  # cubic graphs never need more than 7 star colors


class ColoringConflict(ValueError):
    pass


@dataclass(frozen=True, order=True)
class Link:
    u: int
    v: int

    @property
    def endpoints(self) -> tuple[int, int]:
        return (self.u, self.v)


class SimpleGraph:
    """Small undirected graph with the same lookup surface as :class:`GPGraph`."""

    def __init__(self, pairs: Iterable[tuple[int, int]]):
        seen: list[Link] = []
        index: dict[tuple[int, int], int] = {}
        for a, b in pairs:
            if a == b:
                raise ValueError("loops are not supported")
            key = norm(a, b)
            if key in index:
                raise ValueError(f"duplicate edge {key}")
            index[key] = len(seen)
            seen.append(Link(*key))
        self.edges: tuple[Link, ...] = tuple(seen)
        self.edge_index = index
        verts = sorted({x for e in seen for x in e.endpoints})
        self._vertices = verts

    @classmethod
    def path(cls, length: int) -> "SimpleGraph":
        """Path x_0..x_length; edge i is x_i x_{i+1}."""
        return cls((i, i + 1) for i in range(length))

    @classmethod
    def cycle(cls, length: int) -> "SimpleGraph":
        """Cycle x_0..x_{length-1}; edge i is x_i x_{i+1 mod length}."""
        if length < 3:
            raise ValueError("a cycle needs at least 3 edges")
        return cls((i, (i + 1) % length) for i in range(length))

    @property
    def vertices(self) -> list[int]:
        return self._vertices

    @cached_property
    def incident(self) -> dict[int, tuple[int, ...]]:
        inc: dict[int, list[int]] = {x: [] for x in self._vertices}
        for idx, e in enumerate(self.edges):
            inc[e.u].append(idx)
            inc[e.v].append(idx)
        return {x: tuple(v) for x, v in inc.items()}

    def eid(self, a: int, b: int) -> int:
        return self.edge_index[norm(a, b)]


Graph = GPGraph | SimpleGraph


class PartialColoring:
    """Mapping edge id -> color, absent entries meaning uncolored.

    Assigning a color to an already colored edge is an error; use
    :meth:`recolor`, which records the change in :attr:`log`.
    """

    def __init__(self, graph: Graph, assignment: Mapping[int, int] | None = None):
        self.graph = graph
        self._colors: dict[int, int] = {}
        self.log: list[tuple[int, int | None, int]] = []
        for e, c in (assignment or {}).items():
            self[e] = c

    # --- mapping protocol -------------------------------------------------

    def _check(self, e: int, c: int | None = None) -> None:
        if not 0 <= e < len(self.graph.edges):
            raise KeyError(f"edge id {e} not in graph")
        if c is not None and not (isinstance(c, int) and not isinstance(c, bool) and 0 <= c <= MAX_COLOR):
            raise ValueError(f"color {c!r} outside 0..{MAX_COLOR}")

    def __getitem__(self, e: int) -> int:
        return self._colors[e]

    def get(self, e: int) -> int | None:
        return self._colors.get(e)

    def __contains__(self, e: object) -> bool:
        return e in self._colors

    def __setitem__(self, e: int, c: int) -> None:
        if c is None:
            raise ValueError("use recolor(e, None) to clear an edge")
        self._check(e, c)
        old = self._colors.get(e)
        if old is not None and old != c:
            raise ColoringConflict(f"edge {self.graph.edges[e].endpoints} already colored {old}, not {c}")
        self._colors[e] = c

    def recolor(self, e: int, c: int | None) -> None:
        """Overwrite (or clear, with ``None``) the color of ``e``."""
        self._check(e, c)
        old = self._colors.get(e)
        if old == c:
            return
        self.log.append((e, old, c))
        if c is None:
            del self._colors[e]
        else:
            self._colors[e] = c

    def __iter__(self) -> Iterator[int]:
        return iter(sorted(self._colors))

    def __len__(self) -> int:
        return len(self._colors)

    def items(self) -> list[tuple[int, int]]:
        return sorted(self._colors.items())

    def as_dict(self) -> dict[int, int]:
        return dict(self._colors)

    def copy(self) -> "PartialColoring":
        out = PartialColoring(self.graph)
        out._colors = dict(self._colors)
        out.log = list(self.log)
        return out

    def is_total(self) -> bool:
        return len(self._colors) == len(self.graph.edges)

    def uncolored(self) -> list[int]:
        return [e for e in range(len(self.graph.edges)) if e not in self._colors]

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, PartialColoring):
            return NotImplemented
        return self.graph is other.graph and self._colors == other._colors

    def __repr__(self) -> str:
        return f"PartialColoring({self.graph!r}, {len(self)}/{len(self.graph.edges)} colored)"

    # --- neighbourhood queries ---------------------------------------------

    def colors_at_vertex(self, x: int) -> set[int]:
        try:
            inc = self.graph.incident[x]
        except KeyError:
            raise KeyError(f"vertex {x} not in graph") from None
        return {self._colors[e] for e in inc if e in self._colors}

    def colors_at_edge(self, e: int) -> set[int]:
        self._check(e)
        a, b = self.graph.edges[e].endpoints
        inc = self.graph.incident
        return {self._colors[f] for f in inc[a] + inc[b] if f != e and f in self._colors}

    def colors_used(self) -> set[int]:
        return set(self._colors.values())

    # --- serialisation ------------------------------------------------------

    def to_dict(self) -> dict:
        g = self.graph
        out: dict = {}
        if isinstance(g, GPGraph):
            out["n"], out["k"] = g.n, g.k
        out["edges"] = [
            {"u": g.edges[e].u, "v": g.edges[e].v, "color": c} for e, c in self.items()
        ]
        return out

    def to_json(self, **kw) -> str:
        return json.dumps(self.to_dict(), **kw)

    @classmethod
    def from_dict(cls, data: Mapping, graph: Graph | None = None) -> "PartialColoring":
        if graph is None:
            try:
                graph = GPGraph(int(data["n"]), int(data["k"]))
            except KeyError as exc:
                raise ValueError(f"coloring data lacks field {exc}") from None
        col = cls(graph)
        for item in data.get("edges", []):
            try:
                e = graph.eid(int(item["u"]), int(item["v"]))
            except KeyError as exc:
                raise ValueError(f"bad edge entry {item!r}: {exc}") from None
            col[e] = item["color"]
        return col

    @classmethod
    def from_json(cls, text: str, graph: Graph | None = None) -> "PartialColoring":
        return cls.from_dict(json.loads(text), graph)


def merge(base: PartialColoring, overlay: PartialColoring) -> PartialColoring:
    """Union of two colorings of the same graph; they must agree on overlaps."""
    if base.graph is not overlay.graph:
        raise ValueError("cannot merge colorings of different graphs")
    out = base.copy()
    for e, c in overlay.items():
        old = out.get(e)
        if old is not None and old != c:
            raise ColoringConflict(
                f"edge {base.graph.edges[e].endpoints}: {old} in base, {c} in overlay"
            )
        out[e] = c
    return out


@dataclass(frozen=True)
class Palette3:
    a: int
    b: int
    c: int

    def __post_init__(self):
        if len({self.a, self.b, self.c}) != 3:
            raise ValueError(f"palette colors must be distinct: {self.as_tuple()}")

    def as_tuple(self) -> tuple[int, int, int]:
        return (self.a, self.b, self.c)

    def __iter__(self):
        return iter(self.as_tuple())

from __future__ import annotations

import enum
import json
from dataclasses import dataclass, field

from ..coloring import PartialColoring
from ..gp_graph import GPGraph, Kind


class Method(str, enum.Enum):
    RATIO2 = "Ratio2"
    RATIO5 = "Ratio5"
    MAIN_D3 = "MainD3"
    D2_CASE1 = "D2Case1"
    D2_CASE2 = "D2Case2"
    D2_CASE3 = "D2Case3"
    EXACT_FALLBACK = "ExactFallback"


class Unsupported(Exception):
    """The instance lies outside every construction and the fallback budget."""


class RepairFailed(Exception):
    pass


@dataclass
class StepState:
    """Working state threaded through the construction stages.

    ``seeded_paths`` records the index ranges and seed colors of the named paths
    (P1..P4, Q1..Q4) so that tests can inspect them; ``deviations`` lists
    places where the scripted construction could not be followed literally.
    """

    graph: GPGraph
    coloring: PartialColoring
    seeded_paths: dict[str, dict] = field(default_factory=dict)
    deviations: list[str] = field(default_factory=list)
    repair_log: list[tuple[int, int | None, int]] = field(default_factory=list)
    stage: str = ""

    def note(self, msg: str) -> None:
        self.deviations.append(f"{self.stage}: {msg}" if self.stage else msg)


@dataclass
class ColoringReport:
    coloring: PartialColoring
    colors_used: int
    method: Method
    faithful: bool
    repair_log: list[tuple[int, int | None, int]] = field(default_factory=list)
    c0_offpalette_edges: list[int] = field(default_factory=list)
    deviations: list[str] = field(default_factory=list)

    @property
    def graph(self) -> GPGraph:
        return self.coloring.graph

    def to_dict(self) -> dict:
        g = self.graph
        out = self.coloring.to_dict()
        out["method"] = self.method.value
        out["colors_used"] = self.colors_used
        out["faithful"] = self.faithful
        out["repair_log"] = [
            {"u": g.edges[e].u, "v": g.edges[e].v, "from": old, "to": new}
            for e, old, new in self.repair_log
        ]
        out["c0_offpalette_edges"] = [list(g.edges[e].endpoints) for e in self.c0_offpalette_edges]
        out["deviations"] = list(self.deviations)
        return out

    def to_json(self, **kw) -> str:
        return json.dumps(self.to_dict(), **kw)


def offpalette_outer(coloring: PartialColoring) -> list[int]:
    """Outer-cycle edges colored 3 or 4."""
    g = coloring.graph
    return [e for e in g.outer_cycle if coloring.get(e) in (3, 4)]


def finish(state: StepState, method: Method) -> ColoringReport:
    col = state.coloring
    return ColoringReport(
        coloring=col,
        colors_used=len(col.colors_used()),
        method=method,
        faithful=not state.deviations and not state.repair_log,
        repair_log=list(state.repair_log),
        c0_offpalette_edges=offpalette_outer(col) if isinstance(col.graph, GPGraph) else [],
        deviations=list(state.deviations),
    )


def is_spoke(graph: GPGraph, e: int) -> bool:
    return graph.edges[e].kind is Kind.SPOKE

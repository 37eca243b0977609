"""JSON and Graphviz DOT import/export of colorings."""

from __future__ import annotations

import json
import math
import re
from pathlib import Path

from .coloring import PartialColoring
from .gp_graph import GPGraph

# fixed pen colors so figures are reproducible
PEN = ("#e41a1c", "#377eb8", "#4daf4a", "#984ea3", "#ff7f00", "#a65628")

_EDGE = re.compile(r"^\s*(\d+)\s*--\s*(\d+)\s*\[(.*)\]\s*;?\s*$")
_ATTR = re.compile(r'(\w+)\s*=\s*"?([^",\]]*)"?')
_HEAD = re.compile(r"gp_n\s*=\s*(\d+).*?gp_k\s*=\s*(\d+)")


def to_dot(coloring: PartialColoring) -> str:
    """Render a coloring of GP(n,k) with outer vertices on a circle and inner ones inside."""
    g = coloring.graph
    if not isinstance(g, GPGraph):
        raise TypeError("DOT export needs a GPGraph coloring")
    n = g.n
    lines = [f'graph "GP({g.n},{g.k})" {{', f"  graph [gp_n={g.n}, gp_k={g.k}];",
             "  node [shape=circle, width=0.25, fontsize=8];"]
    for x in range(2 * n):
        radius = 3.0 if x < n else 1.8
        a = 2 * math.pi * (x % n) / n
        lines.append(f'  {x} [label="{"u" if x < n else "v"}{x % n}", pos="{radius * math.sin(a):.3f},{radius * math.cos(a):.3f}!"];')
    for e, edge in enumerate(g.edges):
        c = coloring.get(e)
        if c is None:
            attrs = "style=dashed"
        else:
            attrs = f'color="{PEN[c % len(PEN)]}", penwidth=2, colorid={c}'
        lines.append(f"  {edge.u} -- {edge.v} [{attrs}];")
    lines.append("}")
    return "\n".join(lines) + "\n"


def from_dot(text: str) -> PartialColoring:
    """Read back what :func:`to_dot` wrote."""
    head = _HEAD.search(text)
    if head is None:
        raise ValueError("DOT text lacks the gp_n/gp_k graph attributes")
    g = GPGraph(int(head.group(1)), int(head.group(2)))
    col = PartialColoring(g)
    for line in text.splitlines():
        m = _EDGE.match(line)
        if not m:
            continue
        attrs = dict(_ATTR.findall(m.group(3)))
        if "colorid" in attrs:
            col[g.eid(int(m.group(1)), int(m.group(2)))] = int(attrs["colorid"])
    return col


def load_coloring(path: str | Path) -> PartialColoring:
    """A coloring from a JSON or DOT file, chosen by the first non-blank character."""
    text = Path(path).read_text()
    if text.lstrip().startswith("{"):
        return PartialColoring.from_dict(json.loads(text))
    return from_dot(text)


def dump_json(data: dict) -> str:
    """Canonical JSON: sorted keys, two-space indent, trailing newline."""
    return json.dumps(data, indent=2, sort_keys=True) + "\n"

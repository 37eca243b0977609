"""Star edge coloring as propositional satisfiability.

One boolean per (edge, allowed color).  Clauses say every edge takes exactly
one color, adjacent edges differ, and no 4-edge path or 4-cycle alternates
two colors.  Used for global repair where local backtracking stalls.
"""

from __future__ import annotations

from itertools import combinations
from typing import Callable, Collection, Mapping, Sequence

from pysat.card import CardEnc, EncType
from pysat.formula import IDPool
from pysat.solvers import Solver

from .coloring import Graph
from .verify import star_index

SOLVER_NAME = "cadical153"


def solve_star(
    graph: Graph,
    domain: Callable[[int], Sequence[int]],
    prefer: Mapping[int, int] | None = None,
    at_most_one: Collection[tuple[int, int]] = (),
) -> list[int] | None:
    """A star edge coloring with ``colors[e] in domain(e)``, or None if none exists.

    At most one of the ``(edge, color)`` assignments in ``at_most_one`` may
    hold.  ``prefer`` seeds the solver's phases so the answer tends to keep
    those colors; it is a hint, not a constraint.
    """
    idx = star_index(graph)
    n_edges = len(graph.edges)
    var: dict[tuple[int, int], int] = {}
    doms = []
    for e in range(n_edges):
        dom = tuple(dict.fromkeys(domain(e)))
        if not dom:
            return None
        doms.append(dom)
        for c in dom:
            var[e, c] = len(var) + 1

    clauses: list[list[int]] = []
    for e, dom in enumerate(doms):
        clauses.append([var[e, c] for c in dom])
        clauses += [[-var[e, a], -var[e, b]] for a, b in combinations(dom, 2)]
    for e, nbrs in enumerate(idx.neighbors):
        for f in nbrs:
            if f > e:
                clauses += [[-var[e, c], -var[f, c]] for c in doms[e] if (f, c) in var]
    for w in idx.paths + idx.cycles:
        e0, e1, e2, e3 = w
        for a in doms[e0]:
            if (e2, a) not in var:
                continue
            for b in doms[e1]:
                if b != a and (e3, b) in var:
                    clauses.append([-var[e0, a], -var[e1, b], -var[e2, a], -var[e3, b]])

    lits = sorted({var[p] for p in at_most_one if p in var})
    if len(lits) > 1:
        pool = IDPool(start_from=len(var) + 1)
        clauses += CardEnc.atmost(lits, bound=1, vpool=pool, encoding=EncType.seqcounter).clauses

    with Solver(name=SOLVER_NAME, bootstrap_with=clauses) as solver:
        if prefer:
            phases = []
            for e, c in prefer.items():
                if (e, c) in var:
                    phases.append(var[e, c])
            solver.set_phases(phases)
        if not solver.solve():
            return None
        model = solver.get_model()
    colors = [-1] * n_edges
    for (e, c), v in var.items():
        if model[v - 1] > 0:
            colors[e] = c
    return colors

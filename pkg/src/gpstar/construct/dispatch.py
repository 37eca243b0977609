from __future__ import annotations

from ..coloring import PartialColoring
from ..gp_graph import GPGraph
from ..sat import solve_star
from .d2 import color_d2, d2_case
from .main_d3 import color_main_d3
from .ratio import color_ratio_five, color_ratio_two
from .report import ColoringReport, Method, StepState, Unsupported, finish


def route(graph: GPGraph) -> Method:
    """The construction :func:`dispatch` will use."""
    if graph.m == 2:
        return Method.RATIO2
    if graph.m == 5:
        return Method.RATIO5
    if graph.d >= 3:
        return Method.MAIN_D3
    case = d2_case(graph)
    if case is not None:
        return (Method.D2_CASE1, Method.D2_CASE2, Method.D2_CASE3)[case - 1]
    return Method.EXACT_FALLBACK


def exact_fallback(graph: GPGraph) -> ColoringReport:
    """Complete search with five colors, then six.

    The search is a SAT encoding, so "unsatisfiable" proves that no coloring
    with that many colors exists.
    """
    for colors in (5, 6):
        sol = solve_star(graph, lambda e: range(colors))
        if sol is not None:
            col = PartialColoring(graph, dict(enumerate(sol)))
            return finish(StepState(graph, col), Method.EXACT_FALLBACK)
    raise Unsupported(f"{graph!r} needs more than six colors")


def dispatch(graph: GPGraph) -> ColoringReport:
    method = route(graph)
    if method is Method.RATIO2:
        return color_ratio_two(graph)
    if method is Method.RATIO5:
        return color_ratio_five(graph)
    if method is Method.MAIN_D3:
        return color_main_d3(graph)
    if method is Method.EXACT_FALLBACK:
        return exact_fallback(graph)
    return color_d2(graph)

"""Star edge colorings of generalized Petersen graphs GP(n, k)."""

from .coloring import ColoringConflict, PartialColoring, SimpleGraph
from .construct.dispatch import dispatch, route
from .construct.report import ColoringReport, Method, RepairFailed, Unsupported
from .exact import Indeterminate, Infeasible, SearchConfig, find_star_coloring, star_chromatic_index
from .gp_graph import GPGraph, build_gp
from .verify import Defect, Violation, is_star, verify_star

__all__ = [
    "ColoringConflict",
    "ColoringReport",
    "Defect",
    "GPGraph",
    "Indeterminate",
    "Infeasible",
    "Method",
    "PartialColoring",
    "RepairFailed",
    "SearchConfig",
    "SimpleGraph",
    "Unsupported",
    "Violation",
    "build_gp",
    "dispatch",
    "find_star_coloring",
    "is_star",
    "route",
    "star_chromatic_index",
    "verify_star",
]

"""Labeled Reeb graphs of level sweeps on surfaces, the integer
assignment that bounds curve-complex distance, and a mesh front-end."""

from .assign import (
    AllEqual,
    Consecutive,
    DistanceBoundReport,
    PartialAssignment,
    TraceEntry,
    assign_all,
    assignment_to_dict,
    check_invariants,
    classify_frontier,
    distance_bound,
    step0,
    step1_saturate,
    step2,
)
from .gen import GenParams, naive_assign, random_reeb
from .graph import (
    EdgeLabel,
    EssentialSubgraph,
    ReebEdge,
    ReebGraph,
    ReebVertex,
    ValidationReport,
    VertexKind,
    Violation,
    essential_subgraph,
    graph_dumps,
    graph_from_dict,
    graph_loads,
    graph_to_dict,
    restrict,
    validate,
)
from .mesh import (
    LevelCycle,
    ScalarField,
    TriangulatedSurface,
    build_reeb,
    classify_essential,
    cut_along,
    label_reeb,
    level_cycles,
    pl_criticality,
)

__version__ = "0.1.0"

__all__ = [
    "AllEqual", "Consecutive", "DistanceBoundReport", "EdgeLabel",
    "EssentialSubgraph", "GenParams", "LevelCycle", "PartialAssignment",
    "ReebEdge", "ReebGraph", "ReebVertex", "ScalarField", "TraceEntry",
    "TriangulatedSurface", "ValidationReport", "VertexKind", "Violation",
    "assign_all", "assignment_to_dict", "build_reeb", "check_invariants",
    "classify_essential", "classify_frontier", "cut_along", "distance_bound",
    "essential_subgraph", "graph_dumps", "graph_from_dict", "graph_loads",
    "graph_to_dict", "label_reeb", "level_cycles", "naive_assign",
    "pl_criticality", "random_reeb", "restrict", "step0", "step1_saturate",
    "step2", "validate",
]

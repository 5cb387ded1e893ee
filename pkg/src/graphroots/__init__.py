"""Square roots of graphs with small maximum degree."""

from .budget import UNLIMITED, Budget, BudgetExhausted
from .graph import Graph, LabeledInstance, bfs_layering, components, is_square_root, max_degree, square
from .recognizable import find_recognizable_edge, recognizable_edges
from .solver import (
    Certificate,
    Pruning,
    SolveOutcome,
    Status,
    brute_force_roots,
    solve,
    solve_labeled,
    solve_max_deg5,
    solve_max_deg6,
    verify_outcome,
)

__version__ = "0.1.0"

__all__ = [
    "UNLIMITED",
    "Budget",
    "BudgetExhausted",
    "Graph",
    "LabeledInstance",
    "bfs_layering",
    "components",
    "is_square_root",
    "max_degree",
    "square",
    "find_recognizable_edge",
    "recognizable_edges",
    "Certificate",
    "Pruning",
    "SolveOutcome",
    "Status",
    "brute_force_roots",
    "solve",
    "solve_labeled",
    "solve_max_deg5",
    "solve_max_deg6",
    "verify_outcome",
]

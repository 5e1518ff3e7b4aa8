"""Identifying, locating-dominating and open locating-dominating codes on block graphs."""

from .codes import Code, CodeDecomposition, Kind, Violation, check_claims, decompose, signature, validate
from .construct import id_code_at_most_nq
from .graph_core import Graph, count_maximal_cliques, is_block_graph, parse_graph, emit_graph
from .solver import SolveResult, brute_force_gamma, gamma

__all__ = [
    "Code",
    "CodeDecomposition",
    "Graph",
    "Kind",
    "SolveResult",
    "Violation",
    "brute_force_gamma",
    "check_claims",
    "count_maximal_cliques",
    "decompose",
    "emit_graph",
    "gamma",
    "id_code_at_most_nq",
    "is_block_graph",
    "parse_graph",
    "signature",
    "validate",
]

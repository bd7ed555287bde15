"""Ring graphs and complete-intersection toric ideals of graphs."""

from .binomial import Binomial, BudgetExceeded, MonomialOrder, buchberger, normal_form
from .bipartite import build_foliation, is_complete_intersection_bipartite, validate_foliation
from .cyclespace import cycle_rank, fundamental_basis
from .graph import Graph, GraphError, blocks, parse_graph
from .orientation import build_tree_sequence, ci_generators
from .oriented import OrientedGraph, cycle_binomial, toric_generators_oriented
from .primitive import enumerate_primitive_cycles, frank, k4_subdivision_free, pcp
from .ring import certify_ring, is_ring_by_pcp_sp, is_ring_by_rank

__all__ = [
    "Binomial", "BudgetExceeded", "Graph", "GraphError", "MonomialOrder", "OrientedGraph",
    "blocks", "buchberger", "build_foliation", "build_tree_sequence", "certify_ring",
    "ci_generators", "cycle_binomial", "cycle_rank", "enumerate_primitive_cycles", "frank",
    "fundamental_basis", "is_complete_intersection_bipartite", "is_ring_by_pcp_sp",
    "is_ring_by_rank", "k4_subdivision_free", "normal_form", "parse_graph", "pcp",
    "toric_generators_oriented", "validate_foliation",
]

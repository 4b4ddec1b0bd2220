"""Node Kayles via Sprague-Grundy nimbers, K-set counting, structural
parameters (vertex cover, modular-width, neighborhood diversity) and a
nim-preserving kernel.
"""

from .errors import CapExceededError, ContractError, FamilySpecError, GraphParseError, NodeKaylesError
from .generators import (
    blowup,
    complete,
    complete_multipartite,
    cycle,
    empty,
    generate,
    gnp,
    parse_family,
    path,
    random_tree,
    spider,
    star,
)
from .graph import (
    Graph,
    VertexSet,
    closed_neighborhood,
    connected_components,
    disjoint_union,
    induced_subgraph,
    is_independent_set,
    open_neighborhood,
)
from .io import format_edge_list, parse_edge_list, parse_graph6, read_graphs, to_graph6, write_graph
from .kernel import ReductionTrace, kernelize, parity, reduce_clique_module, reduce_independent_module
from .ksets import (
    KSetFamily,
    KSetTriple,
    check_expansion_decomposition,
    check_spider,
    check_tripartition_injectivity,
    check_vc_bound,
    count_ksets,
    enumerate_kset_triples,
    enumerate_ksets,
    ksets_via_dp,
    verify_kset_triple,
    witness_triple,
)
from .nimber import (
    MemoTable,
    first_player_wins,
    mex,
    nim_sum,
    nimber,
    nimber_bruteforce,
    optimal_move,
    wins_by_minimax,
)
from .structural import (
    MDNode,
    NDPartition,
    is_module,
    maximal_modules_partition,
    minimum_vertex_cover,
    modular_decomposition,
    modular_width,
    nd_partition,
    neighborhood_diversity,
    quotient_graph,
    vertex_cover_number,
)

__all__ = [
    "blowup", "CapExceededError", "check_expansion_decomposition", "check_spider",
    "check_tripartition_injectivity", "check_vc_bound", "closed_neighborhood", "complete",
    "complete_multipartite", "connected_components", "ContractError", "count_ksets", "cycle",
    "disjoint_union", "empty", "enumerate_kset_triples", "enumerate_ksets", "FamilySpecError",
    "first_player_wins", "format_edge_list", "generate", "gnp", "Graph", "GraphParseError",
    "induced_subgraph", "is_independent_set", "is_module", "kernelize", "KSetFamily",
    "ksets_via_dp", "KSetTriple", "maximal_modules_partition", "MDNode", "MemoTable", "mex",
    "minimum_vertex_cover", "modular_decomposition", "modular_width", "nd_partition", "NDPartition",
    "neighborhood_diversity", "nim_sum", "nimber", "nimber_bruteforce", "NodeKaylesError",
    "open_neighborhood", "optimal_move", "parity", "parse_edge_list", "parse_family",
    "parse_graph6", "path", "quotient_graph", "random_tree", "read_graphs", "reduce_clique_module",
    "reduce_independent_module", "ReductionTrace", "spider", "star", "to_graph6",
    "verify_kset_triple", "vertex_cover_number", "VertexSet", "wins_by_minimax", "witness_triple",
    "write_graph",
]

__version__ = "0.1.0"

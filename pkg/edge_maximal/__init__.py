"""
edge_maximal
============

A Python package for edge-connectivity, strength and k-edge-maximality of
r-uniform hypergraphs.

This package provides the following main components:

- :class:`Hypergraph`: Immutable r-uniform hypergraph with a canonical text format.
- :class:`Params`: The ``(n, k, r)`` triple and its threshold ``t``.
- :func:`edge_connectivity` and :func:`strength`: exact flow-based values with certificates.
- :func:`is_k_edge_maximal`: maximality certificate; :func:`audit_maximal` checks its structural consequences.
- :func:`build_M` and :func:`build_NT`: the families attaining the upper and lower size bounds.
- :func:`enumerate_maximal` and :func:`extremal_scan`: exhaustive desk-scale searches.
"""

from .connectivity import (BRUTEFORCE_MAX_VERTICES, Cut, cut_degree, edge_connectivity,
                           edge_connectivity_bruteforce, edge_cut, incidence_network,
                           is_maximal_edge_connected, is_peripheral, is_super_edge_connected,
                           local_edge_connectivity)
from .constructions import (BUILDERS, LEXICOGRAPHIC, BuildMode, BuildStrategy, TreeSpec,
                            build_M, build_NT, build_one_max, build_one_max_partition,
                            build_one_max_star, create_family, nt_covering_ok, parse_tree,
                            path_tree, random_tree, star_tree, tree_from_shorthand)
from .errors import (BinomialOverflowError, ConstructionError, GuardError, HypergraphError,
                     InvalidEdgeError, ParseError, SearchLimitExceeded)
from .extremal import (AuditReport, ClauseResult, ClauseStatus, MaximalityReport, Verdict,
                       audit_maximal, find_addable_non_edge, graph_lower_bound,
                       graph_upper_bound, is_k_edge_maximal, is_M_member, lower_bound,
                       maximal_verdict, one_edge_bounds, upper_bound)
from .hypergraph import (Edge, Hypergraph, complete_hypergraph, empty_hypergraph, is_regular,
                         read_hypergraph, write_hypergraph)
from .params import (MAX_VERTICES, Params, binom, checked_int64, crossing_count_complete,
                     order_condition_holds, threshold_t)
from .search import (SearchLimits, SearchSummary, dump_maximal, enumerate_maximal,
                     extremal_scan, write_scan_csv)
from .strength import StrengthTree, strength, strength_bruteforce, strength_witness

__all__ = [
    "Hypergraph",
    "Edge",
    "complete_hypergraph",
    "empty_hypergraph",
    "is_regular",
    "read_hypergraph",
    "write_hypergraph",
    "Params",
    "MAX_VERTICES",
    "binom",
    "checked_int64",
    "threshold_t",
    "crossing_count_complete",
    "order_condition_holds",
    "Cut",
    "BRUTEFORCE_MAX_VERTICES",
    "edge_cut",
    "cut_degree",
    "incidence_network",
    "local_edge_connectivity",
    "edge_connectivity",
    "edge_connectivity_bruteforce",
    "is_maximal_edge_connected",
    "is_peripheral",
    "is_super_edge_connected",
    "StrengthTree",
    "strength",
    "strength_witness",
    "strength_bruteforce",
    "upper_bound",
    "lower_bound",
    "graph_upper_bound",
    "graph_lower_bound",
    "one_edge_bounds",
    "Verdict",
    "MaximalityReport",
    "is_k_edge_maximal",
    "find_addable_non_edge",
    "maximal_verdict",
    "is_M_member",
    "ClauseStatus",
    "ClauseResult",
    "AuditReport",
    "audit_maximal",
    "TreeSpec",
    "BuildMode",
    "BuildStrategy",
    "LEXICOGRAPHIC",
    "BUILDERS",
    "create_family",
    "build_M",
    "build_NT",
    "build_one_max",
    "build_one_max_star",
    "build_one_max_partition",
    "nt_covering_ok",
    "path_tree",
    "star_tree",
    "random_tree",
    "parse_tree",
    "tree_from_shorthand",
    "SearchLimits",
    "SearchSummary",
    "enumerate_maximal",
    "extremal_scan",
    "write_scan_csv",
    "dump_maximal",
    "HypergraphError",
    "InvalidEdgeError",
    "ParseError",
    "GuardError",
    "BinomialOverflowError",
    "ConstructionError",
    "SearchLimitExceeded",
]

"""Approximate betweenness centrality maintained under edge insertions."""

from .dynamic import DynamicBc, dynamic_init, get_ranking, get_scores, update_batch
from .graph import (
    DisconnectedGraphError,
    EdgeUpdate,
    Graph,
    GraphError,
    UnsupportedDynamicError,
    generate_dorogovtsev_mendes,
    is_connected,
    read_edge_list,
    write_scores,
)
from .sssp import SsspDag, compute_extended_sssp
from .sssp_update import AffectedStats, update_sssp_unweighted, update_sssp_weighted
from .static import (
    SamplingParams,
    brandes_exact,
    compute_sample_size,
    estimate_vd,
    rk_initialize,
    sample_node_pair,
    sample_shortest_path,
)

__all__ = [
    "AffectedStats", "DisconnectedGraphError", "DynamicBc", "EdgeUpdate", "Graph",
    "GraphError", "SamplingParams", "SsspDag", "UnsupportedDynamicError",
    "brandes_exact", "compute_extended_sssp", "compute_sample_size", "dynamic_init",
    "estimate_vd", "generate_dorogovtsev_mendes", "get_ranking", "get_scores",
    "is_connected", "read_edge_list", "rk_initialize", "sample_node_pair",
    "sample_shortest_path", "update_batch", "update_sssp_unweighted",
    "update_sssp_weighted", "write_scores",
]

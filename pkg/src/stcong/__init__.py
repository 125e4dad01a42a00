"""Minimal L^p spanning-tree congestion toolkit.

Computes, approximates and bounds the minimal L^p congestion of spanning
trees of edge-weighted graphs: a congestion-descent local search for general
graphs, two dual-graph growth algorithms for planar graphs, combinatorial
lower bounds, closed formulas for classic families and a brute-force oracle
for desk-scale verification.
"""

from .congestion import CongestionVector, INF, edge_congestions, lp_norm, swap_update
from .descent import DescentTrace, scd, scd_deep
from .families import FamilySpec, closed_form, generate, label_weights, named_tree
from .graph import (
    SpanningTree,
    WeightedGraph,
    kruskal,
    random_spanning_tree,
    tree_path,
    validate_tree,
)
from .locbfs import locbfs, relative_congestion
from .oracle import enumerate_spanning_trees, exact_lp_stc, spanning_tree_count, total_stretch
from .planar import (
    DualGraph,
    PlanarEmbedding,
    build_embedding,
    cactus_optimum,
    congestion_via_dual,
    dual,
    dual_tree,
    weighted_cycle_rank,
)
from .roc import minimal_edge, roc

__version__ = "0.1.0"

__all__ = [
    "CongestionVector",
    "DescentTrace",
    "DualGraph",
    "FamilySpec",
    "INF",
    "PlanarEmbedding",
    "SpanningTree",
    "WeightedGraph",
    "build_embedding",
    "cactus_optimum",
    "closed_form",
    "congestion_via_dual",
    "dual",
    "dual_tree",
    "edge_congestions",
    "enumerate_spanning_trees",
    "exact_lp_stc",
    "generate",
    "kruskal",
    "label_weights",
    "locbfs",
    "lp_norm",
    "minimal_edge",
    "named_tree",
    "random_spanning_tree",
    "relative_congestion",
    "roc",
    "scd",
    "scd_deep",
    "spanning_tree_count",
    "swap_update",
    "total_stretch",
    "tree_path",
    "validate_tree",
    "weighted_cycle_rank",
]

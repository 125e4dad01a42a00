"""Edge congestion vectors, L^p norms and the incremental swap update.

The congestion of a tree edge ``e`` is the total weight of graph edges
crossing the cut obtained by deleting ``e`` from the tree. Equivalently,
``c[e] = w(e) + sum of w(f) over non-tree edges f whose tree path uses e``;
that is how the vectors are accumulated here, scanning non-tree edges by
ascending id so that float results are reproducible.
"""

from __future__ import annotations

import math
from typing import Sequence

from .errors import EmptyVector, InsertAlreadyInTree, InvalidParams, RemoveNotOnCycle
from .graph import SpanningTree, WeightedGraph, check_same_graph, tree_path, validate_tree

INF = math.inf


class CongestionVector:
    """Per-tree-edge congestion values, aligned with ``tree.edge_ids``."""

    __slots__ = ("values",)

    def __init__(self, values: Sequence[float]):
        self.values = list(values)

    def __len__(self) -> int:
        return len(self.values)

    def __iter__(self):
        return iter(self.values)

    def as_dict(self, tree: SpanningTree) -> dict[int, float]:
        return dict(zip(tree.edge_ids, self.values))

    def norm(self, p) -> float:
        return lp_norm(self.values, p)

    def __repr__(self) -> str:  # pragma: no cover
        return f"CongestionVector({self.values!r})"


def check_norm_order(p) -> None:
    """Accept p in {1, 2, 3, ...} or math.inf."""
    if p == INF:
        return
    if isinstance(p, bool) or not isinstance(p, int) or p < 1:
        raise InvalidParams(f"norm order must be a positive integer or inf, got {p!r}")


def lp_norm(values: Sequence[float], p) -> float:
    """(sum v^p)^(1/p) for finite p, max(v) for p = inf."""
    check_norm_order(p)
    vals = list(values)
    if not vals:
        raise EmptyVector("norm of an empty vector")
    if p == INF:
        return max(vals)
    if p == 1:
        return float(sum(vals))
    return float(sum(v ** p for v in vals)) ** (1.0 / p)


def edge_congestions(graph: WeightedGraph, tree: SpanningTree) -> CongestionVector:
    """Congestion of every tree edge, computed by path accumulation."""
    check_same_graph(graph, tree)
    pos = tree.position_of()
    values = [graph.edges[e][2] for e in tree.edge_ids]
    in_tree = tree.edge_set()
    for f in range(graph.edge_count):
        if f in in_tree:
            continue
        u, v, w = graph.edges[f]
        for e in tree_path(tree, u, v):
            values[pos[e]] += w
    return CongestionVector(values)


def swap_update(
    graph: WeightedGraph,
    tree: SpanningTree,
    cong: CongestionVector,
    insert: int,
    remove: int,
) -> tuple[SpanningTree, CongestionVector]:
    """Apply the cycle exchange ``remove -> insert`` and update the vector.

    Only entries of edges on the inserted edge's tree cycle are recomputed
    (the inserted edge and the surviving cycle edges); every other entry is
    carried over unchanged. The inserted edge takes the removed edge's slot,
    so positions of untouched edges are stable.
    """
    check_same_graph(graph, tree)
    in_tree = tree.edge_set()
    if insert in in_tree:
        raise InsertAlreadyInTree(f"edge {insert} is already in the tree")
    u, v, _w = graph.edges[insert]
    cycle = tree_path(tree, u, v)
    if remove not in cycle:
        raise RemoveNotOnCycle(f"edge {remove} is not on the cycle of edge {insert}")

    pos = tree.position_of()
    slot = pos[remove]
    new_ids = list(tree.edge_ids)
    new_ids[slot] = insert
    new_tree = validate_tree(graph, new_ids)

    changed = {slot}
    for e in cycle:
        if e != remove:
            changed.add(pos[e])
    values = list(cong.values)
    for s in changed:
        values[s] = graph.edges[new_ids[s]][2]
    new_in_tree = new_tree.edge_set()
    new_pos = new_tree.position_of()
    for f in range(graph.edge_count):
        if f in new_in_tree:
            continue
        fu, fv, fw = graph.edges[f]
        for e in tree_path(new_tree, fu, fv):
            s = new_pos[e]
            if s in changed:
                values[s] += fw
    return new_tree, CongestionVector(values)

"""Shared fixtures and independent reference implementations.

The cut-based congestion here is deliberately naive (delete the tree edge,
flood both sides, add up crossing weights) so that it stays independent of
the path-accumulation code it is used to check.
"""

from __future__ import annotations

import random

import pytest

from stcong.graph import SpanningTree, WeightedGraph, validate_tree


def cut_congestion(graph: WeightedGraph, tree: SpanningTree, eid: int) -> float:
    """Congestion of tree edge ``eid`` computed straight from the cut."""
    n = graph.vertex_count
    adj = [[] for _ in range(n)]
    for e in tree.edge_ids:
        if e == eid:
            continue
        u, v, _w = graph.edges[e]
        adj[u].append(v)
        adj[v].append(u)
    side = [False] * n
    u0 = graph.edges[eid][0]
    side[u0] = True
    stack = [u0]
    while stack:
        x = stack.pop()
        for y in adj[x]:
            if not side[y]:
                side[y] = True
                stack.append(y)
    return sum(w for a, b, w in graph.edges if side[a] != side[b])


def cut_congestion_vector(graph: WeightedGraph, tree: SpanningTree) -> list[float]:
    return [cut_congestion(graph, tree, e) for e in tree.edge_ids]


def path_graph(k: int) -> WeightedGraph:
    return WeightedGraph(k, [(i, i + 1, 1.0) for i in range(k - 1)])


def cycle_graph(k: int) -> WeightedGraph:
    return WeightedGraph(k, [(i, (i + 1) % k, 1.0) for i in range(k)])


def complete_graph(k: int) -> WeightedGraph:
    return WeightedGraph(k, [(u, v, 1.0) for u in range(k) for v in range(u + 1, k)])


def weighted_triangle() -> WeightedGraph:
    # edge ids: ab=0, bc=1, ac=2
    return WeightedGraph(3, [(0, 1, 1.0), (1, 2, 1.0), (0, 2, 2.0)])


def random_connected_graph(rng: random.Random, n: int, extra_prob: float = 0.4,
                           weight_pool: tuple = (1.0,)) -> WeightedGraph:
    """Random tree plus extra edges; edges get weights from the pool."""
    edges = []
    present = set()
    for v in range(1, n):
        u = rng.randrange(v)
        edges.append((u, v))
        present.add((u, v))
    for u in range(n):
        for v in range(u + 1, n):
            if (u, v) not in present and rng.random() < extra_prob:
                edges.append((u, v))
                present.add((u, v))
    weighted = [(u, v, rng.choice(weight_pool)) for u, v in edges]
    return WeightedGraph(n, weighted)


def random_tree_of(graph: WeightedGraph, rng: random.Random) -> SpanningTree:
    order = list(range(graph.edge_count))
    rng.shuffle(order)
    parent = list(range(graph.vertex_count))

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    chosen = []
    for e in order:
        u, v, _w = graph.edges[e]
        ru, rv = find(u), find(v)
        if ru != rv:
            parent[rv] = ru
            chosen.append(e)
    return validate_tree(graph, chosen)


@pytest.fixture
def rng() -> random.Random:
    return random.Random(0xC0FFEE)

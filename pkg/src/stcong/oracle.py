"""Brute-force ground truth: spanning tree enumeration and exact L^p optima.

Desk-scale only. Enumeration refuses graphs whose matrix-tree count exceeds
the cap instead of sampling.
"""

from __future__ import annotations

import math
from typing import Iterator

from .congestion import edge_congestions, lp_norm
from .errors import CapExceeded, Disconnected
from .graph import SpanningTree, WeightedGraph, _DSU, check_same_graph, tree_path, validate_tree

DEFAULT_CAP = 10 ** 7


def spanning_tree_count(graph: WeightedGraph) -> int:
    """Exact number of spanning trees via an integer matrix-tree determinant."""
    n = graph.vertex_count
    if n == 1:
        return 1
    lap = [[0] * n for _ in range(n)]
    for u, v, _w in graph.edges:
        if u == v:
            continue
        lap[u][u] += 1
        lap[v][v] += 1
        lap[u][v] -= 1
        lap[v][u] -= 1
    # principal minor: drop last row and column
    a = [row[: n - 1] for row in lap[: n - 1]]
    return _bareiss_det(a)


def _bareiss_det(a: list[list[int]]) -> int:
    """Fraction-free determinant of an integer matrix."""
    n = len(a)
    if n == 0:
        return 1
    a = [row[:] for row in a]
    sign = 1
    prev = 1
    for k in range(n - 1):
        if a[k][k] == 0:
            for r in range(k + 1, n):
                if a[r][k] != 0:
                    a[k], a[r] = a[r], a[k]
                    sign = -sign
                    break
            else:
                return 0
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) // prev
        prev = a[k][k]
    return sign * a[n - 1][n - 1]


def enumerate_spanning_trees(
    graph: WeightedGraph, cap: int = DEFAULT_CAP
) -> Iterator[tuple[int, ...]]:
    """Yield every spanning tree exactly once as a sorted edge-id tuple.

    Contraction/deletion recursion: the branch edge is either forced into the
    tree (contract) or discarded (delete, pruned when the rest disconnects).
    The expected count is pre-checked against ``cap``.
    """
    if not graph.is_connected():
        raise Disconnected("no spanning trees")
    expected = spanning_tree_count(graph)
    if expected > cap:
        raise CapExceeded(expected, cap)
    n = graph.vertex_count
    m = graph.edge_count
    edges = graph.edges

    def connected_under(dsu_parent: list[int], active: list[int]) -> bool:
        dsu = _DSU(n)
        dsu.parent = dsu_parent[:]
        comp = len({dsu.find(v) for v in range(n)})
        for e in active:
            u, v, _w = edges[e]
            if dsu.union(u, v):
                comp -= 1
                if comp == 1:
                    return True
        return comp == 1

    def rec(dsu: _DSU, active: list[int], chosen: list[int], need: int):
        if need == 0:
            yield tuple(sorted(chosen))
            return
        # branch edge: first active edge joining two distinct classes
        idx = 0
        while idx < len(active):
            e = active[idx]
            u, v, _w = edges[e]
            if dsu.find(u) != dsu.find(v):
                break
            idx += 1
        else:
            return
        rest = active[idx + 1:]
        e = active[idx]
        u, v, _w = edges[e]
        # include e
        inc = _DSU(n)
        inc.parent = dsu.parent[:]
        inc.union(u, v)
        chosen.append(e)
        yield from rec(inc, rest, chosen, need - 1)
        chosen.pop()
        # exclude e, if the remainder can still span
        if connected_under(dsu.parent, rest):
            yield from rec(dsu, rest, chosen, need)

    yield from rec(_DSU(n), list(range(m)), [], n - 1)


def exact_lp_stc(
    graph: WeightedGraph,
    p,
    cap: int = DEFAULT_CAP,
    with_ties: bool = False,
):
    """Exact minimal L^p congestion over all spanning trees.

    Returns ``(value, witness_tree)`` where the witness is the lowest
    lexicographic edge-id set among minimizers; with ``with_ties=True`` the
    full minimizer list (edge-id tuples) is appended to the result.
    """
    exact = graph.integer_weighted() and p != math.inf
    best_key = None
    ties: list[tuple[int, ...]] = []
    for ids in enumerate_spanning_trees(graph, cap):
        tree = validate_tree(graph, ids)
        vals = edge_congestions(graph, tree).values
        if p == math.inf:
            key = max(vals)
        elif exact:
            key = sum(int(v) ** p for v in vals)
        else:
            key = sum(v ** p for v in vals)
        if best_key is None or key < best_key:
            best_key = key
            ties = [ids]
        elif key == best_key:
            ties.append(ids)
    if best_key is None:
        raise Disconnected("no spanning trees")
    if p == math.inf:
        value = float(best_key)
    else:
        value = float(best_key) ** (1.0 / p)
    witness = validate_tree(graph, min(ties))
    if with_ties:
        return value, witness, ties
    return value, witness


def total_stretch(graph: WeightedGraph, tree: SpanningTree) -> float:
    """Sum over non-tree edges of (tree-path weight) / (edge weight)."""
    check_same_graph(graph, tree)
    in_tree = tree.edge_set()
    total = 0.0
    for f in range(graph.edge_count):
        if f in in_tree:
            continue
        u, v, w = graph.edges[f]
        pw = sum(graph.edges[e][2] for e in tree_path(tree, u, v))
        total += pw / w
    return total

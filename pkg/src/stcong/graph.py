"""Weighted graphs and spanning trees with O(depth) path queries.

Vertex ids are dense integers ``0..n-1`` and edge ids are dense integers
``0..m-1`` in edge-list order; all tie-breaking in the package leans on
this. Graphs and trees are immutable after construction and safe to share
across threads.
"""

from __future__ import annotations

import json
import random
from collections import deque
from typing import Callable, Iterable, Sequence

from .errors import (
    ContainsCycle,
    Disconnected,
    InvalidParams,
    NotSpanning,
    SameVertex,
    TreeGraphMismatch,
    WrongEdgeCount,
)


class WeightedGraph:
    """Simple graph, or multigraph, with positive edge weights.

    Parallel edges and self-loops are admitted only with ``multigraph=True``
    (used for planar duals). ``coords`` optionally carries a straight-line
    drawing, one ``(x, y)`` pair per vertex.
    """

    __slots__ = ("vertex_count", "edges", "adjacency", "loops_at", "multigraph",
                 "coords", "info")

    def __init__(
        self,
        vertex_count: int,
        edges: Iterable[tuple[int, int, float]],
        multigraph: bool = False,
        coords: Sequence[tuple[float, float]] | None = None,
    ):
        if vertex_count <= 0:
            raise InvalidParams("vertex_count must be positive")
        self.vertex_count = int(vertex_count)
        norm = []
        for u, v, w in edges:
            u, v, w = int(u), int(v), float(w)
            if not (0 <= u < vertex_count and 0 <= v < vertex_count):
                raise InvalidParams(f"edge endpoint out of range: ({u}, {v})")
            if w <= 0.0:
                raise InvalidParams(f"edge ({u}, {v}) has non-positive weight {w}")
            norm.append((u, v, w))
        self.edges: tuple[tuple[int, int, float], ...] = tuple(norm)
        self.multigraph = bool(multigraph)
        if coords is not None:
            coords = tuple((float(x), float(y)) for x, y in coords)
            if len(coords) != vertex_count:
                raise InvalidParams("coords must list one point per vertex")
        self.coords = coords
        self.info: dict = {}

        adjacency: list[list[tuple[int, int]]] = [[] for _ in range(vertex_count)]
        loops_at: list[list[int]] = [[] for _ in range(vertex_count)]
        seen: set[frozenset[int]] = set()
        for eid, (u, v, _w) in enumerate(self.edges):
            if u == v:
                if not self.multigraph:
                    raise InvalidParams(f"self-loop at vertex {u} in simple graph")
                loops_at[u].append(eid)
                continue
            if not self.multigraph:
                key = frozenset((u, v))
                if key in seen:
                    raise InvalidParams(f"parallel edge ({u}, {v}) in simple graph")
                seen.add(key)
            adjacency[u].append((eid, v))
            adjacency[v].append((eid, u))
        self.adjacency = adjacency
        self.loops_at = loops_at

    # -- basic queries -------------------------------------------------------

    @property
    def edge_count(self) -> int:
        return len(self.edges)

    def weight(self, eid: int) -> float:
        return self.edges[eid][2]

    def weights(self) -> list[float]:
        return [w for _, _, w in self.edges]

    def total_weight(self) -> float:
        return sum(w for _, _, w in self.edges)

    def degree(self, v: int) -> int:
        # loops counted once: the degree of v is |{e : v in e}|
        return len(self.adjacency[v]) + len(self.loops_at[v])

    def weighted_degree(self, v: int) -> float:
        return (sum(self.edges[eid][2] for eid, _ in self.adjacency[v])
                + sum(self.edges[eid][2] for eid in self.loops_at[v]))

    def max_degree(self) -> int:
        return max(self.degree(v) for v in range(self.vertex_count))

    def min_degree(self) -> int:
        return min(self.degree(v) for v in range(self.vertex_count))

    def integer_weighted(self) -> bool:
        return all(w == int(w) for _, _, w in self.edges)

    def is_connected(self) -> bool:
        n = self.vertex_count
        seen = [False] * n
        seen[0] = True
        stack = [0]
        count = 1
        while stack:
            u = stack.pop()
            for _eid, v in self.adjacency[u]:
                if not seen[v]:
                    seen[v] = True
                    count += 1
                    stack.append(v)
        return count == n

    def hop_diameter(self) -> int:
        """Largest unweighted eccentricity; requires connectivity."""
        best = 0
        n = self.vertex_count
        for s in range(n):
            dist = [-1] * n
            dist[s] = 0
            q = deque([s])
            while q:
                u = q.popleft()
                for _eid, v in self.adjacency[u]:
                    if dist[v] < 0:
                        dist[v] = dist[u] + 1
                        q.append(v)
            if any(d < 0 for d in dist):
                raise Disconnected("diameter of a disconnected graph")
            best = max(best, max(dist))
        return best

    def reweighted(self, new_weights: Sequence[float]) -> "WeightedGraph":
        if len(new_weights) != self.edge_count:
            raise InvalidParams("one weight per edge required")
        edges = [(u, v, float(w)) for (u, v, _), w in zip(self.edges, new_weights)]
        g = WeightedGraph(self.vertex_count, edges, self.multigraph, self.coords)
        return g

    # -- JSON contract ---------------------------------------------------------

    def to_json_dict(self) -> dict:
        verts = []
        for i in range(self.vertex_count):
            rec: dict = {"id": i}
            if self.coords is not None:
                rec["x"], rec["y"] = self.coords[i]
            verts.append(rec)
        return {
            "vertices": verts,
            "edges": [{"u": u, "v": v, "w": w} for u, v, w in self.edges],
        }

    @classmethod
    def from_json_dict(cls, data: dict, multigraph: bool = False) -> "WeightedGraph":
        verts = data["vertices"]
        n = len(verts)
        ids = sorted(rec["id"] for rec in verts)
        if ids != list(range(n)):
            raise InvalidParams("vertex ids must be dense integers 0..n-1")
        coords = None
        if verts and "x" in verts[0]:
            by_id = {rec["id"]: rec for rec in verts}
            try:
                coords = [(by_id[i]["x"], by_id[i]["y"]) for i in range(n)]
            except KeyError as exc:
                raise InvalidParams("x,y must be given for all vertices or none") from exc
        edges = [(rec["u"], rec["v"], rec.get("w", 1.0)) for rec in data["edges"]]
        return cls(n, edges, multigraph=multigraph, coords=coords)

    def save(self, path: str) -> None:
        with open(path, "w") as fh:
            json.dump(self.to_json_dict(), fh)
            fh.write("\n")

    @classmethod
    def load(cls, path: str) -> "WeightedGraph":
        with open(path) as fh:
            return cls.from_json_dict(json.load(fh))

    def __repr__(self) -> str:  # pragma: no cover
        kind = "multigraph" if self.multigraph else "graph"
        return f"<WeightedGraph {kind} n={self.vertex_count} m={self.edge_count}>"


class SpanningTree:
    """Validated spanning tree with parent/depth indexing rooted at vertex 0.

    Construct through :func:`validate_tree`; the constructor trusts its input.
    """

    __slots__ = ("graph", "edge_ids", "parent", "parent_edge", "depth")

    def __init__(self, graph: WeightedGraph, edge_ids: tuple[int, ...],
                 parent: list[int], parent_edge: list[int], depth: list[int]):
        self.graph = graph
        self.edge_ids = edge_ids
        self.parent = parent
        self.parent_edge = parent_edge
        self.depth = depth

    def edge_set(self) -> frozenset[int]:
        return frozenset(self.edge_ids)

    def position_of(self) -> dict[int, int]:
        """Map edge id to its slot in ``edge_ids`` (congestion vector order)."""
        return {e: i for i, e in enumerate(self.edge_ids)}

    def total_key(self, key: Callable[[int], float] | None = None) -> float:
        if key is None:
            key = self.graph.weight
        return sum(key(e) for e in self.edge_ids)

    def __repr__(self) -> str:  # pragma: no cover
        return f"<SpanningTree |E|={len(self.edge_ids)} of n={self.graph.vertex_count}>"


class _DSU:
    __slots__ = ("parent",)

    def __init__(self, n: int):
        self.parent = list(range(n))

    def find(self, x: int) -> int:
        p = self.parent
        while p[x] != x:
            p[x] = p[p[x]]
            x = p[x]
        return x

    def union(self, a: int, b: int) -> bool:
        ra, rb = self.find(a), self.find(b)
        if ra == rb:
            return False
        self.parent[rb] = ra
        return True


def validate_tree(graph: WeightedGraph, edge_ids: Sequence[int]) -> SpanningTree:
    """Check that ``edge_ids`` form a spanning tree and index it for queries.

    Raises WrongEdgeCount, ContainsCycle or NotSpanning naming the violated
    tree axiom. Edge order is preserved; congestion vectors are aligned to it.
    """
    n = graph.vertex_count
    ids = tuple(int(e) for e in edge_ids)
    for e in ids:
        if not 0 <= e < graph.edge_count:
            raise InvalidParams(f"edge id {e} out of range")
    if len(ids) != n - 1:
        raise WrongEdgeCount(f"{len(ids)} edges given, {n - 1} required")
    dsu = _DSU(n)
    adj: list[list[tuple[int, int]]] = [[] for _ in range(n)]
    for e in ids:
        u, v, _w = graph.edges[e]
        if u == v or not dsu.union(u, v):
            raise ContainsCycle(f"edge {e} closes a cycle")
        adj[u].append((e, v))
        adj[v].append((e, u))
    parent = [-1] * n
    parent_edge = [-1] * n
    depth = [0] * n
    q = deque([0])
    seen = [False] * n
    seen[0] = True
    count = 1
    while q:
        u = q.popleft()
        for e, v in adj[u]:
            if not seen[v]:
                seen[v] = True
                count += 1
                parent[v] = u
                parent_edge[v] = e
                depth[v] = depth[u] + 1
                q.append(v)
    if count != n:
        raise NotSpanning(f"tree reaches {count} of {n} vertices")
    return SpanningTree(graph, ids, parent, parent_edge, depth)


def tree_path(tree: SpanningTree, u: int, v: int) -> list[int]:
    """Edge ids of the unique tree path from ``u`` to ``v``, in path order.

    Runs in O(depth(u) + depth(v)) by walking both endpoints to their lowest
    common ancestor.
    """
    if u == v:
        raise SameVertex(f"path endpoints coincide: {u}")
    n = tree.graph.vertex_count
    if not (0 <= u < n and 0 <= v < n):
        raise InvalidParams(f"vertex out of range: ({u}, {v})")
    depth, parent, pedge = tree.depth, tree.parent, tree.parent_edge
    left: list[int] = []
    right: list[int] = []
    while depth[u] > depth[v]:
        left.append(pedge[u])
        u = parent[u]
    while depth[v] > depth[u]:
        right.append(pedge[v])
        v = parent[v]
    while u != v:
        left.append(pedge[u])
        u = parent[u]
        right.append(pedge[v])
        v = parent[v]
    right.reverse()
    return left + right


def tree_path_vertices(tree: SpanningTree, u: int, v: int) -> tuple[list[int], list[int]]:
    """Like :func:`tree_path` but also returns the vertex walk ``u..v``."""
    edges = tree_path(tree, u, v)
    verts = [u]
    g = tree.graph
    cur = u
    for e in edges:
        a, b, _w = g.edges[e]
        cur = b if cur == a else a
        verts.append(cur)
    return edges, verts


def kruskal(
    graph: WeightedGraph,
    key: Callable[[int], float] | None = None,
    minimize: bool = True,
) -> SpanningTree:
    """Spanning tree extremal for ``key`` (edge id -> value; default weight).

    Ties are broken by lowest edge id, which makes the result deterministic.
    """
    if key is None:
        key = graph.weight
    order = sorted(range(graph.edge_count),
                   key=(lambda e: (key(e), e)) if minimize else (lambda e: (-key(e), e)))
    dsu = _DSU(graph.vertex_count)
    chosen = []
    for e in order:
        u, v, _w = graph.edges[e]
        if u != v and dsu.union(u, v):
            chosen.append(e)
            if len(chosen) == graph.vertex_count - 1:
                break
    if len(chosen) != graph.vertex_count - 1:
        raise Disconnected("graph has no spanning tree")
    return validate_tree(graph, chosen)


def random_spanning_tree(graph: WeightedGraph, seed: int) -> SpanningTree:
    """Seeded random spanning tree: shuffled edge list fed to a union-find scan.

    Deterministic per seed. The distribution is not uniform over trees; it is
    only required to vary with the seed.
    """
    rng = random.Random(seed)
    order = list(range(graph.edge_count))
    rng.shuffle(order)
    dsu = _DSU(graph.vertex_count)
    chosen = []
    for e in order:
        u, v, _w = graph.edges[e]
        if u != v and dsu.union(u, v):
            chosen.append(e)
            if len(chosen) == graph.vertex_count - 1:
                break
    if len(chosen) != graph.vertex_count - 1:
        raise Disconnected("graph has no spanning tree")
    return validate_tree(graph, chosen)


def check_same_graph(graph: WeightedGraph, tree: SpanningTree) -> None:
    if tree.graph is not graph:
        # allow equal graphs loaded twice; cheap structural check
        if (tree.graph.vertex_count != graph.vertex_count
                or tree.graph.edges != graph.edges):
            raise TreeGraphMismatch("tree belongs to a different graph")

"""Strict congestion descent: seeded local search over the tree-exchange graph.

Starting from a random spanning tree, each non-tree edge is tried in a
seeded-random order; inserting it closes one tree cycle, and the best
strictly-improving removal on that cycle is applied. A pass with no accepted
exchange means the tree is a local minimum: no single insert/remove exchange
lowers the L^p congestion.

Candidate evaluation is exact. With integer weights the finite-p objective
``sum c^p`` is accumulated in arbitrary-precision integers (large p makes
these sums overflow doubles long before the graphs get interesting), and for
p = inf the cycle-local maxima are compared, which lets the search cross
plateaus of the global maximum.

All removals on one cycle are scored at once: labelling every vertex with the
cycle position it hangs from reduces each hypothetical congestion to an
interval-overlap sum, assembled with a pair of prefix-sum passes instead of
one cut computation per entry.
"""

from __future__ import annotations

import math
import random
from dataclasses import dataclass, field

import numpy as np

from .congestion import check_norm_order, edge_congestions, lp_norm, swap_update
from .errors import Disconnected, InvalidParams
from .graph import SpanningTree, WeightedGraph, random_spanning_tree, tree_path, validate_tree

INF = math.inf

_POW_TABLE_LIMIT = 500_000


@dataclass
class DescentTrace:
    """Outcome of a descent run (the best restart when several are made)."""

    iterations: int
    accepted_swaps: int
    congestion_history: list[float]
    best_tree: SpanningTree
    best_value: float
    visited_q_best: tuple[SpanningTree, float] | None = None


class _Engine:
    """One descent run on a fixed graph; reusable across restarts."""

    def __init__(self, graph: WeightedGraph, p, deep_q=None):
        check_norm_order(p)
        if deep_q is not None:
            check_norm_order(deep_q)
        self.g = graph
        self.p = p
        self.q = deep_q
        self.n = graph.vertex_count
        self.m = graph.edge_count
        self.int_mode = graph.integer_weighted()
        self.eu = np.array([e[0] for e in graph.edges], dtype=np.intp)
        self.ev = np.array([e[1] for e in graph.edges], dtype=np.intp)
        self.ew = np.array([e[2] for e in graph.edges], dtype=np.float64)
        self.wint = [int(w) for _, _, w in graph.edges] if self.int_mode else None
        self.powtab = None
        if self.int_mode and p != INF and p > 1:
            total = int(round(graph.total_weight()))
            if total <= _POW_TABLE_LIMIT:
                self.powtab = [i ** p for i in range(total + 1)]
        self.qpowtab = None
        if self.int_mode and deep_q not in (None, INF) and deep_q > 1:
            total = int(round(graph.total_weight()))
            if total <= _POW_TABLE_LIMIT:
                self.qpowtab = [i ** deep_q for i in range(total + 1)]
        self._visit = [0] * self.n
        self._visit_stamp = 0
        self._pos = np.zeros(self.n, dtype=np.intp)

    # -- tree state -----------------------------------------------------------

    def set_tree(self, edge_ids):
        g = self.g
        self.edge_at_slot = list(edge_ids)
        self.slot_of = {e: i for i, e in enumerate(edge_ids)}
        self.in_tree = [False] * self.m
        for e in edge_ids:
            self.in_tree[e] = True
        tree = validate_tree(g, edge_ids)
        vals = edge_congestions(g, tree).values
        self.c = [int(v) for v in vals] if self.int_mode else list(vals)
        self._rebuild_index()

    def _rebuild_index(self):
        g = self.g
        tadj: list[list[tuple[int, int]]] = [[] for _ in range(self.n)]
        for e in self.edge_at_slot:
            u, v, _w = g.edges[e]
            tadj[u].append((e, v))
            tadj[v].append((e, u))
        self.tadj = tadj
        parent = [-1] * self.n
        pedge = [-1] * self.n
        depth = [0] * self.n
        seen = [False] * self.n
        seen[0] = True
        stack = [0]
        while stack:
            x = stack.pop()
            for e, y in tadj[x]:
                if not seen[y]:
                    seen[y] = True
                    parent[y] = x
                    pedge[y] = e
                    depth[y] = depth[x] + 1
                    stack.append(y)
        self.parent, self.pedge, self.depth = parent, pedge, depth

    def _path(self, u: int, v: int) -> tuple[list[int], list[int]]:
        """Tree path as (edge ids, vertex walk u..v)."""
        parent, pedge, depth = self.parent, self.pedge, self.depth
        left: list[int] = []
        right: list[int] = []
        uu, vv = u, v
        while depth[uu] > depth[vv]:
            left.append(pedge[uu])
            uu = parent[uu]
        while depth[vv] > depth[uu]:
            right.append(pedge[vv])
            vv = parent[vv]
        while uu != vv:
            left.append(pedge[uu])
            uu = parent[uu]
            right.append(pedge[vv])
            vv = parent[vv]
        right.reverse()
        edges = left + right
        verts = [u]
        cur = u
        for e in edges:
            a, b, _w = self.g.edges[e]
            cur = b if cur == a else a
            verts.append(cur)
        return edges, verts

    def _positions(self, verts: list[int], path_set: set[int]) -> np.ndarray:
        """Label every vertex with the index of the cycle vertex it hangs from."""
        self._visit_stamp += 1
        stamp = self._visit_stamp
        visit = self._visit
        pos = self._pos
        tadj = self.tadj
        for k, w0 in enumerate(verts):
            visit[w0] = stamp
            pos[w0] = k
            stack = [w0]
            while stack:
                x = stack.pop()
                for e, y in tadj[x]:
                    if e in path_set or visit[y] == stamp:
                        continue
                    visit[y] = stamp
                    pos[y] = k
                    stack.append(y)
        return pos

    def _swap_matrix(self, edges: list[int], verts: list[int]) -> np.ndarray:
        """Row r = congestion entries of the cycle after removing path edge r.

        Column j != r holds the new congestion of path edge j; the diagonal
        holds the inserted edge's congestion, which equals the removed edge's
        old value.
        """
        ell = len(edges)
        pos = self._positions(verts, set(edges))
        pu = pos[self.eu]
        pv = pos[self.ev]
        a = np.minimum(pu, pv)
        b = np.maximum(pu, pv)
        mask = a < b
        lo = a[mask] + 1
        hi = b[mask]
        w = self.ew[mask]
        size = ell + 2
        cov = np.bincount(lo, weights=w, minlength=size)
        cov -= np.bincount(hi + 1, weights=w, minlength=size)
        cov = np.cumsum(cov)
        flat = np.concatenate([lo * size + lo, lo * size + hi + 1,
                               (hi + 1) * size + lo, (hi + 1) * size + hi + 1])
        fw = np.concatenate([w, -w, -w, w])
        pair = np.bincount(flat, weights=fw, minlength=size * size).reshape(size, size)
        pair = pair.cumsum(axis=0).cumsum(axis=1)
        s = cov[1:ell + 1, None] + cov[None, 1:ell + 1] - 2.0 * pair[1:ell + 1, 1:ell + 1]
        if self.int_mode:
            s = np.rint(s).astype(np.int64)
        for r, e in enumerate(edges):
            s[r, r] = self.c[self.slot_of[e]]
        return s

    # -- objective helpers ------------------------------------------------------

    def _pw(self, x):
        if self.powtab is not None:
            return self.powtab[x]
        return x ** self.p

    def local_key(self, entries) -> object:
        if self.p == INF:
            return max(entries)
        if self.p == 1:
            return sum(entries)
        return sum(self._pw(x) for x in entries)

    def global_key(self) -> object:
        return self.local_key(self.c)

    def global_value(self) -> float:
        key = self.global_key()
        if self.p == INF:
            return float(key)
        return float(key) ** (1.0 / self.p)

    def q_value(self) -> float:
        if self.q == INF:
            return float(max(self.c))
        if self.q == 1:
            return float(sum(self.c))
        if self.qpowtab is not None:
            return float(sum(self.qpowtab[x] for x in self.c)) ** (1.0 / self.q)
        return float(sum(x ** self.q for x in self.c)) ** (1.0 / self.q)

    # -- candidate evaluation -----------------------------------------------------

    def _best_removal(self, s: np.ndarray, edges: list[int]):
        """Minimal-key row of the swap matrix; ties to the lowest edge id."""
        if self.p == INF:
            keys = s.max(axis=1)
            best = keys.min()
            rows = np.flatnonzero(keys == best)
            best_key = int(best) if self.int_mode else float(best)
        elif self.p == 1:
            keys = s.sum(axis=1)
            best = keys.min()
            rows = np.flatnonzero(keys == best)
            best_key = int(best) if self.int_mode else float(best)
        elif self.int_mode:
            pw = self._pw
            row_keys = [sum(pw(x) for x in row) for row in s.tolist()]
            best_key = min(row_keys)
            rows = [i for i, k in enumerate(row_keys) if k == best_key]
        else:
            keys = np.power(s, self.p).sum(axis=1)
            best = keys.min()
            rows = np.flatnonzero(keys == best)
            best_key = float(best)
        r = min(rows, key=lambda i: edges[i])
        return int(r), best_key

    def _apply(self, insert: int, edges: list[int], row: np.ndarray, r: int) -> None:
        removed = edges[r]
        vals = row.tolist()
        for j, e in enumerate(edges):
            if j == r:
                continue
            self.c[self.slot_of[e]] = vals[j]
        slot = self.slot_of.pop(removed)
        self.slot_of[insert] = slot
        self.edge_at_slot[slot] = insert
        self.c[slot] = vals[r]
        self.in_tree[removed] = False
        self.in_tree[insert] = True
        self._rebuild_index()

    def _canonical_refresh(self, slots: set[int]) -> None:
        """Recompute the given entries with the canonical accumulation order."""
        g = self.g
        for s in slots:
            self.c[s] = g.edges[self.edge_at_slot[s]][2]
        pos_of = self.slot_of
        for f in range(self.m):
            if self.in_tree[f]:
                continue
            u, v, w = g.edges[f]
            p_edges, _ = self._path(u, v)
            for e in p_edges:
                s = pos_of[e]
                if s in slots:
                    self.c[s] += w

    # -- descent loop ------------------------------------------------------------

    def run(self, initial_ids, rng: random.Random, observe=None):
        """Descend to a local minimum; returns (passes, accepted, history)."""
        self.set_tree(initial_ids)
        history = [self.global_value()]
        if observe is not None:
            observe(self)
        passes = 0
        accepted = 0
        improved = True
        order = list(range(self.m))
        while improved:
            improved = False
            passes += 1
            rng.shuffle(order)
            for eid in order:
                if self.in_tree[eid]:
                    continue
                u, v, _w = self.g.edges[eid]
                edges, verts = self._path(u, v)
                cur_key = self.local_key([self.c[self.slot_of[e]] for e in edges])
                s = self._swap_matrix(edges, verts)
                r, best_key = self._best_removal(s, edges)
                if not best_key < cur_key:
                    continue
                if self.int_mode:
                    self._apply(eid, edges, s[r], r)
                else:
                    if not self._apply_float_checked(eid, edges, s[r], r, cur_key):
                        continue
                improved = True
                accepted += 1
                val = self.global_value()
                if val < history[-1]:
                    history.append(val)
                if observe is not None:
                    observe(self)
        return passes, accepted, history


    def _apply_float_checked(self, insert, edges, row, r, cur_key) -> bool:
        """Float mode: apply, then re-derive entries canonically and verify.

        The screening matrix sums weights in a different order than the
        canonical accumulation, so the accepted exchange is re-checked on
        canonical values; a rounding-level false positive is rolled back.
        """
        removed = edges[r]
        old_slot_vals = {self.slot_of[e]: self.c[self.slot_of[e]] for e in edges}
        self._apply(insert, edges, row, r)
        changed = {self.slot_of[insert]} | {self.slot_of[e] for e in edges if e != removed}
        self._canonical_refresh(changed)
        new_key = self.local_key([self.c[s] for s in changed])
        if new_key < cur_key:
            return True
        # roll back
        slot = self.slot_of.pop(insert)
        self.slot_of[removed] = slot
        self.edge_at_slot[slot] = removed
        self.in_tree[insert] = False
        self.in_tree[removed] = True
        for s, val in old_slot_vals.items():
            self.c[s] = val
        self._rebuild_index()
        return False


def _final_key(engine: _Engine):
    return engine.global_key()


def scd(
    graph: WeightedGraph,
    p,
    seed: int = 0,
    restarts: int = 10,
    initial_tree: SpanningTree | None = None,
) -> DescentTrace:
    """Best-of-restarts strict congestion descent.

    Restart ``r`` derives its seed as ``seed + r`` and starts from a fresh
    random spanning tree (the optional ``initial_tree`` replaces the first
    restart's start). Identical arguments give identical traces.
    """
    if restarts < 1:
        raise InvalidParams("restarts must be >= 1")
    if not graph.is_connected():
        raise Disconnected("descent needs a connected graph")
    engine = _Engine(graph, p)
    best = None
    for r in range(restarts):
        rng = random.Random(seed + r)
        if r == 0 and initial_tree is not None:
            start_ids = initial_tree.edge_ids
        else:
            start_ids = random_spanning_tree(graph, seed + r).edge_ids
        passes, accepted, history = engine.run(start_ids, rng)
        key = engine.global_key()
        if best is None or key < best[0]:
            best = (key, r, passes, accepted, history, tuple(engine.edge_at_slot))
    _key, _r, passes, accepted, history, ids = best
    tree = validate_tree(graph, ids)
    return DescentTrace(
        iterations=passes,
        accepted_swaps=accepted,
        congestion_history=history,
        best_tree=tree,
        best_value=history[-1],
    )


def scd_deep(
    graph: WeightedGraph,
    p,
    q,
    seed: int = 0,
    restarts: int = 10,
    initial_tree: SpanningTree | None = None,
) -> DescentTrace:
    """Descend with norm p while tracking the best L^q tree seen on the way.

    Every tree on the descent path (initial trees included, over all
    restarts) is scored with the L^q norm; the minimiser is reported in
    ``visited_q_best`` alongside the usual best-restart trace.
    """
    if restarts < 1:
        raise InvalidParams("restarts must be >= 1")
    if not graph.is_connected():
        raise Disconnected("descent needs a connected graph")
    engine = _Engine(graph, p, deep_q=q)
    qbest: list = [None, None]  # value, edge ids

    def observe(eng: _Engine):
        val = eng.q_value()
        if qbest[0] is None or val < qbest[0]:
            qbest[0] = val
            qbest[1] = tuple(eng.edge_at_slot)

    best = None
    for r in range(restarts):
        rng = random.Random(seed + r)
        if r == 0 and initial_tree is not None:
            start_ids = initial_tree.edge_ids
        else:
            start_ids = random_spanning_tree(graph, seed + r).edge_ids
        passes, accepted, history = engine.run(start_ids, rng, observe=observe)
        key = engine.global_key()
        if best is None or key < best[0]:
            best = (key, r, passes, accepted, history, tuple(engine.edge_at_slot))
    _key, _r, passes, accepted, history, ids = best
    tree = validate_tree(graph, ids)
    qtree = validate_tree(graph, qbest[1])
    return DescentTrace(
        iterations=passes,
        accepted_swaps=accepted,
        congestion_history=history,
        best_tree=tree,
        best_value=history[-1],
        visited_q_best=(qtree, qbest[0]),
    )


def has_improving_swap(graph: WeightedGraph, tree: SpanningTree, p) -> bool:
    """Exhaustive scan: does any single exchange strictly lower C_p?

    Used to verify the local-minimality postcondition on small graphs.
    """
    cong = edge_congestions(graph, tree)
    exact = graph.integer_weighted() and p != INF

    def key(values):
        if p == INF:
            return max(values)
        if exact:
            return sum(int(v) ** p for v in values)
        return sum(v ** p for v in values)

    base = key(cong.values)
    in_tree = tree.edge_set()
    for eid in range(graph.edge_count):
        if eid in in_tree:
            continue
        u, v, _w = graph.edges[eid]
        for rem in tree_path(tree, u, v):
            _t2, c2 = swap_update(graph, tree, cong, eid, rem)
            if key(c2.values) < base:
                return True
    return False

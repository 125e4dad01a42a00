"""Test-graph generators, label weightings, named trees and closed formulas.

Planar families (rectangular, triangular and hexagonal grids, planar uniform
random graphs) carry straight-line coordinates; the remaining families are
combinatorial only. All generators are deterministic, the random ones per
seed.

Hexagonal coordinates: rectangular patterns use flat-top unit hexagons whose
corners live on the integer lattice ``(a/2, b*sqrt(3)/2)``; a pattern of
``m x n`` hexagons has the hexagon in column c, row r centered at
``(a, b) = (3c, 2r + (c mod 2))``. Triangular patterns use pointy-top
hexagons on the lattice ``(a*sqrt(3)/2, b/2)``, centered at
``(2q + r, 3r)`` over the triangle ``q, r >= 0, q + r < n``.
"""

from __future__ import annotations

import math
import random
from dataclasses import dataclass
from typing import Callable, Sequence

from .congestion import INF, check_norm_order
from .errors import (
    DisconnectedSample,
    InvalidParams,
    KindFamilyMismatch,
    NoFormula,
    ZeroWeight,
)
from .graph import SpanningTree, WeightedGraph, validate_tree

PLANAR_FAMILIES = {"rect_grid", "tri_grid", "hex_tri", "hex_rect", "pu"}


@dataclass(frozen=True)
class FamilySpec:
    """Parameters naming one test graph.

    ``family`` is one of: complete, multipartite, hypercube, rect_grid,
    tri_grid, hex_tri, hex_rect, torus2, torus3, cube_grid, gnp, pu.
    ``weights`` is unit, plus, minus or euclidean (pu only).
    """

    family: str
    n: int | None = None
    m: int | None = None
    d: int | None = None
    k: int | None = None
    parts: tuple[int, ...] | None = None
    edge_prob: float | None = None
    seed: int = 0
    weights: str = "unit"

    def label(self) -> str:
        bits = [self.family]
        for name in ("n", "m", "d", "k"):
            v = getattr(self, name)
            if v is not None:
                bits.append(f"{name}{v}")
        if self.parts is not None:
            bits.append("x".join(str(p) for p in self.parts))
        if self.edge_prob is not None:
            bits.append(f"p{self.edge_prob:g}")
        if self.family in ("gnp", "pu"):
            bits.append(f"s{self.seed}")
        if self.weights != "unit":
            bits.append(self.weights)
        return "_".join(bits)


# -- individual generators ----------------------------------------------------


def _complete(n: int) -> WeightedGraph:
    if n is None or n < 2:
        raise InvalidParams("complete graph needs n >= 2")
    edges = [(u, v, 1.0) for u in range(n) for v in range(u + 1, n)]
    return WeightedGraph(n, edges)


def _multipartite(parts: Sequence[int]) -> WeightedGraph:
    if not parts or len(parts) < 2:
        raise InvalidParams("multipartite graph needs at least two parts")
    parts = tuple(int(p) for p in parts)
    if any(p < 1 for p in parts):
        raise InvalidParams("part sizes must be positive")
    if list(parts) != sorted(parts, reverse=True):
        raise InvalidParams("part sizes must be sorted descending")
    offsets = [0]
    for p in parts:
        offsets.append(offsets[-1] + p)
    n = offsets[-1]
    edges = []
    for i in range(len(parts)):
        for j in range(i + 1, len(parts)):
            for u in range(offsets[i], offsets[i + 1]):
                for v in range(offsets[j], offsets[j + 1]):
                    edges.append((u, v, 1.0))
    return WeightedGraph(n, edges)


def multipartite_part_of(parts: Sequence[int]) -> list[int]:
    """Part index (0-based) of every vertex, matching the generator layout."""
    out = []
    for i, p in enumerate(parts):
        out.extend([i] * p)
    return out


def _hypercube(d: int) -> WeightedGraph:
    if d is None or d < 1:
        raise InvalidParams("hypercube needs d >= 1")
    n = 1 << d
    edges = []
    for u in range(n):
        for b in range(d):
            v = u ^ (1 << b)
            if u < v:
                edges.append((u, v, 1.0))
    return WeightedGraph(n, edges)


def _rect_grid(m: int, n: int) -> WeightedGraph:
    if m is None or n is None or m < 1 or n < 1 or m * n < 2:
        raise InvalidParams("rectangular grid needs m, n >= 1 with m*n >= 2")
    def vid(i: int, j: int) -> int:
        return j * m + i
    edges = []
    coords = []
    for j in range(n):
        for i in range(m):
            coords.append((float(i), float(j)))
    for j in range(n):
        for i in range(m):
            if i + 1 < m:
                edges.append((vid(i, j), vid(i + 1, j), 1.0))
            if j + 1 < n:
                edges.append((vid(i, j), vid(i, j + 1), 1.0))
    return WeightedGraph(m * n, edges, coords=coords)


def _tri_grid(n: int) -> WeightedGraph:
    if n is None or n < 2:
        raise InvalidParams("triangular grid needs n >= 2")
    ids = {}
    coords = []
    for j in range(n):
        for i in range(n - j):
            ids[(i, j)] = len(coords)
            coords.append((i + j / 2.0, j * math.sqrt(3.0) / 2.0))
    edges = []
    for (i, j), u in ids.items():
        if (i + 1, j) in ids:
            edges.append((u, ids[(i + 1, j)], 1.0))
        if (i, j + 1) in ids:
            edges.append((u, ids[(i, j + 1)], 1.0))
        if (i - 1, j + 1) in ids:
            edges.append((u, ids[(i - 1, j + 1)], 1.0))
    return WeightedGraph(len(coords), edges, coords=coords)


_HEX_FLAT_CORNERS = ((2, 0), (1, 1), (-1, 1), (-2, 0), (-1, -1), (1, -1))
_HEX_POINTY_CORNERS = ((0, 2), (1, 1), (1, -1), (0, -2), (-1, -1), (-1, 1))


def _hex_from_cells(centers: list[tuple[int, int]], corners, unit_x: float, unit_y: float) -> WeightedGraph:
    ids: dict[tuple[int, int], int] = {}
    coords: list[tuple[float, float]] = []
    edge_set: set[tuple[int, int]] = set()
    for ca, cb in centers:
        ring = []
        for da, db in corners:
            key = (ca + da, cb + db)
            if key not in ids:
                ids[key] = len(coords)
                coords.append((key[0] * unit_x, key[1] * unit_y))
            ring.append(ids[key])
        for t in range(6):
            u, v = ring[t], ring[(t + 1) % 6]
            edge_set.add((min(u, v), max(u, v)))
    edges = [(u, v, 1.0) for u, v in sorted(edge_set)]
    return WeightedGraph(len(coords), edges, coords=coords)


def _hex_rect(m: int, n: int) -> WeightedGraph:
    if m is None or n is None or m < 1 or n < 1:
        raise InvalidParams("hexagonal rectangle needs m, n >= 1")
    centers = [(3 * c, 2 * r + (c % 2)) for c in range(m) for r in range(n)]
    return _hex_from_cells(centers, _HEX_FLAT_CORNERS, 0.5, math.sqrt(3.0) / 2.0)


def _hex_tri(n: int) -> WeightedGraph:
    if n is None or n < 1:
        raise InvalidParams("hexagonal triangle needs n >= 1")
    centers = [(2 * q + r, 3 * r) for r in range(n) for q in range(n - r)]
    return _hex_from_cells(centers, _HEX_POINTY_CORNERS, math.sqrt(3.0) / 2.0, 0.5)


def _torus2(m: int, n: int) -> WeightedGraph:
    if m is None or n is None or m < 3 or n < 3:
        raise InvalidParams("2d torus needs m, n >= 3")
    def vid(i: int, j: int) -> int:
        return j * m + i
    edge_set = set()
    for j in range(n):
        for i in range(m):
            a = vid(i, j)
            for b in (vid((i + 1) % m, j), vid(i, (j + 1) % n)):
                edge_set.add((min(a, b), max(a, b)))
    edges = [(u, v, 1.0) for u, v in sorted(edge_set)]
    return WeightedGraph(m * n, edges)


def _cube_grid(k: int) -> WeightedGraph:
    if k is None or k < 2:
        raise InvalidParams("cubical grid needs k >= 2")
    def vid(i: int, j: int, l: int) -> int:
        return (l * k + j) * k + i
    edges = []
    for l in range(k):
        for j in range(k):
            for i in range(k):
                if i + 1 < k:
                    edges.append((vid(i, j, l), vid(i + 1, j, l), 1.0))
                if j + 1 < k:
                    edges.append((vid(i, j, l), vid(i, j + 1, l), 1.0))
                if l + 1 < k:
                    edges.append((vid(i, j, l), vid(i, j, l + 1), 1.0))
    return WeightedGraph(k ** 3, edges)


def _torus3(k: int) -> WeightedGraph:
    if k is None or k < 3:
        raise InvalidParams("3d torus needs k >= 3")
    def vid(i: int, j: int, l: int) -> int:
        return (l * k + j) * k + i
    edge_set = set()
    for l in range(k):
        for j in range(k):
            for i in range(k):
                a = vid(i, j, l)
                for b in (vid((i + 1) % k, j, l), vid(i, (j + 1) % k, l), vid(i, j, (l + 1) % k)):
                    edge_set.add((min(a, b), max(a, b)))
    edges = [(u, v, 1.0) for u, v in sorted(edge_set)]
    return WeightedGraph(k ** 3, edges)


def _gnp(n: int, prob: float, seed: int) -> WeightedGraph:
    if n is None or n < 2 or prob is None or not 0.0 < prob <= 1.0:
        raise InvalidParams("gnp needs n >= 2 and 0 < p <= 1")
    for attempt in range(100):
        rng = random.Random(seed + attempt)
        edges = [(u, v, 1.0) for u in range(n) for v in range(u + 1, n)
                 if rng.random() < prob]
        if edges:
            g = WeightedGraph(n, edges)
            if g.is_connected():
                g.info["resamples"] = attempt
                return g
    raise DisconnectedSample(f"no connected G({n},{prob}) sample in 100 attempts from seed {seed}")


def _segments_cross(p: tuple[float, float], q: tuple[float, float],
                    a: tuple[float, float], b: tuple[float, float],
                    eps: float = 1e-12) -> bool:
    """Open-segment intersection test used by the uniform planar generator."""
    def orient(o, s, t):
        return (s[0] - o[0]) * (t[1] - o[1]) - (s[1] - o[1]) * (t[0] - o[0])

    d1 = orient(a, b, p)
    d2 = orient(a, b, q)
    d3 = orient(p, q, a)
    d4 = orient(p, q, b)
    if ((d1 > eps and d2 < -eps) or (d1 < -eps and d2 > eps)) and \
       ((d3 > eps and d4 < -eps) or (d3 < -eps and d4 > eps)):
        return True
    return False


def _pu(n: int, seed: int, euclidean: bool) -> WeightedGraph:
    """Planar uniform random graph grown point by point in the unit square.

    Each new point joins every earlier vertex whose connecting segment does
    not cross an already placed edge.
    """
    if n is None or n < 2:
        raise InvalidParams("pu needs n >= 2")
    rng = random.Random(seed)
    pts: list[tuple[float, float]] = []
    edges: list[tuple[int, int, float]] = []
    for k in range(n):
        p = (rng.random(), rng.random())
        links = []
        for v in range(len(pts)):
            seg_ok = True
            for (a, b, _w) in edges:
                if a == v or b == v:
                    continue
                if _segments_cross(p, pts[v], pts[a], pts[b]):
                    seg_ok = False
                    break
            if seg_ok:
                links.append(v)
        pts.append(p)
        for v in links:
            w = math.dist(p, pts[v]) if euclidean else 1.0
            edges.append((k, v, w))
    return WeightedGraph(n, edges, coords=pts)


def generate(spec: FamilySpec) -> WeightedGraph:
    """Build the named graph; planar families include coordinates."""
    fam = spec.family
    if fam == "complete":
        g = _complete(spec.n)
    elif fam == "multipartite":
        g = _multipartite(spec.parts)
    elif fam == "hypercube":
        g = _hypercube(spec.d)
    elif fam == "rect_grid":
        g = _rect_grid(spec.m, spec.n)
    elif fam == "tri_grid":
        g = _tri_grid(spec.n)
    elif fam == "hex_rect":
        g = _hex_rect(spec.m, spec.n)
    elif fam == "hex_tri":
        g = _hex_tri(spec.n)
    elif fam == "torus2":
        g = _torus2(spec.m, spec.n)
    elif fam == "torus3":
        g = _torus3(spec.k)
    elif fam == "cube_grid":
        g = _cube_grid(spec.k)
    elif fam == "gnp":
        g = _gnp(spec.n, spec.edge_prob, spec.seed)
    elif fam == "pu":
        g = _pu(spec.n, spec.seed, euclidean=(spec.weights == "euclidean"))
    else:
        raise InvalidParams(f"unknown family {fam!r}")

    if spec.weights in ("plus", "minus"):
        g = label_weights(g, spec.weights)
    elif spec.weights == "euclidean":
        if fam != "pu":
            raise InvalidParams("euclidean weights are defined for pu graphs only")
    elif spec.weights != "unit":
        raise InvalidParams(f"unknown weight mode {spec.weights!r}")
    return g


def label_weights(
    graph: WeightedGraph,
    mode: str,
    labeling: Callable[[int], float] | None = None,
) -> WeightedGraph:
    """Reweight edges from vertex labels: plus = l(u)+l(v), minus = |l(u)-l(v)|.

    The default labeling is the vertex id itself, which matches row-major
    order for grids and size-ordered partition sets for multipartite graphs.
    """
    if labeling is None:
        labeling = float
    if mode not in ("plus", "minus"):
        raise InvalidParams(f"unknown label weighting {mode!r}")
    new_weights = []
    for u, v, _w in graph.edges:
        lu, lv = labeling(u), labeling(v)
        w = lu + lv if mode == "plus" else abs(lu - lv)
        if w <= 0.0:
            raise ZeroWeight(f"labels of edge ({u}, {v}) give weight {w}")
        new_weights.append(w)
    return graph.reweighted(new_weights)


# -- named spanning trees --------------------------------------------------------


def _edge_lookup(graph: WeightedGraph) -> dict[frozenset[int], int]:
    return {frozenset((u, v)): e for e, (u, v, _w) in enumerate(graph.edges)}


def named_tree(spec: FamilySpec, kind: str, *, center: int = 0,
               i: int | None = None, j: int | None = None) -> SpanningTree:
    """Construct a named spanning tree for the family; returns it indexed.

    Kinds: ``radial`` (center adjacent to everything), ``t_star`` (bipartite,
    single nonterminal edge), ``t_s``/``t_m`` (multipartite, 1-based part
    indices i > j), ``hypercube_doubling``.
    """
    graph = generate(spec)
    lookup = _edge_lookup(graph)

    def eid(u: int, v: int) -> int:
        key = frozenset((u, v))
        if key not in lookup:
            raise KindFamilyMismatch(f"required edge ({u}, {v}) missing for kind {kind!r}")
        return lookup[key]

    if kind == "radial":
        ids = [eid(center, v) for v in range(graph.vertex_count) if v != center]
        return validate_tree(graph, ids)

    if kind == "hypercube_doubling":
        if spec.family != "hypercube":
            raise KindFamilyMismatch("hypercube_doubling needs the hypercube family")
        pairs = [(0, 1)]
        for level in range(1, spec.d):
            shift = 1 << level
            pairs = pairs + [(u + shift, v + shift) for u, v in pairs] + [(0, shift)]
        return validate_tree(graph, [eid(u, v) for u, v in pairs])

    if spec.family != "multipartite":
        raise KindFamilyMismatch(f"kind {kind!r} needs the multipartite family")
    parts = spec.parts
    offsets = [0]
    for p in parts:
        offsets.append(offsets[-1] + p)
    part_vertices = [list(range(offsets[t], offsets[t + 1])) for t in range(len(parts))]

    if kind == "t_star":
        if len(parts) != 2:
            raise KindFamilyMismatch("t_star is the bipartite single-nonterminal tree")
        i, j = 1, 2
        kind = "t_s"

    if kind in ("t_s", "t_m"):
        k = len(parts)
        if i is None or j is None or not (1 <= j < i <= k):
            raise KindFamilyMismatch("t_s/t_m need part indices 1 <= j < i <= k")
        xi = part_vertices[i - 1]
        xj = part_vertices[j - 1]
        hub = xi[0]
        ids = []
        if kind == "t_s":
            for t in range(k):
                if t in (i - 1, j - 1):
                    continue
                ids.extend(eid(hub, v) for v in part_vertices[t])
            ids.extend(eid(hub, v) for v in xj[:-1])
            y = xj[-1]
            ids.extend(eid(y, v) for v in xi)
        else:
            if len(xj) < len(xi) - 1:
                raise KindFamilyMismatch("t_m needs n_j >= n_i - 1")
            for t in range(k):
                if t == i - 1:
                    continue
                ids.extend(eid(hub, v) for v in part_vertices[t])
            for v, w in zip(xi[1:], xj):
                ids.append(eid(v, w))
        return validate_tree(graph, ids)

    raise KindFamilyMismatch(f"unknown tree kind {kind!r}")


# -- closed formulas ----------------------------------------------------------------

EXACT = "exact"
UPPER_BOUND = "upper_bound"
CONJECTURE = "conjecture"


def ts_tree_value(parts: Sequence[int], p: int, i: int, j: int) -> float:
    """L^p congestion of the single-nonterminal multipartite tree T_S(i,j)."""
    check_norm_order(p)
    if p == INF:
        raise NoFormula("T_S display is for finite p")
    n = list(parts)
    big_n = sum(n)
    ni, nj = n[i - 1], n[j - 1]
    total = sum(nl * (big_n - nl) ** p for nl in n)
    total -= (big_n - nj) ** p + (big_n - ni) ** p
    total += (ni * (big_n - ni - 1) + 2 - nj) ** p
    return float(total) ** (1.0 / p)


def tm_tree_value(parts: Sequence[int], p: int, i: int, j: int) -> float:
    """L^p congestion of the matched multipartite tree T_M(i,j)."""
    check_norm_order(p)
    if p == INF:
        raise NoFormula("T_M display is for finite p")
    n = list(parts)
    big_n = sum(n)
    ni, nj = n[i - 1], n[j - 1]
    total = sum(nl * (big_n - nl) ** p for nl in n)
    total -= (ni - 1) * (big_n - nj) ** p + (big_n - ni) ** p
    total += (ni - 1) * (2 * big_n - ni - nj - 2) ** p
    return float(total) ** (1.0 / p)


def _multipartite_c1(parts: Sequence[int]) -> int:
    n = list(parts)
    big_n = sum(n)
    k = len(n)
    nk = n[-1]
    if nk == 1:
        return sum(ni * (big_n - ni) for ni in n[:-1])
    cross = sum(n[a] * n[b] for a in range(k - 1) for b in range(a + 1, k - 1))
    return 2 * cross + 3 * (nk - 1) * (big_n - nk - 1) + (big_n - 1)


def _weighted_complete(n: int, mode: str, p) -> float:
    if p == INF:
        if mode == "minus":
            return n * (n - 1) / 2
        return 3 * (n - 1) * (n - 2) / 2 + 1
    if p == 1:
        if mode == "minus":
            return n * (n - 1) / 2 + n * (n - 1) * (n - 2) / 3
        return n ** 3 - 7 * n ** 2 / 2 + 9 * n / 2 - 2
    raise NoFormula("weighted complete bounds exist for p in {1, inf}")


def _weighted_bipartite(n: int, m: int, mode: str, p) -> float:
    if not n >= m >= 2:
        raise NoFormula("weighted bipartite bounds need n >= m >= 2")
    if p == INF:
        if mode == "minus":
            return 2 * m * n + (m * m + 2 * m * n - 5 * m + n * n - 7 * n) / 2 + 4
        return 3 * m * n + (m * m - 7 * m + 3 * n * n - 13 * n) / 2 + 6
    if p == 1:
        if mode == "minus":
            return (3 * (n * n * m + n * m * m) / 2
                    - m * m - n * n - 4 * m * n + 3 * n + 3 * m - 2)
        return ((9 * n * n * m + 3 * n * m * m) / 2
                - m * m - 9 * m * n + 5 * m - 3 * n * n + 7 * n - 4)
    raise NoFormula("weighted bipartite bounds exist for p in {1, inf}")


def _weighted_multipartite_nk1(parts: Sequence[int], mode: str, p) -> float:
    ns = list(parts)
    if ns[-1] != 1:
        raise NoFormula("weighted multipartite bounds need n_k = 1")
    big_n = sum(ns)
    k = len(ns)
    nk1 = ns[-2]
    if p == INF:
        if mode == "minus":
            return ((big_n - 2) * (big_n - nk1 - 1)
                    - (big_n - nk1 - 1) * (big_n - nk1 - 2) / 2 + 1)
        return ((big_n - 2) * (big_n - nk1 + 1)
                + (big_n - nk1 - 1) * (big_n - nk1 - 2) / 2 + 1)
    if p == 1:
        if mode == "minus":
            total = (big_n - 1) * big_n / 2
            prefix = 0
            for idx in range(1, k - 1):          # i = 1..k-2, 1-based
                ni = ns[idx - 1]
                total += ni * (big_n - prefix - ni - 1) * (big_n - prefix - 1)
                prefix += ni
            return total
        total = (big_n - 1) * (3 * big_n - 4) / 2
        prefix = 0
        for idx in range(1, k - 1):
            ni = ns[idx - 1]
            tail = sum(ns[idx:-1])               # n_{i+1} + ... + n_{k-1}
            total += (4 * prefix + 3 * ni + tail - 1) * ni * tail
            prefix += ni
        return total
    raise NoFormula("weighted multipartite bounds exist for p in {1, inf}")


def closed_form(spec: FamilySpec, p) -> tuple[float, str]:
    """Formula value for (family, weighting, p) plus its role tag.

    Roles: ``exact`` (proved optimum), ``upper_bound``, ``conjecture``.
    Raises NoFormula when the combination has no published expression.
    """
    check_norm_order(p)
    fam, mode = spec.family, spec.weights

    if mode in ("plus", "minus"):
        if fam == "complete":
            return _weighted_complete(spec.n, mode, p), UPPER_BOUND
        if fam == "multipartite":
            parts = spec.parts
            if len(parts) == 2:
                return _weighted_bipartite(parts[0], parts[1], mode, p), UPPER_BOUND
            return _weighted_multipartite_nk1(parts, mode, p), UPPER_BOUND
        raise NoFormula(f"no weighted formula for family {fam!r}")
    if mode != "unit":
        raise NoFormula(f"no formula for weight mode {mode!r}")

    if fam == "complete":
        n = spec.n
        if p == INF:
            return float(n - 1), EXACT
        return float((n - 1) ** (p + 1)) ** (1.0 / p), EXACT
    if fam == "multipartite":
        parts = spec.parts
        big_n = sum(parts)
        if p == INF:
            if parts[-1] == 1:
                return float(big_n - parts[-2]), EXACT
            return float(2 * big_n - parts[0] - parts[1] - 2), EXACT
        if parts[-1] == 1:
            return float(sum(ni * (big_n - ni) ** p for ni in parts[:-1])) ** (1.0 / p), EXACT
        if p == 1:
            return float(_multipartite_c1(parts)), EXACT
        k = len(parts)
        return min(tm_tree_value(parts, p, k, 1), tm_tree_value(parts, p, 2, 1)), UPPER_BOUND
    if fam == "rect_grid":
        if p != INF:
            raise NoFormula("rectangular grid formula is for p = inf")
        s, t = min(spec.m, spec.n), max(spec.m, spec.n)
        if s <= 3:
            return float(s), EXACT
        if s % 2 == 0 and t > s:
            return float(s + 1), EXACT
        return float(s), EXACT
    if fam == "tri_grid":
        if p != INF:
            raise NoFormula("triangular grid formula is for p = inf")
        return float(2 * ((2 * spec.n) // 3)), EXACT
    if fam == "hex_tri":
        if p != INF:
            raise NoFormula("hexagonal formulas are for p = inf")
        n = spec.n
        return float(3 + (n - 1) // 3 + (n - 2) // 3), UPPER_BOUND
    if fam == "hex_rect":
        if p != INF:
            raise NoFormula("hexagonal formulas are for p = inf")
        s = min(spec.m, spec.n)
        return float(1 + 2 * math.ceil(s / 2)), UPPER_BOUND
    if fam == "hypercube":
        d = spec.d
        if p == INF:
            if d < 7:
                return float(2 ** (d - 1)), EXACT
            raise NoFormula("hypercube p=inf congestion is open for d >= 7")
        if p == 1:
            return float(d * (d - 1) * 2 ** (d - 2)), CONJECTURE
        raise NoFormula("hypercube formulas are for p in {1, inf}")
    if fam == "torus2":
        if p != INF:
            raise NoFormula("torus formula is for p = inf")
        return float(2 * min(spec.m, spec.n)), EXACT
    raise NoFormula(f"no formula for family {fam!r}")

import json
import random

import pytest

from stcong.errors import (
    ContainsCycle,
    Disconnected,
    InvalidParams,
    SameVertex,
    WrongEdgeCount,
)
from stcong.graph import (
    WeightedGraph,
    kruskal,
    random_spanning_tree,
    tree_path,
    validate_tree,
)
from stcong.oracle import enumerate_spanning_trees

from conftest import complete_graph, cycle_graph, path_graph, random_connected_graph, weighted_triangle


class TestConstruction:
    def test_rejects_nonpositive_weight(self):
        with pytest.raises(InvalidParams):
            WeightedGraph(2, [(0, 1, 0.0)])

    def test_rejects_out_of_range_endpoint(self):
        with pytest.raises(InvalidParams):
            WeightedGraph(2, [(0, 2, 1.0)])

    def test_rejects_parallel_and_loops_in_simple_graph(self):
        with pytest.raises(InvalidParams):
            WeightedGraph(3, [(0, 1, 1.0), (1, 0, 1.0)])
        with pytest.raises(InvalidParams):
            WeightedGraph(3, [(0, 0, 1.0)])

    def test_multigraph_allows_both(self):
        g = WeightedGraph(2, [(0, 1, 1.0), (0, 1, 2.0), (0, 0, 3.0)], multigraph=True)
        assert g.edge_count == 3
        assert g.degree(0) == 3  # two parallel edges plus the loop, counted once
        assert g.weighted_degree(0) == 6.0

    def test_adjacency_round_trip(self):
        g = complete_graph(5)
        for v in range(5):
            for eid, other in g.adjacency[v]:
                u, w, _ = g.edges[eid]
                assert {u, w} == {v, other}


class TestValidateTree:
    def test_path_in_cycle_is_valid(self):
        g = cycle_graph(4)  # edges: ab=0 bc=1 cd=2 da=3
        t = validate_tree(g, [0, 1, 2])
        assert t.edge_ids == (0, 1, 2)
        assert t.depth[3] == 3

    def test_wrong_edge_count(self):
        g = cycle_graph(4)
        with pytest.raises(WrongEdgeCount):
            validate_tree(g, [0, 1, 2, 3])

    def test_cycle_detected(self):
        g = complete_graph(4)  # ids: 01=0 02=1 03=2 12=3 13=4 23=5
        with pytest.raises(ContainsCycle):
            validate_tree(g, [0, 3, 1])  # triangle 0-1-2

    def test_round_trip_for_random_trees(self, rng):
        g = random_connected_graph(rng, 9)
        for seed in range(20):
            t = random_spanning_tree(g, seed)
            again = validate_tree(g, t.edge_ids)
            assert again.edge_ids == t.edge_ids


class TestTreePath:
    def test_star_path(self):
        g = WeightedGraph(3, [(2, 0, 1.0), (2, 1, 1.0)])  # center 2
        t = validate_tree(g, [0, 1])
        assert tree_path(t, 0, 1) == [0, 1]

    def test_path_graph(self):
        g = path_graph(3)
        t = validate_tree(g, [0, 1])
        assert tree_path(t, 0, 2) == [0, 1]

    def test_cycle_tree_long_path(self):
        g = cycle_graph(4)
        t = validate_tree(g, [0, 1, 2])
        assert tree_path(t, 0, 3) == [0, 1, 2]

    def test_same_vertex_rejected(self):
        g = path_graph(3)
        t = validate_tree(g, [0, 1])
        with pytest.raises(SameVertex):
            tree_path(t, 1, 1)

    def test_path_is_simple_and_connects(self, rng):
        g = random_connected_graph(rng, 10)
        t = random_spanning_tree(g, 3)
        for _ in range(50):
            u, v = rng.sample(range(10), 2)
            edges = tree_path(t, u, v)
            cur = u
            seen = {u}
            for e in edges:
                a, b, _w = g.edges[e]
                assert cur in (a, b)
                cur = b if cur == a else a
                assert cur not in seen
                seen.add(cur)
            assert cur == v


class TestKruskal:
    def test_min_triangle(self):
        g = weighted_triangle()
        t = kruskal(g, minimize=True)
        assert set(t.edge_ids) == {0, 1}
        assert t.total_key() == 2.0

    def test_max_triangle_tie_break(self):
        g = weighted_triangle()
        t = kruskal(g, minimize=False)
        # must contain ac (weight 2); tie between ab and bc broken by id
        assert set(t.edge_ids) == {2, 0}
        assert t.total_key() == 3.0

    def test_unweighted_complete(self):
        t = kruskal(complete_graph(4))
        assert t.total_key() == 3.0

    def test_disconnected_rejected(self):
        g = WeightedGraph(4, [(0, 1, 1.0), (2, 3, 1.0)])
        with pytest.raises(Disconnected):
            kruskal(g)

    def test_minimality_and_exchange_property_by_enumeration(self, rng):
        for _ in range(10):
            g = random_connected_graph(rng, 7, weight_pool=(1.0, 2.0, 3.0, 5.0))
            t = kruskal(g, minimize=True)
            kr = sorted(g.weight(e) for e in t.edge_ids)
            for ids in enumerate_spanning_trees(g):
                other = sorted(g.weight(e) for e in ids)
                assert sum(kr) <= sum(other) + 1e-9
                assert all(a <= b + 1e-9 for a, b in zip(kr, other))


class TestRandomSpanningTree:
    def test_valid_and_deterministic(self):
        g = cycle_graph(4)
        t1 = random_spanning_tree(g, 0)
        t2 = random_spanning_tree(g, 0)
        assert t1.edge_ids == t2.edge_ids
        assert len(t1.edge_ids) == 3

    def test_seed_variation(self):
        g = complete_graph(4)
        trees = {frozenset(random_spanning_tree(g, s).edge_ids) for s in range(1000)}
        assert len(trees) >= 2

    def test_disconnected_rejected(self):
        g = WeightedGraph(3, [(0, 1, 1.0)])
        with pytest.raises(Disconnected):
            random_spanning_tree(g, 0)


class TestJsonContract:
    def test_exact_shape(self, tmp_path):
        g = WeightedGraph(2, [(0, 1, 1.5)], coords=[(0.0, 0.0), (1.0, 2.0)])
        d = g.to_json_dict()
        assert d == {
            "vertices": [{"id": 0, "x": 0.0, "y": 0.0}, {"id": 1, "x": 1.0, "y": 2.0}],
            "edges": [{"u": 0, "v": 1, "w": 1.5}],
        }
        path = tmp_path / "g.json"
        g.save(str(path))
        back = WeightedGraph.load(str(path))
        assert back.edges == g.edges
        assert back.coords == g.coords

    def test_weight_defaults_to_one(self):
        data = {"vertices": [{"id": 0}, {"id": 1}], "edges": [{"u": 0, "v": 1}]}
        g = WeightedGraph.from_json_dict(data)
        assert g.edges == ((0, 1, 1.0),)
        assert g.coords is None

    def test_rejects_sparse_ids(self):
        data = {"vertices": [{"id": 0}, {"id": 2}], "edges": []}
        with pytest.raises(InvalidParams):
            WeightedGraph.from_json_dict(data)

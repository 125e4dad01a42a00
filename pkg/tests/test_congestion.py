import math
import random

import pytest

from stcong.congestion import CongestionVector, edge_congestions, lp_norm, swap_update
from stcong.errors import (
    EmptyVector,
    InsertAlreadyInTree,
    InvalidParams,
    RemoveNotOnCycle,
)
from stcong.graph import random_spanning_tree, validate_tree
from stcong.oracle import total_stretch

from conftest import (
    complete_graph,
    cut_congestion_vector,
    cycle_graph,
    path_graph,
    random_connected_graph,
    random_tree_of,
    weighted_triangle,
)

INF = math.inf


class TestEdgeCongestions:
    def test_cycle4(self):
        g = cycle_graph(4)
        t = validate_tree(g, [0, 1, 2])
        assert edge_congestions(g, t).values == [2.0, 2.0, 2.0]

    def test_weighted_triangle(self):
        g = weighted_triangle()
        t = validate_tree(g, [0, 2])  # {ab, ac}
        c = edge_congestions(g, t).as_dict(t)
        assert c[0] == 2.0  # ab
        assert c[2] == 3.0  # ac

    def test_path_without_chords(self):
        g = path_graph(3)
        t = validate_tree(g, [0, 1])
        assert edge_congestions(g, t).values == [1.0, 1.0]

    def test_matches_cut_computation(self, rng):
        for _ in range(30):
            g = random_connected_graph(rng, rng.randrange(4, 10),
                                       weight_pool=(1.0, 2.0, 3.0))
            t = random_tree_of(g, rng)
            assert edge_congestions(g, t).values == cut_congestion_vector(g, t)

    def test_sum_identity(self, rng):
        from stcong.graph import tree_path
        for _ in range(20):
            g = random_connected_graph(rng, 8, weight_pool=(1.0, 2.5))
            t = random_tree_of(g, rng)
            c = edge_congestions(g, t)
            expect = 0.0
            for f, (u, v, w) in enumerate(g.edges):
                plen = 1 if f in t.edge_set() else len(tree_path(t, u, v))
                expect += w * plen
            assert sum(c.values) == pytest.approx(expect)

    def test_own_weight_lower_bounds_entry(self, rng):
        g = random_connected_graph(rng, 9, weight_pool=(1.0, 4.0))
        t = random_tree_of(g, rng)
        c = edge_congestions(g, t)
        for e, v in zip(t.edge_ids, c.values):
            assert v >= g.weight(e)


class TestLpNorm:
    def test_basics(self):
        assert lp_norm([2, 2, 2], 1) == 6.0
        assert lp_norm([2, 2, 2], INF) == 2.0
        assert lp_norm([3, 4], 2) == pytest.approx(5.0)

    def test_empty_rejected(self):
        with pytest.raises(EmptyVector):
            lp_norm([], 1)

    def test_bad_order_rejected(self):
        with pytest.raises(InvalidParams):
            lp_norm([1.0], 0)
        with pytest.raises(InvalidParams):
            lp_norm([1.0], 1.5)

    def test_norm_chain(self, rng):
        for _ in range(100):
            n = rng.randrange(2, 9)
            g = random_connected_graph(rng, n, weight_pool=(1.0, 2.0, 3.0))
            t = random_tree_of(g, rng)
            v = edge_congestions(g, t).values
            prev = None
            for p in (1, 2, 3, 5, 9):
                cur = lp_norm(v, p)
                assert lp_norm(v, INF) <= cur + 1e-9
                assert cur <= (n - 1) ** (1.0 / p) * lp_norm(v, INF) + 1e-9
                if prev is not None:
                    assert cur <= prev + 1e-9
                prev = cur


class TestSwapUpdate:
    def test_cycle4_rotation(self):
        g = cycle_graph(4)
        t = validate_tree(g, [0, 1, 2])
        c = edge_congestions(g, t)
        t2, c2 = swap_update(g, t, c, insert=3, remove=0)
        assert set(t2.edge_ids) == {1, 2, 3}
        assert c2.values == [2.0, 2.0, 2.0]

    def test_k4_path_to_star(self):
        g = complete_graph(4)  # ids: 01=0 02=1 03=2 12=3 13=4 23=5
        t = validate_tree(g, [0, 3, 5])  # path 0-1-2-3
        c = edge_congestions(g, t)
        assert c.values == [3.0, 4.0, 3.0]
        t2, c2 = swap_update(g, t, c, insert=1, remove=3)  # insert 02, drop 12
        assert c2.values == edge_congestions(g, t2).values

    def test_weighted_triangle_example(self):
        g = weighted_triangle()
        t = validate_tree(g, [0, 1])  # {ab, bc}
        c = edge_congestions(g, t)
        t2, c2 = swap_update(g, t, c, insert=2, remove=1)
        assert set(t2.edge_ids) == {0, 2}
        assert sorted(c2.values) == [2.0, 3.0]

    def test_errors(self):
        g = cycle_graph(4)
        t = validate_tree(g, [0, 1, 2])
        c = edge_congestions(g, t)
        with pytest.raises(InsertAlreadyInTree):
            swap_update(g, t, c, insert=0, remove=1)
        g5 = complete_graph(4)
        t5 = validate_tree(g5, [0, 1, 2])  # star at 0
        c5 = edge_congestions(g5, t5)
        with pytest.raises(RemoveNotOnCycle):
            swap_update(g5, t5, c5, insert=3, remove=2)  # cycle of 12 is {01, 02}

    def test_equals_full_recompute_random(self, rng):
        # randomized swaps on graphs up to 12 vertices, exact equality
        done = 0
        while done < 1000:
            n = rng.randrange(4, 13)
            g = random_connected_graph(rng, n, extra_prob=0.5,
                                       weight_pool=(1.0, 2.0, 3.0, 0.5, 1.25))
            t = random_tree_of(g, rng)
            non_tree = [e for e in range(g.edge_count) if e not in t.edge_set()]
            if not non_tree:
                continue
            c = edge_congestions(g, t)
            from stcong.graph import tree_path
            ins = rng.choice(non_tree)
            u, v, _w = g.edges[ins]
            rem = rng.choice(tree_path(t, u, v))
            t2, c2 = swap_update(g, t, c, ins, rem)
            full = edge_congestions(g, t2)
            assert c2.values == full.values  # bitwise: same accumulation order
            done += 1

    def test_weight_monotonicity(self, rng):
        for _ in range(25):
            g = random_connected_graph(rng, 7, weight_pool=(1.0, 2.0))
            t = random_tree_of(g, rng)
            base = edge_congestions(g, t).values
            e = rng.randrange(g.edge_count)
            bumped = list(g.weights())
            bumped[e] += 3.0
            g2 = g.reweighted(bumped)
            t2 = validate_tree(g2, t.edge_ids)
            raised = edge_congestions(g2, t2).values
            assert all(b + 1e-12 >= a for a, b in zip(base, raised))


class TestStretchIdentity:
    def test_cycle4(self):
        g = cycle_graph(4)
        t = validate_tree(g, [0, 1, 2])
        assert total_stretch(g, t) == 3.0
        assert lp_norm(edge_congestions(g, t).values, 1) == 3 + 3.0

    def test_random_unweighted(self, rng):
        for _ in range(100):
            n = rng.randrange(3, 9)
            g = random_connected_graph(rng, n)
            t = random_tree_of(g, rng)
            c1 = lp_norm(edge_congestions(g, t).values, 1)
            assert c1 == (n - 1) + total_stretch(g, t)

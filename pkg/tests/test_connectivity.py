import random
import unittest
from itertools import combinations

from hypothesis import given
from hypothesis import strategies as st

from edge_maximal import (Cut, GuardError, Hypergraph, InvalidEdgeError, binom,
                          complete_hypergraph, cut_degree, edge_connectivity,
                          edge_connectivity_bruteforce, edge_cut, incidence_network,
                          is_maximal_edge_connected, is_peripheral, is_super_edge_connected,
                          local_edge_connectivity)
from strategies import PROPERTY_SETTINGS, hypergraphs, random_hypergraph, two_cliques_with_bridge


class TestCuts(unittest.TestCase):
    def test_every_edge_of_k43_crosses_a_balanced_split(self):
        h = complete_hypergraph(4, 3)
        cut = edge_cut(h, {0, 1})
        self.assertEqual(cut.weight, 4)
        self.assertEqual(cut.crossing, h.edges)

    def test_trivial_sides(self):
        h = complete_hypergraph(5, 3)
        self.assertEqual(cut_degree(h, []), 0)
        self.assertEqual(cut_degree(h, range(5)), 0)
        with self.assertRaises(InvalidEdgeError):
            cut_degree(h, [7])

    def test_crossing_count_on_complete_hypergraphs(self):
        for r in range(2, 5):
            for n in range(1, 13):
                h = complete_hypergraph(n, r)
                for n1 in range(n + 1):
                    with self.subTest(n=n, r=r, n1=n1):
                        expected = binom(n, r) - binom(n1, r) - binom(n - n1, r)
                        self.assertEqual(cut_degree(h, range(n1)), expected)

    def test_relabel_and_dict(self):
        cut = Cut(side=frozenset({0}), crossing=((0, 1),))
        moved = cut.relabel({0: 5, 1: 2})
        self.assertEqual(moved.side, frozenset({5}))
        self.assertEqual(moved.crossing, ((2, 5),))
        self.assertEqual(cut.to_dict(), {"side": [0], "weight": 1, "crossing": [[0, 1]]})


class TestFlowConnectivity(unittest.TestCase):
    def test_incidence_network_shape(self):
        h = Hypergraph(3, 2, [(0, 1), (1, 2)])
        network = incidence_network(h)
        self.assertEqual(network.number_of_nodes(), 3 + 2 * 2)
        self.assertEqual(network[3][4]["capacity"], 1)
        self.assertNotIn("capacity", network[0][3])

    def test_local_connectivity(self):
        path = Hypergraph(3, 2, [(0, 1), (1, 2)])
        self.assertEqual(local_edge_connectivity(path, 0, 2), 1)
        self.assertEqual(local_edge_connectivity(complete_hypergraph(5, 3), 0, 4), 6)
        with self.assertRaises(InvalidEdgeError):
            local_edge_connectivity(path, 1, 1)

    def test_complete_hypergraphs(self):
        for r in range(2, 5):
            for n in range(r, 8):
                with self.subTest(n=n, r=r):
                    value, cut = edge_connectivity(complete_hypergraph(n, r))
                    self.assertEqual(value, binom(n - 1, r - 1))
                    self.assertEqual(cut.weight, value)

    def test_disconnected(self):
        h = Hypergraph(4, 2, [(0, 1), (2, 3)])
        value, cut = edge_connectivity(h)
        self.assertEqual(value, 0)
        self.assertEqual(cut.side, frozenset({0, 1}))
        self.assertEqual(cut.weight, 0)

    def test_bridge(self):
        value, cut = edge_connectivity(two_cliques_with_bridge())
        self.assertEqual(value, 1)
        self.assertEqual(cut.crossing, ((3, 4),))

    def test_guard(self):
        with self.assertRaises(GuardError):
            edge_connectivity(Hypergraph(1, 2))

    def test_maximal_edge_connected(self):
        self.assertTrue(is_maximal_edge_connected(complete_hypergraph(4, 3)))
        self.assertFalse(is_maximal_edge_connected(two_cliques_with_bridge()))

    def test_matches_bruteforce_on_seeded_corpus(self):
        rng = random.Random(20240611)
        for index in range(200):
            h = random_hypergraph(rng, max_n=10)
            with self.subTest(index=index, hypergraph=repr(h)):
                value, cut = edge_connectivity(h)
                self.assertEqual(value, edge_connectivity_bruteforce(h))
                self.assertEqual(cut_degree(h, cut.side), value)

    @PROPERTY_SETTINGS
    @given(hypergraphs())
    def test_bounded_by_min_degree(self, h):
        if h.n < 2:
            return
        value, cut = edge_connectivity(h)
        self.assertLessEqual(value, h.min_degree())
        self.assertTrue(0 < len(cut.side) < h.n)

    @PROPERTY_SETTINGS
    @given(hypergraphs(max_n=6), st.data())
    def test_adding_an_edge_never_lowers_connectivity(self, h, data):
        absent = list(h.non_edges())
        if not absent:
            return
        e = data.draw(st.sampled_from(absent))
        self.assertGreaterEqual(edge_connectivity(h.add_edge(e))[0], edge_connectivity(h)[0])


class TestPeripheral(unittest.TestCase):
    def test_vertex_cut_is_peripheral(self):
        h = complete_hypergraph(4, 3)
        self.assertEqual(is_peripheral(h, edge_cut(h, {0})), 0)
        self.assertIsNone(is_peripheral(h, edge_cut(h, {0, 1})))

    def test_complete_hypergraphs_are_super_edge_connected(self):
        for n, r in [(4, 3), (5, 3), (5, 2), (6, 4)]:
            with self.subTest(n=n, r=r):
                ok, witness = is_super_edge_connected(complete_hypergraph(n, r))
                self.assertTrue(ok)
                self.assertIsNone(witness)

    def test_cycle_has_non_peripheral_minimum_cut(self):
        cycle = Hypergraph(4, 2, [(0, 1), (1, 2), (2, 3), (0, 3)])
        ok, witness = is_super_edge_connected(cycle)
        self.assertFalse(ok)
        self.assertEqual(witness.side, frozenset({0, 1}))
        self.assertEqual(witness.weight, 2)
        self.assertIsNone(is_peripheral(cycle, witness))

    def test_two_blocks_joined_by_one_edge(self):
        blocks = list(combinations(range(4), 3)) + list(combinations(range(4, 8), 3))
        h = Hypergraph(8, 3, blocks + [(2, 3, 4)])
        self.assertEqual(edge_connectivity(h)[0], 1)
        ok, witness = is_super_edge_connected(h)
        self.assertFalse(ok)
        self.assertEqual(witness.crossing, ((2, 3, 4),))
        self.assertIn(witness.side, (frozenset(range(4)), frozenset(range(4, 8))))
        self.assertIsNone(is_peripheral(h, witness))

    def test_bruteforce_guard(self):
        with self.assertRaises(GuardError):
            edge_connectivity_bruteforce(Hypergraph(21, 2))
        with self.assertRaises(GuardError):
            is_super_edge_connected(Hypergraph(1, 2))

    def test_edgeless_bruteforce(self):
        self.assertEqual(edge_connectivity_bruteforce(Hypergraph(3, 2)), 0)


if __name__ == "__main__":
    unittest.main()

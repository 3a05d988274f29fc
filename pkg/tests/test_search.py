import io
import random
import tempfile
import unittest
from pathlib import Path

from hypothesis import given
from hypothesis import strategies as st

from edge_maximal import (GuardError, Hypergraph, SearchLimitExceeded, SearchLimits,
                          dump_maximal, enumerate_maximal, extremal_scan, is_k_edge_maximal,
                          is_M_member, order_condition_holds, maximal_verdict, strength,
                          edge_connectivity, write_scan_csv)
from edge_maximal.search import SCAN_COLUMNS, bitmask_maximal
from strategies import PROPERTY_SETTINGS, hypergraphs


class TestEnumerate(unittest.TestCase):
    def test_complete_at_threshold_is_the_only_one(self):
        summary, found = enumerate_maximal(4, 3, 3)
        self.assertEqual(summary.count, 1)
        self.assertEqual(found, [Hypergraph(4, 3, [(0, 1, 2), (0, 1, 3), (0, 2, 3), (1, 2, 3)])])
        self.assertEqual(summary.examined, 16)

    def test_small_graphs(self):
        summary, found = enumerate_maximal(4, 2, 2)
        self.assertEqual(summary.count, 6)
        self.assertEqual(summary.histogram, {5: 6})
        self.assertEqual((summary.min_size, summary.max_size), (5, 5))
        self.assertEqual(summary.examples[5], found[0].to_text())
        self.assertEqual(found[0].edges, ((0, 1), (0, 2), (0, 3), (1, 2), (1, 3)))

    def test_pruning_does_not_change_the_result(self):
        pruned, with_pruning = enumerate_maximal(4, 2, 2)
        unpruned, without_pruning = enumerate_maximal(4, 2, 2, prune=False)
        self.assertEqual(with_pruning, without_pruning)
        self.assertIn("degree < k", pruned.pruning)
        self.assertIn("relies on", pruned.pruning)
        self.assertIn("edge-connectivity exactly k", pruned.to_text())
        self.assertIn("no degree pruning", unpruned.pruning)

    def test_coinciding_bounds(self):
        summary, found = enumerate_maximal(5, 3, 3)
        self.assertGreater(summary.count, 0)
        self.assertEqual(summary.lower, 7)
        self.assertEqual(summary.upper, 7)
        self.assertEqual(set(summary.histogram), {7})
        for h in found:
            self.assertTrue(is_k_edge_maximal(h, 3).is_maximal)
            self.assertEqual(edge_connectivity(h)[0], 3)
            self.assertEqual(strength(h)[0], 3)

    def test_graph_specialisation(self):
        summary, found = enumerate_maximal(6, 2, 2)
        self.assertGreater(summary.count, 0)
        self.assertGreaterEqual(summary.min_size, 8)
        self.assertLessEqual(summary.max_size, 9)
        self.assertTrue(order_condition_holds(6, 2, 2))
        for h in found:
            self.assertEqual(h.m == 9, is_M_member(h, 2))
            self.assertEqual(edge_connectivity(h)[0], 2)
            self.assertEqual(strength(h)[0], 2)
        for h in found[:: max(1, len(found) // 20)]:
            self.assertTrue(is_k_edge_maximal(h, 2).is_maximal)

    def test_stream_order(self):
        _, found = enumerate_maximal(5, 3, 3)
        keys = [(h.m, h.edges) for h in found]
        self.assertEqual(keys, sorted(keys))

    def test_worker_count_does_not_change_the_result(self):
        single, found_single = enumerate_maximal(5, 3, 3, jobs=1)
        double, found_double = enumerate_maximal(5, 3, 3, jobs=2)
        self.assertEqual(single.to_text(), double.to_text())
        self.assertEqual(single.examples, double.examples)
        self.assertEqual(found_single, found_double)

    def test_guards(self):
        with self.assertRaises(GuardError):
            enumerate_maximal(8, 2, 2)
        with self.assertRaises(GuardError):
            enumerate_maximal(3, 3, 3)
        with self.assertRaises(GuardError):
            enumerate_maximal(4, 1, 2)
        with self.assertRaises(SearchLimitExceeded):
            enumerate_maximal(5, 3, 3, limits=SearchLimits(max_candidates=100))
        with self.assertRaises(SearchLimitExceeded):
            enumerate_maximal(6, 2, 2, limits=SearchLimits(time_limit=0.0))


class TestBitmaskCertifier(unittest.TestCase):
    @PROPERTY_SETTINGS
    @given(hypergraphs(max_n=6), st.integers(min_value=1, max_value=4))
    def test_agrees_with_flow_certifier(self, h, k):
        masks = [int(x) for x in h.edge_masks()]
        absent = [sum(1 << v for v in e) for e in h.non_edges()]
        self.assertEqual(bitmask_maximal(masks, absent, h.n, k), maximal_verdict(h, k))

    def test_seeded_corpus(self):
        rng = random.Random(3)
        for index in range(40):
            n = rng.randint(3, 7)
            h = Hypergraph(n, 2, ((a, b) for a in range(n) for b in range(a + 1, n) if rng.random() < 0.6))
            k = rng.randint(1, 3)
            with self.subTest(index=index):
                masks = [int(x) for x in h.edge_masks()]
                absent = [sum(1 << v for v in e) for e in h.non_edges()]
                self.assertEqual(bitmask_maximal(masks, absent, n, k), is_k_edge_maximal(h, k).is_maximal)


class TestScan(unittest.TestCase):
    def test_grid(self):
        df = extremal_scan([(4, 2, 2), (3, 2, 2), (4, 3, 3)])
        self.assertEqual(len(df), 3)
        self.assertEqual(list(df["count"]), [6, 1, 1])
        self.assertTrue((df["min_size"] >= df["lower_bound"]).all())
        self.assertTrue((df["max_size"] <= df["upper_bound"]).all())
        self.assertTrue(df["error"].isna().all())

    def test_failures_are_recorded(self):
        df = extremal_scan([(3, 3, 3), (3, 2, 2)])
        self.assertEqual(len(df), 2)
        self.assertIn("n >= t", df.loc[0, "error"])
        self.assertEqual(df.loc[0, "t"], 4)
        self.assertEqual(df.loc[1, "count"], 1)

    def test_empty_grid(self):
        df = extremal_scan([])
        self.assertEqual(len(df), 0)
        self.assertEqual(list(df.columns), SCAN_COLUMNS + ["error"])

    def test_csv(self):
        buffer = io.StringIO()
        write_scan_csv(extremal_scan([(4, 2, 2)]), buffer)
        self.assertEqual(
            buffer.getvalue(),
            "n,k,r,t,count,min_size,max_size,lower_bound,upper_bound\n4,2,2,3,6,5,5,5,5\n",
        )

    def test_dump(self):
        _, found = enumerate_maximal(4, 2, 2)
        with tempfile.TemporaryDirectory() as tmp:
            paths = dump_maximal(found, Path(tmp) / "out", 4, 2, 2)
            self.assertEqual([p.name for p in paths], [f"max_4_2_2_{i}.hg" for i in range(6)])
            self.assertEqual(Hypergraph.from_text(paths[0].read_text()), found[0])


if __name__ == "__main__":
    unittest.main()

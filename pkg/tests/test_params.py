import unittest

from hypothesis import given
from hypothesis import strategies as st

from edge_maximal import (BinomialOverflowError, GuardError, HypergraphError, Params, binom,
                          checked_int64, crossing_count_complete, order_condition_holds,
                          threshold_t)
from strategies import PROPERTY_SETTINGS


class TestBinom(unittest.TestCase):
    def test_values(self):
        self.assertEqual(binom(4, 3), 4)
        self.assertEqual(binom(10, 5), 252)
        self.assertEqual(binom(5, 0), 1)

    def test_zero_when_k_exceeds_n(self):
        self.assertEqual(binom(3, 5), 0)

    def test_negative_arguments_rejected(self):
        with self.assertRaises(HypergraphError):
            binom(-1, 2)

    def test_pascal_rule(self):
        for n in range(1, 41):
            for k in range(1, n + 1):
                self.assertEqual(binom(n, k), binom(n - 1, k - 1) + binom(n - 1, k), (n, k))

    def test_large_values_are_exact(self):
        self.assertEqual(binom(100, 50), 100891344545564193334812497256)

    def test_checked_int64(self):
        self.assertEqual(checked_int64(2**63 - 1), 2**63 - 1)
        with self.assertRaises(BinomialOverflowError):
            checked_int64(2**63)
        with self.assertRaises(OverflowError):
            checked_int64(binom(100, 50))


class TestThreshold(unittest.TestCase):
    def test_known_values(self):
        self.assertEqual(threshold_t(2, 2), 3)
        self.assertEqual(threshold_t(3, 3), 4)
        self.assertEqual(threshold_t(4, 3), 4)
        self.assertEqual(threshold_t(6, 3), 5)
        self.assertEqual(threshold_t(1, 2), 2)

    def test_graph_threshold_is_k_plus_one(self):
        for k in range(1, 10):
            self.assertEqual(threshold_t(k, 2), k + 1)

    def test_invalid_arguments(self):
        with self.assertRaises(GuardError):
            threshold_t(0, 3)
        with self.assertRaises(GuardError):
            threshold_t(3, 1)

    @PROPERTY_SETTINGS
    @given(st.integers(min_value=1, max_value=200), st.integers(min_value=2, max_value=6))
    def test_threshold_brackets_k(self, k, r):
        t = threshold_t(k, r)
        self.assertLessEqual(binom(t - 1, r - 1), k)
        self.assertLess(k, binom(t, r - 1))


class TestCrossingCount(unittest.TestCase):
    @PROPERTY_SETTINGS
    @given(st.integers(min_value=0, max_value=20), st.integers(min_value=2, max_value=5), st.data())
    def test_matches_complement_count(self, n, r, data):
        n1 = data.draw(st.integers(min_value=0, max_value=n))
        expected = binom(n, r) - binom(n1, r) - binom(n - n1, r)
        self.assertEqual(crossing_count_complete(n, n1, r), expected)


class TestParams(unittest.TestCase):
    def test_create_derives_t(self):
        params = Params.create(7, 3, 3)
        self.assertEqual(params.t, 4)
        self.assertTrue(params.tight)
        self.assertTrue(params.order_condition)
        self.assertEqual(str(params), "n=7, k=3, r=3, t=4")

    def test_not_tight(self):
        params = Params.create(4, 4, 3)
        self.assertEqual(params.t, 4)
        self.assertFalse(params.tight)
        self.assertFalse(params.order_condition)

    def test_vertex_guard(self):
        with self.assertRaises(GuardError):
            Params.create(65, 3, 3)
        with self.assertRaises(GuardError):
            Params.create(-1, 3, 3)

    def test_order_condition(self):
        self.assertTrue(order_condition_holds(4, 3, 3))
        self.assertFalse(order_condition_holds(3, 3, 3))
        self.assertFalse(order_condition_holds(4, 4, 3))
        self.assertTrue(order_condition_holds(5, 4, 3))


if __name__ == "__main__":
    unittest.main()

import io
import json
import tempfile
import unittest
from contextlib import redirect_stderr, redirect_stdout
from pathlib import Path

import pandas as pd

from edge_maximal import Hypergraph, build_one_max_star, complete_hypergraph, write_hypergraph
from edge_maximal.cli import main


def run(*argv: str) -> tuple[int, str, str]:
    out, err = io.StringIO(), io.StringIO()
    with redirect_stdout(out), redirect_stderr(err):
        code = main(list(argv))
    return code, out.getvalue(), err.getvalue()


class CliTestCase(unittest.TestCase):
    def setUp(self):
        self._tmp = tempfile.TemporaryDirectory()
        self.tmp = Path(self._tmp.name)

    def tearDown(self):
        self._tmp.cleanup()

    def write(self, name: str, hypergraph: Hypergraph) -> str:
        path = self.tmp / name
        write_hypergraph(hypergraph, path)
        return str(path)


class TestGen(CliTestCase):
    def test_upper_family_to_file(self):
        out = self.tmp / "m.hg"
        code, stdout, _ = run("gen", "m", "--n", "7", "--k", "3", "--r", "3", "--out", str(out))
        self.assertEqual(code, 0)
        self.assertIn("edges: 13", stdout)
        self.assertEqual(Hypergraph.from_text(out.read_text()).m, 13)

    def test_lower_family_to_stdout(self):
        code, stdout, stderr = run("gen", "nt", "--t", "4", "--r", "3", "--tree", "path2")
        self.assertEqual(code, 0)
        self.assertEqual(Hypergraph.from_text(stdout).m, 11)
        self.assertIn("k=3", stderr)

    def test_tree_file(self):
        tree = self.tmp / "tree.txt"
        tree.write_text("3\n0 1\n0 2\n")
        code, stdout, _ = run("gen", "nt", "--t", "4", "--r", "3", "--tree", str(tree))
        self.assertEqual(code, 0)
        self.assertEqual(Hypergraph.from_text(stdout).m, 18)

    def test_one_edge_partition(self):
        code, stdout, _ = run("gen", "one-max", "--variant", "partition", "--n", "5", "--r", "3")
        self.assertEqual(code, 0)
        self.assertEqual(stdout, "5 3 2\n0 1 4\n2 3 4\n")

    def test_same_seed_same_bytes(self):
        argv = ("gen", "m", "--n", "7", "--k", "3", "--r", "3", "--strategy", "random", "--seed", "5")
        self.assertEqual(run(*argv)[1], run(*argv)[1])

    def test_random_without_seed_is_a_usage_error(self):
        code, _, stderr = run("gen", "m", "--n", "7", "--k", "3", "--r", "3", "--strategy", "random")
        self.assertEqual(code, 2)
        self.assertIn("--seed", stderr)
        code, _, _ = run("gen", "nt", "--t", "4", "--r", "3", "--tree", "random3")
        self.assertEqual(code, 2)

    def test_violated_precondition(self):
        code, _, stderr = run("gen", "nt", "--t", "3", "--r", "3", "--tree", "path2")
        self.assertEqual(code, 3)
        self.assertIn("t > r violated", stderr)


class TestCheck(CliTestCase):
    def test_upper_family_member_is_maximal(self):
        path = self.tmp / "m.hg"
        run("gen", "m", "--n", "7", "--k", "3", "--r", "3", "--out", str(path))
        code, stdout, _ = run("check", str(path), "--k", "3", "--format", "json")
        self.assertEqual(code, 0)
        report = json.loads(stdout)
        self.assertEqual(report["verdict"], "maximal")
        self.assertEqual(report["kappa"], 3)
        self.assertEqual(report["strength"], 3)
        self.assertEqual(report["min_degree"], 3)
        self.assertTrue(report["super_edge_connected"])
        self.assertTrue(report["bounds"]["attains_upper"])
        self.assertTrue(report["bounds"]["upper_family_member"])
        for field in ("verdict", "k", "strength_value", "witness"):
            self.assertIn(field, report)

    def test_text_and_json_agree(self):
        path = self.write("k5.hg", complete_hypergraph(5, 3))
        code, stdout, _ = run("check", path, "--k", "3")
        self.assertEqual(code, 1)
        self.assertIn("verdict: strength_exceeds_k", stdout)
        code, stdout, _ = run("check", path, "--k", "3", "--format", "json")
        self.assertEqual(code, 1)
        self.assertEqual(json.loads(stdout)["verdict"], "strength_exceeds_k")
        self.assertEqual(json.loads(stdout)["strength_value"], 6)

    def test_edgeless(self):
        path = self.write("empty.hg", Hypergraph(4, 3))
        code, stdout, _ = run("check", path, "--k", "2")
        self.assertEqual(code, 1)
        self.assertIn("addable_non_edge", stdout)

    def test_audit(self):
        path = self.write("k4.hg", complete_hypergraph(4, 3))
        code, stdout, _ = run("check", path, "--k", "3", "--audit")
        self.assertEqual(code, 0)
        self.assertIn("audit (k=3): PASS", stdout)

    def test_audit_is_skipped_below_k_two(self):
        path = self.write("star.hg", build_one_max_star(5, 3))
        code, stdout, _ = run("check", path, "--k", "1", "--audit")
        self.assertEqual(code, 0)
        self.assertIn("verdict: maximal", stdout)
        self.assertIn("audit: skipped (k < 2)", stdout)
        code, stdout, _ = run("check", path, "--k", "1", "--audit", "--format", "json")
        self.assertEqual(code, 0)
        report = json.loads(stdout)
        self.assertEqual(report["verdict"], "maximal")
        self.assertIsNone(report["audit"])
        self.assertEqual(report["audit_skipped"], "k < 2")

    def test_parse_error(self):
        path = self.tmp / "bad.hg"
        path.write_text("3 2 1\n0 0\n")
        code, _, stderr = run("check", str(path), "--k", "2")
        self.assertEqual(code, 2)
        self.assertIn("line 2", stderr)

    def test_missing_file(self):
        code, _, _ = run("check", str(self.tmp / "nope.hg"), "--k", "2")
        self.assertEqual(code, 2)


class TestBoundsSearchOracle(CliTestCase):
    def test_bounds(self):
        code, stdout, _ = run("bounds", "--n", "8", "--k", "3", "--r", "3")
        self.assertEqual(code, 0)
        self.assertEqual(stdout, "t: 4\nlower: 11\nupper: 16\n")

    def test_graph_bounds(self):
        code, stdout, _ = run("bounds", "--n", "6", "--k", "2", "--r", "2")
        self.assertEqual(code, 0)
        self.assertIn("graph upper: 9", stdout)
        self.assertIn("graph lower: 9", stdout)

    def test_bounds_guard(self):
        code, _, stderr = run("bounds", "--n", "2", "--k", "3", "--r", "3")
        self.assertEqual(code, 3)
        self.assertIn("n >= t", stderr)

    def test_search_csv(self):
        code, stdout, _ = run("search", "--n", "5", "--k", "3", "--r", "3")
        self.assertEqual(code, 0)
        row = pd.read_csv(io.StringIO(stdout)).iloc[0]
        self.assertEqual((row["min_size"], row["max_size"]), (7, 7))

    def test_search_grid_and_dump(self):
        out = self.tmp / "scan.csv"
        code, _, _ = run("search", "--grid", "4,2,2", "3,2,2", "--out", str(out))
        self.assertEqual(code, 0)
        self.assertEqual(len(pd.read_csv(out)), 2)

        dump = self.tmp / "dump"
        code, _, _ = run("search", "--n", "4", "--k", "2", "--r", "2", "--dump", str(dump))
        self.assertEqual(code, 0)
        self.assertEqual(len(list(dump.glob("max_4_2_2_*.hg"))), 6)

    def test_search_needs_parameters(self):
        self.assertEqual(run("search", "--n", "4")[0], 2)
        self.assertEqual(run("search", "--n", "8", "--k", "2", "--r", "2")[0], 3)

    def test_oracles(self):
        path = self.write("k4.hg", complete_hypergraph(4, 3))
        self.assertEqual(run("oracle", "strength", path)[1], "3\n")
        self.assertEqual(run("oracle", "kappa", path)[1], "3\n")

    def test_usage_errors(self):
        self.assertEqual(run()[0], 2)
        self.assertEqual(run("frobnicate")[0], 2)
        self.assertEqual(run("bounds", "--n", "x", "--k", "3", "--r", "3")[0], 2)


if __name__ == "__main__":
    unittest.main()

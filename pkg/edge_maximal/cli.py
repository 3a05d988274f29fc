"""
Command-line entry point: ``edge-maximal {gen,check,bounds,search,oracle}``.

Exit codes: 0 success or maximal, 1 negative verdict, 2 usage or parse error,
3 guard, overflow or construction error.
"""

import argparse
import json
import sys
from pathlib import Path
from typing import Sequence

import pandas as pd
from tqdm import tqdm

from .connectivity import BRUTEFORCE_MAX_VERTICES, edge_connectivity, edge_connectivity_bruteforce, is_super_edge_connected
from .constructions import (
    BuildStrategy,
    LEXICOGRAPHIC,
    ONE_MAX_VARIANTS,
    create_family,
    parse_tree,
    tree_from_shorthand,
)
from .errors import ConstructionError, GuardError, HypergraphError, ParseError
from .extremal import (
    audit_maximal,
    graph_lower_bound,
    graph_upper_bound,
    is_k_edge_maximal,
    is_M_member,
    lower_bound,
    one_edge_bounds,
    upper_bound,
)
from .hypergraph import Hypergraph, read_hypergraph
from .params import threshold_t
from .search import SearchLimits, dump_maximal, enumerate_maximal, extremal_scan, write_scan_csv
from .strength import strength_bruteforce

EXIT_OK = 0
EXIT_NEGATIVE = 1
EXIT_USAGE = 2
EXIT_GUARD = 3


class CliUsageError(Exception):
    """Flag combination rejected after parsing."""


# ---------------------------------------------------------------------
# Parser
# ---------------------------------------------------------------------


def _triple(text: str) -> tuple[int, int, int]:
    try:
        n, k, r = (int(part) for part in text.split(","))
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected n,k,r, got {text!r}") from None
    return n, k, r


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="edge-maximal",
        description="Edge-connectivity, strength and k-edge-maximality of r-uniform hypergraphs.",
    )
    parser.add_argument("--verbose", action="store_true", help="Show progress bars")
    commands = parser.add_subparsers(dest="command", required=True)

    gen = commands.add_parser("gen", help="Generate a member of an extremal family")
    families = gen.add_subparsers(dest="family", required=True)

    def add_output(sub):
        sub.add_argument("--out", type=Path, help="Output file (default: stdout)")

    def add_strategy(sub):
        sub.add_argument("--strategy", choices=["lexicographic", "random"], default="lexicographic")
        sub.add_argument("--seed", type=int, help="Seed for every randomised choice")

    gen_m = families.add_parser("m", help="Upper-bound family")
    gen_m.add_argument("--n", type=int, required=True)
    gen_m.add_argument("--k", type=int, required=True)
    gen_m.add_argument("--r", type=int, required=True)
    add_strategy(gen_m)
    add_output(gen_m)

    gen_nt = families.add_parser("nt", help="Lower-bound family along a tree")
    gen_nt.add_argument("--t", type=int, required=True)
    gen_nt.add_argument("--r", type=int, required=True)
    gen_nt.add_argument("--tree", required=True, help="path<s>, star<s>, random<s> or a tree file")
    add_strategy(gen_nt)
    add_output(gen_nt)

    gen_one = families.add_parser("one-max", help="1-edge-maximal families")
    gen_one.add_argument("--variant", choices=list(ONE_MAX_VARIANTS), required=True)
    gen_one.add_argument("--n", type=int, required=True)
    gen_one.add_argument("--r", type=int, required=True)
    add_output(gen_one)

    check = commands.add_parser("check", help="Certify k-edge-maximality of a hypergraph file")
    check.add_argument("file", type=Path)
    check.add_argument("--k", type=int, required=True)
    check.add_argument("--audit", action="store_true", help="Add the structural clause report")
    check.add_argument("--format", choices=["text", "json"], default="text")
    check.add_argument("--jobs", type=int, default=1)

    bounds = commands.add_parser("bounds", help="Print t and both size bounds")
    bounds.add_argument("--n", type=int, required=True)
    bounds.add_argument("--k", type=int, required=True)
    bounds.add_argument("--r", type=int, required=True)

    search = commands.add_parser("search", help="Exhaustive search for maximal hypergraphs")
    search.add_argument("--n", type=int)
    search.add_argument("--k", type=int)
    search.add_argument("--r", type=int)
    search.add_argument("--grid", type=_triple, nargs="+", metavar="N,K,R")
    search.add_argument("--out", type=Path, help="CSV file (default: stdout)")
    search.add_argument("--dump", type=Path, help="Directory for the maximal hypergraphs found")
    search.add_argument("--jobs", type=int, default=1)
    search.add_argument("--no-prune", action="store_true", help="Disable minimum-degree pruning")
    search.add_argument("--max-candidates", type=int, default=SearchLimits().max_candidates)
    search.add_argument("--time-limit", type=float, help="Seconds per grid point")
    search.add_argument("--format", choices=["csv", "text"], default="csv")

    oracle = commands.add_parser("oracle", help="Brute-force evaluation of a definition")
    oracle.add_argument("mode", choices=["kappa", "strength"])
    oracle.add_argument("file", type=Path)
    return parser


# ---------------------------------------------------------------------
# Commands
# ---------------------------------------------------------------------


def _strategy(args) -> BuildStrategy:
    if args.strategy == "random":
        if args.seed is None:
            raise CliUsageError("--strategy random requires --seed")
        return BuildStrategy.seeded(args.seed)
    return LEXICOGRAPHIC


def _emit_hypergraph(hypergraph: Hypergraph, out: Path | None, summary: str) -> None:
    if out is None:
        sys.stdout.write(hypergraph.to_text())
        print(summary, file=sys.stderr)
    else:
        out.write_text(hypergraph.to_text())
        print(summary)


def cmd_gen(args) -> int:
    if args.family == "m":
        h = create_family("m", args.n, args.k, args.r, _strategy(args))
        summary = f"edges: {h.m} upper_bound: {upper_bound(args.n, args.k, args.r)}"
    elif args.family == "nt":
        if Path(args.tree).is_file():
            tree = parse_tree(Path(args.tree).read_text())
        elif args.tree.startswith("random") and args.seed is None:
            raise CliUsageError("--tree random<s> requires --seed")
        else:
            tree = tree_from_shorthand(args.tree, args.seed)
        h, k = create_family("nt", args.t, args.r, tree, _strategy(args))
        summary = f"edges: {h.m} k={k} lower_bound: {lower_bound(h.n, k, args.r)}"
    else:
        h = create_family("one-max", args.variant, args.n, args.r)
        low, high = one_edge_bounds(args.n, args.r)
        summary = f"edges: {h.m} one_edge_bounds: [{low}, {high}]"
    _emit_hypergraph(h, args.out, summary)
    return EXIT_OK


def _bound_comparison(h: Hypergraph, k: int) -> dict | None:
    if k < 2 or h.n < threshold_t(k, h.r):
        return None
    low, high = lower_bound(h.n, k, h.r), upper_bound(h.n, k, h.r)
    attains_upper = h.m == high
    return {
        "lower_bound": low,
        "upper_bound": high,
        "within": low <= h.m <= high,
        "attains_upper": attains_upper,
        "attains_lower": h.m == low,
        "upper_family_member": is_M_member(h, k) if attains_upper else None,
    }


def cmd_check(args) -> int:
    h = read_hypergraph(args.file)
    report = is_k_edge_maximal(h, args.k, jobs=args.jobs, verbose=args.verbose)
    kappa = edge_connectivity(h)[0] if h.n >= 2 else None
    if 2 <= h.n <= BRUTEFORCE_MAX_VERTICES:
        super_edge = is_super_edge_connected(h)[0]
    else:
        super_edge = None
    bounds = _bound_comparison(h, args.k)
    audit, audit_skipped = None, None
    if args.audit:
        if args.k < 2:
            audit_skipped = "k < 2"
        elif not report.is_maximal:
            audit_skipped = "hypergraph is not k-edge-maximal"
        else:
            audit = audit_maximal(h, args.k)

    if args.format == "json":
        payload = report.to_dict() | {
            "n": h.n,
            "r": h.r,
            "m": h.m,
            "kappa": kappa,
            "strength": report.strength_value,
            "min_degree": h.min_degree(),
            "super_edge_connected": super_edge,
            "bounds": bounds,
            "audit": None if audit is None else audit.to_dict(),
            "audit_skipped": audit_skipped,
        }
        print(json.dumps(payload, indent=2))
    else:
        print(h)
        print(f"kappa': {kappa}")
        print(f"strength: {report.strength_value}")
        print(f"min degree: {h.min_degree()}")
        print(f"super-edge-connected: {'skipped' if super_edge is None else super_edge}")
        print(report.to_text())
        if bounds is not None:
            print(
                f"bounds: {bounds['lower_bound']} <= |E|={h.m} <= {bounds['upper_bound']}"
                f" (within={bounds['within']}, attains_upper={bounds['attains_upper']})"
            )
        if audit is not None:
            print(audit.to_text())
        elif audit_skipped is not None:
            print(f"audit: skipped ({audit_skipped})")

    if not report.is_maximal or (audit is not None and not audit.passed):
        return EXIT_NEGATIVE
    return EXIT_OK


def cmd_bounds(args) -> int:
    n, k, r = args.n, args.k, args.r
    low, high = lower_bound(n, k, r), upper_bound(n, k, r)
    print(f"t: {threshold_t(k, r)}")
    print(f"lower: {low}")
    print(f"upper: {high}")
    if r == 2 and n > k + 1:
        print(f"graph lower: {graph_lower_bound(n, k)}")
        print(f"graph upper: {graph_upper_bound(n, k)}")
    return EXIT_OK


def cmd_search(args) -> int:
    limits = SearchLimits(max_candidates=args.max_candidates, time_limit=args.time_limit)
    prune = not args.no_prune

    if args.grid is not None:
        if args.dump is not None:
            raise CliUsageError("--dump needs a single --n/--k/--r point")
        df = extremal_scan(args.grid, limits=limits, jobs=args.jobs, prune=prune, verbose=args.verbose)
        if args.format == "text":
            print(df.to_string(index=False))
        else:
            write_scan_csv(df, args.out if args.out is not None else sys.stdout)
        return EXIT_OK

    if None in (args.n, args.k, args.r):
        raise CliUsageError("search needs --n, --k and --r, or --grid")
    summary, found = enumerate_maximal(
        args.n, args.k, args.r, limits=limits, jobs=args.jobs, prune=prune, verbose=args.verbose
    )
    if args.dump is not None:
        paths = dump_maximal(found, args.dump, args.n, args.k, args.r)
        tqdm.write(f"[search] wrote {len(paths)} hypergraph(s) to {args.dump}", file=sys.stderr)
    if args.format == "text":
        print(summary.to_text())
    else:
        df = pd.DataFrame([summary.to_row()])
        write_scan_csv(df, args.out if args.out is not None else sys.stdout)
    return EXIT_OK


def cmd_oracle(args) -> int:
    h = read_hypergraph(args.file)
    if args.mode == "kappa":
        print(edge_connectivity_bruteforce(h))
    else:
        print(strength_bruteforce(h))
    return EXIT_OK


COMMANDS = {
    "gen": cmd_gen,
    "check": cmd_check,
    "bounds": cmd_bounds,
    "search": cmd_search,
    "oracle": cmd_oracle,
}


def main(argv: Sequence[str] | None = None) -> int:
    """
    Runs one command and returns its exit code instead of exiting.

    :param argv: Arguments without the program name (default: ``sys.argv[1:]``).
    :type argv: Sequence[str] | None
    :rtype: int
    """
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code else EXIT_OK

    try:
        return COMMANDS[args.command](args)
    except (GuardError, ConstructionError, OverflowError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_GUARD
    except (ParseError, CliUsageError, HypergraphError, OSError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE

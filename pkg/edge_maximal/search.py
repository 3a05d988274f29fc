"""
Exhaustive enumeration of labelled k-edge-maximal r-uniform hypergraphs.

Every subset of the ``C(n, r)`` possible edges is a candidate. The candidate
space is split on the inclusion bits of the first few edges; each partition is
searched independently (optionally in parallel with joblib) and the results are
merged in the fixed stream order: increasing edge count, then lexicographic
order of the edge sets.
"""

import time
from dataclasses import dataclass, field
from functools import lru_cache
from itertools import combinations
from pathlib import Path
from typing import Iterable, Sequence

import numpy as np
import pandas as pd
from joblib import Parallel, delayed
from tqdm import tqdm

from .errors import GuardError, HypergraphError, SearchLimitExceeded
from .extremal import lower_bound, maximal_verdict, upper_bound
from .hypergraph import Hypergraph
from .params import Params, binom, order_condition_holds, threshold_t

MAX_CANDIDATE_EDGES = 24
PARTITION_PREFIX_BITS = 4
BITMASK_MAX_VERTICES = 16  # above this the flow-based certifier is used

SCAN_COLUMNS = ["n", "k", "r", "t", "count", "min_size", "max_size", "lower_bound", "upper_bound"]

PRUNE_MIN_DEGREE = (
    "skip candidates with a vertex of degree < k; "
    "relies on: a k-edge-maximal r-uniform hypergraph with n >= t (n >= t + 1 when C(t-1, r-1) < k) "
    "has edge-connectivity exactly k, and edge-connectivity never exceeds the minimum degree"
)
PRUNE_NONE = "no degree pruning (order hypothesis fails or pruning disabled); isolated vertices and disconnected candidates skipped"


@dataclass(frozen=True)
class SearchLimits:
    """
    Resource limits of one enumeration.

    :param max_candidates: Largest admissible number of candidate edge sets.
    :param time_limit: Wall-clock budget in seconds, or None for no limit.
    """

    max_candidates: int = 1 << MAX_CANDIDATE_EDGES
    time_limit: float | None = None


@dataclass(frozen=True)
class SearchSummary:
    params: Params
    examined: int
    count: int
    histogram: dict[int, int]
    min_size: int | None
    max_size: int | None
    lower: int
    upper: int
    examples: dict[int, str] = field(default_factory=dict)
    pruning: str = PRUNE_NONE

    def __post_init__(self):
        if self.count:
            assert self.lower <= self.min_size <= self.max_size <= self.upper, \
                f"Observed sizes [{self.min_size}, {self.max_size}] leave [{self.lower}, {self.upper}]."

    def to_row(self) -> dict:
        p = self.params
        return {
            "n": p.n,
            "k": p.k,
            "r": p.r,
            "t": p.t,
            "count": self.count,
            "min_size": self.min_size,
            "max_size": self.max_size,
            "lower_bound": self.lower,
            "upper_bound": self.upper,
        }

    def to_text(self) -> str:
        lines = [
            f"search {self.params}",
            f"candidates examined: {self.examined}",
            f"maximal found: {self.count}",
            f"bounds: lower={self.lower} upper={self.upper}",
            f"observed: min={self.min_size} max={self.max_size}",
            f"pruning: {self.pruning}",
        ]
        lines += [f"  size {size}: {freq}" for size, freq in sorted(self.histogram.items())]
        return "\n".join(lines)

    def __str__(self) -> str:
        return f"SearchSummary({self.params}, count={self.count})"


# ---------------------------------------------------------------------
# Bitmask certifier
# ---------------------------------------------------------------------


@lru_cache(maxsize=4096)
def _sides(vertex_mask: int) -> np.ndarray:
    """Proper submasks of ``vertex_mask`` containing its lowest vertex."""
    bits = [v for v in range(vertex_mask.bit_length()) if vertex_mask >> v & 1]
    low, rest = bits[0], bits[1:]
    sides = np.full(1 << len(rest), 1 << low, dtype=np.int64)
    for j, v in enumerate(rest):
        sides |= ((np.arange(sides.size) >> j) & 1) << v
    return sides[sides != vertex_mask]


def _exceeds(masks: np.ndarray, vertex_mask: int, k: int) -> bool:
    """
    True when some vertex subset of ``vertex_mask`` induces edge-connectivity above ``k``.

    After a minimum cut ``X`` of the induced hypergraph, any such subset lies
    inside ``X`` or inside its complement.
    """
    if vertex_mask & (vertex_mask - 1) == 0:
        return False
    inside = masks[(masks & ~vertex_mask) == 0]
    if inside.size == 0:
        return False
    sides = _sides(vertex_mask)
    crossing = ((sides[:, None] & inside[None, :]) != 0) & (((vertex_mask ^ sides)[:, None] & inside[None, :]) != 0)
    weights = crossing.sum(axis=1)
    best = int(weights.argmin())
    if weights[best] > k:
        return True
    side = int(sides[best])
    return _exceeds(inside, side, k) or _exceeds(inside, vertex_mask ^ side, k)


def bitmask_maximal(masks: Sequence[int], non_edge_masks: Iterable[int], n: int, k: int) -> bool:
    """
    Maximality test on edge bitmasks: strength at most ``k``, and every non-edge pushes it above ``k``.
    """
    full = (1 << n) - 1
    edges = np.array(list(masks), dtype=np.int64)
    if _exceeds(edges, full, k):
        return False
    return all(_exceeds(np.append(edges, e), full, k) for e in non_edge_masks)


# ---------------------------------------------------------------------
# Partition worker
# ---------------------------------------------------------------------


def _connected(masks: Sequence[int], full: int) -> bool:
    reach = full & -full
    grown = True
    while grown:
        grown = False
        for e in masks:
            if e & reach and e | reach != reach:
                reach |= e
                grown = True
    return reach == full


def _search_partition(
    n: int, r: int, k: int, prefix: int, prefix_bits: int, prune: bool, deadline: float | None
) -> tuple[int, list[tuple[int, ...]]]:
    """
    Searches the candidates whose first ``prefix_bits`` edge-inclusion bits equal ``prefix``.

    :return: Number of candidates examined and the index tuples of the maximal ones.
    """
    candidates = list(combinations(range(n), r))
    masks = [sum(1 << v for v in e) for e in candidates]
    incidence = np.zeros((len(candidates), n), dtype=np.int64)
    for i, e in enumerate(candidates):
        incidence[i, list(e)] = 1
    full = (1 << n) - 1
    min_degree = k if prune else 1

    head = tuple(i for i in range(prefix_bits) if prefix >> i & 1)
    tail = range(prefix_bits, len(candidates))
    use_bitmask = n <= BITMASK_MAX_VERTICES

    examined, found = 0, []
    for size in range(len(tail) + 1):
        for suffix in combinations(tail, size):
            examined += 1
            if deadline is not None and examined % 1024 == 0 and time.time() > deadline:
                raise SearchLimitExceeded("time limit exceeded; partial results discarded")
            chosen = head + suffix
            if not chosen or incidence[list(chosen)].sum(axis=0).min() < min_degree:
                continue
            chosen_masks = [masks[i] for i in chosen]
            if not _connected(chosen_masks, full):
                continue
            if use_bitmask:
                picked = set(chosen)
                absent = (masks[i] for i in range(len(candidates)) if i not in picked)
                ok = bitmask_maximal(chosen_masks, absent, n, k)
            else:
                ok = maximal_verdict(Hypergraph(n, r, (candidates[i] for i in chosen)), k)
            if ok:
                found.append(chosen)
    return examined, found


# ---------------------------------------------------------------------
# Enumeration
# ---------------------------------------------------------------------


def _check_search_arguments(n: int, k: int, r: int, limits: SearchLimits) -> Params:
    if k < 2:
        raise GuardError(f"k >= 2 violated: k={k}")
    if r < 2:
        raise GuardError(f"r >= 2 violated: r={r}")
    params = Params.create(n, k, r)
    if n < params.t:
        raise GuardError(f"n >= t violated: n={n} < t={params.t}")
    edges = binom(n, r)
    if edges > MAX_CANDIDATE_EDGES:
        raise GuardError(f"candidate space C(n, r) = {edges} exceeds {MAX_CANDIDATE_EDGES} edges")
    if 1 << edges > limits.max_candidates:
        raise SearchLimitExceeded(f"2^{edges} candidates exceed max_candidates={limits.max_candidates}")
    return params


def enumerate_maximal(
    n: int,
    k: int,
    r: int,
    limits: SearchLimits = SearchLimits(),
    jobs: int = 1,
    prune: bool = True,
    verbose: bool = False,
) -> tuple[SearchSummary, list[Hypergraph]]:
    """
    Finds every labelled k-edge-maximal r-uniform hypergraph on ``n`` vertices.

    The partitioning is fixed by the candidate count alone, so the result does
    not depend on ``jobs``.

    :param n: Number of vertices.
    :type n: int
    :param k: Connectivity parameter (>= 2).
    :type k: int
    :param r: Uniformity (>= 2).
    :type r: int
    :param limits: Candidate and time limits.
    :type limits: SearchLimits
    :param jobs: Number of joblib workers.
    :type jobs: int
    :param prune: Skip candidates with a vertex of degree below ``k`` when the order hypothesis holds.
    :type prune: bool
    :param verbose: Show a tqdm progress bar over partitions.
    :type verbose: bool
    :return: The summary and the maximal hypergraphs in stream order.
    :rtype: tuple[SearchSummary, list[Hypergraph]]
    :raises GuardError: On a parameter or candidate-space guard violation.
    :raises SearchLimitExceeded: When a limit is hit; no partial result is returned.
    """
    params = _check_search_arguments(n, k, r, limits)
    candidates = list(combinations(range(n), r))
    prefix_bits = min(PARTITION_PREFIX_BITS, len(candidates))
    use_pruning = prune and order_condition_holds(n, k, r)
    deadline = None if limits.time_limit is None else time.time() + limits.time_limit

    partitions = tqdm(range(1 << prefix_bits), desc=f"search n={n} k={k} r={r}", leave=False, disable=not verbose)
    results = Parallel(n_jobs=jobs)(
        delayed(_search_partition)(n, r, k, prefix, prefix_bits, use_pruning, deadline) for prefix in partitions
    )

    examined = sum(count for count, _ in results)
    assert examined == 1 << len(candidates), "Partitions do not cover the candidate space."
    chosen = sorted((idx for _, found in results for idx in found), key=lambda idx: (len(idx), idx))
    hypergraphs = [Hypergraph(n, r, (candidates[i] for i in idx)) for idx in chosen]

    histogram: dict[int, int] = {}
    examples: dict[int, str] = {}
    for h in hypergraphs:
        histogram[h.m] = histogram.get(h.m, 0) + 1
        examples.setdefault(h.m, h.to_text())

    summary = SearchSummary(
        params=params,
        examined=examined,
        count=len(hypergraphs),
        histogram=histogram,
        min_size=min(histogram) if histogram else None,
        max_size=max(histogram) if histogram else None,
        lower=lower_bound(n, k, r),
        upper=upper_bound(n, k, r),
        examples=examples,
        pruning=PRUNE_MIN_DEGREE if use_pruning else PRUNE_NONE,
    )
    return summary, hypergraphs


def extremal_scan(
    grid: Iterable[tuple[int, int, int]],
    limits: SearchLimits = SearchLimits(),
    jobs: int = 1,
    prune: bool = True,
    verbose: bool = False,
) -> pd.DataFrame:
    """
    Runs :func:`enumerate_maximal` on every grid point and tabulates the summaries.

    A failing point is reported with tqdm, kept as a row with empty counts and
    its message in the ``error`` column, and the scan moves on.

    :rtype: pandas.DataFrame
    """
    rows = []
    for n, k, r in tqdm(list(grid), desc="extremal scan", disable=not verbose):
        try:
            summary, _ = enumerate_maximal(n, k, r, limits=limits, jobs=jobs, prune=prune)
            rows.append(summary.to_row() | {"error": None})
        except HypergraphError as exc:
            tqdm.write(f"[scan] ({n}, {k}, {r}) failed: {exc}")
            try:
                t = threshold_t(k, r)
            except HypergraphError:
                t = None
            rows.append({"n": n, "k": k, "r": r, "t": t, "error": str(exc)})

    df = pd.DataFrame(rows, columns=SCAN_COLUMNS + ["error"])
    return df.astype({col: "Int64" for col in SCAN_COLUMNS})


def write_scan_csv(df: pd.DataFrame, path_or_buf) -> None:
    """Writes the scan table with the header ``n,k,r,t,count,min_size,max_size,lower_bound,upper_bound``."""
    df.drop(columns="error", errors="ignore").to_csv(path_or_buf, index=False, lineterminator="\n")


def dump_maximal(hypergraphs: Sequence[Hypergraph], directory: str | Path, n: int, k: int, r: int) -> list[Path]:
    """Writes ``max_<n>_<k>_<r>_<index>.hg`` files (0-based index, stream order)."""
    directory = Path(directory)
    directory.mkdir(parents=True, exist_ok=True)
    paths = []
    for index, h in enumerate(hypergraphs):
        path = directory / f"max_{n}_{k}_{r}_{index}.hg"
        path.write_text(h.to_text())
        paths.append(path)
    return paths

"""
Size bounds for k-edge-maximal r-uniform hypergraphs, the maximality certifier
and structural audits of certified hypergraphs.

``H`` is k-edge-maximal when its strength is at most ``k`` and adding any
missing ``r``-subset creates a subhypergraph of edge-connectivity ``k + 1``.
"""

from dataclasses import dataclass, field
from enum import Enum
from functools import lru_cache
from itertools import combinations, islice
from math import ceil

from joblib import Parallel, delayed
from tqdm import tqdm

from .connectivity import edge_connectivity
from .errors import GuardError
from .hypergraph import Edge, Hypergraph
from .params import binom, order_condition_holds, threshold_t
from .strength import strength, strength_witness

# ---------------------------------------------------------------------
# Bound formulas
# ---------------------------------------------------------------------


def _check_bound_arguments(n: int, k: int, r: int) -> int:
    if k < 2 or r < 2:
        raise GuardError(f"bounds need k >= 2 and r >= 2, got k={k}, r={r}")
    t = threshold_t(k, r)
    if n < t:
        raise GuardError(f"n >= t violated: n={n} < t={t}")
    return t


def upper_bound(n: int, k: int, r: int) -> int:
    """
    Maximum size ``C(t, r) + (n - t) k`` of a k-edge-maximal r-uniform hypergraph on ``n >= t`` vertices.
    """
    t = _check_bound_arguments(n, k, r)
    return binom(t, r) + (n - t) * k


def lower_bound(n: int, k: int, r: int) -> int:
    """
    Minimum size ``(n - 1) k - ((t - 1) k - C(t, r)) floor(n / t)`` on ``n >= t`` vertices.
    """
    t = _check_bound_arguments(n, k, r)
    return (n - 1) * k - ((t - 1) * k - binom(t, r)) * (n // t)


def graph_upper_bound(n: int, k: int) -> int:
    """Classical bound ``(n - k) k + C(k, 2)`` for k-edge-maximal graphs with ``n > k + 1``."""
    return (n - k) * k + binom(k, 2)


def graph_lower_bound(n: int, k: int) -> int:
    """Classical bound ``(n - 1) k - floor(n / (k + 2)) C(k, 2)`` for graphs with ``n > k + 1``."""
    return (n - 1) * k - (n // (k + 2)) * binom(k, 2)


def one_edge_bounds(n: int, r: int) -> tuple[int, int]:
    """Size window ``(ceil((n-1)/(r-1)), n - r + 1)`` of 1-edge-maximal r-uniform hypergraphs."""
    if n < r:
        raise GuardError(f"n >= r violated: n={n} < r={r}")
    return ceil((n - 1) / (r - 1)), n - r + 1


# ---------------------------------------------------------------------
# Maximality certificate
# ---------------------------------------------------------------------


class Verdict(str, Enum):
    MAXIMAL = "maximal"
    STRENGTH_EXCEEDS_K = "strength_exceeds_k"
    ADDABLE_NON_EDGE = "addable_non_edge"


@dataclass(frozen=True)
class MaximalityReport:
    """
    Outcome of :func:`is_k_edge_maximal`.

    ``witness`` is a vertex subset ``S`` with ``kappa'(H[S]) > k`` for
    ``strength_exceeds_k``, or a non-edge ``e`` with strength of ``H + e`` at most
    ``k`` for ``addable_non_edge``.
    """

    verdict: Verdict
    k: int
    strength_value: int
    witness: tuple[int, ...] | None = None

    @property
    def is_maximal(self) -> bool:
        return self.verdict is Verdict.MAXIMAL

    def to_dict(self) -> dict:
        return {
            "verdict": self.verdict.value,
            "k": self.k,
            "strength_value": self.strength_value,
            "witness": None if self.witness is None else list(self.witness),
        }

    def to_text(self) -> str:
        text = f"verdict: {self.verdict.value} (k={self.k}, strength={self.strength_value})"
        if self.verdict is Verdict.STRENGTH_EXCEEDS_K:
            text += f"\nwitness subset: {list(self.witness)}"
        elif self.verdict is Verdict.ADDABLE_NON_EDGE:
            text += f"\nwitness non-edge: {list(self.witness)}"
        return text

    def __str__(self) -> str:
        return self.to_text()


def _first_addable(hypergraph: Hypergraph, k: int, candidates: list[Edge]) -> Edge | None:
    for e in candidates:
        if strength_witness(hypergraph.add_edge(e), k) is None:
            return e
    return None


def find_addable_non_edge(
    hypergraph: Hypergraph, k: int, jobs: int = 1, verbose: bool = False
) -> Edge | None:
    """
    Lexicographically first non-edge ``e`` such that ``H + e`` still has strength at most ``k``.

    With ``jobs > 1`` the non-edges are split into contiguous chunks checked in
    parallel; the first hit in chunk order is returned, so the answer does not
    depend on the worker count.
    """
    non_edges = list(hypergraph.non_edges())
    if jobs <= 1:
        for e in tqdm(non_edges, desc="Non-edges", leave=False, disable=not verbose):
            if strength_witness(hypergraph.add_edge(e), k) is None:
                return e
        return None

    size = max(1, ceil(len(non_edges) / (4 * jobs)))
    iterator = iter(non_edges)
    chunks = list(iter(lambda: list(islice(iterator, size)), []))
    results = Parallel(n_jobs=jobs)(
        delayed(_first_addable)(hypergraph, k, chunk) for chunk in chunks
    )
    return next((e for e in results if e is not None), None)


def is_k_edge_maximal(
    hypergraph: Hypergraph, k: int, jobs: int = 1, verbose: bool = False
) -> MaximalityReport:
    """
    Certifies or refutes k-edge-maximality.

    The strength condition is checked first; only then are non-edges scanned in
    lexicographic order, stopping at the first one that can be added.

    :param hypergraph: The hypergraph to check (at least one vertex).
    :type hypergraph: Hypergraph
    :param k: Connectivity parameter (>= 1).
    :type k: int
    :param jobs: Worker count for the non-edge scan.
    :type jobs: int
    :param verbose: Show a progress bar over the non-edges.
    :type verbose: bool
    :rtype: MaximalityReport
    """
    if k < 1:
        raise GuardError(f"k >= 1 violated: k={k}")

    value, tree = strength(hypergraph)
    if value > k:
        node = next(node for node in tree.nodes() if node.kappa > k)
        return MaximalityReport(Verdict.STRENGTH_EXCEEDS_K, k, value, node.vertices)

    addable = find_addable_non_edge(hypergraph, k, jobs=jobs, verbose=verbose)
    if addable is not None:
        return MaximalityReport(Verdict.ADDABLE_NON_EDGE, k, value, addable)
    return MaximalityReport(Verdict.MAXIMAL, k, value)


def maximal_verdict(hypergraph: Hypergraph, k: int) -> bool:
    """
    Boolean form of :func:`is_k_edge_maximal` that skips building the full strength tree.
    """
    if strength_witness(hypergraph, k) is not None:
        return False
    return find_addable_non_edge(hypergraph, k) is None


def is_M_member(hypergraph: Hypergraph, k: int) -> bool:
    """
    Structural membership test for the upper-bound family.

    ``H`` is a member when ``n = t`` and ``H`` is complete, or when some vertex of
    degree exactly ``k`` can be deleted leaving a member on ``n - 1`` vertices.
    Vertex sets already refuted are memoised.
    """
    t = threshold_t(k, hypergraph.r)
    if hypergraph.n < t:
        return False

    @lru_cache(maxsize=None)
    def reducible(kept: frozenset[int]) -> bool:
        sub, mapping = hypergraph.induced(kept)
        if sub.n == t:
            return sub.is_complete()
        degrees = sub.degrees()
        return any(reducible(kept - {v}) for v, new in sorted(mapping.items()) if degrees[new] == k)

    return reducible(frozenset(hypergraph.vertices))


# ---------------------------------------------------------------------
# Audits
# ---------------------------------------------------------------------


class ClauseStatus(str, Enum):
    PASS = "pass"
    FAIL = "fail"
    SKIPPED = "skipped"


@dataclass(frozen=True)
class ClauseResult:
    name: str
    status: ClauseStatus
    detail: str = ""
    witness: tuple[int, ...] | None = None

    def to_dict(self) -> dict:
        return {
            "clause": self.name,
            "status": self.status.value,
            "detail": self.detail,
            "witness": None if self.witness is None else list(self.witness),
        }


@dataclass(frozen=True)
class AuditReport:
    """Per-clause results of :func:`audit_maximal`."""

    k: int
    clauses: tuple[ClauseResult, ...] = field(default_factory=tuple)

    @property
    def passed(self) -> bool:
        return all(c.status is not ClauseStatus.FAIL for c in self.clauses)

    def clause(self, name: str) -> ClauseResult:
        return next(c for c in self.clauses if c.name == name)

    def to_dict(self) -> dict:
        return {"k": self.k, "passed": self.passed, "clauses": [c.to_dict() for c in self.clauses]}

    def to_text(self) -> str:
        lines = [f"audit (k={self.k}): {'PASS' if self.passed else 'FAIL'}"]
        for c in self.clauses:
            line = f"  [{c.status.value:>7}] {c.name}: {c.detail}"
            if c.witness is not None:
                line += f" witness={list(c.witness)}"
            lines.append(line)
        return "\n".join(lines)


def _audit_connectivity(hypergraph: Hypergraph, k: int) -> ClauseResult:
    name = "connectivity_equals_k"
    if not order_condition_holds(hypergraph.n, k, hypergraph.r):
        return ClauseResult(name, ClauseStatus.SKIPPED, "order hypothesis on n does not hold")
    kappa, _ = edge_connectivity(hypergraph)
    value, _ = strength(hypergraph)
    status = ClauseStatus.PASS if kappa == value == k else ClauseStatus.FAIL
    return ClauseResult(name, status, f"kappa'={kappa}, strength={value}, k={k}")


def _audit_size(hypergraph: Hypergraph, k: int) -> ClauseResult:
    name = "size_within_bounds"
    n, r, m = hypergraph.n, hypergraph.r, hypergraph.m
    if n < threshold_t(k, r):
        return ClauseResult(name, ClauseStatus.SKIPPED, "n < t")
    low, high = lower_bound(n, k, r), upper_bound(n, k, r)
    status = ClauseStatus.PASS if low <= m <= high else ClauseStatus.FAIL
    return ClauseResult(name, status, f"{low} <= |E|={m} <= {high}")


def _audit_cut_sides(hypergraph: Hypergraph, k: int) -> ClauseResult:
    name = "min_cut_sides"
    n, r = hypergraph.n, hypergraph.r
    if n < 2:
        return ClauseResult(name, ClauseStatus.SKIPPED, "fewer than two vertices")
    t = threshold_t(k, r)
    order_checks = order_condition_holds(n, k, r)

    _, cut = edge_connectivity(hypergraph)
    components = hypergraph.remove_edges(cut.crossing).components()
    checked = 0
    for size in range(1, len(components)):
        for chosen in combinations(components, size):
            side = sorted(set().union(*chosen))
            sub, _ = hypergraph.induced(side)
            checked += 1
            if not is_k_edge_maximal(sub, k).is_maximal:
                return ClauseResult(name, ClauseStatus.FAIL, "side is not k-edge-maximal", tuple(side))
            if not order_checks or not r <= len(side) <= n - 2:
                continue
            if sub.is_complete() and len(side) != t:
                return ClauseResult(name, ClauseStatus.FAIL, f"complete side has {len(side)} != t={t} vertices", tuple(side))
            if not sub.is_complete() and len(side) < t + 1:
                return ClauseResult(name, ClauseStatus.FAIL, f"incomplete side has {len(side)} < t+1={t + 1} vertices", tuple(side))

    detail = f"{checked} side(s) of a {cut.weight}-edge minimum cut checked"
    if not order_checks:
        detail += "; order checks skipped"
    return ClauseResult(name, ClauseStatus.PASS, detail)


def _audit_small_order(hypergraph: Hypergraph, k: int) -> ClauseResult:
    name = "complete_when_small"
    n, r = hypergraph.n, hypergraph.r
    if binom(n - 1, r - 1) > k:
        return ClauseResult(name, ClauseStatus.SKIPPED, "C(n-1, r-1) > k")
    status = ClauseStatus.PASS if hypergraph.is_complete() else ClauseStatus.FAIL
    return ClauseResult(name, status, "C(n-1, r-1) <= k forces a complete hypergraph")


def audit_maximal(hypergraph: Hypergraph, k: int) -> AuditReport:
    """
    Checks the structural consequences of k-edge-maximality on an already certified ``H``:

    - ``connectivity_equals_k``: ``kappa'(H) = strength(H) = k`` (skipped outside the order hypothesis);
    - ``size_within_bounds``: lower bound <= ``|E(H)|`` <= upper bound;
    - ``min_cut_sides``: every union of some but not all components of ``H - X``
      for a minimum cut ``X`` is k-edge-maximal, and sides with
      ``r <= size <= n - 2`` have ``t`` vertices if complete, at least ``t + 1`` otherwise;
    - ``complete_when_small``: ``C(n-1, r-1) <= k`` forces ``H`` to be complete.

    :raises GuardError: If ``k < 2``.
    :rtype: AuditReport
    """
    if k < 2:
        raise GuardError(f"audits assume k >= 2, got k={k}")
    clauses = (
        _audit_connectivity(hypergraph, k),
        _audit_size(hypergraph, k),
        _audit_cut_sides(hypergraph, k),
        _audit_small_order(hypergraph, k),
    )
    return AuditReport(k=k, clauses=clauses)

"""
Generators for the extremal families.

- :func:`build_M`: complete ``K_t^r`` core, then each new vertex joins with ``k``
  new edges (attains the upper bound).
- :func:`build_NT`: complete ``K_t^r`` blocks along a tree, adjacent blocks joined
  by ``k`` crossing edges covering both blocks (attains the lower bound).
- :func:`build_one_max_star` and :func:`build_one_max_partition`: the two
  1-edge-maximal families with ``n - r + 1`` and ``ceil((n-1)/(r-1))`` edges.
"""

import random
from dataclasses import dataclass
from enum import Enum
from itertools import combinations, islice
from math import ceil
from typing import Callable, Iterable, Sequence

import networkx as nx

from .errors import ConstructionError, GuardError, ParseError
from .hypergraph import Edge, Hypergraph
from .params import MAX_VERTICES, Params, binom, checked_int64

NT_RANDOM_ATTEMPTS = 1000

# ---------------------------------------------------------------------
# Trees
# ---------------------------------------------------------------------


@dataclass(frozen=True)
class TreeSpec:
    """
    A tree on the vertices ``0..s-1``, given by its ``s - 1`` edges.

    Edges are normalised to ``(a, b)`` with ``a < b`` and kept in input order.

    :raises ConstructionError: If the edge list is not a spanning tree.
    """

    s: int
    edges: tuple[tuple[int, int], ...]

    def __post_init__(self):
        if self.s < 1:
            raise ConstructionError(f"a tree needs s >= 1 vertices, got {self.s}")
        normalised = tuple((min(a, b), max(a, b)) for a, b in self.edges)
        object.__setattr__(self, "edges", normalised)
        if len(normalised) != self.s - 1:
            raise ConstructionError(f"a tree on {self.s} vertices has {self.s - 1} edges, got {len(normalised)}")
        for a, b in normalised:
            if a == b or a < 0 or b >= self.s:
                raise ConstructionError(f"invalid tree edge ({a}, {b})")
        graph = nx.Graph()
        graph.add_nodes_from(range(self.s))
        graph.add_edges_from(normalised)
        if not nx.is_tree(graph):
            raise ConstructionError("edge list is cyclic or disconnected")

    def to_text(self) -> str:
        return "\n".join([str(self.s)] + [f"{a} {b}" for a, b in self.edges]) + "\n"


def path_tree(s: int) -> TreeSpec:
    return TreeSpec(s, tuple((i, i + 1) for i in range(s - 1)))


def star_tree(s: int) -> TreeSpec:
    return TreeSpec(s, tuple((0, i) for i in range(1, s)))


def random_tree(s: int, seed: int) -> TreeSpec:
    """
    Uniformly random labelled tree, decoded from a random Prufer sequence.

    The same ``(s, seed)`` always yields the same tree.
    """
    if s < 1:
        raise ConstructionError(f"a tree needs s >= 1 vertices, got {s}")
    if s == 1:
        return TreeSpec(1, ())
    if s == 2:
        return TreeSpec(2, ((0, 1),))
    rng = random.Random(seed)
    sequence = [rng.randrange(s) for _ in range(s - 2)]
    tree = nx.from_prufer_sequence(sequence)
    return TreeSpec(s, tuple(sorted(tuple(sorted(e)) for e in tree.edges())))


def parse_tree(text: str) -> TreeSpec:
    """
    Parses ``s`` followed by ``s - 1`` lines ``a b``; ``#`` comment lines are ignored.

    :raises ParseError: On malformed input, or when the pairs do not form a tree.
    """
    rows: list[tuple[int, list[int]]] = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        try:
            rows.append((lineno, [int(tok) for tok in line.split()]))
        except ValueError:
            raise ParseError(f"non-integer token in {line!r}", lineno) from None

    if not rows:
        raise ParseError("missing vertex count line")
    lineno, head = rows[0]
    if len(head) != 1:
        raise ParseError("first line must hold the vertex count s", lineno)
    edges = []
    for lineno, values in rows[1:]:
        if len(values) != 2:
            raise ParseError("tree edges are written 'a b'", lineno)
        edges.append((values[0], values[1]))
    try:
        return TreeSpec(head[0], tuple(edges))
    except ConstructionError as exc:
        raise ParseError(str(exc)) from None


# ---------------------------------------------------------------------
# Strategies
# ---------------------------------------------------------------------


class BuildMode(str, Enum):
    LEXICOGRAPHIC = "lexicographic"
    SEEDED_RANDOM = "seeded-random"


@dataclass(frozen=True)
class BuildStrategy:
    """
    How free edge choices are made: lexicographically smallest first, or at random from ``seed``.
    """

    mode: BuildMode = BuildMode.LEXICOGRAPHIC
    seed: int | None = None

    def __post_init__(self):
        object.__setattr__(self, "mode", BuildMode(self.mode))
        if self.mode is BuildMode.SEEDED_RANDOM and self.seed is None:
            raise ConstructionError("seeded-random strategy needs an explicit seed")

    @classmethod
    def seeded(cls, seed: int) -> "BuildStrategy":
        return cls(BuildMode.SEEDED_RANDOM, seed)

    def rng(self) -> random.Random | None:
        if self.mode is BuildMode.SEEDED_RANDOM:
            return random.Random(self.seed)
        return None


LEXICOGRAPHIC = BuildStrategy()

# ---------------------------------------------------------------------
# Upper-bound family
# ---------------------------------------------------------------------


def build_M(n: int, k: int, r: int, strategy: BuildStrategy = LEXICOGRAPHIC) -> Hypergraph:
    """
    Builds a member of the upper-bound family on ``n`` vertices.

    Vertices ``0..t-1`` form ``K_t^r``; every later vertex ``i`` receives ``k``
    distinct edges ``{i} + P`` with ``P`` an ``(r-1)``-subset of ``0..i-1``.
    This is always possible because ``C(i, r-1) >= C(t, r-1) > k``.

    :param n: Number of vertices (``n >= t``).
    :type n: int
    :param k: Connectivity parameter (>= 2).
    :type k: int
    :param r: Uniformity (>= 2).
    :type r: int
    :param strategy: Lexicographic (smallest subsets first) or seeded-random choice of ``P``.
    :type strategy: BuildStrategy
    :return: A hypergraph with ``C(t, r) + (n - t) k`` edges.
    :rtype: Hypergraph
    """
    if k < 2:
        raise ConstructionError(f"k >= 2 violated: k={k}")
    if r < 2:
        raise ConstructionError(f"r >= 2 violated: r={r}")
    params = Params.create(n, k, r)
    t = params.t
    if n < t:
        raise GuardError(f"n >= t violated: n={n} < t={t}")
    size = checked_int64(binom(t, r) + (n - t) * k, "edge count")

    rng = strategy.rng()
    edges: list[Edge] = list(combinations(range(t), r))
    for i in range(t, n):
        if rng is None:
            chosen = list(islice(combinations(range(i), r - 1), k))
        else:
            chosen = sorted(rng.sample(list(combinations(range(i), r - 1)), k))
        edges += [p + (i,) for p in chosen]

    hypergraph = Hypergraph(n, r, edges)
    assert hypergraph.m == size, "Upper-bound family member has the wrong size."
    return hypergraph


# ---------------------------------------------------------------------
# Lower-bound family
# ---------------------------------------------------------------------


def nt_covering_ok(
    cross_edges: Iterable[Sequence[int]], block_i: Iterable[int], block_j: Iterable[int]
) -> bool:
    """
    True when every edge lies in the union of the two blocks and meets both, and
    the edges jointly cover every vertex of both blocks.
    """
    a, b = set(block_i), set(block_j)
    union = a | b
    covered: set[int] = set()
    for e in cross_edges:
        e = set(e)
        if not e <= union or not e & a or not e & b:
            return False
        covered |= e
    return covered == union


def _crossing(edge: Iterable[int], a: set[int], b: set[int]) -> bool:
    edge = set(edge)
    return bool(edge & a) and bool(edge & b)


def _round_robin_cores(order: Sequence[int], k: int) -> list[list[int]]:
    return [list(order[p::k]) for p in range(k)]


def _lexicographic_crossing(block_i: list[int], block_j: list[int], k: int, r: int) -> list[Edge]:
    """
    Deterministic crossing edge set: the ``2t`` vertices, alternating blocks, are
    dealt round-robin to the ``k`` edges, and each edge is completed with the
    lexicographically first fill that crosses and is not used yet.
    """
    a, b = set(block_i), set(block_j)
    union = sorted(a | b)
    order = [v for pair in zip(block_i, block_j) for v in pair]
    used: set[Edge] = set()
    chosen: list[Edge] = []
    for core in _round_robin_cores(order, k):
        rest = [v for v in union if v not in core]
        for fill in combinations(rest, r - len(core)):
            edge = tuple(sorted(core + list(fill)))
            if edge not in used and _crossing(edge, a, b):
                break
        else:
            raise RuntimeError(f"no crossing completion for core {core}")
        used.add(edge)
        chosen.append(edge)
    return chosen


def _random_crossing(
    block_i: list[int], block_j: list[int], k: int, r: int, rng: random.Random
) -> list[Edge]:
    a, b = set(block_i), set(block_j)
    union = sorted(a | b)
    for _ in range(NT_RANDOM_ATTEMPTS):
        order = list(union)
        rng.shuffle(order)
        edges = []
        for core in _round_robin_cores(order, k):
            rest = [v for v in union if v not in core]
            edges.append(tuple(sorted(core + rng.sample(rest, r - len(core)))))
        if len(set(edges)) == k and nt_covering_ok(edges, a, b):
            return edges
    raise ConstructionError(f"no valid random crossing set after {NT_RANDOM_ATTEMPTS} attempts")


def build_NT(
    t: int, r: int, tree: TreeSpec, strategy: BuildStrategy = LEXICOGRAPHIC
) -> tuple[Hypergraph, int]:
    """
    Builds a member of the lower-bound family for the given tree.

    Block ``i`` is ``K_t^r`` on the vertices ``[i t, (i+1) t)``. For each tree edge
    ``(i, j)`` a set of ``k = C(t-1, r-1)`` distinct ``r``-subsets of the two
    blocks is added; every one meets both blocks and together they cover all
    ``2t`` vertices.

    :param t: Block size (``t > r``).
    :type t: int
    :param r: Uniformity (``r > 2``).
    :type r: int
    :param tree: Tree on ``s >= 2`` blocks.
    :type tree: TreeSpec
    :param strategy: Deterministic round-robin covering, or seeded-random covering.
    :type strategy: BuildStrategy
    :return: The hypergraph and ``k``.
    :rtype: tuple[Hypergraph, int]
    :raises ConstructionError: Naming the violated inequality.
    """
    if not r > 2:
        raise ConstructionError(f"r > 2 violated: r={r}")
    if not t > r:
        raise ConstructionError(f"t > r violated: t={t} <= r={r}")
    k = binom(t - 1, r - 1)
    if not k * r >= 2 * t:
        raise ConstructionError(f"kr >= 2t violated: {k}*{r} < 2*{t}")
    if tree.s < 2:
        raise ConstructionError(f"s >= 2 violated: s={tree.s}")
    n = tree.s * t
    if n > MAX_VERTICES:
        raise GuardError(f"n = s*t = {n} exceeds MAX_VERTICES={MAX_VERTICES}")

    blocks = [list(range(i * t, (i + 1) * t)) for i in range(tree.s)]
    edges: list[Edge] = []
    for block in blocks:
        edges += combinations(block, r)

    rng = strategy.rng()
    for i, j in tree.edges:
        if rng is None:
            cross = _lexicographic_crossing(blocks[i], blocks[j], k, r)
        else:
            cross = _random_crossing(blocks[i], blocks[j], k, r, rng)
        assert len(cross) == k and nt_covering_ok(cross, blocks[i], blocks[j]), \
            "Crossing set violates the covering conditions."
        edges += cross

    hypergraph = Hypergraph(n, r, edges)
    assert hypergraph.m == tree.s * binom(t, r) + (tree.s - 1) * k
    return hypergraph, k


# ---------------------------------------------------------------------
# 1-edge-maximal families
# ---------------------------------------------------------------------


def _check_one_max(n: int, r: int) -> None:
    if r < 2:
        raise ConstructionError(f"r >= 2 violated: r={r}")
    if n < r:
        raise ConstructionError(f"n >= r violated: n={n} < r={r}")
    if n > MAX_VERTICES:
        raise GuardError(f"n={n} exceeds MAX_VERTICES={MAX_VERTICES}")


def build_one_max_star(n: int, r: int) -> Hypergraph:
    """``n - r + 1`` edges sharing the core ``{0..r-2}``; edge ``i`` adds vertex ``r - 2 + i``."""
    _check_one_max(n, r)
    core = tuple(range(r - 1))
    return Hypergraph(n, r, (core + (v,) for v in range(r - 1, n)))


def build_one_max_partition(n: int, r: int) -> Hypergraph:
    """
    ``ceil((n-1)/(r-1))`` edges through the hub ``n - 1``.

    Edges take consecutive ``(r-1)``-blocks of ``0..n-2``; the last one takes the
    final ``r - 1`` of those vertices, overlapping its predecessor when
    ``r - 1`` does not divide ``n - 1``.

    The size is the lower end of :func:`~edge_maximal.extremal.one_edge_bounds`,
    but the hypergraph is not 1-edge-maximal in general: for
    ``n = 5, r = 3`` the non-edge ``(0, 1, 2)`` can be added and the strength stays 1.
    """
    _check_one_max(n, r)
    hub = n - 1
    s = ceil((n - 1) / (r - 1))
    edges = [tuple(range((i - 1) * (r - 1), i * (r - 1))) + (hub,) for i in range(1, s)]
    edges.append(tuple(range(n - r, n - 1)) + (hub,))
    return Hypergraph(n, r, edges)


# ---------------------------------------------------------------------
# Registry
# ---------------------------------------------------------------------

TREE_SHAPES: dict[str, Callable[[int], TreeSpec]] = {
    "path": path_tree,
    "star": star_tree,
}

ONE_MAX_VARIANTS: dict[str, Callable[[int, int], Hypergraph]] = {
    "star": build_one_max_star,
    "partition": build_one_max_partition,
}


def tree_from_shorthand(shorthand: str, seed: int | None = None) -> TreeSpec:
    """
    Resolves ``path<s>``, ``star<s>`` or ``random<s>`` (the last needs a seed).

    :raises ValueError: If the shorthand is unknown.
    """
    for shape, builder in TREE_SHAPES.items():
        if shorthand.startswith(shape) and shorthand[len(shape):].isdigit():
            return builder(int(shorthand[len(shape):]))
    if shorthand.startswith("random") and shorthand[len("random"):].isdigit():
        if seed is None:
            raise ConstructionError("random trees need an explicit seed")
        return random_tree(int(shorthand[len("random"):]), seed)
    raise ValueError(
        f"Unknown tree shorthand: {shorthand}. Options: {[s + '<s>' for s in TREE_SHAPES] + ['random<s>']}"
    )


def build_one_max(variant: str, n: int, r: int) -> Hypergraph:
    builder = ONE_MAX_VARIANTS.get(variant)
    if builder is None:
        raise ValueError(f"Unknown 1-edge-maximal variant: {variant}. Options: {list(ONE_MAX_VARIANTS.keys())}")
    return builder(n, r)


BUILDERS: dict[str, Callable[..., Hypergraph | tuple[Hypergraph, int]]] = {
    "m": build_M,
    "nt": build_NT,
    "one-max": build_one_max,
}


def create_family(family: str, *args, **kwargs) -> Hypergraph | tuple[Hypergraph, int]:
    """
    Builds a member of a registered family by name.

    :param family: A key of :data:`BUILDERS`.
    :type family: str
    :raises ValueError: If the family is not registered.
    """
    builder = BUILDERS.get(family)
    if builder is None:
        raise ValueError(f"Unknown family: {family}. Options: {list(BUILDERS.keys())}")
    return builder(*args, **kwargs)

"""
Edge-cuts and edge-connectivity of uniform hypergraphs.

``kappa'(H)`` is computed exactly with unit-capacity max-flows on the incidence
network of ``H`` (every hyperedge becomes one capacity-1 arc, vertices are
uncuttable). Brute-force oracles evaluate the definitions literally over all
vertex subsets and are used to cross-check the flow results.
"""

from dataclasses import dataclass
from typing import Iterable, Iterator

import networkx as nx
import numpy as np

from .errors import GuardError, InvalidEdgeError
from .hypergraph import Edge, Hypergraph

BRUTEFORCE_MAX_VERTICES = 20
_CHUNK_CELLS = 1 << 22  # subsets x edges evaluated per numpy block


@dataclass(frozen=True)
class Cut:
    """
    An edge-cut ``E_H(X)``: the side ``X`` and the edges meeting both ``X`` and ``V - X``.
    """

    side: frozenset[int]
    crossing: tuple[Edge, ...]

    @property
    def weight(self) -> int:
        return len(self.crossing)

    def relabel(self, mapping: dict[int, int]) -> "Cut":
        """Translates the cut through a vertex mapping (e.g. back to original identifiers)."""
        return Cut(
            side=frozenset(mapping[v] for v in self.side),
            crossing=tuple(sorted(tuple(sorted(mapping[v] for v in e)) for e in self.crossing)),
        )

    def to_dict(self) -> dict:
        return {
            "side": sorted(self.side),
            "weight": self.weight,
            "crossing": [list(e) for e in self.crossing],
        }

    def __str__(self) -> str:
        return f"Cut(side={sorted(self.side)}, weight={self.weight})"


# ---------------------------------------------------------------------
# Cuts
# ---------------------------------------------------------------------


def _side_mask(hypergraph: Hypergraph, side: Iterable[int]) -> np.ndarray:
    """Boolean ``(m,)`` array: which edges cross the given side."""
    side = set(side)
    for v in side:
        if not 0 <= v < hypergraph.n:
            raise InvalidEdgeError(f"vertex {v} outside [0, {hypergraph.n})")
    if hypergraph.m == 0 or not side:
        return np.zeros(hypergraph.m, dtype=bool)
    inside = np.isin(hypergraph.edge_array(), list(side))
    return inside.any(axis=1) & ~inside.all(axis=1)


def edge_cut(hypergraph: Hypergraph, side: Iterable[int]) -> Cut:
    """
    The edge-cut ``E_H(X)`` with its crossing edges.

    :param hypergraph: The hypergraph ``H``.
    :type hypergraph: Hypergraph
    :param side: The vertex subset ``X``.
    :type side: Iterable[int]
    :rtype: Cut
    """
    side = frozenset(side)
    crossing = _side_mask(hypergraph, side)
    return Cut(side=side, crossing=tuple(e for e, c in zip(hypergraph.edges, crossing) if c))


def cut_degree(hypergraph: Hypergraph, side: Iterable[int]) -> int:
    """``d_H(X)``: number of edges meeting both ``X`` and ``V - X`` (0 for ``X`` empty or ``X = V``)."""
    return int(_side_mask(hypergraph, side).sum())


# ---------------------------------------------------------------------
# Flow-based connectivity
# ---------------------------------------------------------------------


def incidence_network(hypergraph: Hypergraph) -> nx.DiGraph:
    """
    Flow network whose minimum ``s-t`` cuts are minimum hyperedge sets separating ``s`` from ``t``.

    Vertex ``v`` keeps node ``v``; edge number ``i`` becomes the arc
    ``n + 2i -> n + 2i + 1`` with capacity 1. Arcs between vertices and edge
    nodes carry no capacity attribute, i.e. they are uncuttable.
    """
    n = hypergraph.n
    network = nx.DiGraph()
    network.add_nodes_from(hypergraph.vertices)
    for i, e in enumerate(hypergraph.edges):
        head, tail = n + 2 * i, n + 2 * i + 1
        network.add_edge(head, tail, capacity=1)
        for v in e:
            network.add_edge(v, head)
            network.add_edge(tail, v)
    return network


def _min_separation(network: nx.DiGraph, n: int, s: int, t: int) -> tuple[int, frozenset[int]]:
    value, (reachable, _) = nx.minimum_cut(network, s, t)
    return int(value), frozenset(v for v in reachable if v < n)


def local_edge_connectivity(hypergraph: Hypergraph, s: int, t: int) -> int:
    """
    Minimum number of edges whose deletion separates ``s`` from ``t``.

    :raises InvalidEdgeError: If ``s == t`` or either vertex is out of range.
    """
    for v in (s, t):
        if not 0 <= v < hypergraph.n:
            raise InvalidEdgeError(f"vertex {v} outside [0, {hypergraph.n})")
    if s == t:
        raise InvalidEdgeError("local edge-connectivity needs two distinct vertices")
    value, _ = _min_separation(incidence_network(hypergraph), hypergraph.n, s, t)
    return value


def edge_connectivity(hypergraph: Hypergraph) -> tuple[int, Cut]:
    """
    Exact ``kappa'(H)`` with a minimum cut attaining it.

    The source is vertex 0 and targets are scanned in increasing order; the first
    strictly smaller separation wins, so the witness is reproducible. The witness
    side is the set of vertices still reachable from 0 in the residual network.

    :raises GuardError: If ``H`` has fewer than two vertices.
    :rtype: tuple[int, Cut]
    """
    n = hypergraph.n
    if n < 2:
        raise GuardError(f"edge-connectivity needs at least 2 vertices, got {n}")

    components = hypergraph.components()
    if len(components) > 1:
        return 0, edge_cut(hypergraph, components[0])

    network = incidence_network(hypergraph)
    best_value, best_side = None, None
    for target in range(1, n):
        value, side = _min_separation(network, n, 0, target)
        if best_value is None or value < best_value:
            best_value, best_side = value, side

    cut = edge_cut(hypergraph, best_side)
    assert cut.weight == best_value, "Residual side does not realise the max-flow value."
    return best_value, cut


def is_maximal_edge_connected(hypergraph: Hypergraph) -> bool:
    """True when ``kappa'(H) = delta(H)``."""
    kappa, _ = edge_connectivity(hypergraph)
    return kappa == hypergraph.min_degree()


def is_peripheral(hypergraph: Hypergraph, cut: Cut) -> int | None:
    """
    Returns a vertex ``v`` with ``cut.crossing = E_H(v)``, or None if the cut is not peripheral.
    """
    crossing = set(cut.crossing)
    for v in hypergraph.vertices:
        if set(hypergraph.incident_edges(v)) == crossing:
            return v
    return None


# ---------------------------------------------------------------------
# Brute-force oracles
# ---------------------------------------------------------------------


def _check_bruteforce_size(hypergraph: Hypergraph, limit: int = BRUTEFORCE_MAX_VERTICES) -> None:
    if not 2 <= hypergraph.n <= limit:
        raise GuardError(
            f"brute-force evaluation needs 2 <= n <= {limit}, got n={hypergraph.n}"
        )


def _subset_blocks(hypergraph: Hypergraph) -> Iterator[tuple[np.ndarray, np.ndarray]]:
    """
    Yields ``(sides, crossing)`` blocks over every nonempty proper subset containing vertex 0.

    ``sides`` holds subset bitmasks, ``crossing`` is the boolean matrix
    ``sides x edges`` telling which edges cross each subset.
    """
    n = hypergraph.n
    full = (1 << n) - 1
    masks = hypergraph.edge_masks().astype(np.int64)
    total = 1 << (n - 1)
    step = max(1, _CHUNK_CELLS // max(1, hypergraph.m))
    for start in range(0, total, step):
        stop = min(total, start + step)
        sides = (np.arange(start, stop, dtype=np.int64) << 1) | 1
        sides = sides[sides != full]
        if sides.size == 0:
            continue
        inside = (sides[:, None] & masks[None, :]) != 0
        outside = ((~sides & full)[:, None] & masks[None, :]) != 0
        yield sides, inside & outside


def _side_from_mask(mask: int, n: int) -> frozenset[int]:
    return frozenset(v for v in range(n) if mask >> v & 1)


def edge_connectivity_bruteforce(hypergraph: Hypergraph) -> int:
    """
    ``kappa'(H)`` evaluated literally: the minimum of ``d_H(X)`` over all nonempty
    proper subsets ``X`` containing vertex 0.

    :raises GuardError: Unless ``2 <= n <= 20``.
    """
    _check_bruteforce_size(hypergraph)
    if hypergraph.m == 0:
        return 0
    return int(min(crossing.sum(axis=1).min() for _, crossing in _subset_blocks(hypergraph)))


def is_super_edge_connected(hypergraph: Hypergraph) -> tuple[bool, Cut | None]:
    """
    Checks that every minimum edge-cut is peripheral, i.e. equals ``E_H(v)`` for some vertex.

    All subsets are enumerated, so the check is exact but limited to ``n <= 20``.

    :return: ``(True, None)``, or ``(False, cut)`` with a non-peripheral minimum cut.
    :rtype: tuple[bool, Cut | None]
    """
    _check_bruteforce_size(hypergraph)
    n = hypergraph.n
    kappa = edge_connectivity_bruteforce(hypergraph)

    edge_array = hypergraph.edge_array()
    peripheral_rows = {(edge_array == v).any(axis=1).tobytes() for v in hypergraph.vertices}

    for sides, crossing in _subset_blocks(hypergraph):
        weights = crossing.sum(axis=1)
        for row in np.flatnonzero(weights == kappa):
            if crossing[row].tobytes() not in peripheral_rows:
                return False, edge_cut(hypergraph, _side_from_mask(int(sides[row]), n))
    return True, None

"""
The r-uniform hypergraph value type and its canonical text format.

Vertices are the integers ``0..n-1``. Edges are strictly increasing tuples of
``r`` vertices, kept in lexicographic order without duplicates, so two equal
hypergraphs always serialize to the same bytes.

Text format::

    # comment lines start with '#'
    n r m
    v1 v2 ... vr        (m lines, increasing, sorted lexicographically)
"""

from itertools import combinations
from pathlib import Path
from typing import Iterable, Iterator, Sequence

import networkx as nx
import numpy as np

from .errors import InvalidEdgeError, ParseError
from .params import MAX_VERTICES, binom

Edge = tuple[int, ...]


class Hypergraph:
    __slots__ = ("_n", "_r", "_edges", "_edge_set", "_array")

    def __init__(self, n: int, r: int, edges: Iterable[Sequence[int]] = ()):
        """
        Immutable r-uniform hypergraph on the vertex set ``{0, ..., n-1}``.

        :param n: Number of vertices.
        :type n: int
        :param r: Uniformity (every edge has exactly ``r`` vertices), at least 2.
        :type r: int
        :param edges: Edges as sequences of vertex identifiers, in any order.
        :type edges: Iterable[Sequence[int]]
        :raises InvalidEdgeError: If an edge has the wrong size, repeats a vertex,
            leaves the vertex range, or appears twice.
        """
        if n < 0:
            raise InvalidEdgeError(f"vertex count must be non-negative, got {n}")
        if r < 2:
            raise InvalidEdgeError(f"uniformity must be at least 2, got {r}")
        self._n = n
        self._r = r

        canonical = [self._canonical_edge(e) for e in edges]
        edge_set = frozenset(canonical)
        if len(edge_set) != len(canonical):
            raise InvalidEdgeError("hypergraph edges must be pairwise distinct")

        self._edges: tuple[Edge, ...] = tuple(sorted(edge_set))
        self._edge_set = edge_set
        self._array = None

    # ------------------------------------------------------------------
    # Basic accessors
    # ------------------------------------------------------------------

    @property
    def n(self) -> int:
        return self._n

    @property
    def r(self) -> int:
        return self._r

    @property
    def edges(self) -> tuple[Edge, ...]:
        """Edges in canonical (lexicographic) order."""
        return self._edges

    @property
    def m(self) -> int:
        """Number of edges."""
        return len(self._edges)

    @property
    def vertices(self) -> range:
        return range(self._n)

    def has_edge(self, edge: Sequence[int]) -> bool:
        return tuple(sorted(edge)) in self._edge_set

    def edge_array(self) -> np.ndarray:
        """
        Edges as a read-only ``(m, r)`` integer array, for vectorised counting.

        :rtype: numpy.ndarray
        """
        if self._array is None:
            array = np.array(self._edges, dtype=np.int64).reshape(len(self._edges), self._r)
            array.flags.writeable = False
            self._array = array
        return self._array

    def edge_masks(self) -> np.ndarray:
        """
        Bitmask mirror of the edges (bit ``v`` set when vertex ``v`` is in the edge).

        :raises InvalidEdgeError: If ``n`` exceeds the 64-bit word.
        :rtype: numpy.ndarray[numpy.uint64]
        """
        if self._n > MAX_VERTICES:
            raise InvalidEdgeError(f"bitmasks need n <= {MAX_VERTICES}, got {self._n}")
        masks = [sum(1 << v for v in e) for e in self._edges]
        return np.array(masks, dtype=np.uint64)

    # ------------------------------------------------------------------
    # Degrees
    # ------------------------------------------------------------------

    def degrees(self) -> np.ndarray:
        """Degree of every vertex, indexed by vertex identifier."""
        if not self._edges:
            return np.zeros(self._n, dtype=np.int64)
        return np.bincount(self.edge_array().ravel(), minlength=self._n)

    def degree(self, v: int) -> int:
        """
        Number of edges containing ``v``.

        :raises InvalidEdgeError: If ``v`` is not a vertex.
        """
        self._check_vertex(v)
        return int(self.degrees()[v])

    def min_degree(self) -> int:
        """Minimum degree (0 for the hypergraph without vertices)."""
        return int(self.degrees().min()) if self._n else 0

    def max_degree(self) -> int:
        return int(self.degrees().max()) if self._n else 0

    def incident_edges(self, v: int) -> tuple[Edge, ...]:
        """The edge set ``E_H(v)``: all edges containing ``v``."""
        self._check_vertex(v)
        return tuple(e for e in self._edges if v in e)

    # ------------------------------------------------------------------
    # Derived hypergraphs
    # ------------------------------------------------------------------

    def add_edge(self, edge: Sequence[int]) -> "Hypergraph":
        """
        Returns ``H + e``. The receiver is left unchanged.

        :raises InvalidEdgeError: If ``e`` is invalid or already an edge.
        """
        e = self._canonical_edge(edge)
        if e in self._edge_set:
            raise InvalidEdgeError(f"edge {e} is already present")
        return Hypergraph(self._n, self._r, self._edges + (e,))

    def remove_edge(self, edge: Sequence[int]) -> "Hypergraph":
        """
        Returns ``H - e``. The receiver is left unchanged.

        :raises InvalidEdgeError: If ``e`` is invalid or not an edge.
        """
        e = self._canonical_edge(edge)
        if e not in self._edge_set:
            raise InvalidEdgeError(f"edge {e} is not present")
        return Hypergraph(self._n, self._r, (f for f in self._edges if f != e))

    def remove_edges(self, edges: Iterable[Sequence[int]]) -> "Hypergraph":
        """Returns ``H - X`` on the same vertex set."""
        removed = {self._canonical_edge(e) for e in edges}
        missing = removed - self._edge_set
        if missing:
            raise InvalidEdgeError(f"edges {sorted(missing)} are not present")
        return Hypergraph(self._n, self._r, (e for e in self._edges if e not in removed))

    def induced(self, subset: Iterable[int]) -> tuple["Hypergraph", dict[int, int]]:
        """
        Induced subhypergraph ``H[S]``, relabelled to ``0..|S|-1`` by rank.

        :param subset: Vertex subset ``S``.
        :type subset: Iterable[int]
        :return: The induced hypergraph and the mapping old identifier -> new identifier.
        :rtype: tuple[Hypergraph, dict[int, int]]
        """
        kept = sorted(set(subset))
        for v in kept:
            self._check_vertex(v)
        mapping = {old: new for new, old in enumerate(kept)}
        edges = (
            tuple(mapping[v] for v in e)
            for e in self._edges
            if all(v in mapping for v in e)
        )
        return Hypergraph(len(kept), self._r, edges), mapping

    def delete_vertices(self, removed: Iterable[int]) -> tuple["Hypergraph", dict[int, int]]:
        """``H - Y``: the hypergraph induced by the remaining vertices."""
        removed = set(removed)
        for v in removed:
            self._check_vertex(v)
        return self.induced(v for v in self.vertices if v not in removed)

    def non_edges(self) -> Iterator[Edge]:
        """Edges of the complement ``H^c``, in lexicographic order."""
        for candidate in combinations(range(self._n), self._r):
            if candidate not in self._edge_set:
                yield candidate

    # ------------------------------------------------------------------
    # Structure
    # ------------------------------------------------------------------

    def to_networkx(self) -> nx.Graph:
        """
        Primal graph: vertices of ``H``, joined whenever they share an edge.

        Each hyperedge contributes a star on its vertices, which keeps the same
        connected components as the full clique.
        """
        graph = nx.Graph()
        graph.add_nodes_from(self.vertices)
        for e in self._edges:
            graph.add_edges_from((e[0], v) for v in e[1:])
        return graph

    def components(self) -> list[frozenset[int]]:
        """Connected components (isolated vertices included), ordered by smallest vertex."""
        comps = [frozenset(c) for c in nx.connected_components(self.to_networkx())]
        return sorted(comps, key=min)

    def is_connected(self) -> bool:
        return self._n >= 1 and len(self.components()) == 1

    def is_complete(self) -> bool:
        return self.m == binom(self._n, self._r)

    # ------------------------------------------------------------------
    # Text format
    # ------------------------------------------------------------------

    def to_text(self) -> str:
        """Canonical text serialization (bit-exact for equal hypergraphs)."""
        lines = [f"{self._n} {self._r} {self.m}"]
        lines += [" ".join(map(str, e)) for e in self._edges]
        return "\n".join(lines) + "\n"

    @classmethod
    def from_text(cls, text: str) -> "Hypergraph":
        """
        Parses the canonical text format. Comment lines (``#``) and blank lines
        are ignored; edge lines may come in any order but each must be increasing.

        :raises ParseError: With the offending line number.
        """
        header = None
        edges: list[Edge] = []
        seen: set[Edge] = set()
        for lineno, raw in enumerate(text.splitlines(), start=1):
            line = raw.strip()
            if not line or line.startswith("#"):
                continue
            try:
                values = [int(tok) for tok in line.split()]
            except ValueError:
                raise ParseError(f"non-integer token in {line!r}", lineno) from None

            if header is None:
                if len(values) != 3:
                    raise ParseError("header must be 'n r m'", lineno)
                n, r, m = values
                if n < 0 or r < 2 or m < 0:
                    raise ParseError(f"invalid header values n={n}, r={r}, m={m}", lineno)
                header = (n, r, m)
                continue

            n, r, m = header
            if len(values) != r:
                raise ParseError(f"edge has {len(values)} vertices, expected {r}", lineno)
            if any(v < 0 or v >= n for v in values):
                raise ParseError(f"vertex out of range [0, {n})", lineno)
            if any(a >= b for a, b in zip(values, values[1:])):
                raise ParseError("edge vertices must be strictly increasing", lineno)
            edge = tuple(values)
            if edge in seen:
                raise ParseError(f"duplicate edge {edge}", lineno)
            seen.add(edge)
            edges.append(edge)

        if header is None:
            raise ParseError("missing header line 'n r m'")
        n, r, m = header
        if len(edges) != m:
            raise ParseError(f"header announces {m} edges, found {len(edges)}")
        return cls(n, r, edges)

    # ------------------------------------------------------------------
    # Helpers
    # ------------------------------------------------------------------

    def _check_vertex(self, v: int) -> None:
        if not 0 <= v < self._n:
            raise InvalidEdgeError(f"vertex {v} outside [0, {self._n})")

    def _canonical_edge(self, edge: Sequence[int]) -> Edge:
        e = tuple(sorted(int(v) for v in edge))
        if len(e) != self._r:
            raise InvalidEdgeError(f"edge {e} has {len(e)} vertices, expected {self._r}")
        if len(set(e)) != self._r:
            raise InvalidEdgeError(f"edge {e} repeats a vertex")
        if e and (e[0] < 0 or e[-1] >= self._n):
            raise InvalidEdgeError(f"edge {e} leaves the vertex range [0, {self._n})")
        return e

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Hypergraph):
            return NotImplemented
        return (self._n, self._r, self._edges) == (other._n, other._r, other._edges)

    def __hash__(self) -> int:
        return hash((self._n, self._r, self._edges))

    def __repr__(self) -> str:
        return f"Hypergraph(n={self._n!r}, r={self._r!r}, edges={list(self._edges)!r})"

    def __str__(self) -> str:
        return f"{self._r}-uniform hypergraph: {self._n} vertices, {self.m} edges"


def complete_hypergraph(n: int, r: int) -> Hypergraph:
    """``K_n^r``; it has no edges when ``n < r``."""
    return Hypergraph(n, r, combinations(range(n), r))


def empty_hypergraph(n: int, r: int) -> Hypergraph:
    return Hypergraph(n, r)


def is_regular(hypergraph: Hypergraph) -> bool:
    """True when ``delta(H) = Delta(H)``."""
    return hypergraph.min_degree() == hypergraph.max_degree()


def read_hypergraph(path: str | Path) -> Hypergraph:
    return Hypergraph.from_text(Path(path).read_text())


def write_hypergraph(hypergraph: Hypergraph, path: str | Path) -> None:
    Path(path).write_text(hypergraph.to_text())

"""
Strength ``max{kappa'(H'): H' subhypergraph of H}`` via recursive min-cut decomposition.

If ``X`` is a minimum edge-cut of ``H``, any subhypergraph ``H'`` with
``kappa'(H') > |X|`` lies inside a single component of ``H - X`` (otherwise
``X`` restricted to ``H'`` would cut it). Recursing into the components and
taking the maximum of the recorded connectivities therefore yields the strength.
"""

from dataclasses import dataclass, field
from itertools import combinations
from typing import Iterable, Iterator

from .connectivity import Cut, edge_connectivity, edge_connectivity_bruteforce
from .errors import GuardError
from .hypergraph import Hypergraph

STRENGTH_BRUTEFORCE_MAX_VERTICES = 12


@dataclass(frozen=True)
class StrengthTree:
    """
    One node of the decomposition: a vertex subset ``S`` (original identifiers),
    ``kappa'(H[S])``, the chosen minimum cut and one subtree per component of
    ``H[S]`` minus that cut.
    """

    vertices: tuple[int, ...]
    kappa: int
    cut: Cut | None = None
    children: tuple["StrengthTree", ...] = field(default_factory=tuple)

    @property
    def strength(self) -> int:
        """``max(kappa, children's strengths)``."""
        return max([self.kappa] + [child.strength for child in self.children])

    def nodes(self) -> Iterator["StrengthTree"]:
        """Pre-order traversal."""
        yield self
        for child in self.children:
            yield from child.nodes()

    def to_dict(self) -> dict:
        return {
            "vertices": list(self.vertices),
            "kappa": self.kappa,
            "strength": self.strength,
            "cut": None if self.cut is None else [list(e) for e in self.cut.crossing],
            "children": [child.to_dict() for child in self.children],
        }

    def to_text(self, indent: int = 0) -> str:
        """Indented outline, one node per line."""
        pad = "  " * indent
        line = f"{pad}{list(self.vertices)} kappa={self.kappa}"
        if self.cut is not None:
            line += f" cut={[list(e) for e in self.cut.crossing]}"
        lines = [line] + [child.to_text(indent + 1) for child in self.children]
        return "\n".join(lines)

    def __str__(self) -> str:
        return f"StrengthTree(|S|={len(self.vertices)}, strength={self.strength})"


def _decompose(hypergraph: Hypergraph, subset: Iterable[int]) -> StrengthTree:
    sub, mapping = hypergraph.induced(subset)
    original = {new: old for old, new in mapping.items()}
    vertices = tuple(sorted(mapping))
    if sub.n == 1:
        return StrengthTree(vertices=vertices, kappa=0)

    kappa, cut = edge_connectivity(sub)
    remainder = sub.remove_edges(cut.crossing)
    children = tuple(
        _decompose(hypergraph, (original[v] for v in component))
        for component in remainder.components()
    )
    assert len(children) >= 2, "Removing a minimum cut must disconnect the hypergraph."
    return StrengthTree(vertices=vertices, kappa=kappa, cut=cut.relabel(original), children=children)


def strength(hypergraph: Hypergraph) -> tuple[int, StrengthTree]:
    """
    Exact strength of ``H`` with its decomposition tree as certificate.

    A single vertex has strength 0.

    :raises GuardError: If ``H`` has no vertices.
    :rtype: tuple[int, StrengthTree]
    """
    if hypergraph.n < 1:
        raise GuardError("strength needs at least one vertex")
    tree = _decompose(hypergraph, hypergraph.vertices)
    return tree.strength, tree


def _peel(hypergraph: Hypergraph, subset: set[int], k: int) -> set[int]:
    """Repeatedly drops vertices of degree <= k inside ``H[subset]``."""
    current = set(subset)
    while len(current) >= 2:
        sub, mapping = hypergraph.induced(current)
        degrees = sub.degrees()
        low = {old for old, new in mapping.items() if degrees[new] <= k}
        if not low:
            break
        current -= low
    return current if len(current) >= 2 else set()


def strength_witness(hypergraph: Hypergraph, k: int) -> frozenset[int] | None:
    """
    Finds a vertex subset ``S`` with ``kappa'(H[S]) > k``, or None when the strength is at most ``k``.

    A vertex of degree at most ``k`` cannot belong to a ``(k+1)``-edge-connected
    subhypergraph, so such vertices are peeled away before any flow is run.
    """
    pending = [set(hypergraph.vertices)]
    while pending:
        core = _peel(hypergraph, pending.pop(), k)
        if not core:
            continue
        sub, mapping = hypergraph.induced(core)
        original = {new: old for old, new in mapping.items()}
        for component in sub.components():
            part = {original[v] for v in component}
            if len(part) < 2:
                continue
            piece, piece_map = hypergraph.induced(part)
            kappa, cut = edge_connectivity(piece)
            if kappa > k:
                return frozenset(part)
            back = {new: old for old, new in piece_map.items()}
            for child in piece.remove_edges(cut.crossing).components():
                pending.append({back[v] for v in child})
    return None


def strength_bruteforce(hypergraph: Hypergraph) -> int:
    """
    Strength evaluated literally: the maximum of brute-force ``kappa'`` over all
    induced subhypergraphs on at least two vertices.

    Induced subhypergraphs suffice since adding edges never decreases ``kappa'``.

    :raises GuardError: If ``n > 12``.
    """
    n = hypergraph.n
    if n > STRENGTH_BRUTEFORCE_MAX_VERTICES:
        raise GuardError(
            f"brute-force strength needs n <= {STRENGTH_BRUTEFORCE_MAX_VERTICES}, got n={n}"
        )
    best = 0
    for size in range(2, n + 1):
        for subset in combinations(range(n), size):
            sub, _ = hypergraph.induced(subset)
            if sub.m == 0:
                continue
            best = max(best, edge_connectivity_bruteforce(sub))
    return best

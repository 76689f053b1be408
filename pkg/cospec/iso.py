"""Canonical labelling, isomorphism testing and induced-subgraph detection."""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from typing import Dict, List, Optional, Sequence, Tuple

from cospec.graph import (
    Graph,
    component_masks,
    degree_sequence,
    disjoint_union,
    gen_basic,
    gen_double_star,
    gen_R,
)
from cospec.utils import bit, bits_list, iter_bits

Labels = Tuple[int, ...]


@dataclass(frozen=True, order=True)
class CanonicalForm:
    """
    Canonical encoding of an isomorphism class.

    ``code`` is the upper triangle of the canonically relabelled adjacency
    matrix in column order (0,1), (0,2), (1,2), (0,3), ... packed big-endian.
    Two graphs are isomorphic exactly when their forms are equal.
    """

    n: int
    code: bytes

    def hex(self) -> str:
        """Short printable key, e.g. ``'5:0f80'``."""
        return f"{self.n}:{self.code.hex()}"


def _adjacency_code(adj: Sequence[int], order: Sequence[int]) -> int:
    """Upper-triangle bits of ``adj`` under ``order`` (``order[k]`` gets label ``k``)."""
    code = 0
    for j in range(1, len(order)):
        row = adj[order[j]]
        for i in range(j):
            code = (code << 1) | (row >> order[i] & 1)
    return code


def _refine(neighbours: Sequence[Sequence[int]], colours: List[int]) -> List[int]:
    """Refine an ordered colouring to the coarsest equitable one below it."""
    cells = len(set(colours))
    while True:
        keys = [
            (colours[v], tuple(sorted(colours[u] for u in neighbours[v])))
            for v in range(len(colours))
        ]
        rank = {key: r for r, key in enumerate(sorted(set(keys)))}
        colours = [rank[key] for key in keys]
        if len(rank) == cells:
            return colours
        cells = len(rank)


def _twin_representatives(adj: Sequence[int], cell: Sequence[int]) -> List[int]:
    """One vertex per twin class of ``cell``; swapping twins is an automorphism."""
    reps: List[int] = []
    for v in cell:
        if not any(adj[r] & ~bit(v) == adj[v] & ~bit(r) for r in reps):
            reps.append(v)
    return reps


def _canonical_order(adj: Sequence[int]) -> Tuple[int, List[int]]:
    """
    Smallest adjacency code of a graph given by local rows, and its vertex order.

    Individualisation-refinement: refine, branch on every twin class of the
    first non-singleton cell, keep the lexicographically smallest leaf.
    """
    size = len(adj)
    if size <= 1:
        return 0, list(range(size))
    neighbours = [bits_list(row) for row in adj]
    best: List = [None, None]

    def search(colours: List[int]) -> None:
        colours = _refine(neighbours, colours)
        counts = Counter(colours)
        if len(counts) == size:
            order = sorted(range(size), key=colours.__getitem__)
            code = _adjacency_code(adj, order)
            if best[0] is None or code < best[0]:
                best[0], best[1] = code, order
            return
        target = min(c for c, k in counts.items() if k > 1)
        cell = [v for v in range(size) if colours[v] == target]
        for v in _twin_representatives(adj, cell):
            search([2 * c + (w != v) for w, c in enumerate(colours)])

    search([0] * size)
    return best[0], best[1]


def canonical_labeling(g: Graph) -> Tuple[CanonicalForm, Labels]:
    """
    Canonical form of ``g`` and the relabelling that produces it.

    Components are canonised separately, sorted by (order, code) and laid
    out one after another, so isolated vertices and repeated components
    cost nothing extra.

    Returns:
        ``(form, labels)`` with ``labels[v]`` the canonical label of vertex ``v``
    """
    pieces = []
    for comp in component_masks(g):
        vertices = bits_list(comp)
        local = {v: i for i, v in enumerate(vertices)}
        local_adj = [sum(1 << local[u] for u in iter_bits(g.adj[v])) for v in vertices]
        code, order = _canonical_order(local_adj)
        pieces.append((len(vertices), code, [vertices[i] for i in order]))
    pieces.sort(key=lambda piece: (piece[0], piece[1]))
    global_order = [v for piece in pieces for v in piece[2]]
    labels = [0] * g.n
    for k, v in enumerate(global_order):
        labels[v] = k
    width = (g.n * (g.n - 1) // 2 + 7) // 8
    code = _adjacency_code(g.adj, global_order)
    return CanonicalForm(g.n, code.to_bytes(width, "big")), tuple(labels)


def canonical_form(g: Graph) -> CanonicalForm:
    """
    Canonical form of ``g``; invariant under any relabelling.

    Examples:
        >>> p = make_graph(4, [(0, 1), (1, 2), (2, 3)])
        >>> q = make_graph(4, [(2, 0), (0, 3), (3, 1)])
        >>> canonical_form(p) == canonical_form(q)
        True
    """
    return canonical_labeling(g)[0]


def canonical_graph(g: Graph) -> Graph:
    """Copy of ``g`` relabelled canonically."""
    _, labels = canonical_labeling(g)
    adj = [0] * g.n
    for v in range(g.n):
        adj[labels[v]] = sum(1 << labels[u] for u in iter_bits(g.adj[v]))
    return Graph._trusted(g.n, tuple(adj))


def is_isomorphic(g: Graph, h: Graph) -> bool:
    """True if ``g`` and ``h`` are isomorphic."""
    if g.n != h.n or g.num_edges != h.num_edges:
        return False
    if degree_sequence(g) != degree_sequence(h):
        return False
    return canonical_form(g) == canonical_form(h)


def _embedding(host: Graph, pattern: Graph) -> Optional[List[int]]:
    order = sorted(range(pattern.n), key=lambda p: (-pattern.degree(p), p))
    position = {p: k for k, p in enumerate(order)}
    # for each pattern vertex, the earlier pattern vertices it must see
    wanted = [
        [position[q] for q in iter_bits(pattern.adj[p]) if position[q] < position[p]]
        for p in order
    ]
    degree_floor = [pattern.degree(p) for p in order]
    host_degree = host.degrees()
    image: List[int] = []

    def extend(k: int, used: int) -> bool:
        if k == len(order):
            return True
        expected = 0
        for j in wanted[k]:
            expected |= bit(image[j])
        for h in range(host.n):
            if used >> h & 1 or host_degree[h] < degree_floor[k]:
                continue
            if host.adj[h] & used != expected:
                continue
            image.append(h)
            if extend(k + 1, used | bit(h)):
                return True
            image.pop()
        return False

    if pattern.n > host.n:
        return None
    return image if extend(0, 0) else None


def induced_contains(host: Graph, pattern: Graph) -> Optional[frozenset]:
    """
    Find vertices of ``host`` inducing a copy of ``pattern``.

    Pattern vertices are placed in descending-degree order; a host vertex
    is accepted only if its adjacency to the already-placed vertices matches
    the pattern exactly (induced containment, not monotone).

    Returns:
        The witness vertex set, or None if ``pattern`` is not induced in ``host``

    Examples:
        >>> k2 = gen_basic('path', 2)
        >>> sorted(induced_contains(gen_basic('path', 5), k2 + k2))
        [0, 1, 3, 4]
    """
    image = _embedding(host, pattern)
    return None if image is None else frozenset(image)


def _two_k2() -> Graph:
    k2 = gen_basic("path", 2)
    return disjoint_union(k2, k2)


FORBIDDEN_PATTERNS = ("2K2", "R", "P2(2,2)", "P4+K1", "P5")
MATE_EXCLUDED_PATTERNS = ("2K2", "R", "P2(2,2)")


def forbidden_pattern_graphs() -> Dict[str, Graph]:
    """The patterns checked by ``forbidden_report``, keyed by name."""
    return {
        "2K2": _two_k2(),
        "R": gen_R(),
        "P2(2,2)": gen_double_star(2, 2),
        "P4+K1": disjoint_union(gen_basic("path", 4), gen_basic("empty", 1)),
        "P5": gen_basic("path", 5),
    }


@dataclass
class ForbiddenReport:
    """Witness vertex set (or None) for each forbidden pattern."""

    witnesses: Dict[str, Optional[frozenset]]

    @property
    def flagged(self) -> List[str]:
        """Names of the patterns that occur, in pattern order."""
        return [name for name in FORBIDDEN_PATTERNS if self.witnesses.get(name) is not None]

    @property
    def mate_patterns_clear(self) -> bool:
        """True if 2K2, R and P2(2,2) are all absent."""
        return all(self.witnesses.get(name) is None for name in MATE_EXCLUDED_PATTERNS)

    @property
    def all_clear(self) -> bool:
        return not self.flagged


def forbidden_report(g: Graph) -> ForbiddenReport:
    """
    Run ``induced_contains`` for 2K2, R, P2(2,2), P4+K1 and P5.

    Examples:
        >>> forbidden_report(gen_double_star(1, 5)).all_clear
        True
    """
    return ForbiddenReport(
        {name: induced_contains(g, pattern) for name, pattern in forbidden_pattern_graphs().items()}
    )


__all__ = [
    "CanonicalForm",
    "canonical_labeling",
    "canonical_form",
    "canonical_graph",
    "is_isomorphic",
    "induced_contains",
    "ForbiddenReport",
    "forbidden_report",
    "forbidden_pattern_graphs",
    "FORBIDDEN_PATTERNS",
    "MATE_EXCLUDED_PATTERNS",
]

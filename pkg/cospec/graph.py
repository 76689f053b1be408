"""Graph representation, the named graph families, and structural queries.

Graphs are immutable: ``adj[i]`` is an int bitset of the neighbours of ``i``.
Every constructor fixes an explicit labelling so fixtures are reproducible.
"""

from __future__ import annotations

import math
from collections import deque
from dataclasses import dataclass
from typing import FrozenSet, Iterable, List, Optional, Sequence, Tuple, Union

import networkx as nx
import numpy as np

from cospec.context import get_settings
from cospec.exceptions import (
    GraphSizeError,
    InvalidParameterError,
    LoopEdgeError,
    VertexRangeError,
)
from cospec.utils import bit, full_mask, iter_bits, mask_of, members, popcount

Edge = Tuple[int, int]


class Graph:
    """
    A labeled simple undirected graph stored as row bitsets.

    Examples:
        >>> p4 = make_graph(4, [(0, 1), (1, 2), (2, 3)])
        >>> p4.num_edges
        3
        >>> sorted(p4.neighbors(1))
        [0, 2]
    """

    __slots__ = ("_n", "_adj", "_m")

    def __init__(self, n: int, adj: Sequence[int]):
        """
        Initialize a Graph from validated row bitsets.

        Args:
            n: Vertex count
            adj: ``n`` bitsets, ``adj[i]`` the neighbours of ``i``

        Raises:
            GraphSizeError: If ``n`` exceeds the configured ``max_vertices``
            VertexRangeError: If a row references a vertex ``>= n``
            LoopEdgeError: If a row contains its own vertex
            InvalidParameterError: If the rows are not symmetric
        """
        limit = get_settings().max_vertices
        if n > limit:
            raise GraphSizeError(n, limit)
        if len(adj) != n:
            raise InvalidParameterError("adj", len(adj), f"must have exactly {n} rows")
        everything = full_mask(n)
        for i, row in enumerate(adj):
            if row & ~everything:
                raise VertexRangeError(max(iter_bits(row)), n)
            if row >> i & 1:
                raise LoopEdgeError(i)
            for j in iter_bits(row):
                if not adj[j] >> i & 1:
                    raise InvalidParameterError("adj", (i, j), "adjacency must be symmetric")
        self._set(n, tuple(adj))

    def _set(self, n: int, adj: Tuple[int, ...]) -> None:
        self._n = n
        self._adj = adj
        self._m = sum(popcount(row) for row in adj) // 2

    @classmethod
    def _trusted(cls, n: int, adj: Tuple[int, ...]) -> Graph:
        """Build without validation; for rows produced by this package."""
        g = cls.__new__(cls)
        g._set(n, adj)
        return g

    @property
    def n(self) -> int:
        """Vertex count."""
        return self._n

    @property
    def adj(self) -> Tuple[int, ...]:
        """Row bitsets."""
        return self._adj

    @property
    def num_edges(self) -> int:
        """Edge count."""
        return self._m

    def neighbors(self, v: int) -> FrozenSet[int]:
        """Neighbours of ``v``."""
        return members(self._adj[v])

    def degree(self, v: int) -> int:
        """Degree of ``v``."""
        return popcount(self._adj[v])

    def degrees(self) -> Tuple[int, ...]:
        """Degrees indexed by vertex."""
        return tuple(popcount(row) for row in self._adj)

    def has_edge(self, i: int, j: int) -> bool:
        """True if ``i`` and ``j`` are adjacent."""
        return bool(self._adj[i] >> j & 1)

    def edges(self) -> List[Edge]:
        """Edges as ``(i, j)`` pairs with ``i < j``, sorted."""
        return [(i, j) for i in range(self._n) for j in iter_bits(self._adj[i] & ~(bit(i + 1) - 1))]

    def nonisolated(self) -> int:
        """Bitset of vertices with at least one neighbour."""
        return mask_of(i for i, row in enumerate(self._adj) if row)

    def with_edge(self, i: int, j: int) -> Graph:
        """Copy of this graph with edge ``{i, j}`` added."""
        adj = list(self._adj)
        adj[i] |= bit(j)
        adj[j] |= bit(i)
        return Graph._trusted(self._n, tuple(adj))

    def without_edge(self, i: int, j: int) -> Graph:
        """Copy of this graph with edge ``{i, j}`` removed."""
        adj = list(self._adj)
        adj[i] &= ~bit(j)
        adj[j] &= ~bit(i)
        return Graph._trusted(self._n, tuple(adj))

    def __add__(self, other: Graph) -> Graph:
        """Disjoint union, ``G + H``."""
        return disjoint_union(self, other)

    def __eq__(self, other: object) -> bool:
        """Labeled equality (same n, same rows); use ``is_isomorphic`` for isomorphism."""
        if not isinstance(other, Graph):
            return NotImplemented
        return self._n == other._n and self._adj == other._adj

    def __hash__(self) -> int:
        return hash((self._n, self._adj))

    def __repr__(self) -> str:
        return f"Graph(n={self._n}, edges={self.edges()})"


@dataclass(frozen=True)
class Bipartition:
    """Two colour classes with no edge inside either; isolated vertices sit on the left."""

    left: FrozenSet[int]
    right: FrozenSet[int]


def make_graph(n: int, edges: Iterable[Edge]) -> Graph:
    """
    Build a graph from an edge list.

    Args:
        n: Vertex count
        edges: Vertex pairs; duplicates collapse

    Returns:
        Graph with exactly the given edges

    Raises:
        VertexRangeError: If an endpoint is outside ``0..n-1``
        LoopEdgeError: If a pair is ``(i, i)``

    Examples:
        >>> make_graph(5, [(0, 1), (0, 2), (0, 3), (0, 4)]).degrees()
        (4, 1, 1, 1, 1)
    """
    if n < 0:
        raise InvalidParameterError("n", n, "must be >= 0")
    adj = [0] * n
    for i, j in edges:
        for v in (i, j):
            if not 0 <= v < n:
                raise VertexRangeError(v, n)
        if i == j:
            raise LoopEdgeError(i)
        adj[i] |= bit(j)
        adj[j] |= bit(i)
    return Graph(n, adj)


def _require(name: str, value: int, minimum: int) -> None:
    if not isinstance(value, int) or value < minimum:
        raise InvalidParameterError(name, value, f"must be an integer >= {minimum}")


def gen_basic(kind: str, *params: int) -> Graph:
    """
    Build a member of a basic family with its canonical labelling.

    Args:
        kind: 'empty', 'path', 'cycle', 'complete', 'star' or 'complete_bipartite'
        *params: ``n`` for most families, ``k`` leaves for 'star',
            ``(m, k)`` for 'complete_bipartite'

    Returns:
        path(n) is 0-1-...-(n-1); cycle(n) closes it; star(k) has centre 0;
        complete_bipartite(m, k) has parts ``{0..m-1}`` and ``{m..m+k-1}``

    Raises:
        InvalidParameterError: Unknown kind, wrong arity, negative size,
            or a cycle shorter than 3
    """
    arity = 2 if kind == "complete_bipartite" else 1
    if len(params) != arity:
        raise InvalidParameterError("params", params, f"'{kind}' takes {arity} parameter(s)")
    for index, value in enumerate(params):
        _require(f"{kind}[{index}]", value, 0)

    if kind == "empty":
        return make_graph(params[0], [])
    if kind == "path":
        n = params[0]
        return make_graph(n, [(i, i + 1) for i in range(n - 1)])
    if kind == "cycle":
        n = params[0]
        if n < 3:
            raise InvalidParameterError("cycle length", n, "must be >= 3")
        return make_graph(n, [(i, (i + 1) % n) for i in range(n)])
    if kind == "complete":
        n = params[0]
        return make_graph(n, [(i, j) for j in range(n) for i in range(j)])
    if kind == "star":
        return gen_basic("complete_bipartite", 1, params[0])
    if kind == "complete_bipartite":
        m, k = params
        return make_graph(m + k, [(i, m + j) for i in range(m) for j in range(k)])
    raise InvalidParameterError("kind", kind, "unknown graph family")


def gen_double_star(a: int, b: int) -> Graph:
    """
    The double star P_2(a, b).

    Centres are 0 and 1; leaves ``2..a+1`` hang on 0 and ``a+2..a+b+1`` on 1.

    Examples:
        >>> degree_sequence(gen_double_star(1, 4))
        (5, 2, 1, 1, 1, 1, 1)
    """
    _require("a", a, 0)
    _require("b", b, 0)
    edges = [(0, 1)]
    edges += [(0, 2 + i) for i in range(a)]
    edges += [(1, 2 + a + j) for j in range(b)]
    return make_graph(a + b + 2, edges)


def gen_A_construction(a: int) -> Graph:
    """
    K_{2,a} with two pendant vertices on one vertex of the 2-side.

    Labels: v1=0, v2=1, u1=2, u2=3, w_i=3+i. The pendants u1, u2 hang on v2.
    For ``a >= 2``, ``A_a + (a-1)K1`` is cospectral to P_2(1, 2a).
    """
    _require("a", a, 1)
    edges = [(0, 3 + i) for i in range(1, a + 1)]
    edges += [(1, 3 + i) for i in range(1, a + 1)]
    edges += [(1, 2), (1, 3)]
    return make_graph(a + 4, edges)


def gen_B_construction(a: int) -> Graph:
    """
    K_{4,a} plus a vertex adjacent to two vertices of the 4-side.

    Labels: v=0, w=1, y=2, c=3, d=4, u_i=4+i; v is joined to c and d.
    ``B_a + (3a-2)K1`` is cospectral to P_2(1, 4a).
    """
    _require("a", a, 1)
    edges = [(side, 4 + i) for side in (1, 2, 3, 4) for i in range(1, a + 1)]
    edges += [(0, 3), (0, 4)]
    return make_graph(a + 5, edges)


def gen_R() -> Graph:
    """C4 (0-1-2-3-0) with pendants 4 on 2 and 5 on 3."""
    return make_graph(6, [(0, 1), (1, 2), (2, 3), (3, 0), (2, 4), (3, 5)])


def disjoint_union(g: Graph, h: Graph) -> Graph:
    """
    Vertex-disjoint union with ``h``'s labels shifted by ``g.n``.

    Raises:
        GraphSizeError: If the union exceeds ``max_vertices``
    """
    shift = g.n
    return Graph(g.n + h.n, g.adj + tuple(row << shift for row in h.adj))


def induced_subgraph(g: Graph, keep: Iterable[int]) -> Graph:
    """Subgraph induced by ``keep``, relabelled by ascending original index."""
    kept = sorted(set(keep))
    for v in kept:
        if not 0 <= v < g.n:
            raise VertexRangeError(v, g.n)
    position = {v: i for i, v in enumerate(kept)}
    keep_mask = mask_of(kept)
    adj = tuple(mask_of(position[u] for u in iter_bits(g.adj[v] & keep_mask)) for v in kept)
    return Graph._trusted(len(kept), adj)


def delete_vertices(g: Graph, removed: Iterable[int]) -> Graph:
    """
    Induced subgraph on ``V \\ removed``, relabelled order-preservingly.

    Examples:
        >>> delete_vertices(gen_basic('star', 4), [0]).num_edges
        0
    """
    removed_mask = mask_of(removed)
    if removed_mask & ~full_mask(g.n):
        raise VertexRangeError(max(iter_bits(removed_mask)), g.n)
    return induced_subgraph(g, (v for v in range(g.n) if not removed_mask >> v & 1))


def component_masks(g: Graph) -> List[int]:
    """Connected components as bitsets, ordered by smallest vertex."""
    unseen = full_mask(g.n)
    result = []
    while unseen:
        frontier = unseen & -unseen
        comp = 0
        while frontier:
            comp |= frontier
            nxt = 0
            for v in iter_bits(frontier):
                nxt |= g.adj[v]
            frontier = nxt & ~comp
        result.append(comp)
        unseen &= ~comp
    return result


def components(g: Graph) -> List[FrozenSet[int]]:
    """Connected components, ordered by smallest vertex."""
    return [members(mask) for mask in component_masks(g)]


def is_connected(g: Graph) -> bool:
    """True for connected graphs (the empty graph on 0 vertices included)."""
    return len(component_masks(g)) <= 1


def is_bipartite(g: Graph) -> Optional[Bipartition]:
    """
    Two-colour ``g`` by BFS.

    Returns:
        A Bipartition covering all vertices (each component's smallest vertex
        on the left), or None if ``g`` has an odd cycle
    """
    colour = [-1] * g.n
    for start in range(g.n):
        if colour[start] >= 0:
            continue
        colour[start] = 0
        queue = deque([start])
        while queue:
            v = queue.popleft()
            for u in iter_bits(g.adj[v]):
                if colour[u] < 0:
                    colour[u] = 1 - colour[v]
                    queue.append(u)
                elif colour[u] == colour[v]:
                    return None
    left = frozenset(v for v in range(g.n) if colour[v] == 0)
    return Bipartition(left, frozenset(range(g.n)) - left)


def eccentricity(g: Graph, v: int) -> Union[int, float]:
    """Largest distance from ``v``; ``math.inf`` if some vertex is unreachable."""
    reached = bit(v)
    frontier = reached
    depth = 0
    while True:
        nxt = 0
        for u in iter_bits(frontier):
            nxt |= g.adj[u]
        nxt &= ~reached
        if not nxt:
            break
        reached |= nxt
        frontier = nxt
        depth += 1
    return depth if reached == full_mask(g.n) else math.inf


def diameter(g: Graph) -> Union[int, float]:
    """
    Largest distance between two vertices; ``math.inf`` when disconnected.

    Examples:
        >>> diameter(gen_double_star(1, 5))
        3
    """
    return max((eccentricity(g, v) for v in range(g.n)), default=0)


def degree_sequence(g: Graph) -> Tuple[int, ...]:
    """Degrees sorted in non-increasing order."""
    return tuple(sorted(g.degrees(), reverse=True))


def adjacency_matrix(g: Graph) -> np.ndarray:
    """Dense 0/1 adjacency matrix as a numpy int array."""
    matrix = np.zeros((g.n, g.n), dtype=np.int64)
    for i, j in g.edges():
        matrix[i, j] = matrix[j, i] = 1
    return matrix


def to_networkx(g: Graph) -> nx.Graph:
    """Convert to a networkx graph on nodes ``0..n-1``."""
    result = nx.Graph()
    result.add_nodes_from(range(g.n))
    result.add_edges_from(g.edges())
    return result


def from_networkx(graph: nx.Graph) -> Graph:
    """
    Convert a networkx graph, relabelling nodes in sorted order.

    Raises:
        LoopEdgeError: If the graph has a self-loop
    """
    nodes = sorted(graph.nodes())
    position = {node: i for i, node in enumerate(nodes)}
    return make_graph(len(nodes), [(position[u], position[v]) for u, v in graph.edges()])

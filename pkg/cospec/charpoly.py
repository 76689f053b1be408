"""
Characteristic polynomials of graphs.

Three independent algorithms (trace recurrence, elementary-subgraph
expansion, vertex-deletion recursion) and the closed forms for double stars
and their relatives. All of them return the monic ``det(xI - A)``.
"""

from __future__ import annotations

import logging
import math
from dataclasses import dataclass, field
from typing import Callable, Dict, FrozenSet, Iterable, List, Optional, Tuple, Union

import numpy as np

from cospec.context import get_settings
from cospec.exceptions import InexactDivisionError, InvalidParameterError, SachsLimitError
from cospec.graph import (
    Graph,
    adjacency_matrix,
    component_masks,
    delete_vertices,
    gen_double_star,
    induced_subgraph,
)
from cospec.iso import CanonicalForm, canonical_form
from cospec.polynomial import IntPolynomial, count_roots_above, numeric_roots
from cospec.utils import bit, bits_list, full_mask, iter_bits, lowest_bit, members, popcount

logger = logging.getLogger(__name__)

PivotRule = Union[str, Callable[[Graph], int]]
PIVOT_RULES = ("max_degree", "min_degree", "first")
METHODS = ("exact", "sachs", "schwenk")

INTERLACING_SLACK = 1e-7


# ---------------------------------------------------------------------------
# Trace recurrence
# ---------------------------------------------------------------------------

def _connected_charpoly(g: Graph) -> List[int]:
    """
    Coefficients (descending) of a connected graph with at least one edge.

    Faddeev-LeVerrier over numpy object arrays: ``M_1 = I``,
    ``c_{n-k} = -tr(A M_k) / k``, ``M_{k+1} = A M_k + c_{n-k} I``.
    A has 0/1 rows, so ``A M`` is a sum of rows of ``M``.
    """
    n = g.n
    neighbours = [bits_list(row) for row in g.adj]
    diagonal = np.arange(n)
    m = np.zeros((n, n), dtype=object)
    m[diagonal, diagonal] = 1
    coeffs = [1]
    for k in range(1, n + 1):
        am = np.empty((n, n), dtype=object)
        for i in range(n):
            am[i] = m[neighbours[i]].sum(axis=0)
        trace = sum(am[i, i] for i in range(n))
        c, remainder = divmod(-trace, k)
        if remainder:
            raise InexactDivisionError(k, -trace, k)
        coeffs.append(int(c))
        am[diagonal, diagonal] += c
        m = am
    return coeffs


def charpoly_exact(g: Graph) -> IntPolynomial:
    """
    Characteristic polynomial by the division-exact trace recurrence.

    The graph is split into connected components first; isolated vertices
    contribute a factor ``x`` each.

    Args:
        g: Any graph

    Returns:
        Monic integer polynomial of degree ``g.n``

    Raises:
        InexactDivisionError: If a recurrence division leaves a remainder
            (impossible for integer matrices; signals a corrupted input)

    Examples:
        >>> str(charpoly_exact(gen_double_star(1, 4)))
        'x^7 - 6*x^5 + 4*x^3'
    """
    result = IntPolynomial.constant(1)
    isolated = 0
    for comp in component_masks(g):
        if popcount(comp) == 1:
            isolated += 1
            continue
        part = _connected_charpoly(induced_subgraph(g, iter_bits(comp)))
        result = result * IntPolynomial(reversed(part))
    return result.shift(isolated)


# ---------------------------------------------------------------------------
# Elementary-subgraph expansion
# ---------------------------------------------------------------------------

def _cycles_through(adj: Tuple[int, ...], v: int, allowed: int) -> List[Tuple[int, int]]:
    """
    Every cycle through ``v`` inside ``allowed``, once each.

    Returns:
        ``(vertex mask, length)`` pairs; a cycle is kept in the orientation
        whose second vertex is smaller than its last
    """
    found: List[Tuple[int, int]] = []

    def extend(current: int, second: int, path: int, length: int) -> None:
        for u in iter_bits(adj[current] & allowed):
            if u == v:
                if length >= 3 and second < current:
                    found.append((path, length))
            elif not path >> u & 1:
                extend(u, second, path | bit(u), length + 1)

    for u in iter_bits(adj[v] & allowed):
        extend(u, u, bit(v) | bit(u), 2)
    return found


def _accumulate(total: List[int], part: Tuple[int, ...], shift: int, factor: int) -> None:
    if len(total) < len(part) + shift:
        total.extend([0] * (len(part) + shift - len(total)))
    for k, value in enumerate(part):
        total[k + shift] += factor * value


def charpoly_sachs(g: Graph) -> IntPolynomial:
    """
    Characteristic polynomial from elementary subgraphs.

    The coefficient of ``x**(n-k)`` is the sum, over spanning elementary
    subgraphs on ``k`` vertices (disjoint edges and cycles), of
    ``(-1)**components * 2**cycles``. The sum is built by memoized recursion
    on the set of still-available vertices: its lowest vertex is either left
    uncovered, matched along an edge, or placed on a cycle whose lowest
    vertex it is.

    Raises:
        SachsLimitError: If ``g.n`` exceeds ``max_sachs_vertices``

    Examples:
        >>> str(charpoly_sachs(gen_basic('cycle', 4)))
        'x^4 - 4*x^2'
    """
    limit = get_settings().max_sachs_vertices
    if g.n > limit:
        raise SachsLimitError(g.n, limit)
    n = g.n
    everything = full_mask(n)
    cycles = [_cycles_through(g.adj, v, everything & ~(bit(v) - 1)) for v in range(n)]
    memo: Dict[int, Tuple[int, ...]] = {0: (1,)}

    def weights(available: int) -> Tuple[int, ...]:
        cached = memo.get(available)
        if cached is not None:
            return cached
        v = lowest_bit(available)
        rest = available & ~bit(v)
        total = list(weights(rest))
        for u in iter_bits(g.adj[v] & rest):
            _accumulate(total, weights(rest & ~bit(u)), 2, -1)
        for mask, length in cycles[v]:
            if mask & available == mask:
                _accumulate(total, weights(available & ~mask), length, -2)
        memo[available] = tuple(total)
        return memo[available]

    a = weights(everything)
    coeffs = [0] * (n + 1)
    for k, value in enumerate(a):
        coeffs[n - k] = value
    return IntPolynomial(coeffs)


# ---------------------------------------------------------------------------
# Vertex-deletion recursion
# ---------------------------------------------------------------------------

@dataclass
class SchwenkTrace:
    """
    Record of the top-level expansion of ``charpoly_schwenk``.

    Attributes:
        root_vertex: Pivot ``v`` of the top-level expansion (None if edgeless)
        subcalls: ``(deleted vertices, tag)`` per term, tag one of
            'vertex', 'edge', 'cycle'; labels are those of the input graph
        memo_hits: Canonical-form cache hits over the whole recursion
    """

    root_vertex: Optional[int] = None
    subcalls: List[Tuple[FrozenSet[int], str]] = field(default_factory=list)
    memo_hits: int = 0


def _pivot(g: Graph, rule: PivotRule) -> int:
    if callable(rule):
        return rule(g)
    candidates = [v for v in range(g.n) if g.adj[v]]
    if rule == "max_degree":
        return max(candidates, key=lambda v: (g.degree(v), -v))
    if rule == "min_degree":
        return min(candidates, key=lambda v: (g.degree(v), v))
    if rule == "first":
        return candidates[0]
    raise InvalidParameterError("pivot_rule", rule, f"must be callable or one of {PIVOT_RULES}")


def charpoly_schwenk(
    g: Graph, pivot_rule: PivotRule = "max_degree", trace: Optional[SchwenkTrace] = None
) -> IntPolynomial:
    """
    Characteristic polynomial by expansion at a vertex.

    ``phi(G) = x*phi(G - v) - sum_u phi(G - v - u) - 2*sum_Z phi(G - V(Z))``
    over neighbours ``u`` of ``v`` and cycles ``Z`` through ``v``. Subgraph
    results are cached by canonical form, and disconnected subgraphs are
    split into components.

    Args:
        g: Any graph
        pivot_rule: 'max_degree' (default), 'min_degree', 'first', or a
            callable returning the pivot vertex of a graph
        trace: Optional SchwenkTrace filled in with the top-level expansion

    Examples:
        >>> str(charpoly_schwenk(gen_A_construction(2), pivot_rule='min_degree'))
        'x^6 - 6*x^4 + 4*x^2'
    """
    memo: Dict[CanonicalForm, IntPolynomial] = {}
    x = IntPolynomial.x()
    hits = [0]

    def expand(h: Graph, record: Optional[SchwenkTrace]) -> IntPolynomial:
        v = _pivot(h, pivot_rule)
        if record is not None:
            record.root_vertex = v
        terms: List[Tuple[FrozenSet[int], str]] = [(frozenset([v]), "vertex")]
        terms += [(frozenset([v, u]), "edge") for u in iter_bits(h.adj[v])]
        terms += [(members(mask), "cycle") for mask, _ in _cycles_through(h.adj, v, full_mask(h.n))]
        result = IntPolynomial()
        for deleted, tag in terms:
            if record is not None:
                record.subcalls.append((deleted, tag))
            value = solve(delete_vertices(h, deleted))
            if tag == "vertex":
                result = result + x * value
            elif tag == "edge":
                result = result - value
            else:
                result = result - 2 * value
        return result

    def solve(h: Graph) -> IntPolynomial:
        if h.num_edges == 0:
            return IntPolynomial.monomial(h.n)
        key = canonical_form(h)
        if key in memo:
            hits[0] += 1
            return memo[key]
        parts = component_masks(h)
        if len(parts) > 1:
            result = IntPolynomial.constant(1)
            for comp in parts:
                result = result * solve(induced_subgraph(h, iter_bits(comp)))
        else:
            result = expand(h, None)
        memo[key] = result
        return result

    if g.num_edges == 0:
        result = IntPolynomial.monomial(g.n)
    else:
        result = expand(g, trace)
    if trace is not None:
        trace.memo_hits = hits[0]
    logger.debug("schwenk n=%d: %d cached subgraphs, %d cache hits", g.n, len(memo), hits[0])
    return result


def charpoly(g: Graph, method: str = "exact") -> IntPolynomial:
    """
    Characteristic polynomial by the named method.

    Args:
        g: Any graph
        method: 'exact', 'sachs' or 'schwenk'

    Raises:
        InvalidParameterError: If ``method`` is unknown
    """
    if method == "exact":
        return charpoly_exact(g)
    if method == "sachs":
        return charpoly_sachs(g)
    if method == "schwenk":
        return charpoly_schwenk(g)
    raise InvalidParameterError("method", method, f"must be one of {METHODS}")


# ---------------------------------------------------------------------------
# Closed forms
# ---------------------------------------------------------------------------

def double_star_charpoly(a: int, b: int) -> IntPolynomial:
    """
    ``x^(a+b+2) - (a+b+1)*x^(a+b) + ab*x^(a+b-2)``, the charpoly of P_2(a, b).

    For ``a + b < 2`` the powers collide, so the graph is built and its
    polynomial computed directly.

    Examples:
        >>> str(double_star_charpoly(3, 4))
        'x^9 - 8*x^7 + 12*x^5'
    """
    if a < 0 or b < 0:
        raise InvalidParameterError("(a, b)", (a, b), "must be non-negative")
    s = a + b
    if s < 2:
        return charpoly_exact(gen_double_star(a, b))
    return (
        IntPolynomial.monomial(s + 2)
        - IntPolynomial.monomial(s, s + 1)
        + IntPolynomial.monomial(s - 2, a * b)
    )


def double_star_extreme_eigs(a: int, b: int) -> Tuple[float, float]:
    """
    Largest and second-largest eigenvalues of P_2(a, b).

    ``lambda^2 = ((a+b+1) +- sqrt((a-b)^2 + 2(a+b) + 1)) / 2``. The smaller
    root is evaluated as ``2ab / (s + r)`` to avoid cancellation.

    Raises:
        InvalidParameterError: If ``a + b < 1``

    Examples:
        >>> double_star_extreme_eigs(0, 3)
        (2.0, 0.0)
    """
    if a < 0 or b < 0 or a + b < 1:
        raise InvalidParameterError("(a, b)", (a, b), "must be non-negative with a + b >= 1")
    s = a + b + 1
    r = math.sqrt((a - b) ** 2 + 2 * (a + b) + 1)
    largest = math.sqrt((s + r) / 2)
    second = math.sqrt(2 * a * b / (s + r))
    return largest, second


def count_non_c4_two_matchings(g: Graph) -> int:
    """
    Pairs of vertex-disjoint edges whose four endpoints do not induce C4.

    For bipartite graphs this is the coefficient of ``x**(n-4)``.

    Examples:
        >>> count_non_c4_two_matchings(gen_basic('path', 4))
        1
    """
    edges = g.edges()
    count = 0
    for index, (a, b) in enumerate(edges):
        for c, d in edges[index + 1:]:
            if len({a, b, c, d}) < 4:
                continue
            quad = bit(a) | bit(b) | bit(c) | bit(d)
            if all(popcount(g.adj[w] & quad) == 2 for w in (a, b, c, d)):
                continue
            count += 1
    return count


def interlacing_check(g: Graph, removed: Iterable[int]) -> bool:
    """
    Check Cauchy interlacing between ``g`` and ``g - removed``.

    With eigenvalues sorted in descending order, ``lambda_i(G) >= theta_i >=
    lambda_(n-m+i)(G)`` must hold for the ``m`` eigenvalues ``theta`` of the
    induced subgraph, up to a slack of 1e-7.

    Raises:
        InvalidParameterError: If ``removed`` is empty or all of ``V(g)``
    """
    removed = frozenset(removed)
    if not removed or len(removed) >= g.n:
        raise InvalidParameterError("removed", sorted(removed), "must be a nonempty proper subset")
    lam = sorted(numeric_roots(charpoly_exact(g)), reverse=True)
    theta = sorted(numeric_roots(charpoly_exact(delete_vertices(g, removed))), reverse=True)
    n, m = g.n, len(theta)
    return all(
        lam[i] + INTERLACING_SLACK >= theta[i] >= lam[n - m + i] - INTERLACING_SLACK
        for i in range(m)
    )


def numeric_spectrum(g: Graph) -> List[float]:
    """Adjacency eigenvalues, ascending, from ``numpy.linalg.eigvalsh``; display only."""
    if g.n == 0:
        return []
    return sorted(float(value) for value in np.linalg.eigvalsh(adjacency_matrix(g).astype(float)))


def spectral_obstruction(g: Graph) -> bool:
    """
    True if ``g`` has two eigenvalues at least 1 or more than two positive ones.

    Decided exactly on the characteristic polynomial. A graph with this
    property cannot be an induced subgraph of anything cospectral with
    P_2(1, n), by interlacing.

    This is a standalone check, used as an oracle for the forbidden
    patterns. It is not a search prune: the enumeration grows graphs by
    adding edges, and the property is only inherited by induced subgraphs.
    """
    phi = charpoly_exact(g)
    return count_roots_above(phi, 1, inclusive=True) >= 2 or count_roots_above(phi, 0) > 2


__all__ = [
    "charpoly",
    "charpoly_exact",
    "charpoly_sachs",
    "charpoly_schwenk",
    "SchwenkTrace",
    "double_star_charpoly",
    "double_star_extreme_eigs",
    "count_non_c4_two_matchings",
    "interlacing_check",
    "numeric_spectrum",
    "spectral_obstruction",
    "METHODS",
    "PIVOT_RULES",
]

"""
Isomorph-free enumeration and cospectral-mate search.

Graphs with a fixed vertex count ``n`` and edge count ``m`` are generated by
adding one edge at a time. A child ``G + e`` is kept only when ``e`` is the
child's canonical deletion edge up to isomorphism, so each isomorphism class
is reached from exactly one parent class; children of one parent are then
deduplicated by canonical form.
"""

from __future__ import annotations

import logging
import math
import time
from concurrent.futures import ProcessPoolExecutor, as_completed
from dataclasses import dataclass
from enum import Enum
from typing import Callable, Iterator, List, Optional, Sequence, Tuple

import numpy as np
from tqdm import tqdm

from cospec.charpoly import charpoly_exact
from cospec.context import get_settings
from cospec.exceptions import (
    ConfigurationError,
    DecompositionError,
    EnumerationLimitError,
    InvalidParameterError,
)
from cospec.graph import (
    Graph,
    adjacency_matrix,
    component_masks,
    disjoint_union,
    gen_A_construction,
    gen_B_construction,
    gen_basic,
    gen_double_star,
    is_bipartite,
)
from cospec.iso import CanonicalForm, canonical_form, canonical_labeling, is_isomorphic
from cospec.polynomial import IntPolynomial, numeric_roots
from cospec.utils import bit, iter_bits, members, popcount

logger = logging.getLogger(__name__)

Edge = Tuple[int, int]
Accept = Callable[[Graph], bool]
Found = Tuple[CanonicalForm, Graph]

# slack on spectral bounds derived from floating-point eigenvalues
SPECTRAL_SLACK = 1e-7
UNITS_PER_WORKER = 4


@dataclass(frozen=True)
class EnumSpec:
    """
    What ``enumerate_graphs`` generates: every class with ``n`` vertices and ``m`` edges.

    Attributes:
        n: Vertex count (at most ``max_enum_vertices``)
        m: Exact edge count
        bipartite_only: Keep bipartite graphs only
        connected_only: Keep connected graphs only
        max_degree: Largest allowed vertex degree
        max_spectral_radius: Largest allowed adjacency spectral radius

    Raises:
        EnumerationLimitError: If ``n`` or ``m`` is out of range
    """

    n: int
    m: int
    bipartite_only: bool = False
    connected_only: bool = False
    max_degree: Optional[int] = None
    max_spectral_radius: Optional[float] = None

    def __post_init__(self) -> None:
        if self.n < 0 or self.m < 0:
            raise InvalidParameterError("(n, m)", (self.n, self.m), "must be non-negative")
        limit = get_settings().max_enum_vertices
        if self.n > limit:
            raise EnumerationLimitError("vertices", self.n, limit, "exhaustive enumeration")
        most = self.n * (self.n - 1) // 2
        if self.m > most:
            reason = f"a simple graph on {self.n} vertices"
            raise EnumerationLimitError("edges", self.m, most, reason)

    def admits(self, g: Graph) -> bool:
        """Hereditary filters: once violated, no supergraph can pass."""
        if self.max_degree is not None and max(g.degrees(), default=0) > self.max_degree:
            return False
        if self.bipartite_only and is_bipartite(g) is None:
            return False
        if self.max_spectral_radius is not None and g.num_edges:
            radius = float(np.linalg.eigvalsh(adjacency_matrix(g).astype(float))[-1])
            if radius > self.max_spectral_radius:
                return False
        return True

    def reachable(self, g: Graph) -> bool:
        """False if the remaining edge budget cannot make ``g`` connected."""
        if not self.connected_only:
            return True
        return len(component_masks(g)) - (self.m - g.num_edges) <= 1


def _edge_invariant(degrees: Sequence[int], edge: Edge) -> Tuple[int, int]:
    a, b = degrees[edge[0]], degrees[edge[1]]
    return (a, b) if a >= b else (b, a)


def _augmentation_form(child: Graph, edge: Edge, parent: CanonicalForm) -> Optional[CanonicalForm]:
    """
    Canonical form of ``child`` if ``edge`` is an acceptable last edge, else None.

    The canonical deletion edge is the edge of largest degree invariant whose
    canonical image is largest; ``edge`` is acceptable when deleting the
    canonical edge also leaves a graph isomorphic to ``parent``.
    """
    degrees = child.degrees()
    edges = child.edges()
    best = max(_edge_invariant(degrees, e) for e in edges)
    if _edge_invariant(degrees, edge) != best:
        return None
    form, labels = canonical_labeling(child)
    star = max(
        (e for e in edges if _edge_invariant(degrees, e) == best),
        key=lambda e: (max(labels[e[0]], labels[e[1]]), min(labels[e[0]], labels[e[1]])),
    )
    if star == edge or canonical_form(child.without_edge(*star)) == parent:
        return form
    return None


def _children(g: Graph, form: CanonicalForm, spec: EnumSpec) -> List[Found]:
    """Accepted one-edge augmentations of ``g``, one per isomorphism class."""
    seen = set()
    result: List[Found] = []
    for j in range(g.n):
        for i in range(j):
            if g.adj[i] >> j & 1:
                continue
            child = g.with_edge(i, j)
            child_form = _augmentation_form(child, (i, j), form)
            if child_form is None or child_form in seen:
                continue
            seen.add(child_form)
            if spec.admits(child) and spec.reachable(child):
                result.append((child_form, child))
    return result


def _root(spec: EnumSpec) -> Optional[Found]:
    empty = Graph._trusted(spec.n, (0,) * spec.n)
    if not spec.reachable(empty):
        return None
    return canonical_form(empty), empty


def _generate(form: CanonicalForm, g: Graph, spec: EnumSpec) -> Iterator[Found]:
    if g.num_edges == spec.m:
        if not spec.connected_only or len(component_masks(g)) <= 1:
            yield form, g
        return
    for child_form, child in _children(g, form, spec):
        yield from _generate(child_form, child, spec)


def iter_graphs(spec: EnumSpec) -> Iterator[Graph]:
    """
    Yield one graph per isomorphism class meeting ``spec``, in a fixed order.

    Examples:
        >>> sum(1 for _ in iter_graphs(EnumSpec(4, 3)))
        3
    """
    root = _root(spec)
    if root is None:
        return
    for _, g in _generate(*root, spec):
        yield g


def enumerate_graphs(spec: EnumSpec, visit: Callable[[Graph], object]) -> int:
    """
    Call ``visit`` on one representative of every class meeting ``spec``.

    Visit order is deterministic. Use ``collect_graphs`` for multi-process runs.

    Returns:
        Number of graphs visited
    """
    count = 0
    for g in iter_graphs(spec):
        visit(g)
        count += 1
    logger.debug("enumerated n=%d m=%d: %d classes", spec.n, spec.m, count)
    return count


def _frontier(spec: EnumSpec, target: int) -> List[Found]:
    """First generation level holding at least ``target`` nodes (or the leaves)."""
    root = _root(spec)
    if root is None:
        return []
    level = [root]
    depth = 0
    while depth < spec.m and 0 < len(level) < target:
        level = [child for form, g in level for child in _children(g, form, spec)]
        depth += 1
    logger.debug("frontier at depth %d with %d work units", depth, len(level))
    return level


def _expand_subtree(
    spec: EnumSpec, form: CanonicalForm, n: int, adj: Tuple[int, ...], accept: Optional[Accept]
) -> List[Tuple[CanonicalForm, Tuple[int, ...]]]:
    """Work unit: every accepted leaf below one frontier node."""
    root = Graph._trusted(n, adj)
    return [
        (leaf_form, leaf.adj)
        for leaf_form, leaf in _generate(form, root, spec)
        if accept is None or accept(leaf)
    ]


def collect_graphs(
    spec: EnumSpec, accept: Optional[Accept] = None, workers: Optional[int] = None
) -> List[Found]:
    """
    Enumerate ``spec`` and keep the graphs ``accept`` approves.

    The generation tree is cut at the first level with enough nodes to keep
    every worker busy; each subtree is an independent work unit. Results are
    sorted by canonical form, so the output does not depend on ``workers``.

    Args:
        spec: Enumeration scope
        accept: Picklable predicate (top-level function or instance); None keeps all
        workers: Process count; defaults to the active settings

    Returns:
        ``(canonical form, graph)`` pairs sorted by form

    Raises:
        ConfigurationError: If ``workers`` is not positive
    """
    settings = get_settings()
    workers = settings.workers if workers is None else workers
    if not isinstance(workers, int) or workers < 1:
        raise ConfigurationError("workers", workers, "must be a positive integer")
    started = time.perf_counter()
    frontier = _frontier(spec, UNITS_PER_WORKER * workers)
    found: List[Tuple[CanonicalForm, Tuple[int, ...]]] = []
    units = [(spec, form, g.n, g.adj, accept) for form, g in frontier]
    progress = dict(total=len(units), desc=f"n={spec.n} m={spec.m}", unit="subtree")
    if workers == 1:
        for unit in tqdm(units, disable=not settings.progress, **progress):
            found.extend(_expand_subtree(*unit))
    else:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            futures = [pool.submit(_expand_subtree, *unit) for unit in units]
            for future in tqdm(as_completed(futures), disable=not settings.progress, **progress):
                found.extend(future.result())
    found.sort(key=lambda item: item[0])
    logger.info(
        "n=%d m=%d: %d work units, %d accepted, %d workers, %.2fs",
        spec.n,
        spec.m,
        len(units),
        len(found),
        workers,
        time.perf_counter() - started,
    )
    return [(form, Graph._trusted(spec.n, adj)) for form, adj in found]


# ---------------------------------------------------------------------------
# Mates and verdicts
# ---------------------------------------------------------------------------

class _SameCharpoly:
    """Picklable predicate: charpoly equals a fixed polynomial."""

    def __init__(self, poly: IntPolynomial):
        self.coeffs = poly.coeffs

    def __call__(self, g: Graph) -> bool:
        return charpoly_exact(g).coeffs == self.coeffs


class MateForm(Enum):
    """Shape of a graph cospectral with P_2(1, n)."""

    DOUBLE_STAR = "DOUBLE_STAR"
    FORM_I = "FORM_I"
    FORM_II = "FORM_II"
    UNKNOWN = "UNKNOWN"


@dataclass(frozen=True)
class MateEntry:
    """One cospectral mate: canonical form, representative graph, classification tag."""

    form: CanonicalForm
    graph: Graph
    tag: str = ""


@dataclass
class MateReport:
    """
    Result of an exhaustive cospectral-mate search.

    Attributes:
        target: Graph searched for
        target_poly: Its characteristic polynomial
        mates: Pairwise nonisomorphic mates, sorted by canonical form
        exhaustive: True if every graph in ``scope`` was examined
        scope: The enumeration that was run
        elapsed: Wall-clock seconds
    """

    target: Graph
    target_poly: IntPolynomial
    mates: List[MateEntry]
    exhaustive: bool
    scope: EnumSpec
    elapsed: float = 0.0

    @property
    def is_ds(self) -> bool:
        return not self.mates

    @property
    def mate_forms(self) -> List[CanonicalForm]:
        return [entry.form for entry in self.mates]


def _double_star_order(target: Graph) -> Optional[int]:
    """``k`` if ``target`` is isomorphic to P_2(1, k), else None."""
    if target.n < 4 or target.num_edges != target.n - 1:
        return None
    k = target.n - 3
    return k if is_isomorphic(target, gen_double_star(1, k)) else None


def _tag(g: Graph, k: Optional[int]) -> str:
    if k is None:
        return ""
    try:
        return classify_mate(g, k).value
    except DecompositionError as exc:
        logger.warning("mate without a valid partition: %s", exc)
        return MateForm.UNKNOWN.value


def mate_scope(target: Graph, phi: Optional[IntPolynomial] = None) -> EnumSpec:
    """
    Enumeration scope that contains every graph cospectral with ``target``.

    Vertex and edge counts are fixed by the spectrum. Bipartiteness follows
    from spectral symmetry; the maximum degree is at most the square of the
    spectral radius, and the spectral radius bounds every subgraph.
    """
    phi = charpoly_exact(target) if phi is None else phi
    radius = max(numeric_roots(phi), default=0.0)
    return EnumSpec(
        n=target.n,
        m=target.num_edges,
        bipartite_only=phi.has_parity_symmetry(),
        max_degree=math.floor(radius * radius + 1e-6),
        max_spectral_radius=radius + SPECTRAL_SLACK,
    )


def cospectral_mates(target: Graph, workers: Optional[int] = None) -> MateReport:
    """
    Find every graph cospectral with, but not isomorphic to, ``target``.

    Args:
        target: Graph with at most ``max_enum_vertices`` vertices
        workers: Process count; defaults to the active settings

    Returns:
        MateReport; mates of a P_2(1, k) target are tagged with their MateForm

    Raises:
        EnumerationLimitError: If ``target`` is too large to enumerate

    Examples:
        >>> report = cospectral_mates(gen_basic('star', 4))
        >>> is_isomorphic(report.mates[0].graph, star_mate(2, 2))
        True
    """
    started = time.perf_counter()
    phi = charpoly_exact(target)
    scope = mate_scope(target, phi)
    own = canonical_form(target)
    k = _double_star_order(target)
    mates = []
    for form, g in collect_graphs(scope, _SameCharpoly(phi), workers):
        if form == own:
            continue
        tag = _tag(g, k)
        mates.append(MateEntry(form, g, tag))
    elapsed = time.perf_counter() - started
    logger.info("mates of %d-vertex target: %d found in %.2fs", target.n, len(mates), elapsed)
    return MateReport(target, phi, mates, True, scope, elapsed)


class Verdict(Enum):
    DS = "DS"
    NOT_DS = "NOT_DS"


@dataclass(frozen=True)
class DsVerdict:
    """DS verdict with the mates that refute it and the scope searched."""

    verdict: Verdict
    mates: Tuple[MateEntry, ...]
    scope: EnumSpec
    exhaustive: bool = True


def ds_verdict(target: Graph, workers: Optional[int] = None) -> DsVerdict:
    """
    Decide whether ``target`` is determined by its spectrum.

    Examples:
        >>> ds_verdict(gen_double_star(1, 5)).verdict
        <Verdict.DS: 'DS'>
    """
    report = cospectral_mates(target, workers)
    verdict = Verdict.DS if report.is_ds else Verdict.NOT_DS
    return DsVerdict(verdict, tuple(report.mates), report.scope, report.exhaustive)


# ---------------------------------------------------------------------------
# Structure of the mates
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class AbcdPartition:
    """
    Four-part split of the nontrivial component anchored at an induced P4.

    ``A`` sees only ``x`` on the path, ``B`` sees ``u`` and ``v``, ``C`` sees
    ``x`` and ``y``, ``D`` sees only ``v``, where ``path = (u, x, v, y)``.
    """

    A: frozenset
    B: frozenset
    C: frozenset
    D: frozenset
    path: Tuple[int, int, int, int]

    @property
    def sizes(self) -> Tuple[int, int, int, int]:
        return len(self.A), len(self.B), len(self.C), len(self.D)

    def reversed(self) -> AbcdPartition:
        u, x, v, y = self.path
        return AbcdPartition(self.D, self.C, self.B, self.A, (y, v, x, u))


def _induced_paths(g: Graph) -> Iterator[Tuple[int, int, int, int]]:
    for x, v in g.edges() + [(b, a) for a, b in g.edges()]:
        for u in iter_bits(g.adj[x] & ~g.adj[v] & ~bit(v)):
            for y in iter_bits(g.adj[v] & ~g.adj[x] & ~g.adj[u] & ~bit(x) & ~bit(u)):
                yield u, x, v, y


def _complete_between(g: Graph, left: int, right: int) -> bool:
    return all(g.adj[w] & right == right for w in iter_bits(left))


def _no_edges_between(g: Graph, left: int, right: int) -> bool:
    return all(not g.adj[w] & right for w in iter_bits(left))


def _partition_at(g: Graph, path: Tuple[int, int, int, int]) -> Optional[AbcdPartition]:
    u, x, v, y = path
    on_path = bit(u) | bit(x) | bit(v) | bit(y)
    classes = {bit(x): 0, bit(u) | bit(v): 1, bit(x) | bit(y): 2, bit(v): 3}
    parts = [0, 0, 0, 0]
    for w in iter_bits(g.nonisolated()):
        index = classes.get(g.adj[w] & on_path)
        if index is None:
            return None
        parts[index] |= bit(w)
    a, b, c, d = parts
    for left, right in ((a, b), (b, c), (c, d)):
        if not _complete_between(g, left, right):
            return None
    for left, right in ((a, a), (b, b), (c, c), (d, d), (a, c), (a, d), (b, d)):
        if not _no_edges_between(g, left, right):
            return None
    return AbcdPartition(members(a), members(b), members(c), members(d), path)


def abcd_decompose(g: Graph) -> AbcdPartition:
    """
    Split the nontrivial component of ``g`` into the sets A, B, C, D.

    Every induced P4 is tried as an anchor until one gives a partition whose
    consecutive parts are complete bipartite and whose other pairs are
    independent. The result is oriented so ``|A| <= |D|``, and ``|B| <= |C|``
    on ties.

    Raises:
        DecompositionError: If there is more than one nontrivial component,
            no induced P4, or no anchor yields a valid partition

    Examples:
        >>> abcd_decompose(gen_A_construction(3)).sizes
        (1, 3, 1, 2)
    """
    nontrivial = [comp for comp in component_masks(g) if popcount(comp) > 1]
    if len(nontrivial) != 1:
        raise DecompositionError(f"expected one nontrivial component, found {len(nontrivial)}")
    saw_path = False
    for path in _induced_paths(g):
        saw_path = True
        partition = _partition_at(g, path)
        if partition is None:
            continue
        sizes = partition.sizes
        if sizes[0] > sizes[3] or (sizes[0] == sizes[3] and sizes[1] > sizes[2]):
            partition = partition.reversed()
        return partition
    if not saw_path:
        raise DecompositionError("no induced P4; the component is complete bipartite")
    raise DecompositionError("no induced P4 yields a valid partition")


def gprime_charpoly_formula(a: int, b: int, c: int, d: int) -> IntPolynomial:
    """
    ``x^N - (ab+bc+cd)*x^(N-2) + abcd*x^(N-4)`` with ``N = a+b+c+d``.

    The characteristic polynomial of the chain of complete bipartite graphs
    with parts of sizes a, b, c, d.

    Raises:
        InvalidParameterError: If any part is smaller than 1
    """
    if min(a, b, c, d) < 1:
        raise InvalidParameterError("(a, b, c, d)", (a, b, c, d), "every part must be >= 1")
    total = a + b + c + d
    return (
        IntPolynomial.monomial(total)
        - IntPolynomial.monomial(total - 2, a * b + b * c + c * d)
        + IntPolynomial.monomial(total - 4, a * b * c * d)
    )


def classify_mate(g: Graph, n: int) -> MateForm:
    """
    Classify a graph cospectral with P_2(1, n) by its partition sizes.

    (1, 1, 1, n) is the double star itself, (1, n/2, 1, 2) is form I and
    (1, 2, n/4, 2) is form II. Any other sizes give UNKNOWN.

    Raises:
        DecompositionError: If ``g`` has no valid partition
    """
    a, b, c, d = abcd_decompose(g).sizes
    if (a, b, c, d) == (1, 1, 1, n):
        return MateForm.DOUBLE_STAR
    if (a, c, d) == (1, 1, 2) and 2 * b == n:
        return MateForm.FORM_I
    if (a, b, d) == (1, 2, 2) and 4 * c == n:
        return MateForm.FORM_II
    return MateForm.UNKNOWN


def star_mate(x: int, y: int) -> Graph:
    """
    ``K_{x,y} + (x-1)(y-1)K1``, cospectral with the star ``K_{1,xy}``.

    Examples:
        >>> star_mate(2, 2).num_edges
        4
    """
    if x < 1 or y < 1:
        raise InvalidParameterError("(x, y)", (x, y), "must both be >= 1")
    isolated = gen_basic("empty", (x - 1) * (y - 1))
    return disjoint_union(gen_basic("complete_bipartite", x, y), isolated)


def star_mate_family(k: int) -> List[Graph]:
    """Every ``star_mate(x, y)`` with ``2 <= x <= y`` and ``xy = k``; empty when ``k`` is prime."""
    if k < 1:
        raise InvalidParameterError("k", k, "must be >= 1")
    return [star_mate(x, k // x) for x in range(2, math.isqrt(k) + 1) if k % x == 0]


def predicted_mates(n: int) -> List[Graph]:
    """
    The known mates of P_2(1, n).

    ``A_{n/2} + (n/2 - 1)K1`` for even ``n >= 4`` and ``B_{n/4} + (3n/4 - 2)K1``
    for ``n >= 8`` divisible by 4.
    """
    if n < 1:
        raise InvalidParameterError("n", n, "must be >= 1")
    result = []
    if n % 2 == 0 and n >= 4:
        a = n // 2
        result.append(disjoint_union(gen_A_construction(a), gen_basic("empty", a - 1)))
    if n % 4 == 0 and n >= 8:
        a = n // 4
        result.append(disjoint_union(gen_B_construction(a), gen_basic("empty", 3 * a - 2)))
    return result


def predicted_is_ds(n: int) -> bool:
    """P_2(1, n) is determined by its spectrum exactly when ``n`` is odd or 2."""
    if n < 1:
        raise InvalidParameterError("n", n, "must be >= 1")
    return n % 2 == 1 or n == 2


@dataclass(frozen=True)
class SurveyRow:
    """Verdict for one double star P_2(a, b)."""

    a: int
    b: int
    verdict: Verdict
    mates: int


def double_star_survey(max_order: int, workers: Optional[int] = None) -> List[SurveyRow]:
    """
    DS verdict for every P_2(a, b) with ``1 <= a <= b`` and ``a + b + 2 <= max_order``.

    Raises:
        EnumerationLimitError: If ``max_order`` exceeds ``max_enum_vertices``
    """
    limit = get_settings().max_enum_vertices
    if max_order > limit:
        raise EnumerationLimitError("vertices", max_order, limit, "exhaustive enumeration")
    rows = []
    for order in range(4, max_order + 1):
        for a in range(1, (order - 2) // 2 + 1):
            b = order - 2 - a
            result = ds_verdict(gen_double_star(a, b), workers)
            rows.append(SurveyRow(a, b, result.verdict, len(result.mates)))
    return rows


__all__ = [
    "EnumSpec",
    "iter_graphs",
    "enumerate_graphs",
    "collect_graphs",
    "MateEntry",
    "MateReport",
    "MateForm",
    "mate_scope",
    "cospectral_mates",
    "Verdict",
    "DsVerdict",
    "ds_verdict",
    "AbcdPartition",
    "abcd_decompose",
    "gprime_charpoly_formula",
    "classify_mate",
    "star_mate",
    "star_mate_family",
    "predicted_mates",
    "predicted_is_ds",
    "SurveyRow",
    "double_star_survey",
]

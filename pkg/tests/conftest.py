"""Pytest configuration and fixtures."""

import os

import networkx as nx
import numpy as np
import pytest

from cospec.graph import Graph, from_networkx, make_graph
from cospec.search import EnumSpec, iter_graphs

FRONTIER_ENV = "COSPEC_FRONTIER"

frontier = pytest.mark.skipif(
    os.environ.get(FRONTIER_ENV) != "1",
    reason=f"frontier-scale search; set {FRONTIER_ENV}=1 to run",
)


def random_graph(rng: np.random.Generator, n: int, p: float = 0.5) -> Graph:
    """Erdos-Renyi graph drawn from ``rng``."""
    edges = [(i, j) for j in range(n) for i in range(j) if rng.random() < p]
    return make_graph(n, edges)


def relabel(g: Graph, rng: np.random.Generator) -> Graph:
    """Copy of ``g`` under a random vertex permutation."""
    perm = rng.permutation(g.n)
    return make_graph(g.n, [(int(perm[i]), int(perm[j])) for i, j in g.edges()])


@pytest.fixture(scope="session")
def atlas():
    """Every graph on at most 7 vertices, one per isomorphism class."""
    return [from_networkx(h) for h in nx.graph_atlas_g()]


@pytest.fixture
def rng():
    """Seeded random generator."""
    return np.random.default_rng(20240517)


@pytest.fixture
def tolerance():
    """Provide default tolerance for floating point comparisons."""
    return 1e-9


@pytest.fixture(scope="session")
def order_eight():
    """Every graph on 8 vertices, one per isomorphism class."""
    return [g for m in range(29) for g in iter_graphs(EnumSpec(8, m))]

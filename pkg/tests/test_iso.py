"""Tests for canonical labelling and induced-subgraph detection."""

import itertools

import networkx as nx
from networkx.algorithms import isomorphism
import pytest

from cospec.charpoly import interlacing_check
from cospec.graph import (
    gen_A_construction,
    gen_B_construction,
    gen_basic,
    gen_double_star,
    gen_R,
    induced_subgraph,
    is_bipartite,
    is_connected,
    make_graph,
    to_networkx,
)
from cospec.iso import (
    FORBIDDEN_PATTERNS,
    canonical_form,
    canonical_graph,
    canonical_labeling,
    forbidden_pattern_graphs,
    forbidden_report,
    induced_contains,
    is_isomorphic,
)
from tests.conftest import random_graph, relabel


class TestCanonicalForm:
    """Test canonical forms as complete invariants."""

    def test_relabelled_path(self):
        """Test two labellings of P4 share a form."""
        p = make_graph(4, [(0, 1), (1, 2), (2, 3)])
        q = make_graph(4, [(2, 0), (0, 3), (3, 1)])
        assert canonical_form(p) == canonical_form(q)

    def test_four_vertex_classes(self):
        """Test all 64 labelled graphs on 4 vertices fall into 11 classes."""
        pairs = list(itertools.combinations(range(4), 2))
        forms = set()
        for mask in range(1 << len(pairs)):
            edges = [pair for k, pair in enumerate(pairs) if mask >> k & 1]
            forms.add(canonical_form(make_graph(4, edges)))
        assert len(forms) == 11

    def test_atlas_forms_distinct(self, atlas):
        """Test the 1253 atlas graphs (pairwise nonisomorphic) get distinct forms."""
        forms = {canonical_form(g) for g in atlas}
        assert len(forms) == len(atlas)

    def test_relabelling_invariance(self, atlas, rng):
        """Test random relabellings of atlas graphs keep their form."""
        for g in atlas[::7]:
            assert canonical_form(relabel(g, rng)) == canonical_form(g)

    def test_random_graphs_against_networkx(self, rng):
        """Test isomorphism decisions agree with networkx on random pairs."""
        for _ in range(60):
            g = random_graph(rng, 7, p=0.4)
            h = relabel(g, rng) if rng.random() < 0.5 else random_graph(rng, 7, p=0.4)
            expected = nx.is_isomorphic(to_networkx(g), to_networkx(h))
            assert is_isomorphic(g, h) == expected

    def test_regular_graphs(self, rng):
        """Test vertex-transitive graphs that defeat colour refinement alone."""
        triangles = [(0, 1), (1, 2), (2, 0), (3, 4), (4, 5), (5, 3)]
        prism = make_graph(6, triangles + [(0, 3), (1, 4), (2, 5)])
        k33 = gen_basic("complete_bipartite", 3, 3)
        assert not is_isomorphic(prism, k33)
        assert canonical_form(relabel(prism, rng)) == canonical_form(prism)
        c6 = gen_basic("cycle", 6)
        two_c3 = gen_basic("cycle", 3) + gen_basic("cycle", 3)
        assert not is_isomorphic(c6, two_c3)

    def test_hex_key(self):
        """Test the printable key carries the vertex count."""
        assert canonical_form(gen_basic("path", 3)).hex().startswith("3:")


class TestCanonicalLabeling:
    """Test the relabelling returned with the form."""

    def test_labels_are_a_permutation(self, rng):
        """Test labels cover 0..n-1 exactly once."""
        g = random_graph(rng, 9)
        _, labels = canonical_labeling(g)
        assert sorted(labels) == list(range(9))

    def test_canonical_graph_is_labelled_equal(self, rng):
        """Test isomorphic graphs have identical canonical copies."""
        for n in (5, 8, 10):
            g = random_graph(rng, n)
            h = relabel(g, rng)
            assert canonical_graph(g) == canonical_graph(h)
            assert canonical_form(canonical_graph(g)) == canonical_form(g)

    def test_components_ordered_by_size(self):
        """Test components are ordered by size, so isolated vertices come first."""
        g = gen_basic("path", 3) + gen_basic("empty", 2)
        _, labels = canonical_labeling(g)
        assert {labels[3], labels[4]} == {0, 1}


class TestIsIsomorphic:
    """Test isomorphism on named graphs."""

    def test_k22_is_c4(self):
        """Test K_{2,2} and C4 are the same graph."""
        assert is_isomorphic(gen_basic("complete_bipartite", 2, 2), gen_basic("cycle", 4))

    def test_star_is_not_c4_plus_k1(self):
        """Test cospectral K_{1,4} and C4 + K1 are not isomorphic."""
        c4_k1 = gen_basic("cycle", 4) + gen_basic("empty", 1)
        assert not is_isomorphic(gen_basic("star", 4), c4_k1)

    def test_double_star_symmetry(self):
        """Test P2(a,b) and P2(b,a) coincide."""
        assert is_isomorphic(gen_double_star(2, 3), gen_double_star(3, 2))

    def test_small_constructions_coincide(self):
        """Test A_2 and B_1 are the same graph."""
        assert is_isomorphic(gen_A_construction(2), gen_B_construction(1))

    def test_different_orders(self):
        """Test graphs of different order are never isomorphic."""
        assert not is_isomorphic(gen_basic("empty", 2), gen_basic("empty", 3))


class TestInducedContains:
    """Test induced subgraph search."""

    def test_two_k2_in_p5(self):
        """Test P5 contains 2K2 on its end edges."""
        k2 = gen_basic("path", 2)
        assert induced_contains(gen_basic("path", 5), k2 + k2) == frozenset({0, 1, 3, 4})

    def test_p4_not_induced_in_c4(self):
        """Test C4 contains P4 as a subgraph but not induced."""
        assert induced_contains(gen_basic("cycle", 4), gen_basic("path", 4)) is None

    def test_pattern_larger_than_host(self):
        """Test a pattern with more vertices is never found."""
        assert induced_contains(gen_basic("path", 3), gen_basic("path", 4)) is None

    def test_r_in_extended_host(self):
        """Test R inside a P4 with a vertex joined to z1 and z3 and a path onward."""
        host = make_graph(7, [(0, 1), (1, 2), (2, 3), (4, 0), (4, 2), (4, 5), (5, 6)])
        witness = induced_contains(host, gen_R())
        assert witness is not None
        assert is_isomorphic(induced_subgraph(host, witness), gen_R())

    def test_witnesses_induce_pattern(self, atlas):
        """Test every witness induces its pattern and passes interlacing."""
        patterns = forbidden_pattern_graphs()
        for g in atlas:
            if g.n < 5 or g.n > 6:
                continue
            for name, pattern in patterns.items():
                witness = induced_contains(g, pattern)
                if witness is None:
                    continue
                assert is_isomorphic(induced_subgraph(g, witness), pattern)
                rest = frozenset(range(g.n)) - witness
                if rest:
                    assert interlacing_check(g, rest)

    def test_agrees_with_networkx(self, rng):
        """Test induced containment against networkx subgraph matching."""
        pattern = gen_basic("path", 4)
        for _ in range(40):
            host = random_graph(rng, 7, p=0.35)
            matcher = isomorphism.GraphMatcher(to_networkx(host), to_networkx(pattern))
            expected = matcher.subgraph_is_isomorphic()
            assert (induced_contains(host, pattern) is not None) == expected


class TestForbiddenReport:
    """Test the forbidden-pattern report."""

    @pytest.mark.parametrize("n", range(1, 8))
    def test_double_stars_clear(self, n):
        """Test P2(1,n) contains none of the patterns."""
        report = forbidden_report(gen_double_star(1, n))
        assert report.all_clear
        assert report.mate_patterns_clear
        assert report.flagged == []

    def test_p5_flags_two_k2(self):
        """Test P5 is flagged for 2K2 and for itself."""
        report = forbidden_report(gen_basic("path", 5))
        assert "2K2" in report.flagged
        assert "P5" in report.flagged
        assert not report.mate_patterns_clear

    def test_p22_witness_is_whole_graph(self):
        """Test P2(2,2) is its own witness."""
        report = forbidden_report(gen_double_star(2, 2))
        assert report.witnesses["P2(2,2)"] == frozenset(range(6))

    def test_report_covers_every_pattern(self):
        """Test the report keys match the pattern list."""
        report = forbidden_report(gen_R())
        assert tuple(report.witnesses) == FORBIDDEN_PATTERNS
        assert report.flagged == ["R", "P4+K1"]

    def test_p4_plus_k1_implied_by_2k2_and_r(self, atlas):
        """Test connected bipartite graphs clear of 2K2 and R are clear of P4+K1."""
        for g in atlas:
            if g.n < 5 or not is_connected(g) or is_bipartite(g) is None:
                continue
            report = forbidden_report(g)
            if report.witnesses["2K2"] is None and report.witnesses["R"] is None:
                assert report.witnesses["P4+K1"] is None

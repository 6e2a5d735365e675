# tests/test_hypergraph.py
import pytest
from hypothesis import given, strategies as st

from core.errors import CapExceeded, EmptyEdge, GroundMismatch, OracleCapExceeded, UnknownElement
from core.generators import make_rng, random_hypergraph, random_poset
from core.graph import is_bipartite
from core.hypergraph import (Hypergraph, bipartite_incidence_graph, edge_names, filter_closure,
                             is_incident_edge_inclusion, is_minimal_transversal, is_transversal, sperner_min,
                             transversal_enum, transversals_oracle)
from core.poset import SetFamily, antichain_poset, build_poset
from tests.helpers import family, load_hypergraph, load_poset

seeds = st.integers(min_value=0, max_value=100_000)


def hyper(ground: str, *edges: str) -> Hypergraph:
    return Hypergraph(ground.split(), [e.split() for e in edges])


class TestHypergraph:

    def test_empty_edge_rejected(self):
        with pytest.raises(EmptyEdge):
            Hypergraph(['a'], [[]])

    def test_unknown_vertex_rejected(self):
        with pytest.raises(UnknownElement):
            Hypergraph(['a'], [['a', 'b']])

    def test_sperner_min(self):
        h = sperner_min(hyper("a b c", "a", "a b", "b c"))
        assert family(*[' '.join(sorted(e)) for e in h.edges]) == family("a", "b c")
        assert h.is_sperner()

    def test_incident_edges(self):
        h = load_hypergraph('fig1_hypergraph.txt')
        assert len(h.incident_edges('x5')) == 3


class TestFilterClosure:

    def test_forced_by_order(self):
        poset = build_poset(['a', 'b'], [('a', 'b')])
        closed = filter_closure(hyper("a b", "a", "b"), poset)
        assert closed.edges == {frozenset({'b'})}

    def test_antichain_is_sperner_min(self):
        h = hyper("a b c", "a", "a b", "c")
        assert filter_closure(h, antichain_poset(['a', 'b', 'c'])) == sperner_min(h)

    def test_figure_instance(self):
        closed = filter_closure(load_hypergraph('fig1_hypergraph.txt'), load_poset('fig3_poset.txt'))
        assert closed.edges == family("x1 x2 x5", "x3 x4 x5", "x5 x6").as_set()

    def test_ground_mismatch(self):
        with pytest.raises(GroundMismatch):
            filter_closure(hyper("a b", "a"), antichain_poset(['a']))

    @given(seeds)
    def test_idempotent_and_never_grows(self, seed):
        rng = make_rng(seed)
        poset = random_poset(7, rng)
        h = Hypergraph(poset.elements, random_hypergraph(7, 5, rng).edges)
        closed = filter_closure(h, poset)
        assert filter_closure(closed, poset) == closed
        assert len(closed) <= len(h)
        assert all(any(poset.up_closure(e) == c for e in h.edges) for c in closed.edges)


class TestTransversals:

    def test_small(self):
        assert transversal_enum(hyper("a b c", "a b", "b c")) == family("b", "a c")
        assert transversal_enum(hyper("a", "a")) == family("a")

    def test_no_edges(self):
        assert transversal_enum(hyper("a b")) == family("")

    def test_figure_hypergraph(self):
        expected = family("x1 x5", "x2 x5", "x3 x5", "x1 x3 x6", "x1 x4 x6", "x2 x3 x6", "x2 x4 x6")
        h = load_hypergraph('fig1_hypergraph.txt')
        assert transversals_oracle(h) == expected
        assert transversal_enum(h) == expected

    def test_predicates(self):
        h = hyper("a b c", "a b", "b c")
        assert is_transversal(h, {'b'})
        assert not is_transversal(h, {'a'})
        assert is_minimal_transversal(h, {'a', 'c'})
        assert not is_minimal_transversal(h, {'a', 'b'})
        with pytest.raises(UnknownElement):
            is_transversal(h, {'z'})

    def test_caps(self):
        h = hyper("a b c", "a", "b", "c")
        with pytest.raises(CapExceeded):
            transversal_enum(h, max_vertices=2)
        with pytest.raises(CapExceeded):
            transversal_enum(h, max_edges=2)
        with pytest.raises(OracleCapExceeded):
            transversals_oracle(h, cap=2)

    def test_family_cap(self):
        h = hyper("a b c d", "a b", "c d")
        with pytest.raises(CapExceeded):
            transversal_enum(h, max_family=3)

    @given(seeds)
    def test_berge_matches_oracle(self, seed):
        h = random_hypergraph(8, 5, make_rng(seed))
        result = transversal_enum(h)
        assert result == transversals_oracle(h)
        assert all(is_minimal_transversal(h, t) for t in result)

    @given(seeds)
    def test_transversals_of_transversals(self, seed):
        h = random_hypergraph(7, 5, make_rng(seed))
        dual = Hypergraph(h.ground, transversal_enum(h))
        assert transversal_enum(dual) == SetFamily.of(sperner_min(h).edges)


class TestIncidence:

    def test_single_edge(self):
        graph, names = bipartite_incidence_graph(hyper("a", "a"))
        assert names == {frozenset({'a'}): '_e1'}
        assert graph.edges() == [('_e1', 'a')]

    def test_names_follow_canonical_order(self):
        names = edge_names(hyper("a b c", "b c", "a b"))
        assert names[frozenset({'a', 'b'})] == '_e1'
        assert names[frozenset({'b', 'c'})] == '_e2'

    def test_incidence_is_bipartite(self):
        graph, _ = bipartite_incidence_graph(load_hypergraph('fig1_hypergraph.txt'))
        assert len(graph) == 10
        assert is_bipartite(graph)[0]

    @given(seeds)
    def test_filter_closed_has_edge_inclusion(self, seed):
        rng = make_rng(seed)
        poset = random_poset(6, rng)
        h = Hypergraph(poset.elements, random_hypergraph(6, 4, rng).edges)
        assert is_incident_edge_inclusion(filter_closure(h, poset), poset)

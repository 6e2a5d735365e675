# tests/test_trianglefree_solver.py
import pytest
from hypothesis import given, strategies as st

from core.dualize import idom_oracle
from core.errors import NotAValidDStar, NotTriangleFree, NotWeakNI
from core.generators import make_rng, random_triangle_free_graph, random_weak_ni_poset
from core.graph import Graph, minimal_dominating_sets_oracle
from core.poset import IdealFamily, build_poset
from solvers.trianglefree_solver import (Orientation, Star, enum_DW, enum_trianglefree, expand, iter_trianglefree,
                                         lift, reduced_instance, star_decompose)
from tests.helpers import family

seeds = st.integers(min_value=0, max_value=100_000)


@pytest.fixture
def claw():
    """a 連到 b、c、d；b、c 在 a 之上"""
    graph = Graph(['a', 'b', 'c', 'd'], [('a', 'b'), ('a', 'c'), ('a', 'd')])
    return graph, build_poset(graph.vertices, [('a', 'b'), ('a', 'c')])


@pytest.fixture
def two_stars():
    """星心 u1、u2 相鄰，各帶一個在下方的懸掛頂點"""
    graph = Graph(['u1', 'u2', 'v1', 'v2'], [('u1', 'u2'), ('u1', 'v1'), ('u2', 'v2')])
    return graph, build_poset(graph.vertices, [('v1', 'u1'), ('v2', 'u2')])


class TestStarDecomposition:

    def test_path(self, p3):
        sd = star_decompose(*p3)
        assert sd.A == {'c'}
        assert sd.stars == (Star('b', frozenset({'a'}), Orientation.BRANCHES_BELOW),)

    def test_branches_above(self, claw):
        sd = star_decompose(*claw)
        assert sd.A == {'d'}
        assert sd.stars == (Star('a', frozenset({'b', 'c'}), Orientation.BRANCHES_ABOVE),)

    def test_rejects_triangle(self, fig4_instance):
        with pytest.raises(NotTriangleFree):
            star_decompose(*fig4_instance)

    def test_rejects_non_weak_ni(self, p3):
        graph, _ = p3
        with pytest.raises(NotWeakNI):
            star_decompose(graph, build_poset(graph.vertices, [('c', 'a')]))


class TestReduction:

    def test_path(self, p3):
        ri = reduced_instance(*p3)
        assert (ri.B_u, ri.B_v, ri.B_w) == (['b'], ['a'], ['a'])
        assert ri.A_prime == {'c'}
        assert ri.removed_edges == []
        assert ri.manifest() == ["contract: a = a", "star: u=b v=a w=a", "a-prime: c"]

    def test_twins_contracted(self, claw):
        ri = reduced_instance(*claw)
        assert ri.G_re.vertices == ('a', 'b', 'd')
        assert ri.contraction == {0: ('b', frozenset({'b', 'c'}))}
        assert ri.B_w == ['a']
        assert ri.A_prime == frozenset()

    def test_center_edge_removed(self, two_stars):
        ri = reduced_instance(*two_stars)
        assert ri.removed_edges == [('u1', 'u2')]
        assert not ri.G_re.has_edge('u1', 'u2')
        assert ri.B_w == ['v1', 'v2']
        assert "removed-edge: u1 u2" in ri.manifest()

    def test_center_edges_redundant(self):
        # 三顆星的星心連成路徑 u1 u2 u3
        graph = Graph(['u1', 'u2', 'u3', 'v1', 'v2', 'v3'],
                      [('u1', 'u2'), ('u2', 'u3'), ('u1', 'v1'), ('u2', 'v2'), ('u3', 'v3')])
        ri = reduced_instance(graph, build_poset(graph.vertices, [('v1', 'u1'), ('v2', 'u2'), ('v3', 'u3')]))
        assert set(ri.removed_edges) == {('u1', 'u2'), ('u2', 'u3')}
        expected = minimal_dominating_sets_oracle(graph)
        for u, v in ri.removed_edges:
            assert minimal_dominating_sets_oracle(graph.without_edge(u, v)) == expected

    @given(seeds)
    def test_removed_edges_keep_dominating_sets(self, seed):
        rng = make_rng(seed)
        graph = random_triangle_free_graph(8, rng)
        ri = reduced_instance(graph, random_weak_ni_poset(graph, rng))
        expected = minimal_dominating_sets_oracle(graph)
        for u, v in ri.removed_edges:
            assert minimal_dominating_sets_oracle(graph.without_edge(u, v)) == expected


class TestLift:

    def test_dominating_w(self, p3):
        ri = reduced_instance(*p3)
        assert enum_DW(ri.G_re, ri.A_prime) == family("b", "c")
        assert enum_DW(ri.G_re, frozenset()) == family("")

    def test_lift(self, p3):
        ri = reduced_instance(*p3)
        assert lift(ri, frozenset({'b'})) == {'a', 'b'}
        assert lift(ri, frozenset({'c'})) == {'a', 'c'}
        with pytest.raises(NotAValidDStar):
            lift(ri, frozenset({'a'}))

    def test_expand(self, claw):
        ri = reduced_instance(*claw)
        assert expand(ri, frozenset({'a', 'b'})) == {'a', 'b', 'c'}
        assert expand(ri, frozenset({'a'})) == {'a'}

    @given(seeds)
    def test_reduced_solutions_are_lifts(self, seed):
        rng = make_rng(seed)
        graph = random_triangle_free_graph(8, rng)
        ri = reduced_instance(graph, random_weak_ni_poset(graph, rng))
        dstars = enum_DW(ri.G_re, ri.A_prime)
        solutions = idom_oracle(ri.G_re, ri.P_re)

        for ideal in solutions:
            D = ri.P_re.max_elements(ideal)
            Dstar = D - set(ri.B_w)
            assert Dstar in dstars
            dominated = ri.G_re.closed_neighborhood_of(Dstar)
            assert D == Dstar | {w for v, w in zip(ri.B_v, ri.B_w) if v not in dominated}
            assert lift(ri, Dstar) == ideal

        assert IdealFamily.of(lift(ri, Dstar) for Dstar in dstars) == solutions

    @given(seeds)
    def test_minimal_centers_in_every_lift(self, seed):
        rng = make_rng(seed)
        graph = random_triangle_free_graph(8, rng)
        ri = reduced_instance(graph, random_weak_ni_poset(graph, rng))
        forced = ri.P_re.minimal() & set(ri.B_u)
        for Dstar in enum_DW(ri.G_re, ri.A_prime):
            assert forced <= ri.P_re.max_elements(lift(ri, Dstar))

    def test_minimal_center_forced(self, claw):
        ri = reduced_instance(*claw)
        assert ri.P_re.minimal() & set(ri.B_u) == {'a'}
        assert lift(ri, frozenset()) == {'a'}


class TestEnumeration:

    def test_path(self, p3):
        assert enum_trianglefree(*p3) == family("a b", "a c")

    def test_claw(self, claw):
        assert enum_trianglefree(*claw) == family("a") == idom_oracle(*claw)

    def test_two_stars(self, two_stars):
        assert list(iter_trianglefree(*two_stars)) == [frozenset({'v1', 'v2'})]
        assert idom_oracle(*two_stars) == family("v1 v2")

    @given(seeds)
    def test_matches_oracle(self, seed):
        rng = make_rng(seed)
        graph = random_triangle_free_graph(8, rng)
        poset = random_weak_ni_poset(graph, rng)
        solutions = list(iter_trianglefree(graph, poset))
        assert len(solutions) == len(set(solutions))
        assert family(*[' '.join(sorted(s)) for s in solutions]) == idom_oracle(graph, poset)

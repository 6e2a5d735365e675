# tests/test_router.py
import inspect

import pytest

from core.errors import InvalidParams
from core.graph import Graph
from core.poset import antichain_poset
from solvers import trianglefree_solver
from solvers.router import route_idom, solve_idom


def square() -> Graph:
    return Graph(['a', 'b', 'c', 'd'], [('a', 'b'), ('b', 'c'), ('c', 'd'), ('a', 'd')])


class TestRouteIdom:

    def test_split_first(self, p3, split_pendants):
        assert route_idom(*p3) == 'split'
        assert route_idom(*split_pendants) == 'split'

    def test_triangle_free(self):
        graph = square()
        assert route_idom(graph, antichain_poset(graph.vertices)) == 'trianglefree'

    def test_generic_fallback(self, fig4_instance):
        assert route_idom(*fig4_instance) == 'generic'

    def test_unknown_solver(self, p3):
        with pytest.raises(InvalidParams):
            solve_idom(*p3, solver='nope')


class TestStreaming:

    def test_trianglefree_yields_before_finishing(self, p3, monkeypatch):
        lifted = []
        original = trianglefree_solver.lift

        def counting_lift(ri, Dstar):
            lifted.append(Dstar)
            return original(ri, Dstar)

        monkeypatch.setattr(trianglefree_solver, 'lift', counting_lift)
        stream = solve_idom(*p3, solver='trianglefree')
        assert inspect.isgenerator(stream)
        assert next(stream) == {'a', 'b'}
        assert len(lifted) == 1
        assert list(stream) == [frozenset({'a', 'c'})]
        assert len(lifted) == 2

    def test_split_streams_in_dfs_order(self, split_pendants):
        stream = solve_idom(*split_pendants, solver='auto')
        assert next(stream) == {'s1', 's2'}
        assert list(stream) == [frozenset({'s1', 'c2'})]

# tests/test_split_solver.py
from itertools import combinations

import pytest
from hypothesis import given, strategies as st

from core.dualize import idom_oracle
from core.errors import ContextInvalid, NotInClique
from core.generators import make_rng, random_ni_poset, random_split_graph
from core.graph import Graph, SplitDecomposition
from core.metrics import EnumerationMetrics
from core.poset import IdealFamily, antichain_poset, build_poset
from solvers.split_solver import (SplitContext, clique_part, complete_from_clique_part, enum_split, iter_split,
                                  member_DC, solve_split)

seeds = st.integers(min_value=0, max_value=100_000)


@pytest.fixture
def ctx(split_pendants):
    return SplitContext.from_instance(*split_pendants)


class TestContext:

    def test_from_instance(self, ctx):
        assert ctx.dec == SplitDecomposition(S=frozenset({'s1', 's2'}), C=frozenset({'c1', 'c2'}))
        assert ctx.clique_order == ('c1', 'c2')
        assert ctx.delay_bound == 5

    def test_rejects_non_split(self, fig4_instance):
        with pytest.raises(ContextInvalid):
            SplitContext.from_instance(*fig4_instance)

    def test_rejects_non_ni(self, split_pendants):
        graph, _ = split_pendants
        with pytest.raises(ContextInvalid):
            SplitContext.from_instance(graph, build_poset(graph.vertices, [('c1', 's1')]))

    def test_rejects_bad_partition(self, split_pendants):
        graph, poset = split_pendants
        with pytest.raises(ContextInvalid):
            SplitContext(graph, poset, SplitDecomposition(S=frozenset({'s1'}), C=frozenset({'c1', 'c2'})))
        with pytest.raises(ContextInvalid):
            SplitContext(graph, poset, SplitDecomposition(S=frozenset({'s1', 's2', 'c1'}), C=frozenset({'c2'})))

    def test_rejects_non_maximal_independent_set(self):
        # c2 在 S 中沒有鄰居，S 不是極大獨立集
        graph = Graph(['s1', 'c1', 'c2'], [('s1', 'c1'), ('c1', 'c2')])
        dec = SplitDecomposition(S=frozenset({'s1'}), C=frozenset({'c1', 'c2'}))
        with pytest.raises(ContextInvalid):
            SplitContext(graph, antichain_poset(graph.vertices), dec)


class TestMembership:

    def test_complete(self, ctx):
        assert complete_from_clique_part(ctx, {'c2'}) == {'c2', 's1'}
        assert complete_from_clique_part(ctx, set()) == {'s1', 's2'}
        with pytest.raises(NotInClique):
            complete_from_clique_part(ctx, {'s1'})

    def test_member_dc(self, ctx):
        assert member_DC(ctx, set())
        assert member_DC(ctx, {'c2'})
        assert not member_DC(ctx, {'c1'})
        assert not member_DC(ctx, {'c1', 'c2'})

    def test_clique_part(self, ctx):
        assert clique_part(ctx, {'s1', 'c2'}) == {'c2'}
        assert clique_part(ctx, {'s1', 's2'}) == set()

    @given(seeds)
    def test_membership_closed_under_removal(self, seed):
        rng = make_rng(seed)
        graph = random_split_graph(8, rng)
        ctx = SplitContext.from_instance(graph, random_ni_poset(graph, rng))
        for size in range(1, len(ctx.clique_order) + 1):
            for combo in combinations(ctx.clique_order, size):
                A = frozenset(combo)
                if member_DC(ctx, A):
                    assert all(member_DC(ctx, A - {x}) for x in A)


class TestEnumeration:

    def test_dfs_order(self, ctx):
        assert enum_split(ctx) == [frozenset({'s1', 's2'}), frozenset({'s1', 'c2'})]

    def test_delay_metrics(self, ctx):
        metrics = EnumerationMetrics(ctx.delay_bound)
        list(iter_split(ctx, metrics))
        assert metrics.emissions == 2
        assert metrics.tests == 3
        assert metrics.gaps == [1, 2]
        assert metrics.within_bound()

    def test_solve_sets_bound(self, split_pendants):
        metrics = EnumerationMetrics()
        solutions = list(solve_split(*split_pendants, metrics))
        assert metrics.bound == 5
        assert IdealFamily.of(solutions) == idom_oracle(*split_pendants)

    @given(seeds)
    def test_matches_oracle(self, seed):
        rng = make_rng(seed)
        graph = random_split_graph(8, rng)
        poset = random_ni_poset(graph, rng)
        ctx = SplitContext.from_instance(graph, poset)
        metrics = EnumerationMetrics(ctx.delay_bound)
        solutions = enum_split(ctx, metrics)
        assert len(solutions) == len(set(solutions))
        assert IdealFamily.of(solutions) == idom_oracle(graph, poset)
        assert metrics.within_bound()
        # DFS 實際只需 |C| + 1 次，回報的上限 2|C| + 1 較寬
        assert metrics.max_gap <= len(ctx.dec.C) + 1
        for ideal in solutions:
            assert complete_from_clique_part(ctx, clique_part(ctx, ideal)) <= ideal

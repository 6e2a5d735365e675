# solvers/split_solver.py
"""
split 圖 + 鄰域包含 poset 的 polynomial-delay 列舉

ID(G, P) 與獨立系統 D_C(G, P) 一一對應：A ↦ ↓(A ∪ (S ∖ N(A)))，反向為 I ↦ Max(I) ∩ C。
D_C(G, P) 對子集封閉，所以可以在 C 上做深度優先走訪，每次只加入字典序更大的頂點。
"""

import logging
from dataclasses import dataclass
from typing import Iterable, Iterator, List, Optional, Tuple

from core.errors import ContextInvalid, NotInClique
from core.graph import (Graph, SplitDecomposition, dominates, is_ni_poset, is_split,
                        private_neighbors, split_decomposition_min)
from core.metrics import EnumerationMetrics
from core.poset import Element, ElementSet, Poset, canonical

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class SplitContext:
    """split 圖 G、N.I. poset P 與滿足 S ⊆ Min(P) 的分割"""
    G: Graph
    P: Poset
    dec: SplitDecomposition

    def __post_init__(self):
        if self.G.vertex_set != self.P.element_set:
            raise ContextInvalid("圖的頂點集合與 poset 元素集合不一致")
        S, C = self.dec.S, self.dec.C
        if S & C or (S | C) != self.G.vertex_set:
            raise ContextInvalid("S、C 不是頂點集合的分割")
        if any(self.G.open_neighborhood(s) & S for s in S):
            raise ContextInvalid("S 不是獨立集")
        items = sorted(C)
        if any(not self.G.has_edge(a, b) for i, a in enumerate(items) for b in items[i + 1:]):
            raise ContextInvalid("C 不是團")
        if any(not (self.G.open_neighborhood(c) & S) for c in C):
            raise ContextInvalid("S 不是極大獨立集")
        if not S <= self.P.minimal():
            raise ContextInvalid("S 含有非極小元素")
        if not is_ni_poset(self.G, self.P):
            raise ContextInvalid("poset 不是鄰域包含 poset（弱 N.I. 的 split 實例請改用通用解法）")

    @classmethod
    def from_instance(cls, graph: Graph, poset: Poset) -> 'SplitContext':
        """
        Raises:
            ContextInvalid: G 不是 split 圖，或 P 不是 N.I. poset
        """
        if not is_split(graph)[0]:
            raise ContextInvalid("圖不是 split 圖")
        if not is_ni_poset(graph, poset):
            raise ContextInvalid("poset 不是鄰域包含 poset（弱 N.I. 的 split 實例請改用通用解法）")
        return cls(graph, poset, split_decomposition_min(graph, poset))

    @property
    def clique_order(self) -> Tuple[Element, ...]:
        return tuple(sorted(self.dec.C))

    @property
    def delay_bound(self) -> int:
        """回報的保證值 2|C| + 1；這個 DFS 實際最多 |C| + 1 次"""
        return 2 * len(self.dec.C) + 1


def _check_clique_part(ctx: SplitContext, A: Iterable[Element]) -> ElementSet:
    A = frozenset(A)
    outside = A - ctx.dec.C
    if outside:
        raise NotInClique(f"不在團 C 中: {' '.join(sorted(outside))}")
    return A


def complete_from_clique_part(ctx: SplitContext, A: Iterable[Element]) -> ElementSet:
    """D = A ∪ (S ∖ N(A))：D_C = A 的唯一候選"""
    A = _check_clique_part(ctx, A)
    return A | (ctx.dec.S - ctx.G.open_neighborhood_of(A))


def clique_part(ctx: SplitContext, ideal: Iterable[Element]) -> ElementSet:
    """Max(I) ∩ C"""
    return ctx.P.max_elements(ideal) & ctx.dec.C


def member_DC(ctx: SplitContext, A: Iterable[Element]) -> bool:
    """
    A ∈ D_C(G, P)：
    (i) A 的每個元素在 S 中都有私有鄰居
    (ii) ↓(A ∪ (S ∖ N(A))) 支配 G，且它的每個極大元素都有私有鄰居
    """
    A = _check_clique_part(ctx, A)
    S = ctx.dec.S
    for x in A:
        others = ctx.G.open_neighborhood_of(A - {x}) | (A - {x})
        if not (ctx.G.open_neighborhood(x) & S) - others:
            return False

    ideal = ctx.P.down_closure(complete_from_clique_part(ctx, A))
    if not dominates(ctx.G, ideal, ctx.G.vertex_set):
        return False
    return all(private_neighbors(ctx.G, ideal, x) for x in ctx.P.max_elements(ideal))


def iter_split(ctx: SplitContext, metrics: Optional[EnumerationMetrics] = None) -> Iterator[ElementSet]:
    """
    依 DFS 順序逐一產生 ID(G, P)

    每個被接受的節點一進入就輸出，接著一次測完所有字典序更大的候選子節點
    （最多 |C| 次測試），再依序遞迴進入通過的子節點。
    """
    order = ctx.clique_order
    metrics = metrics if metrics is not None else EnumerationMetrics(ctx.delay_bound)

    def _test(A: ElementSet) -> bool:
        metrics.record_test()
        return member_DC(ctx, A)

    def _visit(A: ElementSet, last: int) -> Iterator[ElementSet]:
        metrics.record_emission()
        yield ctx.P.down_closure(complete_from_clique_part(ctx, A))
        accepted = []
        for p in range(last + 1, len(order)):
            child = A | {order[p]}
            if _test(child):
                accepted.append((child, p))
        for child, p in accepted:
            yield from _visit(child, p)

    root = frozenset()
    if not _test(root):
        raise ContextInvalid("空集合不在 D_C(G, P) 中，分割不合法")
    yield from _visit(root, -1)

    logger.info(f"✅ split 列舉完成：{metrics.emissions} 個解，最大間隔 {metrics.max_gap}"
                f"（上限 {ctx.delay_bound}）")


def enum_split(ctx: SplitContext, metrics: Optional[EnumerationMetrics] = None) -> List[ElementSet]:
    """DFS 輸出順序的完整清單"""
    return list(iter_split(ctx, metrics))


def solve_split(graph: Graph, poset: Poset, metrics: Optional[EnumerationMetrics] = None) -> Iterator[ElementSet]:
    ctx = SplitContext.from_instance(graph, poset)
    logger.debug(f"split 分割：S = {' '.join(canonical(ctx.dec.S))} | C = {' '.join(ctx.clique_order)}")
    if metrics is not None and metrics.bound is None:
        metrics.bound = ctx.delay_bound
    return iter_split(ctx, metrics)

# core/hypergraph.py
"""
超圖與橫截（transversal）

實現核心功能：
1. Sperner 化與相對於 poset 的 filter 閉包 ↑H
2. 橫截判定與 Berge 逐邊相乘的基準極小橫截列舉
3. 二部關聯圖 I(H)（歸約用）
"""

import logging
from itertools import combinations
from typing import Dict, FrozenSet, Iterable, List, Optional, Sequence, Tuple

from config.lattice_config import lattice_config
from core.errors import CapExceeded, EmptyEdge, GroundMismatch, OracleCapExceeded, UnknownElement
from core.poset import Element, ElementSet, Poset, SetFamily, canonical, minimal_sets

logger = logging.getLogger(__name__)

EDGE_PREFIX = '_e'


class Hypergraph:
    """
    不可變超圖 H = (V(H), E(H))

    Attributes:
        ground: 宣告順序的頂點 tuple
        edges: 非空超邊的 frozenset
    """

    def __init__(self, ground: Sequence[Element], edges: Iterable[Iterable[Element]]):
        self.ground: Tuple[Element, ...] = tuple(ground)
        if len(set(self.ground)) != len(self.ground):
            raise UnknownElement("超圖頂點重複宣告")
        ground_set = frozenset(self.ground)
        normalized = set()
        for edge in edges:
            edge = frozenset(edge)
            if not edge:
                raise EmptyEdge("超邊不可為空")
            unknown = edge - ground_set
            if unknown:
                raise UnknownElement(f"超邊含未宣告頂點: {' '.join(sorted(unknown))}")
            normalized.add(edge)
        self.edges: FrozenSet[ElementSet] = frozenset(normalized)

    def __eq__(self, other) -> bool:
        if not isinstance(other, Hypergraph):
            return NotImplemented
        return set(self.ground) == set(other.ground) and self.edges == other.edges

    def __hash__(self) -> int:
        return hash((frozenset(self.ground), self.edges))

    def __len__(self) -> int:
        return len(self.edges)

    def __repr__(self) -> str:
        return f"Hypergraph(n={len(self.ground)}, m={len(self.edges)})"

    @property
    def ground_set(self) -> ElementSet:
        return frozenset(self.ground)

    def sorted_edges(self) -> List[ElementSet]:
        """標準超邊順序：依排序後的 token 序列"""
        return sorted(self.edges, key=canonical)

    def incident_edges(self, x: Element) -> FrozenSet[ElementSet]:
        """E_x：包含 x 的超邊"""
        if x not in self.ground_set:
            raise UnknownElement(f"未知頂點: {x!r}")
        return frozenset(e for e in self.edges if x in e)

    def is_sperner(self) -> bool:
        return all(not (a < b) for a in self.edges for b in self.edges)


def _check_ground(hypergraph: Hypergraph, poset: Poset) -> None:
    if hypergraph.ground_set != poset.element_set:
        raise GroundMismatch("超圖頂點集合與 poset 元素集合不一致")


def sperner_min(hypergraph: Hypergraph) -> Hypergraph:
    """只保留 ⊆-極小的超邊"""
    return Hypergraph(hypergraph.ground, minimal_sets(hypergraph.edges))


def filter_closure(hypergraph: Hypergraph, poset: Poset) -> Hypergraph:
    """
    filter 閉包 ↑H = Min⊆{↑e | e ∈ E(H)}

    Raises:
        GroundMismatch: V(H) ≠ X(P)
    """
    _check_ground(hypergraph, poset)
    closed = [poset.up_closure(e) for e in hypergraph.edges]
    result = Hypergraph(hypergraph.ground, minimal_sets(closed))
    logger.debug(f"filter 閉包：{len(hypergraph)} → {len(result)} 條超邊")
    return result


def is_transversal(hypergraph: Hypergraph, members: Iterable[Element]) -> bool:
    members = frozenset(members)
    unknown = members - hypergraph.ground_set
    if unknown:
        raise UnknownElement(f"未知頂點: {' '.join(sorted(unknown))}")
    return all(members & e for e in hypergraph.edges)


def is_minimal_transversal(hypergraph: Hypergraph, members: Iterable[Element]) -> bool:
    members = frozenset(members)
    if not is_transversal(hypergraph, members):
        return False
    return all(not is_transversal(hypergraph, members - {x}) for x in members)


def transversal_enum(hypergraph: Hypergraph,
                     max_vertices: Optional[int] = None,
                     max_edges: Optional[int] = None,
                     max_family: Optional[int] = None) -> SetFamily:
    """
    Berge 逐邊相乘：依標準順序一次折入一條超邊，維護極小橫截族

    空超邊集合回傳 {∅}。

    Raises:
        CapExceeded: 頂點數、超邊數或中間族大小超過上限
    """
    max_vertices = lattice_config.transversal_vertex_cap if max_vertices is None else max_vertices
    max_edges = lattice_config.transversal_edge_cap if max_edges is None else max_edges
    max_family = lattice_config.family_cap if max_family is None else max_family

    if len(hypergraph.ground) > max_vertices:
        raise CapExceeded(f"超圖有 {len(hypergraph.ground)} 個頂點，超過上限 {max_vertices}")
    if len(hypergraph) > max_edges:
        raise CapExceeded(f"超圖有 {len(hypergraph)} 條超邊，超過上限 {max_edges}")

    family: List[ElementSet] = [frozenset()]
    for edge in sperner_min(hypergraph).sorted_edges():
        hit = [t for t in family if t & edge]
        missed = [t for t in family if not t & edge]
        extended = [t | {x} for t in missed for x in sorted(edge)]
        # 已命中的舊橫截彼此不可比較，只需把被它們包含的新候選剔除
        family = hit + [c for c in minimal_sets(extended) if not any(h <= c for h in hit)]
        if len(family) > max_family:
            raise CapExceeded(f"中間橫截族大小 {len(family)} 超過上限 {max_family}")

    return SetFamily.of(family)


def transversals_oracle(hypergraph: Hypergraph, cap: int = 20) -> SetFamily:
    """窮舉所有子集的極小橫截（獨立於 Berge 的交叉驗證）"""
    n = len(hypergraph.ground)
    if n > cap:
        raise OracleCapExceeded(f"超圖有 {n} 個頂點，超過 oracle 上限 {cap}")
    ground = sorted(hypergraph.ground)
    hits = []
    for size in range(n + 1):
        for subset in combinations(ground, size):
            candidate = frozenset(subset)
            if any(h <= candidate for h in hits):
                continue
            if is_transversal(hypergraph, candidate):
                hits.append(candidate)
    return SetFamily.of(hits)


def is_incident_edge_inclusion(hypergraph: Hypergraph, poset: Poset) -> bool:
    """x ≤ y 是否蘊含 E_x ⊆ E_y"""
    _check_ground(hypergraph, poset)
    for x, y in poset.relation_pairs():
        if not hypergraph.incident_edges(x) <= hypergraph.incident_edges(y):
            return False
    return True


def edge_names(hypergraph: Hypergraph) -> Dict[ElementSet, Element]:
    """超邊代表頂點命名：_e<i>，i 為標準超邊順序中從 1 起算的位置"""
    return {e: f"{EDGE_PREFIX}{i}" for i, e in enumerate(hypergraph.sorted_edges(), start=1)}


def bipartite_incidence_graph(hypergraph: Hypergraph):
    """
    二部關聯圖 I(H)：頂點 X ∪ Y，x–y_e 相鄰 ⇔ x ∈ e

    Returns:
        (Graph, {超邊: y_e 名稱})
    """
    from core.graph import Graph

    names = edge_names(hypergraph)
    vertices = list(hypergraph.ground) + [names[e] for e in hypergraph.sorted_edges()]
    edges = [(x, names[e]) for e in hypergraph.sorted_edges() for x in sorted(e)]
    return Graph(vertices, edges), names

# core/graph.py
"""
簡單圖、支配（domination）與圖類辨識

實現核心功能：
1. 閉鄰域超圖 N(G)、支配 / 私有鄰居 / 極小支配判定
2. 鄰域包含（N.I.）與弱鄰域包含 poset 判定
3. split / bipartite / co-bipartite / triangle-free 辨識（附見證）
4. 滿足 S ⊆ Min(P) 的 split 分解、false twin 偵測
"""

import logging
from dataclasses import dataclass
from typing import Dict, Iterable, List, Optional, Sequence, Tuple

import networkx as nx

from core.errors import GroundMismatch, InvalidGraph, NotInSet, NotNIPoset, NotSplit, UnknownElement
from core.hypergraph import Hypergraph, transversals_oracle
from core.poset import Element, ElementSet, Poset, SetFamily, minimal_sets

logger = logging.getLogger(__name__)


class Graph:
    """
    不可變簡單圖：無自環、無重邊、對稱

    Attributes:
        vertices: 宣告順序的頂點 tuple
        adjacency: 頂點 → 開鄰域 N(x)
    """

    def __init__(self, vertices: Sequence[Element], edges: Iterable[Tuple[Element, Element]] = ()):
        self.vertices: Tuple[Element, ...] = tuple(vertices)
        if len(set(self.vertices)) != len(self.vertices):
            raise InvalidGraph("頂點重複宣告")
        neighbors: Dict[Element, set] = {v: set() for v in self.vertices}
        for u, v in edges:
            for end in (u, v):
                if end not in neighbors:
                    raise UnknownElement(f"邊的端點未宣告: {end!r}")
            if u == v:
                raise InvalidGraph(f"不允許自環: {u}")
            neighbors[u].add(v)
            neighbors[v].add(u)
        self.adjacency: Dict[Element, ElementSet] = {v: frozenset(ns) for v, ns in neighbors.items()}

    def __eq__(self, other) -> bool:
        if not isinstance(other, Graph):
            return NotImplemented
        return self.adjacency == other.adjacency

    def __hash__(self) -> int:
        return hash(frozenset(self.edges()))

    def __repr__(self) -> str:
        return f"Graph(n={len(self.vertices)}, m={len(self.edges())})"

    def __len__(self) -> int:
        return len(self.vertices)

    @property
    def vertex_set(self) -> ElementSet:
        return frozenset(self.vertices)

    def check_members(self, members: Iterable[Element]) -> ElementSet:
        members = frozenset(members)
        unknown = members - self.vertex_set
        if unknown:
            raise UnknownElement(f"未知頂點: {' '.join(sorted(unknown))}")
        return members

    def edges(self) -> List[Tuple[Element, Element]]:
        """每條邊一次（端點依字典序）"""
        return sorted((u, v) for u in self.vertices for v in self.adjacency[u] if u < v)

    def has_edge(self, u: Element, v: Element) -> bool:
        return v in self.adjacency.get(u, frozenset())

    def degree(self, v: Element) -> int:
        return len(self.adjacency[v])

    def open_neighborhood(self, v: Element) -> ElementSet:
        """N(v)"""
        if v not in self.adjacency:
            raise UnknownElement(f"未知頂點: {v!r}")
        return self.adjacency[v]

    def closed_neighborhood(self, v: Element) -> ElementSet:
        """N[v]"""
        return self.open_neighborhood(v) | {v}

    def closed_neighborhood_of(self, members: Iterable[Element]) -> ElementSet:
        """N[D] = ∪ N[x]"""
        result = set()
        for x in self.check_members(members):
            result |= self.adjacency[x]
            result.add(x)
        return frozenset(result)

    def open_neighborhood_of(self, members: Iterable[Element]) -> ElementSet:
        """N(A) = ∪ N(x)"""
        result = set()
        for x in self.check_members(members):
            result |= self.adjacency[x]
        return frozenset(result)

    def without_edge(self, u: Element, v: Element) -> 'Graph':
        return Graph(self.vertices, [e for e in self.edges() if set(e) != {u, v}])

    def induced_subgraph(self, members: Iterable[Element]) -> 'Graph':
        members = self.check_members(members)
        kept = [v for v in self.vertices if v in members]
        return Graph(kept, [(u, v) for u, v in self.edges() if u in members and v in members])

    def to_networkx(self) -> nx.Graph:
        g = nx.Graph()
        g.add_nodes_from(self.vertices)
        g.add_edges_from(self.edges())
        return g


@dataclass(frozen=True)
class SplitDecomposition:
    """split 圖的分割：S 為（極大）獨立集，C 為團"""
    S: ElementSet
    C: ElementSet


def _check_ground(graph: Graph, poset: Poset) -> None:
    if graph.vertex_set != poset.element_set:
        raise GroundMismatch("圖的頂點集合與 poset 元素集合不一致")


# ==================== 支配 ====================

def neighborhood_hypergraph(graph: Graph) -> Hypergraph:
    """N(G) = Min⊆{N[x] | x ∈ V(G)}"""
    closed = [graph.closed_neighborhood(v) for v in graph.vertices]
    return Hypergraph(graph.vertices, minimal_sets(closed))


def dominates(graph: Graph, dominators: Iterable[Element], targets: Iterable[Element]) -> bool:
    """W ⊆ N[D]"""
    targets = graph.check_members(targets)
    return targets <= graph.closed_neighborhood_of(dominators)


def private_neighbors(graph: Graph, dominators: Iterable[Element], x: Element) -> ElementSet:
    """
    priv(D, x) = N[x] ∖ N[D ∖ {x}]

    Raises:
        NotInSet: x ∉ D
    """
    dominators = graph.check_members(dominators)
    if x not in dominators:
        raise NotInSet(f"{x} 不在支配集中")
    return graph.closed_neighborhood(x) - graph.closed_neighborhood_of(dominators - {x})


def is_minimal_dominating(graph: Graph, dominators: Iterable[Element], targets: Iterable[Element] = None) -> bool:
    """D 支配 W，且任何 D ∖ {x} 都不再支配 W（W 預設為 V(G)）"""
    dominators = graph.check_members(dominators)
    targets = graph.vertex_set if targets is None else graph.check_members(targets)
    if not dominates(graph, dominators, targets):
        return False
    return all(not dominates(graph, dominators - {x}, targets) for x in dominators)


def is_redundant_edge(graph: Graph, u: Element, v: Element) -> bool:
    """
    uv 是否為冗餘邊：在 G − uv 中存在 u' ≠ u、v' ≠ v 使
    N[u'] ⊆ N[u] 且 N[v'] ⊆ N[v]（此時移除 uv 不改變極小支配集）
    """
    if not graph.has_edge(u, v):
        return False
    reduced = graph.without_edge(u, v)

    def _has_witness(center: Element) -> bool:
        hood = reduced.closed_neighborhood(center)
        return any(reduced.closed_neighborhood(w) <= hood for w in reduced.vertices if w != center)

    return _has_witness(u) and _has_witness(v)


# ==================== 鄰域包含 poset ====================

def is_ni_poset(graph: Graph, poset: Poset) -> bool:
    """x ≤ y 蘊含 N[x] ⊆ N[y]"""
    _check_ground(graph, poset)
    return all(graph.closed_neighborhood(x) <= graph.closed_neighborhood(y)
               for x, y in poset.relation_pairs())


def is_weak_ni_poset(graph: Graph, poset: Poset) -> bool:
    """x ≤ y 蘊含 N[x] ⊆ N[y] 或 N[x] ⊇ N[y]"""
    _check_ground(graph, poset)
    for x, y in poset.relation_pairs():
        nx_, ny_ = graph.closed_neighborhood(x), graph.closed_neighborhood(y)
        if not (nx_ <= ny_ or ny_ <= nx_):
            return False
    return True


# ==================== 圖類辨識 ====================

def _is_clique(graph: Graph, members: ElementSet) -> bool:
    items = sorted(members)
    return all(graph.has_edge(a, b) for i, a in enumerate(items) for b in items[i + 1:])


def _is_independent(graph: Graph, members: ElementSet) -> bool:
    return all(not (graph.adjacency[x] & members) for x in members)


def is_split(graph: Graph) -> Tuple[bool, Optional[SplitDecomposition]]:
    """
    Hammer–Simeone 度數序列判定，並構造見證分割

    度數遞減排序 d1 ≥ … ≥ dn，m = max{i | d_i ≥ i − 1}；
    G 為 split ⇔ Σ_{i≤m} d_i = m(m − 1) + Σ_{i>m} d_i，此時前 m 個頂點為團、其餘為獨立集。
    若團中有頂點在 S 中沒有鄰居，就把它移到 S（獨立集取最大）。
    """
    order = sorted(graph.vertices, key=lambda v: (-graph.degree(v), v))
    degrees = [graph.degree(v) for v in order]
    m = 0
    for i, d in enumerate(degrees, start=1):
        if d >= i - 1:
            m = i
    if sum(degrees[:m]) != m * (m - 1) + sum(degrees[m:]):
        return False, None

    clique = set(order[:m])
    independent = set(order[m:])
    for c in sorted(clique):
        if not graph.adjacency[c] & independent:
            clique.discard(c)
            independent.add(c)
            break

    dec = SplitDecomposition(S=frozenset(independent), C=frozenset(clique))
    if not (_is_clique(graph, dec.C) and _is_independent(graph, dec.S)):
        logger.error("❌ split 見證分割驗證失敗")
        return False, None
    return True, dec


def is_bipartite(graph: Graph) -> Tuple[bool, Optional[Tuple[ElementSet, ElementSet]]]:
    """二部圖判定，見證為兩個獨立集"""
    try:
        coloring = nx.bipartite.color(graph.to_networkx())
    except nx.NetworkXError:
        return False, None
    left = frozenset(v for v, c in coloring.items() if c == 0)
    return True, (left, graph.vertex_set - left)


def is_cobipartite(graph: Graph) -> Tuple[bool, Optional[Tuple[ElementSet, ElementSet]]]:
    """co-bipartite ⇔ 補圖為二部圖，見證為兩個團"""
    try:
        coloring = nx.bipartite.color(nx.complement(graph.to_networkx()))
    except nx.NetworkXError:
        return False, None
    left = frozenset(v for v, c in coloring.items() if c == 0)
    return True, (left, graph.vertex_set - left)


def is_triangle_free(graph: Graph) -> Tuple[bool, Optional[Tuple[Element, Element, Element]]]:
    """沒有三角形；否則回傳字典序最小頂點上的一個三角形"""
    counts = nx.triangles(graph.to_networkx())
    corners = sorted(v for v, c in counts.items() if c > 0)
    if not corners:
        return True, None
    a = corners[0]
    hood = sorted(graph.adjacency[a])
    for i, b in enumerate(hood):
        for c in hood[i + 1:]:
            if graph.has_edge(b, c):
                return False, (a, b, c)
    return False, None


# ==================== twins ====================

def are_false_twins(graph: Graph, x: Element, y: Element) -> bool:
    """N(x) = N(y) 且 x、y 不相鄰"""
    return x != y and not graph.has_edge(x, y) and graph.open_neighborhood(x) == graph.open_neighborhood(y)


def false_twin_classes(graph: Graph) -> List[ElementSet]:
    """開鄰域相同（且非空）的頂點類別，只回傳大小 ≥ 2 者"""
    groups: Dict[ElementSet, set] = {}
    for v in graph.vertices:
        hood = graph.adjacency[v]
        if hood:
            groups.setdefault(hood, set()).add(v)
    return sorted((frozenset(g) for g in groups.values() if len(g) > 1), key=lambda s: sorted(s))


# ==================== split 分解 ====================

def split_decomposition_min(graph: Graph, poset: Poset) -> SplitDecomposition:
    """
    取最大獨立集的 split 分解，再以交換 S ∖ {x} ∪ {y_x} 使 S ⊆ Min(P)

    N.I. poset 下，若 x ∈ S 不是極小元，則 ↓x 中的極小元 y 必在 C 且 N[y] = N[x]；
    交換後分割仍合法，且 |S ∩ Min(P)| 嚴格增加。

    Raises:
        NotSplit: G 不是 split 圖
        NotNIPoset: P 不是 G 的鄰域包含 poset
    """
    ok, dec = is_split(graph)
    if not ok:
        raise NotSplit("圖不是 split 圖")
    if not is_ni_poset(graph, poset):
        raise NotNIPoset("poset 不是鄰域包含 poset")

    minimal = poset.minimal()
    independent, clique = set(dec.S), set(dec.C)
    while True:
        offenders = sorted(x for x in independent if x not in minimal)
        if not offenders:
            break
        x = offenders[0]
        below = poset.down(x) - {x}
        y = min(poset.min_elements(below))
        if y not in clique:
            raise NotNIPoset(f"{y} < {x} 但兩者都在獨立集中")
        independent.discard(x)
        independent.add(y)
        clique.discard(y)
        clique.add(x)
        logger.debug(f"split 分解交換：{x} ↔ {y}")

    result = SplitDecomposition(S=frozenset(independent), C=frozenset(clique))
    if not (_is_clique(graph, result.C) and _is_independent(graph, result.S)):
        raise NotNIPoset("交換後的分割不合法")
    return result


def minimal_dominating_sets_oracle(graph: Graph, cap: int = 20) -> SetFamily:
    """D(G) = Tr(N(G))，以窮舉子集計算"""
    return transversals_oracle(neighborhood_hypergraph(graph), cap)

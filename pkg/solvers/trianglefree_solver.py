# solvers/trianglefree_solver.py
"""
triangle-free 圖 + 弱鄰域包含 poset 的 output-polynomial 列舉

流程：
1. star_decompose：poset 高度 ≤ 2，拆成孤立元素 A 與若干顆星（↓u 或 ↑u）
2. reduce_tf：每顆星的枝葉收縮成一個代表頂點 v_i，移除星心之間的邊
3. enum_DW：列舉支配 A' = A ∖ ∪N[w_i] 的極小集合 D*
4. lift：D = D* ∪ {w_i | v_i ∉ N[D*]}，取 ↓D
5. expand：代表頂點換回全部枝葉
"""

import logging
from dataclasses import dataclass, field
from enum import Enum
from typing import Dict, Iterator, List, Optional, Tuple

import networkx as nx

from core.errors import NotAValidDStar, NotTriangleFree, NotWeakNI, StructureViolation
from core.graph import (Graph, are_false_twins, is_minimal_dominating, is_redundant_edge,
                        is_triangle_free, is_weak_ni_poset)
from core.hypergraph import Hypergraph, transversal_enum
from core.poset import Element, ElementSet, IdealFamily, Poset, SetFamily, build_poset, canonical, minimal_sets

logger = logging.getLogger(__name__)


class Orientation(str, Enum):
    BRANCHES_BELOW = 'branches_below'    # S = ↓center
    BRANCHES_ABOVE = 'branches_above'    # S = ↑center


@dataclass(frozen=True)
class Star:
    center: Element
    branches: ElementSet
    orientation: Orientation


@dataclass(frozen=True)
class StarDecomposition:
    """A：poset 中的孤立元素；stars：其餘元素分成的星"""
    A: ElementSet
    stars: Tuple[Star, ...]


@dataclass
class ReducedInstance:
    """
    收縮後的圖與 poset

    Attributes:
        G_re / P_re: 收縮並移除星心之間的邊之後的圖與 poset
        contraction: 星的編號 → (代表頂點 v_i, 原本的枝葉)
        B_u / B_v / B_w: 依星的編號排列的 u_i、v_i、w_i = Min{u_i, v_i}
        A / A_prime: 孤立元素與 A' = A ∖ ∪N[w_i]
        removed_edges: 被移除的星心之間的邊
    """
    G_re: Graph
    P_re: Poset
    contraction: Dict[int, Tuple[Element, ElementSet]]
    B_u: List[Element]
    B_v: List[Element]
    B_w: List[Element]
    A: ElementSet
    A_prime: ElementSet
    removed_edges: List[Tuple[Element, Element]] = field(default_factory=list)

    def manifest(self) -> List[str]:
        """收縮紀錄（dump-reduced 用）"""
        lines = []
        for i in sorted(self.contraction):
            v, branches = self.contraction[i]
            lines.append(f"contract: {v} = {' '.join(canonical(branches))}")
        lines += [f"star: u={u} v={v} w={w}" for u, v, w in zip(self.B_u, self.B_v, self.B_w)]
        lines += [f"removed-edge: {a} {b}" for a, b in self.removed_edges]
        lines.append(f"a-prime: {' '.join(canonical(self.A_prime))}".rstrip())
        return lines


# ==================== 星狀分解 ====================

def star_decompose(graph: Graph, poset: Poset) -> StarDecomposition:
    """
    Raises:
        NotTriangleFree: G 含三角形
        NotWeakNI: P 不是弱 N.I. poset
        StructureViolation: 高度 > 2、某個分量不是 ↓u / ↑u，或枝葉度數不為一
    """
    ok, triangle = is_triangle_free(graph)
    if not ok:
        raise NotTriangleFree(f"圖含三角形: {' '.join(triangle)}" if triangle else "圖含三角形")
    if not is_weak_ni_poset(graph, poset):
        raise NotWeakNI("poset 不是弱鄰域包含 poset")
    if poset.height() > 2:
        raise StructureViolation(f"poset 高度為 {poset.height()}，超過 2")

    pairs = poset.relation_pairs()
    comparability = nx.Graph()
    comparability.add_edges_from(pairs)
    isolated = poset.element_set - frozenset(comparability.nodes)

    stars = []
    components = sorted((frozenset(c) for c in nx.connected_components(comparability)), key=canonical)
    for component in components:
        x, y = next((a, b) for a, b in pairs if a in component)
        if graph.closed_neighborhood(x) <= graph.closed_neighborhood(y):
            center, span, orientation = y, poset.down(y), Orientation.BRANCHES_BELOW
        else:
            center, span, orientation = x, poset.up(x), Orientation.BRANCHES_ABOVE
        if span != component:
            raise StructureViolation(f"以 {center} 為中心的分量不是一顆星")
        branches = component - {center}
        bad = sorted(b for b in branches if graph.degree(b) != 1)
        if bad:
            raise StructureViolation(f"星 {center} 的枝葉度數不為一: {' '.join(bad)}")
        stars.append(Star(center, branches, orientation))

    logger.debug(f"星狀分解：|A| = {len(isolated)}，{len(stars)} 顆星")
    return StarDecomposition(frozenset(isolated), tuple(stars))


# ==================== 收縮 ====================

def reduce_tf(graph: Graph, poset: Poset, sd: StarDecomposition) -> ReducedInstance:
    """
    Raises:
        StructureViolation: 枝葉不是 false twin、移除的邊不冗餘、或結果不是 induced matching
    """
    contraction: Dict[int, Tuple[Element, ElementSet]] = {}
    dropped = set()
    B_u, B_v = [], []
    for i, star in enumerate(sd.stars):
        if not star.branches:
            raise StructureViolation(f"星 {star.center} 沒有枝葉")
        ordered = sorted(star.branches)
        for a, b in zip(ordered, ordered[1:]):
            if not are_false_twins(graph, a, b):
                raise StructureViolation(f"{a} 與 {b} 不是 false twin")
        representative = ordered[0]
        contraction[i] = (representative, star.branches)
        dropped |= set(ordered[1:])
        B_u.append(star.center)
        B_v.append(representative)

    vertices = [x for x in graph.vertices if x not in dropped]
    reduced = graph.induced_subgraph(vertices)

    centers = set(B_u)
    removed = []
    for a, b in reduced.edges():
        if a in centers and b in centers:
            if not is_redundant_edge(reduced, a, b):
                raise StructureViolation(f"星心之間的邊 {a}{b} 不是冗餘邊")
            reduced = reduced.without_edge(a, b)
            removed.append((a, b))

    relations = []
    for star, u, v in zip(sd.stars, B_u, B_v):
        relations.append((v, u) if star.orientation == Orientation.BRANCHES_BELOW else (u, v))
    reduced_poset = build_poset(vertices, relations)

    B_w = []
    for u, v in zip(B_u, B_v):
        if reduced_poset.less(v, u):
            B_w.append(v)
        elif reduced_poset.less(u, v):
            B_w.append(u)
        else:
            raise StructureViolation(f"{u} 與 {v} 不可比較")

    # induced matching，且 v_i 與 A 不相連
    matched = set(B_u) | set(B_v)
    for u, v in zip(B_u, B_v):
        if reduced.open_neighborhood(v) != {u}:
            raise StructureViolation(f"代表頂點 {v} 的鄰居不只 {u}")
        if reduced.open_neighborhood(u) & matched != {v}:
            raise StructureViolation(f"{u}{v} 不是 induced matching 的一邊")

    covered = reduced.closed_neighborhood_of(B_w)
    A_prime = sd.A - covered
    logger.info(f"✅ 收縮完成：k = {len(B_u)}，移除 {len(removed)} 條星心邊，|A'| = {len(A_prime)}")
    return ReducedInstance(reduced, reduced_poset, contraction, B_u, B_v, B_w, sd.A, A_prime, removed)


# ==================== D_G(W) ====================

def enum_DW(graph: Graph, W: ElementSet, **caps) -> SetFamily:
    """
    D_G(W)：支配 W 的極小頂點集合（可含 W 以外的頂點）= Tr(Min{N[w] | w ∈ W})

    Raises:
        CapExceeded: Berge 列舉超過上限
    """
    W = graph.check_members(W)
    if not W:
        return SetFamily.of([frozenset()])
    hoods = Hypergraph(graph.vertices, minimal_sets(graph.closed_neighborhood(w) for w in W))
    return transversal_enum(hoods, **caps)


# ==================== 回推 ====================

def lift(ri: ReducedInstance, Dstar: ElementSet) -> ElementSet:
    """
    ↓(D* ∪ {w_i | v_i ∉ N[D*]})

    Raises:
        NotAValidDStar: D* 沒有極小支配 A'
    """
    Dstar = ri.G_re.check_members(Dstar)
    if not is_minimal_dominating(ri.G_re, Dstar, ri.A_prime):
        raise NotAValidDStar(f"{{{' '.join(canonical(Dstar))}}} 沒有極小支配 A'")
    dominated = ri.G_re.closed_neighborhood_of(Dstar)
    extra = {w for v, w in zip(ri.B_v, ri.B_w) if v not in dominated}
    return ri.P_re.down_closure(Dstar | extra)


def expand(ri: ReducedInstance, ideal: ElementSet) -> ElementSet:
    """代表頂點 v_i 換回整組枝葉"""
    result = set(ideal)
    for representative, branches in ri.contraction.values():
        if representative in result:
            result |= branches
    return frozenset(result)


def iter_trianglefree(graph: Graph, poset: Poset, **caps) -> Iterator[ElementSet]:
    """依 D* 的標準順序逐一產生 ID(G, P)（不重複）"""
    sd = star_decompose(graph, poset)
    ri = reduce_tf(graph, poset, sd)
    seen = set()
    for Dstar in enum_DW(ri.G_re, ri.A_prime, **caps):
        solution = expand(ri, lift(ri, Dstar))
        if solution not in seen:
            seen.add(solution)
            yield solution
    logger.info(f"✅ triangle-free 列舉完成：{len(seen)} 個解")


def enum_trianglefree(graph: Graph, poset: Poset, **caps) -> IdealFamily:
    return IdealFamily.of(iter_trianglefree(graph, poset, **caps))


def reduced_instance(graph: Graph, poset: Poset) -> ReducedInstance:
    """star_decompose + reduce_tf（dump-reduced 用）"""
    return reduce_tf(graph, poset, star_decompose(graph, poset))

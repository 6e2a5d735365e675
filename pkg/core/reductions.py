# core/reductions.py
"""
ITrans-Enum → IDom-Enum 的三種構造與解的回推

三種目標圖類：
1. bipartite：I(H) 加上與 X 全相鄰的 v；P_G = P_H ∪ {x < y}
2. split：X 補成團、v 為萬用頂點；P_G = P_H ∪ {v < y}（弱 N.I.）
3. co-bipartite：I(H) 加上 v，X ∪ {v} 與 Y 各自補成團；P_G = P_H（N.I.）

輸入一律先取 filter 閉包 ↑H（不改變 ITr）。輔助頂點命名：超邊代表 _e<i>，額外頂點 _v。
"""

import logging
from dataclasses import dataclass, field
from typing import Dict, Iterable, List, Optional, Tuple

from core.dualize import ITransInstance
from core.errors import EmptyHypergraph, GroundMismatch, InconsistentSolutions
from core.graph import Graph
from core.hypergraph import bipartite_incidence_graph, filter_closure, is_transversal
from core.poset import Element, ElementSet, IdealFamily, Poset, build_poset, canonical

logger = logging.getLogger(__name__)

EXTRA_VERTEX = '_v'
TARGETS = ('bipartite', 'split', 'cobipartite')


@dataclass(frozen=True)
class IDomInstance:
    """IDom-Enum 輸入：圖 G 與其頂點上的 poset"""
    G: Graph
    P: Poset

    def __post_init__(self):
        if self.G.vertex_set != self.P.element_set:
            raise GroundMismatch("圖的頂點集合與 poset 元素集合不一致")


@dataclass(frozen=True)
class ReductionArtifact:
    """
    一次歸約的產物

    Attributes:
        target: bipartite / split / cobipartite
        instance: 構造出的 IDom 實例
        source: 已取 filter 閉包的原始 ITrans 實例
        extra_vertex: 額外頂點 v 的名稱
        edge_vertices: 超邊 → y_e 名稱
        exceptions: 例外規則（文字，一行一條）
    """
    target: str
    instance: IDomInstance
    source: ITransInstance
    extra_vertex: Element
    edge_vertices: Dict[ElementSet, Element]
    exceptions: Tuple[str, ...] = ()

    @property
    def original_vertices(self) -> ElementSet:
        return self.source.P.element_set

    @property
    def edge_vertex_set(self) -> ElementSet:
        return frozenset(self.edge_vertices.values())


@dataclass
class RecoveryReport:
    """回推結果：保留的解、被丟棄的解，以及另外補上的 V(H)"""
    kept: IdealFamily
    discarded: List[ElementSet] = field(default_factory=list)
    added: Optional[ElementSet] = None


def _prepare(inst: ITransInstance):
    closed = filter_closure(inst.H, inst.P)
    if not closed.edges:
        raise EmptyHypergraph("超圖沒有任何超邊，無法歸約")
    incidence, names = bipartite_incidence_graph(closed)
    return ITransInstance(closed, inst.P), incidence, names


def _clique_edges(members: Iterable[Element]) -> List[Tuple[Element, Element]]:
    items = sorted(members)
    return [(a, b) for i, a in enumerate(items) for b in items[i + 1:]]


def _edge_lines(names: Dict[ElementSet, Element]) -> List[str]:
    return [f"edge-vertex: {name} = {' '.join(canonical(e))}"
            for e, name in sorted(names.items(), key=lambda kv: canonical(kv[0]))]


def reduce_bipartite(inst: ITransInstance) -> ReductionArtifact:
    """
    二部圖目標：I ∈ ITr(H, P), I ≠ X ⇔ I ∪ {v} ∈ ID(G, P_G)；X 另行處理

    Raises:
        EmptyHypergraph: ↑H 沒有超邊
    """
    source, incidence, names = _prepare(inst)
    ground = list(source.P.elements)
    ys = [names[e] for e in source.H.sorted_edges()]
    v = EXTRA_VERTEX

    vertices = ground + ys + [v]
    edges = incidence.edges() + [(v, x) for x in ground]
    relations = source.P.relation_pairs() + [(x, y) for x in ground for y in ys]
    graph = Graph(vertices, edges)
    poset = build_poset(vertices, relations)

    rules = [
        "target: bipartite",
        f"strip: {v}",
        f"discard: {' '.join(sorted(ground))}",
        f"readd-if-minimal: {' '.join(sorted(ground))}",
    ] + _edge_lines(names)
    logger.info(f"✅ bipartite 歸約：|V(G)| = {len(vertices)}，|E(G)| = {len(edges)}")
    return ReductionArtifact('bipartite', IDomInstance(graph, poset), source, v, names, tuple(rules))


def reduce_split(inst: ITransInstance) -> ReductionArtifact:
    """
    split 目標：ID(G, P_G) = ITr(H, P) ∪ {{v}}

    Raises:
        EmptyHypergraph: ↑H 沒有超邊
    """
    source, incidence, names = _prepare(inst)
    ground = list(source.P.elements)
    ys = [names[e] for e in source.H.sorted_edges()]
    v = EXTRA_VERTEX

    vertices = ground + ys + [v]
    edges = incidence.edges() + _clique_edges(ground) + [(v, u) for u in ground + ys]
    relations = source.P.relation_pairs() + [(v, y) for y in ys]
    graph = Graph(vertices, edges)
    poset = build_poset(vertices, relations)

    rules = ["target: split", f"discard: {v}"] + _edge_lines(names)
    logger.info(f"✅ split 歸約：|V(G)| = {len(vertices)}，|E(G)| = {len(graph.edges())}")
    return ReductionArtifact('split', IDomInstance(graph, poset), source, v, names, tuple(rules))


def reduce_cobipartite(inst: ITransInstance) -> ReductionArtifact:
    """
    co-bipartite 目標：ID(G, P_G) = ITr(H, P) ∪ {一些 {x, y}，x ∈ X ∪ {v}, y ∈ Y}

    Raises:
        EmptyHypergraph: ↑H 沒有超邊
    """
    source, incidence, names = _prepare(inst)
    ground = list(source.P.elements)
    ys = [names[e] for e in source.H.sorted_edges()]
    v = EXTRA_VERTEX

    vertices = ground + ys + [v]
    edges = (incidence.edges() + [(v, x) for x in ground]
             + _clique_edges(ground + [v]) + _clique_edges(ys))
    graph = Graph(vertices, edges)
    poset = build_poset(vertices, source.P.relation_pairs())

    rules = [
        "target: cobipartite",
        f"discard-pairs: left={' '.join(sorted(ground + [v]))} right={' '.join(sorted(ys))}",
    ] + _edge_lines(names)
    logger.info(f"✅ co-bipartite 歸約：|V(G)| = {len(vertices)}，|E(G)| = {len(graph.edges())}")
    return ReductionArtifact('cobipartite', IDomInstance(graph, poset), source, v, names, tuple(rules))


REDUCERS = {
    'bipartite': reduce_bipartite,
    'split': reduce_split,
    'cobipartite': reduce_cobipartite,
}


def _ground_is_minimal(source: ITransInstance) -> bool:
    """X 是否是 ITr(H, P) 的成員：X 為橫截且移除任何極大元素都不再是橫截"""
    ground = source.P.element_set
    if not is_transversal(source.H, ground):
        return False
    return all(not is_transversal(source.H, ground - {x}) for x in source.P.max_elements(ground))


def recover_detailed(art: ReductionArtifact, sols: Iterable[Iterable[Element]]) -> RecoveryReport:
    """
    依目標圖類的例外規則，把 ID(G, P_G) 回推成 ITr(H, P)

    Raises:
        InconsistentSolutions: 某個解的形狀不符合該構造的結論
    """
    ground = art.original_vertices
    v = art.extra_vertex
    ys = art.edge_vertex_set
    kept: List[ElementSet] = []
    discarded: List[ElementSet] = []
    added = None

    for sol in sorted((frozenset(s) for s in sols), key=canonical):
        if art.target == 'bipartite':
            if sol == ground:
                discarded.append(sol)
            elif v in sol and (sol - {v}) < ground:
                kept.append(sol - {v})
            else:
                raise InconsistentSolutions(f"bipartite 歸約出現非預期的解: {' '.join(canonical(sol))}")
        elif art.target == 'split':
            if sol == frozenset({v}):
                discarded.append(sol)
            elif sol <= ground:
                kept.append(sol)
            else:
                raise InconsistentSolutions(f"split 歸約出現非預期的解: {' '.join(canonical(sol))}")
        else:
            if sol <= ground:
                kept.append(sol)
            elif len(sol) == 2 and len(sol & ys) == 1 and len(sol & (ground | {v})) == 1:
                discarded.append(sol)
            else:
                raise InconsistentSolutions(f"co-bipartite 歸約出現非預期的解: {' '.join(canonical(sol))}")

    if art.target == 'bipartite' and _ground_is_minimal(art.source):
        added = ground
        kept.append(ground)

    report = RecoveryReport(kept=IdealFamily.of(kept), discarded=discarded, added=added)
    logger.info(f"✅ {art.target} 回推：保留 {len(report.kept)}，丟棄 {len(discarded)}"
                f"{'，補上 V(H)' if added is not None else ''}")
    return report


def recover(art: ReductionArtifact, sols: Iterable[Iterable[Element]]) -> IdealFamily:
    """ID(G, P_G) → ITr(H, P)"""
    return recover_detailed(art, sols).kept

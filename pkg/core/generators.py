# core/generators.py
"""
可重現的隨機實例

所有隨機性都來自呼叫端傳入的 numpy Generator（make_rng(seed)），同一個種子產生同一份實例。
"""

import logging
from dataclasses import dataclass, field
from typing import Dict, List, Optional, Tuple, Union

import numpy as np

from core.errors import CycleError, InvalidParams
from core.graph import Graph, is_ni_poset, is_weak_ni_poset
from core.hypergraph import Hypergraph
from core.poset import Element, IdealFamily, Poset, build_poset, maximal_sets, minimal_sets

logger = logging.getLogger(__name__)

MAX_ELEMENTS = 2000
KINDS = ('poset', 'hypergraph', 'itrans', 'dual', 'graph',
         'split', 'bipartite', 'cobipartite', 'trianglefree')

Part = Union[Poset, Hypergraph, Graph, IdealFamily]


@dataclass
class GeneratedInstance:
    """gen 的產物：{檔名後綴: 物件}"""
    kind: str
    seed: int
    parts: Dict[str, Part] = field(default_factory=dict)


def make_rng(seed: int) -> np.random.Generator:
    if seed < 0:
        raise InvalidParams(f"種子必須是非負整數: {seed}")
    return np.random.default_rng(seed)


def element_names(n: int, prefix: str = 'x') -> List[Element]:
    return [f"{prefix}{i}" for i in range(1, n + 1)]


def _check_n(n: int, low: int = 1) -> None:
    if n < low or n > MAX_ELEMENTS:
        raise InvalidParams(f"n 必須介於 {low} 與 {MAX_ELEMENTS} 之間: {n}")


# ==================== poset / 超圖 ====================

def random_poset(n: int, rng: np.random.Generator, edge_prob: float = 0.25) -> Poset:
    """隨機拓撲順序上的 DAG 再取遞移閉包"""
    _check_n(n)
    names = element_names(n)
    order = rng.permutation(n)
    relations = []
    for i in range(n):
        for j in range(i + 1, n):
            if rng.random() < edge_prob:
                relations.append((names[order[i]], names[order[j]]))
    return build_poset(names, relations)


def random_hypergraph(n: int, m: int, rng: np.random.Generator, max_edge_size: int = 4) -> Hypergraph:
    """m 條隨機超邊取 ⊆-極小（結果可能少於 m 條）"""
    _check_n(n)
    if m < 1:
        raise InvalidParams(f"超邊數 m 必須 ≥ 1: {m}")
    names = element_names(n)
    edges = []
    for _ in range(m):
        size = int(rng.integers(1, min(n, max_edge_size) + 1))
        picked = rng.choice(n, size=size, replace=False)
        edges.append(frozenset(names[i] for i in picked))
    return Hypergraph(names, minimal_sets(edges))


def random_ideal_antichain(poset: Poset, m: int, rng: np.random.Generator) -> IdealFamily:
    """m 個隨機子集的 down-closure，再取 ⊆-極大（ideal 的 antichain）"""
    if m < 1:
        raise InvalidParams(f"成員數 m 必須 ≥ 1: {m}")
    elements = list(poset.elements)
    ideals = []
    for _ in range(m):
        mask = rng.random(len(elements)) < 0.4
        ideals.append(poset.down_closure(x for x, keep in zip(elements, mask) if keep))
    return IdealFamily.of(maximal_sets(ideals))


# ==================== 圖 ====================

def random_graph(n: int, rng: np.random.Generator, edge_prob: float = 0.3) -> Graph:
    _check_n(n)
    names = element_names(n)
    edges = [(names[i], names[j]) for i in range(n) for j in range(i + 1, n) if rng.random() < edge_prob]
    return Graph(names, edges)


def _random_halves(n: int, rng: np.random.Generator, max_first: Optional[int] = None) -> Tuple[List[int], List[int]]:
    order = [int(i) for i in rng.permutation(n)]
    upper = n if max_first is None else min(n, max_first)
    k = int(rng.integers(1, upper + 1)) if n > 1 else 1
    return order[:k], order[k:]


def random_split_graph(n: int, rng: np.random.Generator, edge_prob: float = 0.5,
                       max_clique: Optional[int] = None) -> Graph:
    """團 C 加獨立集 S，S–C 邊獨立抽樣"""
    _check_n(n)
    names = element_names(n)
    clique, independent = _random_halves(n, rng, max_clique)
    edges = [(names[a], names[b]) for i, a in enumerate(clique) for b in clique[i + 1:]]
    edges += [(names[s], names[c]) for s in independent for c in clique if rng.random() < edge_prob]
    return Graph(names, edges)


def random_bipartite_graph(n: int, rng: np.random.Generator, edge_prob: float = 0.4) -> Graph:
    _check_n(n)
    names = element_names(n)
    left, right = _random_halves(n, rng)
    edges = [(names[a], names[b]) for a in left for b in right if rng.random() < edge_prob]
    return Graph(names, edges)


def random_cobipartite_graph(n: int, rng: np.random.Generator, edge_prob: float = 0.4) -> Graph:
    _check_n(n)
    names = element_names(n)
    left, right = _random_halves(n, rng)
    edges = [(names[a], names[b]) for part in (left, right) for i, a in enumerate(part) for b in part[i + 1:]]
    edges += [(names[a], names[b]) for a in left for b in right if rng.random() < edge_prob]
    return Graph(names, edges)


def random_triangle_free_graph(n: int, rng: np.random.Generator, edge_prob: float = 0.4) -> Graph:
    """依隨機順序嘗試加邊，只要兩端沒有共同鄰居就保留"""
    _check_n(n)
    names = element_names(n)
    pairs = [(i, j) for i in range(n) for j in range(i + 1, n)]
    neighbors = [set() for _ in range(n)]
    edges = []
    for p in rng.permutation(len(pairs)):
        i, j = pairs[int(p)]
        if rng.random() < edge_prob and not neighbors[i] & neighbors[j]:
            neighbors[i].add(j)
            neighbors[j].add(i)
            edges.append((names[i], names[j]))
    return Graph(names, edges)


# ==================== 相容的 poset ====================

def random_ni_poset(graph: Graph, rng: np.random.Generator, pair_prob: float = 0.5) -> Poset:
    """
    只在 N[x] ⊊ N[y]（或 N[x] = N[y] 且 x 的字典序較小）的 pair 間抽樣 x < y

    這個關係本身是偏序，取子集的閉包仍在其中，所以結果一定是 N.I. poset。
    """
    relations = []
    for x in graph.vertices:
        nx_ = graph.closed_neighborhood(x)
        for y in graph.vertices:
            if x == y:
                continue
            ny_ = graph.closed_neighborhood(y)
            below = nx_ < ny_ or (nx_ == ny_ and x < y)
            if below and rng.random() < pair_prob:
                relations.append((x, y))
    poset = build_poset(graph.vertices, relations)
    if not is_ni_poset(graph, poset):
        raise InvalidParams("產生的 poset 不是 N.I. poset")
    return poset


def random_weak_ni_poset(graph: Graph, rng: np.random.Generator, pair_prob: float = 0.5) -> Poset:
    """
    鄰域可比較的 pair 隨機定向後逐一加入，閉包仍無環且仍是弱 N.I. 才保留
    """
    candidates = []
    for i, x in enumerate(graph.vertices):
        for y in graph.vertices[i + 1:]:
            nx_, ny_ = graph.closed_neighborhood(x), graph.closed_neighborhood(y)
            if nx_ <= ny_ or ny_ <= nx_:
                candidates.append((x, y) if rng.random() < 0.5 else (y, x))

    relations: List[Tuple[Element, Element]] = []
    poset = build_poset(graph.vertices, [])
    for idx in rng.permutation(len(candidates)):
        if rng.random() >= pair_prob:
            continue
        trial = relations + [candidates[int(idx)]]
        try:
            extended = build_poset(graph.vertices, trial)
        except CycleError:
            continue
        if is_weak_ni_poset(graph, extended):
            relations, poset = trial, extended
    return poset


# ==================== 入口 ====================

def generate(kind: str, n: int, m: int, seed: int) -> GeneratedInstance:
    """
    依種類產生實例

    Raises:
        InvalidParams: 未知種類或參數超出範圍
    """
    if kind not in KINDS:
        raise InvalidParams(f"未知的實例種類: {kind}（可用：{', '.join(KINDS)}）")
    rng = make_rng(seed)
    inst = GeneratedInstance(kind, seed)

    if kind == 'poset':
        inst.parts['poset'] = random_poset(n, rng)
    elif kind == 'hypergraph':
        inst.parts['hypergraph'] = random_hypergraph(n, m, rng)
    elif kind == 'itrans':
        inst.parts['hypergraph'] = random_hypergraph(n, m, rng)
        inst.parts['poset'] = random_poset(n, rng)
    elif kind == 'dual':
        poset = random_poset(n, rng)
        inst.parts['poset'] = poset
        inst.parts['bplus'] = random_ideal_antichain(poset, m, rng)
    elif kind == 'graph':
        graph = random_graph(n, rng)
        inst.parts['graph'] = graph
        inst.parts['poset'] = random_ni_poset(graph, rng)
    elif kind == 'split':
        graph = random_split_graph(n, rng)
        inst.parts['graph'] = graph
        inst.parts['poset'] = random_ni_poset(graph, rng)
    elif kind == 'bipartite':
        graph = random_bipartite_graph(n, rng)
        inst.parts['graph'] = graph
        inst.parts['poset'] = random_ni_poset(graph, rng)
    elif kind == 'cobipartite':
        graph = random_cobipartite_graph(n, rng)
        inst.parts['graph'] = graph
        inst.parts['poset'] = random_ni_poset(graph, rng)
    else:
        graph = random_triangle_free_graph(n, rng)
        inst.parts['graph'] = graph
        inst.parts['poset'] = random_weak_ni_poset(graph, rng)

    logger.info(f"✅ 產生 {kind} 實例（n={n}, m={m}, seed={seed}）")
    return inst

# core/dualize.py
"""
Dual-Enum / ITrans-Enum 核心

實現核心功能：
1. DualInstance / ITransInstance 兩種輸入
2. 貪婪求第一個解（由 I = X 開始逐一移除極大元素）
3. 暴力 oracle：dual_enum_oracle、itrans_oracle、idom_oracle
4. 通用解法：ITr(H, P) = Min⊆{↓T | T ∈ Tr(↑H)}
5. Dual ↔ ITrans 互相轉換
"""

import logging
from dataclasses import dataclass
from typing import Callable, Iterable, Optional

from config.lattice_config import lattice_config
from core.errors import EmptyEdge, GroundMismatch, NoSolution
from core.graph import Graph, dominates, neighborhood_hypergraph
from core.hypergraph import Hypergraph, filter_closure, is_transversal, transversal_enum
from core.poset import ElementSet, IdealFamily, Poset, canonical, minimal_sets

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class ITransInstance:
    """ITrans-Enum 輸入：超圖 H 與其頂點上的 poset"""
    H: Hypergraph
    P: Poset

    def __post_init__(self):
        if self.H.ground_set != self.P.element_set:
            raise GroundMismatch("超圖頂點集合與 poset 元素集合不一致")


@dataclass(frozen=True)
class DualInstance:
    """Dual-Enum 輸入：poset P 與 L(P) 中的 antichain B+"""
    P: Poset
    Bplus: IdealFamily

    def __post_init__(self):
        IdealFamily.of(self.Bplus).validate(self.P, "B+")
        object.__setattr__(self, 'Bplus', IdealFamily.of(self.Bplus))


def _greedy_minimal_ideal(poset: Poset, accept: Callable[[ElementSet], bool]) -> ElementSet:
    """
    由 I = X 開始，依逆字典序嘗試移除目前的極大元素，只要 accept 仍成立就移除並重新掃描

    accept 必須對 ideal 的包含關係單調，結果才是 ⊆-極小。
    """
    current = poset.element_set
    removed = True
    while removed:
        removed = False
        for x in sorted(poset.max_elements(current), reverse=True):
            candidate = current - {x}
            if accept(candidate):
                current = candidate
                removed = True
                break
    return current


def first_solution(inst: DualInstance) -> ElementSet:
    """
    B- 的一個成員：⊆-極小且不被任何 B ∈ B+ 包含的 ideal

    Raises:
        NoSolution: X 本身被某個 B 包含（只可能是 B+ = {X}）
    """
    bplus = list(inst.Bplus)

    def _escapes(ideal: ElementSet) -> bool:
        return not any(ideal <= b for b in bplus)

    if not _escapes(inst.P.element_set):
        raise NoSolution("B+ = {X}，不存在任何不被 B+ 包含的 ideal")
    result = _greedy_minimal_ideal(inst.P, _escapes)
    logger.debug(f"第一個解：{' '.join(canonical(result))}")
    return result


def first_transversal_ideal(inst: ITransInstance) -> ElementSet:
    """ITr(H, P) 的一個成員（V(H) 永遠是橫截，超邊非空）"""
    return _greedy_minimal_ideal(inst.P, lambda ideal: is_transversal(inst.H, ideal))


# ==================== 暴力 oracle ====================

def _cap(cap: Optional[int]) -> int:
    return lattice_config.oracle_cap if cap is None else cap


def _minimal_ideals(poset: Poset, accept: Callable[[ElementSet], bool], cap: Optional[int]) -> IdealFamily:
    hits = [ideal for ideal in poset.enumerate_ideals(_cap(cap)) if accept(ideal)]
    return IdealFamily.of(minimal_sets(hits))


def dual_enum_oracle(inst: DualInstance, cap: Optional[int] = None) -> IdealFamily:
    """
    B- = Min⊆{I ∈ I(P) | I ⊄ B, ∀ B ∈ B+}

    Raises:
        OracleCapExceeded: |X| 超過上限
    """
    bplus = list(inst.Bplus)
    return _minimal_ideals(inst.P, lambda ideal: not any(ideal <= b for b in bplus), cap)


def itrans_oracle(inst: ITransInstance, cap: Optional[int] = None) -> IdealFamily:
    """ITr(H, P) = Min⊆{I ∈ I(P) | I 是 H 的橫截}"""
    return _minimal_ideals(inst.P, lambda ideal: is_transversal(inst.H, ideal), cap)


def idom_oracle(graph: Graph, poset: Poset, cap: Optional[int] = None) -> IdealFamily:
    """ID(G, P) = Min⊆{I ∈ I(P) | I 支配 G}"""
    if graph.vertex_set != poset.element_set:
        raise GroundMismatch("圖的頂點集合與 poset 元素集合不一致")
    everything = graph.vertex_set
    return _minimal_ideals(poset, lambda ideal: dominates(graph, ideal, everything), cap)


def check_dual(inst: DualInstance, bminus: Iterable[Iterable[str]], cap: Optional[int] = None) -> bool:
    """
    B+ 與 B- 是否在 L(P) 中對偶（與 oracle 的 B- 比較）

    Raises:
        NotIdealFamily: B- 不是 ideal 的 antichain
        OracleCapExceeded: |X| 超過上限
    """
    bminus = IdealFamily.of(bminus).validate(inst.P, "B-")
    expected = dual_enum_oracle(inst, cap)
    verdict = bminus == expected
    if not verdict:
        missing = len(expected.as_set() - bminus.as_set())
        extra = len(bminus.as_set() - expected.as_set())
        logger.info(f"⚠️ 不對偶：缺少 {missing} 個、多出 {extra} 個成員")
    return verdict


# ==================== 通用解法 ====================

def itrans_enum_generic(inst: ITransInstance,
                        max_vertices: Optional[int] = None,
                        max_edges: Optional[int] = None,
                        max_family: Optional[int] = None) -> IdealFamily:
    """
    ITr(H, P) = Min⊆{↓T | T ∈ Tr(↑H)}

    ↑H 的任一極小橫截 ideal 都包含 ↑H 的某個極小橫截 T，而 ↓T 本身已是橫截 ideal。
    不保證 delay。

    Raises:
        CapExceeded: Berge 列舉超過上限
    """
    closed = filter_closure(inst.H, inst.P)
    if not closed.edges:
        return IdealFamily.of([frozenset()])
    transversals = transversal_enum(closed, max_vertices, max_edges, max_family)
    result = IdealFamily.of(minimal_sets(inst.P.down_closure(t) for t in transversals))
    logger.info(f"✅ 通用解法：|Tr(↑H)| = {len(transversals)}，|ITr| = {len(result)}")
    return result


def idom_enum_generic(graph: Graph, poset: Poset, **caps) -> IdealFamily:
    """ID(G, P) = ITr(N(G), P)"""
    return itrans_enum_generic(ITransInstance(neighborhood_hypergraph(graph), poset), **caps)


# ==================== Dual ↔ ITrans ====================

def dual_to_itrans(inst: DualInstance) -> ITransInstance:
    """
    H = {X ∖ B | B ∈ B+}，且 ITr(H, P) = B-

    Raises:
        EmptyEdge: B+ = {X}
    """
    ground = inst.P.element_set
    edges = [ground - b for b in inst.Bplus]
    if any(not e for e in edges):
        raise EmptyEdge("B+ 含有 X，補集超邊為空")
    return ITransInstance(Hypergraph(inst.P.elements, edges), inst.P)


def itrans_to_dual(inst: ITransInstance) -> DualInstance:
    """B+ = {X ∖ e | e ∈ ↑H}（極小 filter 的補集是極大 ideal，彼此不可比較）"""
    closed = filter_closure(inst.H, inst.P)
    ground = inst.P.element_set
    return DualInstance(inst.P, IdealFamily.of(ground - e for e in closed.edges))

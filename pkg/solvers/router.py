# solvers/router.py
"""
解法選擇與分派

auto 規則（對應複雜度總表中可解的格子）：
- G 為 split 且 P 為 N.I. poset            → split
- G 為 triangle-free 且 P 為弱 N.I. poset   → trianglefree
- 其他                                       → generic
"""

import logging
from typing import Dict, Iterator, Optional

from config.lattice_config import LatticeConfig, lattice_config
from core.dualize import (DualInstance, ITransInstance, dual_enum_oracle, dual_to_itrans, idom_enum_generic,
                          idom_oracle, itrans_enum_generic, itrans_oracle)
from core.errors import InvalidParams
from core.graph import Graph, is_ni_poset, is_split, is_triangle_free, is_weak_ni_poset
from core.metrics import EnumerationMetrics
from core.poset import ElementSet, IdealFamily, Poset
from solvers.split_solver import solve_split
from solvers.trianglefree_solver import iter_trianglefree

logger = logging.getLogger(__name__)

SOLVERS = ('auto', 'oracle', 'generic', 'split', 'trianglefree')


def berge_caps(config: LatticeConfig) -> Dict[str, int]:
    return {
        'max_vertices': config.transversal_vertex_cap,
        'max_edges': config.transversal_edge_cap,
        'max_family': config.family_cap,
    }


def route_idom(graph: Graph, poset: Poset) -> str:
    """auto 實際選到的解法（只選前提成立的專用解法）"""
    if is_split(graph)[0] and is_ni_poset(graph, poset):
        return 'split'
    if is_triangle_free(graph)[0] and is_weak_ni_poset(graph, poset):
        return 'trianglefree'
    return 'generic'


def _check_solver(solver: str, allowed) -> None:
    if solver not in allowed:
        raise InvalidParams(f"此指令不支援解法 {solver!r}（可用：{', '.join(allowed)}）")


def solve_idom(graph: Graph, poset: Poset, solver: str = 'auto',
               config: Optional[LatticeConfig] = None,
               metrics: Optional[EnumerationMetrics] = None) -> Iterator[ElementSet]:
    """
    ID(G, P) 的解串流；split 依 DFS 順序、trianglefree 依 D* 的標準順序邊算邊輸出，
    generic 與 oracle 依標準順序

    Raises:
        InvalidParams: 未知解法
    """
    _check_solver(solver, SOLVERS)
    config = config or lattice_config
    if solver == 'auto':
        solver = route_idom(graph, poset)
        logger.info(f"🔀 auto 選擇解法：{solver}")

    if solver == 'split':
        return solve_split(graph, poset, metrics)
    if solver == 'trianglefree':
        return iter_trianglefree(graph, poset, **berge_caps(config))
    if solver == 'oracle':
        return iter(idom_oracle(graph, poset, config.oracle_cap))
    return iter(idom_enum_generic(graph, poset, **berge_caps(config)))


def solve_itrans(inst: ITransInstance, solver: str = 'auto',
                 config: Optional[LatticeConfig] = None) -> IdealFamily:
    """ITr(H, P)；auto 一律走通用解法"""
    _check_solver(solver, ('auto', 'oracle', 'generic'))
    config = config or lattice_config
    if solver == 'oracle':
        return itrans_oracle(inst, config.oracle_cap)
    return itrans_enum_generic(inst, **berge_caps(config))


def solve_dual(inst: DualInstance, solver: str = 'auto',
               config: Optional[LatticeConfig] = None) -> IdealFamily:
    """B-；B+ 含有 X 時沒有任何解"""
    _check_solver(solver, ('auto', 'oracle', 'generic'))
    config = config or lattice_config
    if solver == 'oracle':
        return dual_enum_oracle(inst, config.oracle_cap)
    if inst.P.element_set in inst.Bplus:
        logger.info("B+ = {X}，B- 為空")
        return IdealFamily.of([])
    return solve_itrans(dual_to_itrans(inst), 'generic', config)

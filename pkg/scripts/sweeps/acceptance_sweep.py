#!/usr/bin/env python3
# scripts/sweeps/acceptance_sweep.py
"""
驗收掃描
- 各解法對暴力 oracle 的等價性（generic / split / trianglefree）
- 三種歸約與 Dual ↔ ITrans 轉換的回推
- triangle-free 結構性質與 ID(G, P) = ITr(N(G), P)
- split 解法的 delay 上限（預設每個實例取前 300 個解，--delay-emissions 0 跑完全部）
- antichain poset 下退化成經典問題

運行：
    python scripts/sweeps/acceptance_sweep.py --count 200 --seed 0
"""

import argparse
import logging
import sys
import time
from itertools import islice
from pathlib import Path
from typing import Callable, List

import pandas as pd

sys.path.append(str(Path(__file__).parent.parent.parent))

from core.dualize import (DualInstance, ITransInstance, dual_enum_oracle, dual_to_itrans, idom_enum_generic,  # noqa: E402
                          idom_oracle, itrans_enum_generic, itrans_oracle, itrans_to_dual)
from core.errors import LatticeError  # noqa: E402
from core.generators import (make_rng, random_graph, random_hypergraph, random_ideal_antichain, random_ni_poset,  # noqa: E402
                             random_poset, random_split_graph, random_triangle_free_graph,
                             random_weak_ni_poset)
from core.graph import minimal_dominating_sets_oracle, neighborhood_hypergraph  # noqa: E402
from core.hypergraph import Hypergraph, transversal_enum  # noqa: E402
from core.metrics import EnumerationMetrics  # noqa: E402
from core.poset import IdealFamily, antichain_poset  # noqa: E402
from core.reductions import REDUCERS, TARGETS, recover_detailed  # noqa: E402
from solvers.split_solver import SplitContext, enum_split, iter_split  # noqa: E402
from solvers.trianglefree_solver import enum_trianglefree, reduced_instance  # noqa: E402

logging.basicConfig(level=logging.WARNING, format='%(asctime)s - %(levelname)s - %(message)s')
logger = logging.getLogger(__name__)


class AcceptanceSweep:
    """固定種子的驗收掃描，每一項檢查記成 DataFrame 的一列"""

    def __init__(self, count: int = 200, seed: int = 0, delay_emissions: int = 300):
        self.count = count
        self.seed = seed
        self.delay_emissions = delay_emissions
        self.rows: List[dict] = []

    # ==================== 共用 ====================

    def _run(self, check: str, config: str, count: int, trial: Callable[[int], bool]):
        start = time.time()
        mismatches = 0
        errors = 0
        for i in range(count):
            try:
                if not trial(self.seed + i):
                    mismatches += 1
                    logger.warning(f"⚠️ {check}/{config} 種子 {self.seed + i} 不一致")
            except LatticeError as e:
                errors += 1
                logger.error(f"❌ {check}/{config} 種子 {self.seed + i}: {e}")
        elapsed = time.time() - start
        self.rows.append({
            'check': check,
            'config': config,
            'instances': count,
            'mismatches': mismatches,
            'errors': errors,
            'seconds': round(elapsed, 2),
        })
        print(f"  {check:<14} {config:<22} 不一致 {mismatches}，錯誤 {errors}（{elapsed:.1f}s）")

    # ==================== 1. oracle 等價 ====================

    def sweep_oracle_equivalence(self):
        print("\n🔍 oracle 等價")

        def generic_itrans(seed):
            rng = make_rng(seed)
            poset = random_poset(int(rng.integers(1, 11)), rng)
            n = len(poset)
            h = random_hypergraph(n, int(rng.integers(1, 6)), rng)
            inst = ITransInstance(Hypergraph(poset.elements, h.edges), poset)
            return itrans_enum_generic(inst) == itrans_oracle(inst)

        def generic_idom(seed):
            rng = make_rng(seed)
            graph = random_graph(int(rng.integers(1, 13)), rng)
            poset = random_ni_poset(graph, rng)
            return idom_enum_generic(graph, poset) == idom_oracle(graph, poset)

        def split(seed):
            rng = make_rng(seed)
            graph = random_split_graph(int(rng.integers(1, 13)), rng)
            poset = random_ni_poset(graph, rng)
            solutions = enum_split(SplitContext.from_instance(graph, poset))
            return len(solutions) == len(set(solutions)) and IdealFamily.of(solutions) == idom_oracle(graph, poset)

        def trianglefree(seed):
            rng = make_rng(seed)
            graph = random_triangle_free_graph(int(rng.integers(1, 13)), rng)
            poset = random_weak_ni_poset(graph, rng)
            return enum_trianglefree(graph, poset) == idom_oracle(graph, poset)

        self._run('oracle', 'generic-itrans', self.count, generic_itrans)
        self._run('oracle', 'generic-idom', self.count, generic_idom)
        self._run('oracle', 'split+ni', self.count, split)
        self._run('oracle', 'trianglefree+weak-ni', self.count, trianglefree)

    # ==================== 2. 歸約回推 ====================

    def _itrans_instance(self, seed: int) -> ITransInstance:
        rng = make_rng(seed)
        poset = random_poset(int(rng.integers(1, 7)), rng)
        h = random_hypergraph(len(poset), int(rng.integers(1, 5)), rng)
        return ITransInstance(Hypergraph(poset.elements, h.edges), poset)

    def sweep_reductions(self):
        print("\n🔁 歸約回推")
        count = max(1, self.count // 2)

        def translations(seed):
            inst = self._itrans_instance(seed)
            expected = itrans_oracle(inst)
            dual = itrans_to_dual(inst)
            if dual_enum_oracle(dual) != expected:
                return False
            if dual.P.element_set in dual.Bplus:
                return True
            return itrans_oracle(dual_to_itrans(dual)) == expected

        def round_trip(target):
            def trial(seed):
                inst = self._itrans_instance(seed)
                art = REDUCERS[target](inst)
                report = recover_detailed(art, idom_oracle(art.instance.G, art.instance.P))
                if report.kept != itrans_oracle(inst):
                    return False
                if target == 'bipartite':
                    return len(report.discarded) <= 1
                if target == 'split':
                    return report.discarded == [frozenset({art.extra_vertex})]
                return all(len(d) == 2 for d in report.discarded)
            return trial

        self._run('reduction', 'itrans<->dual', count, translations)
        for target in TARGETS:
            self._run('reduction', target, count, round_trip(target))

    # ==================== 3. 結構性質 ====================

    def sweep_structure(self):
        print("\n🏗️ 結構性質")

        def trianglefree_structure(seed):
            rng = make_rng(seed)
            graph = random_triangle_free_graph(int(rng.integers(1, 13)), rng)
            poset = random_weak_ni_poset(graph, rng)
            if poset.height() > 2:
                return False
            # reduce_tf 在星狀分割或 induced matching 不成立時直接丟 StructureViolation
            ri = reduced_instance(graph, poset)
            return all(not (ri.G_re.open_neighborhood(v) & ri.A) for v in ri.B_v)

        def neighborhood_equality(seed):
            rng = make_rng(seed)
            graph = random_triangle_free_graph(int(rng.integers(1, 11)), rng)
            poset = random_weak_ni_poset(graph, rng)
            expected = itrans_oracle(ITransInstance(neighborhood_hypergraph(graph), poset))
            found = idom_oracle(graph, poset)
            return found == expected

        self._run('structure', 'star-partition', self.count, trianglefree_structure)
        self._run('structure', 'ID=ITr(N(G))', self.count, neighborhood_equality)

    # ==================== 4. delay ====================

    def sweep_delay(self):
        print("\n⏱️ split delay")

        def bounded(n: int, max_clique: int):
            def trial(seed):
                rng = make_rng(seed)
                graph = random_split_graph(n, rng, max_clique=max_clique)
                ctx = SplitContext.from_instance(graph, random_ni_poset(graph, rng))
                metrics = EnumerationMetrics(ctx.delay_bound)
                stream = iter_split(ctx, metrics)
                if self.delay_emissions > 0:
                    stream = islice(stream, self.delay_emissions)
                for _ in stream:
                    if not metrics.within_bound():
                        return False
                return metrics.within_bound()
            return trial

        for n, clique in ((20, 10), (60, 30), (200, 100)):
            self._run('delay', f"n={n} |C|<={clique}", max(1, self.count // 20), bounded(n, clique))

    # ==================== 5. 退化情形 ====================

    def sweep_degeneration(self):
        print("\n🧩 antichain poset")
        count = max(1, self.count // 2)

        def transversals(seed):
            rng = make_rng(seed)
            h = random_hypergraph(int(rng.integers(1, 11)), int(rng.integers(1, 6)), rng)
            inst = ITransInstance(h, antichain_poset(h.ground))
            return itrans_enum_generic(inst) == transversal_enum(h)

        def dominating(seed):
            rng = make_rng(seed)
            graph = random_triangle_free_graph(int(rng.integers(1, 13)), rng)
            return idom_enum_generic(graph, antichain_poset(graph.vertices)) == minimal_dominating_sets_oracle(graph)

        def dual(seed):
            rng = make_rng(seed)
            poset = antichain_poset([f"x{i}" for i in range(1, int(rng.integers(2, 9)))])
            inst = DualInstance(poset, random_ideal_antichain(poset, 3, rng))
            if poset.element_set in inst.Bplus:
                return True
            return itrans_enum_generic(dual_to_itrans(inst)) == dual_enum_oracle(inst)

        self._run('degeneration', 'itrans=Tr(H)', count, transversals)
        self._run('degeneration', 'idom=D(G)', count, dominating)
        self._run('degeneration', 'dual', count, dual)

    # ==================== 報告 ====================

    def run(self) -> pd.DataFrame:
        print("=" * 70)
        print(f"📋 驗收掃描（每組 {self.count} 個實例，起始種子 {self.seed}）")
        print("=" * 70)

        self.sweep_oracle_equivalence()
        self.sweep_reductions()
        self.sweep_structure()
        self.sweep_delay()
        self.sweep_degeneration()

        df = pd.DataFrame(self.rows)
        print("\n" + "=" * 70)
        print(df.to_string(index=False))
        summary = df.groupby('check')[['instances', 'mismatches', 'errors', 'seconds']].sum()
        print("\n" + summary.to_string())
        return df


def main():
    parser = argparse.ArgumentParser(description='分配格對偶化驗收掃描')
    parser.add_argument('--count', type=int, default=200, help='每組實例數')
    parser.add_argument('--seed', type=int, default=0, help='起始種子')
    parser.add_argument('--delay-emissions', type=int, default=300,
                        help="delay 檢查每個實例最多輸出幾個解（0 表示跑完整個列舉）")
    args = parser.parse_args()

    df = AcceptanceSweep(args.count, args.seed, args.delay_emissions).run()
    failed = int(df['mismatches'].sum() + df['errors'].sum())
    if failed:
        print(f"\n❌ {failed} 個實例未通過")
        sys.exit(1)
    print("\n✅ 全部通過")


if __name__ == "__main__":
    main()

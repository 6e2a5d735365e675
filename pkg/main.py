# main.py
"""
分配格對偶化工具 命令列入口

指令：dualize、itrans、idom、check-dual、reduce、gen、oracle
stdout 只輸出解（`set: ...` 每行一個，最後 `count: N`）；日誌與錯誤走 stderr。
exit code：0 成功、1 否定判定、2 用法 / 解析 / 上限錯誤
"""
import argparse
import logging
import sys
from typing import Iterable, List, Optional

from config.lattice_config import LatticeConfig, lattice_config
from core.dualize import DualInstance, ITransInstance, check_dual, dual_enum_oracle, idom_oracle, itrans_oracle
from core.errors import LatticeError
from core.formats import (dump_family, dump_graph, dump_hypergraph, dump_poset, format_set, read_family,
                          read_graph, read_hypergraph, read_poset, write_instance_files)
from core.generators import KINDS, generate
from core.graph import Graph, minimal_dominating_sets_oracle
from core.hypergraph import Hypergraph, transversals_oracle
from core.metrics import EnumerationMetrics
from core.poset import Element, Poset
from core.reductions import REDUCERS, TARGETS
from solvers.router import SOLVERS, route_idom, solve_dual, solve_idom, solve_itrans
from solvers.trianglefree_solver import reduced_instance
from tools.setup_logging import level_from_verbosity, setup_logging

logger = logging.getLogger('main')

EXIT_OK = 0
EXIT_NEGATIVE = 1
EXIT_ERROR = 2

ORACLE_PROBLEMS = ('dualize', 'itrans', 'idom', 'transversals', 'dominating')


def _parse_args(argv: Optional[List[str]] = None) -> argparse.Namespace:
    parser = argparse.ArgumentParser(
        prog='lattice-dual',
        description='分配格中的 antichain 對偶化（Dual-Enum / ITrans-Enum / IDom-Enum）',
    )
    parser.add_argument('-v', '--verbose', action='count', default=0, help='-v 顯示 INFO，-vv 顯示 DEBUG')
    sub = parser.add_subparsers(dest='command', required=True)

    def _common(p: argparse.ArgumentParser) -> None:
        p.add_argument('--cap', type=int, default=None, help='暴力 oracle 的元素數上限')
        p.add_argument('-v', '--verbose', action='count', default=argparse.SUPPRESS)

    p = sub.add_parser('dualize', help='計算 B+ 的對偶 antichain B-')
    p.add_argument('--poset', required=True)
    p.add_argument('--bplus', required=True)
    p.add_argument('--solver', choices=('auto', 'oracle', 'generic'), default='auto')
    _common(p)

    p = sub.add_parser('itrans', help='列舉極小橫截 ideal ITr(H, P)')
    p.add_argument('--hypergraph', required=True)
    p.add_argument('--poset', required=True)
    p.add_argument('--solver', choices=('auto', 'oracle', 'generic'), default='auto')
    _common(p)

    p = sub.add_parser('idom', help='列舉極小支配 ideal ID(G, P)')
    p.add_argument('--graph', required=True)
    p.add_argument('--poset', required=True)
    p.add_argument('--solver', choices=SOLVERS, default='auto')
    p.add_argument('--delay-stats', action='store_true', help='輸出 split 解法兩次輸出間的成員測試次數')
    p.add_argument('--dump-reduced', action='store_true', help='寫出 triangle-free 解法的收縮實例')
    p.add_argument('--out', default='reduced', help='--dump-reduced 的檔名前綴')
    _common(p)

    p = sub.add_parser('check-dual', help='判定 B+、B- 是否在 L(P) 中對偶')
    p.add_argument('--poset', required=True)
    p.add_argument('--bplus', required=True)
    p.add_argument('--bminus', required=True)
    _common(p)

    p = sub.add_parser('reduce', help='ITrans 實例歸約成 IDom 實例')
    p.add_argument('--hypergraph', required=True)
    p.add_argument('--poset', required=True)
    p.add_argument('--target', choices=TARGETS, required=True)
    p.add_argument('--out', default='reduced', help='輸出檔名前綴')
    _common(p)

    p = sub.add_parser('gen', help='產生可重現的隨機實例')
    p.add_argument('--kind', choices=KINDS, required=True)
    p.add_argument('--n', type=int, required=True)
    p.add_argument('--m', type=int, default=5)
    p.add_argument('--seed', type=int, default=lattice_config.default_seed)
    p.add_argument('--out', default='instance', help='輸出檔名前綴')
    _common(p)

    p = sub.add_parser('oracle', help='暴力 oracle（交叉驗證用）')
    p.add_argument('--problem', choices=ORACLE_PROBLEMS, required=True)
    p.add_argument('--poset')
    p.add_argument('--hypergraph')
    p.add_argument('--graph')
    p.add_argument('--bplus')
    _common(p)

    return parser.parse_args(argv)


def _emit(solutions: Iterable[Iterable[Element]], metrics: Optional[EnumerationMetrics] = None) -> int:
    count = 0
    for solution in solutions:
        print(format_set(solution))
        count += 1
    print(f"count: {count}")
    if metrics is not None:
        print(metrics.stats_line())
    return count


def _require(args: argparse.Namespace, *names: str) -> None:
    missing = [f"--{n}" for n in names if not getattr(args, n, None)]
    if missing:
        raise LatticeError(f"缺少參數: {' '.join(missing)}")


# ==================== 指令 ====================

def cmd_dualize(args: argparse.Namespace, config: LatticeConfig) -> int:
    poset = read_poset(args.poset)
    inst = DualInstance(poset, read_family(args.bplus))
    _emit(solve_dual(inst, args.solver, config))
    return EXIT_OK


def cmd_itrans(args: argparse.Namespace, config: LatticeConfig) -> int:
    inst = ITransInstance(read_hypergraph(args.hypergraph), read_poset(args.poset))
    _emit(solve_itrans(inst, args.solver, config))
    return EXIT_OK


def cmd_idom(args: argparse.Namespace, config: LatticeConfig) -> int:
    graph, poset = read_graph(args.graph), read_poset(args.poset)
    solver = route_idom(graph, poset) if args.solver == 'auto' else args.solver
    logger.info(f"🔀 解法：{solver}")

    metrics = None
    if args.delay_stats:
        if solver == 'split':
            metrics = EnumerationMetrics()
        else:
            logger.warning(f"⚠️ --delay-stats 只適用於 split 解法（目前為 {solver}），已忽略")

    if args.dump_reduced:
        if solver == 'trianglefree':
            ri = reduced_instance(graph, poset)
            for path in write_instance_files(args.out, {
                'graph': dump_graph(ri.G_re),
                'poset': dump_poset(ri.P_re),
                'contraction': '\n'.join(ri.manifest()) + '\n',
            }):
                logger.info(f"💾 已寫入 {path}")
        else:
            logger.warning(f"⚠️ --dump-reduced 只適用於 trianglefree 解法（目前為 {solver}），已忽略")

    _emit(solve_idom(graph, poset, solver, config, metrics), metrics)
    if metrics is not None:
        logger.info(metrics.get_report())
    return EXIT_OK


def cmd_check_dual(args: argparse.Namespace, config: LatticeConfig) -> int:
    poset = read_poset(args.poset)
    inst = DualInstance(poset, read_family(args.bplus))
    verdict = check_dual(inst, read_family(args.bminus), config.oracle_cap)
    print(f"dual: {'yes' if verdict else 'no'}")
    return EXIT_OK if verdict else EXIT_NEGATIVE


def cmd_reduce(args: argparse.Namespace, config: LatticeConfig) -> int:
    inst = ITransInstance(read_hypergraph(args.hypergraph), read_poset(args.poset))
    art = REDUCERS[args.target](inst)
    written = write_instance_files(args.out, {
        'graph': dump_graph(art.instance.G),
        'poset': dump_poset(art.instance.P),
        'exceptions': '\n'.join(art.exceptions) + '\n',
    })
    for path in written:
        print(f"wrote: {path}")
    return EXIT_OK


def _dump_part(part) -> str:
    if isinstance(part, Poset):
        return dump_poset(part)
    if isinstance(part, Hypergraph):
        return dump_hypergraph(part)
    if isinstance(part, Graph):
        return dump_graph(part)
    return dump_family(part)


def cmd_gen(args: argparse.Namespace, config: LatticeConfig) -> int:
    inst = generate(args.kind, args.n, args.m, args.seed)
    written = write_instance_files(args.out, {name: _dump_part(part) for name, part in inst.parts.items()})
    for path in written:
        print(f"wrote: {path}")
    return EXIT_OK


def cmd_oracle(args: argparse.Namespace, config: LatticeConfig) -> int:
    cap = config.oracle_cap
    if args.problem == 'dualize':
        _require(args, 'poset', 'bplus')
        result = dual_enum_oracle(DualInstance(read_poset(args.poset), read_family(args.bplus)), cap)
    elif args.problem == 'itrans':
        _require(args, 'hypergraph', 'poset')
        result = itrans_oracle(ITransInstance(read_hypergraph(args.hypergraph), read_poset(args.poset)), cap)
    elif args.problem == 'idom':
        _require(args, 'graph', 'poset')
        result = idom_oracle(read_graph(args.graph), read_poset(args.poset), cap)
    elif args.problem == 'transversals':
        _require(args, 'hypergraph')
        result = transversals_oracle(read_hypergraph(args.hypergraph), cap)
    else:
        _require(args, 'graph')
        result = minimal_dominating_sets_oracle(read_graph(args.graph), cap)
    _emit(result)
    return EXIT_OK


COMMANDS = {
    'dualize': cmd_dualize,
    'itrans': cmd_itrans,
    'idom': cmd_idom,
    'check-dual': cmd_check_dual,
    'reduce': cmd_reduce,
    'gen': cmd_gen,
    'oracle': cmd_oracle,
}


def main(argv: Optional[List[str]] = None) -> int:
    try:
        args = _parse_args(argv)
    except SystemExit as e:
        return e.code if isinstance(e.code, int) else EXIT_ERROR

    level = level_from_verbosity(args.verbose, lattice_config.log_level)
    for name in ('core', 'solvers', 'main'):
        setup_logging(name, lattice_config.log_dir, level)

    config = lattice_config if args.cap is None else lattice_config.with_oracle_cap(args.cap)
    try:
        return COMMANDS[args.command](args, config)
    except (LatticeError, OSError) as e:
        print(f"❌ {e}", file=sys.stderr)
        logger.debug("詳細錯誤", exc_info=True)
        return EXIT_ERROR


if __name__ == "__main__":
    sys.exit(main())

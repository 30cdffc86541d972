#!/usr/bin/env python
#  -*- coding: utf-8 -*-
__author__ = 'mayanqiong'

"""
qdkit 命令行

    qdkit qdist t1.nwk t2.nwk [--method fast|brute] [--json]
    qdkit cycles g.txt [--method auto|brute|codegree|reduction] [--json]
    qdkit shapes g.txt [--json]
    qdkit reduce g.txt --out-prefix out
    qdkit extract-c4 g.txt [--method fast|brute]
    qdkit selftest [--seed S] [--sizes 4,8,16] [--threads N]
    qdkit bench [--seed S] [--sizes 200,400] [--out-prefix bench]

退出码: 0 成功，1 内部不一致或一致性检查失败，2 输入解析失败，3 叶子标签不一致，4 边数不足
"""

import argparse
import os
import sys
import time
from typing import List

import simplejson

from qdkit.__version__ import __version__
from qdkit.cycles import count_c4
from qdkit.exceptions import QdkError
from qdkit.graph import read_edge_list
from qdkit.log import _get_logger, _setup_file_log
from qdkit.qdist import QuartetContext, count_shared_stars, quartet_distance
from qdkit.reduction import bipartize, extract_c4, graph_to_trees
from qdkit.report import BenchReport, QuartetReport, count_report, ledger_report
from qdkit.shapes import shape_ledger
from qdkit.tools.selftest import DEFAULT_SIZES, THREADS, run_selftest
from qdkit.tree import read_newick, serialize_newick, random_tree, tree_from_nested
from qdkit.utils import DEFAULT_SEED, _get_rd

DEFAULT_BENCH_SIZES = (500, 1000, 2000)


def _parse_sizes(text: str) -> List[int]:
    try:
        sizes = [int(s) for s in text.split(",") if s.strip()]
    except ValueError:
        raise argparse.ArgumentTypeError(f"--sizes 需要逗号分隔的整数: {text}")
    if not sizes or min(sizes) < 1:
        raise argparse.ArgumentTypeError(f"--sizes 中的规模必须为正整数: {text}")
    return sizes


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="qdkit", description="四分体距离与 4-环计数工具")
    parser.add_argument("--version", action="version", version=f"qdkit {__version__}")
    parser.add_argument("--log", nargs="?", const="", default=None, help="写入 JSON 调试日志，可指定文件路径")
    sub = parser.add_subparsers(dest="command")
    sub.required = True

    p = sub.add_parser("qdist", help="两棵树的四分体距离")
    p.add_argument("tree1")
    p.add_argument("tree2")
    p.add_argument("--method", choices=["fast", "brute"], default="fast")
    p.add_argument("--json", action="store_true")

    p = sub.add_parser("cycles", help="多重图的 4-环数")
    p.add_argument("graph")
    p.add_argument("--method", choices=["auto", "brute", "codegree", "reduction"], default="auto")
    p.add_argument("--json", action="store_true")

    p = sub.add_parser("shapes", help="二分多重图的形状账本")
    p.add_argument("graph")
    p.add_argument("--json", action="store_true")

    p = sub.add_parser("reduce", help="由图构造四分体距离实例")
    p.add_argument("graph")
    p.add_argument("--out-prefix", required=True)

    p = sub.add_parser("extract-c4", help="经四分体距离往返计算 4-环数")
    p.add_argument("graph")
    p.add_argument("--method", choices=["fast", "brute"], default="fast")
    p.add_argument("--json", action="store_true")

    for name, default_sizes in (("selftest", DEFAULT_SIZES), ("bench", DEFAULT_BENCH_SIZES)):
        p = sub.add_parser(name)
        p.add_argument("--seed", type=int, default=DEFAULT_SEED)
        p.add_argument("--sizes", type=_parse_sizes, default=list(default_sizes))
        if name == "bench":
            p.add_argument("--out-prefix", default="bench")
            p.add_argument("--repeat", type=int, default=1)
        else:
            p.add_argument("--threads", type=int, default=THREADS)
            p.add_argument("--dump-dir", default=".")
    return parser


def cmd_qdist(args) -> int:
    t1, t2 = read_newick(args.tree1), read_newick(args.tree2)
    stats = {}
    start = time.perf_counter()
    qd = quartet_distance(t1, t2, method=args.method, stats=stats)
    wall = time.perf_counter() - start
    print(qd)
    if args.json:
        print(QuartetReport(t1.n, (t1.max_degree, t2.max_degree), args.method, qd, stats, wall).to_json())
    return 0


def cmd_cycles(args) -> int:
    g = read_edge_list(args.graph)
    start = time.perf_counter()
    c4 = count_c4(g, args.method)
    print(c4)
    if args.json:
        print(count_report("cycles", c4, method=args.method, nodes=g.node_count, edges=g.edge_count,
                           wall_time=time.perf_counter() - start))
    return 0


def cmd_shapes(args) -> int:
    ledger = shape_ledger(read_edge_list(args.graph))
    if args.json:
        print(ledger_report(ledger))
    else:
        for k, v in ledger.items():
            print(f"{k}\t{v}")
    return 0


def cmd_reduce(args) -> int:
    g = read_edge_list(args.graph)
    gb = g if g.is_bipartite else bipartize(g)
    t1, t2, leaf_map = graph_to_trees(gb)
    with open(f"{args.out_prefix}.t1.nwk", "w", encoding="utf-8") as f:
        f.write(serialize_newick(t1) + "\n")
    with open(f"{args.out_prefix}.t2.nwk", "w", encoding="utf-8") as f:
        f.write(serialize_newick(t2) + "\n")
    with open(f"{args.out_prefix}.map.json", "w", encoding="utf-8") as f:
        simplejson.dump({"bipartized": not g.is_bipartite, "n1": gb.n1,
                         "leaves": {str(lab): [u, v] for lab, (u, v) in leaf_map.items()}}, f, indent=2)
    print(f"{gb.edge_count} leaves -> {args.out_prefix}.t1.nwk, {args.out_prefix}.t2.nwk, {args.out_prefix}.map.json")
    return 0


def cmd_extract_c4(args) -> int:
    g = read_edge_list(args.graph)
    start = time.perf_counter()
    c4 = extract_c4(g, method=args.method)
    print(c4)
    if args.json:
        print(count_report("extract-c4", c4, method=args.method, wall_time=time.perf_counter() - start))
    return 0


def cmd_selftest(args) -> int:
    passed = run_selftest(seed=args.seed, sizes=args.sizes, threads=args.threads, dump_dir=args.dump_dir)
    for suite, count in passed.items():
        print(f"{suite}: {count} passed")
    print(f"seed={args.seed} sizes={','.join(map(str, args.sizes))}")
    return 0


def _star_heavy_tree(n: int, rd):
    """十个左右的星形挂在同一个中心上，所有内部节点的度不小于 n/10"""
    labels = list(range(1, n + 1))
    k = max(1, min(10, n // 4))
    groups = [labels[i::k] for i in range(k)]
    return tree_from_nested([g if len(g) > 1 else g[0] for g in groups], rd)


def cmd_bench(args) -> int:
    rows = []
    logger = _get_logger("Bench", seed=args.seed)
    for family, make in (("star-heavy", _star_heavy_tree), ("mixed", random_tree)):
        for n in args.sizes:
            for rep in range(args.repeat):
                rd = _get_rd(f"{args.seed}-{family}-{n}-{rep}")
                t1, t2 = make(n, rd), make(n, rd)
                if n < 4:
                    continue
                ctx = QuartetContext(t1, t2)
                start = time.perf_counter()
                count_shared_stars(ctx)
                elapsed = time.perf_counter() - start
                rows.append({"family": family, "n": n, "seed": args.seed, "star_time": elapsed,
                             "height1": ctx.stats["height1"], "height2": ctx.stats["height2"],
                             "membership1": ctx.stats["membership1"], "membership2": ctx.stats["membership2"],
                             "common_leaves": ctx.stats["common_leaves"]})
                logger.bind(family=family, n=n).debug("bench instance", star_time=elapsed)
    report = BenchReport(rows)
    report.to_csv(f"{args.out_prefix}.csv")
    with open(f"{args.out_prefix}.json", "w", encoding="utf-8") as f:
        f.write(report.to_json(args.seed))
    print(report.summary().to_string(index=False))
    return 0


COMMANDS = {
    "qdist": cmd_qdist,
    "cycles": cmd_cycles,
    "shapes": cmd_shapes,
    "reduce": cmd_reduce,
    "extract-c4": cmd_extract_c4,
    "selftest": cmd_selftest,
    "bench": cmd_bench,
}


def main(argv: List[str] = None) -> int:
    args = _build_parser().parse_args(argv)
    if args.log is not None or os.getenv("QDK_DEBUG"):
        _setup_file_log(args.log if args.log else None)
    try:
        return COMMANDS[args.command](args)
    except QdkError as e:
        print(f"qdkit: {e.message}", file=sys.stderr)
        return e.exit_code
    except OSError as e:
        print(f"qdkit: {e}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())

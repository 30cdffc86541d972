#!/usr/bin/env python
#  -*- coding: utf-8 -*-
__author__ = 'mayanqiong'

"""
随机实例上的快速算法与暴力算法一致性检查

每个用例由 (套件名, 序号) 派生独立的随机数种子，所以结果与线程数无关；
发现不一致时把最小的出错实例写到 dump_dir 并抛出 QdkInconsistencyError
"""

import os
import random
from concurrent.futures import ThreadPoolExecutor
from typing import Callable, Dict, List, Optional, Sequence

from qdkit.brute import brute_count_c4, brute_shape_counts
from qdkit.cycles import count_c4_multigraph, count_c4_naive_coloring
from qdkit.exceptions import QdkInconsistencyError
from qdkit.graph import random_bipartite_multigraph, random_multigraph, serialize_edge_list
from qdkit.log import _get_logger
from qdkit.qdist import classify_shared_stars, count_shared_stars_by_centres, quartet_distance
from qdkit.reduction import extract_c4
from qdkit.shapes import shape_ledger
from qdkit.tree import brute_quartet_distance, caterpillar_tree, compare_quartets, random_tree, \
    serialize_newick, star_tree
from qdkit.utils import DEFAULT_SEED, _comb

DEFAULT_SIZES = (4, 8, 16, 32, 60)
THREADS = int(os.getenv("QDK_THREADS", 1))


class _Failure(object):
    def __init__(self, suite: str, case: int, detail: str, instance: str, size: int) -> None:
        self.suite, self.case, self.detail, self.instance, self.size = suite, case, detail, instance, size


def _case_rd(seed: int, suite: str, case: int) -> random.Random:
    return random.Random(f"{seed}-{suite}-{case}")


def _quartet_case(rd: random.Random, sizes: Sequence[int], case: int) -> Optional[_Failure]:
    n = sizes[case % len(sizes)]
    degrees = [3, 4, 6, None]
    t1 = random_tree(n, rd, degrees[case % 4])
    t2 = random_tree(n, rd, degrees[(case // 4) % 4])
    stats: Dict = {}
    fast, brute = quartet_distance(t1, t2, stats=stats), brute_quartet_distance(t1, t2)
    instance = serialize_newick(t1) + "\n" + serialize_newick(t2) + "\n"
    if fast != brute:
        return _Failure("quartet", case, f"fast={fast} brute={brute}", instance, n)
    if n >= 4:
        buckets = classify_shared_stars(t1, t2)
        got = {"matching": stats["type1_matching"], "missing": stats["type1_missing"], "type2": stats["type2"]}
        if buckets != got:
            return _Failure("quartet", case, f"buckets fast={got} brute={buckets}", instance, n)
    if n <= 16:
        by_centres = count_shared_stars_by_centres(t1, t2)
        expected = compare_quartets(t1, t2)["shared_stars"]
        if by_centres != expected:
            return _Failure("quartet", case, f"centres={by_centres} brute={expected}", instance, n)
    return None


def _cycles_case(rd: random.Random, sizes: Sequence[int], case: int) -> Optional[_Failure]:
    n = rd.randint(2, 10)
    g = random_multigraph(n, rd.uniform(0.2, 0.9), 1000 if case % 2 else 6, rd)
    got, expected = count_c4_multigraph(g), brute_count_c4(g)
    if got != expected:
        return _Failure("cycles", case, f"reduction={got} brute={expected}", serialize_edge_list(g), g.edge_count)
    if g.max_mult <= 6:
        naive = count_c4_naive_coloring(g)
        if naive != expected:
            return _Failure("cycles", case, f"naive={naive} brute={expected}", serialize_edge_list(g), g.edge_count)
    return None


def _shapes_case(rd: random.Random, sizes: Sequence[int], case: int) -> Optional[_Failure]:
    g = random_bipartite_multigraph(rd.randint(1, 8), rd.randint(1, 8), rd.uniform(0.2, 0.8), 5, rd)
    ledger = shape_ledger(g, brute_count_c4(g))
    expected = brute_shape_counts(g)
    wrong = {k: (ledger[k], v) for k, v in expected.items() if ledger[k] != v}
    if wrong:
        return _Failure("shapes", case, f"formula != brute: {wrong}", serialize_edge_list(g), g.edge_count)
    return None


def _reduction_case(rd: random.Random, sizes: Sequence[int], case: int) -> Optional[_Failure]:
    n = rd.randint(3, 10)
    g = random_multigraph(n, rd.uniform(0.3, 0.9), 1, rd)
    if 2 * g.edge_count < 4:
        return None
    got, expected = extract_c4(g), brute_count_c4(g)
    if got != expected:
        return _Failure("reduction", case, f"extract={got} brute={expected}", serialize_edge_list(g), g.edge_count)
    return None


def _degenerate_case(rd: random.Random, sizes: Sequence[int], case: int) -> Optional[_Failure]:
    n = sizes[case % len(sizes)]
    t = random_tree(n, rd)
    if quartet_distance(t, t) != 0:
        return _Failure("degenerate", case, "identical trees", serialize_newick(t), n)
    star, cat = star_tree(n), caterpillar_tree(n)
    qd = quartet_distance(star, cat)
    if qd != _comb(n, 4):
        return _Failure("degenerate", case, f"star vs caterpillar {qd}", serialize_newick(cat), n)
    return None


SUITES: Dict[str, Callable] = {
    "quartet": _quartet_case,
    "cycles": _cycles_case,
    "shapes": _shapes_case,
    "reduction": _reduction_case,
    "degenerate": _degenerate_case,
}

DEFAULT_COUNTS = {"quartet": 500, "cycles": 500, "shapes": 500, "reduction": 200, "degenerate": 20}


def _dump(failure: _Failure, dump_dir: str, seed: int) -> str:
    os.makedirs(dump_dir, exist_ok=True)
    path = os.path.join(dump_dir, f"selftest-{failure.suite}-{seed}-{failure.case}.txt")
    with open(path, "w", encoding="utf-8") as f:
        f.write(f"# {failure.detail}\n")
        f.write(failure.instance)
    return path


def run_selftest(seed: int = DEFAULT_SEED, sizes: Sequence[int] = DEFAULT_SIZES, counts: Dict[str, int] = None,
                 threads: int = THREADS, dump_dir: str = ".") -> Dict[str, int]:
    """
    运行全部一致性检查套件

    Args:
        seed (int): 随机数种子

        sizes (list): 四分体距离套件的叶子数

        counts (dict): [可选] 各套件的用例数，默认 DEFAULT_COUNTS

        threads (int): 并行的线程数

        dump_dir (str): 出错实例的写入目录

    Returns:
        dict: 套件名 -> 通过的用例数

    Raises:
        QdkInconsistencyError: 任一用例不一致
    """
    logger = _get_logger("Selftest", seed=seed)
    counts = dict(DEFAULT_COUNTS, **(counts or {}))
    sizes = list(sizes) if sizes else list(DEFAULT_SIZES)
    if max(sizes) <= 4:
        counts = {k: min(v, 10) for k, v in counts.items()}
    passed: Dict[str, int] = {}
    for suite, func in SUITES.items():

        def run(case: int, suite=suite, func=func) -> Optional[_Failure]:
            return func(_case_rd(seed, suite, case), sizes, case)

        with ThreadPoolExecutor(max_workers=max(1, threads)) as pool:
            failures: List[_Failure] = [f for f in pool.map(run, range(counts[suite])) if f is not None]
        if failures:
            worst = min(failures, key=lambda f: (f.size, f.case))
            path = _dump(worst, dump_dir, seed)
            logger.debug("selftest failed", suite=suite, failures=len(failures), dump=path)
            raise QdkInconsistencyError(f"{suite} 套件有 {len(failures)} 个用例不一致: {worst.detail}，实例已写入 {path}")
        passed[suite] = counts[suite]
        logger.debug("suite passed", suite=suite, cases=counts[suite])
    return passed

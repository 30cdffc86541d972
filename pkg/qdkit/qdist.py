#!/usr/bin/env python
#  -*- coding: utf-8 -*-
__author__ = 'mayanqiong'

"""
四分体距离: C(n, 4) - 共同蝴蝶数 - 共同星形数

共同星形按两棵树中的中心 (c1, c2) 分组，一组星形对应以 c1、c2 周围子树为两部、公共叶子数为重数的二分多重图中的 4-匹配。
快速算法只在 top tree 的相关簇对上构造这样的多重图:

* I 型: 星形的某个叶子属于中心代表簇对 (R1(c1), R2(c2)) 的公共叶子集合 L，由 M' 的 4-匹配与缺失星形计数
* II 型: 星形没有叶子在 L 中，由脊柱上的区域计数得到
"""

import os
import time
from collections import Counter
from typing import Dict, List, Optional, Tuple

from qdkit.algorithm.markcount import MarkCountStructure, sweep_alpha_beta
from qdkit.algorithm.rangecount import RangeCounter2D
from qdkit.algorithm.toptree import TopTree, VERTICAL_KINDS, relevant_pairs, representative_cluster
from qdkit.cycles import count_c4, get_backend
from qdkit.exceptions import QdkGraphError
from qdkit.graph import Multigraph
from qdkit.log import _get_logger
from qdkit.rangeset import RangeSet, _rangeset_complement, _rangeset_difference
from qdkit.shapes import count_2matchings, count_4matchings
from qdkit.tree import RootedTree, UnrootedTree, _check_same_labels, brute_quartet_distance, compare_quartets, \
    iter_shared_stars
from qdkit.utils import _comb

Pair = Tuple[int, int, List[int]]

DENSE_THRESHOLD = float(os.getenv("QDK_DENSE_THRESHOLD", 1.5))


class StarInstance(object):
    """
    星形实例的二分多重图，两部的节点用键标识:

    * "A" / "B": 包含簇的上 / 下外部部分的子树 (外部节点)
    * ("E", child): 包含公共叶子的内部子树 (显式节点)
    * "I": 其余内部子树合并成的一个节点 (隐式节点)
    * ("P", ) 或 ("E", child): count_stars_at 中的父亲方向与孩子方向子树
    """

    def __init__(self) -> None:
        self.keys: Tuple[List, List] = ([], [])
        self._index: Tuple[Dict, Dict] = ({}, {})
        self._mult: Dict[Tuple[int, int], int] = {}
        self.around = None
        self.explicit = None

    def add_node(self, side: int, key) -> int:
        if key not in self._index[side]:
            self._index[side][key] = len(self.keys[side])
            self.keys[side].append(key)
        return self._index[side][key]

    def has_node(self, side: int, key) -> bool:
        return key in self._index[side]

    def add(self, key1, key2, mult: int) -> None:
        if mult < 0:
            raise QdkGraphError(f"边 ({key1}, {key2}) 的重数为负数: {mult}")
        if mult == 0:
            return
        i, j = self.add_node(0, key1), self.add_node(1, key2)
        self._mult[(i, j)] = self._mult.get((i, j), 0) + mult

    def node_id(self, side: int, key) -> int:
        """key 在 graph() 中的节点编号"""
        return self._index[side][key] + (len(self.keys[0]) if side else 0)

    def mult(self, key1, key2) -> int:
        if not (self.has_node(0, key1) and self.has_node(1, key2)):
            return 0
        return self._mult.get((self._index[0][key1], self._index[1][key2]), 0)

    @property
    def edge_count(self) -> int:
        return len(self._mult)

    def graph(self) -> Multigraph:
        n1 = len(self.keys[0])
        return Multigraph(n1 + len(self.keys[1]), [(i, n1 + j, m) for (i, j), m in self._mult.items()], n1)


class _Around(object):
    """中心 c 周围的子树: 父亲方向 "A"，通向下边界 bottom 的孩子方向 "B"，其余孩子为内部子树"""

    def __init__(self, t: RootedTree, c: int, bottom: Optional[int]) -> None:
        self.t, self.c = t, c
        lo, hi = t.subtree_range(c)
        self.down = t.child_toward(c, bottom) if bottom is not None else None
        self._regions: Dict[object, RangeSet] = {"A": _rangeset_complement([(lo, hi)], 0, t.node_count)}
        if self.down is not None:
            self._regions["B"] = [t.subtree_range(self.down)]
        self.inner = _rangeset_difference([(lo + 1, hi)], self._regions.get("B", []))

    @property
    def outside_keys(self) -> List[str]:
        return ["A", "B"] if self.down is not None else ["A"]

    def locate(self, x: int):
        if not self.t.is_ancestor(self.c, x) or x == self.c:
            return "A"
        ch = self.t.child_toward(self.c, x)
        return "B" if ch == self.down else ("E", ch)

    def region(self, key) -> RangeSet:
        if key in self._regions:
            return self._regions[key]
        return [self.t.subtree_range(key[1])]


class QuartetContext(object):
    """
    一对树上快速算法共用的结构: 以最小标签叶子为根的有根树、top tree、二维区域计数与 Σαβ 离线结果

    Args:
        t1, t2 (UnrootedTree): 叶子标签相同的两棵树

        c4 (str): M' 中 4-环的计数方法，"auto" 为加权余度法，"reduction" 走多重图染色归约
    """

    def __init__(self, t1: UnrootedTree, t2: UnrootedTree, c4: str = "auto") -> None:
        _check_same_labels(t1, t2)
        self.t1, self.t2 = t1, t2
        self.c4 = c4
        self.backend = get_backend("codegree")
        self.stats: Dict[str, object] = Counter()
        self._logger = _get_logger("QuartetDistance", n=t1.n)
        start = time.perf_counter()
        self.r1, self.r2 = RootedTree(t1), RootedTree(t2)
        self.tt1, self.tt2 = TopTree(self.r1), TopTree(self.r2)
        self.rc = RangeCounter2D.from_trees(self.r1, self.r2)
        self._alpha_beta: Tuple[Dict, Dict] = ({}, {})
        self.stats["time_build"] = time.perf_counter() - start
        self.stats["height1"], self.stats["height2"] = self.tt1.tree_height, self.tt2.tree_height
        self.stats["membership1"], self.stats["membership2"] = self.tt1.membership, self.tt2.membership
        self._logger = self._logger.bind(height1=self.tt1.tree_height, height2=self.tt2.tree_height)

    def star_center_ok(self, side: int, cid: int) -> bool:
        """a/b 型合并且中间节点的度不小于 4"""
        tt = self.tt1 if side == 0 else self.tt2
        return tt.kind[cid] in VERTICAL_KINDS and len(tt.tree.tree.adj[tt.middle[cid]]) >= 4

    def prepare_alpha_beta(self, pairs: List[Pair]) -> None:
        """对 I 型簇对离线计算两侧的 Σαβ"""
        q1: Dict[int, List[int]] = {}
        q2: Dict[int, List[int]] = {}
        for c1, c2, _ in pairs:
            q1.setdefault(c1, []).append(self.tt2.middle[c2])
            q2.setdefault(c2, []).append(self.tt1.middle[c1])
        a1, marks1 = sweep_alpha_beta(self.tt1, self.r2, q1)
        a2, marks2 = sweep_alpha_beta(self.tt2, self.r1, q2)
        self._alpha_beta = (a1, a2)
        self.stats["marks"] += marks1 + marks2

    def alpha_beta(self, outer_side: int, cid: int, u: int) -> int:
        """
        以外层树 outer_side 中簇 cid 的外部染色 (A(C) 为 A，B(C) 为 B)，内层树节点 u 周围的 Σαβ
        """
        cached = self._alpha_beta[outer_side].get((cid, u))
        if cached is not None:
            return cached
        tt, inner = (self.tt1, self.r2) if outer_side == 0 else (self.tt2, self.r1)
        mc = MarkCountStructure(inner)
        for color, ranges in (("A", tt.outside_above(cid)), ("B", tt.outside_below(cid))):
            for lo, hi in ranges:
                for pos in range(lo, hi):
                    x = tt.tree.order[pos]
                    if tt.tree.is_leaf(x):
                        mc.mark(tt.tree.labels[x], color)
        return mc.count_alpha_beta(u)

    def count_c4(self, g: Multigraph) -> int:
        if g.edge_count > g.node_count ** DENSE_THRESHOLD:
            self.stats["dense_instances"] += 1
        return count_c4(g, self.c4, self.backend)


def count_stars_at(c1: int, c2: int, r1: RootedTree, r2: RootedTree, c4: str = "auto") -> int:
    """
    以 c1 (T1 的内部节点) 与 c2 (T2 的内部节点) 为中心的共同星形个数

    构造以 c1、c2 周围的全部子树为两部、公共叶子数为重数的二分多重图，返回其 4-匹配数
    """
    inst = _full_instance(c1, c2, r1, r2)
    g = inst.graph()
    if g.edge_count < 4:
        return 0
    return count_4matchings(g, count_c4(g, c4))


def _full_instance(c1: int, c2: int, r1: RootedTree, r2: RootedTree) -> StarInstance:
    a1, a2 = _Around(r1, c1, None), _Around(r2, c2, None)
    inst = StarInstance()
    for lab, x in r1.label_node.items():
        inst.add(a1.locate(x), a2.locate(r2.label_node[lab]), 1)
    return inst


def count_shared_stars_by_centres(t1: UnrootedTree, t2: UnrootedTree, c4: str = "auto") -> int:
    """对所有度不小于 4 的中心对 (c1, c2) 累加 count_stars_at，作为共同星形数的第二条参考路径"""
    _check_same_labels(t1, t2)
    if t1.n < 4:
        return 0
    r1, r2 = RootedTree(t1), RootedTree(t2)
    centres1 = [x for x in range(t1.node_count) if len(t1.adj[x]) >= 4]
    centres2 = [x for x in range(t2.node_count) if len(t2.adj[x]) >= 4]
    return sum(count_stars_at(c1, c2, r1, r2, c4) for c1 in centres1 for c2 in centres2)


def build_M(ctx: QuartetContext, pair: Pair) -> StarInstance:
    """
    只含公共叶子的多重图 M: 两部为 c1、c2 周围包含 L 中叶子的子树，重数为落在该子树对中的公共叶子数
    """
    c1id, c2id, common = pair
    a1 = _Around(ctx.r1, ctx.tt1.middle[c1id], ctx.tt1.bottom[c1id])
    a2 = _Around(ctx.r2, ctx.tt2.middle[c2id], ctx.tt2.bottom[c2id])
    inst = StarInstance()
    for lab in common:
        inst.add(a1.locate(ctx.r1.label_node[lab]), a2.locate(ctx.r2.label_node[lab]), 1)
    inst.around = (a1, a2)
    return inst


def build_M_prime(ctx: QuartetContext, pair: Pair) -> StarInstance:
    """
    在 M 的基础上加入外部节点 "A"/"B" 与隐式合并节点 "I":

    * 显式-显式: 遍历 L
    * 外部-外部、外部-显式、显式-外部: 区域计数
    * 外部-隐式: 外部子树与对侧全部内部子树的区域计数减去与显式子树的部分
    * 隐式与显式、隐式的边重数总为 0
    """
    c1id, c2id, common = pair
    rc = ctx.rc
    a1 = _Around(ctx.r1, ctx.tt1.middle[c1id], ctx.tt1.bottom[c1id])
    a2 = _Around(ctx.r2, ctx.tt2.middle[c2id], ctx.tt2.bottom[c2id])
    inst = StarInstance()
    located = [(a1.locate(ctx.r1.label_node[lab]), a2.locate(ctx.r2.label_node[lab])) for lab in common]
    e1 = list(dict.fromkeys(k1 for k1, _ in located if isinstance(k1, tuple)))
    e2 = list(dict.fromkeys(k2 for _, k2 in located if isinstance(k2, tuple)))
    for side, around, expl in ((0, a1, e1), (1, a2, e2)):
        for key in around.outside_keys + ["I"] + expl:
            inst.add_node(side, key)
    for k1, k2 in located:
        if isinstance(k1, tuple) and isinstance(k2, tuple):
            inst.add(k1, k2, 1)
    for x in a1.outside_keys:
        for y in a2.outside_keys:
            inst.add(x, y, rc.count_ranges(a1.region(x), a2.region(y)))
        rest = rc.count_ranges(a1.region(x), a2.inner)
        for e in e2:
            m = rc.count_ranges(a1.region(x), a2.region(e))
            inst.add(x, e, m)
            rest -= m
        inst.add(x, "I", rest)
    for y in a2.outside_keys:
        rest = rc.count_ranges(a1.inner, a2.region(y))
        for e in e1:
            m = rc.count_ranges(a1.region(e), a2.region(y))
            inst.add(e, y, m)
            rest -= m
        inst.add("I", y, rest)
    inst.around = (a1, a2)
    inst.explicit = (e1, e2)
    return inst


def _implicit_pairs(ctx: QuartetContext, pair: Pair, inst: StarInstance, side: int) -> Tuple[int, int]:
    """
    side 一侧中心的内部子树中，对侧簇外部叶子对 (a ∈ A, b ∈ B) 分属不同子树的个数

    Returns:
        tuple: (所有内部子树的对数 Pall, 只在隐式子树中的对数 Pimp)
    """
    c1id, c2id, _ = pair
    around, expl = inst.around[side], inst.explicit[side]
    if side == 1:
        a_set, b_set = ctx.tt1.outside_above(c1id), ctx.tt1.outside_below(c1id)
        other, cid, outer_tree = 0, c1id, ctx.r1

        def colored(ranges, region):
            return ctx.rc.count_ranges(ranges, region)
    else:
        a_set, b_set = ctx.tt2.outside_above(c2id), ctx.tt2.outside_below(c2id)
        other, cid, outer_tree = 1, c2id, ctx.r2

        def colored(ranges, region):
            return ctx.rc.count_ranges(region, ranges)

    in_a = outer_tree.leaves_in_rangeset(a_set)
    in_b = outer_tree.leaves_in_rangeset(b_set)
    in_ab = ctx.alpha_beta(other, cid, around.c)
    for key in around.outside_keys:
        a, b = colored(a_set, around.region(key)), colored(b_set, around.region(key))
        in_a, in_b, in_ab = in_a - a, in_b - b, in_ab - a * b
    pall = in_a * in_b - in_ab
    for key in expl:
        a, b = colored(a_set, around.region(key)), colored(b_set, around.region(key))
        in_a, in_b, in_ab = in_a - a, in_b - b, in_ab - a * b
    return pall, in_a * in_b - in_ab


def count_missing_stars(ctx: QuartetContext, pair: Pair, inst: StarInstance) -> int:
    """
    缺失星形: 某一侧有两个叶子落在不同的隐式子树中、另一侧至多一个的星形

    对每一侧: Pimp × (删去对侧两个外部节点与本侧隐式节点后 M' 的 2-匹配数)
    """
    return sum(_missing_parts(ctx, pair, inst)[0])


def _missing_parts(ctx: QuartetContext, pair: Pair, inst: StarInstance):
    g = inst.graph()
    pall1, pimp1 = _implicit_pairs(ctx, pair, inst, 0)
    pall2, pimp2 = _implicit_pairs(ctx, pair, inst, 1)
    del1 = [inst.node_id(1, k) for k in inst.around[1].outside_keys] + [inst.node_id(0, "I")]
    del2 = [inst.node_id(0, k) for k in inst.around[0].outside_keys] + [inst.node_id(1, "I")]
    missing1 = pimp1 * count_2matchings(g, del1) if pimp1 else 0
    missing2 = pimp2 * count_2matchings(g, del2) if pimp2 else 0
    return (missing1, missing2), (pall1, pimp1, pall2, pimp2)


def _type1_pair(ctx: QuartetContext, pair: Pair) -> Tuple[int, int]:
    """返回 (matching, missing) 两个桶的计数"""
    inst = build_M_prime(ctx, pair)
    g = inst.graph()
    ctx.stats["m_prime_edges"] += g.edge_count
    four = count_4matchings(g, ctx.count_c4(g)) if g.edge_count >= 4 else 0
    (missing1, missing2), (pall1, pimp1, pall2, pimp2) = _missing_parts(ctx, pair, inst)
    total = four + missing1 + missing2 - pall1 * pall2 + pimp1 * pimp2
    matching = four - (pall1 - pimp1) * (pall2 - pimp2)
    return matching, total - matching


def count_stars_type1(ctx: QuartetContext, pairs: List[Pair] = None) -> int:
    """
    I 型共同星形: 对两侧都是 a/b 型合并、中间节点度不小于 4 的相关簇对，累加 M' 的 4-匹配与缺失星形并扣除没有 L 中叶子的星形

    分桶结果写入 ctx.stats 的 type1_matching 与 type1_missing
    """
    start = time.perf_counter()
    if pairs is None:
        pairs = [(c1, c2, common) for (c1, c2), common in relevant_pairs(
            ctx.tt1, ctx.tt2, lambda c: ctx.star_center_ok(0, c), lambda c: ctx.star_center_ok(1, c)).items()]
    else:
        pairs = [p for p in pairs if ctx.star_center_ok(0, p[0]) and ctx.star_center_ok(1, p[1])]
    ctx.prepare_alpha_beta(pairs)
    matching = missing = 0
    for pair in pairs:
        a, b = _type1_pair(ctx, pair)
        matching += a
        missing += b
        ctx.stats["type1_common_leaves"] += len(pair[2])
    ctx.stats["type1_pairs"] += len(pairs)
    ctx.stats["type1_matching"] += matching
    ctx.stats["type1_missing"] += missing
    ctx.stats["time_type1"] += time.perf_counter() - start
    return matching + missing


def _spine_side_count(t: RootedTree, leaf: int, hi: int, lo: int) -> Optional[RangeSet]:
    """
    leaf 的路径在脊柱 hi-lo 上的汇合点 u (不能是 hi)，返回 u 的其余孩子子树 (去掉通向 leaf 与 lo 的两个孩子)
    """
    u = t.lca(leaf, lo)
    if u == hi or u == lo:
        return None
    lo_u, hi_u = t.subtree_range(u)
    cut = sorted([t.subtree_range(t.child_toward(u, leaf)), t.subtree_range(t.child_toward(u, lo))])
    return _rangeset_difference([(lo_u + 1, hi_u)], cut)


def count_stars_type2(ctx: QuartetContext, pairs: List[Pair] = None) -> int:
    """
    II 型共同星形: 对每个复合簇对 (C1, C2) 及其孩子的四种组合 (K1, K2)，K1、K2 都有两个边界时，
    z ∈ K1 ∩ K2'、x ∈ K1' ∩ K2 分别在 K1、K2 的脊柱上确定中心，
    y 为 T1 中心处的第三棵子树中、T2 中经 o2 离开 C2 的叶子，t 与之对称，计数为 (Σ_z #y)(Σ_x #t)
    """
    start = time.perf_counter()
    tt1, tt2, r1, r2, rc = ctx.tt1, ctx.tt2, ctx.r1, ctx.r2, ctx.rc
    if pairs is None:
        pairs = [(c1, c2, common) for (c1, c2), common in
                 relevant_pairs(tt1, tt2, tt1.is_composite, tt2.is_composite).items()]
    total = 0
    for c1id, c2id, common in pairs:
        if not (tt1.is_composite(c1id) and tt2.is_composite(c2id)):
            continue
        ctx.stats["type2_pairs"] += 1
        ctx.stats["type2_common_leaves"] += len(common)
        side1 = {lab: tt1.child_containing(c1id, lab) for lab in common}
        side2 = {lab: tt2.child_containing(c2id, lab) for lab in common}
        for k1, k1s in (tt1.children[c1id], tt1.children[c1id][::-1]):
            if tt1.bottom[k1] is None:
                continue
            hi1, lo1 = tt1.top[k1], tt1.bottom[k1]
            o1 = lo1 if tt1.middle[c1id] == hi1 else hi1
            out1 = tt1.outside(c1id, o1)
            for k2, k2s in (tt2.children[c2id], tt2.children[c2id][::-1]):
                if tt2.bottom[k2] is None:
                    continue
                hi2, lo2 = tt2.top[k2], tt2.bottom[k2]
                o2 = lo2 if tt2.middle[c2id] == hi2 else hi2
                out2 = tt2.outside(c2id, o2)
                sum_y = sum_t = 0
                for lab in common:
                    if side1[lab] == k1 and side2[lab] == k2s:
                        region = _spine_side_count(r1, r1.label_node[lab], hi1, lo1)
                        if region:
                            sum_y += rc.count_ranges(region, out2)
                    elif side1[lab] == k1s and side2[lab] == k2:
                        region = _spine_side_count(r2, r2.label_node[lab], hi2, lo2)
                        if region:
                            sum_t += rc.count_ranges(out1, region)
                total += sum_y * sum_t
    ctx.stats["type2"] += total
    ctx.stats["time_type2"] += time.perf_counter() - start
    return total


def count_shared_butterflies(t1: UnrootedTree, t2: UnrootedTree) -> int:
    """两棵树中拓扑相同的已分辨四叶组 (蝴蝶) 个数，枚举全部四叶组"""
    return compare_quartets(t1, t2)["shared_butterflies"]


def count_shared_stars(ctx: QuartetContext) -> int:
    """I 型与 II 型共同星形之和，两类使用同一批相关簇对"""
    tt1, tt2 = ctx.tt1, ctx.tt2
    pairs = [(c1, c2, common) for (c1, c2), common in
             relevant_pairs(tt1, tt2, tt1.is_composite, tt2.is_composite).items()]
    ctx.stats["relevant_pairs"] = len(pairs)
    ctx.stats["common_leaves"] = sum(len(p[2]) for p in pairs)
    return count_stars_type1(ctx, pairs) + count_stars_type2(ctx, pairs)


def quartet_distance(t1: UnrootedTree, t2: UnrootedTree, method: str = "fast", c4: str = "auto",
                     stats: dict = None) -> int:
    """
    计算两棵无根树的四分体距离

    Args:
        t1, t2 (UnrootedTree): 叶子标签相同的两棵树

        method (str): "fast" 使用 top tree 星形计数，"brute" 枚举全部四叶组

        c4 (str): 快速算法中 4-环计数方法，"auto" 或 "reduction"

        stats (dict): [可选] 写入分桶计数与运行统计

    Returns:
        int: 四分体距离

    Example::

        from qdkit import parse_newick, quartet_distance

        star = parse_newick("(1,2,3,4,5);")
        caterpillar = parse_newick("(1,(2,(3,(4,5))));")
        print(quartet_distance(star, caterpillar))  # 5
    """
    _check_same_labels(t1, t2)
    if method == "brute":
        return brute_quartet_distance(t1, t2)
    if method != "fast":
        raise ValueError(f"未知的四分体距离计算方法: {method}")
    if t1.n < 4:
        return 0
    ctx = QuartetContext(t1, t2, c4)
    start = time.perf_counter()
    butterflies = count_shared_butterflies(t1, t2)
    ctx.stats["time_butterflies"] = time.perf_counter() - start
    stars = count_shared_stars(ctx)
    ctx.stats["shared_butterflies"] = butterflies
    ctx.stats["shared_stars"] = stars
    ctx.stats["backend_calls"] = ctx.backend.calls
    qd = _comb(t1.n, 4) - butterflies - stars
    ctx._logger.debug("quartet distance done", qd=qd, **{k: v for k, v in ctx.stats.items()})
    if stats is not None:
        stats.update(ctx.stats)
    return qd


def _star_center(t: RootedTree, nodes) -> int:
    """四个叶子两两 LCA 中最深的一个"""
    best = None
    for i in range(4):
        for j in range(i + 1, 4):
            w = t.lca(nodes[i], nodes[j])
            if best is None or t.depth[w] > t.depth[best]:
                best = w
    return best


def classify_shared_stars(t1: UnrootedTree, t2: UnrootedTree) -> Dict[str, int]:
    """
    逐个枚举共同星形并分桶:

    * type2: 星形没有叶子属于中心代表簇对的公共叶子集合 L
    * missing: 某一侧有两个叶子落在隐式子树中
    * matching: 其余，即被 M' 的 4-匹配直接计数的星形
    """
    ctx = QuartetContext(t1, t2)
    buckets = {"matching": 0, "missing": 0, "type2": 0}
    common_cache: Dict[Tuple[int, int], set] = {}
    for quartet in iter_shared_stars(t1, t2):
        n1 = [ctx.r1.label_node[lab] for lab in quartet]
        n2 = [ctx.r2.label_node[lab] for lab in quartet]
        c1, c2 = _star_center(ctx.r1, n1), _star_center(ctx.r2, n2)
        rep1, rep2 = representative_cluster(ctx.tt1, c1), representative_cluster(ctx.tt2, c2)
        if (rep1, rep2) not in common_cache:
            common_cache[(rep1, rep2)] = {lab for lab in ctx.tt1.chains
                                          if ctx.tt1.contains(rep1, lab) and ctx.tt2.contains(rep2, lab)}
        common = common_cache[(rep1, rep2)]
        if not common.intersection(quartet):
            buckets["type2"] += 1
            continue
        implicit = []
        for r, c, tt, rep, nodes in ((ctx.r1, c1, ctx.tt1, rep1, n1), (ctx.r2, c2, ctx.tt2, rep2, n2)):
            around = _Around(r, c, tt.bottom[rep])
            explicit = {around.locate(r.label_node[lab]) for lab in common}
            implicit.append(sum(1 for x in nodes if isinstance(around.locate(x), tuple)
                                and around.locate(x) not in explicit))
        buckets["missing" if max(implicit) >= 2 else "matching"] += 1
    return buckets

#!/usr/bin/env python
#  -*- coding: utf-8 -*-
__author__ = 'mayanqiong'

"""
Mark/Count 结构: 给叶子染色 A / B / 无色，查询节点 u 周围所有子树 (无根意义下) 的 Σ α_i·β_i，
其中 α_i、β_i 为第 i 棵子树中 A 色、B 色叶子的个数
"""

from typing import Dict, List, Optional, Tuple

from qdkit.algorithm.toptree import TopTree, VERTICAL_KINDS
from qdkit.exceptions import QdkGraphError, QdkLabelMismatchError
from qdkit.log import _get_logger
from qdkit.rangeset import RangeSet
from qdkit.tree import RootedTree

COLORS = ("A", "B")


class FenwickTree(object):
    """树状数组，支持单点加与前缀和"""

    def __init__(self, size: int) -> None:
        self._tree = [0] * (size + 1)

    def add(self, i: int, delta: int) -> None:
        i += 1
        while i < len(self._tree):
            self._tree[i] += delta
            i += i & -i

    def prefix(self, i: int) -> int:
        """[0, i) 的和"""
        s = 0
        while i > 0:
            s += self._tree[i]
            i -= i & -i
        return s

    def range_sum(self, lo: int, hi: int) -> int:
        return self.prefix(hi) - self.prefix(lo) if lo < hi else 0


class MarkCountStructure(object):
    """
    基于轻重链剖分的 Mark/Count 结构

    * 每个节点 p 记录轻孩子的 Σα、Σβ、Σαβ，叶子改色时只需更新 O(log n) 个轻祖先
    * 重孩子与父亲方向的 α、β 由按先序编号的树状数组求出
    """

    def __init__(self, t: RootedTree) -> None:
        self.tree = t
        n = t.node_count
        self._color: List[Optional[str]] = [None] * n
        self._fen = {c: FenwickTree(n) for c in COLORS}
        self._total = {c: 0 for c in COLORS}
        self._sub = {c: [0] * n for c in COLORS}  # 只对链头维护
        self._light = {c: [0] * n for c in COLORS}
        self._light_ab = [0] * n
        self.marks = 0

    def color_of(self, label: int) -> Optional[str]:
        return self._color[self._node(label)]

    def _node(self, label: int) -> int:
        if label not in self.tree.label_node:
            raise QdkLabelMismatchError(f"未知的叶子标签: {label}")
        return self.tree.label_node[label]

    def mark(self, label: int, color: Optional[str]) -> None:
        """
        把叶子 label 染成 color ("A"、"B" 或 None)

        Args:
            label (int): 叶子标签

            color (str): "A"、"B" 或 None (无色)
        """
        if color is not None and color not in COLORS:
            raise QdkGraphError(f"未知的颜色: {color}")
        x = self._node(label)
        old = self._color[x]
        if old == color:
            return
        self.marks += 1
        self._color[x] = color
        da = (color == "A") - (old == "A")
        db = (color == "B") - (old == "B")
        t = self.tree
        for c, d in (("A", da), ("B", db)):
            if d:
                self._fen[c].add(t.pre[x], d)
                self._total[c] += d
        sub_a, sub_b = self._sub["A"], self._sub["B"]
        v = x
        while True:
            h = t.head[v]
            if h == t.root:
                break
            p = t.parent[h]
            before = sub_a[h] * sub_b[h]
            sub_a[h] += da
            sub_b[h] += db
            self._light["A"][p] += da
            self._light["B"][p] += db
            self._light_ab[p] += sub_a[h] * sub_b[h] - before
            v = p

    def subtree_count(self, color: str, u: int) -> int:
        lo, hi = self.tree.subtree_range(u)
        return self._fen[color].range_sum(lo, hi)

    def count_alpha_beta(self, u: int) -> int:
        """节点 u 周围所有子树的 Σ α_i·β_i: 轻孩子计数器 + 重孩子 + 父亲方向"""
        t = self.tree
        total = self._light_ab[u]
        hc = t.heavy[u]
        if hc >= 0:
            total += self.subtree_count("A", hc) * self.subtree_count("B", hc)
        if u != t.root:
            total += (self._total["A"] - self.subtree_count("A", u)) * (self._total["B"] - self.subtree_count("B", u))
        return total


def sweep_alpha_beta(tt: TopTree, inner: RootedTree,
                     queries: Dict[int, List[int]]) -> Tuple[Dict[Tuple[int, int], int], int]:
    """
    对外层树的 top tree 做深度优先遍历，进入簇 C 时内层树中的叶子颜色恰为: A(C) 中的叶子为 A，B(C) 中的为 B

    从 C 进入孩子 C' (兄弟为 C'') 时:

    * C'' 在 C' 上方 (纵向合并中 C' 在下，或横向合并) 时 C'' 的叶子染 A，否则染 B
    * 横向合并且 C' 没有下边界而 C 有时，B(C) 改染 A

    离开时恢复原来的颜色，子树中没有查询的孩子不进入

    Args:
        tt (TopTree): 外层树的 top tree

        inner (RootedTree): 内层树，叶子标签与外层树相同

        queries (dict): 外层簇 -> 需要查询 Σαβ 的内层节点列表

    Returns:
        tuple: ({(簇, 内层节点): Σαβ}, 染色次数)
    """
    outer = tt.tree
    label_at = [outer.labels.get(x) for x in outer.order]
    mc = MarkCountStructure(inner)
    answers: Dict[Tuple[int, int], int] = {}
    if tt.root_cluster is None:
        return answers, 0
    wanted = [False] * tt.cluster_count
    for cid in range(tt.cluster_count):  # 孩子的编号总是小于父亲
        if cid in queries:
            wanted[cid] = True
        if wanted[cid] and tt.parent[cid] >= 0:
            wanted[tt.parent[cid]] = True

    def paint(ranges: RangeSet, color: str, undo: list):
        for lo, hi in ranges:
            for pos in range(lo, hi):
                lab = label_at[pos]
                if lab is not None:
                    undo.append((lab, mc.color_of(lab)))
                    mc.mark(lab, color)

    def visit(cid: int):
        for u in queries.get(cid, ()):
            answers[(cid, u)] = mc.count_alpha_beta(u)
        if tt.children[cid] is None:
            return
        first, second = tt.children[cid]
        for child, sibling in ((first, second), (second, first)):
            if not wanted[child]:
                continue
            undo: list = []
            if tt.kind[cid] in VERTICAL_KINDS:
                paint(tt.leaf_ranges(sibling), "A" if child == second else "B", undo)
            else:
                paint(tt.leaf_ranges(sibling), "A", undo)
                if tt.bottom[child] is None and tt.bottom[cid] is not None:
                    paint(tt.outside_below(cid), "A", undo)
            visit(child)
            for lab, color in reversed(undo):
                mc.mark(lab, color)

    visit(tt.root_cluster)
    _get_logger("MarkCount").debug("alpha beta sweep done", queries=len(answers), marks=mc.marks)
    return answers, mc.marks

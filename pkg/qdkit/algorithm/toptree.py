#!/usr/bin/env python
#  -*- coding: utf-8 -*-
__author__ = 'mayanqiong'

"""
有根树的 top tree 分解

簇 (cluster) 是树中一组边，最多有两个边界节点: 上边界 top 与下边界 bottom (bottom 在 top 的子树中)。
叶子不作为下边界，因此挂着叶子的边构成的基本簇只有上边界。

每个簇由 top 的一段连续孩子 children[top][lo..hi] 及其子树组成，再去掉 bottom 以下的部分，
所以它在先序编号上是 span 区间去掉 subtree(bottom)。

合并按轮进行，每轮先在每个节点下把相邻的两个簇横向合并 (至少一个没有下边界)，
再自上而下把只挂着一个簇的节点与其上方的簇纵向合并。合并类型:

* a: 纵向合并，下方簇有下边界，中间节点成为内部节点
* b: 纵向合并，下方簇没有下边界
* c: 横向合并，两个簇都没有下边界
* d: 横向合并，左边的簇有下边界
* e: 横向合并，右边的簇有下边界
"""

from typing import Dict, List, Optional, Tuple

from qdkit.exceptions import QdkInconsistencyError, QdkLabelMismatchError
from qdkit.log import _get_logger
from qdkit.rangeset import RangeSet, _rangeset_complement, _rangeset_difference, _rangeset_union
from qdkit.tree import RootedTree

BASE = "base"
VERTICAL_KINDS = ("a", "b")


class TopTree(object):
    """
    树 t 的 top tree，簇用整数编号，根簇为 root_cluster

    Example::

        from qdkit import RootedTree, TopTree, parse_newick

        tt = TopTree(RootedTree(parse_newick("(1,(2,(3,(4,5))));")))
        print(tt.tree_height, tt.kind[tt.root_cluster])
    """

    def __init__(self, t: RootedTree) -> None:
        self.tree = t
        self._logger = _get_logger("TopTree", nodes=t.node_count)
        self.top: List[int] = []
        self.bottom: List[Optional[int]] = []
        self.kind: List[str] = []
        self.children: List[Optional[Tuple[int, int]]] = []
        self.middle: List[Optional[int]] = []
        self.height: List[int] = []
        self.lo: List[int] = []
        self.hi: List[int] = []
        self.parent: List[int] = []
        self.rounds = 0
        self.representative: Dict[int, int] = {}
        self.base_of: Dict[int, int] = {}
        self.root_cluster: Optional[int] = None
        if t.node_count >= 2:
            self._build()
        self.chains: Dict[int, List[int]] = {lab: self._chain(lab) for lab in t.labels.values()}
        self._logger.debug("top tree built", clusters=len(self.top), rounds=self.rounds,
                           height=self.tree_height, membership=self.membership)

    def _new(self, top, bottom, kind, lo, hi, children=None, middle=None) -> int:
        cid = len(self.top)
        self.top.append(top)
        self.bottom.append(bottom)
        self.kind.append(kind)
        self.lo.append(lo)
        self.hi.append(hi)
        self.children.append(children)
        self.middle.append(middle)
        self.height.append(0 if children is None else 1 + max(self.height[c] for c in children))
        self.parent.append(-1)
        if children is not None:
            for c in children:
                self.parent[c] = cid
        if kind in VERTICAL_KINDS:
            self.representative[middle] = cid
        return cid

    def _build(self):
        t = self.tree
        hang: Dict[int, List[int]] = {}
        above: Dict[int, int] = {}
        for v in t.order:
            for idx, c in enumerate(t.children[v]):
                cid = self._new(v, None if t.is_leaf(c) else c, BASE, idx, idx)
                self.base_of[c] = cid
                hang.setdefault(v, []).append(cid)
                if not t.is_leaf(c):
                    above[c] = cid
        active = len(self.top)
        while active > 1:
            self.rounds += 1
            fresh = set()
            for v, lst in hang.items():
                if len(lst) < 2:
                    continue
                merged, i = [], 0
                while i < len(lst):
                    x = lst[i]
                    y = lst[i + 1] if i + 1 < len(lst) else None
                    if y is not None and (self.bottom[x] is None or self.bottom[y] is None):
                        w = self._merge_horizontal(v, x, y, above)
                        fresh.add(w)
                        merged.append(w)
                        i += 2
                    else:
                        merged.append(x)
                        i += 1
                hang[v] = merged
            for m in sorted((m for m in above if len(hang.get(m, ())) == 1), key=lambda m: t.pre[m]):
                u, low = above[m], hang[m][0]
                if u in fresh or low in fresh:
                    continue
                w = self._merge_vertical(m, u, low, hang, above)
                fresh.add(w)
            count = sum(len(lst) for lst in hang.values())
            if count >= active:
                raise QdkInconsistencyError(f"top tree 构造在第 {self.rounds} 轮没有进展")
            active = count
        self.root_cluster = hang[t.root][0]

    def _merge_horizontal(self, v, x, y, above) -> int:
        if self.bottom[x] is None and self.bottom[y] is None:
            kind = "c"
        else:
            kind = "d" if self.bottom[x] is not None else "e"
        bottom = self.bottom[x] if self.bottom[x] is not None else self.bottom[y]
        w = self._new(v, bottom, kind, self.lo[x], self.hi[y], (x, y), v)
        if bottom is not None:
            above[bottom] = w
        return w

    def _merge_vertical(self, m, u, low, hang, above) -> int:
        bottom = self.bottom[low]
        w = self._new(self.top[u], bottom, "a" if bottom is not None else "b", self.lo[u], self.hi[u], (u, low), m)
        siblings = hang[self.top[u]]
        siblings[siblings.index(u)] = w
        del hang[m]
        del above[m]
        if bottom is not None:
            above[bottom] = w
        return w

    def _chain(self, label: int) -> List[int]:
        """包含叶子 label 的所有簇，自底向上"""
        if self.root_cluster is None:
            return []
        t = self.tree
        x = t.label_node[label]
        cid = self.base_of[t.children[x][0]] if x == t.root else self.base_of[x]
        chain = []
        while cid >= 0:
            chain.append(cid)
            cid = self.parent[cid]
        return chain

    @property
    def cluster_count(self) -> int:
        return len(self.top)

    @property
    def tree_height(self) -> int:
        return self.height[self.root_cluster] if self.root_cluster is not None else 0

    @property
    def membership(self) -> int:
        """一个叶子最多属于多少个簇"""
        return max((len(c) for c in self.chains.values()), default=0)

    def is_composite(self, cid: int) -> bool:
        return self.kind[cid] != BASE

    def boundaries(self, cid: int) -> Tuple[int, Optional[int]]:
        return self.top[cid], self.bottom[cid]

    def spine(self, cid: int) -> Optional[Tuple[int, int]]:
        """两个边界节点 (祖先在前)，只有一个边界时为 None"""
        return (self.top[cid], self.bottom[cid]) if self.bottom[cid] is not None else None

    def child_containing(self, cid: int, label: int) -> int:
        """簇 cid 的两个孩子中包含叶子 label 的那个，要求叶子属于 cid 且 cid 不是基本簇"""
        chain = self.chains[label]
        return chain[chain.index(cid) - 1]

    def contains(self, cid: int, label: int) -> bool:
        return cid in self.chains[label]

    def span(self, cid: int) -> Tuple[int, int]:
        """top 的孩子 lo..hi 的子树在先序编号上的区间"""
        t = self.tree
        kids = t.children[self.top[cid]]
        first, last = kids[self.lo[cid]], kids[self.hi[cid]]
        return t.pre[first], t.pre[last] + t.size[last]

    def outside_above(self, cid: int) -> RangeSet:
        """A(C): 经过上边界才能到达的簇外部分"""
        t = self.tree
        if self.top[cid] == t.root:
            return []
        lo, hi = self.span(cid)
        return _rangeset_complement([(lo, hi)], 0, t.node_count)

    def outside_below(self, cid: int) -> RangeSet:
        """B(C): 下边界的子树，没有下边界时为空"""
        b = self.bottom[cid]
        if b is None:
            return []
        return [self.tree.subtree_range(b)]

    def outside(self, cid: int, boundary: int) -> RangeSet:
        """经过边界 boundary 到达的簇外部分"""
        return self.outside_above(cid) if boundary == self.top[cid] else self.outside_below(cid)

    def leaf_ranges(self, cid: int) -> RangeSet:
        """簇中叶子所在的先序区间 (区间内也可能有内部节点，按叶子计数时只数叶子)"""
        t = self.tree
        lo, hi = self.span(cid)
        r = [(lo, hi)]
        if self.bottom[cid] is not None:
            r = _rangeset_difference(r, [t.subtree_range(self.bottom[cid])])
        if self.top[cid] == t.root:
            r = _rangeset_union(r, [(0, 1)])
        return r

    def leaf_count(self, cid: int) -> int:
        return self.tree.leaves_in_rangeset(self.leaf_ranges(cid))


def build_top_tree(t: RootedTree) -> TopTree:
    """按轮合并相邻的簇构造 t 的 top tree，t 以叶子为根"""
    return TopTree(t)


def relevant_pairs(tt1: TopTree, tt2: TopTree, keep1=None, keep2=None) -> Dict[Tuple[int, int], List[int]]:
    """
    枚举至少有一个公共叶子的簇对 (C1, C2) 及其公共叶子集合

    Args:
        tt1, tt2 (TopTree): 两棵树的 top tree，叶子标签相同

        keep1, keep2 (callable): [可选] 簇的过滤条件，只保留满足条件的簇

    Returns:
        dict: (C1, C2) -> 公共叶子标签列表 (升序)
    """
    if tt1.tree.n != tt2.tree.n:
        raise QdkLabelMismatchError(f"两棵树的叶子数不同: {tt1.tree.n} 与 {tt2.tree.n}")
    pairs: Dict[Tuple[int, int], List[int]] = {}
    for label in sorted(tt1.chains):
        chain1 = [c for c in tt1.chains[label] if keep1 is None or keep1(c)]
        chain2 = [c for c in tt2.chains[label] if keep2 is None or keep2(c)]
        for c1 in chain1:
            for c2 in chain2:
                pairs.setdefault((c1, c2), []).append(label)
    return pairs


def representative_cluster(tt: TopTree, u: int) -> int:
    """
    内部节点 u 的代表簇: 以 u 为中间节点的 a/b 型合并得到的簇，也是 u 不再是边界节点的最小簇
    """
    if u not in tt.representative:
        raise QdkInconsistencyError(f"节点 {u} 不是内部节点，没有代表簇")
    return tt.representative[u]

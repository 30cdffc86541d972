#!/usr/bin/env python
#  -*- coding: utf-8 -*-
__author__ = 'mayanqiong'

"""
叶子带标签的树: Newick 读写、无根树、以叶子为根的有根树、LCA 与四叶拓扑判定

叶子标签为 1..n 的正整数，内部节点没有标签。节点编号从 0 开始，由读入顺序决定。
"""

import random
from enum import Enum
from typing import Dict, Iterable, List, Optional, Sequence, Tuple

import numpy as np

from qdkit.exceptions import QdkLabelMismatchError, QdkParseError
from qdkit.log import _get_logger
from qdkit.rangeset import RangeSet
from qdkit.utils import _comb

_DELIMITERS = "(),:;"


class QuartetTopology(Enum):
    """四个叶子 a < b < c < d 在树中诱导的拓扑"""
    AB_CD = "ab|cd"
    AC_BD = "ac|bd"
    AD_BC = "ad|bc"
    STAR = "star"


_TOPOLOGIES = (QuartetTopology.AB_CD, QuartetTopology.AC_BD, QuartetTopology.AD_BC, QuartetTopology.STAR)


class UnrootedTree(object):
    """
    无根树，度为 1 的节点是叶子，内部节点的度至少为 3

    Args:
        adj (list): 邻接表，adj[x] 为 x 的邻居列表

        labels (dict): 叶子节点 -> 标签，标签恰好为 1..n
    """

    def __init__(self, adj: Sequence[Sequence[int]], labels: Dict[int, int]) -> None:
        self.adj: List[List[int]] = [list(a) for a in adj]
        self.node_count = len(self.adj)
        if sum(len(a) for a in self.adj) != 2 * (self.node_count - 1):
            raise QdkParseError(f"树的边数应为 {self.node_count - 1}")
        self._check_connected()
        for x in range(self.node_count):
            deg = len(self.adj[x])
            if x in labels and deg > 1:
                raise QdkParseError(f"带标签的节点 {labels[x]} 不是叶子")
            if x not in labels and deg <= 2:
                raise QdkParseError(f"内部节点 {x} 的度为 {deg}，应不小于 3")
        if sorted(labels.values()) != list(range(1, len(labels) + 1)):
            raise QdkParseError(f"叶子标签应恰好为 1..{len(labels)}: {sorted(labels.values())}")
        self.labels: Dict[int, int] = dict(labels)
        self.label_node: Dict[int, int] = {lab: x for x, lab in labels.items()}

    def _check_connected(self):
        if self.node_count == 0:
            raise QdkParseError("空树")
        seen = {0}
        stack = [0]
        while stack:
            for y in self.adj[stack.pop()]:
                if y not in seen:
                    seen.add(y)
                    stack.append(y)
        if len(seen) != self.node_count:
            raise QdkParseError("树不连通")

    @property
    def n(self) -> int:
        """叶子个数"""
        return len(self.labels)

    @property
    def max_degree(self) -> int:
        """内部节点的最大度数 d，没有内部节点时为 0"""
        return max((len(a) for x, a in enumerate(self.adj) if x not in self.labels), default=0)

    def is_leaf(self, x: int) -> bool:
        return x in self.labels

    def edges(self) -> List[Tuple[int, int]]:
        return [(x, y) for x in range(self.node_count) for y in self.adj[x] if x < y]

    def __repr__(self):
        return f"UnrootedTree(n={self.n}, nodes={self.node_count})"


def _from_raw(children: List[List[int]], labels: List[Optional[str]]) -> UnrootedTree:
    """
    把以 0 为根的原始有根结构转为无根树: 去掉度为 1 的内部节点，收缩度为 2 的内部节点，内部标签忽略
    """
    count = len(children)
    adj = [set() for _ in range(count)]
    for p, cs in enumerate(children):
        for c in cs:
            adj[p].add(c)
            adj[c].add(p)
    leaf = [not cs for cs in children]
    alive = [True] * count
    queue = [x for x in range(count) if not leaf[x] and len(adj[x]) <= 2]
    while queue:
        x = queue.pop()
        if not alive[x] or len(adj[x]) > 2:
            continue
        alive[x] = False
        nbrs = list(adj[x])
        for y in nbrs:
            adj[y].discard(x)
        if len(nbrs) == 2:
            adj[nbrs[0]].add(nbrs[1])
            adj[nbrs[1]].add(nbrs[0])
        for y in nbrs:
            if not leaf[y] and len(adj[y]) <= 2:
                queue.append(y)
    index = {}
    for x in range(count):
        if alive[x]:
            index[x] = len(index)
    new_adj = [sorted(index[y] for y in adj[x]) for x in index]
    new_labels = {index[x]: int(labels[x]) for x in index if leaf[x]}
    return UnrootedTree(new_adj, new_labels)


def parse_newick(text: str) -> UnrootedTree:
    """
    解析单棵树的 Newick 文本，支持分支长度与内部节点标签 (均被忽略)

    Args:
        text (str): Newick 文本，以 ';' 结尾

    Returns:
        UnrootedTree: 去掉度为 2 的内部节点后的无根树

    Raises:
        QdkParseError: 语法错误 (包含 0 起始的字符位置)、叶子缺少标签、标签不是正整数或不是 1..n

    Example::

        from qdkit import parse_newick

        t = parse_newick("((1:0.5,2)x,(3,(4,5)));")
        print(t.n, t.max_degree)  # 5 3
    """
    children: List[List[int]] = [[]]
    parent: List[int] = [-1]
    labels: List[Optional[str]] = [None]
    cur, last, i = 0, None, 0
    length = len(text)

    def fail(msg, pos):
        raise QdkParseError(f"Newick 解析失败: {msg} (位置 {pos})")

    def new_child(p):
        children.append([])
        parent.append(p)
        labels.append(None)
        children[p].append(len(parent) - 1)
        return len(parent) - 1

    while i < length:
        ch = text[i]
        if ch.isspace():
            i += 1
            continue
        if ch == ";":
            if cur != 0:
                fail("括号没有闭合", i)
            if text[i + 1:].strip():
                fail("';' 之后还有多余内容", i + 1)
            break
        if ch == "(":
            if last not in (None, "(", ","):
                fail("'(' 出现在非法位置", i)
            cur = new_child(cur)
        elif ch == ",":
            if parent[cur] < 0:
                fail("',' 不在括号内", i)
            cur = new_child(parent[cur])
        elif ch == ")":
            if parent[cur] < 0:
                fail("多余的 ')'", i)
            cur = parent[cur]
        elif ch == ":":
            j = i + 1
            while j < length and text[j] not in _DELIMITERS:
                j += 1
            try:
                float(text[i + 1:j])
            except ValueError:
                fail(f"分支长度 '{text[i + 1:j].strip()}' 不是数字", i + 1)
            last, i = ":", j
            continue
        else:
            if last not in (None, "(", ",", ")") or labels[cur] is not None:
                fail("标签出现在非法位置", i)
            j = i
            while j < length and text[j] not in _DELIMITERS and not text[j].isspace():
                j += 1
            labels[cur] = text[i:j]
            if not children[cur] and not (labels[cur].isdigit() and int(labels[cur]) > 0):
                fail(f"叶子标签 '{labels[cur]}' 不是正整数", i)
            last, i = "label", j
            continue
        last = ch
        i += 1
    else:
        fail("缺少结尾的 ';'", length)
    for x, cs in enumerate(children):
        if not cs and labels[x] is None:
            fail("存在没有标签的叶子", i)
    seen = set()
    for x, cs in enumerate(children):
        if not cs:
            if labels[x] in seen:
                raise QdkParseError(f"Newick 解析失败: 叶子标签 {labels[x]} 重复")
            seen.add(labels[x])
    tree = _from_raw(children, labels)
    if tree.n < 4:
        _get_logger("Tree").warning("tree has fewer than 4 leaves", n=tree.n)
    return tree


def read_newick(path: str) -> UnrootedTree:
    with open(path, mode="r", encoding="utf-8") as f:
        return parse_newick(f.read())


def serialize_newick(tree: UnrootedTree) -> str:
    """
    输出 Newick 文本: 以最小标签叶子的邻居为根，子树按最小叶子标签排序
    """
    if tree.node_count == 1:
        return f"{tree.labels[0]};"
    if tree.node_count == 2:
        return f"({tree.labels[0]},{tree.labels[1]});"
    root = tree.adj[tree.label_node[1]][0]
    order, parent = [root], {root: -1}
    for x in order:
        for y in tree.adj[x]:
            if y != parent[x]:
                parent[y] = x
                order.append(y)
    text, low = {}, {}
    for x in reversed(order):
        if tree.is_leaf(x):
            text[x], low[x] = str(tree.labels[x]), tree.labels[x]
            continue
        cs = sorted((y for y in tree.adj[x] if y != parent[x]), key=lambda y: low[y])
        text[x] = "(" + ",".join(text[y] for y in cs) + ")"
        low[x] = low[cs[0]]
    return text[root] + ";"


class RootedTree(object):
    """
    以叶子为根的有根树，节点编号与 UnrootedTree 相同

    * pre[x]: 先序编号，子树 x 对应区间 [pre[x], pre[x] + size[x])
    * order[i]: 先序编号为 i 的节点
    * heavy[x] / head[x]: 重儿子 (子树最大，相同时取最左) 与所在重链的链头
    * up[k][x]: x 的 2^k 级祖先，根的祖先为根自身
    """

    def __init__(self, tree: UnrootedTree, root_label: int = None) -> None:
        self.tree = tree
        self.labels = tree.labels
        self.label_node = tree.label_node
        self.node_count = tree.node_count
        self.root = tree.label_node[root_label if root_label else 1]
        n = self.node_count
        self.parent = [-1] * n
        self.children: List[List[int]] = [[] for _ in range(n)]
        self.depth = [0] * n
        self.order: List[int] = []
        stack = [self.root]
        while stack:
            x = stack.pop()
            self.order.append(x)
            for y in tree.adj[x]:
                if y != self.parent[x]:
                    self.parent[y] = x
                    self.depth[y] = self.depth[x] + 1
                    self.children[x].append(y)
            stack.extend(reversed(self.children[x]))
        self.pre = [0] * n
        for i, x in enumerate(self.order):
            self.pre[x] = i
        self.size = [1] * n
        for x in reversed(self.order):
            if self.parent[x] >= 0:
                self.size[self.parent[x]] += self.size[x]
        self.heavy = [max(cs, key=lambda y: (self.size[y], -self.pre[y])) if cs else -1 for cs in self.children]
        self.head = [0] * n
        for x in self.order:
            p = self.parent[x]
            self.head[x] = self.head[p] if p >= 0 and self.heavy[p] == x else x
        self.leaf_prefix = [0] * (n + 1)
        for i, x in enumerate(self.order):
            self.leaf_prefix[i + 1] = self.leaf_prefix[i] + (1 if x in self.labels else 0)
        self.up = self._build_lifting()

    def _build_lifting(self) -> List[List[int]]:
        par = np.array([p if p >= 0 else self.root for p in self.parent], dtype=np.int64)
        rows = [par]
        for _ in range(max(1, self.node_count.bit_length()) - 1):
            rows.append(rows[-1][rows[-1]])
        return [row.tolist() for row in rows]

    @property
    def n(self) -> int:
        return len(self.labels)

    def is_leaf(self, x: int) -> bool:
        return x in self.labels

    def subtree_range(self, x: int) -> Tuple[int, int]:
        return self.pre[x], self.pre[x] + self.size[x]

    def is_ancestor(self, a: int, b: int) -> bool:
        """a 是否为 b 的祖先 (含 a == b)"""
        return self.pre[a] <= self.pre[b] < self.pre[a] + self.size[a]

    def ancestor_at_depth(self, x: int, d: int) -> int:
        """x 在深度 d 处的祖先，要求 d <= depth[x]"""
        diff = self.depth[x] - d
        k = 0
        while diff:
            if diff & 1:
                x = self.up[k][x]
            diff >>= 1
            k += 1
        return x

    def child_toward(self, w: int, x: int) -> int:
        """w 的孩子中包含 x 的那个，要求 x 在 w 的子树中且 x != w"""
        return self.ancestor_at_depth(x, self.depth[w] + 1)

    def lca(self, u: int, v: int) -> int:
        if self.depth[u] < self.depth[v]:
            u, v = v, u
        u = self.ancestor_at_depth(u, self.depth[v])
        if u == v:
            return u
        for k in range(len(self.up) - 1, -1, -1):
            if self.up[k][u] != self.up[k][v]:
                u, v = self.up[k][u], self.up[k][v]
        return self.parent[u]

    def extended_lca(self, u: int, v: int) -> Tuple[int, Optional[int], Optional[int]]:
        """
        扩展 LCA 查询

        Returns:
            tuple: (w, cu, cv)，w = LCA(u, v)，cu 为 w 的孩子中通向 u 的那个 (u == w 时为 None)，cv 同理
        """
        w = self.lca(u, v)
        cu = self.child_toward(w, u) if u != w else None
        cv = self.child_toward(w, v) if v != w else None
        return w, cu, cv

    def leaves_in(self, lo: int, hi: int) -> int:
        """先序编号落在 [lo, hi) 的叶子个数"""
        return self.leaf_prefix[hi] - self.leaf_prefix[lo] if lo < hi else 0

    def leaves_in_rangeset(self, rangeset: RangeSet) -> int:
        return sum(self.leaves_in(s, e) for s, e in rangeset)

    def leaf_positions(self) -> Dict[int, int]:
        """标签 -> 叶子的先序编号"""
        return {lab: self.pre[x] for x, lab in self.labels.items()}


def _lca_depth_matrix(t: RootedTree) -> np.ndarray:
    """M[a-1][b-1] = depth(LCA(a, b))，a、b 为叶子标签"""
    n = t.n
    nodes = [t.label_node[lab] for lab in range(1, n + 1)]
    m = np.zeros((n, n), dtype=np.int64)
    for i in range(n):
        m[i, i] = t.depth[nodes[i]]
        for j in range(i + 1, n):
            m[i, j] = m[j, i] = t.depth[t.lca(nodes[i], nodes[j])]
    return m


def quartet_topology(t: RootedTree, quartet: Iterable[int]) -> QuartetTopology:
    """
    判定四个叶子的拓扑: 三种两两配对中 LCA 深度之和严格最大的配对即为蝴蝶的两翼，没有严格最大值时为星形

    Args:
        t (RootedTree): 有根树

        quartet (iterable): 4 个不同的叶子标签

    Example::

        from qdkit import RootedTree, parse_newick, quartet_topology

        t = RootedTree(parse_newick("(1,(2,(3,(4,5))));"))
        print(quartet_topology(t, (1, 2, 4, 5)))  # QuartetTopology.AB_CD
    """
    labels = sorted(quartet)
    if len(set(labels)) != 4 or any(lab not in t.label_node for lab in labels):
        raise QdkLabelMismatchError(f"四叶组 {labels} 不是 4 个不同的叶子标签")
    a, b, c, d = (t.label_node[lab] for lab in labels)

    def dl(x, y):
        return t.depth[t.lca(x, y)]

    sums = (dl(a, b) + dl(c, d), dl(a, c) + dl(b, d), dl(a, d) + dl(b, c))
    best = max(sums)
    return _TOPOLOGIES[sums.index(best)] if sums.count(best) == 1 else QuartetTopology.STAR


def _check_same_labels(t1: UnrootedTree, t2: UnrootedTree) -> None:
    if t1.n != t2.n:
        raise QdkLabelMismatchError(f"两棵树的叶子标签集合不一致: 1..{t1.n} 与 1..{t2.n}")


def _topology_codes(m: np.ndarray, a: int, b: int, cs: np.ndarray, ds: np.ndarray) -> np.ndarray:
    """a < b < cs < ds 的所有四叶组的拓扑编码，0/1/2 为三种蝴蝶，3 为星形"""
    sums = np.stack((m[a, b] + m[cs, ds], m[a, cs] + m[b, ds], m[a, ds] + m[b, cs]))
    best = sums.max(axis=0)
    ties = (sums == best).sum(axis=0)
    return np.where(ties == 1, sums.argmax(axis=0), 3)


def _iter_quartet_codes(t1: RootedTree, t2: RootedTree):
    """按 (a, b) 分块产出 (a, b, cs, ds, 拓扑编码1, 拓扑编码2)，标签从 0 开始"""
    m1, m2 = _lca_depth_matrix(t1), _lca_depth_matrix(t2)
    n = t1.n
    tri = {}
    for a in range(n):
        for b in range(a + 1, n - 2):
            rest = n - b - 1
            if rest not in tri:
                tri[rest] = np.triu_indices(rest, 1)
            cs, ds = tri[rest][0] + b + 1, tri[rest][1] + b + 1
            yield a, b, cs, ds, _topology_codes(m1, a, b, cs, ds), _topology_codes(m2, a, b, cs, ds)


def compare_quartets(t1: UnrootedTree, t2: UnrootedTree) -> Dict[str, int]:
    """
    枚举全部四叶组比较两棵树的拓扑

    Returns:
        dict: total (C(n, 4))、shared_butterflies (两棵树中相同的蝴蝶)、shared_stars (两棵树中都是星形)
    """
    _check_same_labels(t1, t2)
    result = {"total": _comb(t1.n, 4), "shared_butterflies": 0, "shared_stars": 0}
    if t1.n < 4:
        return result
    r1, r2 = RootedTree(t1), RootedTree(t2)
    for _, _, _, _, k1, k2 in _iter_quartet_codes(r1, r2):
        same = k1 == k2
        result["shared_butterflies"] += int(np.count_nonzero(same & (k1 < 3)))
        result["shared_stars"] += int(np.count_nonzero(same & (k1 == 3)))
    return result


def iter_shared_stars(t1: UnrootedTree, t2: UnrootedTree):
    """逐个产出在两棵树中都是星形的四叶组 (标签升序的 4 元组)"""
    _check_same_labels(t1, t2)
    if t1.n < 4:
        return
    for a, b, cs, ds, k1, k2 in _iter_quartet_codes(RootedTree(t1), RootedTree(t2)):
        for i in np.flatnonzero((k1 == 3) & (k2 == 3)):
            yield a + 1, b + 1, int(cs[i]) + 1, int(ds[i]) + 1


def brute_quartet_distance(t1: UnrootedTree, t2: UnrootedTree) -> int:
    """
    枚举全部 C(n, 4) 个四叶组，统计两棵树中拓扑不同的个数，n < 4 时为 0

    Example::

        from qdkit import brute_quartet_distance, parse_newick

        star = parse_newick("(1,2,3,4,5);")
        caterpillar = parse_newick("(1,(2,(3,(4,5))));")
        print(brute_quartet_distance(star, caterpillar))  # 5
    """
    r = compare_quartets(t1, t2)
    return r["total"] - r["shared_butterflies"] - r["shared_stars"]


def tree_from_nested(groups: List[List], rd: random.Random = None) -> UnrootedTree:
    """
    groups 为嵌套列表，整数为叶子标签；rd 不为空时打乱叶子标签
    """
    children: List[List[int]] = []
    labels: List[Optional[str]] = []
    stack = [(groups, -1)]
    leaves = []
    while stack:
        item, p = stack.pop()
        children.append([])
        labels.append(None)
        x = len(children) - 1
        if p >= 0:
            children[p].append(x)
        if isinstance(item, list):
            stack.extend((c, x) for c in reversed(item))
        else:
            labels[x] = str(item)
            leaves.append(x)
    if rd is not None:
        perm = [labels[x] for x in leaves]
        rd.shuffle(perm)
        for x, lab in zip(leaves, perm):
            labels[x] = lab
    return _from_raw(children, labels)


def random_tree(n: int, rd: random.Random = None, max_degree: int = None) -> UnrootedTree:
    """
    随机树: 每次从当前的子树森林中随机取 k 棵挂到一个新的内部节点下，直到只剩一棵

    Args:
        n (int): 叶子数，不小于 1

        rd (random.Random): 随机数引擎

        max_degree (int): [可选] 内部节点的最大度数，不小于 3，默认不限制
    """
    rd = rd if rd else random.Random()
    if max_degree is not None and max_degree < 3:
        raise ValueError(f"max_degree 不能小于 3: {max_degree}")
    pool: List = list(range(1, n + 1))
    while len(pool) > 1:
        top = len(pool) if max_degree is None else min(len(pool), max_degree - 1)
        k = rd.randint(2, top)
        rd.shuffle(pool)
        pool = pool[k:] + [pool[:k]]
    return tree_from_nested(pool[0] if isinstance(pool[0], list) else [pool[0]], rd)


def star_tree(n: int) -> UnrootedTree:
    return tree_from_nested(list(range(1, n + 1)))


def caterpillar_tree(n: int) -> UnrootedTree:
    """(1,(2,(3,...(n-1,n))))"""
    nested: List = [n - 1, n] if n >= 2 else [n]
    for lab in range(n - 2, 0, -1):
        nested = [lab, nested]
    return tree_from_nested(nested)


def broom_tree(n: int, bristles: int) -> UnrootedTree:
    """一端是 bristles 个叶子组成的星，其余叶子排成毛毛虫"""
    bristles = max(2, min(bristles, n))
    nested: List = list(range(n - bristles + 1, n + 1))
    for lab in range(n - bristles, 0, -1):
        nested = [lab, nested]
    return tree_from_nested(nested)


def balanced_tree(n: int, arity: int) -> UnrootedTree:
    """把 n 个叶子依次 arity 个一组合并，直到只剩一棵的近似平衡 d 叉树"""
    pool: List = list(range(1, n + 1))
    while len(pool) > 1:
        pool = [pool[i:i + arity] if len(pool[i:i + arity]) > 1 else pool[i] for i in range(0, len(pool), arity)]
    return tree_from_nested(pool[0] if isinstance(pool[0], list) else [pool[0]])

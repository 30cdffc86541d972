#!/usr/bin/env python
#  -*- coding: utf-8 -*-
__author__ = 'mayanqiong'

"""
多重图数据模型与 multichoose 演算

节点编号在内存中从 0 开始，边表文本格式中从 1 开始。
边统一存储为 (u, v, mult)，u < v，同一对节点只出现一次，重边通过 mult 表示。
"""

import random
from typing import Dict, Iterable, List, Optional, Sequence, Tuple

from qdkit.exceptions import QdkGraphError, QdkInconsistencyError, QdkParseError

Edge = Tuple[int, int, int]


class Multigraph(object):
    """
    无自环的多重图，可选地带有二分图划分

    二分图的两部分分别为 {0, ..., n1 - 1} 和 {n1, ..., node_count - 1}
    """

    def __init__(self, node_count: int, edges: Iterable[Sequence[int]] = (), n1: Optional[int] = None) -> None:
        """
        创建多重图

        Args:
            node_count (int): 节点数

            edges (iterable): (u, v) 或 (u, v, mult) 的序列，重复出现的节点对会合并并累加重数

            n1 (int): [可选] 二分图左部节点数，传入时要求每条边都跨越两部分
        """
        if node_count < 0:
            raise QdkGraphError(f"节点数不能为负数: {node_count}")
        self.node_count = node_count
        self.n1 = n1
        merged: Dict[Tuple[int, int], int] = {}
        for e in edges:
            u, v = int(e[0]), int(e[1])
            m = int(e[2]) if len(e) > 2 else 1
            if not (0 <= u < node_count and 0 <= v < node_count):
                raise QdkGraphError(f"边 ({u}, {v}) 的端点超出节点范围 [0, {node_count})")
            if u == v:
                raise QdkGraphError(f"不支持自环: 节点 {u}")
            if m < 1:
                raise QdkGraphError(f"边 ({u}, {v}) 的重数必须为正整数: {m}")
            key = (u, v) if u < v else (v, u)
            merged[key] = merged.get(key, 0) + m  # dict 保持首次出现的顺序
        if n1 is not None:
            if not 0 <= n1 <= node_count:
                raise QdkGraphError(f"二分图左部节点数 {n1} 超出范围")
            for u, v in merged:
                if not (u < n1 <= v):
                    raise QdkGraphError(f"边 ({u}, {v}) 没有跨越二分图的两部分")
        self.edges: Tuple[Edge, ...] = tuple((u, v, m) for (u, v), m in merged.items())
        self._adj: Optional[List[Dict[int, int]]] = None

    @property
    def adj(self) -> List[Dict[int, int]]:
        """邻接表，adj[u][v] 为边 (u, v) 的重数"""
        if self._adj is None:
            adj = [dict() for _ in range(self.node_count)]
            for u, v, m in self.edges:
                adj[u][v] = m
                adj[v][u] = m
            self._adj = adj
        return self._adj

    @property
    def edge_count(self) -> int:
        """不同节点对的个数 |E|"""
        return len(self.edges)

    @property
    def total_mult(self) -> int:
        """所有边重数之和"""
        return sum(m for _, _, m in self.edges)

    @property
    def max_mult(self) -> int:
        return max((m for _, _, m in self.edges), default=0)

    @property
    def is_simple(self) -> bool:
        return all(m == 1 for _, _, m in self.edges)

    @property
    def is_bipartite(self) -> bool:
        return self.n1 is not None

    def degree(self, u: int) -> int:
        return len(self.adj[u])

    def mult(self, u: int, v: int) -> int:
        return self.adj[u].get(v, 0)

    def left_nodes(self) -> range:
        return range(self.n1)

    def right_nodes(self) -> range:
        return range(self.n1, self.node_count)

    def simple_base(self) -> 'Multigraph':
        """所有重数置为 1 的底图"""
        return Multigraph(self.node_count, [(u, v, 1) for u, v, _ in self.edges], self.n1)

    def mirror(self) -> 'Multigraph':
        """交换二分图的左右两部分"""
        _check_bipartite(self)
        n1, n = self.n1, self.node_count
        n2 = n - n1

        def image(x):
            return x - n1 if x >= n1 else x + n2

        return Multigraph(n, [(image(v), image(u), m) for u, v, m in self.edges], n2)

    def without_nodes(self, deleted: Iterable[int]) -> 'Multigraph':
        """删除 deleted 中的节点关联的所有边，节点编号保持不变"""
        deleted = set(deleted)
        return Multigraph(self.node_count, [e for e in self.edges if e[0] not in deleted and e[1] not in deleted],
                          self.n1)

    def __repr__(self):
        part = f", n1={self.n1}" if self.n1 is not None else ""
        return f"Multigraph(node_count={self.node_count}, edges={list(self.edges)}{part})"


def _check_bipartite(g: Multigraph) -> None:
    if not g.is_bipartite:
        raise QdkGraphError("该操作要求输入二分图")


def _check_simple(g: Multigraph) -> None:
    if not g.is_simple:
        raise QdkGraphError("该操作要求输入简单图 (所有重数为 1)")


def parse_edge_list(text: str) -> Multigraph:
    """
    解析边表文本

    第一行为 ``nodes <N> [bipartite <N1>]``，之后每行为 ``u v [mult]``，节点编号从 1 开始，mult 默认为 1。
    空行和以 # 开头的行会被忽略。

    Args:
        text (str): 边表文本

    Returns:
        Multigraph: 解析得到的多重图

    Example::

        from qdkit import parse_edge_list

        g = parse_edge_list("nodes 4\\n1 2\\n2 3\\n3 4\\n4 1 2\\n")
        print(g.edges)  # ((0, 1, 1), (1, 2, 1), (2, 3, 1), (0, 3, 2))
    """
    header = None
    edges = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        fields = line.split()
        if header is None:
            if fields[0] != "nodes" or len(fields) not in (2, 4) or (len(fields) == 4 and fields[2] != "bipartite"):
                raise QdkParseError(f"边表解析失败: 第 {lineno} 行应为 'nodes <N> [bipartite <N1>]'")
            try:
                header = (int(fields[1]), int(fields[3]) if len(fields) == 4 else None)
            except ValueError:
                raise QdkParseError(f"边表解析失败: 第 {lineno} 行节点数不是整数")
            continue
        if len(fields) not in (2, 3):
            raise QdkParseError(f"边表解析失败: 第 {lineno} 行应为 'u v [mult]'")
        try:
            u, v = int(fields[0]), int(fields[1])
            m = int(fields[2]) if len(fields) == 3 else 1
        except ValueError:
            raise QdkParseError(f"边表解析失败: 第 {lineno} 行包含非整数字段")
        if not (1 <= u <= header[0] and 1 <= v <= header[0]):
            raise QdkParseError(f"边表解析失败: 第 {lineno} 行节点编号超出 1..{header[0]}")
        if u == v:
            raise QdkParseError(f"边表解析失败: 第 {lineno} 行是自环")
        if m < 1:
            raise QdkParseError(f"边表解析失败: 第 {lineno} 行重数必须为正整数")
        edges.append((u - 1, v - 1, m))
    if header is None:
        raise QdkParseError("边表解析失败: 缺少 'nodes <N>' 首行")
    try:
        return Multigraph(header[0], edges, header[1])
    except QdkGraphError as e:
        raise QdkParseError(f"边表解析失败: {e.message}")


def read_edge_list(path: str) -> Multigraph:
    with open(path, mode="r", encoding="utf-8") as f:
        return parse_edge_list(f.read())


def serialize_edge_list(g: Multigraph) -> str:
    """把多重图输出为边表文本，重数为 1 时省略"""
    lines = [f"nodes {g.node_count}" + (f" bipartite {g.n1}" if g.is_bipartite else "")]
    for u, v, m in g.edges:
        lines.append(f"{u + 1} {v + 1}" + (f" {m}" if m != 1 else ""))
    return "\n".join(lines) + "\n"


def multichoose(values: Iterable[int], k: int) -> int:
    """
    计算 [S k]: 从重数集合 S 中选出 k 条不同的边的方案数 (按重数乘积加权)，即重数的 k 次初等对称多项式

    Args:
        values (iterable): 边集 S 中各边的重数

        k (int): 选出的边数

    Returns:
        int: [S k]，k = 0 时为 1，k > |S| 时为 0

    Example::

        from qdkit import multichoose

        print(multichoose([2, 3], 2))  # 6
    """
    return multichoose_table(values, k)[k]


def multichoose_table(values: Iterable[int], k: int = 4) -> List[int]:
    """返回 [[S 0], [S 1], ..., [S k]]"""
    if k < 0:
        raise QdkGraphError(f"k 不能为负数: {k}")
    e = [1] + [0] * k
    for x in values:
        for j in range(k, 0, -1):
            e[j] += e[j - 1] * x
    return e


def multichoose_difference(a_vals: Sequence[int], b_vals: Sequence[int], k: int) -> List[int]:
    """
    已知 [A i] 与 [B i] (B 是 A 的子集, i <= k)，计算 [A∖B j] (j = 0..k)

    使用递推 [A∖B j] = [A j] - Σ_{i<j} [A∖B i]·[B j-i]

    Args:
        a_vals (list): [A 0..k]

        b_vals (list): [B 0..k]

        k (int): 最大阶数

    Returns:
        list: [A∖B 0..k]

    Raises:
        QdkInconsistencyError: 出现负数时说明 B 不是 A 的子集
    """
    d = [0] * (k + 1)
    for j in range(k + 1):
        s = a_vals[j]
        for i in range(j):
            s -= d[i] * b_vals[j - i]
        if j == 0 and b_vals[0] != 1:
            raise QdkInconsistencyError(f"[B 0] 必须为 1: {b_vals[0]}")
        if s < 0:
            raise QdkInconsistencyError(f"multichoose 差集出现负数 (j={j}, 值={s})，B 不是 A 的子集")
        d[j] = s
    return d


def random_multigraph(n: int, p: float, max_mult: int = 1, rd: random.Random = None) -> Multigraph:
    """以概率 p 独立生成每条边，重数在 [1, max_mult] 中均匀选取"""
    rd = rd if rd else random.Random()
    edges = [(u, v, rd.randint(1, max_mult)) for u in range(n) for v in range(u + 1, n) if rd.random() < p]
    return Multigraph(n, edges)


def random_bipartite_multigraph(n1: int, n2: int, p: float, max_mult: int = 1,
                                rd: random.Random = None) -> Multigraph:
    """随机二分多重图，左部 n1 个节点，右部 n2 个节点"""
    rd = rd if rd else random.Random()
    edges = [(u, n1 + v, rd.randint(1, max_mult)) for u in range(n1) for v in range(n2) if rd.random() < p]
    return Multigraph(n1 + n2, edges, n1)

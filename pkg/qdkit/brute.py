#!/usr/bin/env python
#  -*- coding: utf-8 -*-
__author__ = 'mayanqiong'

"""
暴力枚举的计数程序，作为所有快速算法的对照
"""

from collections import Counter
from itertools import combinations
from typing import Dict

from qdkit.graph import Multigraph, _check_bipartite
from qdkit.utils import _exact_div

#: 16 种 4 条边的二分图形状，带 ' 的是左右镜像
SHAPES = ("A", "A'", "B", "B'", "C", "C'", "D", "E", "E'", "F", "F'", "G", "H", "I", "I'", "J")

# (左部度数序列, 右部度数序列) -> 形状，(2,1,1)|(2,1,1) 需要再区分 G/H
_REPRESENTATION = {
    ((4,), (1, 1, 1, 1)): "A",
    ((3, 1), (2, 1, 1)): "B",
    ((3, 1), (1, 1, 1, 1)): "C",
    ((2, 2), (2, 2)): "D",
    ((2, 2), (2, 1, 1)): "E",
    ((2, 2), (1, 1, 1, 1)): "F",
    ((2, 1, 1), (1, 1, 1, 1)): "I",
    ((1, 1, 1, 1), (1, 1, 1, 1)): "J",
}
for (_l, _r), _s in list(_REPRESENTATION.items()):
    if _l != _r:
        _REPRESENTATION[(_r, _l)] = _s + "'"


def brute_count_c4(g: Multigraph) -> int:
    """
    枚举有序的 4 元组统计 4-环，每个环按各边重数之积加权，每个无序环被枚举 8 次

    Example::

        from qdkit import Multigraph, brute_count_c4

        k4 = Multigraph(4, [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)])
        print(brute_count_c4(k4))  # 3
    """
    adj = g.adj
    total = 0
    for u in range(g.node_count):
        for v, m_uv in adj[u].items():
            for w, m_vw in adj[v].items():
                if w == u:
                    continue
                for x, m_wx in adj[w].items():
                    if x == u or x == v:
                        continue
                    m_xu = adj[x].get(u)
                    if m_xu:
                        total += m_uv * m_vw * m_wx * m_xu
    return _exact_div(total, 8, "有序 4-环计数")


def _classify_shape(g: Multigraph, chosen) -> str:
    left, right = Counter(), Counter()
    for u, v, _ in chosen:
        left[u] += 1
        right[v] += 1
    key = (tuple(sorted(left.values(), reverse=True)), tuple(sorted(right.values(), reverse=True)))
    if key == ((2, 1, 1), (2, 1, 1)):
        a = next(x for x, d in left.items() if d == 2)
        b = next(x for x, d in right.items() if d == 2)
        return "H" if any(u == a and v == b for u, v, _ in chosen) else "G"
    return _REPRESENTATION[key]


def brute_shape_counts(g: Multigraph) -> Dict[str, int]:
    """枚举所有 4 条不同边的组合，返回 16 种形状各自的加权个数"""
    _check_bipartite(g)
    counts = {s: 0 for s in SHAPES}
    for chosen in combinations(g.edges, 4):
        w = chosen[0][2] * chosen[1][2] * chosen[2][2] * chosen[3][2]
        counts[_classify_shape(g, chosen)] += w
    return counts


def brute_count_shape(g: Multigraph, shape: str) -> int:
    """
    返回二分多重图 g 中形状 shape 的加权个数

    Args:
        g (Multigraph): 二分多重图

        shape (str): SHAPES 中的一个形状名

    Returns:
        int: 形状个数
    """
    if shape not in SHAPES:
        raise ValueError(f"未知的形状: {shape}")
    return brute_shape_counts(g)[shape]


def brute_count_4matchings(g: Multigraph) -> int:
    """大小为 4 的匹配个数，即形状 J 的个数"""
    return brute_count_shape(g, "J")


def brute_count_2matchings(g: Multigraph) -> int:
    _check_bipartite(g)
    return sum(e[2] * f[2] for e, f in combinations(g.edges, 2) if not {e[0], e[1]} & {f[0], f[1]})

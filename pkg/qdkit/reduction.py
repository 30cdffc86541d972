#!/usr/bin/env python
#  -*- coding: utf-8 -*-
__author__ = 'mayanqiong'

"""
4-环计数到四分体距离的归约: 图 -> 二分图 -> 两棵树，以及从四分体距离反推 4-环数
"""

from typing import Dict, List, Tuple

from qdkit.exceptions import QdkTooFewEdgesError
from qdkit.graph import Multigraph, _check_bipartite, _check_simple
from qdkit.log import _get_logger
from qdkit.shapes import count_easy_shapes, simple_t_values
from qdkit.tree import UnrootedTree, tree_from_nested
from qdkit.utils import _check_nonnegative, _comb, _exact_div

LeafMap = Dict[int, Tuple[int, int]]


def bipartize(g: Multigraph) -> Multigraph:
    """
    把图 G 变为二分图: 节点 v 复制为左部的 v 与右部的 n + v，边 {u, v} 变为 {u, n+v} 与 {v, n+u}，重数不变

    G 的每个 4-环恰好对应新图中的两个 4-环，且新图中没有其他 4-环

    Example::

        from qdkit import Multigraph, bipartize, brute_count_c4

        k4 = Multigraph(4, [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)])
        print(brute_count_c4(bipartize(k4)))  # 6
    """
    n = g.node_count
    edges = []
    for u, v, m in g.edges:
        edges.append((u, n + v, m))
        edges.append((v, n + u, m))
    return Multigraph(2 * n, edges, n)


def graph_to_nested(g: Multigraph) -> Tuple[List, List, LeafMap]:
    """
    构造两棵树的嵌套表示: 第 i 棵树的根下挂 V_i 中每个非孤立节点，该节点下挂其关联边对应的叶子

    Returns:
        tuple: (树 1 的嵌套列表, 树 2 的嵌套列表, 叶子标签 -> 边的两个端点)，叶子标签按边的顺序从 1 开始
    """
    _check_bipartite(g)
    _check_simple(g)
    if g.edge_count < 4:
        raise QdkTooFewEdgesError(f"边数为 {g.edge_count}，至少需要 4 条边才能构造四分体距离实例")
    leaf_map: LeafMap = {}
    left: Dict[int, List[int]] = {}
    right: Dict[int, List[int]] = {}
    for label, (u, v, _) in enumerate(g.edges, start=1):
        leaf_map[label] = (u, v)
        left.setdefault(u, []).append(label)
        right.setdefault(v, []).append(label)
    nested1 = [left[u] for u in sorted(left)]
    nested2 = [right[v] for v in sorted(right)]
    _get_logger("Reduction").debug("graph to trees", edges=g.edge_count, left_nodes=len(left),
                                   right_nodes=len(right))
    return nested1, nested2, leaf_map


def graph_to_trees(g: Multigraph) -> Tuple[UnrootedTree, UnrootedTree, LeafMap]:
    """
    由简单二分图构造四分体距离实例，两棵树共享叶子标签 1..|E|

    Args:
        g (Multigraph): 简单二分图，至少 4 条边

    Returns:
        tuple: (T1, T2, leaf_map)

    Raises:
        QdkTooFewEdgesError: 边数少于 4
    """
    nested1, nested2, leaf_map = graph_to_nested(g)
    return tree_from_nested(nested1), tree_from_nested(nested2), leaf_map


def c4_from_qd(g: Multigraph, qd: int) -> int:
    """
    已知 graph_to_trees(g) 的四分体距离 qd，计算 g 的 4-环数

    C4 = C(|E|, 4) - qd - #A - #A' - #C - #C' - #G - t_J

    Example::

        from qdkit import Multigraph, brute_quartet_distance, c4_from_qd, graph_to_trees

        k33 = Multigraph(6, [(u, v) for u in range(3) for v in range(3, 6)], n1=3)
        t1, t2, _ = graph_to_trees(k33)
        print(c4_from_qd(k33, brute_quartet_distance(t1, t2)))  # 9
    """
    _check_bipartite(g)
    _check_simple(g)
    easy = count_easy_shapes(g)
    t_j = simple_t_values(g)["t_J"]
    c4 = _comb(g.edge_count, 4) - qd - easy["A"] - easy["A'"] - easy["C"] - easy["C'"] - easy["G"] - t_j
    return _check_nonnegative(c4, "由四分体距离反推的 C4")


def extract_c4(g: Multigraph, method: str = "fast") -> int:
    """
    完整的往返流程: 二分化 -> 构造两棵树 -> 四分体距离 -> 反推 C4，结果除以 2 即为 g 的 4-环数

    Args:
        g (Multigraph): 简单图

        method (str): 四分体距离的计算方法，"fast" 或 "brute"
    """
    from qdkit.qdist import quartet_distance
    _check_simple(g)
    gb = bipartize(g)
    t1, t2, _ = graph_to_trees(gb)
    qd = quartet_distance(t1, t2, method=method)
    return _exact_div(c4_from_qd(gb, qd), 2, "二分化后的 4-环数")

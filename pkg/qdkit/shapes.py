#!/usr/bin/env python
#  -*- coding: utf-8 -*-
__author__ = 'mayanqiong'

"""
二分多重图中 16 种 4 边形状的线性时间计数

记号:
    s_k(x) = [E(x) k]，M1 = Σ mult，对边 e = (u, v, w) (u 在左部)，X(e) = E ∖ E(u) ∖ E(v)
    所有 Σ_{x<y} f(x)f(y) 都按 ((Σf)² - Σf²) / 2 计算
"""

from typing import Dict, Iterable, List

from qdkit.exceptions import QdkGraphError
from qdkit.graph import Multigraph, _check_bipartite, multichoose_difference, multichoose_table
from qdkit.utils import _check_nonnegative, _comb, _exact_div

SHAPE_NAMES = ("A", "A'", "B", "B'", "C", "C'", "D", "E", "E'", "F", "F'", "G", "H", "I", "I'", "J")


class ShapeLedger(dict):
    """
    形状计数账本，键为形状名 ("A" ... "J"，带 ' 的为镜像) 或辅助量名:

    * "t_E", "t_F", "t_H", "t_I", "t_J" 及镜像: 不依赖 C4 的 t 值
    * "zz": 3 条边的路径数，"zoz": 中间边取两次的路径数
    * "<" / ">": 左部 / 右部的 2 边樱桃数，"le" / "ge": 左 / 右樱桃加一条不相交边
    * "eq3": 大小为 3 的匹配数，"eq2": 大小为 2 的匹配数
    * "OV" / "OV'": 边权平方乘以 X(e) 中左 / 右樱桃数之和，"OVZ" / "OVZ'": 其中经过对端邻居的修正项
    * "OII": 边权平方乘以 X(e) 中 2-匹配数之和
    * "C4": 4-环个数
    """

    def __getattr__(self, item):
        try:
            return self[item]
        except KeyError:
            raise AttributeError(item)

    def shapes(self) -> Dict[str, int]:
        return {s: self[s] for s in SHAPE_NAMES if s in self}

    def shape_total(self) -> int:
        return sum(self.shapes().values())


class _Tables(object):
    """每张图预先计算一次的 multichoose 表: [E k]、每个节点的 [E(x) k]"""

    def __init__(self, g: Multigraph, k: int = 4):
        self.k = k
        self.all = multichoose_table((m for _, _, m in g.edges), k)
        self.node = [multichoose_table(g.adj[x].values(), k) for x in range(g.node_count)]

    def single(self, w: int) -> List[int]:
        return [1, w] + [0] * (self.k - 1)

    def minus(self, a: List[int], b: List[int]) -> List[int]:
        return multichoose_difference(a, b, self.k)

    def edge_parts(self, u: int, v: int, w: int):
        """返回 ([E(u)-e k], [E(v)-e k], [X(e) k])"""
        e = self.single(w)
        eu = self.minus(self.node[u], e)
        ev = self.minus(self.node[v], e)
        x = self.minus(self.minus(self.all, self.node[u]), ev)
        return eu, ev, x


def _half_square_sum(values: Iterable[int]) -> int:
    s1 = s2 = 0
    for f in values:
        s1 += f
        s2 += f * f
    return _exact_div(s1 * s1 - s2, 2, "Σ_{x<y}")


def count_easy_shapes(g: Multigraph) -> ShapeLedger:
    """
    用度数与 multichoose 公式计算形状 A、B、C、G 及其镜像

    Args:
        g (Multigraph): 二分多重图

    Returns:
        ShapeLedger: 只包含 A, A', B, B', C, C', G, zoz, "<", ">" 的账本

    Example::

        from qdkit import Multigraph, count_easy_shapes

        star = Multigraph(5, [(0, 1), (0, 2), (0, 3), (0, 4)], n1=1)
        print(count_easy_shapes(star)["A"])  # 1
    """
    _check_bipartite(g)
    tb = _Tables(g)
    ledger = ShapeLedger()
    m1 = tb.all[1]
    left, right = g.left_nodes(), g.right_nodes()
    ledger["A"] = sum(tb.node[u][4] for u in left)
    ledger["A'"] = sum(tb.node[v][4] for v in right)
    b = b_mirror = zoz = 0
    for u, v, w in g.edges:
        eu, ev, _ = tb.edge_parts(u, v, w)
        b += w * eu[2] * ev[1]
        b_mirror += w * ev[2] * eu[1]
        zoz += w * w * (tb.node[u][1] - w) * (tb.node[v][1] - w)
    ledger["B"], ledger["B'"], ledger["zoz"] = b, b_mirror, zoz
    ledger["C"] = sum(tb.node[u][3] * (m1 - tb.node[u][1]) for u in left) - b
    ledger["C'"] = sum(tb.node[v][3] * (m1 - tb.node[v][1]) for v in right) - b_mirror
    ledger["<"] = sum(tb.node[u][2] for u in left)
    ledger[">"] = sum(tb.node[v][2] for v in right)
    ledger["G"] = ledger["<"] * ledger[">"] - b - b_mirror - zoz
    for s in ("A", "A'", "B", "B'", "C", "C'", "G"):
        _check_nonnegative(ledger[s], f"形状 {s}")
    return ledger


def count_t_values(g: Multigraph, c4: int) -> ShapeLedger:
    """
    计算全部 t 值与辅助量 (每项都是一次线性扫描，不依赖 c4)，再结合 c4 得到全部 16 种形状

    #E = t_E - 2·C4，#F = t_F + C4，#H = t_H + 4·C4，#I = t_I - 2·C4，#J = t_J + C4

    Args:
        g (Multigraph): 二分多重图

        c4 (int): g 中的 4-环个数

    Returns:
        ShapeLedger: 完整的账本
    """
    ledger = count_easy_shapes(g)
    tb = _Tables(g)
    s1 = [t[1] for t in tb.node]
    s2 = [t[2] for t in tb.node]
    m1 = tb.all[1]
    left, right = g.left_nodes(), g.right_nodes()
    # 每个右部节点 v 上 f = w·(s1(u) - w) 的和与平方和，左部同理
    z = [0] * g.node_count
    z_sq = [0] * g.node_count
    for u, v, w in g.edges:
        f, fm = w * (s1[u] - w), w * (s1[v] - w)
        z[v] += f
        z_sq[v] += f * f
        z[u] += fm
        z_sq[u] += fm * fm
    t_e = sum(_exact_div(z[v] * z[v] - z_sq[v], 2, "t_E") for v in right)
    t_e_mirror = sum(_exact_div(z[u] * z[u] - z_sq[u], 2, "t_E'") for u in left)

    zz = tp_h = tp_i = tp_i_mirror = le_raw = ge_raw = n3_raw = 0
    ov = ov_mirror = ovz = ovz_mirror = oii_raw = eq2_raw = 0
    s2l, s2r = ledger["<"], ledger[">"]
    for u, v, w in g.edges:
        _, _, x = tb.edge_parts(u, v, w)
        au, av = s1[u] - w, s1[v] - w
        zz += w * au * av
        tp_h += w * au * av * x[1]
        tp_i += w * au * x[2]
        tp_i_mirror += w * av * x[2]
        le_raw += w * au * x[1]
        ge_raw += w * av * x[1]
        n3_raw += w * x[2]
        eq2_raw += w * x[1]
        ww = w * w
        ovz += ww * (z[v] - w * au)
        ovz_mirror += ww * (z[u] - w * av)
        ov += ww * (s2l - s2[u] - z[v] + w * au)
        ov_mirror += ww * (s2r - s2[v] - z[u] + w * av)
        oii_raw += ww * x[2]

    ledger.update({"C4": c4, "D": c4, "zz": zz, "t_E": t_e, "t_E'": t_e_mirror,
                   "OV": ov, "OV'": ov_mirror, "OVZ": ovz, "OVZ'": ovz_mirror})
    ledger["le"] = _exact_div(le_raw - zz, 2, "#≤")
    ledger["ge"] = _exact_div(ge_raw - zz, 2, "#≥")
    ledger["eq2"] = _exact_div(eq2_raw, 2, "#=")
    ledger["eq3"] = _exact_div(n3_raw - ledger["le"] - ledger["ge"], 3, "#≡")
    ledger["OII"] = oii_raw - ov - ov_mirror
    ledger["t_F"] = _half_square_sum(s2[x] for x in left) - t_e
    ledger["t_F'"] = _half_square_sum(s2[x] for x in right) - t_e_mirror
    ledger["t_H"] = tp_h - 2 * t_e - 2 * t_e_mirror
    ledger["t_I"] = _exact_div(tp_i - 4 * ledger["t_F"] - 2 * ledger["G"] - ledger["t_H"] - ledger["B'"] - 2 * t_e,
                               2, "t_I")
    ledger["t_I'"] = _exact_div(tp_i_mirror - 4 * ledger["t_F'"] - 2 * ledger["G"] - ledger["t_H"] - ledger["B"]
                                - 2 * t_e_mirror, 2, "t_I'")
    ledger["t_J"] = _exact_div(m1 * ledger["eq3"] - ledger["OII"] - ledger["t_H"] - 2 * ledger["t_I"]
                               - 2 * ledger["t_I'"], 4, "t_J")
    _derive_shapes(ledger, c4)
    return ledger


def _derive_shapes(ledger: ShapeLedger, c4: int) -> None:
    ledger["E"] = ledger["t_E"] - 2 * c4
    ledger["E'"] = ledger["t_E'"] - 2 * c4
    ledger["F"] = ledger["t_F"] + c4
    ledger["F'"] = ledger["t_F'"] + c4
    ledger["H"] = ledger["t_H"] + 4 * c4
    ledger["I"] = ledger["t_I"] - 2 * c4
    ledger["I'"] = ledger["t_I'"] - 2 * c4
    ledger["J"] = ledger["t_J"] + c4
    for s in SHAPE_NAMES:
        _check_nonnegative(ledger[s], f"形状 {s}")


def simple_t_values(g: Multigraph) -> ShapeLedger:
    """
    简单二分图的专用公式，只用度数与组合数，作为 count_t_values 的交叉校验

    此处 3-匹配的修正系数为 (m - 3)，返回的账本只含易算形状与 t 值，不含依赖 C4 的形状
    """
    _check_bipartite(g)
    if not g.is_simple:
        raise QdkGraphError("简单图公式只接受简单图")
    m = g.edge_count
    d = [g.degree(x) for x in range(g.node_count)]
    left, right = g.left_nodes(), g.right_nodes()
    ledger = ShapeLedger()
    ledger["A"] = sum(_comb(d[u], 4) for u in left)
    ledger["A'"] = sum(_comb(d[v], 4) for v in right)
    b = b_mirror = zz = tp_h = tp_i = tp_i_mirror = le_raw = ge_raw = n3_raw = 0
    for u, v, _ in g.edges:
        rest = m - d[u] - d[v] + 1
        b += _comb(d[u] - 1, 2) * (d[v] - 1)
        b_mirror += _comb(d[v] - 1, 2) * (d[u] - 1)
        zz += (d[u] - 1) * (d[v] - 1)
        tp_h += (d[u] - 1) * (d[v] - 1) * rest
        tp_i += (d[u] - 1) * _comb(rest, 2)
        tp_i_mirror += (d[v] - 1) * _comb(rest, 2)
        le_raw += (d[u] - 1) * rest
        ge_raw += (d[v] - 1) * rest
        n3_raw += _comb(rest, 2)
    ledger["B"], ledger["B'"], ledger["zz"], ledger["zoz"] = b, b_mirror, zz, zz
    ledger["C"] = sum(_comb(d[u], 3) * (m - d[u]) for u in left) - b
    ledger["C'"] = sum(_comb(d[v], 3) * (m - d[v]) for v in right) - b_mirror
    ledger["<"] = sum(_comb(d[u], 2) for u in left)
    ledger[">"] = sum(_comb(d[v], 2) for v in right)
    ledger["G"] = ledger["<"] * ledger[">"] - b - b_mirror - zz
    ledger["t_E"] = sum(_half_square_sum(d[u] - 1 for u in g.adj[v]) for v in right)
    ledger["t_E'"] = sum(_half_square_sum(d[v] - 1 for v in g.adj[u]) for u in left)
    ledger["t_F"] = _half_square_sum(_comb(d[u], 2) for u in left) - ledger["t_E"]
    ledger["t_F'"] = _half_square_sum(_comb(d[v], 2) for v in right) - ledger["t_E'"]
    ledger["t_H"] = tp_h - 2 * ledger["t_E"] - 2 * ledger["t_E'"]
    ledger["t_I"] = _exact_div(tp_i - 4 * ledger["t_F"] - 2 * ledger["G"] - ledger["t_H"] - b_mirror
                               - 2 * ledger["t_E"], 2, "t_I")
    ledger["t_I'"] = _exact_div(tp_i_mirror - 4 * ledger["t_F'"] - 2 * ledger["G"] - ledger["t_H"] - b
                                - 2 * ledger["t_E'"], 2, "t_I'")
    ledger["le"] = _exact_div(le_raw - zz, 2, "#≤")
    ledger["ge"] = _exact_div(ge_raw - zz, 2, "#≥")
    ledger["eq3"] = _exact_div(n3_raw - ledger["le"] - ledger["ge"], 3, "#≡")
    ledger["t_J"] = _exact_div((m - 3) * ledger["eq3"] - ledger["t_H"] - 2 * ledger["t_I"] - 2 * ledger["t_I'"],
                               4, "t_J")
    return ledger


def count_t_values_simple(g: Multigraph, c4: int) -> ShapeLedger:
    ledger = simple_t_values(g)
    ledger["C4"] = ledger["D"] = c4
    _derive_shapes(ledger, c4)
    return ledger


def count_4matchings(g: Multigraph, c4: int) -> int:
    """
    二分多重图中大小为 4 的匹配数 #J = t_J + C4

    Args:
        g (Multigraph): 二分多重图

        c4 (int): g 的 4-环个数

    Returns:
        int: 4-匹配个数
    """
    if g.edge_count < 4:
        return 0
    return count_t_values(g, c4)["J"]


def count_2matchings(g: Multigraph, deleted: Iterable[int] = ()) -> int:
    """
    删除 deleted 中的节点后，二分多重图中大小为 2 的匹配数 ½ Σ_e w·[X(e) 1]

    Example::

        from qdkit import Multigraph, count_2matchings

        k22 = Multigraph(4, [(0, 2), (0, 3), (1, 2), (1, 3)], n1=2)
        print(count_2matchings(k22))  # 2
        print(count_2matchings(k22, deleted={0}))  # 0
    """
    _check_bipartite(g)
    deleted = set(deleted)
    s1 = [0] * g.node_count
    m1 = 0
    alive = [e for e in g.edges if e[0] not in deleted and e[1] not in deleted]
    for u, v, w in alive:
        s1[u] += w
        s1[v] += w
        m1 += w
    total = sum(w * (m1 - s1[u] - s1[v] + w) for u, v, w in alive)
    return _exact_div(total, 2, "#=")


def shape_ledger(g: Multigraph, c4: int = None) -> ShapeLedger:
    """计算完整账本，c4 为 None 时用加权余度计数得到"""
    if c4 is None:
        from qdkit.cycles import count_c4_weighted
        c4 = count_c4_weighted(g)
    return count_t_values(g, c4)

#!/usr/bin/env python
#  -*- coding: utf-8 -*-
__author__ = 'mayanqiong'

"""
4-环计数: 简单图、染色简单图与多重图

多重图中的 4-环按各边重数之积加权，即 brute_count_c4 的约定
"""

from collections import Counter, defaultdict
from itertools import combinations, product
from typing import Callable, Dict, List, Optional, Sequence, Tuple

from qdkit.brute import brute_count_c4
from qdkit.exceptions import QdkGraphError, QdkInconsistencyError
from qdkit.graph import Multigraph, _check_simple
from qdkit.lib.poly import interpolate_integer_points
from qdkit.log import _get_logger
from qdkit.utils import _comb, _exact_div

Quadruple = Tuple[int, int, int, int]
#: 35 个 (a, b, c, d)，0 <= a, b, c, d <= 4 且 a + b + c + d = 4
QUADRUPLES: Tuple[Quadruple, ...] = tuple(q for q in product(range(5), repeat=4) if sum(q) == 4)
_EXPONENT = {a + 5 * b + 25 * c + 125 * d: (a, b, c, d) for a, b, c, d in QUADRUPLES}


def _ranked_paths(g: Multigraph):
    """
    按 (度数, 编号) 给节点排序，对每个节点 u 枚举 u-v-w 且 v、w 排名都低于 u 的路径

    Returns:
        generator: (u, w, 第一条边, 第二条边)，边为 (x, y) 且 x < y
    """
    adj = g.adj
    rank = {x: i for i, x in enumerate(sorted(range(g.node_count), key=lambda x: (len(adj[x]), x)))}
    for u in range(g.node_count):
        ru = rank[u]
        for v in adj[u]:
            if rank[v] >= ru:
                continue
            for w in adj[v]:
                if rank[w] < ru:
                    yield u, w, (min(u, v), max(u, v)), (min(v, w), max(v, w))


def count_c4_weighted(g: Multigraph) -> int:
    """
    加权余度法: 对排名最高的节点 u 与其对角节点 w，累加路径权 S1 与平方和 S2，贡献 (S1² - S2) / 2

    每个 4-环只在其排名最高的节点处被计数一次，结果等于多重图的加权 4-环数
    """
    adj = g.adj
    total = 0
    s1: Dict[int, int] = defaultdict(int)
    s2: Dict[int, int] = defaultdict(int)
    current = None
    for u, w, (a, b), (c, d) in _ranked_paths(g):
        if u != current:
            total += sum(s1[x] * s1[x] - s2[x] for x in s1)
            s1.clear()
            s2.clear()
            current = u
        p = adj[a][b] * adj[c][d]
        s1[w] += p
        s2[w] += p * p
    total += sum(s1[x] * s1[x] - s2[x] for x in s1)
    return _exact_div(total, 2, "加权 4-环计数")


def count_c4_codegree(g: Multigraph) -> int:
    """
    简单图的 4-环数: 对排名最高的节点 u 与对角节点 w 累加 C(codeg(u, w), 2)

    Args:
        g (Multigraph): 简单图

    Returns:
        int: 4-环个数

    Example::

        from qdkit import Multigraph, count_c4_codegree

        k33 = Multigraph(6, [(u, v) for u in range(3) for v in range(3, 6)])
        print(count_c4_codegree(k33))  # 9
    """
    _check_simple(g)
    total = 0
    codeg: Counter = Counter()
    current = None
    for u, w, _, _ in _ranked_paths(g):
        if u != current:
            total += sum(_comb(c, 2) for c in codeg.values())
            codeg.clear()
            current = u
        codeg[w] += 1
    return total + sum(_comb(c, 2) for c in codeg.values())


class CounterBackend(object):
    """
    4-环计数的黑盒后端，calls 记录调用次数

    count(g) 接受多重图并返回加权 4-环数；profile_evaluator(g, colors) 返回在 x 处计算 h_K(x) 的函数
    class_profile(g, labels) 按边的类别统计 4-环，默认由染色分布计算拼出
    """

    def __init__(self, name: str, func: Callable[[Multigraph], int]) -> None:
        self.name = name
        self.calls = 0
        self._func = func

    def count(self, g: Multigraph) -> int:
        self.calls += 1
        return self._func(g)

    def profile_evaluator(self, g: Multigraph, colors: Sequence[Optional[int]]) -> Callable[[int], int]:
        """每次求值都构造 G_K(x, x⁵, x²⁵, x¹²⁵) (去掉未染色的边) 并调用一次 count"""
        def evaluate(x: int) -> int:
            edges = [(u, v, x ** (5 ** (k - 1))) for (u, v, _), k in zip(g.edges, colors) if k]
            return self.count(Multigraph(g.node_count, edges))
        return evaluate

    def class_profile(self, g: Multigraph, labels: Sequence[int]) -> Counter:
        """
        边按 labels 分类 (0 表示不参与)，返回 {4 条边的类别升序元组: 4-环个数}

        类别超过 4 个时对每 4 个类别的组合各做一次染色分布计算
        """
        classes = sorted({k for k in labels if k})
        profile: Counter = Counter()
        for group in combinations(classes, min(4, len(classes))):
            color = {k: i + 1 for i, k in enumerate(group)}
            colored = count_colored_profile(g, [color.get(k) for k in labels], self)
            for x, cnt in colored.items():
                if cnt:
                    profile[tuple(k for k, a in zip(group, x) for _ in range(a))] = cnt
        return profile

    def __repr__(self):
        return f"CounterBackend({self.name}, calls={self.calls})"


class CodegreeBackend(CounterBackend):
    """加权余度后端，染色求值时预先按颜色类汇总每对 (u, w) 的路径"""

    def __init__(self) -> None:
        super().__init__("codegree", count_c4_weighted)
        self._paths: Optional[Tuple[Multigraph, list]] = None

    def _indexed_paths(self, g: Multigraph) -> list:
        """_ranked_paths 的结果，边换成 g.edges 中的下标，同一个 g 只枚举一次"""
        if self._paths is None or self._paths[0] is not g:
            index = {(u, v): i for i, (u, v, _) in enumerate(g.edges)}
            self._paths = (g, [(u, w, index[e1], index[e2]) for u, w, e1, e2 in _ranked_paths(g)])
        return self._paths[1]

    def class_profile(self, g: Multigraph, labels: Sequence[int]) -> Counter:
        """一次遍历: 每对 (u, w) 的路径按两条边的类别分组，任意两条不同的路径组成一个 4-环"""
        self.calls += 1
        pairs: Dict[Tuple[int, int], Counter] = defaultdict(Counter)
        for u, w, i1, i2 in self._indexed_paths(g):
            k1, k2 = labels[i1], labels[i2]
            if k1 and k2:
                pairs[(u, w)][(k1, k2) if k1 <= k2 else (k2, k1)] += 1
        profile: Counter = Counter()
        for kinds in pairs.values():
            items = list(kinds.items())
            for i, (t1, c1) in enumerate(items):
                if c1 > 1:
                    profile[tuple(sorted(t1 + t1))] += _comb(c1, 2)
                for t2, c2 in items[i + 1:]:
                    profile[tuple(sorted(t1 + t2))] += c1 * c2
        return profile

    def profile_evaluator(self, g: Multigraph, colors: Sequence[Optional[int]]) -> Callable[[int], int]:
        color_of = {(u, v): k for (u, v, _), k in zip(g.edges, colors)}
        pairs: Dict[Tuple[int, int], Counter] = defaultdict(Counter)
        for u, w, e1, e2 in _ranked_paths(g):
            k1, k2 = color_of[e1], color_of[e2]
            if k1 and k2:
                pairs[(u, w)][5 ** (k1 - 1) + 5 ** (k2 - 1)] += 1
        classes = [tuple(c.items()) for c in pairs.values()]
        top = max((s for c in classes for s, _ in c), default=0)

        def evaluate(x: int) -> int:
            self.calls += 1
            power = [1] * (2 * top + 1)
            for i in range(1, 2 * top + 1):
                power[i] = power[i - 1] * x
            total = 0
            for cls in classes:
                s1 = s2 = 0
                for s, cnt in cls:
                    s1 += cnt * power[s]
                    s2 += cnt * power[2 * s]
                total += s1 * s1 - s2
            return _exact_div(total, 2, "染色 4-环求值")
        return evaluate


def get_backend(name: str = "codegree") -> CounterBackend:
    """
    返回新的后端实例

    Args:
        name (str): "codegree" 或 "brute"
    """
    if name == "codegree":
        return CodegreeBackend()
    if name == "brute":
        return CounterBackend("brute", brute_count_c4)
    raise QdkGraphError(f"未知的 4-环计数后端: {name}")


def expand_small_multiplicity(g: Multigraph, c: int) -> Tuple[Multigraph, List[Tuple[int, int]]]:
    """
    把重数不超过 c 的多重图展开为简单图 G': 每个节点 v 复制为 v^(0..c-1)，
    重数为 k 的边 {u, v} 产生 kc 条边 {u^(i), v^((i+j) mod c)}，i = 0..c-1，j = 0..k-1

    Args:
        g (Multigraph): 多重图

        c (int): 复制份数，不小于最大重数

    Returns:
        (Multigraph, list): G' 以及 G' 中每个节点对应的 (原节点, 副本编号)，u^(i) 的编号为 u·c + i
    """
    if c < 1:
        raise QdkGraphError(f"复制份数 c 必须为正整数: {c}")
    if g.max_mult > c:
        raise QdkGraphError(f"存在重数 {g.max_mult} 超过 c = {c} 的边")
    edges = [(u * c + i, v * c + (i + j) % c) for u, v, k in g.edges for i in range(c) for j in range(k)]
    provenance = [(x, i) for x in range(g.node_count) for i in range(c)]
    return Multigraph(g.node_count * c, edges), provenance


def count_bad_cycles(gp: Multigraph, provenance: Sequence[Tuple[int, int]], c: int) -> int:
    """
    G' 中包含同一原节点两个副本 u^(a)、u^(b) 的 4-环 (坏环) 个数

    对每对副本按原节点 v 统计公共邻居数 comm(u^(a), u^(b), v)，
    坏环数 = ½ Σ C(comm, 2) + Σ_{v<w} comm_v·comm_w
    """
    copies: Dict[int, List[int]] = defaultdict(list)
    for x, (orig, _) in enumerate(provenance):
        copies[orig].append(x)
    adj = gp.adj
    same = cross = 0
    for group in copies.values():
        for p, q in combinations(group, 2):
            comm = Counter(provenance[y][0] for y in adj[p] if y in adj[q])
            same += sum(_comb(k, 2) for k in comm.values())
            s1 = sum(comm.values())
            cross += _exact_div(s1 * s1 - sum(k * k for k in comm.values()), 2, "坏环交叉项")
    return _exact_div(same, 2, "坏环同源项") + cross


def count_c4_small_mult(g: Multigraph, c: int, backend: CounterBackend = None) -> int:
    """
    通过一次对简单图 G' 的黑盒调用计算 (backend(G') - 坏环数) / c

    展开时每个 4-环对应 c 个好环的前提是所有重数为 1，重数大于 1 时结果不等于加权 4-环数，
    多重图请使用 count_c4_multigraph
    """
    backend = backend if backend else get_backend()
    gp, provenance = expand_small_multiplicity(g, c)
    return _exact_div(backend.count(gp) - count_bad_cycles(gp, provenance, c), c, "小重数归约")


def _zero_profile() -> Dict[Quadruple, int]:
    return {q: 0 for q in QUADRUPLES}


def count_colored_profile(g: Multigraph, colors: Sequence[Optional[int]],
                          backend: CounterBackend = None) -> Dict[Quadruple, int]:
    """
    对边染色的简单图计算 f_K(a, b, c, d): 恰好含 a 条 1 色边、b 条 2 色边 ... 的 4-环个数

    在 x = 1..D+1 处求 h_K(x) = g_K(x, x⁵, x²⁵, x¹²⁵)，D = 4·5^(r-1)，r 为出现的最大颜色，
    精确插值后从 x^(a+5b+25c+125d) 的系数读出 f_K(a, b, c, d)

    Args:
        g (Multigraph): 简单图

        colors (list): 与 g.edges 对齐的颜色，取值 1..4 或 None (未染色)

        backend (CounterBackend): 4-环计数后端，默认为余度后端

    Returns:
        dict: (a, b, c, d) -> 个数，包含全部 35 项
    """
    _check_simple(g)
    if len(colors) != g.edge_count:
        raise QdkGraphError(f"颜色个数 {len(colors)} 与边数 {g.edge_count} 不一致")
    if any(k is not None and k not in (1, 2, 3, 4) for k in colors):
        raise QdkGraphError(f"颜色只能取 1..4 或 None: {colors}")
    r = max((k for k in colors if k), default=0)
    if r == 0:
        return _zero_profile()
    backend = backend if backend else get_backend()
    evaluate = backend.profile_evaluator(g, colors)
    if evaluate(1) == 0:
        return _zero_profile()  # h(1) 是所有系数之和，系数非负
    degree = 4 * 5 ** (r - 1)
    coeffs = interpolate_integer_points([evaluate(x) for x in range(1, degree + 2)])
    profile = _zero_profile()
    for e, coef in enumerate(coeffs):
        if coef == 0:
            continue
        if e not in _EXPONENT:
            raise QdkInconsistencyError(f"插值多项式在非法位置 x^{e} 出现系数 {coef}")
        if coef < 0:
            raise QdkInconsistencyError(f"f{_EXPONENT[e]} 为负数: {coef}")
        profile[_EXPONENT[e]] = coef
    return profile


def count_c4_naive_coloring(g: Multigraph, backend: CounterBackend = None) -> int:
    """
    朴素染色法: 对不同的重数值 i > j > k > l 分别把重数为这些值的边染成 1..4 色，
    用 f 值按各颜色类的重数加权累加
    """
    backend = backend if backend else get_backend()
    base = g.simple_base()
    mults = [m for _, _, m in g.edges]
    values = sorted(set(mults), reverse=True)

    def profile(chosen):
        index = {val: idx + 1 for idx, val in enumerate(chosen)}
        return count_colored_profile(base, [index.get(m) for m in mults], backend)

    total = 0
    for a, i in enumerate(values):
        total += i ** 4 * profile([i])[(4, 0, 0, 0)]
        for b in range(a + 1, len(values)):
            j = values[b]
            f = profile([i, j])
            total += i * i * j * j * f[(2, 2, 0, 0)] + i ** 3 * j * f[(3, 1, 0, 0)] + i * j ** 3 * f[(1, 3, 0, 0)]
            for c in range(b + 1, len(values)):
                k = values[c]
                f = profile([i, j, k])
                total += i * j * k * (i * f[(2, 1, 1, 0)] + j * f[(1, 2, 1, 0)] + k * f[(1, 1, 2, 0)])
                for d in range(c + 1, len(values)):
                    l = values[d]
                    total += i * j * k * l * profile([i, j, k, l])[(1, 1, 1, 1)]
    return total


def _bits(m: int) -> Tuple[int, ...]:
    return tuple(1 << i for i in range(m.bit_length()) if m >> i & 1)


def _canonical_classes(masks: Sequence[int]) -> Tuple[Tuple[int, ...], List[int]]:
    """按首次出现的顺序给非零掩码编号 1, 2, ...，零掩码记为 0；同时返回编号对应的掩码"""
    index: Dict[int, int] = {}
    labels = []
    for m in masks:
        if m and m not in index:
            index[m] = len(index) + 1
        labels.append(index.get(m, 0))
    return tuple(labels), [0] + list(index)


def count_c4_multigraph(g: Multigraph, backend: CounterBackend = None, stats: dict = None) -> int:
    """
    任意重数多重图的 4-环数，只对染色简单图调用黑盒

    每条边按二进制拆成若干 2 的幂 B(e)，一个 4-环的权 Π mult(e_i) 等于在每条边上各选一个 p_i ∈ B(e_i) 的 Πp_i 之和。
    按所选幂的集合 Q (至多 4 个) 分组: 边按 B(e) ∩ Q 分类 (空集不参与)，后端给出每种类别组合 (M_1, ..., M_4)
    的 4-环数 f，再乘以 Σ_{p_i ∈ M_i, {p_i} = Q} Πp_i，这个和对 Q 的子集容斥得到。
    边的分类方式相同的 Q 共用一次分类计数

    Args:
        g (Multigraph): 多重图

        backend (CounterBackend): 黑盒后端

        stats (dict): [可选] 写入 "profiles" (分类计数次数) 与 "calls" (黑盒调用次数)

    Returns:
        int: 加权 4-环个数
    """
    backend = backend if backend else get_backend()
    logger = _get_logger("Cycles", method="reduction")
    calls_before = backend.calls
    base = g.simple_base()
    bits = [_bits(m) for _, _, m in g.edges]
    present = sorted({p for b in bits for p in b})
    cache: Dict[Tuple[int, ...], Counter] = {}
    total = 0
    for r in range(1, min(4, len(present)) + 1):
        signs = [-1 if (r - bin(s).count("1")) % 2 else 1 for s in range(1 << r)]
        for q in combinations(present, r):
            pos = {p: j for j, p in enumerate(q)}
            labels, label_mask = _canonical_classes([sum(1 << pos[p] for p in b if p in pos) for b in bits])
            if labels not in cache:
                cache[labels] = backend.class_profile(base, labels)
            sums = [sum(p for j, p in enumerate(q) if s >> j & 1) for s in range(1 << r)]
            for classes, f in cache[labels].items():
                m1, m2, m3, m4 = (label_mask[k] for k in classes)
                total += f * sum(sign * sums[m1 & s] * sums[m2 & s] * sums[m3 & s] * sums[m4 & s]
                                 for s, sign in enumerate(signs))
    if stats is not None:
        stats["profiles"] = len(cache)
        stats["calls"] = backend.calls - calls_before
    logger.debug("multigraph reduction done", powers=len(present), profiles=len(cache),
                 calls=backend.calls - calls_before)
    return total


def count_c4(g: Multigraph, method: str = "auto", backend: CounterBackend = None) -> int:
    """
    计算多重图的加权 4-环数

    Args:
        g (Multigraph): 多重图

        method (str): "auto" / "codegree" 使用加权余度法，"brute" 暴力枚举，"reduction" 强制走染色归约

    Returns:
        int: 4-环个数
    """
    if method in ("auto", "codegree"):
        return count_c4_weighted(g)
    if method == "brute":
        return brute_count_c4(g)
    if method == "reduction":
        return count_c4_multigraph(g, backend)
    raise QdkGraphError(f"未知的 4-环计数方法: {method}")

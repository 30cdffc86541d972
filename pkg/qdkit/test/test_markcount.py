#!/usr/bin/env python
#  -*- coding: utf-8 -*-
__author__ = 'mayanqiong'

import pytest

from qdkit.algorithm.markcount import FenwickTree, MarkCountStructure, sweep_alpha_beta
from qdkit.algorithm.toptree import TopTree
from qdkit.exceptions import QdkGraphError, QdkLabelMismatchError
from qdkit.tree import RootedTree, random_tree, star_tree


def _brute_alpha_beta(t: RootedTree, colors: dict, u: int) -> int:
    """u 周围各子树 (孩子子树与父亲方向) 中 A、B 叶子数之积的和"""
    def counts(labels):
        return sum(1 for lab in labels if colors.get(lab) == "A"), sum(1 for lab in labels if colors.get(lab) == "B")

    def leaves_under(x):
        lo, hi = t.subtree_range(x)
        return {t.labels[t.order[p]] for p in range(lo, hi) if t.is_leaf(t.order[p])}

    total = 0
    below = leaves_under(u)
    for c in t.children[u]:
        a, b = counts(leaves_under(c))
        total += a * b
    if u != t.root:
        a, b = counts(set(t.labels.values()) - below)
        total += a * b
    return total


def test_fenwick():
    f = FenwickTree(10)
    for i, v in enumerate([3, 1, 4, 1, 5, 9, 2, 6, 5, 3]):
        f.add(i, v)
    assert f.prefix(0) == 0
    assert f.prefix(10) == 39
    assert f.range_sum(2, 5) == 10
    assert f.range_sum(5, 5) == 0


def test_mark_count_matches_brute(rd):
    t = random_tree(35, rd, 5)
    r = RootedTree(t)
    mc = MarkCountStructure(r)
    colors = {}
    for step in range(150):
        lab = rd.randint(1, 35)
        color = rd.choice(["A", "B", None])
        mc.mark(lab, color)
        colors[lab] = color
        assert mc.color_of(lab) == color
        if step % 10 == 0:
            for u in range(r.node_count):
                if not r.is_leaf(u) or u == r.root:
                    assert mc.count_alpha_beta(u) == _brute_alpha_beta(r, colors, u)


def test_mark_errors():
    mc = MarkCountStructure(RootedTree(star_tree(5)))
    with pytest.raises(QdkGraphError):
        mc.mark(1, "C")
    with pytest.raises(QdkLabelMismatchError):
        mc.mark(6, "A")
    mc.mark(2, "A")
    mc.mark(2, "A")
    assert mc.marks == 1


def test_sweep_matches_direct_coloring(rd):
    for n, d in ((12, 3), (20, 5), (25, None)):
        t1, t2 = random_tree(n, rd, d), random_tree(n, rd)
        tt1, r2 = TopTree(RootedTree(t1)), RootedTree(t2)
        inner_nodes = [x for x in range(r2.node_count) if not r2.is_leaf(x)]
        queries = {cid: rd.sample(inner_nodes, min(3, len(inner_nodes))) for cid in range(tt1.cluster_count)
                   if rd.random() < 0.5}
        answers, marks = sweep_alpha_beta(tt1, r2, queries)
        assert marks >= 0
        r1 = tt1.tree
        for cid, nodes in queries.items():
            colors = {}
            for color, ranges in (("A", tt1.outside_above(cid)), ("B", tt1.outside_below(cid))):
                for lo, hi in ranges:
                    for p in range(lo, hi):
                        if r1.is_leaf(r1.order[p]):
                            colors[r1.labels[r1.order[p]]] = color
            for u in nodes:
                assert answers[(cid, u)] == _brute_alpha_beta(r2, colors, u)

#!/usr/bin/env python
#  -*- coding: utf-8 -*-
__author__ = 'mayanqiong'

from qdkit.algorithm.rangecount import RangeCounter2D, count_rectangle
from qdkit.tree import RootedTree, random_tree


def test_counts_match_scan(rd):
    size = 37
    xs = rd.sample(range(size), 25)
    points = [(x, rd.randrange(50)) for x in xs]
    rc = RangeCounter2D(points, size)
    assert rc.size == 25
    for _ in range(300):
        x_lo, x_hi = sorted(rd.randrange(-2, size + 3) for _ in range(2))
        y_lo, y_hi = sorted(rd.randrange(-2, 53) for _ in range(2))
        expected = sum(1 for x, y in points if x_lo <= x < x_hi and y_lo <= y < y_hi)
        assert rc.count_halfopen(x_lo, x_hi, y_lo, y_hi) == expected
        closed = sum(1 for x, y in points if x_lo <= x <= x_hi and y_lo <= y <= y_hi)
        assert rc.count(x_lo, x_hi, y_lo, y_hi) == closed
        assert count_rectangle(rc, x_lo, x_hi, y_lo, y_hi) == closed


def test_empty_ranges():
    rc = RangeCounter2D([(0, 0), (1, 1)], 2)
    assert rc.count_halfopen(1, 1, 0, 5) == 0
    assert rc.count(1, 0, 0, 5) == 0
    assert rc.count_ranges([], [(0, 2)]) == 0
    assert RangeCounter2D([], 0).count_halfopen(0, 5, 0, 5) == 0


def test_from_trees_counts_common_leaves(rd):
    t1, t2 = random_tree(30, rd, 4), random_tree(30, rd)
    r1, r2 = RootedTree(t1), RootedTree(t2)
    rc = RangeCounter2D.from_trees(r1, r2)
    assert rc.size == 30
    for _ in range(50):
        u, v = rd.randrange(r1.node_count), rd.randrange(r2.node_count)
        (a, b), (c, d) = r1.subtree_range(u), r2.subtree_range(v)
        leaves1 = {r1.labels[r1.order[p]] for p in range(a, b) if r1.is_leaf(r1.order[p])}
        leaves2 = {r2.labels[r2.order[p]] for p in range(c, d) if r2.is_leaf(r2.order[p])}
        assert rc.count_ranges([(a, b)], [(c, d)]) == len(leaves1 & leaves2)
        assert rc.count_ranges([(0, a), (b, r1.node_count)], [(c, d)]) == len(leaves2 - leaves1)

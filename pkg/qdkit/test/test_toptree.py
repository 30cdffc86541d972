#!/usr/bin/env python
#  -*- coding: utf-8 -*-
__author__ = 'mayanqiong'

import math

import pytest

from qdkit.algorithm.toptree import BASE, VERTICAL_KINDS, TopTree, build_top_tree, relevant_pairs, \
    representative_cluster
from qdkit.exceptions import QdkInconsistencyError, QdkLabelMismatchError
from qdkit.tree import RootedTree, balanced_tree, caterpillar_tree, parse_newick, random_tree, star_tree


def _trees(rd):
    yield caterpillar_tree(12)
    yield star_tree(9)
    yield balanced_tree(20, 3)
    for n, d in ((4, None), (15, 3), (25, 5), (30, None)):
        yield random_tree(n, rd, d)


def _leaf_set(tt, cid):
    return {lab for lab, chain in tt.chains.items() if cid in chain}


def _ranged_leaves(tt, ranges):
    t = tt.tree
    return {t.labels[t.order[p]] for lo, hi in ranges for p in range(lo, hi) if t.is_leaf(t.order[p])}


def test_clusters_partition_leaves(rd):
    for t in _trees(rd):
        tt = TopTree(RootedTree(t))
        assert _leaf_set(tt, tt.root_cluster) == set(range(1, t.n + 1))
        for cid in range(tt.cluster_count):
            inside = _leaf_set(tt, cid)
            above, below = tt.outside_above(cid), tt.outside_below(cid)
            assert _ranged_leaves(tt, tt.leaf_ranges(cid)) == inside
            assert tt.leaf_count(cid) == len(inside)
            outside = _ranged_leaves(tt, above) | _ranged_leaves(tt, below)
            assert not outside & inside
            assert outside | inside == set(range(1, t.n + 1))
            if tt.is_composite(cid):
                first, second = tt.children[cid]
                assert inside == _leaf_set(tt, first) | _leaf_set(tt, second)
                assert tt.height[cid] == 1 + max(tt.height[first], tt.height[second])
                for lab in inside:
                    assert tt.child_containing(cid, lab) in (first, second)
            else:
                assert tt.kind[cid] == BASE


def test_boundaries(rd):
    for t in _trees(rd):
        r = RootedTree(t)
        tt = TopTree(r)
        for cid in range(tt.cluster_count):
            top, bottom = tt.boundaries(cid)
            assert not r.is_leaf(top) or top == r.root
            if bottom is not None:
                assert r.is_ancestor(top, bottom) and top != bottom
                assert not r.is_leaf(bottom)
                assert tt.spine(cid) == (top, bottom)
                assert tt.outside(cid, bottom) == tt.outside_below(cid)
            else:
                assert tt.spine(cid) is None
            assert tt.outside(cid, top) == tt.outside_above(cid)
        assert tt.top[tt.root_cluster] == r.root
        assert tt.bottom[tt.root_cluster] is None


def test_every_internal_node_has_a_representative(rd):
    for t in _trees(rd):
        r = RootedTree(t)
        tt = TopTree(r)
        for x in range(r.node_count):
            if r.is_leaf(x):
                with pytest.raises(QdkInconsistencyError):
                    representative_cluster(tt, x)
                continue
            cid = representative_cluster(tt, x)
            assert tt.kind[cid] in VERTICAL_KINDS
            assert tt.middle[cid] == x
            assert tt.bottom[cid] is None or r.is_ancestor(x, tt.bottom[cid])


def test_single_edge():
    tt = build_top_tree(RootedTree(parse_newick("(1,2);")))
    assert tt.cluster_count == 1
    assert tt.kind[tt.root_cluster] == BASE
    assert tt.tree_height == 0 and tt.membership == 1


def test_height_and_membership_are_logarithmic(rd):
    for t in (caterpillar_tree(512), random_tree(600, rd), random_tree(600, rd, 3), star_tree(300)):
        tt = TopTree(RootedTree(t))
        bound = 4 * math.log2(t.node_count)
        assert tt.tree_height <= bound
        assert tt.membership <= bound + 1


def test_relevant_pairs(rd):
    t1, t2 = random_tree(14, rd, 4), random_tree(14, rd)
    tt1, tt2 = TopTree(RootedTree(t1)), TopTree(RootedTree(t2))
    pairs = relevant_pairs(tt1, tt2)
    for c1 in range(tt1.cluster_count):
        for c2 in range(tt2.cluster_count):
            common = sorted(_leaf_set(tt1, c1) & _leaf_set(tt2, c2))
            assert pairs.get((c1, c2), []) == common
    filtered = relevant_pairs(tt1, tt2, tt1.is_composite, tt2.is_composite)
    assert all(tt1.is_composite(a) and tt2.is_composite(b) for a, b in filtered)
    with pytest.raises(QdkLabelMismatchError):
        relevant_pairs(tt1, TopTree(RootedTree(random_tree(10, rd))))


def _cluster_nodes(tt, cid, child_of):
    """簇中各条边的下端点，去掉下边界"""
    nodes, stack = set(), [cid]
    while stack:
        c = stack.pop()
        if tt.is_composite(c):
            stack.extend(tt.children[c])
        else:
            nodes.add(child_of[c])
    nodes.discard(tt.bottom[cid])
    return nodes


def test_cluster_is_span_minus_bottom_subtree(rd):
    for n, d in ((3, None), (12, None), (60, 3), (100, None), (100, 4), (100, 3)):
        r = RootedTree(random_tree(n, rd, d))
        assert r.node_count <= 200
        tt = TopTree(r)
        child_of = {cid: c for c, cid in tt.base_of.items()}
        for cid in range(tt.cluster_count):
            lo, hi = tt.span(cid)
            expected = {r.order[p] for p in range(lo, hi)}
            if tt.bottom[cid] is not None:
                blo, bhi = r.subtree_range(tt.bottom[cid])
                expected -= {r.order[p] for p in range(blo, bhi)}
            assert _cluster_nodes(tt, cid, child_of) == expected, cid

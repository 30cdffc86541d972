#!/usr/bin/env python
#  -*- coding: utf-8 -*-
__author__ = 'mayanqiong'

from qdkit.rangeset import _range_intersection, _rangeset_complement, _rangeset_contains, _rangeset_difference, \
    _rangeset_intersection, _rangeset_length, _rangeset_normalize, _rangeset_union


def test_normalize():
    assert _rangeset_normalize([(5, 7), (0, 2), (2, 3), (6, 9), (4, 4)]) == [(0, 3), (5, 9)]


def test_intersection():
    assert _range_intersection((0, 5), (3, 8)) == [(3, 5)]
    assert _range_intersection((0, 3), (3, 8)) == []
    assert _rangeset_intersection([(0, 4), (6, 10)], [(2, 7), (9, 12)]) == [(2, 4), (6, 7), (9, 10)]


def test_complement_and_difference():
    assert _rangeset_complement([(2, 4), (6, 7)], 0, 10) == [(0, 2), (4, 6), (7, 10)]
    assert _rangeset_complement([], 0, 3) == [(0, 3)]
    assert _rangeset_complement([(0, 10)], 0, 10) == []
    assert _rangeset_difference([(0, 10)], [(3, 5), (7, 8)]) == [(0, 3), (5, 7), (8, 10)]
    assert _rangeset_difference([(1, 3)], [(0, 5)]) == []


def test_union_length_contains():
    u = _rangeset_union([(0, 2), (8, 9)], [(1, 4)])
    assert u == [(0, 4), (8, 9)]
    assert _rangeset_length(u) == 5
    assert _rangeset_contains(u, 3)
    assert not _rangeset_contains(u, 4)
    assert not _rangeset_contains([], 0)

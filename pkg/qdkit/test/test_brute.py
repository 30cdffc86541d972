#!/usr/bin/env python
#  -*- coding: utf-8 -*-
__author__ = 'mayanqiong'

import pytest

from qdkit.brute import SHAPES, brute_count_2matchings, brute_count_4matchings, brute_count_c4, brute_count_shape, \
    brute_shape_counts
from qdkit.exceptions import QdkGraphError
from qdkit.graph import Multigraph, multichoose, random_bipartite_multigraph


def test_brute_c4_fixtures(k4, k33, weighted_square):
    assert brute_count_c4(k4) == 3
    assert brute_count_c4(k33) == 9
    assert brute_count_c4(weighted_square) == 64


def test_brute_c4_acyclic():
    path = Multigraph(5, [(0, 1, 3), (1, 2), (2, 3, 2), (3, 4)])
    assert brute_count_c4(path) == 0
    assert brute_count_c4(Multigraph(0)) == 0


def test_shape_counts_cover_all_4_subsets(rd):
    for _ in range(10):
        g = random_bipartite_multigraph(rd.randint(1, 4), rd.randint(1, 4), 0.7, 3, rd)
        counts = brute_shape_counts(g)
        assert set(counts) == set(SHAPES)
        assert sum(counts.values()) == multichoose([m for _, _, m in g.edges], 4)


def test_shape_of_single_cycle():
    c4 = Multigraph(4, [(0, 2, 2), (0, 3), (1, 2), (1, 3, 5)], n1=2)
    counts = brute_shape_counts(c4)
    assert counts["D"] == 10
    assert brute_count_c4(c4) == 10


def test_matchings():
    k22 = Multigraph(4, [(0, 2), (0, 3), (1, 2), (1, 3)], n1=2)
    assert brute_count_2matchings(k22) == 2
    assert brute_count_4matchings(k22) == 0
    perfect = Multigraph(8, [(i, 4 + i, i + 1) for i in range(4)], n1=4)
    assert brute_count_4matchings(perfect) == 24


def test_brute_requires_bipartite(k4):
    with pytest.raises(QdkGraphError):
        brute_shape_counts(k4)
    with pytest.raises(ValueError):
        brute_count_shape(Multigraph(2, [(0, 1)], n1=1), "Z")

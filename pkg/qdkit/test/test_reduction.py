#!/usr/bin/env python
#  -*- coding: utf-8 -*-
__author__ = 'mayanqiong'

import pytest

from qdkit.brute import brute_count_c4
from qdkit.exceptions import QdkGraphError, QdkTooFewEdgesError
from qdkit.graph import Multigraph, random_bipartite_multigraph, random_multigraph
from qdkit.reduction import bipartize, c4_from_qd, extract_c4, graph_to_nested, graph_to_trees
from qdkit.tree import brute_quartet_distance


def test_bipartize_doubles_cycles(k4, weighted_square):
    gb = bipartize(k4)
    assert gb.n1 == 4
    assert gb.edge_count == 12
    assert brute_count_c4(gb) == 6
    assert brute_count_c4(bipartize(weighted_square)) == 128


def test_graph_to_nested(k33):
    nested1, nested2, leaf_map = graph_to_nested(k33)
    assert nested1 == [[1, 2, 3], [4, 5, 6], [7, 8, 9]]
    assert nested2 == [[1, 4, 7], [2, 5, 8], [3, 6, 9]]
    assert leaf_map[5] == (1, 4)


def test_graph_to_trees_preconditions(k4):
    with pytest.raises(QdkGraphError):
        graph_to_trees(k4)
    with pytest.raises(QdkGraphError):
        graph_to_trees(Multigraph(4, [(0, 2, 2), (0, 3), (1, 2), (1, 3)], n1=2))
    with pytest.raises(QdkTooFewEdgesError) as e:
        graph_to_trees(Multigraph(4, [(0, 2), (1, 3)], n1=2))
    assert e.value.exit_code == 4


def test_c4_from_brute_distance(k33, rd):
    t1, t2, _ = graph_to_trees(k33)
    assert t1.n == 9
    assert c4_from_qd(k33, brute_quartet_distance(t1, t2)) == 9
    for _ in range(20):
        g = random_bipartite_multigraph(rd.randint(2, 5), rd.randint(2, 5), 0.6, 1, rd)
        if g.edge_count < 4:
            continue
        t1, t2, _ = graph_to_trees(g)
        assert c4_from_qd(g, brute_quartet_distance(t1, t2)) == brute_count_c4(g)


@pytest.mark.parametrize("method", ["fast", "brute"])
def test_extract_c4_fixtures(method, k4):
    assert extract_c4(k4, method) == 3
    forest = Multigraph(6, [(0, 1), (1, 2), (3, 4), (4, 5)])
    assert extract_c4(forest, method) == 0


def test_extract_c4_k33():
    k33 = Multigraph(6, [(u, v) for u in range(3) for v in range(3, 6)])
    assert extract_c4(k33) == 9


def test_extract_c4_random(rd):
    for _ in range(15):
        g = random_multigraph(rd.randint(3, 7), rd.uniform(0.3, 0.9), 1, rd)
        if g.edge_count < 2:
            continue
        assert extract_c4(g) == brute_count_c4(g)


def test_extract_c4_rejects_multigraph(weighted_square):
    with pytest.raises(QdkGraphError):
        extract_c4(weighted_square)

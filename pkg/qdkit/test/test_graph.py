#!/usr/bin/env python
#  -*- coding: utf-8 -*-
__author__ = 'mayanqiong'

from functools import reduce
from itertools import combinations
from operator import mul

import pytest

from qdkit.exceptions import QdkGraphError, QdkInconsistencyError, QdkParseError
from qdkit.graph import Multigraph, multichoose, multichoose_difference, multichoose_table, parse_edge_list, \
    random_bipartite_multigraph, serialize_edge_list


def test_parse_edge_list():
    g = parse_edge_list("# square\nnodes 4\n1 2\n2 3\n\n3 4\n4 1 2\n")
    assert g.node_count == 4
    assert g.edges == ((0, 1, 1), (1, 2, 1), (2, 3, 1), (0, 3, 2))
    assert not g.is_simple
    assert not g.is_bipartite


def test_parse_merges_repeated_pairs():
    g = parse_edge_list("nodes 3\n1 2\n2 1 3\n")
    assert g.edges == ((0, 1, 4),)
    assert g.mult(1, 0) == 4


def test_parse_bipartite_header():
    g = parse_edge_list("nodes 4 bipartite 2\n1 3\n2 4 5\n")
    assert g.n1 == 2
    assert list(g.left_nodes()) == [0, 1]
    with pytest.raises(QdkParseError):
        parse_edge_list("nodes 4 bipartite 2\n1 2\n")


@pytest.mark.parametrize("text, line", [
    ("1 2\n", 1),
    ("nodes 3\n1 2 x\n", 2),
    ("nodes 3\n1 1\n", 2),
    ("nodes 3\n1 4\n", 2),
    ("nodes 3\n\n1 2 0\n", 3),
])
def test_parse_errors_carry_line(text, line):
    with pytest.raises(QdkParseError) as e:
        parse_edge_list(text)
    assert f"第 {line} 行" in e.value.message
    assert e.value.exit_code == 2


def test_parse_empty_text():
    with pytest.raises(QdkParseError):
        parse_edge_list("")


def test_serialize_is_parseable(rd):
    g = random_bipartite_multigraph(4, 5, 0.5, 3, rd)
    h = parse_edge_list(serialize_edge_list(g))
    assert h.edges == g.edges
    assert h.n1 == g.n1


def test_multigraph_rejects_bad_edges():
    with pytest.raises(QdkGraphError):
        Multigraph(3, [(0, 0)])
    with pytest.raises(QdkGraphError):
        Multigraph(3, [(0, 3)])
    with pytest.raises(QdkGraphError):
        Multigraph(3, [(0, 1, 0)])


def test_mirror_and_without_nodes(k33):
    g = Multigraph(5, [(0, 2, 3), (1, 4)], n1=2)
    m = g.mirror()
    assert m.n1 == 3
    assert sorted(m.edges) == [(0, 3, 3), (2, 4, 1)]
    assert k33.without_nodes([0]).edge_count == 6
    assert k33.simple_base().total_mult == 9


def test_multichoose():
    assert multichoose([2, 3], 2) == 6
    assert multichoose([2, 3], 3) == 0
    assert multichoose([], 0) == 1
    assert multichoose_table([1, 1, 1, 1], 4) == [1, 4, 6, 4, 1]
    assert multichoose_table([1, 2, 3], 3) == [1, 6, 11, 6]


def test_multichoose_difference():
    a = multichoose_table([1, 2, 3, 4], 4)
    b = multichoose_table([2, 4], 4)
    assert multichoose_difference(a, b, 4) == multichoose_table([1, 3], 4)


def _explicit_multichoose(values, k):
    return sum(reduce(mul, chosen, 1) for chosen in combinations(values, k))


def test_multichoose_against_subsets(rd):
    for _ in range(30):
        values = [rd.randint(1, 9) for _ in range(rd.randint(0, 8))]
        table = multichoose_table(values, 4)
        for k in range(5):
            assert multichoose(values, k) == table[k] == _explicit_multichoose(values, k)


def test_multichoose_difference_random_subsets(rd):
    for _ in range(30):
        a = [rd.randint(1, 9) for _ in range(rd.randint(0, 9))]
        picked = set(rd.sample(range(len(a)), rd.randint(0, len(a))))
        b = [x for i, x in enumerate(a) if i in picked]
        rest = [x for i, x in enumerate(a) if i not in picked]
        got = multichoose_difference(multichoose_table(a, 4), multichoose_table(b, 4), 4)
        assert got == [_explicit_multichoose(rest, j) for j in range(5)]


def test_multichoose_difference_not_subset():
    with pytest.raises(QdkInconsistencyError):
        multichoose_difference([1, 1, 0], [1, 2, 1], 2)

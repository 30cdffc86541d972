#!/usr/bin/env python
#  -*- coding: utf-8 -*-
__author__ = 'mayanqiong'

import pytest

from qdkit.brute import brute_count_2matchings, brute_count_4matchings, brute_count_c4, brute_shape_counts
from qdkit.exceptions import QdkGraphError
from qdkit.graph import Multigraph, random_bipartite_multigraph
from qdkit.shapes import SHAPE_NAMES, count_2matchings, count_4matchings, count_easy_shapes, count_t_values, \
    count_t_values_simple, shape_ledger, simple_t_values


def _random_graphs(rd, count, max_mult):
    for _ in range(count):
        yield random_bipartite_multigraph(rd.randint(1, 6), rd.randint(1, 6), rd.uniform(0.2, 0.9), max_mult, rd)


def test_easy_shapes_star():
    star = Multigraph(5, [(0, 1), (0, 2), (0, 3), (0, 4)], n1=1)
    ledger = count_easy_shapes(star)
    assert ledger["A"] == 1
    assert ledger["A'"] == 0
    assert ledger["G"] == 0


def test_ledger_matches_brute(rd):
    for g in _random_graphs(rd, 60, 5):
        ledger = count_t_values(g, brute_count_c4(g))
        expected = brute_shape_counts(g)
        assert ledger.shapes() == expected, g
        assert ledger.shape_total() == sum(expected.values())


def test_simple_formulas_agree(rd):
    for g in _random_graphs(rd, 40, 1):
        c4 = brute_count_c4(g)
        full, simple = count_t_values(g, c4), count_t_values_simple(g, c4)
        for key in ("t_E", "t_E'", "t_F", "t_F'", "t_H", "t_I", "t_I'", "t_J", "eq3"):
            assert simple[key] == full[key], key
        assert simple.shapes() == full.shapes()


def test_simple_formulas_reject_multigraph():
    with pytest.raises(QdkGraphError):
        simple_t_values(Multigraph(2, [(0, 1, 2)], n1=1))


def test_matchings_match_brute(rd):
    for g in _random_graphs(rd, 60, 4):
        assert count_4matchings(g, brute_count_c4(g)) == brute_count_4matchings(g)
        assert count_2matchings(g) == brute_count_2matchings(g)
        deleted = {x for x in range(g.node_count) if rd.random() < 0.3}
        assert count_2matchings(g, deleted) == brute_count_2matchings(g.without_nodes(deleted))


def test_4matchings_of_k44():
    k44 = Multigraph(8, [(u, v) for u in range(4) for v in range(4, 8)], n1=4)
    assert count_4matchings(k44, brute_count_c4(k44)) == 24


def test_shape_ledger_default_c4():
    g = Multigraph(4, [(0, 2, 1), (2, 1, 2), (1, 3, 4), (3, 0, 8)], n1=2)
    ledger = shape_ledger(g)
    assert ledger.C4 == 64
    assert ledger["D"] == 64
    assert set(SHAPE_NAMES) <= set(ledger)
    with pytest.raises(AttributeError):
        ledger.nothing


def _mirror_name(shape):
    if shape.endswith("'"):
        return shape[:-1]
    return shape + "'" if shape + "'" in SHAPE_NAMES else shape


def test_mirror_swaps_primed_shapes(rd):
    for g in _random_graphs(rd, 30, 4):
        swapped = g.mirror()
        assert swapped.n1 == g.node_count - g.n1
        ledger, image = shape_ledger(g).shapes(), shape_ledger(swapped).shapes()
        for shape in SHAPE_NAMES:
            assert image[shape] == ledger[_mirror_name(shape)], shape
        assert brute_shape_counts(swapped) == image

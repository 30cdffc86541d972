#!/usr/bin/env python
#  -*- coding: utf-8 -*-
__author__ = 'mayanqiong'
name = "qdkit"

from qdkit.exceptions import QdkError, QdkParseError, QdkLabelMismatchError, QdkTooFewEdgesError, QdkGraphError, \
    QdkInconsistencyError
from qdkit.graph import Multigraph, parse_edge_list, read_edge_list, serialize_edge_list, multichoose, \
    multichoose_table, multichoose_difference, random_multigraph, random_bipartite_multigraph
from qdkit.brute import brute_count_c4, brute_shape_counts, brute_count_shape, brute_count_4matchings, \
    brute_count_2matchings
from qdkit.shapes import ShapeLedger, count_easy_shapes, count_t_values, count_4matchings, count_2matchings, \
    shape_ledger
from qdkit.cycles import count_c4, count_c4_codegree, count_c4_weighted, count_c4_small_mult, \
    count_c4_naive_coloring, count_c4_multigraph, count_colored_profile, expand_small_multiplicity, \
    count_bad_cycles, get_backend
from qdkit.tree import UnrootedTree, RootedTree, QuartetTopology, parse_newick, read_newick, serialize_newick, \
    quartet_topology, brute_quartet_distance, compare_quartets, random_tree, star_tree, caterpillar_tree, \
    tree_from_nested
from qdkit.reduction import bipartize, graph_to_trees, c4_from_qd, extract_c4
from qdkit.algorithm import TopTree, build_top_tree, RangeCounter2D, MarkCountStructure
from qdkit.qdist import quartet_distance, count_shared_butterflies, count_stars_at, \
    count_shared_stars_by_centres, classify_shared_stars
from .__version__ import __version__

#!/usr/bin/env python
#  -*- coding: utf-8 -*-
__author__ = 'mayanqiong'

from qdkit.algorithm.toptree import TopTree, build_top_tree, relevant_pairs, representative_cluster
from qdkit.algorithm.rangecount import RangeCounter2D, count_rectangle
from qdkit.algorithm.markcount import FenwickTree, MarkCountStructure, sweep_alpha_beta

#!/usr/bin/env python
#  -*- coding: utf-8 -*-
__author__ = 'mayanqiong'

import random

import pytest

from qdkit.graph import Multigraph


@pytest.fixture
def rd():
    return random.Random(20240501)


@pytest.fixture
def k4():
    return Multigraph(4, [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)])


@pytest.fixture
def k33():
    return Multigraph(6, [(u, v) for u in range(3) for v in range(3, 6)], n1=3)


@pytest.fixture
def weighted_square():
    """重数为 1, 2, 4, 8 的 4-环"""
    return Multigraph(4, [(0, 1, 1), (1, 2, 2), (2, 3, 4), (3, 0, 8)])

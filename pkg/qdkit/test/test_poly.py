#!/usr/bin/env python
#  -*- coding: utf-8 -*-
__author__ = 'mayanqiong'

import pytest

from qdkit.exceptions import QdkInconsistencyError
from qdkit.lib.poly import eval_poly_at, forward_differences, interpolate_integer_points, normalize


def test_interpolate_recovers_coefficients():
    p = [3, 0, 2, 7]
    values = [eval_poly_at(p, x) for x in range(1, 5)]
    assert interpolate_integer_points(values) == p


def test_interpolate_big_coefficients():
    p = [10 ** 30, 0, 0, 0, 0, 1, 0, 5 ** 20]
    values = [eval_poly_at(p, x) for x in range(1, 12)]
    coeffs = interpolate_integer_points(values)
    assert len(coeffs) == 11
    assert normalize(coeffs) == p


def test_interpolate_sparse_exponents():
    p = [0] * 26
    p[1] = 4
    p[5] = 1
    p[25] = 2
    values = [eval_poly_at(p, x) for x in range(1, 27)]
    assert interpolate_integer_points(values) == p


def test_interpolate_rejects_non_integer():
    with pytest.raises(QdkInconsistencyError):
        interpolate_integer_points([0, 1, 3])


def test_forward_differences():
    assert forward_differences([1, 4, 9, 16]) == [1, 3, 2, 0]
    assert interpolate_integer_points([]) == []

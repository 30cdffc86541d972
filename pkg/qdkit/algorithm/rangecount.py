#!/usr/bin/env python
#  -*- coding: utf-8 -*-
__author__ = 'mayanqiong'

from bisect import bisect_left
from typing import List, Sequence, Tuple

import numpy as np

from qdkit.rangeset import RangeSet
from qdkit.tree import RootedTree


class RangeCounter2D(object):
    """
    静态二维正交区域计数 (归并排序树)

    第 k 层把按 x 排列的 y 值分成长度为 2^k 的块，每块内部有序；查询时把 x 区间拆成 O(log n) 个整块，
    每块内二分查找 y 区间，单次查询 O(log² n)

    Args:
        points (list): (x, y) 整数点，x 取值在 [0, x_size) 内且互不相同

        x_size (int): x 的取值范围
    """

    def __init__(self, points: Sequence[Tuple[int, int]], x_size: int) -> None:
        self.size = len(points)
        width = 1
        while width < max(1, x_size):
            width <<= 1
        sentinel = np.iinfo(np.int64).max
        ys = np.full(width, sentinel, dtype=np.int64)
        for x, y in points:
            ys[x] = y
        self._levels: List[List[int]] = []
        block = 1
        while block <= width:
            self._levels.append(np.sort(ys.reshape(-1, block), axis=1).ravel().tolist())
            block <<= 1

    @classmethod
    def from_trees(cls, t1: RootedTree, t2: RootedTree) -> 'RangeCounter2D':
        """每个叶子标签对应一个点 (T1 中的先序编号, T2 中的先序编号)"""
        pos2 = t2.leaf_positions()
        return cls([(x, pos2[lab]) for lab, x in t1.leaf_positions().items()], t1.node_count)

    def count_halfopen(self, x_lo: int, x_hi: int, y_lo: int, y_hi: int) -> int:
        """[x_lo, x_hi) × [y_lo, y_hi) 中的点数"""
        if x_lo >= x_hi or y_lo >= y_hi:
            return 0
        x_lo = max(x_lo, 0)
        x_hi = min(x_hi, len(self._levels[0]))
        total, k = 0, 0
        while x_lo < x_hi:
            if x_lo & 1:
                total += self._block(k, x_lo, y_lo, y_hi)
                x_lo += 1
            if x_hi & 1:
                x_hi -= 1
                total += self._block(k, x_hi, y_lo, y_hi)
            x_lo >>= 1
            x_hi >>= 1
            k += 1
        return total

    def _block(self, k: int, index: int, y_lo: int, y_hi: int) -> int:
        level = self._levels[k]
        start, end = index << k, (index + 1) << k
        return bisect_left(level, y_hi, start, end) - bisect_left(level, y_lo, start, end)

    def count(self, x_lo: int, x_hi: int, y_lo: int, y_hi: int) -> int:
        """闭区间 [x_lo, x_hi] × [y_lo, y_hi] 中的点数，区间为空时为 0"""
        return self.count_halfopen(x_lo, x_hi + 1, y_lo, y_hi + 1)

    def count_ranges(self, xs: RangeSet, ys: RangeSet) -> int:
        """两个 RangeSet 的笛卡尔积中的点数"""
        return sum(self.count_halfopen(a, b, c, d) for a, b in xs for c, d in ys)


def count_rectangle(rc: RangeCounter2D, x_lo: int, x_hi: int, y_lo: int, y_hi: int) -> int:
    return rc.count(x_lo, x_hi, y_lo, y_hi)

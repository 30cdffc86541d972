#!/usr/bin/env python
#  -*- coding: utf-8 -*-
__author__ = 'yanqiong'

from typing import List, Sequence, Tuple

"""
Range 表示先序编号上的一段连续位置 [start, end) (左闭右开区间)，例如子树 v 对应 (pre[v], pre[v] + size[v])
RangeSet 是一组有序、互不重叠且不相邻的 Range，用来表示簇的叶子集合、子树补集等

所有函数都返回新的列表，不修改参数
"""
Range = Tuple[int, int]
RangeSet = List[Range]


def _range_intersection(range1: Range, range2: Range) -> RangeSet:
    # 两个 range 的交集
    s, e = max(range1[0], range2[0]), min(range1[1], range2[1])
    return [(s, e)] if s < e else []


def _rangeset_normalize(ranges: Sequence[Range]) -> RangeSet:
    """去掉空段，排序并合并重叠或相邻的段"""
    r = []
    for s, e in sorted(x for x in ranges if x[0] < x[1]):
        if r and s <= r[-1][1]:
            r[-1] = (r[-1][0], max(r[-1][1], e))
        else:
            r.append((s, e))
    return r


def _rangeset_length(rangeset: RangeSet) -> int:
    """返回 rangeset 包含的位置个数"""
    return sum(e - s for s, e in rangeset)


def _rangeset_contains(rangeset: RangeSet, x: int) -> bool:
    return any(s <= x < e for s, e in rangeset)


def _rangeset_intersection(rangeset_a: RangeSet, rangeset_b: RangeSet) -> RangeSet:
    """
    求既在 rangeset_a 中又在 rangeset_b 中的位置组成的 rangeset，双指针归并
    """
    r = []
    index_a, index_b = 0, 0
    while index_a < len(rangeset_a) and index_b < len(rangeset_b):
        r_a, r_b = rangeset_a[index_a], rangeset_b[index_b]
        r += _range_intersection(r_a, r_b)
        if r_a[1] <= r_b[1]:
            index_a += 1
        else:
            index_b += 1
    return r


def _rangeset_complement(rangeset: RangeSet, start: int, end: int) -> RangeSet:
    """[start, end) 中不在 rangeset 里的位置"""
    r = []
    cursor = start
    for s, e in rangeset:
        if e <= cursor:
            continue
        if s >= end:
            break
        if s > cursor:
            r.append((cursor, s))
        cursor = max(cursor, e)
    if cursor < end:
        r.append((cursor, end))
    return r


def _rangeset_difference(rangeset_a: RangeSet, rangeset_b: RangeSet) -> RangeSet:
    """
    求在 rangeset_a 中但不在 rangeset_b 中的位置组成的 rangeset
    rangeset_a - rangeset_b
    """
    if not rangeset_a or not rangeset_b:
        return list(rangeset_a)
    return _rangeset_intersection(rangeset_a, _rangeset_complement(rangeset_b, rangeset_a[0][0], rangeset_a[-1][1]))


def _rangeset_union(rangeset_a: RangeSet, rangeset_b: RangeSet) -> RangeSet:
    """rangeset_a + rangeset_b"""
    return _rangeset_normalize(list(rangeset_a) + list(rangeset_b))

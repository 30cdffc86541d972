#!/usr/bin/env python
#  -*- coding: utf-8 -*-
__author__ = 'mayanqiong'

"""
整数系数多项式的精确插值

多项式用系数列表表示，低次项在前，例如 [1, 10, 5] 表示 1 + 10x + 5x²
"""

from math import factorial
from typing import List, Sequence

from qdkit.exceptions import QdkInconsistencyError


def normalize(p: List[int]) -> List[int]:
    """去掉末尾的 0 系数"""
    n = len(p)
    while n and not p[n - 1]:
        n -= 1
    return p[:n]


def eval_poly_at(p: Sequence[int], x: int) -> int:
    y = 0
    for c in reversed(p):
        y = y * x + c
    return y


def forward_differences(values: Sequence[int]) -> List[int]:
    """返回 [Δ⁰y₁, Δ¹y₁, ..., Δᵈy₁]，values 为 y(1), y(2), ..., y(d + 1)"""
    diffs = list(values)
    heads = []
    while diffs:
        heads.append(diffs[0])
        diffs = [b - a for a, b in zip(diffs, diffs[1:])]
    return heads


def interpolate_integer_points(values: Sequence[int]) -> List[int]:
    """
    由 x = 1, 2, ..., d + 1 处的取值精确恢复次数不超过 d 的整数系数多项式

    使用牛顿前向差分: p(x) = Σ_k (Δᵏy₁ / k!)·(x-1)(x-2)...(x-k)，再用 Horner 展开成单项式系数

    Args:
        values (list): y(1), ..., y(d + 1)，均为整数

    Returns:
        list: 长度为 d + 1 的系数列表，低次项在前

    Raises:
        QdkInconsistencyError: 差分不能被 k! 整除或结果系数不是整数
    """
    heads = forward_differences(values)
    newton = []
    for k, h in enumerate(heads):
        q, r = divmod(h, factorial(k))
        if r:
            raise QdkInconsistencyError(f"插值失败: {k} 阶差分不能被 {k}! 整除")
        newton.append(q)
    # Horner: p = c_d; p = p·(x - k) + c_{k-1}
    p = [newton[-1]] if newton else []
    for k in range(len(newton) - 1, 0, -1):
        shifted = [0] + p
        for i, c in enumerate(p):
            shifted[i] -= k * c
        shifted[0] += newton[k - 1]
        p = shifted
    return p + [0] * (len(values) - len(p))

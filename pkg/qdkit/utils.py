#!usr/bin/env python3
# -*- coding:utf-8 -*-
__author__ = 'mayanqiong'

import os
import random
import secrets

from scipy.special import comb

from qdkit.exceptions import QdkInconsistencyError

RD = random.Random(secrets.randbits(128))  # 未指定 seed 时使用的随机数引擎

DEFAULT_SEED = int(os.getenv("QDK_SEED", 20240501))


def _get_rd(seed=None) -> random.Random:
    """返回随机数引擎，seed 为 None 时返回全局的 RD"""
    return RD if seed is None else random.Random(seed)


def _comb(n: int, k: int) -> int:
    """精确的组合数 C(n, k)，n < k 或 k < 0 时为 0"""
    if k < 0 or n < k:
        return 0
    return int(comb(n, k, exact=True))


def _exact_div(a: int, b: int, what: str = "") -> int:
    """整除 a / b，不能整除时抛出 QdkInconsistencyError"""
    q, r = divmod(a, b)
    if r != 0:
        raise QdkInconsistencyError(f"{what} 不能被 {b} 整除: {a}")
    return q


def _check_nonnegative(value: int, what: str) -> int:
    if value < 0:
        raise QdkInconsistencyError(f"{what} 计算结果为负数: {value}")
    return value


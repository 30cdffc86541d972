#!/usr/bin/env python
#  -*- coding: utf-8 -*-
__author__ = 'mayanqiong'

import math
from typing import Dict, List, Optional

import simplejson
from pandas import DataFrame

from qdkit.__version__ import __version__
from qdkit.utils import _comb

# 以十进制字符串输出的计数字段
COUNT_KEYS = ("qd", "c4", "shared_butterflies", "shared_stars", "type1_matching", "type1_missing", "type2",
              "total_quartets")


def _count_str(value) -> str:
    return str(int(value))


def _to_json(obj: dict) -> str:
    return simplejson.dumps(obj, ensure_ascii=False, sort_keys=True, indent=2, ignore_nan=True)


class QuartetReport(object):
    """
    一次四分体距离计算的报告

    计数以十进制字符串输出，任何 JSON 读取端都不会丢失精度

    Args:
        n (int): 叶子数

        d (tuple): 两棵树的最大内部度

        method (str): 计算方法

        qd (int): 四分体距离

        stats (dict): quartet_distance 写入的分桶计数与运行统计

        wall_time (float): 总耗时 (秒)
    """

    def __init__(self, n: int, d: tuple, method: str, qd: int, stats: Optional[Dict] = None,
                 wall_time: float = 0.0) -> None:
        self.n = n
        self.d = d
        self.method = method
        self.qd = qd
        self.stats = dict(stats) if stats else {}
        self.wall_time = wall_time

    def to_dict(self) -> dict:
        total = _comb(self.n, 4)
        result = {
            "version": __version__,
            "n": self.n,
            "d": list(self.d),
            "method": self.method,
            "qd": _count_str(self.qd),
            "total_quartets": _count_str(total),
            "normalized": self.qd / total if total else 0.0,
            "wall_time": self.wall_time,
        }
        counters = {}
        timings = {}
        for k, v in self.stats.items():
            if k in COUNT_KEYS:
                result[k] = _count_str(v)
            elif k.startswith("time_"):
                timings[k[len("time_"):]] = v
            else:
                counters[k] = v
        if counters:
            result["counters"] = counters
        if timings:
            result["timings"] = timings
        return result

    def to_json(self) -> str:
        return _to_json(self.to_dict())


def count_report(command: str, value: int, **fields) -> str:
    """单个计数结果 (cycles / extract-c4) 的 JSON 报告"""
    result = {"version": __version__, "command": command, "c4": _count_str(value)}
    result.update(fields)
    return _to_json(result)


def ledger_report(ledger: Dict[str, int]) -> str:
    """ShapeLedger 的 JSON 报告，所有值为十进制字符串"""
    return _to_json({"version": __version__, "shapes": {k: _count_str(v) for k, v in ledger.items()}})


class BenchReport(object):
    """
    星形计数的规模测试报告，每行为一个实例:

    family, n, seed, star_time, height1, height2, membership1, membership2, common_leaves
    """

    COLUMNS = ["family", "n", "seed", "star_time", "height1", "height2", "membership1", "membership2",
               "common_leaves"]

    def __init__(self, rows: List[dict]) -> None:
        self.df = DataFrame(data=rows, columns=self.COLUMNS)

    def summary(self) -> DataFrame:
        """按 (family, n) 汇总平均耗时、结构量，以及与上一个规模的耗时比"""
        if self.df.empty:
            return DataFrame(columns=["family", "n", "star_time", "max_height", "max_membership",
                                      "common_leaves", "log_bound", "time_ratio"])
        df = self.df.assign(height=self.df[["height1", "height2"]].max(axis=1),
                            membership=self.df[["membership1", "membership2"]].max(axis=1))
        s = df.groupby(["family", "n"], as_index=False).agg(star_time=("star_time", "mean"),
                                                            max_height=("height", "max"),
                                                            max_membership=("membership", "max"),
                                                            common_leaves=("common_leaves", "max"))
        s["log_bound"] = [4 * math.log2(n) for n in s["n"]]
        s["time_ratio"] = s.groupby("family")["star_time"].transform(lambda x: x / x.shift(1))
        return s

    def to_csv(self, path: str) -> None:
        self.df.to_csv(path, index=False)

    def to_json(self, seed: int) -> str:
        s = self.summary()
        return _to_json({"version": __version__, "seed": seed, "instances": len(self.df),
                         "summary": [{k: (v.item() if hasattr(v, "item") else v) for k, v in r.items()}
                                     for r in s.to_dict(orient="records")]})

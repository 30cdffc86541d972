#!/usr/bin/env python
#  -*- coding: utf-8 -*-
__author__ = 'mayanqiong'

import math

import simplejson

from qdkit.report import BenchReport, QuartetReport, count_report, ledger_report


def test_quartet_report():
    big = 2 ** 70 + 1
    report = QuartetReport(8, (3, 4), "fast", 12, {"shared_stars": big, "height1": 5, "time_type1": 0.5}, 1.25)
    d = simplejson.loads(report.to_json())
    assert d["qd"] == "12" and d["total_quartets"] == "70"
    assert d["shared_stars"] == str(big)
    assert d["counters"] == {"height1": 5}
    assert d["timings"] == {"type1": 0.5}
    assert math.isclose(d["normalized"], 12 / 70)
    assert QuartetReport(3, (3, 0), "brute", 0).to_dict()["normalized"] == 0.0


def test_count_and_ledger_reports():
    d = simplejson.loads(count_report("cycles", 64, method="auto"))
    assert d["c4"] == "64" and d["command"] == "cycles" and d["method"] == "auto"
    d = simplejson.loads(ledger_report({"C4": 9, "A": 81}))
    assert d["shapes"] == {"C4": "9", "A": "81"}


def test_bench_summary():
    rows = []
    for n, t in ((16, 1.0), (32, 3.0), (16, 3.0)):
        rows.append({"family": "mixed", "n": n, "seed": 1, "star_time": t, "height1": 4, "height2": 6,
                     "membership1": 5, "membership2": 3, "common_leaves": n})
    s = BenchReport(rows).summary()
    assert list(s["n"]) == [16, 32]
    assert list(s["star_time"]) == [2.0, 3.0]
    assert list(s["max_height"]) == [6, 6] and list(s["max_membership"]) == [5, 5]
    assert math.isnan(s["time_ratio"].iloc[0]) and s["time_ratio"].iloc[1] == 1.5
    assert s["log_bound"].iloc[1] == 20.0
    d = simplejson.loads(BenchReport(rows).to_json(7))
    assert d["instances"] == 3 and d["seed"] == 7
    assert d["summary"][0]["time_ratio"] is None


def test_empty_bench():
    assert BenchReport([]).summary().empty

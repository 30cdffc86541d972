#!/usr/bin/env python
#  -*- coding: utf-8 -*-
__author__ = 'mayanqiong'

import os

import pytest
import simplejson

from qdkit import qdist
from qdkit.cli import main
from qdkit.tools import selftest
from qdkit.tree import read_newick

K4 = "nodes 4\n1 2\n1 3\n1 4\n2 3\n2 4\n3 4\n"
K33 = "nodes 6 bipartite 3\n" + "".join(f"{u} {v}\n" for u in range(1, 4) for v in range(4, 7))


def _write(tmp_path, name, text):
    path = tmp_path / name
    path.write_text(text, encoding="utf-8")
    return str(path)


def _run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


@pytest.fixture
def trees(tmp_path):
    return _write(tmp_path, "star.nwk", "(1,2,3,4,5);\n"), _write(tmp_path, "cat.nwk", "(1,(2,(3,(4,5))));\n")


def test_qdist(capsys, trees):
    code, out, _ = _run(capsys, "qdist", *trees)
    assert code == 0 and out.strip() == "5"
    code, out, _ = _run(capsys, "qdist", *trees, "--method", "brute")
    assert code == 0 and out.strip() == "5"


def test_qdist_json(capsys, trees):
    code, out, _ = _run(capsys, "qdist", *trees, "--json")
    first, rest = out.split("\n", 1)
    report = simplejson.loads(rest)
    assert first == "5"
    assert report["qd"] == "5" and report["total_quartets"] == "5"
    assert report["n"] == 5 and report["d"] == [5, 3]
    assert report["normalized"] == 1.0
    assert report["shared_butterflies"] == "0"


def test_cycles(capsys, tmp_path):
    k4 = _write(tmp_path, "k4.txt", K4)
    assert _run(capsys, "cycles", k4)[1].strip() == "3"
    square = _write(tmp_path, "square.txt", "nodes 4\n1 2 1\n2 3 2\n3 4 4\n4 1 8\n")
    for method in ("auto", "brute", "codegree", "reduction"):
        code, out, _ = _run(capsys, "cycles", square, "--method", method)
        assert code == 0 and out.strip() == "64"
    empty = _write(tmp_path, "empty.txt", "nodes 3\n")
    assert _run(capsys, "cycles", empty)[1].strip() == "0"
    code, out, _ = _run(capsys, "cycles", square, "--json")
    assert simplejson.loads(out.split("\n", 1)[1])["c4"] == "64"


def test_shapes(capsys, tmp_path):
    k33 = _write(tmp_path, "k33.txt", K33)
    code, out, _ = _run(capsys, "shapes", k33)
    rows = dict(line.split("\t") for line in out.strip().splitlines())
    assert code == 0 and rows["C4"] == "9"
    code, out, _ = _run(capsys, "shapes", k33, "--json")
    assert simplejson.loads(out)["shapes"]["C4"] == "9"


def test_reduce(capsys, tmp_path):
    k33 = _write(tmp_path, "k33.txt", K33)
    prefix = str(tmp_path / "inst")
    code, _, _ = _run(capsys, "reduce", k33, "--out-prefix", prefix)
    assert code == 0
    t1, t2 = read_newick(prefix + ".t1.nwk"), read_newick(prefix + ".t2.nwk")
    assert t1.n == t2.n == 9
    with open(prefix + ".map.json", encoding="utf-8") as f:
        leaf_map = simplejson.load(f)
    assert leaf_map["bipartized"] is False
    assert len(leaf_map["leaves"]) == 9
    k4 = _write(tmp_path, "k4.txt", K4)
    _run(capsys, "reduce", k4, "--out-prefix", prefix)
    assert read_newick(prefix + ".t1.nwk").n == 12


def test_extract_c4(capsys, tmp_path):
    assert _run(capsys, "extract-c4", _write(tmp_path, "k33.txt", K33))[1].strip() == "9"
    k4 = _write(tmp_path, "k4.txt", K4)
    assert _run(capsys, "extract-c4", k4)[1].strip() == "3"
    assert _run(capsys, "extract-c4", k4, "--method", "brute")[1].strip() == "3"


def test_exit_codes(capsys, tmp_path):
    bad = _write(tmp_path, "bad.nwk", "((1,2),(3,4)\n")
    ok = _write(tmp_path, "ok.nwk", "((1,2),(3,4));\n")
    other = _write(tmp_path, "other.nwk", "((1,2),(3,4),5);\n")
    code, _, err = _run(capsys, "qdist", bad, ok)
    assert code == 2 and "位置" in err
    assert _run(capsys, "qdist", ok, other)[0] == 3
    assert _run(capsys, "qdist", ok, str(tmp_path / "missing.nwk"))[0] == 2
    assert _run(capsys, "cycles", _write(tmp_path, "bad.txt", "nodes 2\n1 1\n"))[0] == 2
    few = _write(tmp_path, "few.txt", "nodes 2\n1 2\n")
    assert _run(capsys, "extract-c4", few)[0] == 4
    assert _run(capsys, "reduce", few, "--out-prefix", str(tmp_path / "few"))[0] == 4


def test_selftest(capsys, tmp_path, monkeypatch):
    monkeypatch.setattr(selftest, "DEFAULT_COUNTS", {k: 2 for k in selftest.SUITES})
    code, out, _ = _run(capsys, "selftest", "--sizes", "4,5", "--seed", "7", "--dump-dir", str(tmp_path))
    assert code == 0
    assert "quartet: 2 passed" in out
    assert not os.listdir(tmp_path)


def test_selftest_detects_broken_counter(capsys, tmp_path, monkeypatch):
    monkeypatch.setattr(selftest, "DEFAULT_COUNTS", {k: 5 for k in selftest.SUITES})
    monkeypatch.setattr(qdist, "count_shared_butterflies", lambda t1, t2: 0)
    code, _, err = _run(capsys, "selftest", "--sizes", "8", "--dump-dir", str(tmp_path))
    assert code == 1
    dumps = os.listdir(tmp_path)
    assert len(dumps) == 1 and dumps[0].startswith("selftest-quartet-")
    assert "quartet" in err


def test_bench(capsys, tmp_path):
    prefix = str(tmp_path / "bench")
    code, out, _ = _run(capsys, "bench", "--sizes", "16,32", "--out-prefix", prefix)
    assert code == 0
    with open(prefix + ".json", encoding="utf-8") as f:
        report = simplejson.load(f)
    assert report["instances"] == 4
    assert {row["family"] for row in report["summary"]} == {"star-heavy", "mixed"}
    assert os.path.exists(prefix + ".csv")

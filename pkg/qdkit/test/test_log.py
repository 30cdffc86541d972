#!/usr/bin/env python
#  -*- coding: utf-8 -*-
__author__ = 'mayanqiong'

import logging
import os
import time

import simplejson

from qdkit import log
from qdkit.log import _clear_logs, _get_logger, _setup_file_log


def test_setup_file_log(tmp_path, monkeypatch):
    monkeypatch.setattr(log, "DEBUG_DIR", str(tmp_path))
    logger = logging.getLogger("qdkit")
    handlers = list(logger.handlers)
    path = _setup_file_log()
    try:
        _get_logger("Test", seed=1).debug("hello", value=3)
    finally:
        for h in logger.handlers[len(handlers):]:
            h.close()
            logger.removeHandler(h)
    assert os.path.dirname(path) == str(tmp_path)
    with open(path, encoding="utf-8") as f:
        records = [simplejson.loads(line) for line in f if line.strip()]
    assert "process start" in records[0].values()
    assert "qdkit" in records[0].values()
    assert "hello" in records[-1].values()


def test_clear_logs(tmp_path, monkeypatch):
    monkeypatch.setattr(log, "DEBUG_DIR", str(tmp_path))
    monkeypatch.setenv("QDK_SAVE_LOG_DAYS", "1")
    old, new = tmp_path / "old.log", tmp_path / "new.log"
    old.write_text("{}\n")
    new.write_text("{}\n")
    stale = time.time() - 3 * 86400
    os.utime(str(old), (stale, stale))
    _clear_logs()
    assert sorted(os.listdir(str(tmp_path))) == ["new.log"]

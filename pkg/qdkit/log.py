# !usr/bin/env python3
# -*- coding:utf-8 -*-
__author__ = 'mayanqiong'

import datetime
import logging
import os
import platform
import sys

import psutil
from shinny_structlog import ShinnyLoggerAdapter, JSONFormatter

from qdkit.__version__ import __version__

DEBUG_DIR = os.path.join(os.path.expanduser('~'), ".qdkit/logs")


def _get_log_name():
    """返回默认 debug 文件生成的位置"""
    if not os.path.exists(DEBUG_DIR):
        os.makedirs(DEBUG_DIR, exist_ok=True)
    return os.path.join(DEBUG_DIR, f"{datetime.datetime.now().strftime('%Y%m%d%H%M%S%f')}-{os.getpid()}.log")


def _clear_logs():
    """清除最后修改时间是 n 天前的日志"""
    if not os.path.exists(DEBUG_DIR):
        return
    n = os.getenv("QDK_SAVE_LOG_DAYS", 30)
    dt = datetime.datetime.now() - datetime.timedelta(days=int(n))
    for log in os.listdir(DEBUG_DIR):
        path = os.path.join(DEBUG_DIR, log)
        try:
            if datetime.datetime.fromtimestamp(os.stat(path).st_mtime) < dt:
                os.remove(path)
        except OSError:
            pass  # 忽略抛错


def _get_logger(name: str, **kwargs) -> ShinnyLoggerAdapter:
    """
    返回 qdkit 包下名为 name 的子 logger，kwargs 会作为固定字段写入每条日志

    Args:
        name (str): 组件名，例如 "TopTree"

    Returns:
        ShinnyLoggerAdapter: 支持 logger.debug("msg", key=value) 的结构化 logger
    """
    return ShinnyLoggerAdapter(logging.getLogger("qdkit").getChild(name), **kwargs)


def _setup_file_log(log_name=None):
    """
    为 qdkit 根 logger 添加 JSON 格式的文件输出，并写入 process start 记录

    Args:
        log_name (str): 日志文件路径，默认由 _get_log_name() 生成

    Returns:
        str: 实际使用的日志文件路径
    """
    _clear_logs()
    log_name = log_name if log_name else _get_log_name()
    logger = logging.getLogger("qdkit")
    logger.setLevel(logging.DEBUG)
    fh = logging.FileHandler(filename=log_name)
    fh.setFormatter(JSONFormatter())
    fh.setLevel(logging.DEBUG)
    logger.addHandler(fh)
    mem = psutil.virtual_memory()
    ShinnyLoggerAdapter(logger).debug("process start", product="qdkit", version=__version__, os=platform.platform(),
                                      py_version=platform.python_version(), py_arch=platform.architecture()[0],
                                      cmd=sys.argv, mem_total=mem.total, mem_free=mem.free)
    return log_name

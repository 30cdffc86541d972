#!/usr/bin/env python
#  -*- coding: utf-8 -*-
__author__ = 'mayanqiong'


class QdkError(Exception):
    """
    qdkit 内部所有例外的基类
    """

    #: 命令行遇到此类例外时的退出码
    exit_code = 1

    def __init__(self, message):
        super().__init__(message)
        self.message = message


class QdkParseError(QdkError):
    """
    Newick 文本或边表文本无法解析时会抛出此例外，message 中包含出错位置

    Example::

        from qdkit import parse_newick, QdkParseError

        try:
            parse_newick("((1,2),(3,4)")
        except QdkParseError as e:
            print(e.message)  # Newick 解析失败: 缺少结尾的 ';' (位置 12)

    """

    exit_code = 2


class QdkLabelMismatchError(QdkError):
    """
    两棵树的叶子标签集合不一致时会抛出此例外

    Example::

        from qdkit import parse_newick, quartet_distance, QdkLabelMismatchError

        try:
            quartet_distance(parse_newick("((1,2),(3,4));"), parse_newick("((1,2),(3,4),5);"))
        except QdkLabelMismatchError as e:
            print(e.message)

    """

    exit_code = 3


class QdkTooFewEdgesError(QdkError):
    """
    由图构造两棵树时边数少于 4 会抛出此例外
    """

    exit_code = 4


class QdkGraphError(QdkError):
    """
    输入图不满足操作的前置条件时会抛出此例外，例如要求二分图却传入了非二分图，要求简单图却传入了多重图
    """


class QdkInconsistencyError(QdkError):
    """
    内部计数恒等式不成立时会抛出此例外，例如除法不能整除、插值多项式出现非法系数、计数结果为负

    出现此例外说明程序存在缺陷，请保留输入数据并反馈
    """

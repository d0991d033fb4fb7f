#!/usr/bin/env python3
# -*- coding: utf-8 -*-
"""
DistSet - 测试公共夹具
"""

import pytest

from distset.graphs.graph import Graph, cycle_graph, decode, path_graph

C5_CODE = "ababbaabba"


@pytest.fixture
def c5() -> Graph:
    """五边形 C5, 自补"""
    return cycle_graph(5)


@pytest.fixture
def p3() -> Graph:
    """三点路径, 编码 aba"""
    return decode("aba")


@pytest.fixture
def c4() -> Graph:
    return cycle_graph(4)


@pytest.fixture
def p4() -> Graph:
    return path_graph(4)


@pytest.fixture(autouse=True)
def _isolated_env(monkeypatch):
    """屏蔽外部 DISTSET_* 环境变量"""
    import os
    for key in list(os.environ):
        if key.startswith("DISTSET_"):
            monkeypatch.delenv(key, raising=False)

#!/usr/bin/env python3
# -*- coding: utf-8 -*-
"""
DistSet - 图模块

图的紧凑编码、补图运算、规范标号与同构类枚举。
"""

from distset.graphs.graph import Graph, complement, decode, encode, extensions
from distset.graphs.canonical import (
    canonical_code,
    class_key,
    enumerate_classes,
    enumerate_isomorphism_classes,
    is_self_complementary,
)

__all__ = [
    "Graph",
    "decode",
    "encode",
    "complement",
    "extensions",
    "canonical_code",
    "class_key",
    "enumerate_classes",
    "enumerate_isomorphism_classes",
    "is_self_complementary",
]

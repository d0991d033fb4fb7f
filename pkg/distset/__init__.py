#!/usr/bin/env python3
# -*- coding: utf-8 -*-
"""
DistSet - 两距离集精确分类系统

在 R^d 中精确枚举两距离集 (点对距离只取两个值的有限点集)。

主要功能:
- 图编码、规范标号与同构类枚举
- 候选 Gram / Menger 矩阵的主子式方程组与实代数数认证
- 逐层扩展的球面与一般模式分类, JSON-lines 目录与续跑
- 最小表示维数 mydim 与维数普查
- 内置参数表格的精确复核

版本: 1.0.0
许可证: MIT
"""

from typing import Any, Dict

__version__ = "1.0.0"
__author__ = "DistSet Team"
__license__ = "MIT"
__description__ = "Exact classification of two-distance sets in low-dimensional Euclidean space"

# 核心类型
from distset.core.types import (
    AtlasEntry,
    AtlasSummary,
    Mode,
    Orientation,
    OutputFormat,
    RunConfig,
    RunMode,
    SolutionRecord,
    SurvivalCriterion,
)

from distset.core.exceptions import (
    CatalogError,
    CertificationError,
    ConfigurationError,
    DimensionBoundError,
    DistSetError,
    GraphError,
    SolverError,
    ValidationError,
)

# 图与工具
from distset.graphs.graph import Graph, complement, decode, encode
from distset.utils.config_utils import ConfigUtils
from distset.utils.format_utils import FormatUtils

# 版本信息
VERSION_INFO = {
    "version": __version__,
    "catalog_format": "jsonl-v1",
    "python_version": ">=3.9",
}

# 架构信息
ARCHITECTURE_INFO = {
    "version": "python-v1.0",
    "layers": {
        "core": "🔧 核心层 - 类型定义、异常处理、基础接口",
        "graphs": "🕸️ 图层 - 图编码、补图、规范标号与同构类枚举",
        "algebra": "🧮 代数层 - 有理多项式、Sturm 序列、实代数数与二元方程组求解",
        "gram": "📐 矩阵层 - 候选 Gram / Menger 矩阵、主子式与特征多项式",
        "solvers": "🎯 求解层 - 球面与一般模式求解、集合计数、验证与数值实现",
        "atlas": "🗂️ 分类层 - 逐层扩展、目录持久化、汇总报告与 mydim 普查",
        "fixtures": "📋 表格层 - 内置参数表格与复核",
        "utils": "🛠️ 工具层 - 配置、日志、格式化与校验",
        "cli": "💻 命令行层 - distset 命令",
    },
}


def get_version_info() -> Dict[str, Any]:
    """获取版本信息"""
    return dict(VERSION_INFO)


def get_architecture_info() -> Dict[str, Any]:
    """获取架构信息"""
    return {**ARCHITECTURE_INFO, "layers": dict(ARCHITECTURE_INFO["layers"])}


__all__ = [
    # 版本信息
    "__version__",
    "__author__",
    "__license__",
    "__description__",
    "VERSION_INFO",
    "ARCHITECTURE_INFO",
    "get_version_info",
    "get_architecture_info",

    # 核心类型
    "AtlasEntry",
    "AtlasSummary",
    "Mode",
    "Orientation",
    "OutputFormat",
    "RunConfig",
    "RunMode",
    "SolutionRecord",
    "SurvivalCriterion",

    # 异常类
    "DistSetError",
    "GraphError",
    "SolverError",
    "CertificationError",
    "DimensionBoundError",
    "CatalogError",
    "ConfigurationError",
    "ValidationError",

    # 图与工具
    "Graph",
    "decode",
    "encode",
    "complement",
    "ConfigUtils",
    "FormatUtils",
]

#!/usr/bin/env python3
# -*- coding: utf-8 -*-
"""
DistSet - 分类模块

逐层扩展分类、目录持久化、汇总报告与最小表示维数。
"""

from distset.atlas.report_generator import AtlasReportGenerator, ReportConfig, compute_summary
from distset.atlas.catalog import CatalogReader, CatalogWriter
from distset.atlas.engine import AtlasEngine, full_atlas, seed, step
from distset.atlas.mydim import mydim, mydim_census, point_set_dim

__all__ = [
    "AtlasReportGenerator",
    "ReportConfig",
    "compute_summary",
    "CatalogReader",
    "CatalogWriter",
    "AtlasEngine",
    "seed",
    "step",
    "full_atlas",
    "mydim",
    "point_set_dim",
    "mydim_census",
]

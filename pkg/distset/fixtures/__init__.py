#!/usr/bin/env python3
# -*- coding: utf-8 -*-
"""
DistSet - 内置表格

已发表的球面与一般两距离集参数表, 以及逐行复核。
"""

from distset.fixtures.tables import TABLES, TableRow, all_rows, find_row
from distset.fixtures.checks import RowReport, verify_builtin, verify_row

__all__ = [
    "TABLES",
    "TableRow",
    "all_rows",
    "find_row",
    "RowReport",
    "verify_row",
    "verify_builtin",
]

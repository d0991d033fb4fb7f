#!/usr/bin/env python3
# -*- coding: utf-8 -*-
"""
DistSet - 格式化工具

提供表格输出所需的格式化功能。
"""

from fractions import Fraction
from typing import Any, Iterable, Optional, Union

MISSING = "-"


class FormatUtils:
    """格式化工具类"""

    @staticmethod
    def format_rational(value: Union[int, Fraction]) -> str:
        """
        格式化有理数为 "p/q" 或 "p"

        Args:
            value: 有理数

        Returns:
            格式化后的字符串
        """
        value = Fraction(value)
        if value.denominator == 1:
            return str(value.numerator)
        return f"{value.numerator}/{value.denominator}"

    @staticmethod
    def format_flag(value: Optional[bool]) -> str:
        """布尔列输出为 true/false, 缺失为 -"""
        if value is None:
            return MISSING
        return "true" if value else "false"

    @staticmethod
    def format_optional(value: Any) -> str:
        """可选值, None 输出为 -"""
        if value is None:
            return MISSING
        if isinstance(value, bool):
            return FormatUtils.format_flag(value)
        return str(value)

    @staticmethod
    def tsv_row(values: Iterable[Any]) -> str:
        """
        拼接一行制表符分隔值

        Args:
            values: 列值

        Returns:
            TSV 行 (不含换行)
        """
        return "\t".join(FormatUtils.format_optional(v) for v in values)

    @staticmethod
    def format_duration(seconds: Union[int, float]) -> str:
        """
        格式化时间段

        Args:
            seconds: 秒数

        Returns:
            格式化后的时间段字符串
        """
        if seconds is None:
            return "N/A"

        secs = int(seconds)
        if secs >= 3600:
            return f"{secs // 3600}小时{(secs % 3600) // 60}分钟"
        if secs >= 60:
            return f"{secs // 60}分钟{secs % 60}秒"
        if secs >= 1:
            return f"{secs}秒"
        return f"{float(seconds) * 1000:.0f}毫秒"


# 导出
__all__ = ["FormatUtils", "MISSING"]

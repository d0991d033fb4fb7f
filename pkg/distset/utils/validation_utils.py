#!/usr/bin/env python3
# -*- coding: utf-8 -*-
"""
DistSet - 数据验证工具

提供图编码的验证功能。
"""

import math
import re
from typing import Optional

from distset.core.exceptions import (
    BadAlphabetError,
    LengthMismatchError,
    OrderTooLargeError,
)
from distset.core.types import MAX_ORDER

_CODE_PATTERN = re.compile(r'^[ab]*$')


class ValidationUtils:
    """数据验证工具类"""

    @staticmethod
    def infer_order(code: str) -> int:
        """
        由编码长度反推顶点数

        Args:
            code: 图编码字符串

        Returns:
            满足 n(n-1)/2 == len(code) 的 n

        Raises:
            LengthMismatchError: 长度不是三角数
        """
        length = len(code)
        n = (1 + math.isqrt(1 + 8 * length)) // 2
        if n * (n - 1) // 2 != length:
            raise LengthMismatchError(
                f"编码长度 {length} 不是三角数, 无法确定顶点数", code=code
            )
        return max(n, 1)

    @staticmethod
    def validate_graph_code(code: str, n: Optional[int] = None) -> int:
        """
        验证图编码

        Args:
            code: 图编码字符串
            n: 顶点数, None 时由长度推断

        Returns:
            顶点数

        Raises:
            BadAlphabetError: 含有 a/b 之外的字符
            LengthMismatchError: 长度与 n(n-1)/2 不符
            OrderTooLargeError: 顶点数超过上限
        """
        if not isinstance(code, str) or not _CODE_PATTERN.match(code):
            raise BadAlphabetError(f"编码只能包含字符 a 和 b: {code!r}", code=str(code))
        if n is None:
            n = ValidationUtils.infer_order(code)
        if n < 1:
            raise LengthMismatchError(f"顶点数必须为正: {n}", order=n, code=code)
        if len(code) != n * (n - 1) // 2:
            raise LengthMismatchError(
                f"编码长度 {len(code)} 与 n={n} 所需的 {n * (n - 1) // 2} 不符",
                order=n, code=code
            )
        if n > MAX_ORDER:
            raise OrderTooLargeError(f"顶点数 {n} 超过上限 {MAX_ORDER}", order=n, code=code)
        return n


# 导出
__all__ = ["ValidationUtils"]

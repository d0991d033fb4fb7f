#!/usr/bin/env python3
# -*- coding: utf-8 -*-
"""
DistSet - 工具模块

配置、日志、格式化与输入校验。
"""

from distset.utils.format_utils import FormatUtils
from distset.utils.config_utils import ConfigUtils
from distset.utils.validation_utils import ValidationUtils
from distset.utils.logging_utils import LogContext, get_logger, setup_logger

__all__ = [
    "FormatUtils",
    "ConfigUtils",
    "ValidationUtils",
    "LogContext",
    "setup_logger",
    "get_logger",
]

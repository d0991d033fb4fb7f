#!/usr/bin/env python3
# -*- coding: utf-8 -*-
"""
DistSet - 核心模块

包含系统的核心类型定义、异常处理和基础接口。
"""

from distset.core.types import *
from distset.core.exceptions import *
from distset.core.interfaces import *

from distset.core import exceptions as _exceptions
from distset.core import interfaces as _interfaces
from distset.core import types as _types

__all__ = [*_types.__all__, *_exceptions.__all__, *_interfaces.__all__]

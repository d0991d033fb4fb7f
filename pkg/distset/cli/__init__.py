#!/usr/bin/env python3
# -*- coding: utf-8 -*-
"""
DistSet - 命令行界面模块
"""

from distset.cli.main import cli, main

__all__ = ["cli", "main"]

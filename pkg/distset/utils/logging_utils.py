#!/usr/bin/env python3
# -*- coding: utf-8 -*-
"""
DistSet - 日志管理工具

全部日志器挂在 distset 命名空间下。标准输出保留给 TSV/JSON 结果, 日志一律写到
标准错误或日志文件。记录可携带分类上下文字段 (n、class_key、mode、dim 等),
文本格式把它们追加在消息后, JSON 格式把它们写成独立字段。
"""

import json
import logging
import logging.handlers
import sys
import time
from datetime import datetime
from pathlib import Path
from typing import Any, Dict, Optional, Union

from distset.utils.format_utils import FormatUtils

ROOT_LOGGER_NAME = "distset"

TEXT_FORMAT = "%(asctime)s %(levelname)-7s %(name)s: %(message)s"

# 文本格式中按此顺序追加的上下文字段
CONTEXT_FIELDS = ("n", "mode", "dim", "code", "class_key", "rows")

_RESERVED_ATTRS = set(vars(logging.LogRecord("", 0, "", 0, "", None, None))) | {"message", "asctime"}


def _extra_fields(record: logging.LogRecord) -> Dict[str, Any]:
    return {
        key: value for key, value in record.__dict__.items()
        if key not in _RESERVED_ATTRS and not key.startswith("_")
    }


class ContextFormatter(logging.Formatter):
    """文本格式, 消息后附 [n=7 mode=general] 形式的上下文"""

    def __init__(self, fmt: str = TEXT_FORMAT):
        super().__init__(fmt)

    def format(self, record: logging.LogRecord) -> str:
        text = super().format(record)
        extra = _extra_fields(record)
        pairs = [f"{key}={extra[key]}" for key in CONTEXT_FIELDS if key in extra]
        return f"{text} [{' '.join(pairs)}]" if pairs else text


class JSONFormatter(logging.Formatter):
    """每条记录一行 JSON, 上下文字段原样保留"""

    def format(self, record: logging.LogRecord) -> str:
        payload: Dict[str, Any] = {
            "timestamp": datetime.fromtimestamp(record.created).isoformat(),
            "level": record.levelname,
            "logger": record.name,
            "message": record.getMessage(),
            "process": record.process,
        }
        payload.update(_extra_fields(record))
        if record.exc_info:
            payload["exception"] = self.formatException(record.exc_info)
        return json.dumps(payload, ensure_ascii=False, default=str)


class StderrHandler(logging.StreamHandler):
    """每次输出时取当前的 sys.stderr (测试中标准错误会被替换)"""

    def __init__(self):
        super().__init__(sys.stderr)

    @property
    def stream(self):
        return sys.stderr

    @stream.setter
    def stream(self, value):
        pass


def setup_logger(
    name: str = ROOT_LOGGER_NAME,
    log_file: Optional[Union[str, Path]] = None,
    level: Union[str, int] = logging.INFO,
    json_format: bool = False,
    console_output: bool = True,
    max_bytes: int = 10 * 1024 * 1024,
    backup_count: int = 5,
) -> logging.Logger:
    """
    配置日志器

    重复调用时替换已有处理器, 所以命令行每次运行都能按新的配置输出。

    Args:
        name: 日志器名称
        log_file: 可选的日志文件, 按大小轮转
        level: 日志级别
        json_format: 是否输出 JSON
        console_output: 是否输出到标准错误
        max_bytes: 单个日志文件最大字节数
        backup_count: 轮转保留的文件数

    Returns:
        配置好的日志器
    """
    logger = logging.getLogger(name)
    logger.setLevel(level.upper() if isinstance(level, str) else level)
    for handler in list(logger.handlers):
        logger.removeHandler(handler)
        handler.close()

    formatter: logging.Formatter = JSONFormatter() if json_format else ContextFormatter()
    if console_output:
        console = StderrHandler()
        console.setFormatter(formatter)
        logger.addHandler(console)
    if log_file:
        path = Path(log_file)
        path.parent.mkdir(parents=True, exist_ok=True)
        rotating = logging.handlers.RotatingFileHandler(
            path, maxBytes=max_bytes, backupCount=backup_count, encoding="utf-8"
        )
        rotating.setFormatter(formatter)
        logger.addHandler(rotating)
    return logger


def get_logger(name: str) -> logging.Logger:
    """取 distset 命名空间下的日志器, 如 get_logger("atlas.engine")"""
    if name != ROOT_LOGGER_NAME and not name.startswith(ROOT_LOGGER_NAME + "."):
        name = f"{ROOT_LOGGER_NAME}.{name}"
    return logging.getLogger(name)


class LogContext:
    """
    记录一个阶段 (一层搜索、一次表格复核) 的开始、结束与耗时

    阶段内抛出的异常照常向外传播, 只额外记录一条错误日志。
    """

    def __init__(self, logger: logging.Logger, operation: str, **context):
        self.logger = logger
        self.operation = operation
        self.context = context
        self.duration: Optional[float] = None
        self._start = 0.0

    def __enter__(self) -> "LogContext":
        self._start = time.perf_counter()
        self.logger.info(f"开始 {self.operation}", extra=self.context)
        return self

    def __exit__(self, exc_type, exc_val, exc_tb):
        self.duration = time.perf_counter() - self._start
        extra = {**self.context, "duration": round(self.duration, 3)}
        if exc_type is None:
            self.logger.info(
                f"完成 {self.operation}, 耗时 {FormatUtils.format_duration(self.duration)}",
                extra=extra,
            )
        else:
            self.logger.error(f"{self.operation} 失败: {exc_val}", extra=extra, exc_info=True)
        return False


def set_global_log_level(level: Union[str, int]) -> None:
    """调整 distset 命名空间下全部日志器的级别"""
    if isinstance(level, str):
        level = level.upper()
    logging.getLogger(ROOT_LOGGER_NAME).setLevel(level)
    for name in list(logging.Logger.manager.loggerDict):
        if name.startswith(ROOT_LOGGER_NAME + "."):
            logging.getLogger(name).setLevel(level)


__all__ = [
    "ROOT_LOGGER_NAME",
    "CONTEXT_FIELDS",
    "ContextFormatter",
    "JSONFormatter",
    "StderrHandler",
    "setup_logger",
    "get_logger",
    "LogContext",
    "set_global_log_level",
]

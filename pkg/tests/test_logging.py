#!/usr/bin/env python3
# -*- coding: utf-8 -*-
"""
DistSet - 日志工具测试
"""

import json
import logging

import pytest

from distset.utils.logging_utils import (
    ContextFormatter,
    JSONFormatter,
    LogContext,
    get_logger,
    set_global_log_level,
    setup_logger,
)


def _record(**extra) -> logging.LogRecord:
    record = logging.LogRecord("distset.test", logging.INFO, __file__, 1, "层级完成", None, None)
    record.__dict__.update(extra)
    return record


class TestFormatters:
    """文本与 JSON 格式"""

    def test_context_suffix(self):
        text = ContextFormatter().format(_record(n=7, mode="general", other=1))
        assert text.endswith("层级完成 [n=7 mode=general]")

    def test_plain_message(self):
        assert "[" not in ContextFormatter().format(_record())

    def test_json_fields(self):
        payload = json.loads(JSONFormatter().format(_record(n=7, class_key="aab")))
        assert payload["message"] == "层级完成"
        assert payload["n"] == 7
        assert payload["class_key"] == "aab"
        assert payload["logger"] == "distset.test"


class TestLoggers:
    """日志器配置"""

    def test_namespace(self):
        assert get_logger("atlas.engine").name == "distset.atlas.engine"
        assert get_logger("distset.cli").name == "distset.cli"

    def test_setup_replaces_handlers(self, tmp_path):
        logger = setup_logger("distset.test_setup", log_file=tmp_path / "run.log", level="DEBUG")
        assert len(logger.handlers) == 2
        logger = setup_logger("distset.test_setup", level="WARNING")
        assert len(logger.handlers) == 1
        assert logger.level == logging.WARNING

    def test_global_level(self):
        child = get_logger("solvers.test_level")
        set_global_log_level("ERROR")
        assert child.level == logging.ERROR
        set_global_log_level("INFO")

    def test_log_context(self, caplog):
        logger = get_logger("test_context")
        with caplog.at_level(logging.INFO, logger=logger.name):
            with LogContext(logger, "层级 n=5", n=5) as context:
                pass
        assert context.duration is not None
        assert [r.n for r in caplog.records] == [5, 5]

    def test_log_context_reraises(self, caplog):
        logger = get_logger("test_context")
        with caplog.at_level(logging.INFO, logger=logger.name):
            with pytest.raises(ValueError):
                with LogContext(logger, "失败的阶段"):
                    raise ValueError("boom")
        assert caplog.records[-1].levelno == logging.ERROR

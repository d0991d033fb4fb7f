#!/usr/bin/env python3
# -*- coding: utf-8 -*-
"""
DistSet - 配置管理工具

提供配置文件读取、验证和管理功能。

优先级: 命令行参数 > 环境变量 (DISTSET_*) > 配置文件 > 默认值。
"""

import json
import os
from pathlib import Path
from typing import Any, Dict, Optional, Union

import yaml
from pydantic import ValidationError as PydanticValidationError

from distset.core.exceptions import ConfigurationError
from distset.core.types import (
    DEFAULT_DIM,
    DEFAULT_MAX_N,
    DEFAULT_REALIZATION_TOLERANCE,
    RunConfig,
)

ENV_PREFIX = "DISTSET_"

# 环境变量到 run 段的映射, catalog_dir 与 log_level 单独处理
_ENV_RUN_KEYS = {
    "jobs", "dim", "mode", "seed_n", "max_n", "out", "format",
    "survival", "hereditary_prefilter",
}


# 扩展名到格式的映射, 其余扩展名按 JSON 处理
_SUFFIX_FORMATS = {".yaml": "yaml", ".yml": "yaml", ".json": "json"}


def _read_text(text: str, config_type: str) -> Any:
    if config_type == "yaml":
        return yaml.safe_load(text) or {}
    if config_type == "json":
        return json.loads(text)
    raise ConfigurationError(f"不支持的配置格式: {config_type}", config_key="format")


def _dump_text(config: Dict[str, Any], config_type: str) -> str:
    if config_type == "yaml":
        return yaml.safe_dump(config, sort_keys=False, allow_unicode=True)
    if config_type == "json":
        return json.dumps(config, indent=2, ensure_ascii=False) + "\n"
    raise ConfigurationError(f"不支持的配置格式: {config_type}", config_key="format")


class ConfigUtils:
    """配置管理工具类"""

    @staticmethod
    def detect_config_type(config_path: Union[str, Path]) -> str:
        """按扩展名判断 yaml 或 json"""
        return _SUFFIX_FORMATS.get(Path(config_path).suffix.lower(), "json")

    @staticmethod
    def load_config(config_path: Union[str, Path], config_type: Optional[str] = None) -> Dict[str, Any]:
        """
        读取 JSON 或 YAML 配置文件

        Raises:
            ConfigurationError: 文件不存在、无法解析或顶层不是映射
        """
        path = Path(config_path)
        if not path.is_file():
            raise ConfigurationError(f"配置文件不存在: {path}")
        try:
            data = _read_text(path.read_text(encoding="utf-8"), config_type or ConfigUtils.detect_config_type(path))
        except (yaml.YAMLError, json.JSONDecodeError, UnicodeDecodeError) as e:
            raise ConfigurationError(f"无法解析配置文件 {path}: {e}")
        if not isinstance(data, dict):
            raise ConfigurationError(f"配置文件顶层必须是映射: {path}")
        return data

    @staticmethod
    def save_config(
        config: Dict[str, Any],
        config_path: Union[str, Path],
        config_type: Optional[str] = None
    ) -> None:
        """
        写出配置文件, 格式缺省由扩展名决定

        Raises:
            ConfigurationError: 格式不支持或写入失败
        """
        path = Path(config_path)
        text = _dump_text(config, config_type or ConfigUtils.detect_config_type(path))
        try:
            path.parent.mkdir(parents=True, exist_ok=True)
            path.write_text(text, encoding="utf-8")
        except OSError as e:
            raise ConfigurationError(f"无法写入配置文件 {path}: {e}")

    @staticmethod
    def merge_configs(*layers: Dict[str, Any]) -> Dict[str, Any]:
        """按顺序深度合并, 后面的层覆盖前面的层"""
        merged: Dict[str, Any] = {}
        for layer in layers:
            merged = ConfigUtils._deep_merge(merged, layer)
        return merged

    @staticmethod
    def _deep_merge(base: Dict[str, Any], override: Dict[str, Any]) -> Dict[str, Any]:
        result = dict(base)
        for key, value in override.items():
            if isinstance(value, dict) and isinstance(result.get(key), dict):
                result[key] = ConfigUtils._deep_merge(result[key], value)
            else:
                result[key] = value
        return result

    @staticmethod
    def get_nested_value(config: Dict[str, Any], key_path: str, default: Any = None) -> Any:
        """按 "run.dim" 形式的路径取值, 路径不存在时返回 default"""
        node: Any = config
        for key in key_path.split("."):
            if not isinstance(node, dict) or key not in node:
                return default
            node = node[key]
        return node

    @staticmethod
    def set_nested_value(config: Dict[str, Any], key_path: str, value: Any) -> None:
        """按路径写值, 缺失的中间层自动创建"""
        *parents, leaf = key_path.split(".")
        node = config
        for key in parents:
            node = node.setdefault(key, {})
        node[leaf] = value

    @staticmethod
    def validate_config(
        config: Dict[str, Any],
        schema: Optional[Dict[str, Any]] = None
    ) -> bool:
        """
        验证配置是否符合模式

        Args:
            config: 配置字典
            schema: 模式字典, 默认使用 get_config_schema()

        Returns:
            是否有效

        Raises:
            ConfigurationError: 验证失败
        """
        if schema is None:
            schema = ConfigUtils.get_config_schema()
        return ConfigUtils._validate_recursive(config, schema, "")

    @staticmethod
    def _validate_recursive(
        config: Dict[str, Any],
        schema: Dict[str, Any],
        path: str
    ) -> bool:
        """递归验证配置"""
        for key, schema_value in schema.items():
            current_path = f"{path}.{key}" if path else key

            if key not in config:
                if isinstance(schema_value, dict) and schema_value.get("required", False):
                    raise ConfigurationError(f"缺少必需的配置项: {current_path}", config_key=current_path)
                continue

            config_value = config[key]
            if not isinstance(schema_value, dict):
                continue
            if config_value is None and schema_value.get("nullable", False):
                continue

            if "type" in schema_value:
                expected_type = schema_value["type"]
                # bool 是 int 的子类, 单独排除
                if isinstance(config_value, bool) and expected_type in (int, float):
                    raise ConfigurationError(
                        f"配置项 {current_path} 类型错误，期望 {expected_type.__name__}，实际 bool",
                        config_key=current_path
                    )
                if not isinstance(config_value, expected_type):
                    names = (
                        "/".join(t.__name__ for t in expected_type)
                        if isinstance(expected_type, tuple) else expected_type.__name__
                    )
                    raise ConfigurationError(
                        f"配置项 {current_path} 类型错误，期望 {names}，实际 {type(config_value).__name__}",
                        config_key=current_path
                    )

            if "choices" in schema_value and config_value not in schema_value["choices"]:
                raise ConfigurationError(
                    f"配置项 {current_path} 值无效，必须是 {schema_value['choices']} 中的一个",
                    config_key=current_path
                )

            if "min" in schema_value and config_value < schema_value["min"]:
                raise ConfigurationError(
                    f"配置项 {current_path} 值太小，最小值为 {schema_value['min']}",
                    config_key=current_path
                )

            if "max" in schema_value and config_value > schema_value["max"]:
                raise ConfigurationError(
                    f"配置项 {current_path} 值太大，最大值为 {schema_value['max']}",
                    config_key=current_path
                )

            if "schema" in schema_value and isinstance(config_value, dict):
                ConfigUtils._validate_recursive(config_value, schema_value["schema"], current_path)

        return True

    @staticmethod
    def load_env_config(prefix: str = ENV_PREFIX) -> Dict[str, str]:
        """
        从环境变量加载配置

        Args:
            prefix: 环境变量前缀

        Returns:
            环境变量配置字典 (键为去掉前缀后的小写名称)
        """
        env_config = {}
        for key, value in os.environ.items():
            if key.startswith(prefix) and value != "":
                env_config[key[len(prefix):].lower()] = value
        return env_config

    @staticmethod
    def create_default_config() -> Dict[str, Any]:
        """
        创建默认配置

        Returns:
            默认配置字典
        """
        return {
            "run": {
                "dim": DEFAULT_DIM,
                "mode": "both",
                "seed_n": None,
                "max_n": DEFAULT_MAX_N,
                "jobs": 1,
                "out": "distset_catalog.jsonl",
                "format": "tsv",
                "hereditary_prefilter": True,
                "survival": "real",
                "count_classes": False,
            },
            "logging": {
                "level": "INFO",
                "file": None,
                "json": False,
            },
            "solver": {
                "realization_tolerance": DEFAULT_REALIZATION_TOLERANCE,
            },
        }

    @staticmethod
    def get_config_schema() -> Dict[str, Any]:
        """
        获取配置验证模式

        Returns:
            配置验证模式
        """
        return {
            "run": {
                "type": dict,
                "schema": {
                    "dim": {"type": int, "min": 1, "max": 6},
                    "mode": {"type": str, "choices": ["spherical", "general", "both"]},
                    "seed_n": {"type": int, "min": 3, "max": 8, "nullable": True},
                    "max_n": {"type": int, "min": 2, "max": 12},
                    "jobs": {"type": int, "min": 1},
                    "out": {"type": str},
                    "format": {"type": str, "choices": ["tsv", "json"]},
                    "hereditary_prefilter": {"type": bool},
                    "survival": {"type": str, "choices": ["real", "complex"]},
                    "count_classes": {"type": bool},
                }
            },
            "logging": {
                "type": dict,
                "schema": {
                    "level": {"type": str, "choices": ["DEBUG", "INFO", "WARNING", "ERROR"]},
                    "file": {"type": str, "nullable": True},
                    "json": {"type": bool},
                }
            },
            "solver": {
                "type": dict,
                "schema": {
                    "realization_tolerance": {"type": float, "min": 0.0, "max": 1e-3},
                }
            },
        }

    @staticmethod
    def resolve_config(
        config_path: Optional[Union[str, Path]] = None,
        env_config: Optional[Dict[str, str]] = None
    ) -> Dict[str, Any]:
        """
        合并默认值、配置文件与环境变量

        Args:
            config_path: 可选配置文件路径
            env_config: 环境变量配置, None 时读取当前进程环境

        Returns:
            合并后的完整配置字典
        """
        file_config = ConfigUtils.load_config(config_path) if config_path else {}
        ConfigUtils.validate_config(file_config)

        if env_config is None:
            env_config = ConfigUtils.load_env_config()
        env_section: Dict[str, Any] = {"run": {}}
        for key, value in env_config.items():
            if key in _ENV_RUN_KEYS:
                env_section["run"][key] = value
            elif key == "log_level":
                env_section.setdefault("logging", {})["level"] = value.upper()

        merged = ConfigUtils.merge_configs(
            ConfigUtils.create_default_config(), file_config, env_section
        )

        catalog_dir = env_config.get("catalog_dir")
        out = merged["run"].get("out")
        if catalog_dir and out and not Path(str(out)).is_absolute():
            merged["run"]["out"] = str(Path(catalog_dir) / str(out))
        return merged

    @staticmethod
    def build_run_config(
        config: Dict[str, Any],
        overrides: Optional[Dict[str, Any]] = None
    ) -> RunConfig:
        """
        由配置字典与命令行覆盖项构造运行配置

        Args:
            config: resolve_config() 的结果
            overrides: 命令行参数, 值为 None 的项被忽略

        Returns:
            校验后的 RunConfig

        Raises:
            ConfigurationError: 参数越界或组合不合法
        """
        run_section = dict(config.get("run", {}))
        for key, value in (overrides or {}).items():
            if value is not None:
                run_section[key] = value
        try:
            return RunConfig(**run_section)
        except PydanticValidationError as e:
            first = e.errors()[0] if e.errors() else {}
            key = ".".join(str(p) for p in first.get("loc", ())) or None
            raise ConfigurationError(f"运行配置无效: {first.get('msg', e)}", config_key=key)


__all__ = ["ConfigUtils", "ENV_PREFIX"]

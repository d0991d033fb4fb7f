#!/usr/bin/env python3
# -*- coding: utf-8 -*-
"""
DistSet - 配置管理测试
"""

from pathlib import Path

import pytest
from pydantic import ValidationError as PydanticValidationError

from distset.core.exceptions import ConfigurationError
from distset.core.types import RunConfig, RunMode, SurvivalCriterion
from distset.utils.config_utils import ConfigUtils


class TestConfigFiles:
    """配置文件读写"""

    @pytest.mark.parametrize("name", ["config.yaml", "config.json"])
    def test_save_and_load(self, tmp_path, name):
        path = tmp_path / name
        config = ConfigUtils.create_default_config()
        ConfigUtils.save_config(config, path)
        assert ConfigUtils.load_config(path) == config

    def test_missing_file(self, tmp_path):
        with pytest.raises(ConfigurationError):
            ConfigUtils.load_config(tmp_path / "missing.yaml")

    def test_top_level_must_be_mapping(self, tmp_path):
        path = tmp_path / "list.yaml"
        path.write_text("- 1\n- 2\n", encoding="utf-8")
        with pytest.raises(ConfigurationError):
            ConfigUtils.load_config(path)

    def test_nested_values(self):
        config = ConfigUtils.create_default_config()
        assert ConfigUtils.get_nested_value(config, "run.dim") == 4
        assert ConfigUtils.get_nested_value(config, "run.unknown", "x") == "x"
        ConfigUtils.set_nested_value(config, "solver.extra.depth", 3)
        assert config["solver"]["extra"]["depth"] == 3

    def test_merge(self):
        merged = ConfigUtils.merge_configs({"run": {"dim": 4, "jobs": 1}}, {"run": {"dim": 3}})
        assert merged == {"run": {"dim": 3, "jobs": 1}}


class TestValidation:
    """配置验证"""

    def test_default_config_is_valid(self):
        assert ConfigUtils.validate_config(ConfigUtils.create_default_config())

    @pytest.mark.parametrize("section", [
        {"run": {"dim": 7}},
        {"run": {"mode": "elliptic"}},
        {"run": {"jobs": True}},
        {"logging": {"level": "TRACE"}},
        {"solver": {"realization_tolerance": 0.5}},
    ])
    def test_invalid_values(self, section):
        with pytest.raises(ConfigurationError):
            ConfigUtils.validate_config(section)

    def test_nullable_seed(self):
        assert ConfigUtils.validate_config({"run": {"seed_n": None}})


class TestResolve:
    """默认值、文件与环境变量的合并"""

    def test_file_overrides_defaults(self, tmp_path):
        path = tmp_path / "config.yaml"
        path.write_text("run:\n  dim: 3\n  max_n: 7\n", encoding="utf-8")
        config = ConfigUtils.resolve_config(path, env_config={})
        assert config["run"]["dim"] == 3
        assert config["run"]["mode"] == "both"

    def test_env_overrides_file(self, tmp_path):
        path = tmp_path / "config.yaml"
        path.write_text("run:\n  jobs: 2\n", encoding="utf-8")
        config = ConfigUtils.resolve_config(path, env_config={"jobs": "4", "log_level": "debug"})
        assert ConfigUtils.build_run_config(config).jobs == 4
        assert config["logging"]["level"] == "DEBUG"

    def test_catalog_dir(self, tmp_path):
        config = ConfigUtils.resolve_config(env_config={"catalog_dir": str(tmp_path)})
        assert Path(config["run"]["out"]) == tmp_path / "distset_catalog.jsonl"

    def test_process_environment(self, monkeypatch):
        monkeypatch.setenv("DISTSET_MAX_N", "9")
        assert ConfigUtils.load_env_config() == {"max_n": "9"}
        assert ConfigUtils.build_run_config(ConfigUtils.resolve_config()).max_n == 9

    def test_invalid_file(self, tmp_path):
        path = tmp_path / "config.json"
        path.write_text('{"run": {"format": "csv"}}', encoding="utf-8")
        with pytest.raises(ConfigurationError):
            ConfigUtils.resolve_config(path, env_config={})


class TestRunConfig:
    """运行配置"""

    def test_defaults(self):
        config = RunConfig()
        assert config.dim == 4
        assert config.seed_n == 6
        assert config.max_n == 11
        assert config.mode is RunMode.BOTH
        assert config.prefilter_active

    def test_seed_follows_dimension(self):
        assert RunConfig(dim=2, max_n=5).seed_n == 4

    def test_complex_criterion_disables_prefilter(self):
        config = RunConfig(survival="complex")
        assert config.survival is SurvivalCriterion.COMPLEX
        assert not config.prefilter_active

    @pytest.mark.parametrize("kwargs", [
        {"dim": 4, "seed_n": 5},
        {"dim": 7},
        {"dim": 4, "seed_n": 9, "max_n": 11},
        {"dim": 4, "max_n": 5},
        {"jobs": 0},
    ])
    def test_invalid(self, kwargs):
        with pytest.raises(PydanticValidationError):
            RunConfig(**kwargs)

    def test_overrides(self):
        config = ConfigUtils.create_default_config()
        run = ConfigUtils.build_run_config(config, {"dim": 3, "max_n": None, "mode": "spherical"})
        assert run.dim == 3
        assert run.seed_n == 5
        assert run.max_n == 11
        assert run.mode is RunMode.SPHERICAL

    def test_override_errors(self):
        config = ConfigUtils.create_default_config()
        with pytest.raises(ConfigurationError) as info:
            ConfigUtils.build_run_config(config, {"seed_n": 3})
        assert "运行配置无效" in str(info.value)

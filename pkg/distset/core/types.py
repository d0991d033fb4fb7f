#!/usr/bin/env python3
# -*- coding: utf-8 -*-
"""
DistSet - 核心类型定义

定义系统中使用的枚举、运行配置以及目录记录的数据结构。
"""

from dataclasses import dataclass, field
from enum import Enum
from pathlib import Path
from typing import Any, Dict, List, Optional

from pydantic import BaseModel, ConfigDict, Field, model_validator


class Mode(str, Enum):
    """求解模式枚举"""
    SPHERICAL = "spherical"
    GENERAL = "general"


class RunMode(str, Enum):
    """分类运行模式枚举"""
    SPHERICAL = "spherical"
    GENERAL = "general"
    BOTH = "both"

    def modes(self) -> List[Mode]:
        """展开为具体的求解模式"""
        if self is RunMode.BOTH:
            return [Mode.SPHERICAL, Mode.GENERAL]
        return [Mode(self.value)]


class Orientation(str, Enum):
    """解的归属方向: 边为短距离时归于图本身, 否则归于补图"""
    GRAPH = "graph"
    COMPLEMENT = "complement"


class OutputFormat(str, Enum):
    """输出格式枚举"""
    TSV = "tsv"
    JSON = "json"


class SurvivalCriterion(str, Enum):
    """存活判据: 实解存在或复理想非单位理想"""
    REAL = "real"
    COMPLEX = "complex"


# 类型别名
GraphCode = str
ClassKey = str

# 常用常量
DEFAULT_DIM = 4
MAX_DIM = 6
MAX_ORDER = 12
MAX_ENUM_ORDER = 8
DEFAULT_MAX_N = 11
DEFAULT_SIGN_FUEL = 256
DEFAULT_REALIZATION_TOLERANCE = 1e-9
TOOL_VERSION = "1.0.0"


class RunConfig(BaseModel):
    """分类运行配置"""

    model_config = ConfigDict(use_enum_values=False, validate_assignment=False)

    dim: int = Field(default=DEFAULT_DIM, ge=1, le=MAX_DIM)
    mode: RunMode = RunMode.BOTH
    seed_n: Optional[int] = None
    max_n: int = Field(default=DEFAULT_MAX_N, ge=2, le=MAX_ORDER)
    jobs: int = Field(default=1, ge=1)
    out: Path = Path("distset_catalog.jsonl")
    format: OutputFormat = OutputFormat.TSV
    hereditary_prefilter: bool = True
    survival: SurvivalCriterion = SurvivalCriterion.REAL
    count_classes: bool = False
    resume: bool = False

    @model_validator(mode="after")
    def _check_levels(self) -> "RunConfig":
        if self.seed_n is None:
            self.seed_n = self.dim + 2
        if self.seed_n < self.dim + 2:
            raise ValueError(
                f"seed_n={self.seed_n} 小于 dim+2={self.dim + 2}, 零维假设不成立"
            )
        if self.seed_n > MAX_ENUM_ORDER:
            raise ValueError(f"seed_n 不能超过 {MAX_ENUM_ORDER}")
        if self.seed_n > self.max_n:
            raise ValueError(f"seed_n={self.seed_n} 大于 max_n={self.max_n}")
        return self

    @property
    def prefilter_active(self) -> bool:
        """遗传预过滤仅在实解判据下可靠"""
        return self.hereditary_prefilter and self.survival is SurvivalCriterion.REAL


@dataclass
class SolutionRecord:
    """目录中的单个解记录"""
    a_star: str
    b_star: str
    psd: bool
    rank: Optional[int]
    orientation: Orientation
    admissible: bool
    jspherical: Optional[bool] = None  # 仅球面模式
    spherical_flag: Optional[bool] = None  # 仅一般模式
    family: bool = False  # 低维集合所在直线族的代表点

    def to_dict(self) -> Dict[str, Any]:
        """转换为字典格式"""
        return {
            "a_star": self.a_star,
            "b_star": self.b_star,
            "psd": self.psd,
            "rank": self.rank,
            "orientation": self.orientation.value,
            "admissible": self.admissible,
            "jspherical": self.jspherical,
            "spherical_flag": self.spherical_flag,
            "family": self.family,
        }

    @classmethod
    def from_dict(cls, data: Dict[str, Any]) -> "SolutionRecord":
        """从字典恢复"""
        return cls(
            a_star=data["a_star"],
            b_star=data["b_star"],
            psd=bool(data["psd"]),
            rank=data.get("rank"),
            orientation=Orientation(data["orientation"]),
            admissible=bool(data["admissible"]),
            jspherical=data.get("jspherical"),
            spherical_flag=data.get("spherical_flag"),
            family=bool(data.get("family", False)),
        )


@dataclass
class AtlasEntry:
    """分类目录中的一个补图类条目"""
    n: int
    class_key: ClassKey
    mode: Mode
    survived: bool
    solutions: List[SolutionRecord] = field(default_factory=list)
    set_count: int = 0
    nonspherical_count: int = 0
    low_rank_count: int = 0
    self_complementary: bool = False
    parent: Optional[ClassKey] = None
    pruned_by: Optional[ClassKey] = None
    indefinite_only: bool = False
    continuum: bool = False
    survived_complex: Optional[bool] = None
    survival_note: Optional[str] = None
    one_distance: bool = False

    @property
    def admissible_solutions(self) -> List[SolutionRecord]:
        return [s for s in self.solutions if s.admissible]

    def to_dict(self) -> Dict[str, Any]:
        """转换为字典格式"""
        return {
            "n": self.n,
            "class_key": self.class_key,
            "mode": self.mode.value,
            "survived": self.survived,
            "solutions": [s.to_dict() for s in self.solutions],
            "set_count": self.set_count,
            "nonspherical_count": self.nonspherical_count,
            "low_rank_count": self.low_rank_count,
            "self_complementary": self.self_complementary,
            "parent": self.parent,
            "pruned_by": self.pruned_by,
            "indefinite_only": self.indefinite_only,
            "continuum": self.continuum,
            "survived_complex": self.survived_complex,
            "survival_note": self.survival_note,
            "one_distance": self.one_distance,
        }

    @classmethod
    def from_dict(cls, data: Dict[str, Any]) -> "AtlasEntry":
        """从字典恢复"""
        return cls(
            n=int(data["n"]),
            class_key=data["class_key"],
            mode=Mode(data["mode"]),
            survived=bool(data["survived"]),
            solutions=[SolutionRecord.from_dict(s) for s in data.get("solutions", [])],
            set_count=int(data.get("set_count", 0)),
            nonspherical_count=int(data.get("nonspherical_count", 0)),
            low_rank_count=int(data.get("low_rank_count", 0)),
            self_complementary=bool(data.get("self_complementary", False)),
            parent=data.get("parent"),
            pruned_by=data.get("pruned_by"),
            indefinite_only=bool(data.get("indefinite_only", False)),
            continuum=bool(data.get("continuum", False)),
            survived_complex=data.get("survived_complex"),
            survival_note=data.get("survival_note"),
            one_distance=bool(data.get("one_distance", False)),
        )


@dataclass
class LevelSummary:
    """单个点数 n 的汇总行"""
    n: int
    graph_classes: Optional[int] = None
    surviving_general: Optional[int] = None
    surviving_spherical: Optional[int] = None
    spherical_sets: Optional[int] = None
    nonspherical_sets: Optional[int] = None
    low_rank_spherical_sets: Optional[int] = None

    def to_dict(self) -> Dict[str, Any]:
        """转换为字典格式"""
        return {
            "n": self.n,
            "graph_classes": self.graph_classes,
            "surviving_general": self.surviving_general,
            "surviving_spherical": self.surviving_spherical,
            "spherical_sets": self.spherical_sets,
            "nonspherical_sets": self.nonspherical_sets,
            "low_rank_spherical_sets": self.low_rank_spherical_sets,
        }


@dataclass
class AtlasSummary:
    """分类汇总表"""
    dim: int
    levels: Dict[int, LevelSummary] = field(default_factory=dict)

    def level(self, n: int) -> LevelSummary:
        if n not in self.levels:
            self.levels[n] = LevelSummary(n=n)
        return self.levels[n]

    def to_dict(self) -> Dict[str, Any]:
        """转换为字典格式"""
        return {
            "dim": self.dim,
            "levels": [self.levels[n].to_dict() for n in sorted(self.levels)],
        }


# 导出所有类型
__all__ = [
    # 枚举类型
    "Mode",
    "RunMode",
    "Orientation",
    "OutputFormat",
    "SurvivalCriterion",

    # 配置类
    "RunConfig",

    # 目录记录
    "SolutionRecord",
    "AtlasEntry",
    "LevelSummary",
    "AtlasSummary",

    # 类型别名与常量
    "GraphCode",
    "ClassKey",
    "DEFAULT_DIM",
    "MAX_DIM",
    "MAX_ORDER",
    "MAX_ENUM_ORDER",
    "DEFAULT_MAX_N",
    "DEFAULT_SIGN_FUEL",
    "DEFAULT_REALIZATION_TOLERANCE",
    "TOOL_VERSION",
]

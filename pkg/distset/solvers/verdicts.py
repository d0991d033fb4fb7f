#!/usr/bin/env python3
# -*- coding: utf-8 -*-
"""
DistSet - 判定结果数据结构

球面与一般两种模式的单图判定结果, 以及逐点验证报告。
"""

from dataclasses import dataclass, field
from typing import Any, Dict, List, Optional

from sympy import Poly

from distset.algebra.realalg import RealAlg
from distset.algebra.solver import SolutionPoint
from distset.core.types import Mode, Orientation, SolutionRecord
from distset.graphs.graph import Graph, encode


@dataclass
class SphericalSolution:
    """
    球面模式的解

    Attributes:
        point: 解点 (a*, b*)
        psd: G(a*, b*) 是否半正定
        rank: 半正定时的秩
        orientation: 边为短距离 (a > b) 时归于图本身
        jspherical: 图本身方向上的短距离参数是否为 0
        family: 是否为直线族 (低维集合) 的代表点
    """
    point: SolutionPoint
    psd: bool
    rank: Optional[int]
    orientation: Orientation
    jspherical: bool
    admissible: bool
    family: bool = False

    @property
    def a(self) -> RealAlg:
        return self.point.a

    @property
    def b(self) -> RealAlg:
        return self.point.b

    def to_record(self) -> SolutionRecord:
        a_lit, b_lit = self.point.literals()
        return SolutionRecord(
            a_star=a_lit,
            b_star=b_lit,
            psd=self.psd,
            rank=self.rank,
            orientation=self.orientation,
            admissible=self.admissible,
            jspherical=self.jspherical,
            family=self.family,
        )


@dataclass
class SphericalVerdict:
    """球面模式的单图判定"""
    graph: Graph
    dim: int
    solutions: List[SphericalSolution] = field(default_factory=list)
    survived: bool = False
    indefinite_only: bool = False
    survived_complex: bool = False
    lines: List[Poly] = field(default_factory=list)

    mode = Mode.SPHERICAL

    @property
    def admissible_solutions(self) -> List[SphericalSolution]:
        return [s for s in self.solutions if s.admissible]

    @property
    def code(self) -> str:
        return encode(self.graph)


@dataclass
class GeneralSolution:
    """
    一般模式的解, a 归一化为 1

    Attributes:
        point: 解点 (1, b*)
        spherical_flag: 点集是否位于某个球面上 (仅对可容许解计算)
    """
    point: SolutionPoint
    psd: bool
    rank: Optional[int]
    orientation: Orientation
    admissible: bool
    spherical_flag: Optional[bool] = None

    @property
    def b(self) -> RealAlg:
        return self.point.b

    def to_record(self) -> SolutionRecord:
        a_lit, b_lit = self.point.literals()
        return SolutionRecord(
            a_star=a_lit,
            b_star=b_lit,
            psd=self.psd,
            rank=self.rank,
            orientation=self.orientation,
            admissible=self.admissible,
            spherical_flag=self.spherical_flag,
        )


@dataclass
class GeneralVerdict:
    """一般模式的单图判定"""
    graph: Graph
    dim: int
    solutions: List[GeneralSolution] = field(default_factory=list)
    survived: bool = False
    continuum: bool = False
    indefinite_only: bool = False
    survived_complex: bool = False

    mode = Mode.GENERAL

    @property
    def admissible_solutions(self) -> List[GeneralSolution]:
        return [s for s in self.solutions if s.admissible]

    @property
    def code(self) -> str:
        return encode(self.graph)


@dataclass
class ValidityReport:
    """单点验证报告"""
    graph_code: str
    mode: Mode
    dim: int
    a_star: str
    b_star: str
    minors_vanish: bool
    psd: bool
    rank: Optional[int]
    orientation: Optional[Orientation] = None
    jspherical: Optional[bool] = None
    spherical_flag: Optional[bool] = None
    one_distance: bool = False
    swapped: bool = False
    notes: List[str] = field(default_factory=list)

    @property
    def valid(self) -> bool:
        """数学验证是否通过: 主子式为零, 半正定且秩不超过维数"""
        return self.minors_vanish and self.psd and self.rank is not None and self.rank <= self.dim

    def to_dict(self) -> Dict[str, Any]:
        """转换为字典格式"""
        return {
            "graph_code": self.graph_code,
            "mode": self.mode.value,
            "dim": self.dim,
            "a_star": self.a_star,
            "b_star": self.b_star,
            "minors_vanish": self.minors_vanish,
            "psd": self.psd,
            "rank": self.rank,
            "orientation": self.orientation.value if self.orientation else None,
            "jspherical": self.jspherical,
            "spherical_flag": self.spherical_flag,
            "one_distance": self.one_distance,
            "swapped": self.swapped,
            "valid": self.valid,
            "notes": list(self.notes),
        }


__all__ = [
    "SphericalSolution",
    "SphericalVerdict",
    "GeneralSolution",
    "GeneralVerdict",
    "ValidityReport",
]

#!/usr/bin/env python3
# -*- coding: utf-8 -*-
"""
DistSet - 接口定义模块

定义求解器与目录存储的协议接口及抽象基类。
"""

from abc import ABC, abstractmethod
from typing import TYPE_CHECKING, Any, Dict, Iterable, List, Optional, Protocol

from distset.core.types import AtlasEntry, Mode, SurvivalCriterion

if TYPE_CHECKING:
    from distset.graphs.graph import Graph


class ICatalogStore(Protocol):
    """目录存储接口"""

    def write_level(self, n: int, mode: Mode, entries: Iterable[AtlasEntry]) -> None:
        """写入一个完整层级"""
        ...

    def completed_levels(self) -> Dict[Mode, List[int]]:
        """已完整写入的层级"""
        ...


class BaseSolver(ABC):
    """求解器基类"""

    mode: Mode

    def __init__(
        self,
        dim: int,
        name: Optional[str] = None,
        config: Optional[Dict[str, Any]] = None,
    ):
        self.dim = dim
        self.name = name or self.__class__.__name__
        self.config = config or {}
        self.survival = SurvivalCriterion(self.config.get("survival", SurvivalCriterion.REAL))
        self._stats = {
            "graphs_solved": 0,
            "surviving": 0,
            "admissible_solutions": 0,
            "total_time": 0.0,
        }

    @abstractmethod
    def solve(self, graph: "Graph") -> Any:
        """求解单个图"""
        pass

    def get_status(self) -> Dict[str, Any]:
        """获取求解器状态"""
        return {
            "name": self.name,
            "mode": self.mode.value,
            "dim": self.dim,
            "survival": self.survival.value,
            "stats": self._stats.copy(),
        }

    def _update_stats(self, survived: bool, admissible: int, elapsed: float) -> None:
        """更新统计"""
        self._stats["graphs_solved"] += 1
        if survived:
            self._stats["surviving"] += 1
        self._stats["admissible_solutions"] += admissible
        self._stats["total_time"] += elapsed


__all__ = [
    "ICatalogStore",
    "BaseSolver",
]

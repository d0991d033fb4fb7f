#!/usr/bin/env python3
# -*- coding: utf-8 -*-
"""
DistSet - 分类引擎

逐层回溯搜索: 在种子层级枚举全部补图类, 此后每层只扩展上一层存活的类
(两个方向各加一个顶点), 按 class_key 去重后求解。两距离集的诱导子集仍是
两距离集, 所以可表示的图一定由存活的类扩展而来。
"""

import time
from concurrent.futures import ProcessPoolExecutor
from typing import Dict, List, Optional, Set, Tuple

from distset.atlas.report_generator import compute_summary
from distset.algebra.realalg import RealAlg
from distset.core.exceptions import CertificationError
from distset.core.interfaces import ICatalogStore
from distset.core.types import (
    MAX_ENUM_ORDER,
    AtlasEntry,
    AtlasSummary,
    ClassKey,
    Mode,
    RunConfig,
    SurvivalCriterion,
)
from distset.graphs.canonical import class_key, enumerate_classes, is_self_complementary
from distset.graphs.graph import Graph, complement, decode, extensions, vertex_deleted_subgraphs
from distset.solvers.general_solver import solve_general
from distset.solvers.set_counting import count_sets
from distset.solvers.spherical_solver import solve_spherical
from distset.solvers.verification import verify_point
from distset.utils.logging_utils import LogContext, get_logger

logger = get_logger("atlas.engine")

# 求解任务: (class_key, n, mode, dim, parent)
Task = Tuple[ClassKey, int, str, int, Optional[ClassKey]]


def solve_class(
    graph: Graph,
    mode: Mode,
    dim: int,
    key: Optional[ClassKey] = None,
    parent: Optional[ClassKey] = None,
) -> AtlasEntry:
    """
    求解一个补图类, 生成目录条目

    Args:
        graph: 类的代表图 (通常为 class_key 解码所得)
        mode: 求解模式
        dim: 维数 d
        key: 已知的 class_key
        parent: 上一层的来源类
    """
    key = key or class_key(graph)
    n = graph.order
    self_complementary = is_self_complementary(graph)
    if graph.is_complete or graph.is_empty:
        return AtlasEntry(
            n=n, class_key=key, mode=mode, survived=False, parent=parent,
            self_complementary=False, one_distance=True, survived_complex=False,
        )

    def low_rank(solution) -> bool:
        return solution.rank is not None and solution.rank < dim

    if mode is Mode.SPHERICAL:
        verdict = solve_spherical(graph, dim)
        nonspherical = 0
    else:
        verdict = solve_general(graph, dim)
        nonspherical = count_sets(verdict, nonspherical_only=True, self_complementary=self_complementary)
    entry = AtlasEntry(
        n=n,
        class_key=key,
        mode=mode,
        survived=verdict.survived,
        solutions=[s.to_record() for s in verdict.solutions],
        set_count=count_sets(verdict, self_complementary=self_complementary),
        nonspherical_count=nonspherical,
        low_rank_count=count_sets(verdict, predicate=low_rank, self_complementary=self_complementary),
        self_complementary=self_complementary,
        parent=parent,
        indefinite_only=verdict.indefinite_only,
        continuum=getattr(verdict, "continuum", False),
        survived_complex=verdict.survived_complex,
    )
    if entry.survived != entry.survived_complex:
        entry.survival_note = f"实解判据={entry.survived}, 复理想判据={entry.survived_complex}"
    return entry


def _solve_entry(task: Task) -> AtlasEntry:
    """进程池工作函数"""
    key, n, mode_value, dim, parent = task
    return solve_class(decode(key, n), Mode(mode_value), dim, key=key, parent=parent)


def reverify_entry(entry: AtlasEntry, dim: int) -> None:
    """
    按目录中的字面量重新验证全部可容许解

    Raises:
        CertificationError: 某个解未通过验证
    """
    graph = decode(entry.class_key, entry.n)
    for record in entry.admissible_solutions:
        report = verify_point(
            graph,
            RealAlg.from_literal(record.a_star),
            RealAlg.from_literal(record.b_star),
            dim,
            entry.mode,
        )
        if not report.valid or report.swapped:
            raise CertificationError(
                f"{entry.class_key} 的解 ({record.a_star}, {record.b_star}) 未通过重新验证",
                graph_code=entry.class_key,
                dim=dim,
            )


def hereditary_violations(levels: Dict[int, List[AtlasEntry]]) -> List[Tuple[ClassKey, ClassKey]]:
    """
    遗传封闭性检查: 存活类的每个少一点的诱导子图类都应在上一层存活

    Returns:
        (存活类, 未存活的子图类) 列表
    """
    violations = []
    for n in sorted(levels):
        if n - 1 not in levels:
            continue
        below = {e.class_key for e in levels[n - 1] if e.survived}
        for entry in levels[n]:
            if not entry.survived:
                continue
            for sub in vertex_deleted_subgraphs(decode(entry.class_key, n)):
                sub_key = class_key(sub)
                if sub_key not in below:
                    violations.append((entry.class_key, sub_key))
    return violations


class AtlasEngine:
    """分类引擎"""

    def __init__(self, config: RunConfig, catalog: Optional[ICatalogStore] = None, reverify: bool = True):
        self.config = config
        self.catalog = catalog
        self.reverify = reverify
        self.logger = logger
        self._stats = {
            "levels": 0,
            "classes_solved": 0,
            "classes_pruned": 0,
            "total_time": 0.0,
        }

    @property
    def dim(self) -> int:
        return self.config.dim

    def get_status(self) -> Dict[str, object]:
        """获取引擎状态"""
        return {
            "dim": self.dim,
            "mode": self.config.mode.value,
            "jobs": self.config.jobs,
            "stats": self._stats.copy(),
        }

    def seed(self, n0: int) -> List[Graph]:
        """种子层级的全部补图类代表"""
        return enumerate_classes(n0)

    def _apply_criterion(self, entry: AtlasEntry) -> AtlasEntry:
        if self.config.survival is SurvivalCriterion.COMPLEX and entry.survived_complex is not None:
            entry.survived = entry.survived_complex
        if entry.survival_note:
            self.logger.info(f"{entry.class_key}: {entry.survival_note}", extra={"n": entry.n})
        return entry

    def _run_tasks(self, tasks: List[Task]) -> List[AtlasEntry]:
        if self.config.jobs > 1 and len(tasks) > 1:
            with ProcessPoolExecutor(max_workers=self.config.jobs) as pool:
                entries = list(pool.map(_solve_entry, tasks, chunksize=1))
        else:
            entries = [_solve_entry(task) for task in tasks]
        self._stats["classes_solved"] += len(entries)
        return [self._apply_criterion(e) for e in entries]

    def seed_level(self, mode: Mode) -> List[AtlasEntry]:
        """种子层级全部类求解"""
        n0 = self.config.seed_n
        tasks = [(class_key(g), n0, mode.value, self.dim, None) for g in self.seed(n0)]
        return sorted(self._run_tasks(tasks), key=lambda e: e.class_key)

    def candidates(self, survivors: List[AtlasEntry]) -> Dict[ClassKey, ClassKey]:
        """存活类的单点扩展, 按 class_key 去重, 值为来源类"""
        found: Dict[ClassKey, ClassKey] = {}
        for entry in sorted(survivors, key=lambda e: e.class_key):
            graph = decode(entry.class_key, entry.n)
            for base in (graph, complement(graph)):
                for ext in extensions(base):
                    found.setdefault(class_key(ext), entry.class_key)
        return found

    def step(self, survivors: List[AtlasEntry], mode: Mode) -> List[AtlasEntry]:
        """
        由第 n 层存活类得到第 n+1 层条目

        Args:
            survivors: 第 n 层的存活条目
            mode: 求解模式
        """
        if not survivors:
            return []
        n = survivors[0].n
        surviving: Set[ClassKey] = {e.class_key for e in survivors}
        entries: List[AtlasEntry] = []
        tasks: List[Task] = []
        for key, parent in sorted(self.candidates(survivors).items()):
            pruned_by = None
            if self.config.prefilter_active:
                graph = decode(key, n + 1)
                pruned_by = next(
                    (k for k in (class_key(s) for s in vertex_deleted_subgraphs(graph)) if k not in surviving),
                    None,
                )
            if pruned_by is not None:
                entries.append(AtlasEntry(
                    n=n + 1, class_key=key, mode=mode, survived=False,
                    parent=parent, pruned_by=pruned_by,
                    self_complementary=is_self_complementary(decode(key, n + 1)),
                ))
            else:
                tasks.append((key, n + 1, mode.value, self.dim, parent))
        self._stats["classes_pruned"] += len(entries)
        entries.extend(self._run_tasks(tasks))
        return sorted(entries, key=lambda e: e.class_key)

    def run_mode(
        self,
        mode: Mode,
        resumed: Optional[Dict[int, List[AtlasEntry]]] = None,
    ) -> Dict[int, List[AtlasEntry]]:
        """
        单一模式的全部层级

        Args:
            mode: 求解模式
            resumed: 从目录恢复的已完成层级

        Returns:
            {n: 条目列表}
        """
        levels: Dict[int, List[AtlasEntry]] = dict(resumed or {})
        seed_n, max_n = self.config.seed_n, self.config.max_n
        for n in range(seed_n, max_n + 1):
            if n in levels:
                self.logger.info(f"层级 n={n} ({mode.value}) 从目录恢复")
                continue
            with LogContext(self.logger, f"层级 n={n} ({mode.value})", n=n, mode=mode.value):
                if n == seed_n:
                    entries = self.seed_level(mode)
                else:
                    survivors = [e for e in levels[n - 1] if e.survived]
                    entries = self.step(survivors, mode)
                if self.reverify:
                    for entry in entries:
                        reverify_entry(entry, self.dim)
            levels[n] = entries
            self._stats["levels"] += 1
            if self.catalog is not None:
                self.catalog.write_level(n, mode, entries)
            self.logger.info(
                f"层级 n={n} ({mode.value}): {len(entries)} 类, "
                f"存活 {sum(e.survived for e in entries)}",
                extra={"n": n, "mode": mode.value}
            )
        return levels

    def full_atlas(
        self,
        resumed: Optional[Dict[Mode, Dict[int, List[AtlasEntry]]]] = None,
    ) -> Tuple[AtlasSummary, List[AtlasEntry]]:
        """
        按配置运行全部模式

        Returns:
            (汇总表, 全部条目按 (n, mode, class_key) 排序)
        """
        start = time.time()
        all_entries: List[AtlasEntry] = []
        for mode in self.config.mode.modes():
            levels = self.run_mode(mode, (resumed or {}).get(mode))
            for n in sorted(levels):
                all_entries.extend(levels[n])
        graph_classes = None
        if self.config.count_classes:
            graph_classes = {
                n: len(enumerate_classes(n))
                for n in range(self.config.seed_n, min(self.config.max_n, MAX_ENUM_ORDER) + 1)
            }
        self._stats["total_time"] += time.time() - start
        all_entries.sort(key=lambda e: (e.n, e.mode.value, e.class_key))
        level_range = range(self.config.seed_n, self.config.max_n + 1)
        return compute_summary(all_entries, self.dim, graph_classes, level_range), all_entries


def seed(n0: int) -> List[Graph]:
    """种子层级的全部补图类代表"""
    return enumerate_classes(n0)


def step(survivors: List[AtlasEntry], dim: int, mode: Mode, **options) -> List[AtlasEntry]:
    """由第 n 层存活类得到第 n+1 层条目"""
    n = survivors[0].n if survivors else dim + 2
    config = RunConfig(dim=dim, mode=mode.value, seed_n=dim + 2, max_n=max(n + 1, dim + 2), **options)
    return AtlasEngine(config, reverify=False).step(survivors, mode)


def full_atlas(dim: int, n_seed: int, n_max: int, **options) -> Tuple[AtlasSummary, List[AtlasEntry]]:
    """两种模式的完整分类"""
    config = RunConfig(dim=dim, seed_n=n_seed, max_n=n_max, **options)
    return AtlasEngine(config).full_atlas()


__all__ = [
    "solve_class",
    "reverify_entry",
    "hereditary_violations",
    "AtlasEngine",
    "seed",
    "step",
    "full_atlas",
]

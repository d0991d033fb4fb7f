#!/usr/bin/env python3
# -*- coding: utf-8 -*-
"""
DistSet - 最小表示维数

mydim(Γ) 为 Γ 存在欧氏表示 (边取较短距离, 非边取较长距离) 的最小维数。
n 个点总可放入 R^(n-1), 因此从 d = 1 起逐维尝试一般模式求解即可。
"""

from typing import Dict, Iterable, List, Optional

from distset.atlas.engine import AtlasEngine
from distset.core.exceptions import DimensionBoundError, NotTwoDistanceGraphError
from distset.core.types import DEFAULT_MAX_N, AtlasEntry, Mode, Orientation, RunConfig
from distset.graphs.canonical import enumerate_isomorphism_classes
from distset.graphs.graph import Graph, encode
from distset.solvers.general_solver import solve_general
from distset.utils.logging_utils import LogContext, get_logger

logger = get_logger("atlas.mydim")


def representable_in(graph: Graph, dim: int) -> bool:
    """Γ 本身 (不是其补图) 能否在 R^dim 中表示"""
    verdict = solve_general(graph, dim)
    if verdict.continuum:
        return True
    return any(s.orientation is Orientation.GRAPH for s in verdict.admissible_solutions)


def mydim(graph: Graph, max_dim: Optional[int] = None) -> int:
    """
    最小表示维数

    Args:
        graph: 非完全非空图
        max_dim: 搜索上界, 缺省为 n-1

    Returns:
        最小维数 d

    Raises:
        NotTwoDistanceGraphError: 完全图或空图
        DimensionBoundError: 在 max_dim 以内不可表示, lower_bound 为 max_dim + 1
    """
    code = encode(graph)
    if graph.is_complete or graph.is_empty:
        raise NotTwoDistanceGraphError("完全图与空图按单距离集处理", graph_code=code)
    n = graph.order
    limit = n - 1 if max_dim is None else min(max_dim, n - 1)
    for dim in range(1, limit + 1):
        if n <= dim + 1 or representable_in(graph, dim):
            logger.debug(f"mydim({code}) = {dim}", extra={"code": code, "dim": dim})
            return dim
    raise DimensionBoundError(
        f"{code} 在 R^{limit} 中不可表示", graph_code=code, dim=limit, lower_bound=limit + 1
    )


def point_set_dim(graph: Graph, max_dim: Optional[int] = None) -> int:
    """同 mydim, 但完全图与空图 (正则单形) 记为 n-1"""
    if graph.is_complete or graph.is_empty:
        return graph.order - 1
    return mydim(graph, max_dim)


def representable_graphs(entry: AtlasEntry) -> int:
    """
    一般模式条目中可在 R^d 表示的图个数

    图本身与其补图分别计数; 自补类只计一次。
    """
    if not entry.survived:
        return 0
    if entry.continuum:
        return 1 if entry.self_complementary else 2
    orientations = {s.orientation for s in entry.admissible_solutions}
    if entry.self_complementary:
        return 1 if orientations else 0
    return len(orientations)


def exact_dim_count(n: int, dim: int) -> int:
    """n 阶图中 mydim 恰为 dim 的个数 (按同构类计)"""
    count = 0
    for graph in enumerate_isomorphism_classes(n):
        try:
            if point_set_dim(graph, dim) == dim:
                count += 1
        except DimensionBoundError:
            continue
    return count


def mydim_census(
    dim: int,
    entries: Optional[Iterable[AtlasEntry]] = None,
    jobs: int = 1,
    max_n: int = DEFAULT_MAX_N,
) -> Dict[int, int]:
    """
    mydim 恰为 dim 的图的个数, 按 n 分组

    n = dim + 1 时逐图计算最小维数; n >= dim + 2 时取一般模式分类中可在 R^dim
    表示的图个数, 与分类汇总表的集合计数口径一致。

    Args:
        dim: 维数
        entries: 已有的一般模式条目, 缺省时重新分类
        jobs: 重新分类时的并行进程数
        max_n: 重新分类的最大点数

    Returns:
        {n: 个数}, 只含非零项
    """
    census: Dict[int, int] = {}
    with LogContext(logger, f"mydim 普查 d={dim}", dim=dim):
        exact = exact_dim_count(dim + 1, dim)
        if exact:
            census[dim + 1] = exact

        if entries is None:
            config = RunConfig(dim=dim, mode="general", max_n=max_n, jobs=jobs)
            levels = AtlasEngine(config, reverify=False).run_mode(Mode.GENERAL)
            general: List[AtlasEntry] = [e for n in sorted(levels) for e in levels[n]]
        else:
            general = [e for e in entries if e.mode is Mode.GENERAL]

        for entry in general:
            if entry.n < dim + 2:
                continue
            count = representable_graphs(entry)
            if count:
                census[entry.n] = census.get(entry.n, 0) + count
    logger.info(f"mydim 普查 d={dim}: 共 {sum(census.values())} 个图", extra={"dim": dim})
    return dict(sorted(census.items()))


__all__ = [
    "representable_in",
    "mydim",
    "point_set_dim",
    "representable_graphs",
    "exact_dim_count",
    "mydim_census",
]

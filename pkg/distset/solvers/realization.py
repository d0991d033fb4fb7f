#!/usr/bin/env python3
# -*- coding: utf-8 -*-
"""
DistSet - 数值实现

把已精确认证的解点实现为 R^d 中的浮点坐标, 仅供人工检查。精确认证
在上游完成, 这里只核对浮点秩与认证秩一致并报告距离残差。
"""

from dataclasses import dataclass
from typing import Any, Dict, Optional

import numpy as np

from distset.algebra.solver import SolutionPoint
from distset.core.exceptions import RankMismatchError
from distset.core.types import DEFAULT_REALIZATION_TOLERANCE, Mode
from distset.gram.charpoly import psd_rank_at
from distset.gram.matrices import candidate_gram, menger_matrix
from distset.graphs.graph import Graph, encode
from distset.utils.logging_utils import get_logger

logger = get_logger("solvers.realization")

# 低于该比例乘以最大特征值的特征值视为零
_EIGEN_RELATIVE = 1e-9


@dataclass
class Realization:
    """浮点实现结果"""
    coordinates: np.ndarray
    rank: int
    edge_distance: float
    non_edge_distance: float
    residual: float

    def to_dict(self) -> Dict[str, Any]:
        return {
            "coordinates": self.coordinates.tolist(),
            "rank": self.rank,
            "edge_distance": self.edge_distance,
            "non_edge_distance": self.non_edge_distance,
            "residual": self.residual,
        }


def _float_matrix(graph: Graph, a: float, b: float, spherical: bool) -> np.ndarray:
    n = graph.order
    if spherical:
        gram = np.full((n, n), b)
        for i, j in graph.edge_list():
            gram[i, j] = gram[j, i] = a
        np.fill_diagonal(gram, 1.0)
        return gram
    distances = np.full((n, n), b)
    for i, j in graph.edge_list():
        distances[i, j] = distances[j, i] = a
    np.fill_diagonal(distances, 0.0)
    base = distances[:-1, -1]
    return (base[:, None] + base[None, :] - distances[:-1, :-1]) / 2


def _squared_distances(coordinates: np.ndarray) -> np.ndarray:
    norms = np.sum(coordinates ** 2, axis=1)
    return norms[:, None] + norms[None, :] - 2 * coordinates @ coordinates.T


def realize(
    graph: Graph,
    point: SolutionPoint,
    dim: int,
    rank: Optional[int] = None,
    tolerance: float = DEFAULT_REALIZATION_TOLERANCE,
) -> Realization:
    """
    浮点实现

    Args:
        graph: 图
        point: 已认证的解点, mode 决定 Gram 或 Menger 矩阵
        dim: 目标维数 d
        rank: 认证秩, 缺省时重新精确计算
        tolerance: 距离平方的最大相对残差

    Returns:
        Realization, 坐标为 n x d 数组

    Raises:
        RankMismatchError: 浮点秩与认证秩不一致, 或残差超出 tolerance
    """
    spherical = point.mode is Mode.SPHERICAL
    code = encode(graph)
    if rank is None:
        matrix = candidate_gram(graph) if spherical else menger_matrix(graph)
        psd, rank = psd_rank_at(matrix, point)
        if not psd:
            raise RankMismatchError("矩阵不是半正定的, 无法实现", graph_code=code, dim=dim)
    if rank > dim:
        raise RankMismatchError(f"认证秩 {rank} 超过维数 {dim}", graph_code=code, dim=dim)

    a, b = point.a.to_float(), point.b.to_float()
    gram = _float_matrix(graph, a, b, spherical)
    eigenvalues, eigenvectors = np.linalg.eigh(gram)
    order = np.argsort(eigenvalues)[::-1]
    eigenvalues, eigenvectors = eigenvalues[order], eigenvectors[:, order]
    scale = max(abs(eigenvalues[0]), 1.0)
    float_rank = int(np.sum(eigenvalues > _EIGEN_RELATIVE * scale))
    if float_rank != rank:
        raise RankMismatchError(
            f"浮点秩 {float_rank} 与认证秩 {rank} 不一致", graph_code=code, dim=dim
        )

    coordinates = eigenvectors[:, :rank] * np.sqrt(np.clip(eigenvalues[:rank], 0.0, None))
    if not spherical:
        coordinates = np.vstack([coordinates, np.zeros((1, rank))])
    coordinates = np.hstack([coordinates, np.zeros((coordinates.shape[0], dim - rank))])

    edge_sq, non_edge_sq = (2 - 2 * a, 2 - 2 * b) if spherical else (a, b)
    target = np.full((graph.order, graph.order), non_edge_sq)
    for i, j in graph.edge_list():
        target[i, j] = target[j, i] = edge_sq
    np.fill_diagonal(target, 0.0)
    actual = _squared_distances(coordinates)
    off_diagonal = ~np.eye(graph.order, dtype=bool)
    residual = float(np.max(np.abs(actual - target)[off_diagonal]) / max(abs(edge_sq), abs(non_edge_sq)))
    if residual > tolerance:
        raise RankMismatchError(
            f"实现残差 {residual:.3e} 超过 {tolerance:.1e}", graph_code=code, dim=dim
        )
    logger.debug(f"{code} 实现完成, 残差 {residual:.3e}", extra={"code": code, "rank": rank})
    return Realization(
        coordinates=coordinates,
        rank=rank,
        edge_distance=float(np.sqrt(edge_sq)),
        non_edge_distance=float(np.sqrt(non_edge_sq)),
        residual=residual,
    )


__all__ = ["Realization", "realize"]

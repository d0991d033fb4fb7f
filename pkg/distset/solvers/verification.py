#!/usr/bin/env python3
# -*- coding: utf-8 -*-
"""
DistSet - 逐点验证

对给定的图与参数 (a*, b*) 只做检查不做求解: 全部 d+1 阶主子式是否精确
为零, 候选矩阵是否半正定, 秩, 归属方向以及球面/J-球面标记。
"""

from typing import Optional

from distset.algebra.polynomials import A, B, X, bipoly
from distset.algebra.realalg import RealAlg
from distset.algebra.solver import SolutionPoint, make_point, point_from_values
from distset.core.exceptions import ValidationError
from distset.core.types import Mode
from distset.gram.charpoly import psd_rank_at
from distset.gram.matrices import candidate_gram, menger_matrix, minor_system
from distset.graphs.graph import Graph, encode
from distset.solvers.general_solver import general_orientation, is_spherical_config
from distset.solvers.spherical_solver import is_jspherical, orientation_of
from distset.solvers.verdicts import ValidityReport
from distset.utils.logging_utils import get_logger

logger = get_logger("solvers.verification")

_DIAGONAL = bipoly(A - B)


def _minors_vanish(graph: Graph, point: SolutionPoint, dim: int, spherical: bool) -> bool:
    size = graph.order if spherical else graph.order - 1
    if dim + 1 > size:
        return True
    return all(point.sign_of(m) == 0 for m in minor_system(graph, dim + 1, spherical))


def _base_report(graph: Graph, point: SolutionPoint, dim: int) -> ValidityReport:
    spherical = point.mode is Mode.SPHERICAL
    matrix = candidate_gram(graph) if spherical else menger_matrix(graph)
    psd, rank = psd_rank_at(matrix, point)
    a_lit, b_lit = point.literals()
    return ValidityReport(
        graph_code=encode(graph),
        mode=point.mode,
        dim=dim,
        a_star=a_lit,
        b_star=b_lit,
        minors_vanish=_minors_vanish(graph, point, dim, spherical),
        psd=psd,
        rank=rank,
    )


def verify_at(graph: Graph, point: SolutionPoint, dim: int) -> ValidityReport:
    """
    在已构造的解点处验证

    Args:
        graph: 非完全非空图
        point: 解点, 其 mode 决定使用 Gram 矩阵还是 Menger 矩阵
        dim: 维数 d
    """
    report = _base_report(graph, point, dim)
    if point.sign_of(_DIAGONAL) == 0:
        report.minors_vanish = False
        report.notes.append("a* = b*, 不是两距离参数")
        return report
    if point.mode is Mode.SPHERICAL:
        report.orientation = orientation_of(point)
        report.jspherical = is_jspherical(point, report.orientation)
    else:
        report.orientation = general_orientation(point)
        if report.valid:
            report.spherical_flag = is_spherical_config(graph, point)
    return report


def verify_one_distance(graph: Graph, value: RealAlg, dim: int, mode: Mode = Mode.SPHERICAL) -> ValidityReport:
    """
    完全图或空图的单距离验证 (正则单形)

    Args:
        graph: 完全图或空图
        value: 唯一的参数 (球面模式为内积, 一般模式为距离平方)
    """
    point = make_point(value, X, X, mode)
    report = _base_report(graph, point, dim)
    report.one_distance = True
    report.notes.append("单距离集, 按正则单形验证")
    return report


def verify_point(
    graph: Graph,
    a: RealAlg,
    b: Optional[RealAlg],
    dim: int,
    mode: Mode = Mode.SPHERICAL,
) -> ValidityReport:
    """
    验证一组表格参数

    Args:
        graph: 任意图; 完全图或空图走单距离验证
        a, b: 参数; 单距离验证时只用到其中一个
        dim: 维数 d
        mode: 球面或一般模式

    Returns:
        ValidityReport
    """
    if graph.is_complete or graph.is_empty:
        value = a if graph.is_complete or b is None else b
        return verify_one_distance(graph, value, dim, mode)
    if b is None:
        raise ValidationError("两距离验证需要同时给出 a* 与 b*", field="b_star")

    return verify_either_order(graph, point_from_values(a, b, mode), dim)


def verify_either_order(graph: Graph, point: SolutionPoint, dim: int) -> ValidityReport:
    """
    先按给定顺序验证, 失败时交换 a, b 再验证

    表格中的参数顺序与补图方向的约定不一定一致, 两种顺序都接受, 交换后
    通过时 swapped = True。
    """
    report = verify_at(graph, point, dim)
    if report.valid:
        return report
    swapped = verify_at(graph, point.mirrored(), dim)
    if swapped.valid:
        swapped.swapped = True
        swapped.notes.append("交换 a*, b* 后通过")
        logger.info(
            f"{swapped.graph_code}: 交换参数顺序后通过",
            extra={"code": swapped.graph_code, "mode": point.mode.value}
        )
        return swapped
    return report


__all__ = ["verify_at", "verify_one_distance", "verify_point", "verify_either_order"]

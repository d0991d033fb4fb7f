#!/usr/bin/env python3
# -*- coding: utf-8 -*-
"""
DistSet - 球面模式求解器

单位球面上的两距离集的 Gram 矩阵为 G(a, b) = aA + bĀ + I, 其中
a = 1 - α1²/2, b = 1 - α2²/2。秩不超过 d 等价于全部 d+1 阶子式为零。

先解 d+1 阶主子式组成的方程组 (按诱导子图同构类缓存); 主子式方程组
只在半正定处等价于秩条件, 因此每个候选点再做一次精确秩检查。主子式
方程组出现非直线族的曲线分量时, 改用全部 d+1 阶子式重新求解。

低维球面集合 (位于单位球面的某个截面小球面上) 给出经过 (1, 1) 的一整条
直线解。这种直线族按一个集合计数, 代表点取直线上秩更低的那一点。
"""

import time
from typing import List

from sympy import QQ, Poly, Rational

from distset.algebra.polynomials import A, B, X, Y, bipoly, proportional, unipoly
from distset.algebra.realalg import RealAlg
from distset.algebra.solver import SolutionPoint, SolveStatus, make_point, solve_bivariate_real
from distset.core.exceptions import (
    CertificationError,
    NotTwoDistanceGraphError,
    PositiveDimensionalUnexpectedError,
)
from distset.core.interfaces import BaseSolver
from distset.core.types import Mode, Orientation
from distset.gram.charpoly import psd_rank_at, rank_at
from distset.gram.matrices import PolyMatrix, all_minors, candidate_gram, gram_minor_system
from distset.graphs.graph import Graph, encode
from distset.solvers.verdicts import SphericalSolution, SphericalVerdict
from distset.utils.logging_utils import get_logger

logger = get_logger("solvers.spherical")

_ONE_A = bipoly(A - 1)
_ONE_B = bipoly(B - 1)
_DIAGONAL = bipoly(A - B)
_ONE = RealAlg.rational(1)


def in_spherical_box(point: SolutionPoint) -> bool:
    """a < 1, b < 1, a ≠ b"""
    return (
        point.sign_of(_ONE_A) < 0
        and point.sign_of(_ONE_B) < 0
        and point.sign_of(_DIAGONAL) != 0
    )


def _shift_to_unit(curve: Poly) -> Poly:
    """以 (1, 1) 为原点的坐标 u = a - 1, v = b - 1 (变量 x, y)"""
    expr = bipoly(curve).as_expr().subs({A: X + 1, B: Y + 1}, simultaneous=True)
    return Poly(expr.expand(), X, Y, domain=QQ)


def _through_unit(curve: Poly) -> bool:
    """曲线是否为经过 (1, 1) 的若干直线之并"""
    return _shift_to_unit(curve).is_homogeneous


def family_directions(curve: Poly) -> List[RealAlg]:
    """
    直线族在 a<1, b<1 区域内的方向 t = (a - 1)/(b - 1), 要求 t > 0 且 t ≠ 1

    有理直线只有一个方向; 不可约的高次曲线对应一组共轭直线。
    """
    shifted = _shift_to_unit(curve)
    if not shifted.is_homogeneous:
        return []
    slopes = unipoly(shifted.as_expr().subs(Y, 1), X)
    if slopes.is_ground:
        return []
    return [t for t in RealAlg.roots_of(slopes) if t.sign() > 0 and not t.is_equal(_ONE)]


def is_family_line(curve: Poly) -> bool:
    """
    是否为低维集合的直线族: 经过 (1, 1) 的直线 (或共轭直线组), 且与 a<1, b<1 区域相交
    """
    return bool(family_directions(curve))


def line_sample(line: Poly) -> SolutionPoint:
    """直线族上 b = 1/2 处的点"""
    t = family_directions(line)[0]
    return make_point(t, 1 - X / 2, Rational(1, 2), Mode.SPHERICAL)


def _needs_all_minors(matrix: PolyMatrix, curves: List[Poly], dim: int) -> bool:
    # 主子式方程组的曲线分量须在一般点处满足秩条件才算直线族
    for curve in curves:
        if not _through_unit(curve):
            return True
        if is_family_line(curve) and rank_at(matrix, line_sample(curve)) > dim:
            return True
    return False


def orientation_of(point: SolutionPoint) -> Orientation:
    """a > b (边上距离更短) 时归于图本身"""
    return Orientation.GRAPH if point.sign_of(_DIAGONAL) > 0 else Orientation.COMPLEMENT


def is_jspherical(point: SolutionPoint, orientation: Orientation) -> bool:
    """图本身方向上的短距离参数为 0, 即较大的参数为 0"""
    return point.sign_of(bipoly(A if orientation is Orientation.GRAPH else B)) == 0


def resolve_family(graph: Graph, rank_bound: int, line: Poly) -> List[SolutionPoint]:
    """
    直线族的代表点: 直线上秩不超过 rank_bound - 1 的点

    若整条直线都满足该秩条件, 继续降低秩的上界。
    """
    if rank_bound < 2:
        return []
    matrix = candidate_gram(graph)
    line = bipoly(line)
    result = solve_bivariate_real(gram_minor_system(graph, rank_bound) + [line], Mode.SPHERICAL)
    if any(proportional(curve, line) for curve in result.curves):
        if rank_at(matrix, line_sample(line)) < rank_bound:
            return resolve_family(graph, rank_bound - 1, line)
        result = solve_bivariate_real(all_minors(matrix, rank_bound) + [line], Mode.SPHERICAL)
    return [
        p for p in result.points
        if in_spherical_box(p) and rank_at(matrix, p) < rank_bound
    ]


def _classify_point(
    matrix: PolyMatrix,
    point: SolutionPoint,
    dim: int,
    code: str,
    family: bool = False,
) -> SphericalSolution:
    psd, rank = psd_rank_at(matrix, point)
    if psd and rank > dim:
        raise CertificationError(
            f"解点 {point!r} 的秩 {rank} 超过维数 {dim}", graph_code=code, dim=dim
        )
    orientation = orientation_of(point)
    return SphericalSolution(
        point=point,
        psd=psd,
        rank=rank,
        orientation=orientation,
        jspherical=is_jspherical(point, orientation),
        admissible=psd,
        family=family,
    )


def solve_spherical(graph: Graph, dim: int) -> SphericalVerdict:
    """
    球面模式单图求解

    Args:
        graph: 非完全非空图
        dim: 维数 d, 要求 n >= d + 2

    Returns:
        SphericalVerdict

    Raises:
        NotTwoDistanceGraphError: 完全图或空图
        PositiveDimensionalUnexpectedError: 点数过少或出现非直线族的曲线解
    """
    code = encode(graph)
    if graph.is_complete or graph.is_empty:
        raise NotTwoDistanceGraphError("完全图与空图只有一种距离", graph_code=code, dim=dim)
    if graph.order < dim + 2:
        raise PositiveDimensionalUnexpectedError(
            f"n={graph.order} < d+2={dim + 2}, 解集不是零维的", graph_code=code, dim=dim
        )

    matrix = candidate_gram(graph)
    result = solve_bivariate_real(gram_minor_system(graph, dim + 1), Mode.SPHERICAL)
    if _needs_all_minors(matrix, result.curves, dim):
        logger.debug(f"{code} 的主子式方程组含曲线分量, 改用全部子式", extra={"code": code, "dim": dim})
        result = solve_bivariate_real(all_minors(matrix, dim + 1), Mode.SPHERICAL)

    lines: List[Poly] = []
    for curve in result.curves:
        if is_family_line(curve):
            lines.append(curve)
        elif _through_unit(curve):
            logger.debug(f"直线 {curve.as_expr()} 不经过 a<1, b<1 区域, 忽略", extra={"code": code})
        else:
            raise PositiveDimensionalUnexpectedError(
                f"出现曲线解 {curve.as_expr()}", graph_code=code, dim=dim
            )

    isolated = [
        p for p in result.points
        if in_spherical_box(p)
        and all(p.sign_of(line) != 0 for line in lines)
        and rank_at(matrix, p) <= dim
    ]
    solutions = [_classify_point(matrix, p, dim, code) for p in isolated]
    for line in lines:
        for p in resolve_family(graph, dim, line):
            solutions.append(_classify_point(matrix, p, dim, code, family=True))

    survived = bool(isolated) or bool(lines)
    verdict = SphericalVerdict(
        graph=graph,
        dim=dim,
        solutions=solutions,
        survived=survived,
        indefinite_only=survived and not any(s.admissible for s in solutions),
        survived_complex=result.status is not SolveStatus.INCONSISTENT,
        lines=lines,
    )
    logger.debug(
        f"球面求解 {code}: 存活={survived}, 解 {len(solutions)} 个",
        extra={"code": code, "dim": dim, "lines": len(lines)}
    )
    return verdict


class SphericalSolver(BaseSolver):
    """球面模式求解器"""

    mode = Mode.SPHERICAL

    def solve(self, graph: Graph) -> SphericalVerdict:
        start = time.time()
        verdict = solve_spherical(graph, self.dim)
        self._update_stats(verdict.survived, len(verdict.admissible_solutions), time.time() - start)
        return verdict


__all__ = [
    "in_spherical_box",
    "family_directions",
    "is_family_line",
    "line_sample",
    "orientation_of",
    "is_jspherical",
    "resolve_family",
    "solve_spherical",
    "SphericalSolver",
]

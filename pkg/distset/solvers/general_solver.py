#!/usr/bin/env python3
# -*- coding: utf-8 -*-
"""
DistSet - 一般模式求解器

一般 (不要求在球面上) 的两距离集用 Menger 矩阵刻画: 以最后一个点为原点,
其余点的 Gram 矩阵 M 半正定且秩不超过 d, 参数 (a, b) = (α1², α2²)。
主子式关于 (a, b) 齐次, 故可归一化 a = 1, 条件化为关于 b 的一元多项式的
公共根。
"""

import time
from typing import List

from sympy import Poly

from distset.algebra.polynomials import (
    A,
    B,
    X,
    bipoly,
    irreducible_factors,
    polys_gcd,
    proportional,
    rebase,
    unipoly,
)
from distset.algebra.realalg import RealAlg
from distset.algebra.solver import SolutionPoint, make_point
from distset.core.exceptions import CertificationError, NotTwoDistanceGraphError
from distset.core.interfaces import BaseSolver
from distset.core.types import Mode, Orientation
from distset.gram.charpoly import field_rank, psd_rank_at, rank_at, specialize_matrix
from distset.gram.matrices import all_minors, menger_matrix, menger_minor_system
from distset.graphs.graph import Graph, encode
from distset.solvers.verdicts import GeneralSolution, GeneralVerdict
from distset.utils.logging_utils import get_logger

logger = get_logger("solvers.general")

_ONE = RealAlg.rational(1)
_B_MINUS_ONE = unipoly(X - 1)


def general_orientation(point: SolutionPoint) -> Orientation:
    """a < b (边上距离更短) 时归于图本身"""
    return Orientation.GRAPH if point.sign_of(bipoly(B - A)) > 0 else Orientation.COMPLEMENT


def is_spherical_config(graph: Graph, point: SolutionPoint) -> bool:
    """
    点集是否位于某个球面上

    以最后一个点为原点, 其余点 x_i 的 Gram 矩阵为 M, v = diag(M)。
    球心 c 满足 |x_i - c|² = |c|², 即 2<x_i, c> = |x_i|²; 取 c = Σ w_j x_j
    得线性方程组 2Mw = v, 其可解性即 rank(M) = rank([M | v])。
    """
    matrix = menger_matrix(graph)
    rows = specialize_matrix(matrix, point)
    field = point.field
    augmented = [row + [row[i]] for i, row in enumerate(rows)]
    return field_rank(rows, field) == field_rank(augmented, field)


def specialize_at_unit(minor: Poly) -> Poly:
    """a = 1 处的一元多项式 (变量 x 即 b)"""
    return rebase(unipoly(bipoly(minor).as_expr().subs(A, 1), B))


def solve_general(graph: Graph, dim: int) -> GeneralVerdict:
    """
    一般模式单图求解

    Args:
        graph: 非完全非空图
        dim: 维数 d

    Returns:
        GeneralVerdict; n <= d + 1 时秩条件自动成立, 标记为连续族

    Raises:
        NotTwoDistanceGraphError: 完全图或空图
    """
    code = encode(graph)
    if graph.is_complete or graph.is_empty:
        raise NotTwoDistanceGraphError("完全图与空图只有一种距离", graph_code=code, dim=dim)

    n = graph.order
    if n <= dim + 1:
        # b 接近 1 时 Menger 矩阵接近正则单形, 正定, 故总可实现
        return GeneralVerdict(graph=graph, dim=dim, survived=True, continuum=True, survived_complex=True)

    matrix = menger_matrix(graph)
    minors = menger_minor_system(graph, dim + 1)
    common = polys_gcd(specialize_at_unit(m) for m in minors)
    if common is None:
        # 主子式恒为零不足以保证秩条件, 改用全部子式
        minors = all_minors(matrix, dim + 1)
        common = polys_gcd(specialize_at_unit(m) for m in minors)
    if common is None:
        logger.warning(f"{code} 的主子式在 a=1 上恒为零, 记为连续族", extra={"code": code, "dim": dim})
        return GeneralVerdict(graph=graph, dim=dim, survived=True, continuum=True, survived_complex=True)

    survived_complex = any(
        not proportional(factor, _B_MINUS_ONE) for factor, _ in irreducible_factors(common)
    )
    roots: List[RealAlg] = [] if common.is_ground else RealAlg.roots_of(common)
    points = [
        make_point(root, 1, X, Mode.GENERAL, certificate=minors)
        for root in roots
        if root.sign() > 0 and not root.is_equal(_ONE)
    ]
    # 主子式的公共根只在半正定处等价于秩条件
    candidates = [p for p in points if rank_at(matrix, p) <= dim]

    solutions: List[GeneralSolution] = []
    for point in candidates:
        root = point.anchor
        for minor in minors:
            if point.sign_of(minor) != 0:
                raise CertificationError(
                    f"b = {root.to_literal()} 处主子式不为零", graph_code=code, dim=dim
                )
        psd, rank = psd_rank_at(matrix, point)
        if psd and rank > dim:
            raise CertificationError(
                f"b = {root.to_literal()} 处秩 {rank} 超过维数 {dim}", graph_code=code, dim=dim
            )
        solutions.append(GeneralSolution(
            point=point,
            psd=psd,
            rank=rank,
            orientation=Orientation.GRAPH if root.compare(_ONE) > 0 else Orientation.COMPLEMENT,
            admissible=psd,
            spherical_flag=is_spherical_config(graph, point) if psd else None,
        ))

    survived = bool(candidates)
    logger.debug(
        f"一般求解 {code}: 存活={survived}, 解 {len(solutions)} 个",
        extra={"code": code, "dim": dim}
    )
    return GeneralVerdict(
        graph=graph,
        dim=dim,
        solutions=solutions,
        survived=survived,
        indefinite_only=survived and not any(s.admissible for s in solutions),
        survived_complex=survived_complex,
    )


class GeneralSolver(BaseSolver):
    """一般模式求解器"""

    mode = Mode.GENERAL

    def solve(self, graph: Graph) -> GeneralVerdict:
        start = time.time()
        verdict = solve_general(graph, self.dim)
        self._update_stats(verdict.survived, len(verdict.admissible_solutions), time.time() - start)
        return verdict


__all__ = [
    "general_orientation",
    "is_spherical_config",
    "specialize_at_unit",
    "solve_general",
    "GeneralSolver",
]

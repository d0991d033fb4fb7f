#!/usr/bin/env python3
# -*- coding: utf-8 -*-
"""
DistSet - 集合计数

一个补图类贡献的两距离集个数等于可容许解的个数; 自补图的解与其镜像解
(球面模式交换 a, b; 一般模式 b 换为 1/b) 描述同一个集合, 只计一次。
"""

from typing import Callable, List, Optional, Union

from distset.algebra.realalg import RealAlg
from distset.graphs.canonical import is_self_complementary
from distset.solvers.verdicts import GeneralSolution, GeneralVerdict, SphericalSolution, SphericalVerdict

Verdict = Union[SphericalVerdict, GeneralVerdict]
Solution = Union[SphericalSolution, GeneralSolution]


def _is_mirror(verdict: Verdict, s: Solution, t: Solution) -> bool:
    if isinstance(verdict, SphericalVerdict):
        return s.point.a.is_equal(t.point.b) and s.point.b.is_equal(t.point.a)
    return mirror_value(s.point.b).is_equal(t.point.b)


def _identify_mirrors(verdict: Verdict, solutions: List[Solution]) -> int:
    remaining = list(solutions)
    count = 0
    while remaining:
        s = remaining.pop(0)
        count += 1
        for i, t in enumerate(remaining):
            if _is_mirror(verdict, s, t):
                del remaining[i]
                break
    return count


def count_sets(
    verdict: Verdict,
    nonspherical_only: bool = False,
    predicate: Optional[Callable[[Solution], bool]] = None,
    self_complementary: Optional[bool] = None,
) -> int:
    """
    补图类贡献的两距离集个数

    Args:
        verdict: 单图判定结果
        nonspherical_only: 仅统计不在球面上的集合 (一般模式)
        predicate: 额外的解过滤条件
        self_complementary: 已知的自补性, 缺省时重新计算

    Returns:
        集合个数
    """
    solutions: List[Solution] = list(verdict.admissible_solutions)
    if nonspherical_only and isinstance(verdict, GeneralVerdict):
        solutions = [s for s in solutions if s.spherical_flag is False]
    if predicate is not None:
        solutions = [s for s in solutions if predicate(s)]
    if not solutions:
        return 0
    if self_complementary is None:
        self_complementary = is_self_complementary(verdict.graph)
    if not self_complementary:
        return len(solutions)
    return _identify_mirrors(verdict, solutions)


def mirror_value(value: RealAlg) -> RealAlg:
    """一般模式的镜像参数 1/b"""
    return value.reciprocal()


__all__ = ["count_sets", "mirror_value", "Verdict", "Solution"]

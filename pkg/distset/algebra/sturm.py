#!/usr/bin/env python3
# -*- coding: utf-8 -*-
"""
DistSet - Sturm 序列与实根隔离

用 Sturm 序列在有理端点处的符号变化数统计区间内的实根个数, 二分得到
互不相交的隔离区间。区间端点始终取非根的有理数, 区间为开区间。
"""

from fractions import Fraction
from typing import List, Tuple

from sympy import Poly

from distset.algebra.polynomials import coefficients, horner, sign, unipoly
from distset.core.exceptions import ZeroPolynomialError

Interval = Tuple[Fraction, Fraction]


class SturmSequence:
    """无平方因子多项式的 Sturm 序列, 系数以 Fraction 存放以便快速求值"""

    def __init__(self, p: Poly):
        if p.is_zero:
            raise ZeroPolynomialError("零多项式没有 Sturm 序列")
        p = unipoly(p, p.gens[0])
        if p.degree() > 0:
            p = p.sqf_part()
            chain = p.sturm()
        else:
            chain = [p]
        self.polys: List[List[Fraction]] = [coefficients(q) for q in chain]
        self.head = self.polys[0]

    @property
    def degree(self) -> int:
        return len(self.head) - 1

    def value(self, x: Fraction) -> Fraction:
        """首项 (无平方因子部分) 在 x 处的值"""
        return horner(self.head, x)

    def variations(self, x: Fraction) -> int:
        """x 处的符号变化数, 零值略过"""
        count = 0
        previous = 0
        for coeffs in self.polys:
            s = sign(horner(coeffs, x))
            if s == 0:
                continue
            if previous and s != previous:
                count += 1
            previous = s
        return count

    def count_roots(self, lo: Fraction, hi: Fraction) -> int:
        """(lo, hi] 内的相异实根个数"""
        if lo >= hi:
            return 0
        return self.variations(lo) - self.variations(hi)


def sturm_sequence(p: Poly) -> SturmSequence:
    return SturmSequence(p)


def root_bound(p: Poly) -> Fraction:
    """Cauchy 上界加一, 全部实根严格落在 (-M, M) 内"""
    coeffs = coefficients(p)
    lead = coeffs[-1]
    return 2 + max((abs(c / lead) for c in coeffs[:-1]), default=Fraction(0))


def split_point(seq: SturmSequence, lo: Fraction, hi: Fraction) -> Fraction:
    """区间内一个非根的有理分点, 优先取中点"""
    for k in range(2, 64):
        mid = lo + (hi - lo) / k if k > 2 else (lo + hi) / 2
        if seq.value(mid) != 0:
            return mid
    raise ZeroPolynomialError("找不到非根分点")  # 次数有限, 不会发生


def sturm_isolate(p: Poly) -> List[Interval]:
    """
    隔离全部实根

    Args:
        p: 非零一元有理系数多项式

    Returns:
        按从小到大排序的开区间列表, 每个区间恰含一个实根, 端点不是根

    Raises:
        ZeroPolynomialError: p 为零多项式
    """
    if p.is_zero:
        raise ZeroPolynomialError("不能对零多项式隔离实根")
    seq = SturmSequence(p)
    if seq.degree == 0:
        return []
    bound = root_bound(unipoly(p, p.gens[0]))
    pending = [(-bound, bound)]
    isolated: List[Interval] = []
    while pending:
        lo, hi = pending.pop()
        count = seq.count_roots(lo, hi)
        if count == 0:
            continue
        if count == 1:
            isolated.append((lo, hi))
            continue
        mid = split_point(seq, lo, hi)
        pending.append((lo, mid))
        pending.append((mid, hi))
    return sorted(isolated)


def bisect(seq: SturmSequence, lo: Fraction, hi: Fraction) -> Interval:
    """把含唯一根的区间缩小一半, 保持端点非根"""
    mid = split_point(seq, lo, hi)
    if sign(seq.value(lo)) != sign(seq.value(mid)):
        return lo, mid
    return mid, hi


def refine_interval(seq: SturmSequence, lo: Fraction, hi: Fraction, width: Fraction) -> Interval:
    """细分到区间宽度不超过 width"""
    while hi - lo > width:
        lo, hi = bisect(seq, lo, hi)
    return lo, hi


def count_roots_in(p: Poly, lo: Fraction, hi: Fraction) -> int:
    """p 在 (lo, hi] 内的相异实根个数"""
    if p.is_zero:
        raise ZeroPolynomialError("零多项式的根个数无定义")
    return SturmSequence(p).count_roots(lo, hi)


__all__ = [
    "Interval",
    "SturmSequence",
    "sturm_sequence",
    "root_bound",
    "split_point",
    "sturm_isolate",
    "bisect",
    "refine_interval",
    "count_roots_in",
]

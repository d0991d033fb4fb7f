#!/usr/bin/env python3
# -*- coding: utf-8 -*-
"""
DistSet - 实代数数模块

实代数数由 (不可约本原整系数多项式, 有理隔离区间) 表示。符号判定全部
精确完成: 先用最大公因式判零, 非零时细分区间直到被测多项式在区间上
无根。

文本字面量有三种形式:
    RATIONAL  "p/q" 或 "p"
    QUAD      "(p + q*sqrt(r))/den", r 无平方因子, den > 0
    ROOT      "root([c0, c1, ..., ck]; lo, hi)", 整系数按升幂排列
"""

import re
from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property
from math import gcd
from typing import List, Optional, Union

from sympy import QQ, Poly, factorint

from distset.algebra.polynomials import (
    X,
    coefficients,
    evaluate,
    from_coefficients,
    horner,
    integer_coefficients,
    integerize,
    irreducible_factors,
    rebase,
    sign,
    to_rational,
    unipoly,
)
from distset.algebra.sturm import SturmSequence, bisect, count_roots_in, sturm_isolate
from distset.core.exceptions import (
    AlgebraError,
    LiteralParseError,
    RefinementExhaustedError,
    ZeroPolynomialError,
)
from distset.core.types import DEFAULT_SIGN_FUEL
from distset.utils.format_utils import FormatUtils
from distset.utils.logging_utils import get_logger

logger = get_logger("algebra.realalg")

# 燃料耗尽后继续细分的倍数, 之后才报错
_ESCALATION_FACTOR = 16

_RATIONAL_RE = re.compile(r"^\s*(-?\d+)\s*(?:/\s*(\d+))?\s*$")
_QUAD_RE = re.compile(
    r"^\s*\(\s*(-?\d+)\s*\+\s*(-?\d+)\s*\*\s*sqrt\(\s*(\d+)\s*\)\s*\)\s*/\s*(\d+)\s*$"
)
_ROOT_RE = re.compile(r"^\s*root\(\s*\[([^\]]*)\]\s*;\s*([^,;]+?)\s*,\s*([^,;)]+?)\s*\)\s*$")


@dataclass(frozen=True, eq=False)
class RealAlg:
    """
    实代数数

    Attributes:
        defining: 不可约本原整系数多项式 (变量 x, 首项系数为正)
        lo, hi: 开隔离区间端点, 都不是 defining 的根
    """
    defining: Poly
    lo: Fraction
    hi: Fraction

    @classmethod
    def rational(cls, value: Union[int, Fraction]) -> "RealAlg":
        """有理数 q 表示为 (x - q, (q-1, q+1))"""
        value = Fraction(value)
        defining = Poly(value.denominator * X - value.numerator, X, domain=QQ)
        return cls(integerize(defining), value - 1, value + 1)

    @classmethod
    def from_root(cls, p: Poly, lo: Fraction, hi: Fraction) -> "RealAlg":
        """
        取 p 在 (lo, hi) 内的唯一实根

        Raises:
            AlgebraError: 区间内不是恰好一个根
        """
        p = rebase(p)
        if p.is_zero:
            raise ZeroPolynomialError("零多项式不能定义实代数数")
        return cls._from_factors(irreducible_factors(p), Fraction(lo), Fraction(hi))

    @classmethod
    def _from_factors(cls, factors, lo: Fraction, hi: Fraction) -> "RealAlg":
        for factor, _ in factors:
            if evaluate(factor, lo) == 0 or evaluate(factor, hi) == 0:
                raise AlgebraError(f"区间端点是根: ({lo}, {hi})")
            if count_roots_in(factor, lo, hi) == 1:
                if factor.degree() == 1:
                    c0, c1 = coefficients(factor)
                    return cls.rational(-c0 / c1)
                return cls(factor, lo, hi)
        raise AlgebraError(f"区间 ({lo}, {hi}) 内没有唯一实根")

    @classmethod
    def roots_of(cls, p: Poly) -> List["RealAlg"]:
        """
        p 的全部相异实根, 从小到大

        Raises:
            ZeroPolynomialError: p 为零多项式
        """
        p = rebase(p)
        intervals = sturm_isolate(p)
        if not intervals:
            return []
        factors = irreducible_factors(p)
        return [cls._from_factors(factors, lo, hi) for lo, hi in intervals]

    @cached_property
    def _sturm(self) -> SturmSequence:
        return SturmSequence(self.defining)

    @property
    def degree(self) -> int:
        return self.defining.degree()

    @property
    def is_rational(self) -> bool:
        return self.degree == 1

    @property
    def value(self) -> Fraction:
        """有理值, 仅对有理数可用"""
        if not self.is_rational:
            raise AlgebraError("无理数没有有理值")
        c0, c1 = coefficients(self.defining)
        return -c0 / c1

    def refined(self, width: Fraction = Fraction(1, 2 ** 60)) -> "RealAlg":
        """细分隔离区间到宽度不超过 width"""
        if self.is_rational:
            v = self.value
            return RealAlg(self.defining, v - width / 2, v + width / 2)
        lo, hi = self.lo, self.hi
        while hi - lo > width:
            lo, hi = bisect(self._sturm, lo, hi)
        return RealAlg(self.defining, lo, hi)

    def to_float(self) -> float:
        if self.is_rational:
            return float(self.value)
        approx = self.refined()
        return float((approx.lo + approx.hi) / 2)

    def sign(self) -> int:
        return alg_sign(X, self)

    def compare(self, other: "RealAlg") -> int:
        """精确比较, 返回 self - other 的符号"""
        if other.is_rational:
            return alg_sign(X - to_rational(other.value), self)
        if self.is_rational:
            return -alg_sign(X - to_rational(self.value), other)
        if self.defining == other.defining:
            lo, hi = max(self.lo, other.lo), min(self.hi, other.hi)
            if lo < hi and self._sturm.count_roots(lo, hi) > 0:
                return 0
        a_lo, a_hi, b_lo, b_hi = self.lo, self.hi, other.lo, other.hi
        for _ in range(DEFAULT_SIGN_FUEL * _ESCALATION_FACTOR):
            if a_hi <= b_lo:
                return -1
            if b_hi <= a_lo:
                return 1
            a_lo, a_hi = bisect(self._sturm, a_lo, a_hi)
            b_lo, b_hi = bisect(other._sturm, b_lo, b_hi)
        raise RefinementExhaustedError("比较两个代数数时细分次数耗尽")

    def is_equal(self, other: "RealAlg") -> bool:
        return self.compare(other) == 0

    def reciprocal(self) -> "RealAlg":
        """倒数"""
        if self.is_rational:
            if self.value == 0:
                raise AlgebraError("零没有倒数")
            return RealAlg.rational(1 / self.value)
        lo, hi = self.lo, self.hi
        while lo <= 0 <= hi:
            lo, hi = bisect(self._sturm, lo, hi)
        reversed_poly = from_coefficients(list(reversed(coefficients(self.defining))))
        return RealAlg.from_root(reversed_poly, 1 / hi, 1 / lo)

    def to_literal(self) -> str:
        """渲染为文本字面量"""
        if self.is_rational:
            return FormatUtils.format_rational(self.value)
        if self.degree == 2:
            return self._quad_literal()
        coeffs = ", ".join(str(c) for c in integer_coefficients(self.defining))
        return (
            f"root([{coeffs}]; {FormatUtils.format_rational(self.lo)}, "
            f"{FormatUtils.format_rational(self.hi)})"
        )

    def _quad_literal(self) -> str:
        c0, c1, c2 = integer_coefficients(self.defining)
        discriminant = c1 * c1 - 4 * c2 * c0
        square, free = 1, 1
        for prime, exponent in factorint(discriminant).items():
            square *= prime ** (exponent // 2)
            free *= prime ** (exponent % 2)
        # 两根为 (-c1 ± square*sqrt(free)) / (2*c2), 与中点比较确定正负号
        center = Fraction(-c1, 2 * c2)
        branch = alg_sign(X - to_rational(center), self)
        p, q, den = -c1, branch * square, 2 * c2
        common = gcd(gcd(abs(p), abs(q)), den)
        p, q, den = p // common, q // common, den // common
        return f"({p} + {q}*sqrt({free}))/{den}"

    @classmethod
    def from_literal(cls, text: str) -> "RealAlg":
        """
        解析文本字面量

        Raises:
            LiteralParseError: 格式不符或数据不一致
        """
        match = _RATIONAL_RE.match(text)
        if match:
            den = int(match.group(2) or 1)
            if den == 0:
                raise LiteralParseError("分母为零", literal=text)
            return cls.rational(Fraction(int(match.group(1)), den))

        match = _QUAD_RE.match(text)
        if match:
            p, q, r, den = (int(g) for g in match.groups())
            if den == 0:
                raise LiteralParseError("分母为零", literal=text)
            return cls._from_quad(p, q, r, den, text)

        match = _ROOT_RE.match(text)
        if match:
            try:
                coeffs = [int(c) for c in match.group(1).split(",") if c.strip()]
                lo, hi = Fraction(match.group(2).strip()), Fraction(match.group(3).strip())
            except ValueError as e:
                raise LiteralParseError(f"ROOT 字面量数值无效: {e}", literal=text)
            if not any(coeffs):
                raise LiteralParseError("ROOT 字面量的多项式为零", literal=text)
            try:
                return cls.from_root(from_coefficients(coeffs), lo, hi)
            except AlgebraError as e:
                raise LiteralParseError(f"ROOT 字面量区间无效: {e.message}", literal=text)

        raise LiteralParseError(f"无法识别的代数数字面量: {text!r}", literal=text)

    @classmethod
    def _from_quad(cls, p: int, q: int, r: int, den: int, text: str) -> "RealAlg":
        center = Fraction(p, den)
        if q == 0 or r == 0:
            return cls.rational(center)
        # (den*x - p)^2 = q^2 r
        poly = Poly(den * den * X ** 2 - 2 * p * den * X + p * p - q * q * r, X)
        for root in cls.roots_of(poly):
            if alg_sign(X - to_rational(center), root) == (1 if q > 0 else -1):
                return root
        raise LiteralParseError("QUAD 字面量没有实根", literal=text)

    def __str__(self) -> str:
        return self.to_literal()

    def __repr__(self) -> str:
        return f"RealAlg({self.to_literal()})"


def alg_sign(f: Poly, x: RealAlg, fuel: Optional[int] = None) -> int:
    """
    f(x) 的精确符号

    Args:
        f: 一元有理系数多项式 (任意变量名)
        x: 实代数数
        fuel: 细分次数预算, 耗尽后继续细分并记录警告, 仍失败才报错

    Returns:
        -1, 0 或 1

    Raises:
        RefinementExhaustedError: 追加预算后仍无法判定
    """
    if not isinstance(f, Poly):
        f = unipoly(f)
    f = rebase(f)
    if f.is_zero:
        return 0
    if f.is_ground:
        return sign(coefficients(f)[0])
    if x.is_rational:
        return sign(evaluate(f, x.value))

    r = f.rem(x.defining)
    if r.is_zero:
        return 0
    if r.is_ground:
        return sign(coefficients(r)[0])
    common = r.gcd(x.defining)
    if common.degree() > 0 and count_roots_in(common, x.lo, x.hi) > 0:
        return 0

    fuel = DEFAULT_SIGN_FUEL if fuel is None else fuel
    r_coeffs = coefficients(r)
    r_seq = SturmSequence(r)
    lo, hi = x.lo, x.hi
    budget = fuel * _ESCALATION_FACTOR
    for step in range(budget):
        if r_seq.count_roots(lo, hi) == 0:
            s = sign(horner(r_coeffs, hi))
            if s != 0:
                return s
        if step == fuel:
            logger.warning(
                f"符号判定超过 {fuel} 次细分, 继续细分",
                extra={"defining": str(x.defining.as_expr())}
            )
        lo, hi = bisect(x._sturm, lo, hi)
    raise RefinementExhaustedError(f"符号判定在 {budget} 次细分后仍未完成")


__all__ = ["RealAlg", "alg_sign"]

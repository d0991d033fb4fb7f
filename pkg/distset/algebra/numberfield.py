#!/usr/bin/env python3
# -*- coding: utf-8 -*-
"""
DistSet - 数域运算

Q(θ) = Q[x]/(m(x)), m 为锚点 θ 的极小多项式。m 为一次时退化为 Q,
元素直接用 Fraction 表示; 否则用次数小于 deg m 的 sympy.Poly 表示。
"""

from fractions import Fraction
from typing import Union

from sympy import Poly

from distset.algebra.polynomials import X, coefficients, rebase, sign, to_rational
from distset.algebra.realalg import RealAlg, alg_sign
from distset.core.exceptions import AlgebraError

Element = Union[Fraction, Poly]


class NumberField:
    """锚点 θ 生成的数域"""

    def __init__(self, anchor: RealAlg):
        self.anchor = anchor
        self.modulus = anchor.defining
        self.is_rational = anchor.is_rational
        self.zero: Element = Fraction(0) if self.is_rational else Poly(0, X, domain=self.modulus.domain)
        self.one: Element = Fraction(1) if self.is_rational else Poly(1, X, domain=self.modulus.domain)

    def element(self, p: Poly) -> Element:
        """x 的多项式 p 对应的元素 p(θ)"""
        p = rebase(p)
        if self.is_rational:
            result = Fraction(0)
            value = self.anchor.value
            for c in reversed(coefficients(p)):
                result = result * value + c
            return result
        return p.rem(self.modulus)

    def from_fraction(self, q: Fraction) -> Element:
        if self.is_rational:
            return Fraction(q)
        return Poly(to_rational(q), X, domain=self.modulus.domain)

    def add(self, x: Element, y: Element) -> Element:
        return x + y

    def sub(self, x: Element, y: Element) -> Element:
        return x - y

    def neg(self, x: Element) -> Element:
        return -x

    def mul(self, x: Element, y: Element) -> Element:
        if self.is_rational:
            return x * y
        return (x * y).rem(self.modulus)

    def scale(self, x: Element, q: Fraction) -> Element:
        if self.is_rational:
            return x * q
        return x * to_rational(q)

    def inv(self, x: Element) -> Element:
        if self.is_zero(x):
            raise AlgebraError("数域中零元素不可逆")
        if self.is_rational:
            return 1 / x
        return x.invert(self.modulus)

    def is_zero(self, x: Element) -> bool:
        # m 不可约且 deg x < deg m, 故 x(θ) = 0 当且仅当 x 为零多项式
        if self.is_rational:
            return x == 0
        return x.is_zero

    def sign(self, x: Element) -> int:
        """元素在实嵌入 θ 下的符号"""
        if self.is_rational:
            return sign(x)
        return alg_sign(x, self.anchor)

    def to_poly(self, x: Element) -> Poly:
        if self.is_rational:
            return Poly(to_rational(x), X)
        return x


__all__ = ["NumberField", "Element"]

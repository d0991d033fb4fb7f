#!/usr/bin/env python3
# -*- coding: utf-8 -*-
"""
DistSet - 多项式工具模块

Q[a, b] 与 Q[x] 上的多项式均使用 sympy.Poly (定义域 QQ), 有理数使用
fractions.Fraction。字典序 Gröbner 基取 a > b, 消去理想中的一元多项式
落在 b 上。
"""

from fractions import Fraction
from functools import reduce
from typing import Iterable, List, Optional, Sequence, Tuple, Union

from sympy import QQ, Poly, Rational, Symbol, groebner, reduced, symbols

from distset.core.exceptions import AlgebraError

A, B = symbols("a b")
X, Y = symbols("x y")
GENS = (A, B)

Number = Union[int, Fraction]


def bipoly(expr) -> Poly:
    """构造 Q[a, b] 中的多项式"""
    if isinstance(expr, Poly) and expr.gens == GENS:
        return expr
    if isinstance(expr, Poly):
        expr = expr.as_expr()
    return Poly(expr, A, B, domain=QQ)


def unipoly(expr, var: Symbol = X) -> Poly:
    """构造 Q[var] 中的多项式"""
    if isinstance(expr, Poly):
        if expr.gens == (var,):
            return expr
        expr = expr.as_expr()
    return Poly(expr, var, domain=QQ)


def from_coefficients(coefficients: Sequence[Number], var: Symbol = X) -> Poly:
    """由升幂系数列表构造一元多项式"""
    return Poly([to_rational(c) for c in reversed(list(coefficients))] or [0], var, domain=QQ)


def rebase(p: Poly, var: Symbol = X) -> Poly:
    """把一元多项式换到变量 var 上"""
    symbols_used = p.free_symbols
    if len(symbols_used) > 1:
        raise AlgebraError(f"不是一元多项式: {p.as_expr()}")
    expr = p.as_expr()
    if symbols_used:
        expr = expr.subs(next(iter(symbols_used)), var)
    return Poly(expr, var, domain=QQ)


def to_rational(value: Number) -> Rational:
    """Fraction/int 转 sympy Rational"""
    value = Fraction(value)
    return Rational(value.numerator, value.denominator)


def to_fraction(value) -> Fraction:
    """sympy 有理数转 Fraction"""
    if isinstance(value, Fraction):
        return value
    if isinstance(value, int):
        return Fraction(value)
    rational = Rational(value)
    return Fraction(int(rational.p), int(rational.q))


def coefficients(p: Poly) -> List[Fraction]:
    """一元多项式的升幂系数"""
    if p.is_zero:
        return [Fraction(0)]
    return [to_fraction(c) for c in reversed(p.all_coeffs())]


def integer_coefficients(p: Poly) -> List[int]:
    """一元多项式的本原整系数 (升幂), 首项系数为正"""
    coeffs = coefficients(integerize(p))
    return [int(c) for c in coeffs]


def integerize(p: Poly) -> Poly:
    """清分母并取本原部分, 首项系数为正"""
    if p.is_zero:
        return p
    _, primitive = p.clear_denoms(convert=True)
    _, primitive = primitive.primitive()
    if primitive.LC() < 0:
        primitive = -primitive
    return primitive.set_domain(QQ)


def horner(coeffs: Sequence[Fraction], value: Fraction) -> Fraction:
    """升幂系数在有理点处求值"""
    result = Fraction(0)
    for c in reversed(coeffs):
        result = result * value + c
    return result


def evaluate(p: Poly, value: Number) -> Fraction:
    """一元多项式在有理点处求值"""
    return horner(coefficients(p), Fraction(value))


def sign(value: Fraction) -> int:
    return (value > 0) - (value < 0)


def resultant(f: Poly, g: Poly, eliminate: Symbol) -> Poly:
    """
    结式 Res_var(f, g), 消去变量 eliminate

    Args:
        f, g: Q[a, b] 中的多项式
        eliminate: 被消去的变量 (A 或 B)

    Returns:
        另一变量上的一元多项式
    """
    other = B if eliminate == A else A
    pf = Poly(f.as_expr(), eliminate, other, domain=QQ)
    pg = Poly(g.as_expr(), eliminate, other, domain=QQ)
    if pf.is_zero or pg.is_zero:
        return Poly(0, other, domain=QQ)
    res = pf.resultant(pg)
    if isinstance(res, Poly):
        return unipoly(res.as_expr(), other)
    return Poly(res, other, domain=QQ)


def groebner_lex(gens: Iterable[Poly], *variables: Symbol) -> List[Poly]:
    """
    字典序约化 Gröbner 基

    Args:
        gens: 生成元, 零多项式被忽略
        variables: 变量顺序, 默认 (a, b)

    Returns:
        约化 Gröbner 基 (零理想返回空列表)
    """
    variables = variables or GENS
    polys = [Poly(g.as_expr(), *variables, domain=QQ) for g in gens]
    polys = [p for p in polys if not p.is_zero]
    if not polys:
        return []
    basis = groebner(polys, *variables, order="lex", domain=QQ, method="buchberger")
    return list(basis.polys)


def is_unit_basis(basis: Sequence[Poly]) -> bool:
    """是否为单位理想的基"""
    return any(p.is_ground and not p.is_zero for p in basis)


def reduce_mod(f: Poly, basis: Sequence[Poly], *variables: Symbol) -> Poly:
    """f 对 Gröbner 基的正规形"""
    variables = variables or GENS
    f = Poly(f.as_expr(), *variables, domain=QQ)
    if not basis or f.is_zero:
        return f
    _, remainder = reduced(f, list(basis), *variables, order="lex", domain=QQ, polys=True)
    return remainder


def incremental_groebner(gens: Sequence[Poly]) -> List[Poly]:
    """
    逐个加入生成元计算 Gröbner 基

    已被当前基约化为零的生成元直接跳过, 得到单位理想时提前结束。
    """
    ordered = sorted(
        (bipoly(g) for g in gens if not g.is_zero),
        key=lambda p: (p.total_degree(), len(p.terms()), str(p.as_expr()))
    )
    basis: List[Poly] = []
    for f in ordered:
        if basis and reduce_mod(f, basis).is_zero:
            continue
        basis = groebner_lex(basis + [f])
        if is_unit_basis(basis):
            break
    return basis


def univariate_element(basis: Sequence[Poly], var: Symbol) -> Optional[Poly]:
    """基中仅含变量 var 的非常数元素 (取次数最低者)"""
    candidates = [
        p for p in basis
        if not p.is_ground and p.free_symbols <= {var}
    ]
    if not candidates:
        return None
    best = min(candidates, key=lambda p: p.degree(var))
    return unipoly(best.as_expr(), var)


def polys_gcd(polys: Iterable[Poly]) -> Optional[Poly]:
    """多项式族的最大公因式, 全为零时返回 None"""
    nonzero = [p for p in polys if not p.is_zero]
    if not nonzero:
        return None
    return reduce(lambda p, q: p.gcd(q), nonzero)


def irreducible_factors(p: Poly) -> List[Tuple[Poly, int]]:
    """QQ 上的不可约分解, 因子已整化"""
    if p.is_ground:
        return []
    _, factors = p.factor_list()
    return [(integerize(f), m) for f, m in factors]


def divides(d: Poly, p: Poly) -> bool:
    """d 是否整除 p"""
    if p.is_zero:
        return True
    _, remainder = p.div(d)
    return remainder.is_zero


def proportional(p: Poly, q: Poly) -> bool:
    """两多项式是否只差非零常数倍"""
    if p.is_zero or q.is_zero:
        return p.is_zero and q.is_zero
    return integerize(p) == integerize(q)


__all__ = [
    "A", "B", "X", "Y", "GENS",
    "bipoly",
    "unipoly",
    "from_coefficients",
    "rebase",
    "to_rational",
    "to_fraction",
    "coefficients",
    "integer_coefficients",
    "integerize",
    "horner",
    "evaluate",
    "sign",
    "resultant",
    "groebner_lex",
    "is_unit_basis",
    "reduce_mod",
    "incremental_groebner",
    "univariate_element",
    "polys_gcd",
    "irreducible_factors",
    "divides",
    "proportional",
]

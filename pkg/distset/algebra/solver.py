#!/usr/bin/env python3
# -*- coding: utf-8 -*-
"""
DistSet - 二元多项式组实解模块

零维理想的实解以"锚点 + 参数化"表示: 锚点 θ 是不可约多项式的实根,
a = h_a(θ), b = h_b(θ)。任何 F(a, b) 的符号都化为 F(h_a(θ), h_b(θ))
在 Q(θ) 中的符号, 精确判定。

求解步骤:
  1. 取生成元的最大公因式 g, 其中不属于排除轨迹的不可约因子即为解曲线;
     余因子生成的理想是零维的。
  2. 字典序 (a > b) Gröbner 基中的 b 消去多项式逐个不可约因子 m(b)
     拆分理想; 若拆分后 a 由 b 线性表出, 直接以 b 为锚点。
  3. 否则做线性换元 c = a + t*b, 在 (b, c) 上重新计算 Gröbner 基直到
     处于 shape position, 以 c 为锚点。
"""

from dataclasses import dataclass, field, replace
from enum import Enum
from fractions import Fraction
from functools import cached_property, cmp_to_key
from typing import Dict, List, Optional, Sequence, Tuple

from sympy import QQ, Poly

from distset.algebra.numberfield import Element, NumberField
from distset.algebra.polynomials import (
    A,
    B,
    X,
    Y,
    bipoly,
    coefficients,
    groebner_lex,
    incremental_groebner,
    integerize,
    irreducible_factors,
    is_unit_basis,
    polys_gcd,
    proportional,
    rebase,
    to_fraction,
    to_rational,
    unipoly,
    univariate_element,
)
from distset.algebra.realalg import RealAlg, alg_sign
from distset.algebra.sturm import sturm_isolate
from distset.core.exceptions import AlgebraError, CertificationError, SolverError
from distset.core.types import Mode
from distset.utils.logging_utils import get_logger

logger = get_logger("algebra.solver")

# 线性换元 c = a + t*b 依次尝试的 t
_SHAPE_SHIFTS = (1, -1, 2, -2, 3, -3, 5, -5, 7, -7, 11, -11)

# 排除轨迹 a = 1, b = 1, a = b
EXCLUDED_LOCI: Tuple[Poly, ...] = (bipoly(A - 1), bipoly(B - 1), bipoly(A - B))


class SolveStatus(str, Enum):
    """求解结果状态"""
    POINTS = "points"
    INCONSISTENT = "inconsistent"
    POSITIVE_DIMENSIONAL = "positive_dimensional"


@dataclass(frozen=True, eq=False)
class SolutionPoint:
    """
    实解点

    Attributes:
        anchor: 锚点 θ
        a_expr, b_expr: x 的多项式, 已对锚点极小多项式取余
        mode: 所属求解模式
        joint_certificate: 在该点精确为零的生成元
    """
    anchor: RealAlg
    a_expr: Poly
    b_expr: Poly
    mode: Mode = Mode.SPHERICAL
    joint_certificate: Tuple[Poly, ...] = ()

    @cached_property
    def field(self) -> NumberField:
        return NumberField(self.anchor)

    @cached_property
    def a(self) -> RealAlg:
        return image(self.a_expr, self.anchor)

    @cached_property
    def b(self) -> RealAlg:
        return image(self.b_expr, self.anchor)

    @cached_property
    def _powers(self) -> Dict[str, List[Element]]:
        return {"a": [self.field.one], "b": [self.field.one]}

    def _power(self, which: str, k: int) -> Element:
        powers = self._powers[which]
        base = self.field.element(self.a_expr if which == "a" else self.b_expr)
        while len(powers) <= k:
            powers.append(self.field.mul(powers[-1], base))
        return powers[k]

    def specialize(self, f: Poly) -> Element:
        """F(a, b) 在该点的值 (数域元素)"""
        f = bipoly(f)
        total = self.field.zero
        for (i, j), c in f.terms():
            term = self.field.mul(self._power("a", i), self._power("b", j))
            total = self.field.add(total, self.field.scale(term, to_fraction(c)))
        return total

    def sign_of(self, f: Poly) -> int:
        """F(a, b) 在该点的精确符号"""
        return self.field.sign(self.specialize(f))

    def mirrored(self) -> "SolutionPoint":
        """交换 a 与 b"""
        return SolutionPoint(self.anchor, self.b_expr, self.a_expr, self.mode, self.joint_certificate)

    def with_mode(self, mode: Mode) -> "SolutionPoint":
        return SolutionPoint(self.anchor, self.a_expr, self.b_expr, mode, self.joint_certificate)

    def same_point(self, other: "SolutionPoint") -> bool:
        return self.a.is_equal(other.a) and self.b.is_equal(other.b)

    def literals(self) -> Tuple[str, str]:
        return self.a.to_literal(), self.b.to_literal()

    def __repr__(self) -> str:
        a_lit, b_lit = self.literals()
        return f"SolutionPoint(a={a_lit}, b={b_lit}, mode={self.mode.value})"


@dataclass
class RealSolveResult:
    """solve_bivariate_real 的结果"""
    status: SolveStatus
    points: List[SolutionPoint] = field(default_factory=list)
    curves: List[Poly] = field(default_factory=list)
    basis: List[Poly] = field(default_factory=list)

    @property
    def complex_nonempty(self) -> bool:
        """复簇 (去掉排除轨迹上的曲线分支后) 是否非空"""
        return self.status is not SolveStatus.INCONSISTENT


def image(expr: Poly, anchor: RealAlg) -> RealAlg:
    """
    h(θ) 作为实代数数

    极小多项式取 Res_x(m(x), y - h(x)) 的因子, 隔离区间由 h(θ) 与各区间
    端点的精确比较选出。
    """
    expr = rebase(expr)
    if anchor.is_rational:
        return RealAlg.rational(NumberField(anchor).element(expr))
    expr = expr.rem(anchor.defining)
    if expr.is_ground:
        return RealAlg.rational(coefficients(expr)[0])
    if expr == Poly(X, X, domain=QQ):
        return anchor
    m = Poly(anchor.defining.as_expr(), X, Y, domain=QQ)
    shifted = Poly(Y - expr.as_expr(), X, Y, domain=QQ)
    res = rebase(unipoly(m.resultant(shifted).as_expr(), Y))
    for lo, hi in sturm_isolate(res):
        if alg_sign(expr - to_rational(lo), anchor) > 0 and alg_sign(expr - to_rational(hi), anchor) < 0:
            return RealAlg.from_root(res, lo, hi)
    raise AlgebraError("无法为参数化表达式定位隔离区间")


def make_point(
    anchor: RealAlg,
    a_expr,
    b_expr,
    mode: Mode = Mode.SPHERICAL,
    certificate: Sequence[Poly] = (),
) -> SolutionPoint:
    """构造解点, 参数化表达式对锚点极小多项式取余"""
    a_poly = unipoly(a_expr)
    b_poly = unipoly(b_expr)
    if not anchor.is_rational:
        a_poly = a_poly.rem(anchor.defining)
        b_poly = b_poly.rem(anchor.defining)
    return SolutionPoint(anchor, a_poly, b_poly, mode, tuple(certificate))


def _sort_points(points: List[SolutionPoint]) -> List[SolutionPoint]:
    def order(p: SolutionPoint, q: SolutionPoint) -> int:
        return p.a.compare(q.a) or p.b.compare(q.b)
    return sorted(points, key=cmp_to_key(order))


def _a_linear_parametrization(part: List[Poly], m: Poly) -> Optional[Poly]:
    """基中唯一的 a 元素关于 a 为一次时, 返回 a = h(b) mod m (变量 x)"""
    if len(part) != 1 or part[0].degree(A) != 1:
        return None
    q = part[0]
    lead = Poly(0, X, domain=QQ)
    rest = Poly(0, X, domain=QQ)
    for (i, j), c in q.terms():
        monomial = Poly(to_rational(to_fraction(c)) * X ** j, X, domain=QQ)
        if i == 1:
            lead += monomial
        else:
            rest += monomial
    lead = lead.rem(m)
    if lead.is_zero:
        return None
    return (-rest * lead.invert(m)).rem(m)


def _split_rational_b(gm: List[Poly], beta: Fraction, mode: Mode) -> List[SolutionPoint]:
    specialized = [unipoly(f.as_expr().subs(B, to_rational(beta)), A) for f in gm]
    q = polys_gcd(specialized)
    if q is None:
        raise SolverError(f"b = {beta} 处理想退化为整条直线")
    return [
        make_point(root, X, to_rational(beta), mode)
        for root in RealAlg.roots_of(rebase(q))
    ]


def _linear_form_points(gens: List[Poly], mode: Mode) -> List[SolutionPoint]:
    """线性换元 c = a + t*b 使理想处于 shape position"""
    # 补上 a 方向消去多项式的无平方因子部分, 保证理想为根理想
    reverse_basis = groebner_lex(gens, B, A)
    elim_a = univariate_element(reverse_basis, A)
    if elim_a is None:
        raise SolverError("理想不是零维的, 无法线性换元")
    radical = list(gens) + [bipoly(elim_a.sqf_part().as_expr())]

    for t in _SHAPE_SHIFTS:
        shifted = [f.as_expr().subs(A, X - t * B) for f in radical]
        basis = groebner_lex([Poly(e, B, X, domain=QQ) for e in shifted], B, X)
        if is_unit_basis(basis) or len(basis) != 2:
            continue
        head, tail = basis
        if tail.degree(B) != 0 or head.degree(B) != 1:
            continue
        head_expr = head.as_expr().expand()
        lead = head_expr.coeff(B, 1)
        if not lead.is_number or lead == 0:
            continue
        h = unipoly((-(head_expr - lead * B) / lead).expand(), X)
        points = []
        for anchor in RealAlg.roots_of(unipoly(tail.as_expr(), X)):
            points.append(make_point(anchor, X - t * h.as_expr(), h, mode))
        logger.debug(f"线性换元 c = a + ({t})*b 成功, 实解 {len(points)} 个")
        return points
    raise SolverError("线性换元未能达到 shape position")


def _points_from_basis(basis: List[Poly], mode: Mode) -> List[SolutionPoint]:
    elim_b = univariate_element(basis, B)
    if elim_b is None:
        raise SolverError("Gröbner 基中没有 b 的消去多项式, 理想不是零维的")
    points: List[SolutionPoint] = []
    for m_b, _ in irreducible_factors(elim_b):
        if not sturm_isolate(rebase(m_b)):
            continue
        gm = groebner_lex(basis + [bipoly(m_b.as_expr())])
        if is_unit_basis(gm):
            continue
        if m_b.degree() == 1:
            c0, c1 = coefficients(m_b)
            points.extend(_split_rational_b(gm, -c0 / c1, mode))
            continue
        m_x = rebase(m_b)
        a_part = [f for f in gm if f.degree(A) > 0]
        h_a = _a_linear_parametrization(a_part, m_x)
        if h_a is not None:
            for anchor in RealAlg.roots_of(m_x):
                points.append(make_point(anchor, h_a, X, mode))
        else:
            points.extend(_linear_form_points(gm, mode))
    return points


def solve_bivariate_real(
    gens: Sequence[Poly],
    mode: Mode = Mode.SPHERICAL,
    discard: Sequence[Poly] = EXCLUDED_LOCI,
    certify: bool = True,
) -> RealSolveResult:
    """
    求二元多项式组的全部实解

    Args:
        gens: Q[a, b] 中的生成元
        mode: 解点所属模式
        discard: 不视为解曲线的不可约因子 (默认 a-1, b-1, a-b)
        certify: 是否逐点验证全部生成元精确为零

    Returns:
        RealSolveResult; 出现不在 discard 中的曲线分支时状态为
        POSITIVE_DIMENSIONAL, 孤立点仍一并给出

    Raises:
        AlgebraError: 生成元全为零
        CertificationError: 解点未通过验证
    """
    polys: List[Poly] = []
    seen = set()
    for g in gens:
        p = bipoly(g)
        if p.is_zero:
            continue
        key = integerize(p)
        if key in seen:
            continue
        seen.add(key)
        polys.append(p)
    if not polys:
        raise AlgebraError("生成元全为零, 解集为整个平面")

    common = polys_gcd(polys)
    curves: List[Poly] = []
    cofactors = polys
    if common is not None and not common.is_ground:
        for factor, _ in irreducible_factors(common):
            if not any(proportional(factor, h) for h in discard):
                curves.append(factor)
        cofactors = [p.exquo(common) for p in polys]

    basis = incremental_groebner(cofactors)
    points: List[SolutionPoint] = []
    if not is_unit_basis(basis):
        points = _points_from_basis(basis, mode)

    points = [replace(p, joint_certificate=tuple(polys)) for p in points]
    if certify:
        for point in points:
            for g in polys:
                if point.sign_of(g) != 0:
                    raise CertificationError(
                        f"解点 {point!r} 处生成元不为零: {g.as_expr()}"
                    )
    if curves:
        status = SolveStatus.POSITIVE_DIMENSIONAL
    elif is_unit_basis(basis):
        status = SolveStatus.INCONSISTENT
    else:
        status = SolveStatus.POINTS
    logger.debug(
        f"求解完成: 状态 {status.value}, 实解 {len(points)} 个, 曲线 {len(curves)} 条",
        extra={"generators": len(polys)}
    )
    return RealSolveResult(status, _sort_points(points), curves, basis)


def point_from_values(a: RealAlg, b: RealAlg, mode: Mode = Mode.SPHERICAL) -> SolutionPoint:
    """
    由两个独立给出的实代数数构造联合解点

    至少一个为有理数时直接以另一个为锚点; 否则求解 {m_a(a), m_b(b)}
    并挑出坐标匹配的那个点。
    """
    if a.is_rational:
        return make_point(b, to_rational(a.value), X, mode)
    if b.is_rational:
        return make_point(a, X, to_rational(b.value), mode)
    gens = [bipoly(a.defining.as_expr().subs(X, A)), bipoly(b.defining.as_expr().subs(X, B))]
    result = solve_bivariate_real(gens, mode, discard=(), certify=False)
    for point in result.points:
        if point.a.is_equal(a) and point.b.is_equal(b):
            return point
    raise AlgebraError(f"无法为 ({a.to_literal()}, {b.to_literal()}) 构造联合表示")


__all__ = [
    "EXCLUDED_LOCI",
    "SolveStatus",
    "SolutionPoint",
    "RealSolveResult",
    "image",
    "make_point",
    "solve_bivariate_real",
    "point_from_values",
]

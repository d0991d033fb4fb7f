#!/usr/bin/env python3
# -*- coding: utf-8 -*-
"""
DistSet - 特征多项式系数与半正定判定

对称矩阵半正定当且仅当特征多项式的全部系数 e_k (k 阶主子式之和) 非负,
此时秩等于最大的 e_k > 0 的 k。系数用 Faddeev-LeVerrier 递推求出,
可在 Q[a, b] 上做符号计算, 也可在解点所在的数域 Q(θ) 上做精确数值计算。
"""

from dataclasses import dataclass
from fractions import Fraction
from typing import Any, List, Optional, Sequence, Tuple

from sympy import QQ, Poly, Symbol

from distset.algebra.numberfield import Element, NumberField
from distset.algebra.polynomials import GENS, to_rational
from distset.algebra.realalg import RealAlg
from distset.algebra.solver import SolutionPoint
from distset.gram.matrices import ONE, ZERO, PolyMatrix, principal_minors
from distset.utils.logging_utils import get_logger

logger = get_logger("gram.charpoly")

T = Symbol("t")


class _PolyRing:
    """Q[a, b] 上与 NumberField 同名的运算接口"""
    zero = ZERO
    one = ONE

    @staticmethod
    def add(x: Poly, y: Poly) -> Poly:
        return x + y

    @staticmethod
    def mul(x: Poly, y: Poly) -> Poly:
        return x * y

    @staticmethod
    def scale(x: Poly, q: Fraction) -> Poly:
        return x * to_rational(q)


@dataclass(frozen=True)
class CharCoeffs:
    """
    特征多项式系数

    det(tI - M) = Σ_k (-1)^k e[k] t^(n-k), e[0] = 1
    """
    e: Tuple[Any, ...]

    @property
    def order(self) -> int:
        return len(self.e) - 1

    def __getitem__(self, k: int):
        return self.e[k]

    def char_poly(self) -> Poly:
        """特征多项式, 变量 (t, a, b)"""
        n = self.order
        terms = 0
        for k, ek in enumerate(self.e):
            terms += (-1) ** k * ek.as_expr() * T ** (n - k)
        return Poly(terms, T, *GENS, domain=QQ)


def faddeev_leverrier(rows: Sequence[Sequence[Any]], ring: Any) -> List[Any]:
    """
    Faddeev-LeVerrier 递推

    Args:
        rows: 方阵, 元素属于 ring
        ring: 提供 zero/one/add/mul/scale 的环 (NumberField 或多项式环)

    Returns:
        [e_0, e_1, ..., e_n]
    """
    n = len(rows)
    # N_k = M N_{k-1} + c_{k-1} I, c_k = -tr(M N_k) / k, 其中 c_k = (-1)^k e_k
    product = [[ring.zero] * n for _ in range(n)]
    coeff = ring.one
    signed = [ring.one]
    for k in range(1, n + 1):
        current = [
            [
                ring.add(product[i][j], coeff) if i == j else product[i][j]
                for j in range(n)
            ]
            for i in range(n)
        ]
        product = [
            [
                _dot(ring, rows[i], [current[m][j] for m in range(n)])
                for j in range(n)
            ]
            for i in range(n)
        ]
        trace = ring.zero
        for i in range(n):
            trace = ring.add(trace, product[i][i])
        coeff = ring.scale(trace, Fraction(-1, k))
        signed.append(coeff)
    return [c if k % 2 == 0 else ring.scale(c, Fraction(-1)) for k, c in enumerate(signed)]


def _dot(ring: Any, left: Sequence[Any], right: Sequence[Any]) -> Any:
    total = ring.zero
    for x, y in zip(left, right):
        total = ring.add(total, ring.mul(x, y))
    return total


def char_coeffs(matrix: PolyMatrix) -> CharCoeffs:
    """符号特征多项式系数 (Faddeev-LeVerrier)"""
    return CharCoeffs(tuple(faddeev_leverrier(matrix.rows(), _PolyRing)))


def char_coeffs_by_minors(matrix: PolyMatrix) -> CharCoeffs:
    """符号特征多项式系数 (主子式求和), 用于交叉校验"""
    e = [ONE]
    for k in range(1, matrix.order + 1):
        total = ZERO
        for minor in principal_minors(matrix, k):
            total += minor
        e.append(total)
    return CharCoeffs(tuple(e))


def psd_rank_from_signs(signs: Sequence[int]) -> Tuple[bool, Optional[int]]:
    """
    由 e_0..e_n 的符号判定半正定性与秩

    Returns:
        (是否半正定, 秩); 非半正定时秩为 None
    """
    if any(s < 0 for s in signs):
        return False, None
    rank = max((k for k, s in enumerate(signs) if s > 0), default=0)
    return True, rank


def specialize_matrix(matrix: PolyMatrix, point: SolutionPoint) -> List[List[Element]]:
    """矩阵在解点处的取值 (数域元素)"""
    cache = {}
    rows = []
    for row in matrix.entries:
        values = []
        for entry in row:
            key = entry.as_expr()
            if key not in cache:
                cache[key] = point.specialize(entry)
            values.append(cache[key])
        rows.append(values)
    return rows


def psd_rank_in_field(rows: Sequence[Sequence[Element]], field: NumberField) -> Tuple[bool, Optional[int]]:
    """数域上矩阵的半正定性与秩"""
    if not rows:
        return True, 0
    coeffs = faddeev_leverrier(rows, field)
    return psd_rank_from_signs([field.sign(c) for c in coeffs])


def psd_rank_at(matrix: PolyMatrix, point: SolutionPoint) -> Tuple[bool, Optional[int]]:
    """
    候选矩阵在解点处的精确半正定性与秩

    Returns:
        (是否半正定, 秩); 非半正定时秩为 None
    """
    result = psd_rank_in_field(specialize_matrix(matrix, point), point.field)
    logger.debug(f"半正定判定: psd={result[0]}, rank={result[1]}", extra={"point": repr(point)})
    return result


def rational_field() -> NumberField:
    """有理数域 Q"""
    return NumberField(RealAlg.rational(0))


def psd_rank_rational(rows: Sequence[Sequence[Fraction]]) -> Tuple[bool, Optional[int]]:
    """有理对称矩阵的半正定性与秩"""
    field = rational_field()
    return psd_rank_in_field([[Fraction(x) for x in row] for row in rows], field)


def field_rank(rows: Sequence[Sequence[Element]], field: NumberField) -> int:
    """数域上的 Gauss 消元求秩 (矩阵可以不是方阵)"""
    matrix = [list(row) for row in rows]
    if not matrix:
        return 0
    n_rows, n_cols = len(matrix), len(matrix[0])
    rank = 0
    for col in range(n_cols):
        pivot = next((r for r in range(rank, n_rows) if not field.is_zero(matrix[r][col])), None)
        if pivot is None:
            continue
        matrix[rank], matrix[pivot] = matrix[pivot], matrix[rank]
        inverse = field.inv(matrix[rank][col])
        for r in range(rank + 1, n_rows):
            if field.is_zero(matrix[r][col]):
                continue
            factor = field.mul(matrix[r][col], inverse)
            for c in range(col, n_cols):
                matrix[r][c] = field.sub(matrix[r][c], field.mul(factor, matrix[rank][c]))
        rank += 1
        if rank == n_rows:
            break
    return rank


def rank_at(matrix: PolyMatrix, point: SolutionPoint) -> int:
    """候选矩阵在解点处的精确秩 (不要求半正定)"""
    return field_rank(specialize_matrix(matrix, point), point.field)


__all__ = [
    "T",
    "CharCoeffs",
    "faddeev_leverrier",
    "char_coeffs",
    "char_coeffs_by_minors",
    "psd_rank_from_signs",
    "specialize_matrix",
    "psd_rank_in_field",
    "psd_rank_at",
    "rational_field",
    "psd_rank_rational",
    "field_rank",
    "rank_at",
]

#!/usr/bin/env python3
# -*- coding: utf-8 -*-
"""
DistSet - 候选矩阵模块

球面模式的候选 Gram 矩阵 G(a, b) = aA + bĀ + I, 一般模式的 Menger 矩阵
M_ij = (D_in + D_jn - D_ij) / 2 (以最后一个顶点为基点, D = aA + bĀ)。

两类矩阵的主子式只依赖对应诱导子图的同构类: Gram 矩阵的 k 阶主子式
即 k 点诱导子图的 Gram 行列式; Menger 矩阵的 k 阶主子式是 k+1 个点
(含基点) 的 Cayley-Menger 型不变量, 与基点的选取无关。因此按诱导子图
规范编码缓存行列式。
"""

from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations
from typing import Callable, Dict, List, Sequence, Tuple

from sympy import QQ, Poly, Rational
from sympy.polys.polyerrors import ExactQuotientFailed

from distset.algebra.polynomials import A, B, GENS, incremental_groebner, reduce_mod
from distset.algebra.solver import SolutionPoint
from distset.core.exceptions import BadSizeError, MatrixError
from distset.graphs.canonical import canonical_code
from distset.graphs.graph import Graph, decode, encode
from distset.utils.logging_utils import get_logger

logger = get_logger("gram.matrices")

ZERO = Poly(0, *GENS, domain=QQ)
ONE = Poly(1, *GENS, domain=QQ)
POLY_A = Poly(A, *GENS, domain=QQ)
POLY_B = Poly(B, *GENS, domain=QQ)
HALF = Rational(1, 2)


@dataclass(frozen=True)
class PolyMatrix:
    """Q[a, b] 上的对称方阵"""
    entries: Tuple[Tuple[Poly, ...], ...]

    def __post_init__(self):
        n = len(self.entries)
        if n < 1:
            raise MatrixError("矩阵阶数必须为正")
        for i, row in enumerate(self.entries):
            if len(row) != n:
                raise MatrixError(f"第 {i} 行长度 {len(row)} 与阶数 {n} 不符")
            for j in range(i):
                if row[j] != self.entries[j][i]:
                    raise MatrixError(f"矩阵在 ({i}, {j}) 处不对称")

    @property
    def order(self) -> int:
        return len(self.entries)

    def __getitem__(self, index: Tuple[int, int]) -> Poly:
        i, j = index
        return self.entries[i][j]

    def rows(self) -> List[List[Poly]]:
        return [list(row) for row in self.entries]

    def submatrix(self, indices: Sequence[int]) -> "PolyMatrix":
        return PolyMatrix(tuple(tuple(self.entries[i][j] for j in indices) for i in indices))

    def map_entries(self, fn: Callable[[Poly], Poly]) -> "PolyMatrix":
        return PolyMatrix(tuple(tuple(fn(e) for e in row) for row in self.entries))

    def trace(self) -> Poly:
        total = ZERO
        for i in range(self.order):
            total += self.entries[i][i]
        return total


def candidate_gram(graph: Graph) -> PolyMatrix:
    """
    候选 Gram 矩阵: 对角线为 1, 边处为 a, 非边处为 b
    """
    n = graph.order
    return PolyMatrix(tuple(
        tuple(
            ONE if i == j else (POLY_A if graph.has_edge(i, j) else POLY_B)
            for j in range(n)
        )
        for i in range(n)
    ))


def _distance(graph: Graph, i: int, j: int) -> Poly:
    if i == j:
        return ZERO
    return POLY_A if graph.has_edge(i, j) else POLY_B


def menger_matrix(graph: Graph) -> PolyMatrix:
    """
    Menger 矩阵, n-1 阶, 基点为最后一个顶点

    Raises:
        MatrixError: 图只有一个顶点
    """
    n = graph.order
    if n < 2:
        raise MatrixError("Menger 矩阵至少需要两个点")
    base = n - 1
    return PolyMatrix(tuple(
        tuple(
            (_distance(graph, i, base) + _distance(graph, j, base) - _distance(graph, i, j)) * HALF
            for j in range(base)
        )
        for i in range(base)
    ))


def determinant(rows: Sequence[Sequence[Poly]]) -> Poly:
    """
    Bareiss 无分式消元求行列式

    每一步的除法都是精确的; 极端情况下精确除法失败时退回 Laplace 展开。
    """
    n = len(rows)
    if n == 0:
        return ONE
    matrix = [list(row) for row in rows]
    sign = 1
    previous = ONE
    try:
        for k in range(n - 1):
            if matrix[k][k].is_zero:
                pivot = next((i for i in range(k + 1, n) if not matrix[i][k].is_zero), None)
                if pivot is None:
                    return ZERO
                matrix[k], matrix[pivot] = matrix[pivot], matrix[k]
                sign = -sign
            for i in range(k + 1, n):
                for j in range(k + 1, n):
                    matrix[i][j] = (
                        matrix[i][j] * matrix[k][k] - matrix[i][k] * matrix[k][j]
                    ).exquo(previous)
            previous = matrix[k][k]
    except ExactQuotientFailed:
        logger.warning("Bareiss 精确除法失败, 改用 Laplace 展开")
        return laplace_determinant(rows)
    result = matrix[n - 1][n - 1]
    return result if sign > 0 else -result


def laplace_determinant(rows: Sequence[Sequence[Poly]]) -> Poly:
    """按第一行展开, 仅用于小矩阵与交叉校验"""
    n = len(rows)
    if n == 0:
        return ONE
    if n == 1:
        return rows[0][0]
    total = ZERO
    for j in range(n):
        if rows[0][j].is_zero:
            continue
        minor = [[rows[i][k] for k in range(n) if k != j] for i in range(1, n)]
        term = rows[0][j] * laplace_determinant(minor)
        total = total + term if j % 2 == 0 else total - term
    return total


def principal_minors(matrix: PolyMatrix, k: int) -> List[Poly]:
    """
    全部 k 阶主子式, 按指标组的字典序排列

    Raises:
        BadSizeError: k 不在 1..n 内
    """
    if not 1 <= k <= matrix.order:
        raise BadSizeError(f"主子式阶数 {k} 不在 1..{matrix.order} 内", size=k)
    return [
        determinant(matrix.submatrix(indices).rows())
        for indices in combinations(range(matrix.order), k)
    ]


def all_minors(matrix: PolyMatrix, k: int) -> List[Poly]:
    """
    全部 k 阶子式 (含非主子式), 去掉零与常数倍重复

    全部 k 阶子式为零当且仅当秩小于 k; 只取主子式时这一等价仅对半正定
    矩阵成立。

    Raises:
        BadSizeError: k 不在 1..n 内
    """
    if not 1 <= k <= matrix.order:
        raise BadSizeError(f"子式阶数 {k} 不在 1..{matrix.order} 内", size=k)
    found: Dict[Poly, Poly] = {}
    index_sets = list(combinations(range(matrix.order), k))
    for i, rows in enumerate(index_sets):
        # 对称矩阵: (I, J) 与 (J, I) 的子式相同
        for cols in index_sets[i:]:
            minor = determinant([[matrix[r, c] for c in cols] for r in rows])
            if minor.is_zero:
                continue
            found.setdefault(minor.monic(), minor)
    return list(found.values())


def non_principal_minors(matrix: PolyMatrix, k: int) -> List[Poly]:
    """
    全部 k 阶非主子式 (行指标组与列指标组不同), 去掉零与常数倍重复

    Raises:
        BadSizeError: k 不在 1..n 内
    """
    if not 1 <= k <= matrix.order:
        raise BadSizeError(f"子式阶数 {k} 不在 1..{matrix.order} 内", size=k)
    found: Dict[Poly, Poly] = {}
    index_sets = list(combinations(range(matrix.order), k))
    for i, rows in enumerate(index_sets):
        for cols in index_sets[i + 1:]:
            minor = determinant([[matrix[r, c] for c in cols] for r in rows])
            if not minor.is_zero:
                found.setdefault(minor.monic(), minor)
    return list(found.values())


@lru_cache(maxsize=None)
def _gram_determinant(code: str, order: int) -> Poly:
    return determinant(candidate_gram(decode(code, order)).rows())


@lru_cache(maxsize=None)
def _menger_determinant(code: str, order: int) -> Poly:
    return determinant(menger_matrix(decode(code, order)).rows())


def gram_minor_system(graph: Graph, k: int) -> List[Poly]:
    """
    候选 Gram 矩阵全部 k 阶主子式 (按诱导子图同构类去重)

    Returns:
        非零主子式列表, 按诱导子图规范编码排序
    """
    if not 1 <= k <= graph.order:
        raise BadSizeError(f"主子式阶数 {k} 不在 1..{graph.order} 内", size=k)
    codes = {
        canonical_code(graph.induced(subset))
        for subset in combinations(range(graph.order), k)
    }
    minors = [_gram_determinant(code, k) for code in sorted(codes)]
    return [m for m in minors if not m.is_zero]


def menger_minor_system(graph: Graph, k: int) -> List[Poly]:
    """
    Menger 矩阵全部 k 阶主子式 (按含基点的 k+1 点诱导子图同构类去重)

    Returns:
        非零主子式列表, 按诱导子图规范编码排序
    """
    n = graph.order
    if not 1 <= k <= n - 1:
        raise BadSizeError(f"主子式阶数 {k} 不在 1..{n - 1} 内", size=k)
    base = n - 1
    codes = {
        canonical_code(graph.induced(subset + (base,)))
        for subset in combinations(range(base), k)
    }
    minors = [_menger_determinant(code, k + 1) for code in sorted(codes)]
    return [m for m in minors if not m.is_zero]


def minor_system(graph: Graph, k: int, spherical: bool) -> List[Poly]:
    """按模式选择主子式系统"""
    return gram_minor_system(graph, k) if spherical else menger_minor_system(graph, k)


def minor_completeness_audit(
    graph: Graph,
    k: int,
    points: Sequence[SolutionPoint] = (),
    spherical: bool = True,
) -> List[Poly]:
    """
    非主子式的完备性审计

    求解只用主子式方程组。这里把每个 k 阶非主子式对主子式方程组的字典序
    Gröbner 基取正规形; 正规形不为零的非主子式还必须在给定的每个解点处
    精确为零。

    Args:
        graph: 图
        k: 子式阶数, 通常为 d + 1
        points: 该图在对应模式下的解点
        spherical: True 用候选 Gram 矩阵, False 用 Menger 矩阵

    Returns:
        未通过审计的非主子式, 空列表表示通过
    """
    matrix = candidate_gram(graph) if spherical else menger_matrix(graph)
    basis = incremental_groebner(minor_system(graph, k, spherical))
    failures: List[Poly] = []
    reduced_count = 0
    for minor in non_principal_minors(matrix, k):
        if reduce_mod(minor, basis).is_zero:
            reduced_count += 1
            continue
        if points and all(point.sign_of(minor) == 0 for point in points):
            continue
        failures.append(minor)
    logger.debug(
        f"{encode(graph)} 非主子式审计: 理想内 {reduced_count} 个, 未通过 {len(failures)} 个",
        extra={"code": encode(graph), "rows": k}
    )
    return failures


__all__ = [
    "PolyMatrix",
    "candidate_gram",
    "menger_matrix",
    "determinant",
    "laplace_determinant",
    "principal_minors",
    "all_minors",
    "non_principal_minors",
    "gram_minor_system",
    "menger_minor_system",
    "minor_system",
    "minor_completeness_audit",
]

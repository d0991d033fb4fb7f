#!/usr/bin/env python3
# -*- coding: utf-8 -*-
"""
DistSet - 候选矩阵、子式系统与半正定判定测试
"""

import random
from fractions import Fraction
from itertools import combinations

import pytest
from sympy import Matrix, Rational

from distset.algebra.polynomials import (
    A,
    B,
    X,
    bipoly,
    coefficients,
    from_coefficients,
    proportional,
    to_rational,
    unipoly,
)
from distset.algebra.realalg import RealAlg
from distset.algebra.solver import make_point
from distset.algebra.sturm import count_roots_in, root_bound
from distset.core.exceptions import BadSizeError, MatrixError
from distset.core.types import Mode
from distset.gram.charpoly import (
    char_coeffs,
    char_coeffs_by_minors,
    field_rank,
    psd_rank_at,
    psd_rank_from_signs,
    psd_rank_rational,
    rank_at,
    rational_field,
)
from distset.gram.matrices import (
    PolyMatrix,
    all_minors,
    candidate_gram,
    determinant,
    gram_minor_system,
    laplace_determinant,
    menger_matrix,
    menger_minor_system,
    minor_completeness_audit,
    non_principal_minors,
    principal_minors,
)
from distset.graphs.graph import Graph, decode
from distset.solvers.general_solver import solve_general
from distset.solvers.spherical_solver import solve_spherical


def _point(a, b, mode=Mode.SPHERICAL):
    return make_point(RealAlg.rational(0), Rational(a), Rational(b), mode)


class TestCandidateMatrices:
    """Gram 矩阵与 Menger 矩阵"""

    def test_gram_entries(self, p3):
        matrix = candidate_gram(p3)
        assert matrix.order == 3
        assert matrix[0, 1] == bipoly(A)
        assert matrix[0, 2] == bipoly(B)
        assert matrix[1, 1] == bipoly(1)

    def test_gram_determinant_of_path(self, p3):
        det = determinant(candidate_gram(p3).rows())
        assert det == bipoly((1 - B) * (1 + B - 2 * A ** 2))

    def test_menger_determinant_of_path(self, p3):
        matrix = menger_matrix(p3)
        assert matrix.order == 2
        det = determinant(matrix.rows())
        assert det == bipoly(A * B - B ** 2 / 4)

    def test_menger_needs_two_points(self):
        with pytest.raises(MatrixError):
            menger_matrix(Graph(1))

    def test_asymmetric_matrix_rejected(self):
        one, zero = bipoly(1), bipoly(0)
        with pytest.raises(MatrixError):
            PolyMatrix(((one, zero), (one, one)))

    def test_bareiss_matches_laplace(self, c5):
        rows = candidate_gram(c5).rows()
        assert determinant(rows) == laplace_determinant(rows)
        rows = menger_matrix(c5).rows()
        assert determinant(rows) == laplace_determinant(rows)


class TestMinorSystems:
    """主子式与全部子式"""

    def test_principal_minor_count(self, c5):
        assert len(principal_minors(candidate_gram(c5), 3)) == 10
        with pytest.raises(BadSizeError):
            principal_minors(candidate_gram(c5), 6)

    def test_gram_system_deduplicates_by_class(self, c5):
        # C5 的 3 点诱导子图只有 P3 与 K2+K1 两类
        system = gram_minor_system(c5, 3)
        assert len(system) == 2
        assert any(proportional(m, bipoly((1 - B) * (1 + B - 2 * A ** 2))) for m in system)
        assert any(proportional(m, bipoly((1 - A) * (1 + A - 2 * B ** 2))) for m in system)

    def test_menger_system_of_path(self, p3):
        system = menger_minor_system(p3, 2)
        assert len(system) == 1
        assert proportional(system[0], bipoly(4 * A * B - B ** 2))
        with pytest.raises(BadSizeError):
            menger_minor_system(p3, 3)

    def test_all_minors_include_non_principal(self, c4):
        matrix = candidate_gram(c4)
        minors = all_minors(matrix, 3)
        principal = principal_minors(matrix, 3)
        assert len(minors) >= len({m.monic() for m in principal if not m.is_zero})
        with pytest.raises(BadSizeError):
            all_minors(matrix, 5)

    def test_all_minors_vanish_on_square(self, c4):
        matrix = candidate_gram(c4)
        point = _point(0, -1)
        assert all(point.sign_of(m) == 0 for m in all_minors(matrix, 3))


class TestCharacteristicCoefficients:
    """特征多项式系数、半正定性与秩"""

    def test_faddeev_matches_minor_sums(self, p4):
        matrix = candidate_gram(p4)
        assert char_coeffs(matrix).e == char_coeffs_by_minors(matrix).e

    def test_char_poly_degree(self, p3):
        coeffs = char_coeffs(candidate_gram(p3))
        assert coeffs.order == 3
        assert coeffs.char_poly().degree(coeffs.char_poly().gens[0]) == 3

    def test_psd_from_signs(self):
        assert psd_rank_from_signs([1, 1, 1, 0]) == (True, 2)
        assert psd_rank_from_signs([1, 1, -1, 0]) == (False, None)
        assert psd_rank_from_signs([1, 0, 0]) == (True, 0)

    def test_rational_matrices(self):
        assert psd_rank_rational([[1, 0], [0, 1]]) == (True, 2)
        assert psd_rank_rational([[1, 1], [1, 1]]) == (True, 1)
        assert psd_rank_rational([[1, 2], [2, 1]]) == (False, None)
        assert psd_rank_rational([[Fraction(1, 2), 0], [0, 0]]) == (True, 1)

    def test_square_gram_rank(self, c4):
        matrix = candidate_gram(c4)
        point = _point(0, -1)
        assert psd_rank_at(matrix, point) == (True, 2)
        assert rank_at(matrix, point) == 2

    def test_rank_without_psd(self, c4):
        # 特征值 0, -2, 3, 3: 矩阵不定, 精确秩仍可求
        matrix = candidate_gram(c4)
        point = _point(Rational(1, 2), -2)
        psd, rank = psd_rank_at(matrix, point)
        assert not psd
        assert rank is None
        assert rank_at(matrix, point) == 3

    def test_irrational_point(self, c5):
        anchor = RealAlg.from_literal("(-1 + 1*sqrt(5))/4")
        # b = -1/2 - a 为 C5 的另一参数 (-1 - sqrt 5)/4
        point = make_point(anchor, X, -Rational(1, 2) - X)
        psd, rank = psd_rank_at(candidate_gram(c5), point)
        assert psd
        assert rank == 2

    def test_collinear_menger_point(self, p3):
        matrix = menger_matrix(p3)
        point = _point(1, 4, Mode.GENERAL)
        assert psd_rank_at(matrix, point) == (True, 1)


def _random_symmetric(rng: random.Random, n: int):
    rows = [[Fraction(0)] * n for _ in range(n)]
    for i in range(n):
        for j in range(i, n):
            rows[i][j] = rows[j][i] = Fraction(rng.randint(-4, 4), rng.randint(1, 3))
    return rows


def _gram_product(rng: random.Random, n: int, r: int):
    """LᵀL, L 为 r x n 整数矩阵: 半正定且秩不超过 r"""
    left = [[Fraction(rng.randint(-3, 3)) for _ in range(n)] for _ in range(r)]
    return [
        [sum((left[k][i] * left[k][j] for k in range(r)), Fraction(0)) for j in range(n)]
        for i in range(n)
    ]


def _random_rational_matrix(rng: random.Random):
    n = rng.randint(1, 6)
    if rng.random() < 0.5:
        return _random_symmetric(rng, n)
    return _gram_product(rng, n, rng.randint(0, n))


def _sympy_matrix(rows):
    return Matrix([[to_rational(x) for x in row] for row in rows])


def _eigen_profile(rows):
    """(负特征值是否存在, 零特征值重数), 由特征多项式的 Sturm 计数得出"""
    char = unipoly(_sympy_matrix(rows).charpoly(X).as_expr())
    coeffs = coefficients(char)
    zeros = next(k for k, c in enumerate(coeffs) if c != 0)
    stripped = from_coefficients(coeffs[zeros:])
    negative = count_roots_in(stripped, -root_bound(stripped), Fraction(0))
    return negative > 0, zeros


def _principal_rank(rows) -> int:
    """非奇异主子矩阵的最大阶数"""
    n = len(rows)
    for k in range(n, 0, -1):
        for indices in combinations(range(n), k):
            if _sympy_matrix([[rows[i][j] for j in indices] for i in indices]).det() != 0:
                return k
    return 0


def _random_poly_matrix(rng: random.Random, n: int) -> PolyMatrix:
    entries = [[None] * n for _ in range(n)]
    for i in range(n):
        for j in range(i, n):
            entry = bipoly(rng.randint(-2, 2) + rng.randint(-2, 2) * A + rng.randint(-2, 2) * B)
            entries[i][j] = entries[j][i] = entry
    return PolyMatrix(tuple(tuple(row) for row in entries))


class TestRandomMatrices:
    """随机有理矩阵上的交叉校验"""

    def test_psd_rule_matches_eigenvalue_signs(self):
        rng = random.Random(20240711)
        seen = {True: 0, False: 0}
        for _ in range(500):
            rows = _random_rational_matrix(rng)
            has_negative, zeros = _eigen_profile(rows)
            expected = (False, None) if has_negative else (True, len(rows) - zeros)
            assert psd_rank_rational(rows) == expected
            seen[not has_negative] += 1
        assert seen[True] > 0 and seen[False] > 0

    def test_principal_rank_matches_elimination(self):
        rng = random.Random(31415)
        deficient = 0
        field = rational_field()
        for _ in range(500):
            rows = _random_rational_matrix(rng)
            rank = field_rank(rows, field)
            assert rank == _principal_rank(rows)
            deficient += rank < len(rows)
        assert deficient > 0

    def test_faddeev_matches_minor_sums_on_random_matrices(self):
        rng = random.Random(2718)
        for _ in range(100):
            matrix = _random_poly_matrix(rng, rng.randint(1, 5))
            assert char_coeffs(matrix).e == char_coeffs_by_minors(matrix).e


class TestMinorAudit:
    """非主子式审计"""

    def test_non_principal_minors_of_square(self, c4):
        matrix = candidate_gram(c4)
        minors = non_principal_minors(matrix, 3)
        assert minors
        point = _point(0, -1)
        assert all(point.sign_of(m) == 0 for m in minors)
        with pytest.raises(BadSizeError):
            non_principal_minors(matrix, 5)

    def test_pentagon_spherical_audit(self, c5):
        points = [s.point for s in solve_spherical(c5, 2).solutions]
        assert points
        assert minor_completeness_audit(c5, 3, points) == []

    def test_pentagon_general_audit(self, c5):
        points = [s.point for s in solve_general(c5, 2).solutions]
        assert points
        assert minor_completeness_audit(c5, 3, points, spherical=False) == []

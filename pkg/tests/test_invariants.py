#!/usr/bin/env python3
# -*- coding: utf-8 -*-
"""
DistSet - R^4 前几层分类上的不变量测试

补图对称性、球面与一般模式的秩一致性、非主子式审计以及全部已认证解的
浮点实现。需要先完成 n=6..8 的分类, 默认以 -m "not slow" 跳过。
"""

import pytest

from distset.algebra.realalg import RealAlg
from distset.algebra.solver import make_point, point_from_values
from distset.atlas.engine import full_atlas
from distset.core.types import DEFAULT_REALIZATION_TOLERANCE, Mode
from distset.gram.charpoly import psd_rank_at
from distset.gram.matrices import menger_matrix, minor_completeness_audit
from distset.graphs.graph import complement, decode
from distset.solvers.general_solver import solve_general
from distset.solvers.realization import realize
from distset.solvers.spherical_solver import solve_spherical

pytestmark = [pytest.mark.slow, pytest.mark.integration]

DIM = 4


@pytest.fixture(scope="module")
def atlas8():
    return full_atlas(DIM, 6, 8)


def _survivors(entries, n, mode):
    return [e for e in entries if e.n == n and e.mode is mode and e.survived]


def _unmatched_mirrors(left, right):
    """left 中找不到 (a, b) 互换后对应解的个数"""
    pool = list(right)
    missing = 0
    for s in left:
        match = next(
            (t for t in pool if t.a.is_equal(s.b) and t.b.is_equal(s.a) and t.rank == s.rank),
            None,
        )
        if match is None:
            missing += 1
        else:
            pool.remove(match)
    return missing + len(pool)


class TestComplementSymmetry:
    """补图的解集是原图解集交换 a 与 b"""

    def test_seventh_level_survivors(self, atlas8):
        _, entries = atlas8
        survivors = _survivors(entries, 7, Mode.SPHERICAL)
        assert len(survivors) == 17
        for entry in survivors:
            graph = decode(entry.class_key, entry.n)
            own = solve_spherical(graph, DIM)
            mirrored = solve_spherical(complement(graph), DIM)
            assert mirrored.survived == own.survived
            assert _unmatched_mirrors(own.solutions, mirrored.solutions) == 0


class TestModeConsistency:
    """球面解换算为距离平方 (2-2a, 2-2b) 后在一般模式下的秩"""

    def test_seventh_level_solutions(self, atlas8):
        _, entries = atlas8
        checked = 0
        for entry in _survivors(entries, 7, Mode.SPHERICAL):
            graph = decode(entry.class_key, entry.n)
            matrix = menger_matrix(graph)
            for solution in solve_spherical(graph, DIM).admissible_solutions:
                point = solution.point
                converted = make_point(
                    point.anchor, 2 - 2 * point.a_expr, 2 - 2 * point.b_expr, Mode.GENERAL
                )
                psd, rank = psd_rank_at(matrix, converted)
                assert psd
                if solution.family:
                    # 截面小球面上的点集: 仿射维数可比线性维数少一
                    assert rank in (solution.rank - 1, solution.rank)
                else:
                    assert rank == solution.rank
                checked += 1
        assert checked > 0


class TestMinorCompleteness:
    """n <= 8 的存活类上非主子式的审计"""

    @pytest.mark.parametrize("n", [7, 8])
    @pytest.mark.parametrize("mode", [Mode.SPHERICAL, Mode.GENERAL])
    def test_survivors_pass_audit(self, atlas8, n, mode):
        _, entries = atlas8
        spherical = mode is Mode.SPHERICAL
        for entry in _survivors(entries, n, mode):
            graph = decode(entry.class_key, entry.n)
            verdict = solve_spherical(graph, DIM) if spherical else solve_general(graph, DIM)
            if getattr(verdict, "continuum", False):
                continue
            points = [s.point for s in verdict.solutions]
            if not points:
                continue
            assert minor_completeness_audit(graph, DIM + 1, points, spherical=spherical) == []


class TestRealizationSweep:
    """全部已认证解的浮点实现"""

    @pytest.mark.parametrize("mode", [Mode.SPHERICAL, Mode.GENERAL])
    def test_certified_solutions_realize(self, atlas8, mode):
        _, entries = atlas8
        realized = 0
        for n in (6, 7, 8):
            for entry in _survivors(entries, n, mode):
                graph = decode(entry.class_key, entry.n)
                for record in entry.admissible_solutions:
                    if record.rank is None:
                        continue
                    point = point_from_values(
                        RealAlg.from_literal(record.a_star),
                        RealAlg.from_literal(record.b_star),
                        mode,
                    )
                    result = realize(graph, point, DIM, rank=record.rank)
                    assert result.coordinates.shape == (n, DIM)
                    assert result.residual <= DEFAULT_REALIZATION_TOLERANCE
                    realized += 1
        assert realized > 0

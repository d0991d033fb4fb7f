#!/usr/bin/env python3
# -*- coding: utf-8 -*-
"""
DistSet - 球面与一般模式求解器、集合计数测试
"""

import pytest

from distset.algebra.polynomials import A, B, bipoly
from distset.core.exceptions import NotTwoDistanceGraphError, PositiveDimensionalUnexpectedError
from distset.core.types import Mode, Orientation
from distset.graphs.graph import Graph, decode
from distset.solvers.general_solver import GeneralSolver, solve_general
from distset.solvers.set_counting import count_sets, mirror_value
from distset.solvers.spherical_solver import (
    SphericalSolver,
    family_directions,
    is_family_line,
    line_sample,
    solve_spherical,
)

SQRT5 = 5 ** 0.5
GOLDEN_SQ = (3 + SQRT5) / 2

# 五边形两种标号所在的共轭直线组
PENTAGON_LINES = bipoly(1 - A - B - A ** 2 - B ** 2 + 3 * A * B)


class TestFamilyLines:
    """经过 (1, 1) 的直线族"""

    def test_rational_line(self):
        line = bipoly(A - 2 * B + 1)
        assert is_family_line(line)
        [t] = family_directions(line)
        assert t.to_literal() == "2"

    def test_line_outside_region(self):
        # 方向 t = -1, 与 a<1, b<1 区域不相交
        assert family_directions(bipoly(A + B - 2)) == []
        assert not is_family_line(bipoly(A + B - 2))

    def test_curve_not_through_unit(self):
        assert family_directions(bipoly(A ** 2 + B ** 2 - 1)) == []

    def test_conjugate_line_pair(self):
        directions = family_directions(PENTAGON_LINES)
        assert [t.to_float() for t in directions] == pytest.approx([1 / GOLDEN_SQ, GOLDEN_SQ])
        assert all(t.degree == 2 for t in directions)

    def test_line_sample_on_curve(self):
        point = line_sample(PENTAGON_LINES)
        assert point.sign_of(PENTAGON_LINES) == 0
        assert point.b.to_literal() == "1/2"
        assert point.sign_of(bipoly(A - 1)) < 0


class TestSphericalSolver:
    """球面模式"""

    def test_pentagon_in_plane(self, c5):
        verdict = solve_spherical(c5, 2)
        assert verdict.survived
        assert verdict.lines == []
        assert len(verdict.solutions) == 2
        graph_side = [s for s in verdict.solutions if s.orientation is Orientation.GRAPH]
        assert len(graph_side) == 1
        solution = graph_side[0]
        assert solution.point.literals() == ("(-1 + 1*sqrt(5))/4", "(-1 + -1*sqrt(5))/4")
        assert solution.psd and solution.rank == 2
        assert not solution.jspherical
        assert all(s.admissible for s in verdict.solutions)
        assert count_sets(verdict) == 1

    def test_pentagon_family_in_three_space(self, c5):
        verdict = solve_spherical(c5, 3)
        assert verdict.survived
        assert len(verdict.lines) == 1
        assert family_directions(verdict.lines[0])
        assert len(verdict.solutions) == 2
        assert all(s.family and s.psd and s.rank == 2 for s in verdict.solutions)
        assert count_sets(verdict) == 1

    def test_square_has_no_spherical_set(self, c4):
        # 4 点在圆上的两距离集只有正方形, 对应 (0, -1), 其秩为 2
        verdict = solve_spherical(c4, 2)
        literals = {s.point.literals() for s in verdict.admissible_solutions}
        assert ("0", "-1") in literals

    def test_rejects_one_distance_graphs(self):
        with pytest.raises(NotTwoDistanceGraphError):
            solve_spherical(Graph.complete(5), 2)
        with pytest.raises(NotTwoDistanceGraphError):
            solve_spherical(Graph.empty(5), 2)

    def test_rejects_small_order(self, c4):
        with pytest.raises(PositiveDimensionalUnexpectedError):
            solve_spherical(c4, 3)

    def test_solver_stats(self, c5):
        solver = SphericalSolver(dim=2)
        solver.solve(c5)
        status = solver.get_status()
        assert status["mode"] == Mode.SPHERICAL.value
        assert status["stats"]["graphs_solved"] == 1
        assert status["stats"]["surviving"] == 1
        assert status["stats"]["admissible_solutions"] == 2


class TestGeneralSolver:
    """一般模式"""

    def test_pentagon(self, c5):
        verdict = solve_general(c5, 2)
        assert verdict.survived and not verdict.continuum
        values = sorted(s.b.to_float() for s in verdict.solutions)
        assert values == pytest.approx([1 / GOLDEN_SQ, GOLDEN_SQ])
        graph_side = [s for s in verdict.solutions if s.orientation is Orientation.GRAPH]
        assert [s.b.to_literal() for s in graph_side] == ["(3 + 1*sqrt(5))/2"]
        assert all(s.psd and s.rank == 2 and s.spherical_flag for s in verdict.solutions)
        assert count_sets(verdict) == 1
        assert count_sets(verdict, nonspherical_only=True) == 0

    def test_collinear_path(self, p3):
        verdict = solve_general(p3, 1)
        assert [s.b.to_literal() for s in verdict.solutions] == ["4"]
        solution = verdict.solutions[0]
        assert solution.orientation is Orientation.GRAPH
        assert solution.rank == 1
        assert solution.spherical_flag is False
        assert count_sets(verdict, nonspherical_only=True) == 1

    def test_small_order_is_continuum(self, c5):
        verdict = solve_general(c5, 4)
        assert verdict.continuum and verdict.survived
        assert verdict.solutions == []

    def test_midpoint_belongs_to_complement(self):
        verdict = solve_general(decode("abb"), 1)
        assert [s.b.to_literal() for s in verdict.solutions] == ["1/4"]
        assert verdict.solutions[0].orientation is Orientation.COMPLEMENT

    def test_rejects_one_distance_graphs(self):
        with pytest.raises(NotTwoDistanceGraphError):
            solve_general(Graph.complete(4), 2)

    def test_solver_stats(self, c5):
        solver = GeneralSolver(dim=2)
        solver.solve(c5)
        assert solver.get_status()["stats"]["surviving"] == 1


class TestSetCounting:
    """镜像合并"""

    def test_mirror_value(self):
        from distset.algebra.realalg import RealAlg
        golden = RealAlg.from_literal("(3 + 1*sqrt(5))/2")
        assert mirror_value(golden).to_literal() == "(3 + -1*sqrt(5))/2"

    def test_non_self_complementary_counts_each_solution(self, c5):
        verdict = solve_spherical(c5, 2)
        assert count_sets(verdict, self_complementary=False) == 2

    def test_predicate_filter(self, c5):
        verdict = solve_spherical(c5, 2)
        assert count_sets(verdict, predicate=lambda s: s.rank < 2) == 0

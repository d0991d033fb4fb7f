#!/usr/bin/env python3
# -*- coding: utf-8 -*-
"""
DistSet - 参数验证与数值实现测试
"""

import numpy as np
import pytest

from distset.algebra.polynomials import X
from distset.algebra.realalg import RealAlg
from distset.algebra.solver import make_point, point_from_values
from distset.core.exceptions import RankMismatchError, ValidationError
from distset.core.types import Mode, Orientation
from distset.graphs.graph import (
    Graph,
    cocktail_party_graph,
    johnson_graph,
    paley_graph,
)
from distset.solvers.realization import realize
from distset.solvers.verification import verify_at, verify_one_distance, verify_point


def _alg(text: str) -> RealAlg:
    return RealAlg.from_literal(text)


class TestVerifyPoint:
    """表格参数的精确验证"""

    def test_sixteen_cell(self):
        report = verify_point(cocktail_party_graph(4), _alg("0"), _alg("-1"), 4)
        assert report.valid
        assert report.rank == 4
        assert report.jspherical
        assert report.orientation is Orientation.GRAPH
        assert not report.swapped

    def test_swapped_order_accepted(self):
        report = verify_point(cocktail_party_graph(4), _alg("-1"), _alg("0"), 4)
        assert report.valid
        assert report.swapped
        assert report.a_star == "0"

    def test_triangular_graph(self):
        report = verify_point(johnson_graph(5, 2), _alg("1/6"), _alg("-2/3"), 4)
        assert report.valid
        assert report.rank == 4

    def test_paley_nine(self):
        report = verify_point(paley_graph(9), _alg("1/4"), _alg("-1/2"), 4)
        assert report.valid
        assert report.rank == 4

    def test_regular_simplex(self):
        report = verify_point(Graph.complete(5), _alg("-1/4"), None, 4)
        assert report.valid
        assert report.one_distance
        assert report.rank == 4

    def test_wrong_parameters_rejected(self, c5):
        report = verify_point(c5, _alg("1/2"), _alg("-1/2"), 2)
        assert not report.valid
        assert not report.minors_vanish

    def test_rank_above_dimension_rejected(self):
        report = verify_point(cocktail_party_graph(4), _alg("0"), _alg("-1"), 3)
        assert not report.valid
        assert report.rank == 4

    def test_equal_parameters_are_not_two_distance(self, c5):
        point = make_point(_alg("0"), X, X)
        report = verify_at(c5, point, 2)
        assert not report.valid

    def test_missing_second_parameter(self, c5):
        with pytest.raises(ValidationError):
            verify_point(c5, _alg("1/2"), None, 2)

    def test_general_pentagon(self, c5):
        report = verify_point(c5, _alg("1"), _alg("(3 + 1*sqrt(5))/2"), 2, Mode.GENERAL)
        assert report.valid
        assert report.spherical_flag
        assert report.orientation is Orientation.GRAPH

    def test_one_distance_report(self):
        report = verify_one_distance(Graph.empty(3), _alg("1"), 2, Mode.GENERAL)
        assert report.valid
        assert report.rank == 2
        assert report.to_dict()["one_distance"] is True


class TestRealization:
    """浮点坐标"""

    def test_pentagon_on_circle(self, c5):
        a = _alg("(-1 + 1*sqrt(5))/4")
        b = _alg("(-1 + -1*sqrt(5))/4")
        result = realize(c5, point_from_values(a, b), 2)
        assert result.coordinates.shape == (5, 2)
        assert np.allclose(np.linalg.norm(result.coordinates, axis=1), 1.0)
        assert result.residual < 1e-9
        assert result.edge_distance < result.non_edge_distance

    def test_general_mode_appends_base_point(self, p3):
        point = point_from_values(_alg("1"), _alg("4"), Mode.GENERAL)
        result = realize(p3, point, 2)
        assert result.coordinates.shape == (3, 2)
        assert result.rank == 1
        assert result.non_edge_distance == pytest.approx(2.0)
        assert result.to_dict()["rank"] == 1

    def test_rank_above_dimension(self):
        point = point_from_values(_alg("0"), _alg("-1"))
        with pytest.raises(RankMismatchError):
            realize(cocktail_party_graph(4), point, 3)

    def test_indefinite_point(self, c5):
        point = point_from_values(_alg("1/2"), _alg("-1/2"))
        with pytest.raises(RankMismatchError):
            realize(c5, point, 4)

    def test_sixteen_cell_coordinates(self):
        graph = cocktail_party_graph(4)
        result = realize(graph, point_from_values(_alg("0"), _alg("-1")), 4)
        coords = result.coordinates
        assert coords.shape == (8, 4)
        assert result.rank == 4
        assert np.allclose(np.linalg.norm(coords, axis=1), 1.0)
        # 4 对对径点, 不同对之间两两正交
        partners = [
            [j for j in range(8) if j != i and np.allclose(coords[i], -coords[j])]
            for i in range(8)
        ]
        assert all(len(p) == 1 for p in partners)
        for i in range(8):
            for j in range(8):
                if i != j and j not in partners[i]:
                    assert coords[i] @ coords[j] == pytest.approx(0.0, abs=1e-9)

    def test_regular_simplex_coordinates(self):
        graph = Graph.complete(5)
        result = realize(graph, point_from_values(_alg("-1/4"), _alg("0")), 4)
        coords = result.coordinates
        assert coords.shape == (5, 4)
        assert result.rank == 4
        assert np.allclose(np.linalg.norm(coords, axis=1), 1.0)
        assert np.allclose(coords.sum(axis=0), 0.0)
        assert result.edge_distance == pytest.approx((5 / 2) ** 0.5)
        for i in range(5):
            for j in range(i + 1, 5):
                assert np.linalg.norm(coords[i] - coords[j]) == pytest.approx(result.edge_distance)

    def test_triangular_graph_distances(self):
        graph = johnson_graph(5, 2)
        result = realize(graph, point_from_values(_alg("1/6"), _alg("-2/3")), 4)
        coords = result.coordinates
        assert coords.shape == (10, 4)
        assert result.edge_distance == pytest.approx((5 / 3) ** 0.5)
        assert result.non_edge_distance == pytest.approx((10 / 3) ** 0.5)
        assert result.non_edge_distance / result.edge_distance == pytest.approx(2 ** 0.5)
        for i in range(10):
            for j in range(i + 1, 10):
                expected = result.edge_distance if graph.has_edge(i, j) else result.non_edge_distance
                assert np.linalg.norm(coords[i] - coords[j]) == pytest.approx(expected)

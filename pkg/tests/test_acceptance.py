#!/usr/bin/env python3
# -*- coding: utf-8 -*-
"""
DistSet - R^4 完整分类的回归测试

整套分类需要数十分钟, 默认以 -m "not slow" 跳过。
"""

import networkx as nx
import pytest

from distset.atlas.engine import full_atlas, hereditary_violations
from distset.atlas.mydim import mydim_census
from distset.core.types import Mode
from distset.fixtures.checks import verify_builtin, verify_row
from distset.fixtures.tables import all_rows, find_row
from distset.graphs.graph import decode, johnson_graph

pytestmark = [pytest.mark.slow, pytest.mark.integration]

LEVELS = range(6, 12)


@pytest.fixture(scope="module")
def atlas4():
    return full_atlas(4, 6, 11)


def _levels(entries, mode):
    levels = {}
    for entry in entries:
        if entry.mode is mode:
            levels.setdefault(entry.n, []).append(entry)
    return levels


class TestFourDimensionalAtlas:
    """R^4 中两距离集的分类"""

    def test_surviving_candidates(self, atlas4):
        summary, _ = atlas4
        assert [summary.levels[n].surviving_general for n in LEVELS] == [77, 22, 13, 4, 1, 0]
        assert [summary.levels[n].surviving_spherical for n in LEVELS] == [30, 17, 6, 2, 1, 0]

    def test_set_counts(self, atlas4):
        summary, _ = atlas4
        assert [summary.levels[n].spherical_sets for n in LEVELS] == [42, 23, 7, 2, 1, 0]
        assert [summary.levels[n].nonspherical_sets for n in LEVELS] == [103, 10, 13, 3, 0, 0]
        assert summary.levels[6].low_rank_spherical_sets == 6

    def test_totals(self, atlas4):
        summary, _ = atlas4
        totals = [summary.levels[n].spherical_sets + summary.levels[n].nonspherical_sets for n in (7, 8, 9)]
        assert totals == [33, 20, 5]

    def test_unique_maximum_set(self, atlas4):
        _, entries = atlas4
        survivors = [e for e in entries if e.n == 10 and e.survived]
        assert {e.class_key for e in survivors} == {survivors[0].class_key}
        graph = decode(survivors[0].class_key, 10).to_networkx()
        triangular = johnson_graph(5, 2).to_networkx()
        assert nx.is_isomorphic(graph, triangular) or nx.is_isomorphic(nx.complement(graph), triangular)
        assert not any(e.survived for e in entries if e.n == 11)

    def test_tenth_level_values(self, atlas4):
        _, entries = atlas4
        spherical = [e for e in entries if e.n == 10 and e.mode is Mode.SPHERICAL and e.survived]
        values = {frozenset((s.a_star, s.b_star)) for e in spherical for s in e.admissible_solutions}
        assert values == {frozenset(("1/6", "-2/3"))}

    def test_hereditary_closure(self):
        _, entries = full_atlas(4, 6, 9, hereditary_prefilter=False)
        for mode in (Mode.SPHERICAL, Mode.GENERAL):
            assert hereditary_violations(_levels(entries, mode)) == []

    def test_mydim_census(self, atlas4):
        _, entries = atlas4
        census = mydim_census(4, entries=entries)
        assert census == {5: 7, 6: 145, 7: 33, 8: 20, 9: 5, 10: 1}
        assert sum(census.values()) == 211


class TestBuiltinTables:
    """全部内置表格行的数学认证"""

    def test_all_rows_pass(self):
        results = verify_builtin(dim=4)
        assert len(results) == len(all_rows())
        assert [r.label for r in results if not r.passed] == []

    def test_cubic_parameters(self):
        report = verify_row(find_row("7O"), dim=4)
        assert report.passed
        assert all(r.rank is not None and r.rank <= 4 for r in report.reports)

    @pytest.mark.parametrize("label, expected", [("10A", 5), ("8A", 7), ("8D", 6)])
    def test_mydim_claims(self, label, expected):
        report = verify_row(find_row(label), dim=4, with_mydim=True)
        assert report.mydim["complement"] == expected

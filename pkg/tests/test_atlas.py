#!/usr/bin/env python3
# -*- coding: utf-8 -*-
"""
DistSet - 分类引擎、目录持久化、汇总报告与最小维数测试
"""

import json

import pytest

from distset.atlas.catalog import CatalogReader, CatalogWriter
from distset.atlas.engine import AtlasEngine, full_atlas, hereditary_violations, seed, solve_class, step
from distset.atlas.mydim import mydim, mydim_census, point_set_dim, representable_graphs
from distset.atlas.report_generator import (
    SUMMARY_METRICS,
    AtlasReportGenerator,
    ReportConfig,
    compute_summary,
    entry_rows,
)
from distset.core.exceptions import CatalogError, DimensionBoundError, NotTwoDistanceGraphError
from distset.core.types import AtlasEntry, Mode, Orientation, OutputFormat, RunConfig, SolutionRecord
from distset.graphs.canonical import class_key
from distset.graphs.graph import Graph, complement, decode


def _entry(n=5, key="ababbaabba", mode=Mode.SPHERICAL, survived=True, set_count=1, **extra):
    record = SolutionRecord(
        a_star="(-1 + 1*sqrt(5))/4",
        b_star="(-1 + -1*sqrt(5))/4",
        psd=True,
        rank=2,
        orientation=Orientation.GRAPH,
        admissible=True,
        jspherical=False,
    )
    return AtlasEntry(
        n=n, class_key=key, mode=mode, survived=survived,
        solutions=[record] if survived else [], set_count=set_count, **extra
    )


class TestSolveClass:
    """单个补图类的条目"""

    def test_pentagon_entry(self, c5):
        entry = solve_class(c5, Mode.SPHERICAL, 2)
        assert entry.class_key == class_key(c5)
        assert entry.survived
        assert entry.self_complementary
        assert entry.set_count == 1
        assert len(entry.solutions) == 2

    def test_general_entry(self, c5):
        entry = solve_class(c5, Mode.GENERAL, 2)
        assert entry.set_count == 1
        assert entry.nonspherical_count == 0
        assert entry.survived_complex

    def test_one_distance_entry(self):
        entry = solve_class(Graph.complete(4), Mode.SPHERICAL, 2)
        assert entry.one_distance
        assert not entry.survived

    def test_entry_dict_round_trip(self, c5):
        entry = solve_class(c5, Mode.SPHERICAL, 2)
        restored = AtlasEntry.from_dict(json.loads(json.dumps(entry.to_dict())))
        assert restored.to_dict() == entry.to_dict()


class TestEngine:
    """逐层搜索"""

    def test_seed_is_complement_classes(self):
        assert len(seed(4)) == 6

    def test_step_prunes_with_hereditary_filter(self):
        survivor = _entry(n=4, key=class_key(decode("aaaaab")), mode=Mode.SPHERICAL)
        entries = step([survivor], 2, Mode.SPHERICAL)
        assert entries
        assert all(e.n == 5 for e in entries)
        assert any(e.pruned_by is not None for e in entries)
        assert all(e.parent == survivor.class_key for e in entries)

    def test_hereditary_violations_detected(self, c5):
        levels = {
            4: [_entry(n=4, key=class_key(decode("aaaaab")))],
            5: [_entry(n=5, key=class_key(c5))],
        }
        violations = hereditary_violations(levels)
        assert violations
        assert violations[0][0] == class_key(c5)

    def test_engine_status(self):
        engine = AtlasEngine(RunConfig(dim=2, mode="spherical", max_n=4))
        status = engine.get_status()
        assert status["dim"] == 2
        assert status["mode"] == "spherical"

    @pytest.mark.slow
    @pytest.mark.integration
    def test_planar_classification(self):
        summary, entries = full_atlas(2, 4, 6)
        spherical = {n: summary.levels[n].spherical_sets for n in (4, 5, 6)}
        nonspherical = {n: summary.levels[n].nonspherical_sets for n in (4, 5, 6)}
        assert spherical == {4: 2, 5: 1, 6: 0}
        assert nonspherical == {4: 4, 5: 0, 6: 0}
        for mode in (Mode.SPHERICAL, Mode.GENERAL):
            levels = {}
            for entry in entries:
                if entry.mode is mode:
                    levels.setdefault(entry.n, []).append(entry)
            assert hereditary_violations(levels) == []

    @pytest.mark.slow
    def test_parallel_matches_serial(self):
        _, serial = full_atlas(2, 4, 5, mode="spherical")
        _, parallel = full_atlas(2, 4, 5, mode="spherical", jobs=2)
        assert [e.to_dict() for e in serial] == [e.to_dict() for e in parallel]


class TestCatalog:
    """JSON-lines 目录"""

    def test_write_and_read(self, tmp_path):
        path = tmp_path / "atlas.jsonl"
        writer = CatalogWriter(path, 2, "spherical", 4)
        writer.write_level(5, Mode.SPHERICAL, [_entry()])
        reader = CatalogReader(path)
        assert reader.dim == 2
        assert reader.completed_levels() == {Mode.SPHERICAL: [5]}
        assert [e.class_key for e in reader.level(Mode.SPHERICAL, 5)] == ["ababbaabba"]
        assert writer.completed_levels() == {Mode.SPHERICAL: [5]}

    def test_incomplete_level_ignored(self, tmp_path):
        path = tmp_path / "atlas.jsonl"
        CatalogWriter(path, 2, "spherical", 4).write_level(5, Mode.SPHERICAL, [_entry()])
        with path.open("a", encoding="utf-8") as handle:
            handle.write(json.dumps({"type": "entry", **_entry(n=6, key="a" * 15).to_dict()}) + "\n")
        reader = CatalogReader(path)
        assert reader.completed_levels() == {Mode.SPHERICAL: [5]}
        assert reader.level(Mode.SPHERICAL, 6) is None

    def test_append_requires_same_dimension(self, tmp_path):
        path = tmp_path / "atlas.jsonl"
        CatalogWriter(path, 2, "spherical", 4)
        with pytest.raises(CatalogError):
            CatalogWriter(path, 3, "spherical", 5, append=True)

    def test_corrupt_line(self, tmp_path):
        path = tmp_path / "atlas.jsonl"
        CatalogWriter(path, 2, "spherical", 4)
        with path.open("a", encoding="utf-8") as handle:
            handle.write("{not json\n")
        with pytest.raises(CatalogError):
            CatalogReader(path)

    def test_missing_file(self, tmp_path):
        with pytest.raises(CatalogError):
            CatalogReader(tmp_path / "missing.jsonl")


class TestReports:
    """汇总表与明细"""

    def test_summary_counts(self):
        entries = [
            _entry(),
            _entry(key="aaaaaaaaab", survived=False, set_count=0),
            _entry(mode=Mode.GENERAL, nonspherical_count=2),
        ]
        summary = compute_summary(entries, 2, graph_classes={5: 18}, levels=[5, 6])
        level = summary.levels[5]
        assert level.graph_classes == 18
        assert level.surviving_spherical == 1
        assert level.spherical_sets == 1
        assert level.surviving_general == 1
        assert level.nonspherical_sets == 2
        assert summary.levels[6].spherical_sets == 0

    def test_tsv_summary(self):
        text = AtlasReportGenerator().generate_summary(compute_summary([_entry()], 2))
        lines = text.splitlines()
        assert lines[0] == "metric\t5"
        assert "#spherical 2-distance sets\t1" in lines
        labels = [label for _, label in SUMMARY_METRICS]
        assert all(line.split("\t")[0] in labels for line in lines[1:])

    def test_json_summary(self):
        generator = AtlasReportGenerator(ReportConfig(format=OutputFormat.JSON))
        payload = json.loads(generator.generate_summary(compute_summary([_entry()], 2)))
        assert payload["dim"] == 2
        assert payload["levels"][0]["spherical_sets"] == 1

    def test_rows(self):
        rows = entry_rows([_entry(n=4, key="aaaaab"), _entry()])
        assert [r["n"] for r in rows] == [5, 4]
        text = AtlasReportGenerator().generate_rows([_entry()])
        header, row = text.splitlines()
        assert header.split("\t")[0] == "n"
        assert "\tfalse\t" in row

    def test_census_table(self, tmp_path):
        generator = AtlasReportGenerator()
        text = generator.generate_census(2, {3: 3, 4: 6, 5: 1})
        assert text.splitlines()[-1] == "total\t10"
        target = generator.write(text, tmp_path / "census.tsv")
        assert target.read_text(encoding="utf-8") == text
        assert generator.write(text) is None


class TestMydim:
    """最小表示维数"""

    def test_path_is_collinear(self, p3):
        assert mydim(p3) == 1

    def test_isosceles_needs_plane(self):
        assert mydim(decode("abb")) == 2

    def test_pentagon(self, c5):
        assert mydim(c5) == 2

    def test_upper_bound(self, c5):
        with pytest.raises(DimensionBoundError) as info:
            mydim(c5, max_dim=1)
        assert info.value.lower_bound == 2

    def test_one_distance_graphs(self):
        with pytest.raises(NotTwoDistanceGraphError):
            mydim(Graph.complete(4))
        assert point_set_dim(Graph.complete(4)) == 3
        assert point_set_dim(Graph.empty(3)) == 2

    def test_representable_graph_count(self):
        both = _entry(mode=Mode.GENERAL, continuum=True)
        assert representable_graphs(both) == 2
        one_side = _entry(mode=Mode.GENERAL)
        assert representable_graphs(one_side) == 1
        assert representable_graphs(_entry(mode=Mode.GENERAL, survived=False)) == 0

    @pytest.mark.slow
    @pytest.mark.integration
    def test_planar_census(self):
        assert mydim_census(2, max_n=6) == {3: 3, 4: 6, 5: 1}

    def test_complement_of_path(self, p3):
        assert point_set_dim(complement(p3)) == 2

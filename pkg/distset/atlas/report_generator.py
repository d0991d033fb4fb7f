#!/usr/bin/env python3
# -*- coding: utf-8 -*-
"""
DistSet - 报告生成模块

由目录条目计算汇总表, 并以 TSV 或 JSON 输出汇总表、逐解明细与维数普查。
TSV 为 UTF-8 编码, LF 换行, 代数数字面量中的逗号不需要转义。
"""

import json
from dataclasses import dataclass
from pathlib import Path
from typing import Any, Dict, Iterable, List, Optional

from distset.core.types import AtlasEntry, AtlasSummary, Mode, OutputFormat
from distset.utils.format_utils import FormatUtils
from distset.utils.logging_utils import get_logger

logger = get_logger("atlas.report")

ROW_COLUMNS = [
    "n",
    "code",
    "mode",
    "a_star",
    "b_star",
    "psd",
    "rank",
    "orientation",
    "spherical_flag",
    "jspherical",
    "self_complementary",
    "set_count",
]

SUMMARY_METRICS = [
    ("graph_classes", "#graphs up to complements"),
    ("surviving_general", "#surviving candidates (all)"),
    ("surviving_spherical", "#surviving candidates (spherical)"),
    ("spherical_sets", "#spherical 2-distance sets"),
    ("nonspherical_sets", "#nonspherical 2-distance sets"),
    ("low_rank_spherical_sets", "#spherical sets of rank < d"),
]


def compute_summary(
    entries: Iterable[AtlasEntry],
    dim: int,
    graph_classes: Optional[Dict[int, int]] = None,
    levels: Optional[Iterable[int]] = None,
) -> AtlasSummary:
    """
    由条目计算每个 n 的计数

    Args:
        entries: 全部目录条目
        dim: 维数
        graph_classes: 可选的每层补图类总数
        levels: 应出现在汇总中的全部 n, 包括没有条目的层级
    """
    summary = AtlasSummary(dim=dim)
    modes = set()
    for entry in entries:
        modes.add(entry.mode)
        level = summary.level(entry.n)
        if entry.mode is Mode.SPHERICAL:
            level.surviving_spherical = (level.surviving_spherical or 0) + int(entry.survived)
            level.spherical_sets = (level.spherical_sets or 0) + entry.set_count
            level.low_rank_spherical_sets = (level.low_rank_spherical_sets or 0) + entry.low_rank_count
        else:
            level.surviving_general = (level.surviving_general or 0) + int(entry.survived)
            level.nonspherical_sets = (level.nonspherical_sets or 0) + entry.nonspherical_count
    for n, count in (graph_classes or {}).items():
        summary.level(n).graph_classes = count
    # 搜索提前结束的层级计为零
    for n in sorted(set(summary.levels) | set(levels or ())):
        level = summary.level(n)
        if Mode.SPHERICAL in modes:
            for name in ("surviving_spherical", "spherical_sets", "low_rank_spherical_sets"):
                if getattr(level, name) is None:
                    setattr(level, name, 0)
        if Mode.GENERAL in modes:
            for name in ("surviving_general", "nonspherical_sets"):
                if getattr(level, name) is None:
                    setattr(level, name, 0)
    return summary


def entry_rows(entries: Iterable[AtlasEntry]) -> List[Dict[str, Any]]:
    """逐解明细行, 按 (n 降序, code) 排序"""
    rows = []
    for entry in entries:
        for record in entry.solutions:
            rows.append({
                "n": entry.n,
                "code": entry.class_key,
                "mode": entry.mode.value,
                "a_star": record.a_star,
                "b_star": record.b_star,
                "psd": record.psd,
                "rank": record.rank,
                "orientation": record.orientation.value,
                "spherical_flag": record.spherical_flag,
                "jspherical": record.jspherical,
                "self_complementary": entry.self_complementary,
                "set_count": entry.set_count,
            })
    rows.sort(key=lambda r: (-r["n"], r["code"], r["mode"], r["a_star"], r["b_star"]))
    return rows


@dataclass
class ReportConfig:
    """报告配置"""
    format: OutputFormat = OutputFormat.TSV
    output_path: Optional[Path] = None


class AtlasReportGenerator:
    """分类报告生成器"""

    def __init__(self, config: Optional[ReportConfig] = None):
        self.config = config or ReportConfig()

    @property
    def is_json(self) -> bool:
        return self.config.format is OutputFormat.JSON

    def generate_summary(self, summary: AtlasSummary) -> str:
        """汇总表: 每行一个计数项, 每列一个 n"""
        if self.is_json:
            return json.dumps(summary.to_dict(), indent=2, ensure_ascii=False) + "\n"
        ns = sorted(summary.levels)
        lines = [FormatUtils.tsv_row(["metric"] + ns)]
        for field_name, label in SUMMARY_METRICS:
            values = [getattr(summary.levels[n], field_name) for n in ns]
            if all(v is None for v in values):
                continue
            lines.append(FormatUtils.tsv_row([label] + [FormatUtils.format_optional(v) for v in values]))
        return "\n".join(lines) + "\n"

    def generate_rows(self, entries: Iterable[AtlasEntry]) -> str:
        """逐解明细"""
        rows = entry_rows(entries)
        if self.is_json:
            return json.dumps(rows, indent=2, ensure_ascii=False) + "\n"
        lines = [FormatUtils.tsv_row(ROW_COLUMNS)]
        for row in rows:
            lines.append(FormatUtils.tsv_row(_render(row[c]) for c in ROW_COLUMNS))
        return "\n".join(lines) + "\n"

    def generate_census(self, dim: int, counts: Dict[int, int]) -> str:
        """维数普查表"""
        total = sum(counts.values())
        if self.is_json:
            payload = {"dim": dim, "counts": {str(n): c for n, c in sorted(counts.items())}, "total": total}
            return json.dumps(payload, indent=2, ensure_ascii=False) + "\n"
        lines = [FormatUtils.tsv_row(["n", "count"])]
        lines.extend(FormatUtils.tsv_row([n, c]) for n, c in sorted(counts.items()))
        lines.append(FormatUtils.tsv_row(["total", total]))
        return "\n".join(lines) + "\n"

    def write(self, text: str, path: Optional[Path] = None) -> Optional[Path]:
        """写入文件; 未配置路径时返回 None"""
        target = path or self.config.output_path
        if target is None:
            return None
        target = Path(target)
        target.parent.mkdir(parents=True, exist_ok=True)
        with target.open("w", encoding="utf-8", newline="\n") as handle:
            handle.write(text)
        logger.info(f"报告已写入 {target}")
        return target


def _render(value: Any) -> str:
    if isinstance(value, bool) or value is None:
        return FormatUtils.format_flag(value)
    return str(value)


__all__ = [
    "ROW_COLUMNS",
    "SUMMARY_METRICS",
    "compute_summary",
    "entry_rows",
    "ReportConfig",
    "AtlasReportGenerator",
]

#!/usr/bin/env python3
# -*- coding: utf-8 -*-
"""
DistSet - 表格行验证

逐行复核内置表格: 数学认证 (主子式为零、半正定、秩不超过 d) 决定通过与否;
参数顺序、J-球面标记、自补性、子图关系与 mydim 声明的出入只作为备注报告。
"""

import csv
from dataclasses import dataclass, field
from pathlib import Path
from typing import Any, Dict, List, Optional

from sympy import sympify

from distset.algebra.polynomials import X
from distset.algebra.realalg import RealAlg
from distset.algebra.solver import make_point
from distset.atlas.mydim import point_set_dim
from distset.core.exceptions import DistSetError, ValidationError
from distset.core.types import DEFAULT_DIM, Mode
from distset.fixtures.tables import FixturePoint, TableRow, all_rows, rows_by_label
from distset.graphs.canonical import canonical_code, is_self_complementary
from distset.graphs.graph import Graph, complement, decode, induced_subgraphs
from distset.solvers.verdicts import ValidityReport
from distset.solvers.verification import verify_either_order, verify_point
from distset.utils.logging_utils import LogContext, get_logger

logger = get_logger("fixtures.checks")


@dataclass
class RowReport:
    """单行验证结果"""
    label: str
    table: str
    code: str
    mode: Mode
    reports: List[ValidityReport] = field(default_factory=list)
    discrepancies: List[str] = field(default_factory=list)
    mydim: Dict[str, int] = field(default_factory=dict)
    error: Optional[str] = None

    @property
    def passed(self) -> bool:
        return self.error is None and bool(self.reports) and all(r.valid for r in self.reports)

    def to_dict(self) -> Dict[str, Any]:
        return {
            "label": self.label,
            "table": self.table,
            "code": self.code,
            "mode": self.mode.value,
            "passed": self.passed,
            "reports": [r.to_dict() for r in self.reports],
            "discrepancies": list(self.discrepancies),
            "mydim": dict(self.mydim),
            "error": self.error,
        }


def _parse_expr(text: str):
    return sympify(text, locals={"x": X})


def verify_fixture_point(graph: Graph, point: FixturePoint, mode: Mode, dim: int) -> ValidityReport:
    """验证一组表格参数, 两种参数顺序都接受"""
    if point.anchor is not None:
        anchor = RealAlg.from_literal(point.anchor)
        solution = make_point(anchor, _parse_expr(point.a), _parse_expr(point.b), mode)
        return verify_either_order(graph, solution, dim)
    a = RealAlg.from_literal(point.a)
    b = RealAlg.from_literal(point.b) if point.b is not None else None
    return verify_point(graph, a, b, dim, mode)


def _contains_induced(parent: Graph, graph: Graph) -> bool:
    target = canonical_code(graph)
    return any(canonical_code(sub) == target for _, sub in induced_subgraphs(parent, graph.order))


def _remark_discrepancies(row: TableRow, graph: Graph, reports: List[ValidityReport]) -> List[str]:
    notes: List[str] = []
    if any(r.swapped for r in reports):
        notes.append("参数顺序与本工具的方向约定相反, 交换后通过")
    if row.jspherical and row.mode is Mode.SPHERICAL and not any(r.jspherical for r in reports):
        notes.append("备注标记 J-球面, 但按 Γ 方向的 a* = 0 约定未得到 J-球面解")
    if row.self_complementary != is_self_complementary(graph):
        notes.append(f"备注自补性为 {row.self_complementary}, 实际为 {not row.self_complementary}")

    labels = rows_by_label()
    for claim in row.subgraph_claims:
        parent_row = labels.get(claim.parent)
        if parent_row is None:
            notes.append(f"子图声明引用了未知的行 {claim.parent}")
            continue
        parent = decode(parent_row.code, parent_row.n)
        if claim.complement:
            parent = complement(parent)
        if parent.order - claim.deleted != graph.order or not _contains_induced(parent, graph):
            side = "补图" if claim.complement else ""
            notes.append(f"不是 {claim.parent}{side} 去掉 {claim.deleted} 个点的诱导子图")
    return notes


def _mydim_discrepancies(row: TableRow, graph: Graph, result: RowReport) -> List[str]:
    notes: List[str] = []
    for claim in row.mydim_claims:
        if claim.label != row.label:
            notes.append(f"mydim 备注写的是 {claim.label}, 按本行 {row.label} 重新计算")
        target = complement(graph) if claim.complement else graph
        key = "complement" if claim.complement else "graph"
        value = point_set_dim(target)
        result.mydim[key] = value
        if value != claim.value:
            notes.append(f"mydim 声明为 {claim.value}, 计算得 {value}")
    return notes


def verify_row(row: TableRow, dim: int = DEFAULT_DIM, with_mydim: bool = False) -> RowReport:
    """
    验证一行

    Args:
        row: 表格行
        dim: 维数
        with_mydim: 是否重新计算备注中的 mydim

    Returns:
        RowReport; 只有数学认证失败才使 passed 为 False
    """
    result = RowReport(label=row.label, table=row.table, code=row.code, mode=row.mode)
    try:
        graph = decode(row.code, row.n)
        result.reports = [verify_fixture_point(graph, p, row.mode, dim) for p in row.points]
        result.discrepancies.extend(_remark_discrepancies(row, graph, result.reports))
        if with_mydim:
            result.discrepancies.extend(_mydim_discrepancies(row, graph, result))
    except DistSetError as e:
        result.error = str(e)
        logger.error(f"{row.label} 验证出错: {e}", extra={"code": row.code})
    return result


def verify_builtin(
    dim: int = DEFAULT_DIM,
    with_mydim: bool = False,
    labels: Optional[List[str]] = None,
) -> List[RowReport]:
    """验证全部 (或指定标签的) 内置表格行"""
    rows = all_rows()
    if labels:
        wanted = set(labels)
        rows = [row for row in rows if row.label in wanted]
    with LogContext(logger, "内置表格验证", rows=len(rows)):
        results = [verify_row(row, dim, with_mydim) for row in rows]
    failed = [r.label for r in results if not r.passed]
    logger.info(f"内置表格验证: {len(results) - len(failed)}/{len(results)} 行通过")
    return results


def verify_rows_file(path: Path, dim: int = DEFAULT_DIM) -> List[RowReport]:
    """
    验证 TSV 文件中的参数行

    文件首行为表头, 至少包含 code、a_star、b_star 三列, mode 列可选
    (缺省为 spherical)。table rows 的输出可直接作为输入。

    Raises:
        ValidationError: 缺少必需列
    """
    path = Path(path)
    results: List[RowReport] = []
    with path.open("r", encoding="utf-8", newline="") as handle:
        reader = csv.DictReader(handle, delimiter="\t", quoting=csv.QUOTE_NONE)
        missing = {"code", "a_star", "b_star"} - set(reader.fieldnames or ())
        if missing:
            raise ValidationError(f"{path} 缺少列: {', '.join(sorted(missing))}", field="header")
        for number, record in enumerate(reader, start=2):
            mode = Mode(record.get("mode") or Mode.SPHERICAL.value)
            label = f"{path.name}:{number}"
            result = RowReport(label=label, table=path.name, code=record["code"], mode=mode)
            try:
                graph = decode(record["code"])
                b_text = record["b_star"]
                point = FixturePoint(record["a_star"], None if b_text in ("", "-") else b_text)
                result.reports.append(verify_fixture_point(graph, point, mode, dim))
            except DistSetError as e:
                result.error = str(e)
            results.append(result)
    return results


__all__ = [
    "RowReport",
    "verify_fixture_point",
    "verify_row",
    "verify_builtin",
    "verify_rows_file",
]

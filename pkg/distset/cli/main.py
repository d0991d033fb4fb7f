#!/usr/bin/env python3
# -*- coding: utf-8 -*-
"""
DistSet - 主命令行工具

子命令: classify (分类), verify (内置表格复核), mydim (最小维数), table (目录
导出), census (维数普查), realize (数值坐标), info, config。

标准输出只承载 TSV/JSON 结果, 提示与日志写到标准错误。退出码:
    0 成功; 1 验证未通过; 2 输入或配置无效; 3 内部认证失败; 4 超出维数上界
"""

import json
import sys
from pathlib import Path
from typing import Any, Dict, List, Optional

import click

from distset import __version__, get_architecture_info, get_version_info
from distset.algebra.realalg import RealAlg
from distset.algebra.solver import point_from_values
from distset.atlas.catalog import CatalogReader, CatalogWriter
from distset.atlas.engine import AtlasEngine
from distset.atlas.mydim import mydim_census, point_set_dim
from distset.atlas.report_generator import AtlasReportGenerator, ReportConfig, compute_summary
from distset.core.exceptions import (
    CatalogError,
    CertificationError,
    ConfigurationError,
    DimensionBoundError,
    DistSetError,
    GraphError,
    LiteralParseError,
    RankMismatchError,
    ValidationError,
)
from distset.core.types import MAX_DIM, AtlasEntry, Mode, OutputFormat, RunConfig
from distset.fixtures.checks import RowReport, verify_builtin, verify_rows_file
from distset.graphs.graph import complement, decode
from distset.solvers.realization import realize as realize_point
from distset.solvers.verification import verify_point
from distset.utils.config_utils import ConfigUtils
from distset.utils.format_utils import FormatUtils
from distset.utils.logging_utils import get_logger, set_global_log_level, setup_logger

logger = get_logger("cli")

EXIT_OK = 0
EXIT_FAILED = 1
EXIT_INVALID = 2
EXIT_CERTIFICATION = 3
EXIT_BOUND = 4

MODE_CHOICES = click.Choice(["spherical", "general", "both"], case_sensitive=False)
SOLVE_MODE_CHOICES = click.Choice(["spherical", "general"], case_sensitive=False)
FORMAT_CHOICES = click.Choice(["tsv", "json"], case_sensitive=False)


def _fail(ctx: click.Context, message: str, code: int) -> None:
    click.echo(f"❌ {message}", err=True)
    ctx.exit(code)


def _run_config(ctx: click.Context, overrides: Dict[str, Any]) -> RunConfig:
    try:
        return ConfigUtils.build_run_config(ctx.obj["config"], overrides)
    except ConfigurationError as e:
        _fail(ctx, str(e), EXIT_INVALID)
        raise  # pragma: no cover


def _reporter(fmt: Optional[str], ctx: click.Context) -> AtlasReportGenerator:
    value = fmt or ctx.obj["config"]["run"].get("format", "tsv")
    return AtlasReportGenerator(ReportConfig(format=OutputFormat(value.lower())))


@click.group()
@click.version_option(version=__version__)
@click.option(
    "--config", "-c",
    type=click.Path(exists=True),
    help="配置文件路径 (JSON 或 YAML)"
)
@click.option(
    "--log-level", "-l",
    type=click.Choice(["DEBUG", "INFO", "WARNING", "ERROR"], case_sensitive=False),
    default=None,
    help="日志级别"
)
@click.option(
    "--verbose", "-v",
    is_flag=True,
    help="详细输出"
)
@click.pass_context
def cli(ctx: click.Context, config: Optional[str], log_level: Optional[str], verbose: bool):
    """
    DistSet - 两距离集精确分类工具

    用候选 Gram 矩阵与 Menger 矩阵的秩条件, 精确枚举 R^d 中的两距离集。
    """
    ctx.ensure_object(dict)
    try:
        ctx.obj["config"] = ConfigUtils.resolve_config(config)
    except DistSetError as e:
        _fail(ctx, f"配置文件加载失败: {e}", EXIT_INVALID)

    logging_section = ctx.obj["config"].get("logging", {})
    level = "DEBUG" if verbose else (log_level or logging_section.get("level", "INFO"))
    setup_logger(
        log_file=logging_section.get("file"),
        level=level.upper(),
        json_format=bool(logging_section.get("json", False)),
    )
    set_global_log_level(level.upper())
    ctx.obj["log_level"] = level.upper()
    ctx.obj["verbose"] = verbose
    if config:
        click.echo(f"已加载配置文件: {config}", err=True)


@cli.command()
@click.pass_context
def info(ctx: click.Context):
    """显示系统信息"""
    click.echo(f"DistSet v{__version__}")
    click.echo("=" * 50)
    click.echo("版本信息:")
    for key, value in get_version_info().items():
        click.echo(f"  {key}: {value}")
    click.echo()
    click.echo("系统层次:")
    for description in get_architecture_info()["layers"].values():
        click.echo(f"  {description}")


@cli.command()
@click.option("--dim", "-d", type=int, help="维数 d")
@click.option("--mode", "-m", type=MODE_CHOICES, help="求解模式")
@click.option("--seed-n", type=int, help="种子层级 (默认 d+2)")
@click.option("--max-n", type=int, help="最大点数")
@click.option("--jobs", "-j", type=int, envvar="DISTSET_JOBS", help="并行进程数")
@click.option("--out", "-o", type=click.Path(), help="目录文件 (JSON-lines)")
@click.option("--format", "-f", "fmt", type=FORMAT_CHOICES, help="汇总表格式")
@click.option("--prefilter/--no-prefilter", default=None, help="遗传预过滤")
@click.option("--survival", type=click.Choice(["real", "complex"]), help="存活判据")
@click.option("--count-classes", is_flag=True, default=None, help="统计每层补图类总数 (n <= 8)")
@click.option("--resume", is_flag=True, help="从已有目录的完整层级继续")
@click.pass_context
def classify(
    ctx: click.Context,
    dim: Optional[int],
    mode: Optional[str],
    seed_n: Optional[int],
    max_n: Optional[int],
    jobs: Optional[int],
    out: Optional[str],
    fmt: Optional[str],
    prefilter: Optional[bool],
    survival: Optional[str],
    count_classes: Optional[bool],
    resume: bool,
):
    """逐层分类并写出目录与汇总表"""
    config = _run_config(ctx, {
        "dim": dim,
        "mode": mode.lower() if mode else None,
        "seed_n": seed_n,
        "max_n": max_n,
        "jobs": jobs,
        "out": out,
        "format": fmt.lower() if fmt else None,
        "hereditary_prefilter": prefilter,
        "survival": survival,
        "count_classes": count_classes,
    })
    catalog_path = Path(config.out)
    resumed: Dict[Mode, Dict[int, List[AtlasEntry]]] = {}
    try:
        if resume and catalog_path.exists():
            reader = CatalogReader(catalog_path)
            if reader.dim != config.dim:
                raise CatalogError(
                    f"目录维数 {reader.dim} 与运行维数 {config.dim} 不一致", path=str(catalog_path)
                )
            for solve_mode, ns in reader.completed_levels().items():
                resumed[solve_mode] = {n: reader.level(solve_mode, n) for n in ns}
            click.echo(f"从 {catalog_path} 恢复 {sum(len(v) for v in resumed.values())} 个层级", err=True)
        writer = CatalogWriter(
            catalog_path, config.dim, config.mode.value, config.seed_n, append=bool(resume and resumed)
        )
    except CatalogError as e:
        _fail(ctx, str(e), EXIT_INVALID)

    engine = AtlasEngine(config, catalog=writer)
    try:
        summary, _ = engine.full_atlas(resumed)
    except CertificationError as e:
        _fail(ctx, f"内部认证失败: {e}", EXIT_CERTIFICATION)
    except DistSetError as e:
        _fail(ctx, f"分类失败: {e}", EXIT_CERTIFICATION)

    reporter = AtlasReportGenerator(ReportConfig(format=config.format))
    text = reporter.generate_summary(summary)
    summary_path = catalog_path.with_name(f"{catalog_path.stem}.summary.{config.format.value}")
    reporter.write(text, summary_path)
    click.echo(text, nl=False)
    click.echo(f"目录: {catalog_path}  汇总: {summary_path}", err=True)


def _report_line(result: RowReport) -> List[Any]:
    status = "pass" if result.passed else "FAIL"
    ranks = ",".join(FormatUtils.format_optional(r.rank) for r in result.reports)
    notes = result.error or "; ".join(result.discrepancies)
    return [result.label, result.table, result.code, result.mode.value, status, ranks, notes]


@cli.command()
@click.option("--file", "rows_file", type=click.Path(exists=True), help="待验证的 TSV 文件, 缺省为内置表格")
@click.option("--dim", "-d", type=int, default=4, show_default=True, help="维数 d")
@click.option("--with-mydim", is_flag=True, help="重新计算备注中的 mydim 声明")
@click.option("--label", "labels", multiple=True, help="只验证指定标签的行, 如 10A")
@click.option("--format", "-f", "fmt", type=FORMAT_CHOICES, default="tsv", help="输出格式")
@click.pass_context
def verify(
    ctx: click.Context,
    rows_file: Optional[str],
    dim: int,
    with_mydim: bool,
    labels: tuple,
    fmt: str,
):
    """复核表格行: 主子式为零、半正定、秩不超过 d"""
    try:
        if rows_file:
            results = verify_rows_file(Path(rows_file), dim)
        else:
            results = verify_builtin(dim, with_mydim, list(labels) or None)
    except ValidationError as e:
        _fail(ctx, str(e), EXIT_INVALID)

    if fmt.lower() == "json":
        click.echo(json.dumps([r.to_dict() for r in results], indent=2, ensure_ascii=False))
    else:
        click.echo(FormatUtils.tsv_row(["label", "table", "code", "mode", "status", "rank", "notes"]))
        for result in results:
            click.echo(FormatUtils.tsv_row(_report_line(result)))

    failed = [r.label for r in results if not r.passed]
    click.echo(f"{len(results) - len(failed)}/{len(results)} 行通过认证", err=True)
    if failed:
        _fail(ctx, f"未通过: {', '.join(failed)}", EXIT_FAILED)


@cli.command("mydim")
@click.argument("code")
@click.option("--n", "order", type=int, help="顶点数, 缺省由编码长度推断")
@click.option("--max-dim", type=int, default=MAX_DIM, show_default=True, help="搜索维数上界")
@click.option("--complement", "use_complement", is_flag=True, help="计算补图的 mydim")
@click.pass_context
def mydim_command(ctx: click.Context, code: str, order: Optional[int], max_dim: int, use_complement: bool):
    """计算图的最小表示维数"""
    try:
        graph = decode(code, order)
    except GraphError as e:
        _fail(ctx, f"图编码无效: {e}", EXIT_INVALID)
    if use_complement:
        graph = complement(graph)
    if graph.is_complete or graph.is_empty:
        click.echo("单距离集, 按正则单形计算", err=True)
    try:
        value = point_set_dim(graph, max_dim)
    except DimensionBoundError as e:
        click.echo(f">={e.lower_bound}")
        _fail(ctx, f"mydim 超过上界 {max_dim}", EXIT_BOUND)
    if value > max_dim:
        click.echo(f">={max_dim + 1}")
        _fail(ctx, f"mydim 超过上界 {max_dim}", EXIT_BOUND)
    click.echo(str(value))


@cli.command()
@click.option("--catalog", "catalog_path", type=click.Path(), help="目录文件, 缺省取配置中的 run.out")
@click.option(
    "--which", "-w",
    type=click.Choice(["summary", "rows"], case_sensitive=False),
    default="summary",
    show_default=True,
    help="输出汇总表或逐解明细"
)
@click.option("--mode", "-m", type=SOLVE_MODE_CHOICES, help="只输出某一模式")
@click.option("--n", "order", type=int, help="只输出某一点数")
@click.option("--format", "-f", "fmt", type=FORMAT_CHOICES, help="输出格式")
@click.pass_context
def table(
    ctx: click.Context,
    catalog_path: Optional[str],
    which: str,
    mode: Optional[str],
    order: Optional[int],
    fmt: Optional[str],
):
    """由目录导出表格"""
    path = Path(catalog_path or ctx.obj["config"]["run"]["out"])
    try:
        reader = CatalogReader(path)
    except CatalogError as e:
        _fail(ctx, str(e), EXIT_INVALID)

    entries = reader.entries(Mode(mode.lower()) if mode else None)
    if order is not None:
        entries = [e for e in entries if e.n == order]
    reporter = _reporter(fmt, ctx)
    if which.lower() == "rows":
        click.echo(reporter.generate_rows(entries), nl=False)
    else:
        levels = sorted({n for ns in reader.completed_levels().values() for n in ns})
        click.echo(reporter.generate_summary(compute_summary(entries, reader.dim, levels=levels)), nl=False)


@cli.command()
@click.option("--dim", "-d", type=int, default=4, show_default=True, help="维数 d")
@click.option("--catalog", "catalog_path", type=click.Path(), help="已有目录, 使用其中的一般模式条目")
@click.option("--jobs", "-j", type=int, envvar="DISTSET_JOBS", default=1, help="并行进程数")
@click.option("--max-n", type=int, default=11, show_default=True, help="最大点数")
@click.option("--format", "-f", "fmt", type=FORMAT_CHOICES, help="输出格式")
@click.pass_context
def census(
    ctx: click.Context,
    dim: int,
    catalog_path: Optional[str],
    jobs: int,
    max_n: int,
    fmt: Optional[str],
):
    """统计 mydim 恰为 d 的图的个数"""
    entries = None
    try:
        RunConfig(dim=dim, mode="general", max_n=max_n, jobs=jobs)
        if catalog_path:
            reader = CatalogReader(Path(catalog_path))
            if reader.dim != dim:
                raise CatalogError(f"目录维数 {reader.dim} 与 --dim {dim} 不一致", path=catalog_path)
            entries = reader.entries(Mode.GENERAL)
    except (CatalogError, ValueError) as e:
        _fail(ctx, str(e), EXIT_INVALID)

    try:
        counts = mydim_census(dim, entries=entries, jobs=jobs, max_n=max_n)
    except DistSetError as e:
        _fail(ctx, f"普查失败: {e}", EXIT_CERTIFICATION)
    click.echo(_reporter(fmt, ctx).generate_census(dim, counts), nl=False)


@cli.command("realize")
@click.argument("code")
@click.argument("a_star")
@click.argument("b_star")
@click.option("--dim", "-d", type=int, default=4, show_default=True, help="维数 d")
@click.option("--mode", "-m", type=SOLVE_MODE_CHOICES, default="spherical", show_default=True)
@click.pass_context
def realize_command(ctx: click.Context, code: str, a_star: str, b_star: str, dim: int, mode: str):
    """在精确认证通过后输出浮点坐标"""
    try:
        graph = decode(code)
        a, b = RealAlg.from_literal(a_star), RealAlg.from_literal(b_star)
    except (GraphError, LiteralParseError) as e:
        _fail(ctx, str(e), EXIT_INVALID)

    solve_mode = Mode(mode.lower())
    report = verify_point(graph, a, b, dim, solve_mode)
    if not report.valid:
        click.echo(json.dumps(report.to_dict(), indent=2, ensure_ascii=False))
        _fail(ctx, "参数未通过精确认证, 不做数值实现", EXIT_FAILED)
    if report.swapped:
        a, b = b, a
    tolerance = ctx.obj["config"].get("solver", {}).get("realization_tolerance", 1e-9)
    try:
        realization = realize_point(graph, point_from_values(a, b, solve_mode), dim, report.rank, tolerance)
    except RankMismatchError as e:
        _fail(ctx, str(e), EXIT_CERTIFICATION)
    click.echo(json.dumps(realization.to_dict(), indent=2))


@cli.command()
@click.option(
    "--config-file", "-c",
    type=click.Path(),
    help="写出默认配置的路径"
)
@click.pass_context
def config(ctx: click.Context, config_file: Optional[str]):
    """配置管理"""
    if config_file:
        config_path = Path(config_file)
        ConfigUtils.save_config(ConfigUtils.create_default_config(), config_path)
        click.echo(f"默认配置已保存到: {config_path}", err=True)
        return

    def print_config(config_dict: Dict[str, Any], indent: int = 0) -> None:
        for key, value in config_dict.items():
            prefix = "  " * indent
            if isinstance(value, dict):
                click.echo(f"{prefix}{key}:")
                print_config(value, indent + 1)
            else:
                click.echo(f"{prefix}{key}: {value}")

    print_config(ctx.obj.get("config", {}))


def main():
    """主入口函数"""
    try:
        cli(obj={})
    except DistSetError as e:
        click.echo(f"❌ 系统错误: {e}", err=True)
        sys.exit(EXIT_CERTIFICATION)
    except KeyboardInterrupt:
        click.echo("\n程序被用户中断", err=True)
        sys.exit(EXIT_FAILED)


if __name__ == "__main__":
    main()

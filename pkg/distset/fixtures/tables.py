#!/usr/bin/env python3
# -*- coding: utf-8 -*-
"""
DistSet - 内置表格数据

R^4 中 5 至 10 点两距离集的已发表表格, 逐行转录: 图编码、参数、备注栏。
参数以代数数字面量给出; 依赖三次方程根的行用锚点加 x 的多项式表达。
备注中的 mydim 声明保留原标签, 标签与本行不符时在验证报告中注明。
"""

from dataclasses import dataclass
from typing import Dict, List, Optional, Tuple

from distset.core.types import Mode

SQRT5_PLUS = "(1 + 1*sqrt(5))/4"
SQRT5_MINUS = "(1 + -1*sqrt(5))/4"
GOLDEN_PLUS = "(3 + 1*sqrt(5))/2"
GOLDEN_MINUS = "(3 + -1*sqrt(5))/2"

# 8x^3 + 32x^2 + 10x - 1 的两个 |x| <= 1 的根
ALPHA_PLUS = "root([-1, 10, 32, 8]; 0, 1/10)"
ALPHA_MINUS = "root([-1, 10, 32, 8]; -1/2, -3/10)"
# 8x^3 - 8x^2 - 2x + 1 的两个 |x| <= 1 的根
BETA_PLUS = "root([1, -2, -8, 8]; 0, 1/2)"
BETA_MINUS = "root([1, -2, -8, 8]; -1/2, 0)"


@dataclass(frozen=True)
class FixturePoint:
    """
    一组表格参数

    Attributes:
        a, b: 代数数字面量; 给出 anchor 时为变量 x 的多项式表达式
        anchor: 可选锚点字面量
    """
    a: str
    b: Optional[str] = None
    anchor: Optional[str] = None


@dataclass(frozen=True)
class MydimClaim:
    """备注中的 mydim 声明; label 为备注里写的图名"""
    label: str
    complement: bool
    value: int


@dataclass(frozen=True)
class SubgraphClaim:
    """备注中 "Γ ~ Δ 去掉 k 个点" 形式的声明"""
    parent: str
    complement: bool
    deleted: int


@dataclass(frozen=True)
class TableRow:
    """表格中的一行"""
    table: str
    label: str
    n: int
    code: str
    mode: Mode
    points: Tuple[FixturePoint, ...]
    remark: str = ""
    jspherical: bool = False
    self_complementary: bool = False
    one_distance: bool = False
    mydim_claims: Tuple[MydimClaim, ...] = ()
    subgraph_claims: Tuple[SubgraphClaim, ...] = ()


def _pts(*pairs: Tuple[str, str]) -> Tuple[FixturePoint, ...]:
    return tuple(FixturePoint(a, b) for a, b in pairs)


def _md(label: str, value: int, complement: bool = True) -> MydimClaim:
    return MydimClaim(label=label, complement=complement, value=value)


def _sub(parent: str, deleted: int = 1, complement: bool = False) -> SubgraphClaim:
    return SubgraphClaim(parent=parent, complement=complement, deleted=deleted)


_S = Mode.SPHERICAL
_G = Mode.GENERAL

# ((1 ± sqrt 5)/4, 1/2)
_QUARTER_GOLDEN = _pts((SQRT5_PLUS, "1/2"), (SQRT5_MINUS, "1/2"))

SPHERICAL_8_10: List[TableRow] = [
    TableRow("sph8910", "10A", 10, "aaaaaaaabbababaabbaaabaabaabbabaabaabbaabaaaa", _S,
             _pts(("1/6", "-2/3")), "T(5)", mydim_claims=(_md("10A", 5),)),
    TableRow("sph8910", "9A", 9, "aaaaaaaabbababaabbaaabaabaabbabaabaa", _S,
             _pts(("1/6", "-2/3")), "", mydim_claims=(_md("9A", 5),), subgraph_claims=(_sub("10A"),)),
    TableRow("sph8910", "9B", 9, "aaaabbabbabababbabbaabbaababbbababaa", _S,
             _pts(("1/4", "-1/2")), "Paley", self_complementary=True),
    TableRow("sph8910", "8A", 8, "aaaaaaaaabaabaaabaaaabaaaaaa", _S,
             _pts(("0", "-1")), "16-cell", jspherical=True, mydim_claims=(_md("8A", 7),)),
    TableRow("sph8910", "8B", 8, "aaaaaaaaabaabababaabbbaaabbb", _S,
             _QUARTER_GOLDEN),
    TableRow("sph8910", "8C", 8, "aaaaaaaabbababababaabbbaabaa", _S,
             _pts(("1/6", "-2/3")), mydim_claims=(_md("8C", 5),)),
    TableRow("sph8910", "8D", 8, "aaaaaaabbbbabbabbabaabbbaaaa", _S,
             _pts(("1/5", "-3/5")), mydim_claims=(_md("8D", 6),)),
    TableRow("sph8910", "8E", 8, "aaaaaaaabbababaabbaaabaabaab", _S,
             _pts(("1/6", "-2/3")), mydim_claims=(_md("8E", 5),), subgraph_claims=(_sub("9A"),)),
    TableRow("sph8910", "8F", 8, "aaaabbabbabababbabbaabbaabab", _S,
             _pts(("1/4", "-1/2")), self_complementary=True, subgraph_claims=(_sub("9B"),)),
]

SPHERICAL_7: List[TableRow] = [
    TableRow("sph7", "7A", 7, "aaaaaaaaabaabaaabaaaa", _S,
             _pts(("0", "-1")), jspherical=True, mydim_claims=(_md("7A", 6),)),
    TableRow("sph7", "7B", 7, "aaaaaaaaabaababaabbaa", _S, _QUARTER_GOLDEN),
    TableRow("sph7", "7C", 7, "aaaaaaaaabaabababaabb", _S, _QUARTER_GOLDEN),
    TableRow("sph7", "7D", 7, "aaaaaaaabbababaabbaaa", _S,
             _pts(("1/6", "-2/3")), mydim_claims=(_md("7D", 5),)),
    TableRow("sph7", "7E", 7, "aaaaaaaabbababababaab", _S,
             _pts(("1/6", "-2/3")), mydim_claims=(_md("7E", 5),)),
    TableRow("sph7", "7F", 7, "aaaaaaaabbababbabbabb", _S, _QUARTER_GOLDEN),
    TableRow("sph7", "7G", 7, "aaaaaaaabbababbbaabbb", _S, _QUARTER_GOLDEN),
    TableRow("sph7", "7H", 7, "aaaaaaabbbbabbabbabaa", _S,
             _pts(("1/5", "-3/5")), mydim_claims=(_md("7F", 5),)),
    TableRow("sph7", "7I", 7, "aaaaaaaabbabababaabaa", _S,
             _pts(("1/6", "-2/3")), mydim_claims=(_md("7G", 5),)),
    TableRow("sph7", "7J", 7, "aaaaababaabaaaabbbbbb", _S,
             _pts(("1/4", "-1/2")), mydim_claims=(_md("7H", 5),)),
    TableRow("sph7", "7K", 7, "aaaaababaabaaabbbaaaa", _S,
             _pts(("(-1 + -1*sqrt(5))/8", "(-3 + 3*sqrt(5))/8")),
             mydim_claims=(_md("7K", 5, complement=False),)),
    TableRow("sph7", "7L", 7, "aaaaababaabaabbbbbaaa", _S,
             _pts(("1/6", "-2/3")), mydim_claims=(_md("7L", 5),)),
    TableRow("sph7", "7M", 7, "aaaaababababbaaabbbbb", _S, _QUARTER_GOLDEN),
    TableRow("sph7", "7N", 7, "aaaaababababbababbbaa", _S,
             _pts(("-5/12", "7/24")), mydim_claims=(_md("7N", 5, complement=False),)),
    TableRow("sph7", "7O", 7, "aaaaabababbabaabbaaaa", _S,
             (FixturePoint("x", "-1/2 - 2*x", ALPHA_PLUS), FixturePoint("x", "-1/2 - 2*x", ALPHA_MINUS)),
             "8α³+32α²+10α−1=0, |α±|≤1"),
    TableRow("sph7", "7P", 7, "aaaabbabbabababbabbaa", _S,
             _pts(("1/4", "-1/2"), ("-1/2", "1/4"))),
]

SPHERICAL_6: List[TableRow] = [
    TableRow("sph6", "6A", 6, "aaaaaaaaabaabaa", _S,
             _pts(("0", "-1")), jspherical=True, mydim_claims=(_md("6A", 5),)),
    TableRow("sph6", "6B", 6, "aaaaaaaaabaabab", _S, _QUARTER_GOLDEN),
    TableRow("sph6", "6C", 6, "aaaaaaaabbaabba", _S,
             _pts(("-1/3", "1/3")), mydim_claims=(_md("6C", 4, complement=False),)),
    TableRow("sph6", "6D", 6, "aaaaaaaabbababa", _S,
             _pts(("1/6", "-2/3")), mydim_claims=(_md("6D", 4),)),
    TableRow("sph6", "6E", 6, "aaaaaaaabbababb", _S, _QUARTER_GOLDEN),
    TableRow("sph6", "6F", 6, "aaaaaaaabbbbaaa", _S,
             _pts(("0", "(0 + 1*sqrt(2))/2"), ("0", "(0 + -1*sqrt(2))/2")), jspherical=True),
    TableRow("sph6", "6G", 6, "aaaaaaaabbbbaab", _S,
             _pts(("1/6", "-2/3"), ("-1/3", "1/3"))),
    TableRow("sph6", "6H", 6, "aaaaaaabbbbabba", _S,
             _pts(("1/5", "-3/5")), mydim_claims=(_md("6H", 4),)),
    TableRow("sph6", "6I", 6, "aaaaaaabbbbabbb", _S, _pts(("1/2", SQRT5_PLUS), ("1/2", SQRT5_MINUS))),
    TableRow("sph6", "6J", 6, "aaaaababaaabbbb", _S,
             _pts(("1/3", "-1/3")), mydim_claims=(_md("6J", 4),)),
    TableRow("sph6", "6K", 6, "aaaaababaabaaaa", _S,
             _pts(("0", "-1")), "octahedron", jspherical=True, mydim_claims=(_md("6K", 5),)),
    TableRow("sph6", "6L", 6, "aaaaababaabaaab", _S,
             _pts(("(-1 + -1*sqrt(5))/8", "(-3 + 3*sqrt(5))/8")),
             mydim_claims=(_md("6L", 4, complement=False),)),
    TableRow("sph6", "6M", 6, "aaaaababaabaabb", _S,
             _pts(("1/6", "-2/3")), mydim_claims=(_md("6M", 4),)),
    TableRow("sph6", "6N", 6, "aaaaababaabbbbb", _S,
             _pts(("1/4", "-1/2")), mydim_claims=(_md("6N", 4),)),
    TableRow("sph6", "6O", 6, "aaaaababababbaa", _S,
             _pts(("(0 + 1*sqrt(5))/5", "(0 + -1*sqrt(5))/5"), ("(0 + -1*sqrt(5))/5", "(0 + 1*sqrt(5))/5")),
             "pentagonal pyramids"),
    TableRow("sph6", "6P", 6, "aaaaababababbab", _S,
             _pts(("-5/12", "7/24")), mydim_claims=(_md("6P", 4, complement=False),)),
    TableRow("sph6", "6Q", 6, "aaaaababababbbb", _S, _QUARTER_GOLDEN),
    TableRow("sph6", "6R", 6, "aaaaabababbaabb", _S,
             _pts(("(0 + 1*sqrt(5))/5", "(0 + -1*sqrt(5))/5"), ("(0 + -1*sqrt(5))/5", "(0 + 1*sqrt(5))/5")),
             "pentahedrons"),
    TableRow("sph6", "6S", 6, "aaaaabababbabaa", _S,
             (FixturePoint("x", "-1/2 - 2*x", ALPHA_PLUS), FixturePoint("x", "-1/2 - 2*x", ALPHA_MINUS)),
             "8α³+32α²+10α−1=0, |α±|≤1"),
    TableRow("sph6", "6T", 6, "aaaaabababbabab", _S,
             (FixturePoint("x", "-1/2 - x + 2*x**2", BETA_PLUS),
              FixturePoint("x", "-1/2 - x + 2*x**2", BETA_MINUS)),
             "8β³−8β²−2β+1=0, |β±|≤1"),
    TableRow("sph6", "6U", 6, "aaaaabababbbbaa", _S,
             _pts(("1/6", "-2/3")), mydim_claims=(_md("6U", 4),)),
    TableRow("sph6", "6V", 6, "aaaaababbbbabba", _S,
             _pts(("1/3", "-1/3")), mydim_claims=(_md("6V", 4),)),
    TableRow("sph6", "6W", 6, "aaaaabbbaabbaaa", _S,
             _pts(("-3/7", "2/7")), mydim_claims=(_md("6W", 4, complement=False),)),
    TableRow("sph6", "6X", 6, "aaaabbabbababab", _S,
             _pts(("1/4", "-1/2"), ("-1/2", "1/4"))),
    TableRow("sph6", "6Y", 6, "aaaabbbababbaaa", _S,
             _pts(("1/7", "-5/7"), ("-1/2", "1/4")), "square-faced triangular prism"),
    TableRow("sph6", "6Z", 6, "aaaabbbababbbaa", _S,
             _pts(("1/5", "-3/5"), ("(0 + -1*sqrt(2))/3", "(-1 + 1*sqrt(2))/3"))),
    TableRow("sph6", "6AE", 6, "aaaabbbbbabbbaa", _S,
             _pts(("(-1 + 3*sqrt(3))/13", "(-7 + -5*sqrt(3))/26"),
                  ("(-1 + -3*sqrt(3))/13", "(-7 + 5*sqrt(3))/26"))),
    TableRow("sph6", "6OE", 6, "aaabbbbbbabbbaa", _S,
             _pts(("-1/2", "0")), jspherical=True, mydim_claims=(_md("6OE", 5, complement=False),)),
]

SPHERICAL_5: List[TableRow] = [
    TableRow("sph5", "5A", 5, "aaaaaaaaaa", _S,
             (FixturePoint("-1/4"),), "regular 5-cell", one_distance=True,
             mydim_claims=(_md("5A", 4),)),
    TableRow("sph5", "5B", 5, "aaaaaaaaab", _S,
             _pts(("(1 + -1*sqrt(7))/6", "0")), jspherical=True,
             mydim_claims=(_md("5B", 3, complement=False),)),
    TableRow("sph5", "5C", 5, "aaaaaabbbb", _S,
             _pts(("0", "-1/2")), jspherical=True, mydim_claims=(_md("5C", 3),)),
    TableRow("sph5", "5D", 5, "aaaaabaabb", _S,
             _pts(("-1/3", "0")), jspherical=True, mydim_claims=(_md("5D", 3, complement=False),)),
    TableRow("sph5", "5E", 5, "aaaaababaa", _S,
             _pts((SQRT5_MINUS, "0")), jspherical=True, mydim_claims=(_md("5E", 3, complement=False),)),
    TableRow("sph5", "5F", 5, "aaabbbbbba", _S,
             _pts(("0", "(0 + -1*sqrt(6))/6")), jspherical=True, mydim_claims=(_md("5F", 3),)),
]

GENERAL_7_9: List[TableRow] = [
    TableRow("gen789", "9C", 9, "aaaaaaaaaaaabbbababbbabbabbbabbbabbb", _G,
             _pts(("1", GOLDEN_PLUS), ("1", GOLDEN_MINUS))),
    TableRow("gen789", "9D", 9, "aaaaaaaaabaababaabbaaabbbbbbbabbbbbb", _G,
             _pts(("1", GOLDEN_PLUS)), self_complementary=True),
    TableRow("gen789", "8G", 8, "aaaaaaaaaaaabbbababbbabbabbb", _G,
             _pts(("1", GOLDEN_PLUS), ("1", GOLDEN_MINUS)), subgraph_claims=(_sub("9C"),)),
    TableRow("gen789", "8H", 8, "aaaaaaaaaaaabbbababbbbaabbbb", _G,
             _pts(("1", GOLDEN_PLUS), ("1", GOLDEN_MINUS))),
    TableRow("gen789", "8I", 8, "aaaaaaaaabaababaabbaaabbbbbb", _G,
             _pts(("1", GOLDEN_PLUS), ("1", GOLDEN_MINUS)), subgraph_claims=(_sub("9D"),)),
    TableRow("gen789", "8J", 8, "aaaaaaaaabaababaabbaabbbbbbb", _G,
             _pts(("1", GOLDEN_PLUS), ("1", GOLDEN_MINUS))),
    TableRow("gen789", "8K", 8, "aaaaaaaaabaabababaabbabbbbbb", _G,
             _pts(("1", GOLDEN_PLUS), ("1", GOLDEN_MINUS))),
    TableRow("gen789", "8L", 8, "aaaaaaaaabaabababaabbbbbbbbb", _G,
             _pts(("1", GOLDEN_PLUS), ("1", GOLDEN_MINUS)), subgraph_claims=(_sub("9C", complement=True),)),
    TableRow("gen789", "8M", 8, "aaaaaaaaabaabababbbbbbabbbbb", _G,
             _pts(("1", GOLDEN_PLUS)), self_complementary=True, subgraph_claims=(_sub("9D"),)),
    TableRow("gen789", "7Q", 7, "aaaaaaaaaaaabbbababbb", _G,
             _pts(("1", GOLDEN_PLUS), ("1", GOLDEN_MINUS)), subgraph_claims=(_sub("9C", 2),)),
    TableRow("gen789", "7R", 7, "aaaaaaaaabaabababbbbb", _G,
             _pts(("1", GOLDEN_PLUS), ("1", GOLDEN_MINUS)), subgraph_claims=(_sub("9D", 2),)),
    TableRow("gen789", "7S", 7, "aaaaaaaaabaababbbbbbb", _G,
             _pts(("1", GOLDEN_PLUS), ("1", GOLDEN_MINUS)), subgraph_claims=(_sub("9C", 2, complement=True),)),
    TableRow("gen789", "7T", 7, "aaaaaaaaababbbbbabbbb", _G,
             _pts(("1", GOLDEN_PLUS), ("1", GOLDEN_MINUS)), subgraph_claims=(_sub("9D", 2),)),
    TableRow("gen789", "7U", 7, "aaaaaaaabbababbabbbbb", _G,
             _pts(("1", GOLDEN_PLUS), ("1", GOLDEN_MINUS)), subgraph_claims=(_sub("9C", 2),)),
]

TABLES: Dict[str, List[TableRow]] = {
    "sph8910": SPHERICAL_8_10,
    "sph7": SPHERICAL_7,
    "sph6": SPHERICAL_6,
    "sph5": SPHERICAL_5,
    "gen789": GENERAL_7_9,
}


def all_rows() -> List[TableRow]:
    """全部表格行, 按表格顺序"""
    return [row for rows in TABLES.values() for row in rows]


def rows_by_label() -> Dict[str, TableRow]:
    return {row.label: row for row in all_rows()}


def find_row(label: str) -> TableRow:
    """按标签查找, 如 "10A"; 不存在时抛出 KeyError"""
    return rows_by_label()[label]


__all__ = [
    "FixturePoint",
    "MydimClaim",
    "SubgraphClaim",
    "TableRow",
    "TABLES",
    "all_rows",
    "rows_by_label",
    "find_row",
]

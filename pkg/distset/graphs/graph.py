#!/usr/bin/env python3
# -*- coding: utf-8 -*-
"""
DistSet - 图表示模块

有限简单无向图的位集表示, 以及与 a/b 字符串编码的相互转换。

编码约定: 对 i = 2..n, j = 1..i-1 (按行展开下三角), 第 k 个字符为 'a'
表示 {v_i, v_j} 是边, 'b' 表示非边。位集下标与字符下标一致。
"""

from dataclasses import dataclass
from functools import cached_property
from itertools import combinations
from typing import Iterable, Iterator, List, Optional, Sequence, Tuple

import networkx as nx

from distset.core.exceptions import GraphError, OrderTooLargeError
from distset.core.types import MAX_ORDER, GraphCode
from distset.utils.validation_utils import ValidationUtils


def pair_count(n: int) -> int:
    """n 个顶点的无序点对数"""
    return n * (n - 1) // 2


def pair_index(i: int, j: int) -> int:
    """点对 {i, j} (0 起始) 在编码中的位置"""
    if i == j:
        raise GraphError(f"自环没有编码位置: ({i}, {j})")
    if i < j:
        i, j = j, i
    return i * (i - 1) // 2 + j


@dataclass(frozen=True)
class Graph:
    """
    顶点为 0..order-1 的简单图

    Attributes:
        order: 顶点数
        edges: 边集位掩码, 第 pair_index(i, j) 位为 1 表示 {i, j} 是边
    """
    order: int
    edges: int = 0

    def __post_init__(self):
        if self.order < 1:
            raise GraphError(f"顶点数必须为正: {self.order}", order=self.order)
        if self.order > MAX_ORDER:
            raise OrderTooLargeError(f"顶点数 {self.order} 超过上限 {MAX_ORDER}", order=self.order)
        if self.edges < 0 or self.edges >> pair_count(self.order):
            raise GraphError("边掩码超出点对范围", order=self.order)

    @classmethod
    def from_edges(cls, order: int, edges: Iterable[Tuple[int, int]]) -> "Graph":
        """由边列表构造图"""
        mask = 0
        for u, v in edges:
            if not (0 <= u < order and 0 <= v < order):
                raise GraphError(f"顶点越界: ({u}, {v})", order=order)
            mask |= 1 << pair_index(u, v)
        return cls(order, mask)

    @classmethod
    def complete(cls, order: int) -> "Graph":
        return cls(order, (1 << pair_count(order)) - 1)

    @classmethod
    def empty(cls, order: int) -> "Graph":
        return cls(order, 0)

    @classmethod
    def from_networkx(cls, graph: nx.Graph) -> "Graph":
        """由 networkx 图构造, 顶点按排序后的顺序重新编号"""
        nodes = sorted(graph.nodes())
        index = {v: k for k, v in enumerate(nodes)}
        return cls.from_edges(len(nodes), ((index[u], index[v]) for u, v in graph.edges()))

    def has_edge(self, u: int, v: int) -> bool:
        return u != v and bool(self.edges >> pair_index(u, v) & 1)

    @cached_property
    def adjacency_masks(self) -> Tuple[int, ...]:
        """每个顶点的邻居位掩码 (按顶点编号)"""
        masks = [0] * self.order
        for i in range(1, self.order):
            base = pair_count(i)
            for j in range(i):
                if self.edges >> (base + j) & 1:
                    masks[i] |= 1 << j
                    masks[j] |= 1 << i
        return tuple(masks)

    def neighbors(self, v: int) -> List[int]:
        mask = self.adjacency_masks[v]
        return [u for u in range(self.order) if mask >> u & 1]

    def degree(self, v: int) -> int:
        return bin(self.adjacency_masks[v]).count("1")

    def degree_sequence(self) -> Tuple[int, ...]:
        return tuple(sorted((self.degree(v) for v in range(self.order)), reverse=True))

    @property
    def edge_count(self) -> int:
        return bin(self.edges).count("1")

    @property
    def is_complete(self) -> bool:
        return self.edge_count == pair_count(self.order)

    @property
    def is_empty(self) -> bool:
        return self.edges == 0

    def edge_list(self) -> List[Tuple[int, int]]:
        return [(j, i) for i in range(1, self.order) for j in range(i) if self.has_edge(i, j)]

    def induced(self, vertices: Sequence[int]) -> "Graph":
        """按给定顶点顺序取诱导子图, 新顶点 k 对应原顶点 vertices[k]"""
        mask = 0
        for i in range(1, len(vertices)):
            base = pair_count(i)
            vi = vertices[i]
            row = self.adjacency_masks[vi]
            for j in range(i):
                if row >> vertices[j] & 1:
                    mask |= 1 << (base + j)
        return Graph(len(vertices), mask)

    def delete_vertex(self, v: int) -> "Graph":
        return self.induced([u for u in range(self.order) if u != v])

    def relabel(self, perm: Sequence[int]) -> "Graph":
        """重新编号: 新顶点 k 为原顶点 perm[k]"""
        if sorted(perm) != list(range(self.order)):
            raise GraphError(f"不是 0..{self.order - 1} 的排列: {perm}", order=self.order)
        return self.induced(perm)

    def to_networkx(self) -> nx.Graph:
        graph = nx.Graph()
        graph.add_nodes_from(range(self.order))
        graph.add_edges_from(self.edge_list())
        return graph

    def __str__(self) -> str:
        return encode(self)


def decode(code: GraphCode, n: Optional[int] = None) -> Graph:
    """
    解码 a/b 字符串为图

    Args:
        code: 长度为 n(n-1)/2 的 a/b 字符串
        n: 顶点数, None 时由长度推断

    Returns:
        图

    Raises:
        LengthMismatchError: 长度不符
        BadAlphabetError: 字符非法
    """
    n = ValidationUtils.validate_graph_code(code, n)
    mask = 0
    for k, ch in enumerate(code):
        if ch == "a":
            mask |= 1 << k
    return Graph(n, mask)


def encode(graph: Graph) -> GraphCode:
    """图编码为 a/b 字符串, decode 的逆"""
    return "".join(
        "a" if graph.edges >> k & 1 else "b" for k in range(pair_count(graph.order))
    )


def complement(graph: Graph) -> Graph:
    """补图: 边与非边互换"""
    return Graph(graph.order, graph.edges ^ ((1 << pair_count(graph.order)) - 1))


def is_clique_union(graph: Graph) -> bool:
    """是否为若干不交完全图之并 (每个连通分支都是完全图)"""
    nxg = graph.to_networkx()
    for component in nx.connected_components(nxg):
        k = len(component)
        if nxg.subgraph(component).number_of_edges() != k * (k - 1) // 2:
            return False
    return True


def extensions(graph: Graph) -> Iterator[Graph]:
    """
    单点扩张: 添加顶点 n, 与原顶点的邻接关系取遍全部 2^n 种

    Yields:
        n+1 阶图, 前 n 个顶点诱导出原图
    """
    n = graph.order
    base = pair_count(n)
    for mask in range(1 << n):
        yield Graph(n + 1, graph.edges | (mask << base))


def vertex_deleted_subgraphs(graph: Graph) -> Iterator[Graph]:
    """依次删去每个顶点得到的诱导子图"""
    for v in range(graph.order):
        yield graph.delete_vertex(v)


def induced_subgraphs(graph: Graph, size: int) -> Iterator[Tuple[Tuple[int, ...], Graph]]:
    """全部 size 点诱导子图, 连同顶点组"""
    for subset in combinations(range(graph.order), size):
        yield subset, graph.induced(subset)


# 常见图族

def cycle_graph(n: int) -> Graph:
    return Graph.from_edges(n, ((i, (i + 1) % n) for i in range(n)))


def path_graph(n: int) -> Graph:
    return Graph.from_edges(n, ((i, i + 1) for i in range(n - 1)))


def cocktail_party_graph(k: int) -> Graph:
    """2k 个顶点, 除 k 对配对点外两两相邻 (k=3 为正八面体图, k=4 为十六胞体图)"""
    n = 2 * k
    return Graph.from_edges(n, ((i, j) for i in range(n) for j in range(i) if i // 2 != j // 2))


def johnson_graph(m: int, k: int) -> Graph:
    """k 元子集为顶点, 交为 k-1 元时相邻; J(5,2) 为三角图 T(5)"""
    subsets = list(combinations(range(m), k))
    edges = [
        (i, j)
        for i in range(len(subsets))
        for j in range(i)
        if len(set(subsets[i]) & set(subsets[j])) == k - 1
    ]
    return Graph.from_edges(len(subsets), edges)


def paley_graph(q: int) -> Graph:
    """
    Paley 图, 支持素数 q ≡ 1 (mod 4) 与 q = 9

    q = 9 时在 GF(3)[i]/(i^2+1) 上构造。
    """
    if q == 9:
        elements = [(x, y) for x in range(3) for y in range(3)]

        def square(e: Tuple[int, int]) -> Tuple[int, int]:
            x, y = e
            return ((x * x - y * y) % 3, (2 * x * y) % 3)

        squares = {square(e) for e in elements if e != (0, 0)}
        edges = [
            (i, j)
            for i in range(9)
            for j in range(i)
            if ((elements[i][0] - elements[j][0]) % 3, (elements[i][1] - elements[j][1]) % 3) in squares
        ]
        return Graph.from_edges(9, edges)
    if q % 4 != 1 or q < 5 or any(q % p == 0 for p in range(2, int(q ** 0.5) + 1)):
        raise GraphError(f"不支持的 Paley 图阶数: {q}", order=q)
    squares = {(x * x) % q for x in range(1, q)}
    return Graph.from_edges(q, ((i, j) for i in range(q) for j in range(i) if (i - j) % q in squares))


__all__ = [
    "Graph",
    "pair_count",
    "pair_index",
    "decode",
    "encode",
    "complement",
    "is_clique_union",
    "extensions",
    "vertex_deleted_subgraphs",
    "induced_subgraphs",
    "cycle_graph",
    "path_graph",
    "cocktail_party_graph",
    "johnson_graph",
    "paley_graph",
]

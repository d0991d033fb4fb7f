#!/usr/bin/env python3
# -*- coding: utf-8 -*-
"""
DistSet - 规范形模块

规范形取所有重新编号中字典序最小的编码 ('a' < 'b')。编码按行展开,
前 m 个顶点一旦确定, 编码的前 m 行也随之确定, 因此可以逐层扩展部分
编号并只保留达到当前最小前缀的分支。互为孪生点 (除彼此外邻域相同)
的候选顶点给出相同的后续分支, 只需展开其中一个。
"""

from functools import lru_cache
from itertools import permutations
from typing import Dict, List, Tuple

from distset.core.exceptions import OrderTooLargeError
from distset.core.types import MAX_ENUM_ORDER, ClassKey, GraphCode
from distset.graphs.graph import Graph, complement, encode, extensions, pair_count
from distset.utils.logging_utils import get_logger

logger = get_logger("graphs.canonical")

# 穷举比对仅用于小图
EXHAUSTIVE_LIMIT = 8


def _twin_classes(adjacency: Tuple[int, ...]) -> List[int]:
    """每个顶点所在孪生类的最小顶点编号"""
    n = len(adjacency)
    twin_of = list(range(n))
    for v in range(n):
        for u in range(v):
            if adjacency[u] & ~(1 << v) == adjacency[v] & ~(1 << u):
                twin_of[v] = twin_of[u]
                break
    return twin_of


def _row_key(neighbors: int, placed: Tuple[int, ...]) -> int:
    # 非边记 1, 首列为最高位: 数值越小字典序越小
    key = 0
    for u in placed:
        key = (key << 1) | (0 if neighbors >> u & 1 else 1)
    return key


@lru_cache(maxsize=None)
def _canonical_labeling(order: int, edges: int) -> Tuple[int, ...]:
    graph = Graph(order, edges)
    adjacency = graph.adjacency_masks
    twin_of = _twin_classes(adjacency)

    frontier: List[Tuple[int, ...]] = [()]
    for _ in range(order):
        best_row = None
        next_frontier: List[Tuple[int, ...]] = []
        for partial in frontier:
            placed = 0
            for v in partial:
                placed |= 1 << v
            seen = set()
            for v in range(order):
                if placed >> v & 1 or twin_of[v] in seen:
                    continue
                seen.add(twin_of[v])
                row = _row_key(adjacency[v], partial)
                if best_row is None or row < best_row:
                    best_row = row
                    next_frontier = [partial + (v,)]
                elif row == best_row:
                    next_frontier.append(partial + (v,))
        frontier = next_frontier
    return frontier[0]


def canonicalize(graph: Graph) -> Tuple[Graph, Tuple[int, ...]]:
    """
    计算规范形

    Args:
        graph: 任意图

    Returns:
        (规范图, 排列), 规范图的顶点 k 对应原图顶点 perm[k]
    """
    perm = _canonical_labeling(graph.order, graph.edges)
    return graph.relabel(perm), perm


def canonical_code(graph: Graph) -> GraphCode:
    """规范编码"""
    return encode(canonicalize(graph)[0])


def canonicalize_exhaustive(graph: Graph) -> GraphCode:
    """
    穷举全部 n! 种编号取最小编码, 作为 canonicalize 的校验基准

    Raises:
        OrderTooLargeError: n 超过穷举上限
    """
    if graph.order > EXHAUSTIVE_LIMIT:
        raise OrderTooLargeError(
            f"穷举规范形只支持 n <= {EXHAUSTIVE_LIMIT}", order=graph.order
        )
    return min(encode(graph.relabel(perm)) for perm in permutations(range(graph.order)))


def class_key(graph: Graph) -> ClassKey:
    """补图类的键: 图与补图规范编码中较小者"""
    return min(canonical_code(graph), canonical_code(complement(graph)))


def are_isomorphic(g: Graph, h: Graph) -> bool:
    return g.order == h.order and g.edge_count == h.edge_count and canonical_code(g) == canonical_code(h)


def is_self_complementary(graph: Graph) -> bool:
    """是否自补"""
    if 2 * graph.edge_count != pair_count(graph.order):
        return False
    return canonical_code(graph) == canonical_code(complement(graph))


@lru_cache(maxsize=None)
def _isomorphism_codes(n: int) -> Tuple[GraphCode, ...]:
    if n == 1:
        return (encode(Graph(1)),)
    codes: Dict[GraphCode, None] = {}
    for code in _isomorphism_codes(n - 1):
        base = _from_code(code, n - 1)
        for ext in extensions(base):
            codes.setdefault(canonical_code(ext), None)
    logger.debug(f"{n} 阶同构类共 {len(codes)} 个")
    return tuple(sorted(codes))


def enumerate_isomorphism_classes(n: int) -> List[Graph]:
    """
    n 阶图的全部同构类代表 (规范形), 按编码排序

    每个 n 阶图删去最后一个顶点后落在某个 n-1 阶同构类中, 因此由 n-1 阶
    代表的全部单点扩张去重即得。

    Raises:
        OrderTooLargeError: n 超过 MAX_ENUM_ORDER
    """
    if n < 1:
        return []
    if n > MAX_ENUM_ORDER:
        raise OrderTooLargeError(f"枚举只支持 n <= {MAX_ENUM_ORDER}", order=n)
    return [_from_code(code, n) for code in _isomorphism_codes(n)]


def enumerate_classes(n: int) -> List[Graph]:
    """
    n 阶补图类 {Γ, Γ̄} 的代表, 代表图的规范编码即类键

    Returns:
        按类键排序的代表图列表

    Raises:
        OrderTooLargeError: n 超过 MAX_ENUM_ORDER
    """
    if n < 1:
        return []
    if n > MAX_ENUM_ORDER:
        raise OrderTooLargeError(f"枚举只支持 n <= {MAX_ENUM_ORDER}", order=n)
    keys = {class_key(g) for g in enumerate_isomorphism_classes(n)}
    return [_from_code(key, n) for key in sorted(keys)]


def enumerate_classes_bruteforce(n: int) -> List[GraphCode]:
    """遍历全部 2^(n(n-1)/2) 个带标号图求补图类键, 仅供小 n 校验"""
    if n > 6:
        raise OrderTooLargeError("暴力枚举只支持 n <= 6", order=n)
    keys = {class_key(Graph(n, mask)) for mask in range(1 << pair_count(n))}
    return sorted(keys)


def _from_code(code: GraphCode, n: int) -> Graph:
    mask = 0
    for k, ch in enumerate(code):
        if ch == "a":
            mask |= 1 << k
    return Graph(n, mask)


__all__ = [
    "canonicalize",
    "canonical_code",
    "canonicalize_exhaustive",
    "class_key",
    "are_isomorphic",
    "is_self_complementary",
    "enumerate_isomorphism_classes",
    "enumerate_classes",
    "enumerate_classes_bruteforce",
]

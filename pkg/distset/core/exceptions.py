#!/usr/bin/env python3
# -*- coding: utf-8 -*-
"""
DistSet - 异常处理模块

定义系统中使用的所有自定义异常类。
"""

from typing import Any, Dict, Optional


class DistSetError(Exception):
    """两距离集分类系统基础异常类"""

    def __init__(
        self,
        message: str,
        error_code: Optional[str] = None,
        details: Optional[Dict[str, Any]] = None
    ):
        super().__init__(message)
        self.message = message
        self.error_code = error_code
        self.details = details or {}

    def __str__(self) -> str:
        if self.error_code:
            return f"[{self.error_code}] {self.message}"
        return self.message

    def to_dict(self) -> Dict[str, Any]:
        """转换为字典格式"""
        return {
            "error_type": self.__class__.__name__,
            "message": self.message,
            "error_code": self.error_code,
            "details": self.details,
        }


class GraphError(DistSetError):
    """图表示与编码相关异常"""

    def __init__(
        self,
        message: str,
        order: Optional[int] = None,
        code: Optional[str] = None,
        **kwargs
    ):
        super().__init__(message, **kwargs)
        self.order = order
        self.code = code
        if order is not None:
            self.details["order"] = order
        if code is not None:
            self.details["code"] = code


class LengthMismatchError(GraphError):
    """编码长度与 n(n-1)/2 不符"""
    pass


class BadAlphabetError(GraphError):
    """编码含有 {a, b} 以外的字符"""
    pass


class OrderTooLargeError(GraphError):
    """图的阶数超出桌面规模上限"""
    pass


class AlgebraError(DistSetError):
    """精确代数运算相关异常"""
    pass


class ZeroPolynomialError(AlgebraError):
    """对零多项式做根隔离"""
    pass


class LiteralParseError(AlgebraError):
    """代数数字面量解析失败"""

    def __init__(self, message: str, literal: Optional[str] = None, **kwargs):
        super().__init__(message, **kwargs)
        self.literal = literal
        if literal is not None:
            self.details["literal"] = literal


class RefinementExhaustedError(AlgebraError):
    """区间细分次数耗尽仍无法判定符号"""
    pass


class MatrixError(DistSetError):
    """多项式矩阵相关异常"""
    pass


class BadSizeError(MatrixError):
    """子式阶数不合法"""

    def __init__(self, message: str, size: Optional[int] = None, **kwargs):
        super().__init__(message, **kwargs)
        self.size = size
        if size is not None:
            self.details["size"] = size


class SolverError(DistSetError):
    """求解器相关异常"""

    def __init__(
        self,
        message: str,
        graph_code: Optional[str] = None,
        dim: Optional[int] = None,
        **kwargs
    ):
        super().__init__(message, **kwargs)
        self.graph_code = graph_code
        self.dim = dim
        if graph_code is not None:
            self.details["graph_code"] = graph_code
        if dim is not None:
            self.details["dim"] = dim


class NotTwoDistanceGraphError(SolverError):
    """完全图或空图不对应两距离集"""
    pass


class PositiveDimensionalUnexpectedError(SolverError):
    """在零维情形下出现了未预期的解曲线"""
    pass


class RankMismatchError(SolverError):
    """浮点秩与精确认证的秩不一致"""
    pass


class CertificationError(SolverError):
    """解在复核时未通过精确认证"""
    pass


class DimensionBoundError(SolverError):
    """最小表示维数超出给定上界"""

    def __init__(self, message: str, lower_bound: Optional[int] = None, **kwargs):
        super().__init__(message, **kwargs)
        self.lower_bound = lower_bound
        if lower_bound is not None:
            self.details["lower_bound"] = lower_bound


class CatalogError(DistSetError):
    """目录文件读写异常"""

    def __init__(self, message: str, path: Optional[str] = None, **kwargs):
        super().__init__(message, **kwargs)
        self.path = path
        if path is not None:
            self.details["path"] = path


class ConfigurationError(DistSetError):
    """配置相关异常"""

    def __init__(
        self,
        message: str,
        config_key: Optional[str] = None,
        **kwargs
    ):
        super().__init__(message, **kwargs)
        self.config_key = config_key
        if config_key:
            self.details["config_key"] = config_key


class ValidationError(DistSetError):
    """数据验证异常"""

    def __init__(
        self,
        message: str,
        field: Optional[str] = None,
        value: Optional[Any] = None,
        **kwargs
    ):
        super().__init__(message, **kwargs)
        self.field = field
        self.value = value
        if field:
            self.details["field"] = field
        if value is not None:
            self.details["value"] = str(value)


# 错误码到异常类的映射
EXCEPTION_MAP = {
    "GRAPH_ERROR": GraphError,
    "LENGTH_MISMATCH": LengthMismatchError,
    "BAD_ALPHABET": BadAlphabetError,
    "ORDER_TOO_LARGE": OrderTooLargeError,
    "ALGEBRA_ERROR": AlgebraError,
    "ZERO_POLYNOMIAL": ZeroPolynomialError,
    "LITERAL_PARSE_ERROR": LiteralParseError,
    "REFINEMENT_EXHAUSTED": RefinementExhaustedError,
    "MATRIX_ERROR": MatrixError,
    "BAD_SIZE": BadSizeError,
    "SOLVER_ERROR": SolverError,
    "NOT_TWO_DISTANCE_GRAPH": NotTwoDistanceGraphError,
    "POSITIVE_DIMENSIONAL_UNEXPECTED": PositiveDimensionalUnexpectedError,
    "RANK_MISMATCH": RankMismatchError,
    "CERTIFICATION_ERROR": CertificationError,
    "DIMENSION_BOUND": DimensionBoundError,
    "CATALOG_ERROR": CatalogError,
    "CONFIG_ERROR": ConfigurationError,
    "VALIDATION_ERROR": ValidationError,
}


def get_exception_class(error_code: str) -> type:
    """根据错误码获取异常类"""
    return EXCEPTION_MAP.get(error_code, DistSetError)


def create_exception(error_code: str, message: str, **kwargs) -> DistSetError:
    """根据错误码创建异常实例"""
    exception_class = get_exception_class(error_code)
    return exception_class(message, error_code=error_code, **kwargs)


__all__ = [
    "DistSetError",
    "GraphError",
    "LengthMismatchError",
    "BadAlphabetError",
    "OrderTooLargeError",
    "AlgebraError",
    "ZeroPolynomialError",
    "LiteralParseError",
    "RefinementExhaustedError",
    "MatrixError",
    "BadSizeError",
    "SolverError",
    "NotTwoDistanceGraphError",
    "PositiveDimensionalUnexpectedError",
    "RankMismatchError",
    "CertificationError",
    "DimensionBoundError",
    "CatalogError",
    "ConfigurationError",
    "ValidationError",
    "EXCEPTION_MAP",
    "get_exception_class",
    "create_exception",
]

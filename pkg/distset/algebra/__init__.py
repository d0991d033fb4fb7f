#!/usr/bin/env python3
# -*- coding: utf-8 -*-
"""
DistSet - 代数模块

有理系数多项式、Sturm 根隔离、实代数数、单代数扩张与二元方程组实解。
"""

from distset.algebra.realalg import RealAlg
from distset.algebra.numberfield import NumberField
from distset.algebra.solver import SolutionPoint, SolveStatus, solve_bivariate_real

__all__ = [
    "RealAlg",
    "NumberField",
    "SolutionPoint",
    "SolveStatus",
    "solve_bivariate_real",
]

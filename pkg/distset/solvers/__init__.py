#!/usr/bin/env python3
# -*- coding: utf-8 -*-
"""
DistSet - 求解模块

单个候选图的球面/一般模式求解、两距离集计数、精确验证与数值实现。
"""

from distset.solvers.verdicts import GeneralVerdict, SphericalVerdict, ValidityReport
from distset.solvers.spherical_solver import SphericalSolver, solve_spherical
from distset.solvers.general_solver import GeneralSolver, solve_general
from distset.solvers.set_counting import count_sets
from distset.solvers.verification import verify_at, verify_point
from distset.solvers.realization import Realization, realize

__all__ = [
    "SphericalVerdict",
    "GeneralVerdict",
    "ValidityReport",
    "SphericalSolver",
    "GeneralSolver",
    "solve_spherical",
    "solve_general",
    "count_sets",
    "verify_at",
    "verify_point",
    "Realization",
    "realize",
]

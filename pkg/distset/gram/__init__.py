#!/usr/bin/env python3
# -*- coding: utf-8 -*-
"""
DistSet - 矩阵模块
"""

from distset.gram.matrices import PolyMatrix, candidate_gram, menger_matrix, minor_system
from distset.gram.charpoly import char_coeffs, psd_rank_at

__all__ = [
    "PolyMatrix",
    "candidate_gram",
    "menger_matrix",
    "minor_system",
    "char_coeffs",
    "psd_rank_at",
]

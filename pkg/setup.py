#!/usr/bin/env python3
# -*- coding: utf-8 -*-

from setuptools import setup, find_packages

# 读取README文件
def read_readme():
    with open("README.md", "r", encoding="utf-8") as f:
        return f.read()

# 运行依赖 (开发工具放在 extras 中)
INSTALL_REQUIRES = [
    "sympy>=1.12",
    "numpy>=1.24.0",
    "networkx>=3.0",
    "pydantic>=2.0.0",
    "PyYAML>=6.0",
    "click>=8.1.0",
]

setup(
    name="distset",
    version="1.0.0",
    description="Exact classification of two-distance sets in low-dimensional Euclidean space",
    long_description=read_readme(),
    long_description_content_type="text/markdown",
    packages=find_packages(exclude=["tests", "tests.*", "examples", "examples.*"]),
    include_package_data=True,
    python_requires=">=3.9",
    install_requires=INSTALL_REQUIRES,
    extras_require={
        "dev": [
            "pytest>=7.2.0",
            "pytest-cov>=4.0.0",
            "black>=23.0.0",
            "flake8>=6.0.0",
            "mypy>=1.0.0",
        ],
    },
    classifiers=[
        "Development Status :: 4 - Beta",
        "Intended Audience :: Science/Research",
        "License :: OSI Approved :: MIT License",
        "Operating System :: OS Independent",
        "Programming Language :: Python :: 3",
        "Programming Language :: Python :: 3.9",
        "Programming Language :: Python :: 3.10",
        "Programming Language :: Python :: 3.11",
        "Topic :: Scientific/Engineering :: Mathematics",
    ],
    keywords=[
        "two-distance sets", "discrete geometry", "gram matrix",
        "computer algebra", "graph enumeration", "exact arithmetic",
    ],
    entry_points={
        "console_scripts": [
            "distset=distset.cli.main:main",
        ],
    },
)

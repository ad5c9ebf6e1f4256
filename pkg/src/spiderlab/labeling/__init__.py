# SPDX-FileCopyrightText: 2025 spiderlab Contributors
# SPDX-License-Identifier: MIT
"""
Spider forests, their labeling schemes, the verifier and the exhaustive oracle.
"""

from .forest import SpiderForest, SpiderSpec, parse_forest
from .schemes import run_scheme
from .sums import Labeling, check_antimagic

__all__ = [
    "Labeling",
    "SpiderForest",
    "SpiderSpec",
    "check_antimagic",
    "parse_forest",
    "run_scheme",
]

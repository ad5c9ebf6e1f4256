# SPDX-FileCopyrightText: 2025 spiderlab Contributors
# SPDX-License-Identifier: MIT
"""
Pick and run a labeling scheme by name.
"""

import logging
from dataclasses import dataclass
from typing import Any, Dict, List, Optional

from .errors import SchemeNotApplicableError
from .forest import SCHEMES, SpiderForest, validate_for_scheme
from .scheme_a import compute_params_a, label_scheme_a
from .scheme_b import (
    compute_k0,
    compute_params_b,
    label_scheme_b,
    label_scheme_b_negative,
)
from .scheme_c import SwitchLog, compute_params_c, label_scheme_c
from .sums import Labeling

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class SchemeOutcome:
    """A labeling together with the scheme that produced it."""

    scheme: str
    labeling: Labeling
    switch_log: Optional[SwitchLog] = None

    def repairs(self) -> Optional[List[Dict[str, Any]]]:
        return self.switch_log.as_dicts() if self.switch_log is not None else None


def choose_scheme(forest: SpiderForest, k: int) -> str:
    """Scheme ``auto`` resolves to: a if applicable, then c, then b.

    Raises:
        SchemeNotApplicableError: If no scheme covers (forest, k)
    """
    if k >= 0 and validate_for_scheme(forest, "a").valid:
        return "a"
    if k >= 0 and validate_for_scheme(forest, "c").valid:
        return "c"
    report = validate_for_scheme(forest, "b")
    if not report.valid:
        raise SchemeNotApplicableError(str(report), report)
    k0 = compute_k0(forest)
    if k >= k0 or k <= -(forest.m + k0 + 1):
        return "b"
    raise SchemeNotApplicableError(
        f"No scheme covers k={k}: scheme b needs k >= {k0} or k <= {-(forest.m + k0 + 1)}"
    )


def run_scheme(forest: SpiderForest, k: int, scheme: str = "auto") -> SchemeOutcome:
    """Label the forest with the named scheme (or ``auto``).

    The outcome names the scheme actually used. Scheme b handles negative
    shifts by mirroring. Only scheme c records a switch log.

    Raises:
        ValueError: If the scheme name is unknown
        SchemeNotApplicableError: If the scheme does not cover (forest, k)
        ConstructionError: If the construction fails internally
    """
    scheme = scheme.lower()
    if scheme == "auto":
        scheme = choose_scheme(forest, k)
        logger.info(f"Scheme auto resolved to {scheme} for k={k}")
    if scheme not in SCHEMES:
        raise ValueError(f"Invalid scheme: {scheme}. Must be one of auto, a, b, c")

    if scheme == "a":
        return SchemeOutcome(scheme, label_scheme_a(forest, k))
    if scheme == "b":
        if k < 0:
            return SchemeOutcome(scheme, label_scheme_b_negative(forest, k))
        return SchemeOutcome(scheme, label_scheme_b(forest, k))
    labeling, switch_log = label_scheme_c(forest, k)
    return SchemeOutcome(scheme, labeling, switch_log)


def scheme_params(forest: SpiderForest, k: int, scheme: str) -> Dict[str, Any]:
    """Parameter and interval dump of one scheme at shift k.

    Raises:
        ValueError: If the scheme name is unknown
        SchemeNotApplicableError: If the scheme does not cover (forest, k)
    """
    scheme = scheme.lower()
    if scheme == "a":
        return compute_params_a(forest, k).as_dict()
    if scheme == "b":
        return compute_params_b(forest, k).as_dict()
    if scheme == "c":
        return compute_params_c(forest, k).as_dict()
    raise ValueError(f"Invalid scheme: {scheme}. Must be one of {SCHEMES}")


def sweep_shift(forest: SpiderForest, scheme: str) -> int:
    """Shift at which the exhaustive sweep runs a scheme: k0 for b, 0 otherwise."""
    return compute_k0(forest) if scheme == "b" else 0

# SPDX-FileCopyrightText: 2025 spiderlab Contributors
# SPDX-License-Identifier: MIT
"""
Labeling scheme for spider forests without 1-legs, valid for every k >= 0.

Each spider keeps one reserved leg aside (an even leg when it has one). The
other legs are labeled from seven consecutive intervals so that leaves get
small sums, degree-2 vertices middle sums and centers large sums; the reserved
legs are then labeled by the iterated process, which separates the centers.
"""

import logging
from dataclasses import dataclass
from typing import Any, Dict, List, Tuple

from .errors import ConstructionError, SchemeNotApplicableError
from .forest import SpiderForest, validate_for_scheme
from .steps import (
    Interval,
    LabelingBuilder,
    ReservedRound,
    consecutive,
    ensure_antimagic,
    interval_table,
    label_reserved_legs,
    pools,
)
from .sums import Labeling

logger = logging.getLogger(__name__)

INTERVAL_NAMES = ("I1", "I2", "I3", "I4", "I5", "I6", "I7")

LegList = Tuple[Tuple[int, int], ...]


@dataclass(frozen=True)
class SchemeAParams:
    """Derived quantities of the construction at shift k."""

    k: int
    m: int
    reserved: Tuple[int, ...]
    t_prime: int
    odd_legs: LegList
    even_legs: LegList
    n1: int
    a: int
    b: int
    c1: int
    c2: int
    intervals: Dict[str, Interval]

    @property
    def degree2_bound(self) -> int:
        """Largest possible degree-2 vertex sum: max of I4 plus max of I7."""
        return (self.k + 2 * self.a + self.b + self.c1) + (self.k + self.m)

    def as_dict(self) -> Dict[str, Any]:
        return {
            "scheme": "a",
            "k": self.k,
            "m": self.m,
            "a": self.a,
            "b": self.b,
            "c1": self.c1,
            "c2": self.c2,
            "n1": self.n1,
            "t_prime": self.t_prime,
            "reserved": list(self.reserved),
            "intervals": {name: str(i) for name, i in self.intervals.items()},
        }


@dataclass(frozen=True)
class SchemeARun:
    labeling: Labeling
    params: SchemeAParams
    rounds: List[ReservedRound]


def reserve_leg(legs: Tuple[int, ...]) -> int:
    """First even leg, otherwise the first leg (1-based)."""
    for j, length in enumerate(legs, start=1):
        if length % 2 == 0:
            return j
    return 1


def split_reserved(
    forest: SpiderForest, reserved: Tuple[int, ...]
) -> Tuple[int, int, int]:
    """Return (t', c1, c2) for the given reserved legs."""
    t_prime = c1 = c2 = 0
    for i, leg in enumerate(reserved, start=1):
        length = forest.leg_length(i, leg)
        if length % 2 == 1:
            t_prime += 1
            c1 += (length + 1) // 2
            c2 += (length - 1) // 2
        else:
            c1 += length // 2
            c2 += length // 2
    return t_prime, c1, c2


def compute_params_a(forest: SpiderForest, k: int) -> SchemeAParams:
    """Reserve legs, arrange the others and cut [k+1, k+m] into I1..I7.

    Raises:
        SchemeNotApplicableError: If a spider has a 1-leg or fewer than three
            legs, or k is negative
    """
    report = validate_for_scheme(forest, "a")
    if not report.valid:
        raise SchemeNotApplicableError(str(report), report)
    if k < 0:
        raise SchemeNotApplicableError(f"Scheme a needs k >= 0, got {k}")

    reserved = tuple(reserve_leg(spider.legs) for spider in forest.spiders)
    t_prime, c1, c2 = split_reserved(forest, reserved)

    odd: List[Tuple[int, int]] = []
    even: List[Tuple[int, int]] = []
    for i, j, length in forest.legs():
        if j == reserved[i - 1]:
            continue
        (odd if length % 2 == 1 else even).append((i, j))

    a = sum((forest.leg_length(i, j) - 1) // 2 for i, j in odd)
    b = sum(forest.leg_length(i, j) // 2 for i, j in even)
    n1 = len(odd)

    intervals = interval_table(
        INTERVAL_NAMES, consecutive(k + 1, (a, b, c1, a, b, c2, n1))
    )
    if intervals["I7"].hi != k + forest.m:
        raise ConstructionError(f"Interval sizes do not add up to m={forest.m}")

    params = SchemeAParams(
        k=k,
        m=forest.m,
        reserved=reserved,
        t_prime=t_prime,
        odd_legs=tuple(odd),
        even_legs=tuple(even),
        n1=n1,
        a=a,
        b=b,
        c1=c1,
        c2=c2,
        intervals=intervals,
    )
    logger.info(f"Scheme a params: a={a} b={b} c1={c1} c2={c2} n1={n1} t'={t_prime}")
    return params


def run_scheme_a(forest: SpiderForest, k: int) -> SchemeARun:
    """Label the forest and keep the parameters and reserved-leg rounds."""
    params = compute_params_a(forest, k)
    i1, i2, i3, i4, i5, i6, i7 = pools(params.intervals, *INTERVAL_NAMES)
    builder = LabelingBuilder(forest, k)

    for i, j in params.odd_legs:
        builder.odd_leg(i, j, i1, i4, i7)
    for i, j in params.even_legs:
        builder.even_leg(i, j, i2, i5)

    reserved = {i: leg for i, leg in enumerate(params.reserved, start=1)}
    rounds = label_reserved_legs(builder, reserved, i3, i6)

    labeling = ensure_antimagic(forest, builder.build(), "a")
    return SchemeARun(labeling, params, rounds)


def label_scheme_a(forest: SpiderForest, k: int) -> Labeling:
    """k-shifted antimagic labeling of a forest whose legs all have length >= 2.

    Raises:
        SchemeNotApplicableError: If the forest or k is outside the hypothesis
        ConstructionError: If the construction fails internally
    """
    return run_scheme_a(forest, k).labeling

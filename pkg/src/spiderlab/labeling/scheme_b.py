# SPDX-FileCopyrightText: 2025 spiderlab Contributors
# SPDX-License-Identifier: MIT
"""
Labeling scheme for arbitrary spider forests at large positive or negative shifts.

Works like scheme a with nine intervals instead of seven. Spiders with at most
two long legs reserve a 1-leg; stars give up two more 1-legs and spiders with
one long leg one more ("collected" legs), which receive paired labels from
the middle of the range so that small stars still get large center sums. The
construction is guaranteed for k >= k0, and negating every label turns it
into a labeling for k <= -(m + k0 + 1).
"""

import logging
from dataclasses import dataclass
from typing import Any, Dict, List, Tuple

from .errors import ConstructionError, SchemeNotApplicableError
from .forest import EdgeRef, SpiderForest, validate_for_scheme
from .scheme_a import split_reserved
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

INTERVAL_NAMES = ("I1", "I2", "I3", "I4", "I5", "I6", "I7", "I8", "I9")

LegList = Tuple[Tuple[int, int], ...]


@dataclass(frozen=True)
class _Arrangement:
    """The k-independent part of the construction."""

    reserved: Tuple[int, ...]
    alpha_spiders: Tuple[int, ...]
    beta_spiders: Tuple[int, ...]
    gamma: int
    collected: LegList
    remaining_ones: LegList
    long_odd: LegList
    even_legs: LegList
    s: int
    q: int
    n1: int
    a: int
    b: int
    c1: int
    c2: int
    t_prime: int

    @property
    def alpha(self) -> int:
        return len(self.alpha_spiders)

    @property
    def beta(self) -> int:
        return len(self.beta_spiders)

    @property
    def threshold(self) -> int:
        return self.n1 + self.a + self.c2 - 2 * self.q


@dataclass(frozen=True)
class SchemeBParams:
    """Derived quantities of the construction at shift k."""

    k: int
    m: int
    k0: int
    ones: Tuple[int, ...]
    long_legs: Tuple[int, ...]
    s: int
    alpha: int
    beta: int
    gamma: int
    q: int
    reserved: Tuple[int, ...]
    t_prime: int
    collected: LegList
    remaining_ones: LegList
    long_odd: LegList
    even_legs: LegList
    n1: int
    a: int
    b: int
    c1: int
    c2: int
    intervals: Dict[str, Interval]

    @property
    def degree2_bound(self) -> int:
        """Largest possible degree-2 vertex sum: max of I6 plus max of I9."""
        return (
            self.k
            + 2 * self.a
            + self.b
            + self.q
            + self.c1
            + (2 * self.alpha + self.beta)
        ) + (self.k + self.m)

    def as_dict(self) -> Dict[str, Any]:
        return {
            "scheme": "b",
            "k": self.k,
            "m": self.m,
            "k0": self.k0,
            "a": self.a,
            "b": self.b,
            "c1": self.c1,
            "c2": self.c2,
            "n1": self.n1,
            "q": self.q,
            "s": self.s,
            "alpha": self.alpha,
            "beta": self.beta,
            "gamma": self.gamma,
            "t_prime": self.t_prime,
            "reserved": list(self.reserved),
            "intervals": {name: str(i) for name, i in self.intervals.items()},
        }


@dataclass(frozen=True)
class SchemeBRun:
    labeling: Labeling
    params: SchemeBParams
    rounds: List[ReservedRound]


def _reserve_long_leg(legs: Tuple[int, ...]) -> int:
    """First even leg, otherwise the first odd leg of length >= 3."""
    for j, length in enumerate(legs, start=1):
        if length % 2 == 0:
            return j
    return next(j for j, length in enumerate(legs, start=1) if length >= 3)


def _arrange(forest: SpiderForest) -> _Arrangement:
    report = validate_for_scheme(forest, "b")
    if not report.valid:
        raise SchemeNotApplicableError(str(report), report)

    reserved: List[int] = []
    alpha_spiders: List[int] = []
    beta_spiders: List[int] = []
    gamma = 0
    firsts: List[Tuple[int, int]] = []
    seconds: List[Tuple[int, int]] = []
    singles: List[Tuple[int, int]] = []
    taken = set()

    for i, spider in enumerate(forest.spiders, start=1):
        ones = [j for j, length in enumerate(spider.legs, start=1) if length == 1]
        if spider.long_legs <= 2:
            leg = ones[0]
        else:
            leg = _reserve_long_leg(spider.legs)
        reserved.append(leg)
        spare = [j for j in ones if j != leg]

        if spider.long_legs == 0:
            alpha_spiders.append(i)
            firsts.append((i, spare[0]))
            seconds.append((i, spare[1]))
            taken.update({(i, spare[0]), (i, spare[1])})
        elif spider.long_legs == 1:
            beta_spiders.append(i)
            singles.append((i, spare[0]))
            taken.add((i, spare[0]))
        elif spider.long_legs == 2:
            gamma += 1

    collected = tuple(firsts + seconds + singles)
    remaining_ones: List[Tuple[int, int]] = []
    long_odd: List[Tuple[int, int]] = []
    even: List[Tuple[int, int]] = []
    for i, j, length in forest.legs():
        if j == reserved[i - 1] or (i, j) in taken:
            continue
        if length == 1:
            remaining_ones.append((i, j))
        elif length % 2 == 1:
            long_odd.append((i, j))
        else:
            even.append((i, j))

    s = forest.s
    alpha, beta = len(alpha_spiders), len(beta_spiders)
    q = s - (3 * alpha + 2 * beta + gamma)
    if q != len(remaining_ones):
        raise ConstructionError(
            f"q={q} but {len(remaining_ones)} uncollected 1-legs remain"
        )

    t_prime, c1, c2 = split_reserved(forest, tuple(reserved))
    return _Arrangement(
        reserved=tuple(reserved),
        alpha_spiders=tuple(alpha_spiders),
        beta_spiders=tuple(beta_spiders),
        gamma=gamma,
        collected=collected,
        remaining_ones=tuple(remaining_ones),
        long_odd=tuple(long_odd),
        even_legs=tuple(even),
        s=s,
        q=q,
        n1=len(collected) + q + len(long_odd),
        a=sum((forest.leg_length(i, j) - 1) // 2 for i, j in long_odd),
        b=sum(forest.leg_length(i, j) // 2 for i, j in even),
        c1=c1,
        c2=c2,
        t_prime=t_prime,
    )


def compute_k0(forest: SpiderForest) -> int:
    """Smallest shift the construction is guaranteed for: max(1, n1 + a + c2 - 2q).

    Raises:
        SchemeNotApplicableError: If a spider has fewer than three legs
        ConstructionError: If the threshold is not below m
    """
    arrangement = _arrange(forest)
    k0 = max(1, arrangement.threshold)
    if k0 >= forest.m:
        raise ConstructionError(f"k0={k0} is not below m={forest.m}")
    return k0


def compute_params_b(forest: SpiderForest, k: int) -> SchemeBParams:
    """Arrange legs and cut [k+1, k+m] into I1..I9.

    Raises:
        SchemeNotApplicableError: If the forest is invalid or k < k0
    """
    arrangement = _arrange(forest)
    k0 = max(1, arrangement.threshold)
    if k0 >= forest.m:
        raise ConstructionError(f"k0={k0} is not below m={forest.m}")
    if k < k0:
        raise SchemeNotApplicableError(f"Scheme b needs k >= k0={k0}, got {k}")

    x = arrangement
    paired = 2 * x.alpha + x.beta
    sizes = (x.a, x.b, x.q, x.c1, paired, x.a, x.b, x.c2, x.n1 - x.q - paired)
    intervals = interval_table(INTERVAL_NAMES, consecutive(k + 1, sizes))
    if intervals["I9"].hi != k + forest.m:
        raise ConstructionError(f"Interval sizes do not add up to m={forest.m}")

    logger.info(
        f"Scheme b params: k0={k0} a={x.a} b={x.b} q={x.q} c1={x.c1} c2={x.c2} "
        f"n1={x.n1} alpha={x.alpha} beta={x.beta} gamma={x.gamma}"
    )
    return SchemeBParams(
        k=k,
        m=forest.m,
        k0=k0,
        ones=tuple(spider.ones for spider in forest.spiders),
        long_legs=tuple(spider.long_legs for spider in forest.spiders),
        s=x.s,
        alpha=x.alpha,
        beta=x.beta,
        gamma=x.gamma,
        q=x.q,
        reserved=x.reserved,
        t_prime=x.t_prime,
        collected=x.collected,
        remaining_ones=x.remaining_ones,
        long_odd=x.long_odd,
        even_legs=x.even_legs,
        n1=x.n1,
        a=x.a,
        b=x.b,
        c1=x.c1,
        c2=x.c2,
        intervals=intervals,
    )


def run_scheme_b(forest: SpiderForest, k: int) -> SchemeBRun:
    """Label the forest and keep the parameters and reserved-leg rounds."""
    params = compute_params_b(forest, k)
    i1, i2, i3, i4, _, i6, i7, i8, i9 = pools(params.intervals, *INTERVAL_NAMES)
    builder = LabelingBuilder(forest, k)

    base = params.intervals["I5"].lo - 1
    alpha, beta = params.alpha, params.beta
    collected = params.collected
    for n in range(1, alpha + 1):
        i, j = collected[n - 1]
        builder.assign(EdgeRef(i, j, 1), base + n)
        i, j = collected[alpha + n - 1]
        builder.assign(EdgeRef(i, j, 1), base + 2 * alpha + beta + 1 - n)
    for n in range(1, beta + 1):
        i, j = collected[2 * alpha + n - 1]
        builder.assign(EdgeRef(i, j, 1), base + alpha + n)

    for (i, j), label in zip(params.remaining_ones, i3.take_smallest(params.q)):
        builder.assign(EdgeRef(i, j, 1), label)
    for i, j in params.long_odd:
        builder.odd_leg(i, j, i1, i6, i9)
    for i, j in params.even_legs:
        builder.even_leg(i, j, i2, i7)

    reserved = {i: leg for i, leg in enumerate(params.reserved, start=1)}
    rounds = label_reserved_legs(builder, reserved, i4, i8)

    labeling = ensure_antimagic(forest, builder.build(), "b")
    return SchemeBRun(labeling, params, rounds)


def label_scheme_b(forest: SpiderForest, k: int) -> Labeling:
    """k-shifted antimagic labeling of any spider forest, for k >= k0.

    Raises:
        SchemeNotApplicableError: If a spider has fewer than three legs or
            k < k0
        ConstructionError: If the construction fails internally
    """
    return run_scheme_b(forest, k).labeling


def mirror_negate(labeling: Labeling, m: int) -> Labeling:
    """Negate every label: a k-shifted labeling becomes a (-k-m-1)-shifted one."""
    return Labeling(
        -labeling.k - m - 1,
        {edge: -label for edge, label in labeling.assignments.items()},
    )


def label_scheme_b_negative(forest: SpiderForest, k: int) -> Labeling:
    """Labeling for a negative shift k <= -(m + k0 + 1), by mirroring.

    Raises:
        SchemeNotApplicableError: If k > -(m + k0 + 1)
    """
    m = forest.m
    k0 = compute_k0(forest)
    if k > -(m + k0 + 1):
        raise SchemeNotApplicableError(
            f"Negative scheme b needs k <= {-(m + k0 + 1)}, got {k}"
        )
    mirrored = mirror_negate(label_scheme_b(forest, -k - m - 1), m)
    return ensure_antimagic(forest, mirrored, "b")

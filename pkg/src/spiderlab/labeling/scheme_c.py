# SPDX-FileCopyrightText: 2025 spiderlab Contributors
# SPDX-License-Identifier: MIT
"""
Labeling scheme for spider forests whose legs have length 1 or even, any k >= 0.

Spiders are classified as

    A  the star S3
    B  a star with four or more legs
    C  a non-star with at least two 1-legs
    D  everything else (at most one 1-leg, so at least two even legs)

[k+1, k+m] is cut into I1 (low), I2 (the s middle labels, for 1-legs) and I3
(high). Stars get pairs of I2 labels that sum to a constant, even legs
alternate I1 and I3, and B/C spiders finally receive two "special" labels on
reserved 1-legs. A B/C center can then only collide with a D center; such
"trouble" spiders are repaired by swapping special labels between neighbours.
"""

import logging
from dataclasses import dataclass, field
from typing import Any, Dict, Iterator, List, Mapping, Optional, Tuple

from .errors import ConstructionError, SchemeNotApplicableError
from .forest import CenterRef, EdgeRef, SpiderForest, SpiderSpec, validate_for_scheme
from .steps import (
    Interval,
    LabelingBuilder,
    LabelPool,
    consecutive,
    ensure_antimagic,
    interval_table,
    pools,
)
from .sums import Labeling, degree_classes, vertex_sums

logger = logging.getLogger(__name__)

INTERVAL_NAMES = ("I1", "I2", "I3")

SPIDER_TYPES = ("A", "B", "C", "D")


@dataclass(frozen=True)
class Swap:
    """Two labels exchanged between the centers of two spiders."""

    label_a: int
    label_b: int
    spider_a: int
    spider_b: int
    kind: str

    def as_dict(self) -> Dict[str, Any]:
        return {
            "label_a": self.label_a,
            "label_b": self.label_b,
            "spider_a": self.spider_a,
            "spider_b": self.spider_b,
            "kind": self.kind,
        }


@dataclass
class SwitchLog:
    """Every swap applied while repairing trouble spiders, in order.

    ``kind`` is ``pass`` for the left-to-right scan, ``final`` and ``final-wide``
    for the last two B/C spiders (the latter moves each sum by 2) and
    ``fallback`` for a swap with any other 1-leg.
    """

    swaps: List[Swap] = field(default_factory=list)

    def record(self, swap: Swap):
        self.swaps.append(swap)

    def __iter__(self) -> Iterator[Swap]:
        return iter(self.swaps)

    def __len__(self) -> int:
        return len(self.swaps)

    def as_dicts(self) -> List[Dict[str, Any]]:
        return [swap.as_dict() for swap in self.swaps]


@dataclass(frozen=True)
class SchemeCParams:
    """Classification, ordering and intervals of the construction at shift k.

    Spiders keep their input index everywhere; ``order`` lists them by slot,
    A block first, then B/C and D each sorted by their partial center sum.
    """

    k: int
    m: int
    s: int
    types: Tuple[str, ...]
    t1: int
    t2: int
    t3: int
    order: Tuple[int, ...]
    reserved: Dict[int, Tuple[int, int]]
    phi_prime: Dict[int, int]
    m_prime: int
    intervals: Dict[str, Interval]

    @property
    def t(self) -> int:
        return len(self.order)

    @property
    def bc_order(self) -> Tuple[int, ...]:
        return self.order[self.t1 : self.t3]

    @property
    def d_order(self) -> Tuple[int, ...]:
        return self.order[self.t3 :]

    @property
    def degree2_bound(self) -> int:
        """Largest I1 label plus largest I3 label."""
        return (self.k + (self.m - self.s) // 2) + (self.k + self.m)

    def slot_of(self, spider: int) -> int:
        return self.order.index(spider) + 1

    def specials(self, slot: int) -> Tuple[int, int]:
        """Temporary labels of the B/C spider in ``slot``."""
        return self.m_prime + 2 * slot - 1, self.m_prime + 2 * slot

    def as_dict(self) -> Dict[str, Any]:
        return {
            "scheme": "c",
            "k": self.k,
            "m": self.m,
            "s": self.s,
            "t1": self.t1,
            "t2": self.t2,
            "t3": self.t3,
            "t": self.t,
            "m_prime": self.m_prime,
            "types": list(self.types),
            "order": list(self.order),
            "reserved": {str(i): list(legs) for i, legs in self.reserved.items()},
            "intervals": {name: str(i) for name, i in self.intervals.items()},
        }


@dataclass(frozen=True)
class SchemeCRun:
    labeling: Labeling
    params: SchemeCParams
    switch_log: SwitchLog
    pre_repair_sums: Dict[int, int]


def spider_type(spider: SpiderSpec) -> str:
    if spider.is_star:
        return "A" if spider.degree == 3 else "B"
    return "C" if spider.ones >= 2 else "D"


def _one_legs(spider: SpiderSpec) -> List[int]:
    return [j for j, length in enumerate(spider.legs, start=1) if length == 1]


def _even_legs(spider: SpiderSpec) -> List[int]:
    return [j for j, length in enumerate(spider.legs, start=1) if length % 2 == 0]


def _prepare(forest: SpiderForest, k: int) -> Tuple[SchemeCParams, LabelingBuilder]:
    """Label everything except the B/C reserved 1-legs, then place the specials."""
    report = validate_for_scheme(forest, "c")
    if not report.valid:
        raise SchemeNotApplicableError(str(report), report)
    if k < 0:
        raise SchemeNotApplicableError(f"Scheme c needs k >= 0, got {k}")

    m, s = forest.m, forest.s
    if (m - s) % 2:
        raise ConstructionError(f"m={m} and s={s} have different parity")
    half = (m - s) // 2

    types = tuple(spider_type(spider) for spider in forest.spiders)
    blocks: Dict[str, List[int]] = {name: [] for name in SPIDER_TYPES}
    for i, kind in enumerate(types, start=1):
        blocks[kind].append(i)
    t1 = len(blocks["A"])
    t2 = t1 + len(blocks["B"])
    t3 = t2 + len(blocks["C"])

    intervals = interval_table(INTERVAL_NAMES, consecutive(k + 1, (half, s, half)))
    low, high = pools(intervals, "I1", "I3")
    base = k + half
    builder = LabelingBuilder(forest, k)

    # Stars: a pair summing to 2k + m + 1, and a third label for S3.
    for slot, i in enumerate(blocks["A"] + blocks["B"], start=1):
        builder.assign(EdgeRef(i, 1, 1), base + slot)
        builder.assign(EdgeRef(i, 2, 1), base + s + 1 - slot)
        if slot <= t1:
            builder.assign(EdgeRef(i, 3, 1), base + t2 + slot)

    reserved: Dict[int, Tuple[int, int]] = {}
    for i in blocks["B"]:
        reserved[i] = (3, 4)
    for i in blocks["C"]:
        first, second = _one_legs(forest.spider(i))[:2]
        reserved[i] = (first, second)
    for i in blocks["D"]:
        first, second = _even_legs(forest.spider(i))[:2]
        reserved[i] = (first, second)

    middle = LabelPool("I2", range(base + t2 + t1 + 1, base + s - t2 + 1))
    for i, j, length in forest.legs():
        if j in reserved.get(i, ()):
            continue
        if types[i - 1] == "A" or (types[i - 1] == "B" and j <= 2):
            continue
        if length == 1:
            (label,) = middle.take_smallest(1)
            builder.assign(EdgeRef(i, j, 1), label)
        else:
            builder.even_leg(i, j, low, high)

    phi_prime = {i: builder.center_partial[i] for i in blocks["B"] + blocks["C"]}
    phi_prime.update({i: builder.center_partial[i] for i in blocks["D"]})
    bc = sorted(blocks["B"] + blocks["C"], key=lambda i: (phi_prime[i], i))
    ds = sorted(blocks["D"], key=lambda i: (phi_prime[i], i))

    for i in ds:
        for j in reserved[i]:
            builder.even_leg(i, j, low, high)

    m_prime = base + s - t2 - 2 * t3
    if len(middle) != 2 * (t3 - t1):
        raise ConstructionError(
            f"{len(middle)} I2 labels left for {t3 - t1} spiders needing two each"
        )
    params = SchemeCParams(
        k=k,
        m=m,
        s=s,
        types=types,
        t1=t1,
        t2=t2,
        t3=t3,
        order=tuple(blocks["A"] + bc + ds),
        reserved=reserved,
        phi_prime=phi_prime,
        m_prime=m_prime,
        intervals=intervals,
    )
    for slot, i in enumerate(bc, start=t1 + 1):
        for j, label in zip(reserved[i], params.specials(slot)):
            builder.assign(EdgeRef(i, j, 1), label)

    logger.info(
        f"Scheme c params: s={s} t1={t1} t2={t2} t3={t3} t={forest.t} m'={m_prime}"
    )
    return params, builder


def compute_params_c(forest: SpiderForest, k: int) -> SchemeCParams:
    """Classify, order and cut [k+1, k+m] into I1, I2, I3.

    Raises:
        SchemeNotApplicableError: If the forest has an odd leg longer than 1,
            a spider with fewer than three legs, or k is negative
    """
    params, _ = _prepare(forest, k)
    return params


def find_trouble(params: SchemeCParams, sums: Mapping[int, int]) -> List[int]:
    """B/C spiders, in slot order, whose center sum equals some D center sum."""
    d_sums = {sums[i] for i in params.d_order}
    return [i for i in params.bc_order if sums[i] in d_sums]


def spacing_violations(params: SchemeCParams, sums: Mapping[int, int]) -> List[str]:
    """Check the gaps between consecutive center sums before any repair.

    A centers step by exactly 1, the first B/C center is at least 3 above the
    last A center, and consecutive B/C and D centers differ by at least 4.
    """
    problems = []
    a_block = params.order[: params.t1]
    for x, y in zip(a_block, a_block[1:]):
        if sums[y] - sums[x] != 1:
            problems.append(f"A spiders {x}, {y}: gap {sums[y] - sums[x]} != 1")
    if a_block and params.bc_order:
        x, y = a_block[-1], params.bc_order[0]
        if sums[y] - sums[x] < 3:
            problems.append(f"A/B boundary {x}, {y}: gap {sums[y] - sums[x]} < 3")
    for block in (params.bc_order, params.d_order):
        for x, y in zip(block, block[1:]):
            if sums[y] - sums[x] < 4:
                problems.append(f"spiders {x}, {y}: gap {sums[y] - sums[x]} < 4")
    return problems


class _Repairer:
    """Swaps 1-leg labels in place and keeps center sums current."""

    def __init__(self, forest: SpiderForest, params: SchemeCParams, labeling: Labeling):
        self.forest = forest
        self.params = params
        self.labels: Dict[EdgeRef, int] = dict(labeling.assignments)
        self.sums: Dict[int, int] = {
            i: sum(self.labels[e] for e in forest.incident(CenterRef(i)))
            for i in range(1, forest.t + 1)
        }
        self.edge_of: Dict[int, EdgeRef] = {
            label: edge
            for edge, label in self.labels.items()
            if forest.leg_length(edge.spider, edge.leg) == 1
        }
        self.log = SwitchLog()

    def labeling(self) -> Labeling:
        return Labeling(self.params.k, dict(self.labels))

    def trouble(self, spider: int) -> bool:
        return spider in find_trouble(self.params, self.sums)

    def swap(self, x: int, y: int, kind: str):
        ex, ey = self.edge_of[x], self.edge_of[y]
        self.labels[ex], self.labels[ey] = y, x
        self.edge_of[x], self.edge_of[y] = ey, ex
        self.sums[ex.spider] += y - x
        self.sums[ey.spider] += x - y
        swap = Swap(x, y, ex.spider, ey.spider, kind)
        self.log.record(swap)
        logger.debug(
            f"Swap {x} <-> {y} between spiders {ex.spider} and {ey.spider} ({kind})"
        )

    def scan(self):
        """Left-to-right pass over the B/C slots up to the third last."""
        params = self.params
        for slot in range(params.t1 + 1, params.t3 - 1):
            spider = params.order[slot - 1]
            if self.trouble(spider):
                self.swap(params.m_prime + 2 * slot, params.m_prime + 2 * slot + 1, "pass")

    def final_pair(self):
        params = self.params
        t3 = params.t3
        if t3 - params.t1 < 2:
            return
        lower, upper = params.order[t3 - 2], params.order[t3 - 1]
        if not (self.trouble(lower) or self.trouble(upper)):
            return

        d_sums = {self.sums[i] for i in params.d_order}
        base = params.m_prime + 2 * t3
        options = ((1, base - 2, base - 1, "final"), (2, base - 2, base, "final-wide"))
        for delta, x, y, kind in options:
            a, b = self.sums[lower] + delta, self.sums[upper] - delta
            if a not in d_sums and b not in d_sums and a != b:
                self.swap(x, y, kind)
                return
        self.swap(base - 2, base - 1, "final")

    def collisions(self) -> List[int]:
        seen: Dict[int, List[int]] = {}
        for i, total in self.sums.items():
            seen.setdefault(total, []).append(i)
        return sorted(i for group in seen.values() if len(group) > 1 for i in group)

    def fallback(self, degree2_max: Optional[int]):
        """Swap a special label with any other 1-leg label until centers separate."""
        for spider in self.params.bc_order:
            if spider not in self.collisions():
                continue
            if not self._fallback_swap(spider, degree2_max):
                raise ConstructionError(
                    f"No fallback swap separates spider {spider}",
                    self.labeling(),
                    self.log.as_dicts(),
                )

    def _fallback_swap(self, spider: int, degree2_max: Optional[int]) -> bool:
        own = [
            self.labels[EdgeRef(spider, j, 1)] for j in self.params.reserved[spider]
        ]
        candidates = sorted(
            (
                (abs(x - y), edge, x, y)
                for x in own
                for y, edge in self.edge_of.items()
                if edge.spider != spider
            ),
            key=lambda c: (c[0], c[1], c[2]),
        )
        for _, edge, x, y in candidates:
            sums = dict(self.sums)
            sums[spider] += y - x
            sums[edge.spider] += x - y
            if len(set(sums.values())) != len(sums):
                continue
            if degree2_max is not None and min(sums.values()) <= degree2_max:
                continue
            logger.warning(
                f"Fallback swap {x} <-> {y} between spiders {spider} and {edge.spider}"
            )
            self.swap(x, y, "fallback")
            return True
        return False


def run_scheme_c(forest: SpiderForest, k: int) -> SchemeCRun:
    """Label the forest and keep parameters, pre-repair sums and the switch log.

    Raises:
        SchemeNotApplicableError: If the forest or k is outside the hypothesis
        ConstructionError: If the pre-repair gaps do not hold or no repair
            separates the centers
    """
    params, builder = _prepare(forest, k)
    draft = builder.build()
    repairer = _Repairer(forest, params, draft)
    pre_repair = dict(repairer.sums)

    problems = spacing_violations(params, pre_repair)
    if problems:
        raise ConstructionError(
            f"Center sums are not spaced as required: {'; '.join(problems)}", draft
        )

    trouble = find_trouble(params, pre_repair)
    if trouble:
        logger.debug(f"Trouble spiders before repair: {trouble}")
    repairer.scan()
    repairer.final_pair()
    if repairer.collisions():
        _, middle, _ = degree_classes(forest)
        sums = vertex_sums(forest, repairer.labeling()).sums
        degree2_max = max((sums[v] for v in middle), default=None)
        repairer.fallback(degree2_max)

    labeling = ensure_antimagic(
        forest, repairer.labeling(), "c", repairer.log.as_dicts()
    )
    return SchemeCRun(labeling, params, repairer.log, pre_repair)


def label_scheme_c(forest: SpiderForest, k: int) -> Tuple[Labeling, SwitchLog]:
    """k-shifted antimagic labeling of a forest with legs of length 1 or even.

    Returns:
        The labeling and the swaps applied to repair trouble spiders

    Raises:
        SchemeNotApplicableError: If the forest or k is outside the hypothesis
        ConstructionError: If the construction fails internally
    """
    run = run_scheme_c(forest, k)
    return run.labeling, run.switch_log

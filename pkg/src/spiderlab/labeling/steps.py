# SPDX-FileCopyrightText: 2025 spiderlab Contributors
# SPDX-License-Identifier: MIT
"""
Building blocks shared by the labeling schemes.

All three schemes cut [k+1, k+m] into consecutive intervals, hand out labels
from them leg by leg, alternating a "low" interval on odd positions with a
"high" interval on even positions, and (schemes A and B) finish with an
iterated process that labels one reserved leg per spider, the spider with the
largest achievable center sum first.
"""

import logging
from collections import defaultdict
from dataclasses import dataclass
from typing import Dict, Iterable, List, Mapping, Sequence, Tuple

from .errors import ConstructionError
from .forest import EdgeRef, SpiderForest
from .sums import Labeling, check_antimagic

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class Interval:
    """Inclusive integer interval; empty when hi == lo - 1."""

    lo: int
    hi: int

    @property
    def size(self) -> int:
        return self.hi - self.lo + 1

    def __iter__(self):
        return iter(range(self.lo, self.hi + 1))

    def __contains__(self, label: object) -> bool:
        return isinstance(label, int) and self.lo <= label <= self.hi

    def __str__(self) -> str:
        if self.size == 0:
            return "[]"
        return f"[{self.lo},{self.hi}]"


def consecutive(start: int, sizes: Sequence[int]) -> List[Interval]:
    """Cut the integers from ``start`` into consecutive intervals of the given sizes."""
    intervals = []
    lo = start
    for size in sizes:
        if size < 0:
            raise ConstructionError(f"Negative interval size {size} in {list(sizes)}")
        intervals.append(Interval(lo, lo + size - 1))
        lo += size
    return intervals


class LabelPool:
    """Unused labels of one interval, handed out from either end."""

    def __init__(self, name: str, labels: Iterable[int]):
        self.name = name
        self._labels: List[int] = sorted(labels)

    def __len__(self) -> int:
        return len(self._labels)

    @property
    def maximum(self) -> int:
        if not self._labels:
            raise ConstructionError(f"Interval {self.name} is exhausted")
        return self._labels[-1]

    def take_smallest(self, count: int) -> List[int]:
        """Remove and return the ``count`` smallest labels, ascending."""
        self._check(count)
        taken, self._labels = self._labels[:count], self._labels[count:]
        return taken

    def take_largest(self, count: int) -> List[int]:
        """Remove and return the ``count`` largest labels, ascending."""
        self._check(count)
        if count == 0:
            return []
        taken, self._labels = self._labels[-count:], self._labels[:-count]
        return taken

    def _check(self, count: int):
        if count > len(self._labels):
            raise ConstructionError(
                f"Interval {self.name} is exhausted: need {count}, "
                f"have {len(self._labels)}"
            )


class LabelingBuilder:
    """Collects edge labels and tracks the partial sum at every center."""

    def __init__(self, forest: SpiderForest, k: int):
        self.forest = forest
        self.k = k
        self.assignments: Dict[EdgeRef, int] = {}
        self.center_partial: Dict[int, int] = defaultdict(int)

    def assign(self, edge: EdgeRef, label: int):
        if edge in self.assignments:
            raise ConstructionError(f"Edge {edge} labeled twice")
        self.assignments[edge] = label
        if edge.pos == self.forest.leg_length(edge.spider, edge.leg):
            self.center_partial[edge.spider] += label

    def alternate(self, spider: int, leg: int, low: List[int], high: List[int]):
        """Label positions 1, 3, 5, ... with ``low`` and 2, 4, 6, ... with ``high``.

        Odd positions from the leaf get the low labels in the given order, even
        positions the high ones.
        """
        for n, label in enumerate(low):
            self.assign(EdgeRef(spider, leg, 2 * n + 1), label)
        for n, label in enumerate(high):
            self.assign(EdgeRef(spider, leg, 2 * n + 2), label)

    def odd_leg(
        self,
        spider: int,
        leg: int,
        low: LabelPool,
        high: LabelPool,
        center: LabelPool,
    ):
        """Alternate a non-reserved odd leg and finish it with a center label."""
        half = self.forest.leg_length(spider, leg) // 2
        self.alternate(spider, leg, low.take_smallest(half), high.take_smallest(half))
        (label,) = center.take_smallest(1)
        self.assign(EdgeRef(spider, leg, 2 * half + 1), label)

    def even_leg(self, spider: int, leg: int, low: LabelPool, high: LabelPool):
        """Alternate a non-reserved even leg; its last even edge meets the center."""
        half = self.forest.leg_length(spider, leg) // 2
        self.alternate(spider, leg, low.take_smallest(half), high.take_smallest(half))

    def build(self) -> Labeling:
        missing = [e for e in self.forest.edges() if e not in self.assignments]
        if missing:
            raise ConstructionError(
                f"{len(missing)} edges left unlabeled, first {missing[0]}",
                Labeling(self.k, dict(self.assignments)),
            )
        return Labeling(self.k, dict(self.assignments))


@dataclass(frozen=True)
class ReservedRound:
    """One iteration of the reserved-leg process."""

    spider: int
    leg: int
    case: int
    center_sum: int


def label_reserved_legs(
    builder: LabelingBuilder,
    reserved: Mapping[int, int],
    low: LabelPool,
    high: LabelPool,
) -> List[ReservedRound]:
    """Label the reserved leg of every spider, one spider per round.

    Each round estimates every remaining center's final sum as its partial
    sum plus the largest unused low label (odd reserved leg) or high label
    (even reserved leg), and completes a spider with the largest estimate.
    If some maximizer has an even reserved leg the lowest-index such spider is
    taken and its leg labeled from the top of both pools with the largest high
    label on the center edge. Otherwise the lowest-index maximizer gets the
    largest low label on its center edge and the rest of its leg from the top
    of both pools.

    Args:
        builder: Labeling under construction, every non-reserved edge labeled
        reserved: Spider index -> reserved leg index
        low: Pool feeding odd positions (and the center edge of odd legs)
        high: Pool feeding even positions

    Returns:
        The rounds in order; their center sums strictly decrease
    """
    forest = builder.forest
    remaining = sorted(reserved)
    rounds: List[ReservedRound] = []

    while remaining:
        estimates: Dict[int, int] = {}
        for i in remaining:
            odd = forest.leg_length(i, reserved[i]) % 2 == 1
            top = low.maximum if odd else high.maximum
            estimates[i] = builder.center_partial[i] + top

        best = max(estimates.values())
        maximizers = [i for i in remaining if estimates[i] == best]
        even = [i for i in maximizers if forest.leg_length(i, reserved[i]) % 2 == 0]
        chosen = even[0] if even else maximizers[0]
        leg = reserved[chosen]
        length = forest.leg_length(chosen, leg)

        if length % 2 == 1:
            case = 1
            half = length // 2
            (center_label,) = low.take_largest(1)
            builder.alternate(
                chosen, leg, low.take_largest(half), high.take_largest(half)
            )
            builder.assign(EdgeRef(chosen, leg, length), center_label)
        else:
            case = 2
            half = length // 2
            builder.alternate(
                chosen, leg, low.take_largest(half), high.take_largest(half)
            )

        center_sum = builder.center_partial[chosen]
        if center_sum != best:
            raise ConstructionError(
                f"Spider {chosen} center sum {center_sum} differs from estimate {best}"
            )
        logger.debug(
            f"Reserved round {len(rounds) + 1}: spider {chosen} leg {leg} "
            f"case {case}, center sum {center_sum}"
        )
        rounds.append(ReservedRound(chosen, leg, case, center_sum))
        remaining.remove(chosen)

    return rounds


def ensure_antimagic(
    forest: SpiderForest, labeling: Labeling, scheme: str, repairs=None
) -> Labeling:
    """Return the labeling if it verifies, raise ConstructionError otherwise."""
    verdict = check_antimagic(forest, labeling)
    if not verdict.ok:
        logger.error(f"Scheme {scheme} produced a bad labeling: {verdict}")
        raise ConstructionError(
            f"Scheme {scheme} output failed verification: {verdict}",
            labeling,
            repairs,
        )
    return labeling


def interval_table(names: Sequence[str], intervals: Sequence[Interval]) -> Dict[str, Interval]:
    return dict(zip(names, intervals))


def pools(table: Mapping[str, Interval], *names: str) -> Tuple[LabelPool, ...]:
    return tuple(LabelPool(name, table[name]) for name in names)

# SPDX-FileCopyrightText: 2025 spiderlab Contributors
# SPDX-License-Identifier: MIT
"""
Spider forest data model.

A forest is an ordered list of spiders and every spider is an ordered list of
leg lengths. Order is significant: every tie-break made by the labeling
schemes is resolved by the position of a spider in the forest and of a leg in
its spider, so a forest must round-trip through its text and JSON forms
without being reordered.

Addressing is 1-based. Edge position 1 is the pendant edge of a leg and
position ``len`` touches the center. Vertex position ``p`` is the p-th vertex
counted from the leaf, so the vertex next to the center on a leg of length
``len`` has position ``len``.
"""

import json
import logging
import random
from dataclasses import dataclass
from typing import Callable, Dict, Iterator, List, Optional, Sequence, Tuple, Union

import networkx as nx

from .errors import ForestFormatError

logger = logging.getLogger(__name__)

SCHEMES = ("a", "b", "c")


@dataclass(frozen=True, order=True)
class EdgeRef:
    """Canonical address of an edge."""

    spider: int
    leg: int
    pos: int

    def __str__(self) -> str:
        return f"s{self.spider}.l{self.leg}.e{self.pos}"


@dataclass(frozen=True, order=True)
class VertexRef:
    """Canonical address of a non-center vertex."""

    spider: int
    leg: int
    pos: int

    def __str__(self) -> str:
        return f"s{self.spider}.l{self.leg}.v{self.pos}"


@dataclass(frozen=True, order=True)
class CenterRef:
    """The center vertex of a spider."""

    spider: int

    def __str__(self) -> str:
        return f"w{self.spider}"


Vertex = Union[VertexRef, CenterRef]


@dataclass(frozen=True)
class SpiderSpec:
    """A single spider given by its leg lengths."""

    legs: Tuple[int, ...]

    def __post_init__(self):
        if not self.legs:
            raise ValueError("A spider needs at least one leg")
        for length in self.legs:
            if isinstance(length, bool) or not isinstance(length, int):
                raise ValueError(f"Invalid leg length: {length!r}")
            if length < 1:
                raise ValueError(f"Invalid leg length: {length}. Must be >= 1")

    @property
    def degree(self) -> int:
        return len(self.legs)

    @property
    def size(self) -> int:
        return sum(self.legs)

    @property
    def ones(self) -> int:
        """Number of 1-legs."""
        return sum(1 for length in self.legs if length == 1)

    @property
    def long_legs(self) -> int:
        """Number of legs of length at least two."""
        return self.degree - self.ones

    @property
    def is_star(self) -> bool:
        return self.long_legs == 0

    @property
    def is_degenerate(self) -> bool:
        """Fewer than three legs: really a path, only the oracle accepts it."""
        return self.degree < 3


@dataclass(frozen=True)
class SpiderForest:
    """An ordered union of spiders."""

    spiders: Tuple[SpiderSpec, ...]

    def __post_init__(self):
        if not self.spiders:
            raise ValueError("A forest needs at least one spider")

    @classmethod
    def of(cls, *legs: Sequence[int]) -> "SpiderForest":
        """Build a forest from plain leg-length sequences."""
        return cls(tuple(SpiderSpec(tuple(spider)) for spider in legs))

    @property
    def m(self) -> int:
        return sum(spider.size for spider in self.spiders)

    @property
    def t(self) -> int:
        return len(self.spiders)

    @property
    def d(self) -> int:
        """Number of legs outside one reserved leg per spider."""
        return sum(spider.degree for spider in self.spiders) - self.t

    @property
    def s(self) -> int:
        """Total number of 1-legs."""
        return sum(spider.ones for spider in self.spiders)

    def spider(self, index: int) -> SpiderSpec:
        return self.spiders[index - 1]

    def leg_length(self, spider: int, leg: int) -> int:
        return self.spiders[spider - 1].legs[leg - 1]

    def legs(self) -> Iterator[Tuple[int, int, int]]:
        """Yield (spider, leg, length) in canonical order."""
        for i, spider in enumerate(self.spiders, start=1):
            for j, length in enumerate(spider.legs, start=1):
                yield i, j, length

    def edges(self) -> List[EdgeRef]:
        """All edges in canonical (spider, leg, position) order."""
        return [
            EdgeRef(i, j, p)
            for i, j, length in self.legs()
            for p in range(1, length + 1)
        ]

    def vertices(self) -> List[Vertex]:
        """All vertices: each spider's leg vertices followed by its center."""
        result: List[Vertex] = []
        for i, spider in enumerate(self.spiders, start=1):
            for j, length in enumerate(spider.legs, start=1):
                result.extend(VertexRef(i, j, p) for p in range(1, length + 1))
            result.append(CenterRef(i))
        return result

    def endpoints(self, edge: EdgeRef) -> Tuple[Vertex, Vertex]:
        """Return the (leaf-side, center-side) endpoints of an edge."""
        length = self.leg_length(edge.spider, edge.leg)
        if not 1 <= edge.pos <= length:
            raise ValueError(f"Edge {edge} is outside a leg of length {length}")
        outer = VertexRef(edge.spider, edge.leg, edge.pos)
        if edge.pos == length:
            return outer, CenterRef(edge.spider)
        return outer, VertexRef(edge.spider, edge.leg, edge.pos + 1)

    def incident(self, vertex: Vertex) -> List[EdgeRef]:
        """Edges incident to a vertex."""
        if isinstance(vertex, CenterRef):
            spider = self.spider(vertex.spider)
            return [
                EdgeRef(vertex.spider, j, length)
                for j, length in enumerate(spider.legs, start=1)
            ]
        result = [EdgeRef(vertex.spider, vertex.leg, vertex.pos)]
        if vertex.pos > 1:
            result.insert(0, EdgeRef(vertex.spider, vertex.leg, vertex.pos - 1))
        return result

    def to_graph(self) -> nx.Graph:
        """The forest as a networkx graph; each edge carries its ``ref``."""
        graph = nx.Graph()
        graph.add_nodes_from(self.vertices())
        for edge in self.edges():
            u, v = self.endpoints(edge)
            graph.add_edge(u, v, ref=edge)
        return graph


# Validation


@dataclass(frozen=True)
class Violation:
    """One reason a forest falls outside a scheme's hypothesis."""

    spider: int
    leg: Optional[int]
    reason: str

    @property
    def edge(self) -> Optional[EdgeRef]:
        """Pendant edge of the offending leg, if the violation is about a leg."""
        if self.leg is None:
            return None
        return EdgeRef(self.spider, self.leg, 1)

    def __str__(self) -> str:
        where = f"spider {self.spider}"
        if self.leg is not None:
            where += f" leg {self.leg}"
        return f"{where}: {self.reason}"


@dataclass(frozen=True)
class ValidationReport:
    scheme: str
    violations: Tuple[Violation, ...]

    @property
    def valid(self) -> bool:
        return not self.violations

    def __str__(self) -> str:
        if self.valid:
            return f"scheme {self.scheme}: valid"
        lines = [f"scheme {self.scheme}: invalid"]
        lines.extend(f"  {violation}" for violation in self.violations)
        return "\n".join(lines)


def validate_for_scheme(forest: SpiderForest, scheme: str) -> ValidationReport:
    """Check a forest against the hypothesis of scheme ``a``, ``b`` or ``c``.

    Args:
        forest: Forest to check
        scheme: Scheme identifier

    Returns:
        Report listing every violation (empty when the forest is valid)

    Raises:
        ValueError: If the scheme identifier is unknown
    """
    scheme = scheme.lower()
    if scheme not in SCHEMES:
        raise ValueError(f"Invalid scheme: {scheme}. Must be one of {SCHEMES}")

    violations: List[Violation] = []
    for i, spider in enumerate(forest.spiders, start=1):
        if spider.degree < 3:
            violations.append(
                Violation(i, None, f"has {spider.degree} legs, at least 3 needed")
            )
        for j, length in enumerate(spider.legs, start=1):
            if scheme == "a" and length == 1:
                violations.append(Violation(i, j, "has length 1"))
            elif scheme == "c" and length > 1 and length % 2 == 1:
                violations.append(Violation(i, j, f"has odd length {length} > 1"))

    return ValidationReport(scheme, tuple(violations))


# Parsing and serialisation


def parse_forest(text: str) -> SpiderForest:
    """Parse a forest from the line format or from JSON.

    The line format has one ``spider <len> <len> ...`` line per spider, with
    ``#`` comments and blank lines ignored. The JSON format is
    ``{"spiders": [[len, ...], ...]}``.

    Raises:
        ForestFormatError: On malformed input, leg lengths below 1 or an
            empty forest
    """
    if text.lstrip().startswith("{"):
        return _parse_json(text)

    spiders: List[SpiderSpec] = []
    for number, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        words = line.split()
        if words[0] != "spider":
            raise ForestFormatError(f"expected 'spider', got {words[0]!r}", number)
        if len(words) == 1:
            raise ForestFormatError("spider without legs", number)
        try:
            legs = tuple(int(word) for word in words[1:])
        except ValueError:
            raise ForestFormatError(f"non-integer leg length in {line!r}", number)
        try:
            spiders.append(SpiderSpec(legs))
        except ValueError as e:
            raise ForestFormatError(str(e), number)

    if not spiders:
        raise ForestFormatError("empty forest")
    return SpiderForest(tuple(spiders))


def _parse_json(text: str) -> SpiderForest:
    try:
        document = json.loads(text)
    except json.JSONDecodeError as e:
        raise ForestFormatError(f"invalid JSON: {e}", e.lineno)

    if not isinstance(document, dict) or "spiders" not in document:
        raise ForestFormatError("JSON forest needs a 'spiders' key")
    raw_spiders = document["spiders"]
    if not isinstance(raw_spiders, list) or not raw_spiders:
        raise ForestFormatError("empty forest")

    spiders = []
    for index, legs in enumerate(raw_spiders, start=1):
        if not isinstance(legs, list):
            raise ForestFormatError(f"spider {index} is not a list of lengths")
        try:
            spiders.append(SpiderSpec(tuple(legs)))
        except ValueError as e:
            raise ForestFormatError(f"spider {index}: {e}")
    return SpiderForest(tuple(spiders))


def format_forest(forest: SpiderForest) -> str:
    """Serialise to the line format."""
    return "".join(
        "spider " + " ".join(str(length) for length in spider.legs) + "\n"
        for spider in forest.spiders
    )


def forest_to_json(forest: SpiderForest) -> str:
    """Serialise to the JSON format."""
    return json.dumps({"spiders": [list(spider.legs) for spider in forest.spiders]})


# Generation


def generate_forest(
    seed: int,
    spider_count_range: Tuple[int, int] = (1, 4),
    legs_per_spider_range: Tuple[int, int] = (3, 5),
    leg_length_menu: Sequence[int] = (1, 2, 3, 4, 5),
) -> SpiderForest:
    """Draw a random forest; the result is a pure function of the arguments.

    Args:
        seed: Seed for a private random generator
        spider_count_range: Inclusive (min, max) number of spiders
        legs_per_spider_range: Inclusive (min, max) legs per spider
        leg_length_menu: Allowed leg lengths

    Returns:
        The generated forest

    Raises:
        ValueError: If a range is empty or the menu is empty
    """
    for name, (lo, hi) in (
        ("spider_count_range", spider_count_range),
        ("legs_per_spider_range", legs_per_spider_range),
    ):
        if lo < 1 or lo > hi:
            raise ValueError(f"Invalid {name}: {lo}..{hi}")
    menu = tuple(leg_length_menu)
    if not menu:
        raise ValueError("Leg length menu must not be empty")

    rng = random.Random(seed)
    spiders = []
    for _ in range(rng.randint(*spider_count_range)):
        degree = rng.randint(*legs_per_spider_range)
        spiders.append(SpiderSpec(tuple(rng.choice(menu) for _ in range(degree))))

    forest = SpiderForest(tuple(spiders))
    logger.debug(f"Generated forest for seed {seed}: m={forest.m}, t={forest.t}")
    return forest


def scheme_c_menu(menu: Sequence[int]) -> Tuple[int, ...]:
    """Restrict a length menu to 1 or even lengths."""
    return tuple(length for length in menu if length == 1 or length % 2 == 0)


def enumerate_forests(
    max_edges: int,
    max_spiders: int,
    min_legs: int = 3,
    allowed: Optional[Callable[[int], bool]] = None,
) -> Iterator[SpiderForest]:
    """Every spider forest within the bounds, each isomorphism class once.

    Legs within a spider are listed in non-increasing order and spiders in
    non-increasing order, so each forest appears exactly once.

    Args:
        max_edges: Upper bound on m
        max_spiders: Upper bound on t
        min_legs: Minimum legs per spider
        allowed: Optional predicate on leg lengths
    """
    accept = allowed or (lambda length: True)
    lengths = [n for n in range(1, max_edges + 1) if accept(n)]

    def spiders_up_to(budget: int) -> List[Tuple[int, ...]]:
        found: List[Tuple[int, ...]] = []

        def extend(legs: Tuple[int, ...], remaining: int, cap: int):
            if len(legs) >= min_legs:
                found.append(legs)
            for n in lengths:
                if n <= cap and n <= remaining:
                    extend(legs + (n,), remaining - n, n)

        extend((), budget, budget)
        return found

    shapes = sorted(spiders_up_to(max_edges), key=lambda legs: (sum(legs), legs))
    index: Dict[Tuple[int, ...], int] = {legs: n for n, legs in enumerate(shapes)}

    def forests(chosen: Tuple[Tuple[int, ...], ...], remaining: int, cap: int):
        if chosen:
            yield SpiderForest.of(*chosen)
        if len(chosen) == max_spiders:
            return
        for legs in shapes:
            if index[legs] <= cap and sum(legs) <= remaining:
                yield from forests(chosen + (legs,), remaining - sum(legs), index[legs])

    yield from forests((), max_edges, len(shapes))

# SPDX-FileCopyrightText: 2025 spiderlab Contributors
# SPDX-License-Identifier: MIT
"""
Labelings, vertex sums and the k-shifted antimagic check.
"""

import json
import logging
from collections import defaultdict
from dataclasses import dataclass, field
from typing import Any, Dict, List, Mapping, Optional, Sequence, Tuple

import networkx as nx

from .errors import LabelingMismatchError
from .forest import CenterRef, EdgeRef, SpiderForest, Vertex

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class Labeling:
    """An assignment of integer labels to the edges of a forest.

    A valid k-shifted labeling is a bijection onto [k+1, k+m]; that property
    is checked by check_antimagic, not enforced here, so broken labelings can
    still be represented and reported on.
    """

    k: int
    assignments: Mapping[EdgeRef, int] = field(default_factory=dict)

    @classmethod
    def from_sequence(
        cls, forest: SpiderForest, k: int, labels: Sequence[int]
    ) -> "Labeling":
        """Assign labels to the forest's edges in canonical order."""
        edges = forest.edges()
        if len(edges) != len(labels):
            raise LabelingMismatchError(
                f"Expected {len(edges)} labels, got {len(labels)}"
            )
        return cls(k, dict(zip(edges, labels)))

    def __getitem__(self, edge: EdgeRef) -> int:
        return self.assignments[edge]

    def __len__(self) -> int:
        return len(self.assignments)

    def labels(self) -> List[int]:
        return sorted(self.assignments.values())

    def sequence(self, forest: SpiderForest) -> List[int]:
        """Labels in canonical edge order."""
        return [self.assignments[edge] for edge in forest.edges()]

    def shift(self, delta: int) -> "Labeling":
        """Add ``delta`` to every label (and to k)."""
        return Labeling(
            self.k + delta,
            {edge: label + delta for edge, label in self.assignments.items()},
        )


@dataclass(frozen=True)
class VertexSumReport:
    sums: Dict[Vertex, int]
    collisions: List[Tuple[Vertex, Vertex]]

    @property
    def antimagic(self) -> bool:
        return not self.collisions


@dataclass(frozen=True)
class Verdict:
    """Outcome of check_antimagic.

    ``failure`` names the first failing check in the order range, bijection,
    sums; ``witness`` describes what failed.
    """

    range_ok: bool
    bijection_ok: bool
    sums_ok: bool
    failure: Optional[str] = None
    witness: Optional[str] = None

    @property
    def ok(self) -> bool:
        return self.range_ok and self.bijection_ok and self.sums_ok

    def __bool__(self) -> bool:
        return self.ok

    def __str__(self) -> str:
        if self.ok:
            return "antimagic"
        return f"not antimagic: {self.failure} check failed ({self.witness})"


@dataclass(frozen=True)
class OrderingVerdict:
    """Leaf < degree-2 < center comparison of vertex sums."""

    ok: bool
    max_leaf: Optional[int]
    min_deg2: Optional[int]
    max_deg2: Optional[int]
    min_center: Optional[int]

    def __bool__(self) -> bool:
        return self.ok


def _require_same_edges(forest: SpiderForest, labeling: Labeling):
    expected = set(forest.edges())
    actual = set(labeling.assignments)
    if expected != actual:
        missing = sorted(expected - actual)
        extra = sorted(actual - expected)
        raise LabelingMismatchError(
            f"Labeling does not match forest: missing {[str(e) for e in missing]}, "
            f"unknown {[str(e) for e in extra]}"
        )


def vertex_sums(forest: SpiderForest, labeling: Labeling) -> VertexSumReport:
    """Compute every vertex sum and list all pairs of colliding vertices.

    Raises:
        LabelingMismatchError: If the labeling misses an edge or labels an
            edge the forest does not have
    """
    _require_same_edges(forest, labeling)

    graph = forest.to_graph()
    order = forest.vertices()
    sums: Dict[Vertex, int] = {}
    for vertex in order:
        sums[vertex] = sum(
            labeling[ref] for _, _, ref in graph.edges(vertex, data="ref")
        )

    by_sum: Dict[int, List[Vertex]] = defaultdict(list)
    for vertex in order:
        by_sum[sums[vertex]].append(vertex)

    collisions = []
    for group in by_sum.values():
        for x in range(len(group)):
            for y in range(x + 1, len(group)):
                collisions.append((group[x], group[y]))

    return VertexSumReport(sums, collisions)


def check_antimagic(forest: SpiderForest, labeling: Labeling) -> Verdict:
    """Decide whether a labeling is a k-shifted antimagic labeling.

    Never raises: every problem is reported through the verdict.
    """
    k, m = labeling.k, forest.m
    failures: List[Tuple[str, str]] = []

    out_of_range = [
        (edge, label)
        for edge, label in sorted(labeling.assignments.items())
        if not k + 1 <= label <= k + m
    ]
    range_ok = not out_of_range
    if not range_ok:
        edge, label = out_of_range[0]
        failures.append(("range", f"edge {edge} has {label} outside [{k + 1}, {k + m}]"))

    expected = forest.edges()
    missing = [edge for edge in expected if edge not in labeling.assignments]
    unknown = sorted(set(labeling.assignments) - set(expected))
    seen: Dict[int, EdgeRef] = {}
    duplicate: Optional[str] = None
    for edge, label in sorted(labeling.assignments.items()):
        if label in seen:
            duplicate = f"label {label} on both {seen[label]} and {edge}"
            break
        seen[label] = edge
    bijection_ok = not missing and not unknown and duplicate is None
    if not bijection_ok:
        if missing:
            witness = f"edge {missing[0]} is unlabeled"
        elif unknown:
            witness = f"edge {unknown[0]} is not in the forest"
        else:
            witness = duplicate or ""
        failures.append(("bijection", witness))

    sums_ok = False
    if not missing and not unknown:
        report = vertex_sums(forest, labeling)
        sums_ok = report.antimagic
        if not sums_ok:
            u, v = report.collisions[0]
            failures.append(
                ("sums", f"{u} and {v} both sum to {report.sums[u]}")
            )
    else:
        failures.append(("sums", "vertex sums need every edge labeled"))

    if not failures:
        return Verdict(True, True, True)
    failure, witness = failures[0]
    return Verdict(range_ok, bijection_ok, sums_ok, failure, witness)


def degree_classes(
    forest: SpiderForest,
) -> Tuple[List[Vertex], List[Vertex], List[Vertex]]:
    """Split vertices into leaves, degree-2 vertices and centers (degree >= 3)."""
    graph = forest.to_graph()
    leaves, middle, centers = [], [], []
    for vertex in forest.vertices():
        degree = graph.degree(vertex)
        if degree == 1:
            leaves.append(vertex)
        elif degree == 2:
            middle.append(vertex)
        else:
            centers.append(vertex)
    return leaves, middle, centers


def structural_ordering_check(
    forest: SpiderForest, labeling: Labeling
) -> OrderingVerdict:
    """Check max leaf sum < min degree-2 sum and max degree-2 sum < min center sum."""
    sums = vertex_sums(forest, labeling).sums
    leaves, middle, centers = degree_classes(forest)

    def bound(vertices: List[Vertex], pick) -> Optional[int]:
        return pick(sums[v] for v in vertices) if vertices else None

    max_leaf = bound(leaves, max)
    min_deg2, max_deg2 = bound(middle, min), bound(middle, max)
    min_center = bound(centers, min)

    ok = True
    if max_leaf is not None and min_deg2 is not None:
        ok = ok and max_leaf < min_deg2
    if max_deg2 is not None and min_center is not None:
        ok = ok and max_deg2 < min_center
    if max_leaf is not None and min_center is not None:
        ok = ok and max_leaf < min_center
    return OrderingVerdict(ok, max_leaf, min_deg2, max_deg2, min_center)


# Documents


def labeling_to_dict(
    labeling: Labeling, repairs: Optional[List[Dict[str, Any]]] = None
) -> Dict[str, Any]:
    document: Dict[str, Any] = {
        "k": labeling.k,
        "edges": [
            {"spider": e.spider, "leg": e.leg, "pos": e.pos, "label": label}
            for e, label in sorted(labeling.assignments.items())
        ],
    }
    if repairs is not None:
        document["repairs"] = repairs
    return document


def labeling_to_json(
    labeling: Labeling, repairs: Optional[List[Dict[str, Any]]] = None
) -> str:
    """Serialise a labeling (and optional scheme C repairs) to JSON."""
    return json.dumps(labeling_to_dict(labeling, repairs), indent=2)


def parse_labeling(text: str) -> Labeling:
    """Parse the labeling JSON document.

    Raises:
        ValueError: If the document is malformed
    """
    try:
        document = json.loads(text)
    except json.JSONDecodeError as e:
        raise ValueError(f"Invalid labeling JSON: {e}")

    try:
        k = document["k"]
        assignments = {}
        for entry in document["edges"]:
            edge = EdgeRef(int(entry["spider"]), int(entry["leg"]), int(entry["pos"]))
            if edge in assignments:
                raise ValueError(f"Edge {edge} labeled twice")
            assignments[edge] = int(entry["label"])
    except (KeyError, TypeError) as e:
        raise ValueError(f"Invalid labeling document: missing or bad field {e}")

    if isinstance(k, bool) or not isinstance(k, int):
        raise ValueError(f"Invalid shift k: {k!r}")
    return Labeling(k, assignments)


def to_dot(forest: SpiderForest, labeling: Labeling) -> str:
    """Render the labeled forest as a DOT graph.

    Edges carry ``label`` and vertices carry ``xlabel`` set to their vertex sum.
    """
    sums = vertex_sums(forest, labeling).sums
    graph = forest.to_graph()
    dot = nx.Graph(name="spiderforest")
    dot.graph["node"] = {"shape": "point"}
    for vertex in graph.nodes:
        attrs: Dict[str, Any] = {"xlabel": sums[vertex]}
        if isinstance(vertex, CenterRef):
            attrs["shape"] = "circle"
        dot.add_node(str(vertex), **attrs)
    for u, v, ref in graph.edges(data="ref"):
        dot.add_edge(str(u), str(v), label=labeling[ref])
    return nx.nx_pydot.to_pydot(dot).to_string()

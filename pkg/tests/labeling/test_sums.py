# SPDX-FileCopyrightText: 2025 spiderlab Contributors
# SPDX-License-Identifier: MIT
"""Tests for labelings, vertex sums and the antimagic check.

This module covers:
- The transcribed 59-edge labeling of the worked example
- Verdict flags and witnesses for range, bijection and sum failures
- Structural ordering of leaf, degree-2 and center sums
- Properties of vertex sums under shifting and negation
- Labeling documents and DOT output
"""

import json

import networkx as nx
import pydot
import pytest
from hypothesis import given, strategies as st

from spiderlab.labeling.errors import LabelingMismatchError
from spiderlab.labeling.forest import CenterRef, EdgeRef, SpiderForest, VertexRef
from spiderlab.labeling.sums import (
    Labeling,
    check_antimagic,
    degree_classes,
    labeling_to_dict,
    labeling_to_json,
    parse_labeling,
    structural_ordering_check,
    to_dot,
    vertex_sums,
)


@st.composite
def labeled_forests(draw):
    """A small forest with a random bijective labeling at a random shift."""
    spiders = draw(
        st.lists(
            st.lists(st.integers(min_value=1, max_value=4), min_size=1, max_size=4),
            min_size=1,
            max_size=3,
        )
    )
    forest = SpiderForest.of(*spiders)
    k = draw(st.integers(min_value=-50, max_value=50))
    labels = draw(st.permutations(range(k + 1, k + forest.m + 1)))
    return forest, Labeling.from_sequence(forest, k, labels)


class TestWorkedExample:
    """Test the transcribed labeling of the four-spider example."""

    def test_labeling_is_antimagic(self, four_spiders, four_spiders_labeling):
        """Test the 59-edge labeling passes every check at k=0."""
        labeling = parse_labeling(four_spiders_labeling)
        verdict = check_antimagic(four_spiders, labeling)

        assert labeling.k == 0
        assert verdict.ok
        assert verdict.failure is None
        assert str(verdict) == "antimagic"

    def test_labels_cover_range(self, four_spiders, four_spiders_labeling):
        """Test the labels are exactly 1..59."""
        labeling = parse_labeling(four_spiders_labeling)

        assert labeling.labels() == list(range(1, 60))

    def test_center_sums(self, four_spiders, four_spiders_labeling):
        """Test the four center sums read off the labeled example."""
        sums = vertex_sums(four_spiders, parse_labeling(four_spiders_labeling)).sums

        assert [sums[CenterRef(i)] for i in range(1, 5)] == [185, 155, 203, 234]

    def test_structural_ordering(self, four_spiders, four_spiders_labeling):
        """Test leaves < degree-2 vertices < centers on the example."""
        verdict = structural_ordering_check(
            four_spiders, parse_labeling(four_spiders_labeling)
        )

        assert verdict.ok
        assert verdict.max_leaf < verdict.min_deg2
        assert verdict.max_deg2 < verdict.min_center


class TestCheckAntimagic:
    """Test verdicts on broken labelings."""

    def test_star_antimagic(self):
        """Test S3 labeled 1, 2, 3 at k=0."""
        forest = SpiderForest.of((1, 1, 1))
        verdict = check_antimagic(forest, Labeling.from_sequence(forest, 0, [1, 2, 3]))

        assert verdict.ok
        assert bool(verdict)

    def test_sum_collision(self, two_p3):
        """Test a center colliding with a leaf."""
        labeling = Labeling.from_sequence(two_p3, 0, [1, 2, 3, 4])
        verdict = check_antimagic(two_p3, labeling)

        assert not verdict.ok
        assert verdict.range_ok and verdict.bijection_ok
        assert not verdict.sums_ok
        assert verdict.failure == "sums"
        assert verdict.witness == "w1 and s2.l1.v1 both sum to 3"

    def test_label_out_of_range(self):
        """Test a label above k+m fails the range check only."""
        forest = SpiderForest.of((1, 1, 1))
        verdict = check_antimagic(forest, Labeling.from_sequence(forest, 0, [1, 2, 4]))

        assert not verdict.range_ok
        assert verdict.bijection_ok
        assert verdict.sums_ok
        assert verdict.failure == "range"
        assert verdict.witness == "edge s1.l3.e1 has 4 outside [1, 3]"
        assert "range check failed" in str(verdict)

    def test_duplicate_label(self):
        """Test a repeated label fails the bijection check."""
        forest = SpiderForest.of((1, 1, 1))
        verdict = check_antimagic(forest, Labeling.from_sequence(forest, 0, [1, 1, 3]))

        assert verdict.range_ok
        assert not verdict.bijection_ok
        assert not verdict.sums_ok
        assert verdict.failure == "bijection"
        assert verdict.witness == "label 1 on both s1.l1.e1 and s1.l2.e1"

    def test_missing_edge(self):
        """Test an unlabeled edge is reported and sums are not attempted."""
        forest = SpiderForest.of((1, 1, 1))
        labeling = Labeling(0, {EdgeRef(1, 1, 1): 1, EdgeRef(1, 2, 1): 2})
        verdict = check_antimagic(forest, labeling)

        assert not verdict.bijection_ok
        assert not verdict.sums_ok
        assert verdict.witness == "edge s1.l3.e1 is unlabeled"

    def test_unknown_edge(self):
        """Test a label on an edge the forest does not have."""
        forest = SpiderForest.of((1, 1, 1))
        labels = {EdgeRef(1, j, 1): j for j in (1, 2, 3)}
        labels[EdgeRef(2, 1, 1)] = 4
        verdict = check_antimagic(forest, Labeling(0, labels))

        assert verdict.failure == "range"
        assert not verdict.bijection_ok
        assert "s2.l1.e1" in str(verdict)

    def test_vertex_sums_rejects_mismatch(self):
        """Test vertex_sums needs exactly the forest's edges."""
        forest = SpiderForest.of((1, 1, 1))

        with pytest.raises(LabelingMismatchError, match="missing"):
            vertex_sums(forest, Labeling(0, {EdgeRef(1, 1, 1): 1}))

    def test_from_sequence_length(self):
        """Test from_sequence needs one label per edge."""
        with pytest.raises(LabelingMismatchError, match="Expected 3 labels, got 2"):
            Labeling.from_sequence(SpiderForest.of((1, 1, 1)), 0, [1, 2])


class TestStructuralOrdering:
    """Test degree classes and the ordering check."""

    def test_degree_classes(self):
        """Test leaves, degree-2 vertices and centers of (2,1,1)."""
        leaves, middle, centers = degree_classes(SpiderForest.of((2, 1, 1)))

        assert leaves == [VertexRef(1, 1, 1), VertexRef(1, 2, 1), VertexRef(1, 3, 1)]
        assert middle == [VertexRef(1, 1, 2)]
        assert centers == [CenterRef(1)]

    def test_ordered_spider(self):
        """Test (2,2,2) labeled leaf to center (3,6), (1,4), (2,5)."""
        forest = SpiderForest.of((2, 2, 2))
        labeling = Labeling.from_sequence(forest, 0, [3, 6, 1, 4, 2, 5])
        verdict = structural_ordering_check(forest, labeling)

        assert verdict.ok
        assert (verdict.max_leaf, verdict.min_deg2) == (3, 5)
        assert (verdict.max_deg2, verdict.min_center) == (9, 15)

    def test_unordered_spider(self):
        """Test a labeling whose center sits below its degree-2 vertices."""
        forest = SpiderForest.of((2, 2, 2))
        labeling = Labeling.from_sequence(forest, 0, [6, 1, 5, 2, 4, 3])
        verdict = structural_ordering_check(forest, labeling)

        assert not verdict.ok
        assert verdict.max_leaf == 6


class TestSumProperties:
    """Property tests over random labelings."""

    @given(labeled_forests(), st.integers(min_value=-20, max_value=20))
    def test_shift_adds_degree_times_delta(self, case, delta):
        """Test shifting every label moves each vertex sum by degree * delta."""
        forest, labeling = case
        graph = forest.to_graph()
        before = vertex_sums(forest, labeling).sums
        after = vertex_sums(forest, labeling.shift(delta)).sums

        for vertex, total in before.items():
            assert after[vertex] == total + graph.degree(vertex) * delta

    @given(labeled_forests())
    def test_sums_conserve_twice_the_labels(self, case):
        """Test the vertex sums add up to twice the label total."""
        forest, labeling = case
        sums = vertex_sums(forest, labeling).sums

        assert sum(sums.values()) == 2 * sum(labeling.labels())

    @given(labeled_forests())
    def test_negation_preserves_collisions(self, case):
        """Test negating every label keeps the same colliding pairs."""
        forest, labeling = case
        negated = Labeling(
            -labeling.k - forest.m - 1,
            {edge: -label for edge, label in labeling.assignments.items()},
        )

        assert (
            vertex_sums(forest, negated).collisions
            == vertex_sums(forest, labeling).collisions
        )
        assert check_antimagic(forest, negated).ok == check_antimagic(forest, labeling).ok

    @given(labeled_forests())
    def test_accepted_labelings_fill_the_range(self, case):
        """Test an accepted labeling uses exactly k+1..k+m."""
        forest, labeling = case
        if check_antimagic(forest, labeling).ok:
            labels = labeling.labels()
            assert len(set(labels)) == forest.m
            assert (labels[0], labels[-1]) == (labeling.k + 1, labeling.k + forest.m)


class TestDocuments:
    """Test labeling documents and DOT output."""

    def test_json_document(self):
        """Test the document structure, including scheme repairs."""
        forest = SpiderForest.of((1, 1, 1))
        labeling = Labeling.from_sequence(forest, 4, [5, 7, 6])
        repairs = [{"label_a": 5, "label_b": 6}]
        document = json.loads(labeling_to_json(labeling, repairs))

        assert document["k"] == 4
        assert document["edges"][1] == {"spider": 1, "leg": 2, "pos": 1, "label": 7}
        assert document["repairs"] == repairs
        assert "repairs" not in labeling_to_dict(labeling)
        assert parse_labeling(labeling_to_json(labeling)) == labeling

    def test_parse_errors(self):
        """Test malformed labeling documents."""
        with pytest.raises(ValueError, match="Invalid labeling JSON"):
            parse_labeling("{")

        with pytest.raises(ValueError, match="missing or bad field"):
            parse_labeling('{"k": 0}')

        with pytest.raises(ValueError, match="labeled twice"):
            parse_labeling(
                '{"k": 0, "edges": [{"spider": 1, "leg": 1, "pos": 1, "label": 1},'
                ' {"spider": 1, "leg": 1, "pos": 1, "label": 2}]}'
            )

        with pytest.raises(ValueError, match="Invalid shift k"):
            parse_labeling('{"k": "0", "edges": []}')

    def test_dot(self):
        """Test DOT output carries edge labels and vertex sums."""
        forest = SpiderForest.of((2, 1, 1))
        dot = to_dot(forest, Labeling.from_sequence(forest, 0, [1, 4, 2, 3]))
        (parsed,) = pydot.graph_from_dot_data(dot)
        graph = nx.nx_pydot.from_pydot(parsed)

        def attr(data, name):
            return str(data[name]).strip('"')

        assert parsed.get_name().strip('"') == "spiderforest"
        assert graph.number_of_nodes() == 5
        assert graph.number_of_edges() == 4
        assert attr(graph.edges["s1.l1.v1", "s1.l1.v2"], "label") == "1"
        assert attr(graph.edges["s1.l1.v2", "w1"], "label") == "4"
        assert attr(graph.nodes["w1"], "xlabel") == "9"
        assert attr(graph.nodes["w1"], "shape") == "circle"
        assert attr(graph.nodes["s1.l1.v2"], "xlabel") == "5"
        assert "shape" not in graph.nodes["s1.l1.v2"]

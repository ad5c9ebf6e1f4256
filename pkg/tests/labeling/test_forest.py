# SPDX-FileCopyrightText: 2025 spiderlab Contributors
# SPDX-License-Identifier: MIT
"""Tests for the spider forest model.

This module covers:
- Parsing the line and JSON formats, and their error reporting
- Canonical edge/vertex addressing and the networkx view
- Validation against each scheme's hypothesis
- Seeded generation and exhaustive enumeration
"""

import json

import networkx as nx
import pytest
from hypothesis import given, strategies as st

from spiderlab.labeling.errors import ForestFormatError
from spiderlab.labeling.forest import (
    CenterRef,
    EdgeRef,
    SpiderForest,
    SpiderSpec,
    VertexRef,
    enumerate_forests,
    format_forest,
    forest_to_json,
    generate_forest,
    parse_forest,
    scheme_c_menu,
    validate_for_scheme,
)

spider_legs = st.lists(st.integers(min_value=1, max_value=9), min_size=1, max_size=6)
forests = st.lists(spider_legs, min_size=1, max_size=5).map(
    lambda spiders: SpiderForest.of(*spiders)
)


class TestParseForest:
    """Test reading forests from text."""

    def test_line_format(self):
        """Test one spider per line, comments and blank lines ignored."""
        forest = parse_forest("# two spiders\nspider 2 2 2\n\nspider 1 1 1  # a star\n")

        assert forest.t == 2
        assert forest.spider(1).legs == (2, 2, 2)
        assert forest.spider(2).legs == (1, 1, 1)
        assert forest.m == 9
        assert forest.s == 3

    def test_json_format(self):
        """Test the JSON array-of-arrays format."""
        forest = parse_forest('{"spiders": [[3, 1, 2], [1, 1]]}')

        assert forest.spiders == (SpiderSpec((3, 1, 2)), SpiderSpec((1, 1)))

    def test_leg_order_preserved(self):
        """Test that legs and spiders are never reordered."""
        forest = parse_forest("spider 1 5 2\nspider 4 2 3\n")

        assert [spider.legs for spider in forest.spiders] == [(1, 5, 2), (4, 2, 3)]

    def test_worked_example(self, four_spiders):
        """Test the four-spider worked example has 59 edges and no 1-legs."""
        assert four_spiders.t == 4
        assert four_spiders.m == 59
        assert four_spiders.s == 0
        assert four_spiders.d == 12

    def test_degenerate_spiders_are_representable(self, two_p3):
        """Test that spiders with fewer than three legs parse (paths)."""
        assert two_p3.m == 4
        assert all(spider.is_degenerate for spider in two_p3.spiders)

    def test_unknown_keyword(self):
        """Test a line not starting with 'spider'."""
        with pytest.raises(ForestFormatError, match="line 2: expected 'spider'"):
            parse_forest("spider 1 1 1\nspyder 2 2 2\n")

    def test_zero_length_leg(self):
        """Test that leg lengths below one are rejected with the line number."""
        with pytest.raises(ForestFormatError, match="line 1: Invalid leg length: 0"):
            parse_forest("spider 0 1 1")

    def test_non_integer_length(self):
        """Test a non-integer leg length."""
        with pytest.raises(ForestFormatError, match="non-integer"):
            parse_forest("spider 1 x 1")

    def test_spider_without_legs(self):
        """Test a bare 'spider' line."""
        with pytest.raises(ForestFormatError, match="spider without legs"):
            parse_forest("spider\n")

    def test_empty_forest(self):
        """Test that an empty document is rejected."""
        with pytest.raises(ForestFormatError, match="empty forest"):
            parse_forest("# nothing here\n\n")

        with pytest.raises(ForestFormatError, match="empty forest"):
            parse_forest('{"spiders": []}')

    def test_malformed_json(self):
        """Test JSON without the spiders key or with bad entries."""
        with pytest.raises(ForestFormatError, match="'spiders' key"):
            parse_forest('{"legs": [[1, 1, 1]]}')

        with pytest.raises(ForestFormatError, match="spider 2"):
            parse_forest('{"spiders": [[1, 1, 1], [1, -2, 1]]}')

        with pytest.raises(ForestFormatError, match="invalid JSON"):
            parse_forest('{"spiders": [[1, 1, 1]')

    def test_format_error_is_value_error(self):
        """Test that parse errors can be handled as ValueError."""
        with pytest.raises(ValueError):
            parse_forest("spider -1")

    @given(forests)
    def test_text_and_json_round_trip(self, forest):
        """Test that both serialisations reproduce the same ordered forest."""
        assert parse_forest(format_forest(forest)) == forest
        assert parse_forest(forest_to_json(forest)) == forest


class TestAddressing:
    """Test canonical enumeration and the graph view."""

    def test_edge_order(self):
        """Test edges run spider by spider, leg by leg, leaf to center."""
        forest = SpiderForest.of((2, 1, 1))

        assert forest.edges() == [
            EdgeRef(1, 1, 1),
            EdgeRef(1, 1, 2),
            EdgeRef(1, 2, 1),
            EdgeRef(1, 3, 1),
        ]

    def test_endpoints(self):
        """Test the leaf-side and center-side endpoints of an edge."""
        forest = SpiderForest.of((3, 1, 1))

        assert forest.endpoints(EdgeRef(1, 1, 1)) == (VertexRef(1, 1, 1), VertexRef(1, 1, 2))
        assert forest.endpoints(EdgeRef(1, 1, 3)) == (VertexRef(1, 1, 3), CenterRef(1))

        with pytest.raises(ValueError, match="outside a leg"):
            forest.endpoints(EdgeRef(1, 2, 2))

    def test_incident_edges(self):
        """Test incidence at a center, a middle vertex and a leaf."""
        forest = SpiderForest.of((3, 1, 2))

        assert forest.incident(CenterRef(1)) == [
            EdgeRef(1, 1, 3),
            EdgeRef(1, 2, 1),
            EdgeRef(1, 3, 2),
        ]
        assert forest.incident(VertexRef(1, 1, 2)) == [EdgeRef(1, 1, 1), EdgeRef(1, 1, 2)]
        assert forest.incident(VertexRef(1, 1, 1)) == [EdgeRef(1, 1, 1)]

    def test_graph_is_forest_of_spiders(self, four_spiders):
        """Test the networkx view: acyclic, one component per spider."""
        graph = four_spiders.to_graph()

        assert nx.is_forest(graph)
        assert nx.number_connected_components(graph) == four_spiders.t
        assert graph.number_of_edges() == four_spiders.m
        assert graph.number_of_nodes() == four_spiders.m + four_spiders.t
        assert graph.degree(CenterRef(4)) == 5

    def test_graph_edges_carry_refs(self):
        """Test every graph edge knows its canonical address."""
        forest = SpiderForest.of((2, 2, 2), (1, 1, 1))
        refs = sorted(ref for _, _, ref in forest.to_graph().edges(data="ref"))

        assert refs == forest.edges()

    def test_empty_spider_rejected(self):
        """Test a spider needs at least one leg."""
        with pytest.raises(ValueError, match="at least one leg"):
            SpiderSpec(())


class TestValidateForScheme:
    """Test scheme hypotheses."""

    def test_scheme_a_rejects_one_legs(self):
        """Test scheme a needs every leg of length >= 2."""
        report = validate_for_scheme(SpiderForest.of((2, 2, 2), (3, 1, 4)), "a")

        assert not report.valid
        assert len(report.violations) == 1
        violation = report.violations[0]
        assert (violation.spider, violation.leg) == (2, 2)
        assert violation.edge == EdgeRef(2, 2, 1)
        assert "has length 1" in str(report)

    def test_scheme_b_accepts_any_lengths(self):
        """Test scheme b only needs three legs per spider."""
        assert validate_for_scheme(SpiderForest.of((1, 1, 1), (5, 3, 2)), "b").valid

    def test_scheme_c_rejects_long_odd_legs(self):
        """Test scheme c needs legs of length 1 or even."""
        report = validate_for_scheme(SpiderForest.of((1, 2, 4), (1, 3, 1)), "c")

        assert not report.valid
        assert str(report.violations[0]) == "spider 2 leg 2: has odd length 3 > 1"

    def test_degenerate_spiders_rejected_everywhere(self, two_p3):
        """Test that paths pass no scheme."""
        for scheme in ("a", "b", "c"):
            report = validate_for_scheme(two_p3, scheme)
            assert not report.valid
            assert "at least 3 needed" in str(report)

    def test_unknown_scheme(self):
        """Test an unknown scheme identifier."""
        with pytest.raises(ValueError, match="Invalid scheme: d"):
            validate_for_scheme(SpiderForest.of((1, 1, 1)), "d")

    def test_case_insensitive(self):
        """Test scheme identifiers ignore case."""
        assert validate_for_scheme(SpiderForest.of((2, 2, 2)), "A").valid


class TestGenerateForest:
    """Test seeded generation."""

    def test_same_seed_same_forest(self):
        """Test generation is a pure function of its arguments."""
        assert generate_forest(7) == generate_forest(7)
        assert generate_forest(7, (2, 3), (3, 4), (2, 4)) == generate_forest(
            7, (2, 3), (3, 4), (2, 4)
        )

    def test_different_seeds_differ(self):
        """Test neighbouring seeds draw different forests."""
        assert generate_forest(7) != generate_forest(8)
        assert format_forest(generate_forest(7)) != format_forest(generate_forest(8))

    def test_respects_ranges_and_menu(self):
        """Test spider counts, leg counts and lengths stay within bounds."""
        for seed in range(50):
            forest = generate_forest(seed, (2, 3), (3, 4), (1, 2, 4))
            assert 2 <= forest.t <= 3
            for spider in forest.spiders:
                assert 3 <= spider.degree <= 4
                assert set(spider.legs) <= {1, 2, 4}

    def test_invalid_ranges(self):
        """Test empty ranges and menus."""
        with pytest.raises(ValueError, match="Invalid spider_count_range: 3..2"):
            generate_forest(1, (3, 2))

        with pytest.raises(ValueError, match="Invalid legs_per_spider_range: 0..2"):
            generate_forest(1, (1, 1), (0, 2))

        with pytest.raises(ValueError, match="must not be empty"):
            generate_forest(1, leg_length_menu=())

    def test_scheme_c_menu(self):
        """Test the scheme c menu keeps 1 and even lengths."""
        assert scheme_c_menu((1, 2, 3, 4, 5, 6)) == (1, 2, 4, 6)
        assert scheme_c_menu((3, 5)) == ()


class TestEnumerateForests:
    """Test the exhaustive enumeration of small forests."""

    def test_single_spider_shapes(self):
        """Test the spiders with at most four edges and three legs or more."""
        found = {
            tuple(spider.legs for spider in forest.spiders)
            for forest in enumerate_forests(4, 1)
        }

        assert found == {((1, 1, 1),), ((2, 1, 1),), ((1, 1, 1, 1),)}

    def test_count_up_to_six_edges(self):
        """Test 14 single spiders plus the pair of stars S3 for m <= 6."""
        listed = list(enumerate_forests(6, 2))

        assert len(listed) == 15
        assert SpiderForest.of((1, 1, 1), (1, 1, 1)) in listed

    def test_each_forest_once(self):
        """Test no isomorphism class is listed twice."""
        seen = set()
        for forest in enumerate_forests(8, 2):
            key = tuple(sorted(tuple(sorted(s.legs)) for s in forest.spiders))
            assert key not in seen
            seen.add(key)
            assert forest.m <= 8
            assert all(spider.degree >= 3 for spider in forest.spiders)

    def test_length_filter(self):
        """Test the leg length predicate."""
        for forest in enumerate_forests(8, 2, allowed=lambda n: n == 1 or n % 2 == 0):
            assert validate_for_scheme(forest, "c").valid

    def test_min_legs(self):
        """Test degenerate spiders appear when min_legs is lowered."""
        listed = list(enumerate_forests(2, 2, min_legs=1))

        assert SpiderForest.of((1,), (1,)) in listed
        assert SpiderForest.of((2,)) in listed
        assert SpiderForest.of((1, 1)) in listed


def test_json_document_shape():
    """Test forest_to_json writes the documented structure."""
    forest = SpiderForest.of((2, 1, 1))

    assert json.loads(forest_to_json(forest)) == {"spiders": [[2, 1, 1]]}
    assert format_forest(forest) == "spider 2 1 1\n"

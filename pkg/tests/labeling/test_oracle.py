# SPDX-FileCopyrightText: 2025 spiderlab Contributors
# SPDX-License-Identifier: MIT
"""Tests for the exhaustive oracle.

This module covers:
- Negative certificates: two 3-paths at k=0, the spider (1,2,2) at k=-3
- Witness order, pruned/unpruned and sequential/parallel agreement
- Edge budgets
- Cross-checking every scheme against the oracle on small forests
"""

import concurrent.futures

import pytest

from spiderlab.labeling import oracle
from spiderlab.labeling.errors import OracleBudgetError, SchemeNotApplicableError
from spiderlab.labeling.forest import SpiderForest, enumerate_forests, validate_for_scheme
from spiderlab.labeling.oracle import (
    HARD_EDGE_CAP,
    brute_force,
    check_budget,
    cross_check,
    min_k,
)
from spiderlab.labeling.schemes import SchemeOutcome, run_scheme, sweep_shift
from spiderlab.labeling.sums import Labeling, check_antimagic

SPIDER_122 = SpiderForest.of((1, 2, 2))


class TestNegativeCertificates:
    """Test forests known not to be antimagic at some shift."""

    def test_two_paths(self, two_p3):
        """Test 2 x P3 at k=0 after all 24 bijections."""
        result = brute_force(two_p3, 0, prune=False)

        assert not result.feasible
        assert result.witness is None
        assert result.edges_searched == 24

    def test_two_paths_pruned(self, two_p3):
        """Test pruning reaches the same verdict with fewer complete labelings."""
        result = brute_force(two_p3, 0)

        assert not result.feasible
        assert result.edges_searched < 24

    def test_spider_122_range(self):
        """Test (1,2,2) is k-shifted antimagic for every k in [-8, 3] but -3."""
        result = min_k(SPIDER_122, -8, 3)

        assert result.infeasible == [-3]
        assert result.minimal == -8
        assert len(result.feasibility) == 12

    def test_spider_122_at_minus_three(self):
        """Test the single infeasible shift directly, without pruning."""
        result = brute_force(SPIDER_122, -3, prune=False)

        assert not result.feasible
        assert result.edges_searched == 120


class TestBruteForce:
    """Test witnesses and search modes."""

    def test_least_witness(self):
        """Test the first witness is the lexicographically least labeling."""
        forest = SpiderForest.of((1, 1, 1))
        result = brute_force(forest, 0)

        assert result.feasible
        assert result.witness.sequence(forest) == [1, 2, 3]
        assert result.edges_searched == 1

    def test_witness_verifies(self):
        """Test a witness for (1,2,2) at k=1 is antimagic."""
        result = brute_force(SPIDER_122, 1)

        assert result.k == 1
        assert check_antimagic(SPIDER_122, result.witness).ok

    def test_pruned_and_unpruned_agree(self):
        """Test both modes on every forest of at most six edges, paths included."""
        for forest in enumerate_forests(6, 2, min_legs=1):
            for k in (-3, 0, 1):
                pruned = brute_force(forest, k, prune=True)
                full = brute_force(forest, k, prune=False)
                assert pruned.feasible == full.feasible, f"{forest} k={k}"
                if pruned.feasible:
                    assert pruned.witness == full.witness

    def test_pruned_and_unpruned_agree_up_to_eight_edges(self):
        """Test both modes at k=0 on every forest of seven or eight edges."""
        checked = 0
        for forest in enumerate_forests(8, 2, min_legs=1):
            if forest.m < 7:
                continue
            pruned = brute_force(forest, 0, prune=True)
            full = brute_force(forest, 0, prune=False)
            assert pruned.feasible == full.feasible, f"{forest}"
            if pruned.feasible:
                assert pruned.witness == full.witness
            checked += 1

        assert checked > 0

    @pytest.mark.parametrize("k", [-3, 0])
    def test_parallel_agrees(self, k):
        """Test splitting on the first edge gives the sequential verdict."""
        sequential = brute_force(SPIDER_122, k)
        parallel = brute_force(SPIDER_122, k, parallel=True, workers=2)

        assert parallel.feasible == sequential.feasible
        if parallel.feasible:
            assert check_antimagic(SPIDER_122, parallel.witness).ok

    def test_parallel_stops_queued_branches(self, monkeypatch):
        """Test the pool is shut down without waiting once a witness is found."""
        shutdowns = []

        class RecordingExecutor(concurrent.futures.ThreadPoolExecutor):
            def shutdown(self, wait=True, *, cancel_futures=False):
                shutdowns.append((wait, cancel_futures))
                super().shutdown(wait=wait, cancel_futures=cancel_futures)

        monkeypatch.setattr(concurrent.futures, "ProcessPoolExecutor", RecordingExecutor)
        result = brute_force(SPIDER_122, 1, parallel=True, workers=1)

        assert result.feasible
        assert shutdowns == [(False, True)]

    def test_empty_shift_range(self):
        """Test min_k needs k_lo <= k_hi."""
        with pytest.raises(ValueError, match="Empty shift range: 2..1"):
            min_k(SPIDER_122, 2, 1)


class TestBudget:
    """Test edge budgets."""

    def test_forest_above_budget(self, four_spiders):
        """Test a forest with more edges than the budget."""
        with pytest.raises(OracleBudgetError, match="59 edges, budget is 10"):
            brute_force(four_spiders, 0)

    def test_budget_above_hard_cap(self):
        """Test budgets beyond the hard cap."""
        with pytest.raises(OracleBudgetError, match="hard cap of 12"):
            check_budget(SPIDER_122, HARD_EDGE_CAP + 1)

    def test_budget_error_is_value_error(self):
        """Test budget errors can be handled as ValueError."""
        with pytest.raises(ValueError):
            brute_force(SPIDER_122, 0, edge_budget=4)


class TestCrossCheck:
    """Test schemes against the oracle."""

    def test_agree(self):
        """Test scheme a on (2,2,2) at k=0."""
        check = cross_check(SpiderForest.of((2, 2, 2)), 0, "a")

        assert check.agree
        assert check.scheme_ok and check.oracle_feasible
        assert check.message == "scheme a and oracle agree at k=0"
        assert check.labeling is not None

    def test_repairs_carried(self):
        """Test the scheme c switch log is kept on the result."""
        check = cross_check(SpiderForest.of((1, 1, 1, 1), (1, 2, 2)), 0, "c")

        assert check.agree
        assert [r["kind"] for r in check.repairs] == ["fallback"]

    def test_auto_names_the_scheme_used(self):
        """Test the message names the scheme auto resolved to."""
        check = cross_check(SpiderForest.of((2, 2, 2)), 0, "auto")

        assert check.agree
        assert check.message == "scheme a and oracle agree at k=0"

    def test_unverified_labeling_disagrees(self, monkeypatch):
        """Test a scheme labeling that fails verification is not an agreement."""
        forest = SpiderForest.of((2, 2, 2))
        broken = Labeling.from_sequence(forest, 0, [1, 1, 1, 1, 1, 1])
        monkeypatch.setattr(
            oracle, "run_scheme", lambda *args: SchemeOutcome("a", broken)
        )
        check = cross_check(forest, 0, "a")

        assert not check.agree
        assert not check.scheme_ok
        assert check.oracle_feasible
        assert check.labeling is broken
        assert check.message == "scheme a failed at k=0; oracle says feasible"

    def test_scheme_not_applicable(self):
        """Test a scheme outside its hypothesis."""
        with pytest.raises(SchemeNotApplicableError):
            cross_check(SPIDER_122, 0, "a")

    def test_small_forests(self):
        """Test every scheme success on forests of at most eight edges is confirmed."""
        checked = 0
        for forest in enumerate_forests(8, 2):
            for scheme in ("a", "b", "c"):
                if not validate_for_scheme(forest, scheme).valid:
                    continue
                k = sweep_shift(forest, scheme)
                labeling = run_scheme(forest, k, scheme).labeling
                oracle = brute_force(forest, k)
                assert oracle.feasible, f"{scheme} {forest} k={k}"
                assert check_antimagic(forest, labeling).ok
                checked += 1

        assert checked > 0

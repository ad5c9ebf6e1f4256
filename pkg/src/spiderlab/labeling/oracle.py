# SPDX-FileCopyrightText: 2025 spiderlab Contributors
# SPDX-License-Identifier: MIT
"""
Exhaustive search for k-shifted antimagic labelings of small forests.

Edges are labeled in canonical order, each trying the unused labels of
[k+1, k+m] in ascending order, so the first labeling found is the
lexicographically least one. With pruning a partial labeling is abandoned as
soon as two vertices whose incident edges are all labeled share a sum; later
edges never touch those vertices again, so no solution is lost.
"""

import concurrent.futures
import logging
from dataclasses import dataclass, field
from typing import Dict, List, Optional, Sequence, Tuple

from .errors import ConstructionError, OracleBudgetError
from .forest import SpiderForest
from .schemes import run_scheme
from .sums import Labeling, check_antimagic

logger = logging.getLogger(__name__)

DEFAULT_EDGE_BUDGET = 10
HARD_EDGE_CAP = 12


@dataclass(frozen=True)
class OracleResult:
    """Verdict of the exhaustive search at one shift.

    ``edges_searched`` counts the complete bijections the search reached.
    """

    feasible: bool
    witness: Optional[Labeling]
    k: int
    edges_searched: int


@dataclass(frozen=True)
class MinKResult:
    feasibility: Dict[int, bool]
    minimal: Optional[int]

    @property
    def infeasible(self) -> List[int]:
        return [k for k, ok in self.feasibility.items() if not ok]


@dataclass(frozen=True)
class CrossCheck:
    """Scheme output compared with the oracle at the same forest and shift."""

    agree: bool
    scheme_ok: bool
    oracle_feasible: bool
    labeling: Optional[Labeling]
    oracle: OracleResult
    message: str
    repairs: List[Dict] = field(default_factory=list)


def check_budget(forest: SpiderForest, edge_budget: int = DEFAULT_EDGE_BUDGET):
    """Refuse forests the search cannot finish in reasonable time.

    Raises:
        OracleBudgetError: If the budget exceeds the hard cap or m exceeds
            the budget
    """
    if edge_budget > HARD_EDGE_CAP:
        raise OracleBudgetError(
            f"Edge budget {edge_budget} exceeds the hard cap of {HARD_EDGE_CAP}"
        )
    if forest.m > edge_budget:
        raise OracleBudgetError(
            f"Forest has {forest.m} edges, budget is {edge_budget}"
        )


class _Search:
    """Depth-first enumeration over edge labels in canonical edge order."""

    def __init__(self, forest: SpiderForest, k: int, prune: bool):
        self.forest = forest
        self.k = k
        self.prune = prune
        self.edges = forest.edges()
        self.m = len(self.edges)

        index = {vertex: n for n, vertex in enumerate(forest.vertices())}
        self.vertex_count = len(index)
        self.ends: List[Tuple[int, int]] = []
        last_edge = [0] * self.vertex_count
        for n, edge in enumerate(self.edges):
            u, v = (index[x] for x in forest.endpoints(edge))
            self.ends.append((u, v))
            last_edge[u] = max(last_edge[u], n)
            last_edge[v] = max(last_edge[v], n)
        # Vertices whose last incident edge is edge n.
        self.completes: List[List[int]] = [[] for _ in range(self.m)]
        for vertex, n in enumerate(last_edge):
            self.completes[n].append(vertex)

        self.searched = 0

    def run(self, first_labels: Sequence[int]) -> Optional[List[int]]:
        labels = [0] * self.m
        sums = [0] * self.vertex_count
        used = set()
        done: Dict[int, int] = {}

        def place(n: int) -> bool:
            if n == self.m:
                self.searched += 1
                if self.prune:
                    return True
                return len(set(sums)) == self.vertex_count

            candidates = first_labels if n == 0 else range(self.k + 1, self.k + self.m + 1)
            u, v = self.ends[n]
            for label in candidates:
                if label in used:
                    continue
                used.add(label)
                labels[n] = label
                sums[u] += label
                sums[v] += label

                finished = self.completes[n]
                clash = False
                if self.prune:
                    added = []
                    for vertex in finished:
                        total = sums[vertex]
                        if total in done:
                            clash = True
                            break
                        done[total] = vertex
                        added.append(total)
                    if clash:
                        for total in added:
                            del done[total]
                    elif place(n + 1):
                        return True
                    else:
                        for total in added:
                            del done[total]
                elif place(n + 1):
                    return True

                sums[u] -= label
                sums[v] -= label
                used.discard(label)
            return False

        return labels if place(0) else None


def _search_branch(
    forest: SpiderForest, k: int, prune: bool, first_label: int
) -> Tuple[Optional[List[int]], int]:
    search = _Search(forest, k, prune)
    found = search.run([first_label])
    return found, search.searched


def brute_force(
    forest: SpiderForest,
    k: int,
    edge_budget: int = DEFAULT_EDGE_BUDGET,
    prune: bool = True,
    parallel: bool = False,
    workers: Optional[int] = None,
) -> OracleResult:
    """Decide whether the forest has a k-shifted antimagic labeling.

    Sequential runs return the lexicographically least witness. Parallel runs
    split the search on the label of the first edge and return whichever
    witness is found first; the verdict is the same either way.

    Args:
        forest: Forest to search, degenerate spiders allowed
        k: Shift
        edge_budget: Largest m accepted (at most the hard cap of 12)
        prune: Abandon partial labelings with a collision among finished vertices
        parallel: Search first-edge branches in worker processes
        workers: Worker process count for parallel runs

    Raises:
        OracleBudgetError: If m or the budget is too large
    """
    check_budget(forest, edge_budget)
    first_labels = list(range(k + 1, k + forest.m + 1))

    if parallel:
        found, searched = _parallel(forest, k, prune, first_labels, workers)
    else:
        search = _Search(forest, k, prune)
        found = search.run(first_labels)
        searched = search.searched

    witness = None
    if found is not None:
        witness = Labeling.from_sequence(forest, k, found)
        verdict = check_antimagic(forest, witness)
        if not verdict.ok:
            raise ConstructionError(f"Oracle witness failed verification: {verdict}", witness)

    logger.info(
        f"Oracle k={k} m={forest.m}: {'feasible' if witness else 'infeasible'} "
        f"after {searched} complete labelings"
    )
    return OracleResult(witness is not None, witness, k, searched)


def _parallel(
    forest: SpiderForest,
    k: int,
    prune: bool,
    first_labels: List[int],
    workers: Optional[int],
) -> Tuple[Optional[List[int]], int]:
    searched = 0
    executor = concurrent.futures.ProcessPoolExecutor(max_workers=workers)
    try:
        futures = [
            executor.submit(_search_branch, forest, k, prune, label)
            for label in first_labels
        ]
        for future in concurrent.futures.as_completed(futures):
            found, count = future.result()
            searched += count
            if found is not None:
                return found, searched
        return None, searched
    finally:
        # Branches still queued after a witness are dropped, not awaited.
        executor.shutdown(wait=False, cancel_futures=True)


def min_k(
    forest: SpiderForest,
    k_lo: int,
    k_hi: int,
    edge_budget: int = DEFAULT_EDGE_BUDGET,
    prune: bool = True,
    parallel: bool = False,
    workers: Optional[int] = None,
) -> MinKResult:
    """Run the oracle at every shift in [k_lo, k_hi].

    Raises:
        ValueError: If k_lo > k_hi
        OracleBudgetError: If m or the budget is too large
    """
    if k_lo > k_hi:
        raise ValueError(f"Empty shift range: {k_lo}..{k_hi}")
    check_budget(forest, edge_budget)

    feasibility = {
        k: brute_force(forest, k, edge_budget, prune, parallel, workers).feasible
        for k in range(k_lo, k_hi + 1)
    }
    minimal = next((k for k, ok in feasibility.items() if ok), None)
    return MinKResult(feasibility, minimal)


def cross_check(
    forest: SpiderForest,
    k: int,
    scheme: str,
    edge_budget: int = DEFAULT_EDGE_BUDGET,
    prune: bool = True,
) -> CrossCheck:
    """Run a scheme and the oracle at the same shift and compare.

    A scheme whose output fails verification disagrees with a feasible
    oracle verdict; the failing labeling is kept on the result.

    Raises:
        SchemeNotApplicableError: If the scheme does not cover (forest, k)
        OracleBudgetError: If m or the budget is too large
    """
    check_budget(forest, edge_budget)

    repairs: List[Dict] = []
    try:
        outcome = run_scheme(forest, k, scheme)
        labeling, scheme = outcome.labeling, outcome.scheme
        scheme_ok = check_antimagic(forest, labeling).ok
        repairs = outcome.repairs() or []
    except ConstructionError as e:
        labeling, scheme_ok = e.labeling, False
        repairs = e.repairs or []

    oracle = brute_force(forest, k, edge_budget, prune)
    agree = scheme_ok and oracle.feasible
    if agree:
        message = f"scheme {scheme} and oracle agree at k={k}"
    elif scheme_ok:
        message = f"scheme {scheme} labeled k={k} but the oracle found nothing"
    else:
        message = (
            f"scheme {scheme} failed at k={k}; oracle says "
            f"{'feasible' if oracle.feasible else 'infeasible'}"
        )
    if not agree:
        logger.error(message)
    return CrossCheck(agree, scheme_ok, oracle.feasible, labeling, oracle, message, repairs)

# SPDX-FileCopyrightText: 2025 spiderlab Contributors
# SPDX-License-Identifier: MIT
"""
Labeling tools for the MCP server.

Each tool takes plain documents (forest text, labeling JSON) and returns a
JSON-ready dictionary:
- Labeling a forest with a scheme, and verifying a labeling
- Scheme parameter dumps
- Exhaustive oracle checks, shift tables and scheme cross-checks
- Random forest generation
"""

import logging
from typing import Any, Dict, Optional, Tuple

from config import Spiderlab

from . import oracle
from .forest import (
    forest_to_json,
    format_forest,
    generate_forest as draw_forest,
    parse_forest,
    scheme_c_menu,
)
from .schemes import run_scheme, scheme_params as dump_params
from .sums import (
    check_antimagic,
    labeling_to_dict,
    parse_labeling,
    structural_ordering_check,
    vertex_sums,
)

logger = logging.getLogger(__name__)

# Settings shared by every tool call
_settings = Spiderlab()


def configure(settings: Spiderlab):
    """Install the configuration the tools run with."""
    global _settings
    _settings = settings
    logger.info(
        f"Tools configured: max_edges={settings.max_edges} prune={settings.prune} "
        f"parallel={settings.parallel} scheme={settings.scheme}"
    )


def settings() -> Spiderlab:
    return _settings


def parse_range(text: str) -> Tuple[int, int]:
    """Parse an inclusive ``A..B`` range (or a single integer).

    Raises:
        ValueError: If the text is not a range or the range is empty
    """
    lo, sep, hi = text.partition("..")
    try:
        bounds = (int(lo), int(hi)) if sep else (int(lo), int(lo))
    except ValueError:
        raise ValueError(f"Invalid range: {text!r}. Expected A..B")
    if bounds[0] > bounds[1]:
        raise ValueError(f"Invalid range: {text!r}. Lower bound exceeds upper bound")
    return bounds


def parse_lengths(text: str) -> Tuple[int, ...]:
    """Parse a comma separated list of leg lengths.

    Raises:
        ValueError: If an entry is not a positive integer
    """
    try:
        lengths = tuple(int(part) for part in text.split(",") if part.strip())
    except ValueError:
        raise ValueError(f"Invalid length list: {text!r}")
    if not lengths or min(lengths) < 1:
        raise ValueError(f"Invalid length list: {text!r}. Lengths must be >= 1")
    return lengths


def label_forest(forest_text: str, k: int, scheme: Optional[str] = None) -> Dict[str, Any]:
    """Label a forest with a scheme (default from configuration).

    Returns:
        Dict with the resolved scheme, the labeling document and its verdict
    """
    forest = parse_forest(forest_text)
    outcome = run_scheme(forest, k, scheme or _settings.scheme)
    verdict = check_antimagic(forest, outcome.labeling)
    logger.info(
        f"Labeled forest m={forest.m} at k={k} with scheme {outcome.scheme}: {verdict}"
    )
    return {
        "scheme": outcome.scheme,
        "labeling": labeling_to_dict(outcome.labeling, outcome.repairs()),
        "antimagic": verdict.ok,
    }


def verify_labeling(forest_text: str, labeling_json: str) -> Dict[str, Any]:
    """Check a labeling document against a forest.

    Returns:
        Dict with the verdict flags, the failure witness and every vertex sum
    """
    forest = parse_forest(forest_text)
    labeling = parse_labeling(labeling_json)
    verdict = check_antimagic(forest, labeling)

    result: Dict[str, Any] = {
        "antimagic": verdict.ok,
        "range_ok": verdict.range_ok,
        "bijection_ok": verdict.bijection_ok,
        "sums_ok": verdict.sums_ok,
        "failure": verdict.failure,
        "witness": verdict.witness,
        "message": str(verdict),
    }
    if verdict.bijection_ok:
        sums = vertex_sums(forest, labeling).sums
        result["sums"] = {str(vertex): total for vertex, total in sums.items()}
        result["ordered"] = structural_ordering_check(forest, labeling).ok
    return result


def oracle_check(
    forest_text: str, k: int, max_edges: Optional[int] = None
) -> Dict[str, Any]:
    """Exhaustively decide k-shifted antimagicness of a small forest.

    Returns:
        Dict with feasibility, the number of complete labelings reached and a
        witness labeling document when feasible
    """
    forest = parse_forest(forest_text)
    result = oracle.brute_force(
        forest,
        k,
        edge_budget=max_edges or _settings.max_edges,
        prune=_settings.prune,
        parallel=_settings.parallel,
        workers=_settings.workers,
    )
    return {
        "feasible": result.feasible,
        "k": result.k,
        "edges_searched": result.edges_searched,
        "witness": labeling_to_dict(result.witness) if result.witness is not None else None,
    }


def shift_table(forest_text: str, k_from: int, k_to: int) -> Dict[str, Any]:
    """Oracle verdict at every shift in [k_from, k_to]."""
    forest = parse_forest(forest_text)
    result = oracle.min_k(
        forest,
        k_from,
        k_to,
        edge_budget=_settings.max_edges,
        prune=_settings.prune,
        parallel=_settings.parallel,
        workers=_settings.workers,
    )
    return {
        "feasibility": {str(k): ok for k, ok in result.feasibility.items()},
        "minimal": result.minimal,
        "infeasible": result.infeasible,
    }


def scheme_params(forest_text: str, k: int, scheme: str) -> Dict[str, Any]:
    """Parameters and intervals of a scheme at shift k."""
    return dump_params(parse_forest(forest_text), k, scheme)


def generate_forest(
    seed: int,
    spiders: str = "1..4",
    legs: str = "3..5",
    lengths: str = "1,2,3,4,5",
    scheme_c_only: bool = False,
) -> Dict[str, Any]:
    """Draw a reproducible random forest.

    Returns:
        Dict with the forest in line format and as JSON

    Raises:
        ValueError: If a range is invalid or scheme_c_only leaves no lengths
    """
    menu = parse_lengths(lengths)
    if scheme_c_only:
        menu = scheme_c_menu(menu)
        if not menu:
            raise ValueError(f"No length in {lengths!r} is 1 or even")
    forest = draw_forest(seed, parse_range(spiders), parse_range(legs), menu)
    return {"forest": format_forest(forest), "json": forest_to_json(forest), "m": forest.m}


def cross_check(forest_text: str, k: int, scheme: str) -> Dict[str, Any]:
    """Compare a scheme's output with the oracle at the same shift."""
    forest = parse_forest(forest_text)
    check = oracle.cross_check(
        forest, k, scheme, edge_budget=_settings.max_edges, prune=_settings.prune
    )
    return {
        "agree": check.agree,
        "scheme_ok": check.scheme_ok,
        "oracle_feasible": check.oracle_feasible,
        "message": check.message,
        "labeling": labeling_to_dict(check.labeling, check.repairs or None)
        if check.labeling is not None
        else None,
    }

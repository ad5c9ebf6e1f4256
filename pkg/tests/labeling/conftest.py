# SPDX-FileCopyrightText: 2025 spiderlab Contributors
# SPDX-License-Identifier: MIT
"""Shared fixtures for the labeling tests."""

from pathlib import Path

import pytest

from spiderlab.labeling import tools
from spiderlab.labeling.forest import SpiderForest, parse_forest
from config import Spiderlab

FIXTURES = Path(__file__).parent / "fixtures"


def read_fixture(name: str) -> str:
    return (FIXTURES / name).read_text(encoding="utf-8")


@pytest.fixture
def fixtures_dir() -> Path:
    return FIXTURES


@pytest.fixture
def four_spiders() -> SpiderForest:
    """The four-spider, 59-edge worked example."""
    return parse_forest(read_fixture("four_spiders.txt"))


@pytest.fixture
def four_spiders_labeling() -> str:
    return read_fixture("four_spiders_labeling.json")


@pytest.fixture
def two_p3() -> SpiderForest:
    return parse_forest(read_fixture("two_p3.json"))


@pytest.fixture
def switch_forest() -> SpiderForest:
    """S4, S4 and (1,2,2): the first star collides with the last center at k=3."""
    return parse_forest(read_fixture("switch.txt"))


@pytest.fixture
def default_tool_settings():
    """Run the test with the default tool configuration."""
    tools.configure(Spiderlab())
    yield
    tools.configure(Spiderlab())

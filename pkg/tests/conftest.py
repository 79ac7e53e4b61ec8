"""Pytest Configuration and Shared Fixtures for ramseytype Tests.

This module provides fixtures used across unit and integration tests.
"""

import random
from typing import Callable, Iterable, Sequence

import pytest

from ramseytype.config.settings import SearchLimits, Settings
from ramseytype.generators import graph_from_text
from ramseytype.graph import Graph, build_graph


@pytest.fixture
def named() -> Callable[[str], Graph]:
    """Fixture to build graphs from CLI names, e.g. named("K1,4*")."""
    return graph_from_text


@pytest.fixture
def edges() -> Callable[[int, Iterable[Sequence[int]]], Graph]:
    """Fixture to build graphs from an order and an edge list."""
    return build_graph


@pytest.fixture
def rng() -> random.Random:
    """A seeded random source; every test gets the same stream."""
    return random.Random(20240611)


@pytest.fixture
def settings() -> Settings:
    return Settings.default()


@pytest.fixture
def limits() -> SearchLimits:
    return SearchLimits()


@pytest.fixture
def petersen() -> Graph:
    """The Petersen graph: outer 5-cycle 0..4, inner pentagram 5..9."""
    outer = [(i, (i + 1) % 5) for i in range(5)]
    spokes = [(i, i + 5) for i in range(5)]
    inner = [(5 + i, 5 + (i + 2) % 5) for i in range(5)]
    return build_graph(10, outer + spokes + inner)

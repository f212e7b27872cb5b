"""Shared builders for seeded random test instances."""

import random

import pytest

from stringraph import Graph


def er_graph(n: int, p: float, seed: int) -> Graph:
    """Erdős–Rényi G(n, p) with a deterministic edge list."""
    rng = random.Random(seed)
    edges = [(u, v) for u in range(n) for v in range(u + 1, n)
             if rng.random() < p]
    return Graph.from_edges(n, edges)


@pytest.fixture
def rng():
    return random.Random(0xC0FFEE)

"""Balanced separators: validation, strategies, exact search, survey."""

from itertools import combinations

import pytest

from stringraph import (Graph, SeparatorPartition, TooLarge, balance_cap,
                        find_balanced_separator, fit_loglog_slope,
                        separator_size_survey, validate_partition)
from stringraph.generators import GeneratorSpec
from stringraph.graph import components_masked, mask_of
from tests.conftest import er_graph


def _min_separator_size(G: Graph) -> int:
    """Reference minimum by direct subset enumeration."""
    cap = balance_cap(G.n)
    verts = range(G.n)
    for k in range(G.n + 1):
        for S in combinations(verts, k):
            rest = G.full_mask & ~mask_of(S)
            sizes = [c.bit_count() for c in components_masked(G, rest)]
            if sum(sizes) > 2 * cap:
                continue
            # Pack components into two sides greedily over all subsets.
            feasible = 1
            for s in sizes:
                feasible |= feasible << s
            total = sum(sizes)
            if any(feasible >> a & 1 and a <= cap and total - a <= cap
                   for a in range(total + 1)):
                return k
    return G.n


def test_balance_cap_matches_two_thirds_ceiling():
    for n in range(1, 40):
        assert balance_cap(n) == -(-2 * n // 3)


def test_validate_partition_rejects_violations():
    G = Graph.from_edges(4, [(0, 1), (2, 3)])
    good = SeparatorPartition(S=(), V1=(0, 1), V2=(2, 3))
    validate_partition(G, good)
    with pytest.raises(ValueError):
        validate_partition(G, SeparatorPartition((), (0, 1), (2,)))
    with pytest.raises(ValueError):
        validate_partition(G, SeparatorPartition((0,), (0, 1), (2, 3)))
    with pytest.raises(ValueError):
        validate_partition(G, SeparatorPartition((), (0, 1, 2), (3,)))
    with pytest.raises(ValueError):
        validate_partition(G, SeparatorPartition((2,), (0, 3), (1,)))


def test_exact_on_path_uses_single_cut_vertex():
    P9 = Graph.from_edges(9, [(i, i + 1) for i in range(8)])
    part = find_balanced_separator(P9, "exact")
    validate_partition(P9, part)
    assert part.size == 1


def test_exact_on_complete_graph():
    K6 = Graph.from_edges(6, list(combinations(range(6), 2)))
    part = find_balanced_separator(K6, "exact")
    validate_partition(K6, part)
    # One side must be empty, so the other holds at most the cap.
    assert part.size == 6 - balance_cap(6)


def test_disconnected_graph_needs_no_separator():
    G = Graph.from_edges(6, [(0, 1), (2, 3), (4, 5)])
    part = find_balanced_separator(G, "auto")
    validate_partition(G, part)
    assert part.size == 0


def test_exact_matches_reference_minimum(rng):
    for trial in range(20):
        G = er_graph(rng.randrange(3, 9), rng.uniform(0.2, 0.8), 100 + trial)
        part = find_balanced_separator(G, "exact")
        validate_partition(G, part)
        assert part.size == _min_separator_size(G)


@pytest.mark.parametrize("strategy", ["auto", "bfs_layer", "degree_peel"])
def test_heuristics_always_validate(strategy, rng):
    for trial in range(15):
        G = er_graph(rng.randrange(2, 40), rng.uniform(0.05, 0.5), 300 + trial)
        part = find_balanced_separator(G, strategy)
        validate_partition(G, part)


def test_exact_strategy_refuses_large_graphs():
    G = er_graph(20, 0.3, 1)
    with pytest.raises(TooLarge):
        find_balanced_separator(G, "exact")


def test_unknown_strategy_rejected():
    with pytest.raises(ValueError):
        find_balanced_separator(er_graph(4, 0.5, 1), "magic")


def test_survey_rows_and_determinism():
    spec = GeneratorSpec(kind="random_segments", count=30, seed=5)
    rows = separator_size_survey(spec, (30, 60), trials=3)
    again = separator_size_survey(spec, (30, 60), trials=3)
    assert rows == again
    assert [r[0] for r in rows] == [30, 60]
    assert all(r[1] >= 0 and r[2] >= 0 for r in rows)


def test_loglog_slope_fit():
    assert fit_loglog_slope([(10, 10), (100, 100)]) == pytest.approx(1.0)
    pts = [(x, x ** 0.5) for x in (10, 100, 1000)]
    assert fit_loglog_slope(pts) == pytest.approx(0.5, abs=1e-9)
    assert fit_loglog_slope([(10, 0), (100, 0)]) == 0.0
    assert fit_loglog_slope([(10, 5)]) == 0.0

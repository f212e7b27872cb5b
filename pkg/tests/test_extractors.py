"""Constructive extraction routines and their witness validators."""

import math
from itertools import combinations

import pytest

from stringraph import (AlgorithmParams, ExtractionWitness, ExtractorViolation,
                        Graph, InternalBoundViolation, MultipartiteCover,
                        PreconditionViolated, choose_delta, color_or_clique,
                        dense_core, find_balanced_biclique,
                        half_clique_free_subgraph, independent_set,
                        kr1_free_subgraph, multipartite_cover,
                        neighborhood_cover_subgraph, q_independent_set,
                        validate_multipartite_cover, validate_witness)
from stringraph.extract import (cover_floor, half_clique_floor,
                                independent_floor, q_independent_floor)
from stringraph.graph import clique_in_mask, is_independent, mask_of
from tests.conftest import er_graph


def _cycle(n):
    return Graph.from_edges(n, [(i, (i + 1) % n) for i in range(n)])


def _complete(n):
    return Graph.from_edges(n, list(combinations(range(n), 2)))


def test_params_validation():
    with pytest.raises(ValueError):
        AlgorithmParams(c1=0)
    with pytest.raises(ValueError):
        AlgorithmParams(epsilon=1.5)
    p = AlgorithmParams()
    assert p.C_refine(0.5) >= (12 * p.c1) ** 2


def test_floor_formulas():
    assert independent_floor(1, 2, 0.01) == 1
    n = 10 ** 6
    want = math.floor(n * (0.01 * 2 / math.log2(n)) ** 2)
    assert independent_floor(n, 2, 0.01) == max(1, want)
    assert cover_floor(16, 1.0) == 1.0
    assert cover_floor(2 ** 20, 1.0) == 2 ** 20 / 400
    assert half_clique_floor(2 ** 10, 1.0) == 2 ** 10 / 1000
    assert q_independent_floor(8, 2, 1, 0.01) == 1


def test_independent_set_on_edgeless_graph_keeps_everything():
    G = Graph.from_edges(12, [])
    w = independent_set(G, 1)
    assert w.kind == "independent" and len(w.vertices) == 12
    validate_witness(G, w)


def test_independent_set_on_cycle():
    G = _cycle(5)
    w = independent_set(G, 2)
    validate_witness(G, w)
    assert is_independent(G, w.vertices)
    assert len(w.vertices) >= independent_floor(5, 2, 0.01)


def test_independent_set_precondition_reports_clique():
    G = _complete(4)
    with pytest.raises(PreconditionViolated) as exc:
        independent_set(G, 2)
    assert exc.value.witness is not None
    assert exc.value.witness.kind == "clique"
    assert len(exc.value.witness.vertices) == 4


def test_q_independent_set_shortcut_when_target_absent():
    # No K_4 anywhere, so every edge already qualifies.
    G = _cycle(6)
    w = q_independent_set(G, 3, 2)
    assert len(w.vertices) == 6
    assert w.certificate["p"] == 4 and w.certificate["found_clique"] is None
    validate_witness(G, w)


def test_q_independent_set_recursion_output_is_kp_free(rng):
    for trial in range(10):
        G = er_graph(14, 0.45, 700 + trial)
        if clique_in_mask(G, G.full_mask, 8) is not None:
            continue
        w = q_independent_set(G, 3, 2)
        validate_witness(G, w)
        assert clique_in_mask(G, mask_of(w.vertices), 4) is None
        assert len(w.vertices) >= q_independent_floor(14, 3, 2, 0.01)


def test_q_independent_set_argument_checks():
    G = _cycle(6)
    with pytest.raises(ValueError):
        q_independent_set(G, 2, 3)  # q must not exceed s
    with pytest.raises(ValueError):
        q_independent_set(G, 2, 0)


def test_kr1_free_subgraph_on_triangle_free_graph():
    G = _cycle(5)
    w = kr1_free_subgraph(G, 3)
    validate_witness(G, w)
    assert is_independent(G, w.vertices)
    assert len(w.vertices) >= 1


def test_kr1_free_subgraph_precondition_and_arguments():
    with pytest.raises(PreconditionViolated) as exc:
        kr1_free_subgraph(_complete(4), 3)
    assert exc.value.witness.kind == "clique"
    with pytest.raises(ValueError):
        kr1_free_subgraph(_cycle(5), 2)


def test_neighborhood_cover_on_star_needs_no_apex():
    star = Graph.from_edges(6, [(0, i) for i in range(1, 6)])
    w = neighborhood_cover_subgraph(star)
    assert w.vertices == (1, 2, 3, 4, 5)
    assert dict(w.certificate["apexes"]) == {}
    validate_witness(star, w)


def test_neighborhood_cover_validates_on_random_graphs(rng):
    for trial in range(15):
        G = er_graph(rng.randrange(2, 25), rng.uniform(0.1, 0.6), 800 + trial)
        w = neighborhood_cover_subgraph(G)
        validate_witness(G, w)
        assert len(w.vertices) >= cover_floor(G.n, 0.01)


def test_half_clique_free_subgraph():
    pete_edges = [(0, 1), (1, 2), (2, 3), (3, 4), (4, 0),
                  (5, 7), (7, 9), (9, 6), (6, 8), (8, 5),
                  (0, 5), (1, 6), (2, 7), (3, 8), (4, 9)]
    G = Graph.from_edges(10, pete_edges)
    w = half_clique_free_subgraph(G, 4)
    validate_witness(G, w)
    assert clique_in_mask(G, mask_of(w.vertices), 2) is None
    with pytest.raises(PreconditionViolated):
        half_clique_free_subgraph(_complete(6), 4)
    with pytest.raises(ValueError):
        half_clique_free_subgraph(G, 2)


def test_find_balanced_biclique_modes():
    k33 = Graph.from_edges(6, [(u, v + 3) for u in range(3) for v in range(3)])
    got = find_balanced_biclique(k33, 3, mode="exact")
    assert got is not None
    A, B = got
    assert len(A) == len(B) == 3
    assert find_balanced_biclique(k33, 4, mode="exact") is None
    greedy = find_balanced_biclique(k33, 2, mode="greedy")
    if greedy is not None:
        A, B = greedy
        assert all(k33.has_edge(u, v) for u in A for v in B)
    with pytest.raises(ValueError):
        find_balanced_biclique(k33, 0)
    with pytest.raises(ValueError):
        find_balanced_biclique(k33, 1, mode="psychic")


def test_dense_core_keeps_complete_graph():
    G = _complete(6)
    w = dense_core(G, 0.5)
    assert len(w.vertices) == 6
    assert w.certificate["d_prime"] == 5
    validate_witness(G, w)


def test_dense_core_on_random_graphs(rng):
    for trial in range(10):
        G = er_graph(rng.randrange(2, 30), rng.uniform(0.2, 0.7), 900 + trial)
        w = dense_core(G, 0.5)
        validate_witness(G, w)
    with pytest.raises(ValueError):
        dense_core(G, 0.0)


def test_multipartite_cover_known_graphs():
    K6 = _complete(6)
    cov = multipartite_cover(K6, 0.4)
    validate_multipartite_cover(K6, cov, 0.05)
    assert cov.parts == ((0, 2, 4), (1, 3, 5))
    octa = Graph.from_edges(6, [(u, v) for u, v in combinations(range(6), 2)
                                if abs(u - v) != 3])
    cov = multipartite_cover(octa, 0.3)
    validate_multipartite_cover(octa, cov, 0.05)
    assert cov.parts == ((0, 2, 3, 5), (1, 4))


def test_multipartite_cover_requires_density():
    sparse = Graph.from_edges(6, [(0, 1)])
    with pytest.raises(PreconditionViolated):
        multipartite_cover(sparse, 0.5)


def test_multipartite_validator_rejects_missing_cross_edge():
    G = Graph.from_edges(4, [(0, 2), (0, 3), (1, 2)])  # 1-3 missing
    bad = MultipartiteCover(parts=((0, 1), (2, 3)), alpha=0.1)
    with pytest.raises(ExtractorViolation):
        validate_multipartite_cover(G, bad, 0.05)


def test_validate_witness_rejects_tampering():
    G = _cycle(5)
    w = independent_set(G, 2)
    forged = ExtractionWitness("independent", (0, 1), w.certificate)
    with pytest.raises(ExtractorViolation):
        validate_witness(G, forged)
    with pytest.raises(ExtractorViolation):
        validate_witness(G, ExtractionWitness("mystery", (), {}))


def test_choose_delta_satisfies_constraints():
    for eps in (0.3, 0.5, 0.8):
        d = choose_delta(eps, 0.01)
        assert d > 0
        assert 2 * d * math.log2(1 / (0.01 * d)) < eps / 2
        x0 = 1 / d
        assert eps * x0 / 2 > math.log2(x0)
    with pytest.raises(ValueError):
        choose_delta(1.5, 0.01)


def test_color_or_clique_edgeless_takes_coloring_branch():
    G = Graph.from_edges(30, [])
    w = color_or_clique(G, 0.5)
    assert w.kind == "coloring" and len(w.vertices) == 1


def test_color_or_clique_clique_branch_with_explicit_delta():
    w = color_or_clique(_complete(6), 0.5, AlgorithmParams(delta=0.5))
    assert w.kind == "clique"
    assert w.vertices == (0, 1, 2, 3)
    assert len(w.vertices) >= 6 ** 0.5


def test_color_or_clique_multiclass_coloring_branch():
    C20 = _cycle(20)
    w = color_or_clique(C20, 0.8, AlgorithmParams(delta=0.3))
    assert w.kind == "coloring"
    assert len(w.vertices) <= 20 ** 0.8


def test_color_or_clique_reports_unprovable_bound():
    # Tight epsilon with a large forced delta leaves no achievable branch.
    with pytest.raises(InternalBoundViolation):
        color_or_clique(_cycle(20), 0.5, AlgorithmParams(delta=0.45))


def test_color_or_clique_default_params_always_verified(rng):
    for trial in range(10):
        G = er_graph(40, rng.uniform(0.1, 0.9), 950 + trial)
        w = color_or_clique(G, 0.5)
        assert w.kind in ("coloring", "clique")
        if w.kind == "clique":
            assert all(G.has_edge(u, v)
                       for u, v in combinations(w.vertices, 2))
            assert len(w.vertices) >= w.certificate["threshold"]
        else:
            assert len(w.vertices) <= 40 ** 0.5

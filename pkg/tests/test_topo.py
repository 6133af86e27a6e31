import networkx as nx
import numpy as np
import pytest
from hypothesis import given, strategies as st

from markoff_forge.markoff import enumerate_graph
from markoff_forge.topo import (K33_PATTERN, ObstructionCert, PathSystem, count_cycles, crossover_prime_bound,
                                cycle_census, euler_bound, euler_bound_branch, exhaustive_k33, find_2k33,
                                find_custom, find_k33, find_pattern, implied_square_hexagon_term,
                                kuratowski_k33, read_pattern, totient, totient_lower_bound, triple_graph,
                                verify_obstruction, verify_path_system)


def trace_four_cycles(G):
    """Squares from tr(A^4) = 8 c4 + 2m + 4 sum C(d, 2)."""
    A = nx.to_numpy_array(G, dtype=np.int64)
    deg = A.sum(axis=1)
    walks = int(np.trace(np.linalg.matrix_power(A, 4)))
    return (walks - 2 * G.number_of_edges() - 4 * int((deg * (deg - 1) // 2).sum())) // 8


@pytest.mark.parametrize("p,kappa", [(5, 0), (7, 0), (11, 0), (13, 0), (11, 3), (13, 6)])
def test_census_against_trace_and_networkx(p, kappa):
    g = enumerate_graph(kappa, p)
    G = g.to_networkx()
    census = cycle_census(g, 6)
    assert census.s == trace_four_cycles(G)
    by_len = {}
    for c in nx.simple_cycles(G, length_bound=6):
        by_len[len(c)] = by_len.get(len(c), 0) + 1
    assert {k: v for k, v in census.counts.items() if v} == by_len


def test_census_edge_cases():
    c = cycle_census(nx.Graph(), 8)
    assert c.s == c.h == 0 and c.girth is None
    with pytest.raises(ValueError):
        cycle_census(nx.Graph(), 9)
    assert count_cycles(nx.cycle_graph(5), 8)[5] == 1


@pytest.mark.parametrize("p", [5, 7, 11, 13, 17, 19])
def test_implied_square_hexagon_term_matches_census(p):
    census = cycle_census(enumerate_graph(0, p), 6)
    assert 6 * census.s + 2 * census.h == implied_square_hexagon_term(p)
    assert euler_bound(p, 0, census.s, census.h) == euler_bound_branch(p, 0)


@given(st.integers(5, 10 ** 6).filter(lambda n: all(n % d for d in range(2, int(n ** 0.5) + 1))),
       st.integers(-2, 2))
def test_branch_forms(p, chi):
    want = {1: 26 * p - 90, 5: 26 * p - 82, 7: 17 * p - 51, 11: 17 * p - 43}[p % 12] - 14 * chi
    assert euler_bound_branch(p, chi) == want


def test_bound_examples():
    assert euler_bound_branch(19, 0) == 17 * 19 - 51
    assert euler_bound_branch(13, 0) == 248 >= enumerate_graph(0, 13).vertex_count - 1
    assert crossover_prime_bound() == 62440
    assert totient(12) == 4 and totient(97) == 96
    assert totient_lower_bound(62440) <= 26 * 62440 - 82 < totient_lower_bound(62441)


def test_g7_has_no_k33():
    res = find_k33(enumerate_graph(0, 7), 60, exhaustive=True)
    assert res.proven_absent
    G = triple_graph(enumerate_graph(0, 7))
    assert nx.check_planarity(G)[0]
    nosym = exhaustive_k33(G, 7, 0, 60, use_symmetry=False)
    assert nosym.proven_absent


def test_timeout_is_not_absence():
    res = exhaustive_k33(triple_graph(enumerate_graph(0, 13)), 13, 0, time_budget=1e-6)
    assert res.cert is None and not res.proven_absent


@pytest.mark.parametrize("p,kappa", [(11, 0), (13, 6), (5, 0)])
def test_find_k33(p, kappa):
    g = enumerate_graph(kappa, p)
    res = find_k33(g, 30)
    assert res.cert is not None
    assert verify_obstruction(triple_graph(g), res.cert)


@pytest.mark.parametrize("p", [11, 13, 17])
def test_find_2k33(p):
    g = enumerate_graph(0, p)
    res = find_2k33(g, 120)
    assert res.cert is not None and res.cert.kind == "TwoK33"
    a, b = res.cert.parts
    assert not a.vertex_set & b.vertex_set
    assert verify_obstruction(triple_graph(g), res.cert)
    assert res.cert.to_dict()["kind"] == "TwoK33"


def test_verifier_rejects_broken_certificates():
    g = enumerate_graph(0, 11)
    G = triple_graph(g)
    ps = find_k33(g).cert.parts[0]
    assert verify_path_system(G, ps)
    cut = PathSystem(ps.side_a, ps.side_b, ps.paths[:8])
    assert not verify_path_system(G, cut)
    broken = PathSystem(ps.side_a, ps.side_b, [ps.paths[0][:1] + ps.paths[0][2:]] + ps.paths[1:])
    assert not verify_path_system(G, broken)
    assert not verify_obstruction(G, ObstructionCert("TwoK33", 11, 0, [ps, ps]))


def test_kuratowski_fallback_on_k33():
    K = nx.complete_bipartite_graph(3, 3)
    ps = kuratowski_k33(K)
    assert verify_path_system(K, ps)
    assert kuratowski_k33(nx.cycle_graph(6)) is None


def test_custom_pattern_search():
    H = nx.petersen_graph()
    emb, _ = find_pattern(H, K33_PATTERN, 30)
    assert emb is not None
    emb, exhaustive = find_pattern(nx.cycle_graph(8), K33_PATTERN, 30)
    assert emb is None and exhaustive
    assert read_pattern("# k2\na b\nb c  # tail\n") == [("a", "b"), ("b", "c")]
    res = find_custom(enumerate_graph(0, 5), [("a", "b"), ("b", "c"), ("c", "a")], 10)
    assert res.cert is not None and res.cert.kind == "Custom"


def test_g7_census_consistent_with_planar_embedding():
    g = enumerate_graph(0, 7)
    c = cycle_census(g, 6)
    V = g.to_networkx().number_of_nodes()
    assert V <= euler_bound(7, 2, c.s, c.h) == euler_bound_branch(7, 2)

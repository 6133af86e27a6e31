import networkx as nx
import numpy as np
import pytest
from hypothesis import given, strategies as st

from markoff_forge.markoff import (SignChange, Triple, carlitz_count, enumerate_brute, enumerate_codes,
                                   enumerate_graph, on_surface, path_walk, sign_change, vieta)

SMALL = [5, 7, 11, 13, 17, 19, 23]


@pytest.mark.parametrize("p", SMALL)
@pytest.mark.parametrize("kappa", [-3, 0, 2, 4, 7])
def test_fast_enumeration_equals_brute(p, kappa):
    fast = enumerate_codes(kappa % p, p)
    assert np.array_equal(fast, enumerate_brute(kappa % p, p))
    assert len(fast) == carlitz_count(kappa, p)


@given(st.sampled_from(SMALL + [101]), st.integers(-10, 10), st.data())
def test_involutions_and_sign_changes_preserve_the_surface(p, kappa, data):
    g = enumerate_graph(kappa, p)
    t = g.triple(data.draw(st.integers(0, g.vertex_count - 1)))
    for i in (1, 2, 3):
        u = vieta(i, t, p)
        assert on_surface(u, kappa, p) and vieta(i, u, p) == t
    for s in SignChange:
        assert sign_change(s, t, p) in g
        # sign changes commute with every involution
        for i in (1, 2, 3):
            assert sign_change(s, vieta(i, t, p), p) == vieta(i, sign_change(s, t, p), p)


def test_sign_change_group():
    labels = {s.label for s in SignChange}
    assert labels == {"+++", "+--", "-+-", "--+"}
    for a in SignChange:
        assert a.compose(a) is SignChange.IDENTITY
        for b in SignChange:
            assert a.compose(b) is b.compose(a)
    assert SignChange.from_label("+--") is SignChange.FLIP_YZ


def test_path_walk_order():
    walk = path_walk((1, 2, 3), [1, 2], 101)
    assert walk[1] == vieta(1, (1, 2, 3), 101)
    assert walk[2] == vieta(2, walk[1], 101)


def test_component_examples():
    g13 = enumerate_graph(0, 13)
    assert g13.vertex_count == 209
    assert [s for s, _ in g13.components()] == [208, 1]
    assert enumerate_graph(0, 7).vertex_count == 29
    g2 = enumerate_graph(2, 11)
    assert len(g2.component_of((1, 1, 1))) == 16


def test_graph_is_cubic_multigraph_and_exports():
    g = enumerate_graph(0, 7)
    deg = np.zeros(g.vertex_count, dtype=int)
    for i, j, _ in g.edges():
        deg[i] += 1
        deg[j] += 1
    # each vertex has three involution slots; a loop fills one slot but adds 2 to the degree
    assert deg.sum() == 3 * g.vertex_count + g.loops()
    H = g.to_networkx()
    assert g.origin not in H and H.number_of_nodes() == 28
    assert nx.is_connected(H)
    assert g.to_dot().startswith("graph G {")
    parsed = nx.parse_graphml(g.to_graphml())
    assert parsed.number_of_nodes() == 29
    assert str(Triple(1, 2, 3)) == "1,2,3"


def test_large_modulus_refused():
    with pytest.raises(ValueError):
        enumerate_graph(0, 1048583)

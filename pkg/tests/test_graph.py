import random

import networkx as nx
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from spectral_turan.graph import (
    Graph,
    canonical_form,
    canonical_graph,
    complete_graph,
    component_masks,
    cut_vertices,
    cycle_graph,
    delete_vertex,
    disjoint_union,
    drop_isolated,
    empty_graph,
    from_edge_list,
    from_graph6,
    induced_neighborhood,
    induced_subgraph,
    is_connected,
    path_graph,
    to_graph6,
)

import oracles


@st.composite
def graphs(draw, max_n=9):
    n = draw(st.integers(1, max_n))
    pairs = [(u, v) for u in range(n) for v in range(u + 1, n)]
    chosen = draw(st.lists(st.sampled_from(pairs), unique=True)) if pairs else []
    return from_edge_list(n, chosen)


@st.composite
def permutations(draw, n):
    return draw(st.permutations(list(range(n))))


def test_construction_rejects_bad_input():
    with pytest.raises(ValueError):
        from_edge_list(3, [(0, 0)])
    with pytest.raises(ValueError):
        from_edge_list(3, [(0, 3)])
    with pytest.raises(ValueError):
        Graph(2, (0b10, 0b00))  # asymmetric


def test_basic_queries():
    g = from_edge_list(4, [(0, 1), (1, 2), (1, 3)])
    assert g.size == 3
    assert g.degrees() == [1, 3, 1, 1]
    assert sorted(g.neighbors(1)) == [0, 2, 3]
    assert g.has_edge(2, 1) and not g.has_edge(0, 2)
    assert g.edges() == [(0, 1), (1, 2), (1, 3)]
    h = g.add_edge(0, 2).remove_edge(1, 3)
    assert h.edges() == [(0, 1), (0, 2), (1, 2)]
    assert h.isolated_vertices() == [3]
    assert drop_isolated(h).n == 3


def test_small_builders():
    assert complete_graph(5).size == 10
    assert path_graph(5).size == 4
    assert cycle_graph(6).degrees() == [2] * 6
    assert empty_graph(3).size == 0
    u = disjoint_union(cycle_graph(3), path_graph(2))
    assert u.n == 5 and len(component_masks(u)) == 2


def test_is_connected_rejects_empty():
    with pytest.raises(ValueError):
        is_connected(empty_graph(0))


@settings(max_examples=200, deadline=None)
@given(graphs())
def test_components_match_networkx(g):
    assert len(component_masks(g)) == oracles.components(g)
    assert is_connected(g) == nx.is_connected(oracles.to_nx(g))


@settings(max_examples=200, deadline=None)
@given(graphs())
def test_cut_vertices_match_deletion_oracle(g):
    if not is_connected(g):
        with pytest.raises(ValueError):
            cut_vertices(g)
        return
    assert cut_vertices(g) == oracles.deletion_cut_vertices(g)


def test_induced_subgraph_and_neighbourhood():
    g = from_edge_list(5, [(0, 1), (0, 2), (0, 3), (1, 2), (3, 4)])
    sub, index = induced_subgraph(g, [0, 1, 2])
    assert index == [0, 1, 2] and sub.size == 3
    nb, index = induced_neighborhood(g, 0)
    assert index == [1, 2, 3] and nb.edges() == [(0, 1)]
    d = delete_vertex(g, 0)
    assert d.n == 4 and d.size == 2


@settings(max_examples=300, deadline=None)
@given(graphs(max_n=20))
def test_graph6_round_trip_and_networkx_agreement(g):
    s = to_graph6(g)
    assert from_graph6(s) == g
    assert nx.to_graph6_bytes(oracles.to_nx(g), header=False).strip().decode() == s


@pytest.mark.parametrize("n", [62, 63, 100, 258047 // 4096 + 70])
def test_graph6_long_headers(n):
    rng = random.Random(n)
    g = oracles.random_graph(rng, n, 0.05)
    s = to_graph6(g)
    assert s == nx.to_graph6_bytes(oracles.to_nx(g), header=False).strip().decode()
    assert from_graph6(s) == g


def test_graph6_known_strings():
    assert to_graph6(complete_graph(4)) == "C~"
    assert to_graph6(path_graph(3)) == "Bg"  # bits 101000
    assert from_graph6(">>graph6<<C~") == complete_graph(4)


def test_graph6_rejects_garbage():
    with pytest.raises(ValueError):
        from_graph6("")
    with pytest.raises(ValueError):
        from_graph6("C~~~~")


@settings(max_examples=150, deadline=None)
@given(st.data())
def test_canonical_form_invariant_under_relabelling(data):
    g = data.draw(graphs(max_n=10))
    perm = data.draw(permutations(g.n))
    assert canonical_form(g.relabel(perm)) == canonical_form(g)
    c = canonical_graph(g)
    assert nx.is_isomorphic(oracles.to_nx(c), oracles.to_nx(g))
    assert canonical_graph(c) == c


def test_canonical_form_separates_exactly_like_brute_force(small_connected):
    # every connected graph with <= 7 edges and <= 7 vertices
    graphs7 = [g for g in small_connected if g.n <= 7]
    brute = {oracles.brute_canonical(g) for g in graphs7}
    ours = {canonical_form(g) for g in graphs7}
    assert len(brute) == len(ours) == len(graphs7)


def test_canonical_form_on_random_pairs():
    rng = random.Random(7)
    for _ in range(300):
        n = rng.randint(2, 7)
        g = oracles.random_graph(rng, n, rng.random())
        h = oracles.random_graph(rng, n, rng.random())
        same = oracles.brute_canonical(g) == oracles.brute_canonical(h)
        assert (canonical_form(g) == canonical_form(h)) == same


@pytest.mark.parametrize("g", [
    cycle_graph(12), complete_graph(7),
    from_graph6("I?h]@eOWG"),  # Petersen graph
    disjoint_union(cycle_graph(5), cycle_graph(5)),
])
def test_canonical_form_on_regular_graphs(g):
    rng = random.Random(3)
    for _ in range(5):
        perm = list(range(g.n))
        rng.shuffle(perm)
        assert canonical_form(g.relabel(perm)) == canonical_form(g)

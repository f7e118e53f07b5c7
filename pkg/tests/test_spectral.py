import math
import random

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from spectral_turan import families as fam
from spectral_turan.graph import complete_graph, cycle_graph, disjoint_union, empty_graph, from_edge_list, path_graph
from spectral_turan.spectral import (
    STRICT_TOL,
    QuotientMatrix,
    char_poly,
    dense_spectral_radius,
    is_equitable,
    quadratic_form,
    quotient_matrix,
    spectral_radius,
    vertex_deletion_bound_holds,
    vertex_deletion_slack,
)
from spectral_turan.poly import Polynomial, largest_real_root

import oracles


@pytest.mark.parametrize("g,expected", [
    (complete_graph(6), 5.0),
    (cycle_graph(9), 2.0),
    (fam.star(16), 4.0),
    (path_graph(5), 2 * math.cos(math.pi / 6)),
    (fam.complete_bipartite(3, 12), 6.0),
    (fam.split_star(8, 2), (1 + math.sqrt(4 * 13 - 3)) / 2),
])
def test_closed_form_radii(g, expected):
    assert spectral_radius(g).rho == pytest.approx(expected, abs=1e-10)


def test_bipartite_graph_converges():
    # -rho is also an eigenvalue; the shift by I is what makes this converge
    r = spectral_radius(fam.star(50))
    assert r.rho == pytest.approx(math.sqrt(50), abs=1e-10)


def test_disconnected_takes_max_component():
    g = disjoint_union(cycle_graph(4), complete_graph(4))
    r = spectral_radius(g)
    assert r.rho == pytest.approx(3.0, abs=1e-10)
    assert r.perron is None
    assert spectral_radius(empty_graph(3)).rho == 0.0
    with pytest.raises(ValueError):
        spectral_radius(empty_graph(0))


def test_against_dense_solver(corpus):
    for g in corpus:
        assert abs(spectral_radius(g).rho - oracles.dense_rho(g)) < 1e-9


def test_perron_vector_positive_and_rayleigh(corpus):
    for g in corpus:
        r = spectral_radius(g)
        if r.perron is None:
            continue
        x = r.perron
        assert np.all(x > 0)
        assert abs(np.linalg.norm(x) - 1) < 1e-12
        assert abs(quadratic_form(g, x) - r.rho) < 1e-9
        assert r.residual < 1e-10


def test_quadratic_form_length_check():
    with pytest.raises(ValueError):
        quadratic_form(path_graph(3), [1.0, 1.0])


def test_vertex_deletion_equality_cases():
    k = complete_graph(6)
    assert all(abs(vertex_deletion_slack(k, v)) < 1e-9 for v in range(6))
    s = fam.star(7)
    assert abs(vertex_deletion_slack(s, 3)) < 1e-9
    assert vertex_deletion_slack(s, 0) > 1e-9
    with pytest.raises(ValueError):
        vertex_deletion_slack(from_edge_list(3, [(0, 1)]), 2)


@settings(max_examples=150, deadline=None)
@given(st.integers(0, 10**6))
def test_vertex_deletion_bound_property(seed):
    rng = random.Random(seed)
    g = oracles.random_connected_graph(rng, rng.randint(2, 12), rng.uniform(0, 0.6))
    v = rng.randrange(g.n)
    assert vertex_deletion_bound_holds(g, v)


def test_rotation_increases_rho():
    rng = random.Random(5)
    for g, h, u in oracles.rotation_triples(rng, 60, lambda g: spectral_radius(g).perron):
        x = spectral_radius(g).perron
        assert g.adj[u] & ~h.adj[u] == 0 and h.adj[u] != g.adj[u]
        assert quadratic_form(h, x) >= quadratic_form(g, x) - 1e-12
        assert spectral_radius(h).rho > spectral_radius(g).rho + STRICT_TOL


def test_quotient_of_star_matching():
    g = fam.star_matching(9, 2)
    q = quotient_matrix(g, [[0], [1, 2, 3, 4], [5, 6, 7, 8]])
    assert q.to_list() == [[0, 4, 4], [1, 1, 0], [1, 0, 0]]
    assert q.largest_eigenvalue() == pytest.approx(spectral_radius(g).rho, abs=1e-9)


def test_non_equitable_partition_rejected():
    g = path_graph(4)
    assert not is_equitable(g, [[0, 1], [2, 3]])
    with pytest.raises(ValueError):
        quotient_matrix(g, [[0, 1], [2, 3]])
    with pytest.raises(ValueError):
        quotient_matrix(g, [[0, 1], [1, 2, 3]])
    with pytest.raises(ValueError):
        quotient_matrix(g, [[0, 1], [2]])


@settings(max_examples=200, deadline=None)
@given(st.lists(st.lists(st.integers(-6, 6), min_size=5, max_size=5), min_size=5, max_size=5),
       st.integers(1, 5))
def test_char_poly_matches_numpy(rows, k):
    b = [r[:k] for r in rows[:k]]
    p = char_poly(b)
    ref = np.round(np.poly(np.array(b, dtype=float))).astype(int).tolist()
    assert p == Polynomial.from_descending(ref)


def test_char_poly_exact_for_large_entries():
    b = [[10**6, 3], [7, -10**6]]
    assert char_poly(b) == Polynomial.from_descending([1, 0, -(10**12) - 21])


def test_char_poly_overflow_guard():
    with pytest.raises(OverflowError):
        char_poly([[2**70, 0], [0, 2**70]])
    with pytest.raises(ValueError):
        char_poly([[1, 2]])


def test_quotient_root_equals_rho_for_k2r1_family():
    g = fam.family_F(25, 4)
    spec = fam.FamilySpec("F", {"m": 25, "t": 4})
    q = quotient_matrix(g, fam.standard_partition(spec))
    assert isinstance(q, QuotientMatrix) and q.k == 4
    assert abs(largest_real_root(char_poly(q)) - spectral_radius(g).rho) < 1e-9
    assert abs(dense_spectral_radius(g) - spectral_radius(g).rho) < 1e-9

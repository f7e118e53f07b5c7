import json
import random

import pytest

from spectral_turan import families as fam
from spectral_turan import verify as vf
from spectral_turan.graph import complete_graph, cycle_graph, from_edge_list
from spectral_turan.pattern import contains_k2r1
from spectral_turan.search import free_levels
from spectral_turan.pattern import THETA123


def test_verdict_json_is_sorted_and_finite_safe():
    v = vf.check_theorem_1_4(cycle_graph(5))
    d = json.loads(v.to_json())
    assert d["status"] == "inapplicable" and d["margin"] == "nan"


def test_nikiforov_bound():
    v = vf.check_nikiforov_bound(fam.complete_bipartite(5, 5), 2)
    assert v.holds and v.details["equality"]
    v = vf.check_nikiforov_bound(cycle_graph(7), 2)
    assert v.holds and v.margin > 0
    assert vf.check_nikiforov_bound(complete_graph(4), 2).status == "inapplicable"


def test_star_bound():
    v = vf.check_star_bound_k2r1(fam.star(20), 1)
    assert v.holds and v.details["equality"] and v.details["is_star"]
    v = vf.check_star_bound_k2r1(fam.star_matching(64, 1), 2)
    assert v.holds and v.margin > 0 and not v.exploratory
    v = vf.check_star_bound_k2r1(fam.star_matching(20, 1), 1)
    assert v.holds and v.margin > 0 and v.exploratory
    assert vf.check_star_bound_k2r1(cycle_graph(4), 1).status == "inapplicable"


def _greedy_c4_free(rng, n, tries):
    g = from_edge_list(n, [(0, v) for v in range(1, n) if rng.random() < 0.5] or [(0, 1)])
    for _ in range(tries):
        u, v = rng.sample(range(n), 2)
        if not g.has_edge(u, v) and not contains_k2r1(g.add_edge(u, v), 1):
            g = g.add_edge(u, v)
    return g


def test_star_bound_on_random_c4_free_graphs():
    rng = random.Random(9)
    checked = 0
    while checked < 100:
        g = _greedy_c4_free(rng, rng.randint(12, 30), rng.randint(10, 80))
        if g.size < 16:
            continue
        # r = 1 lies outside the claimed range, but the bound still holds here
        v = vf.check_star_bound_k2r1(g, 1)
        assert v.holds and v.exploratory
        checked += 1


def test_star_bound_below_threshold_is_exploratory():
    # K_{2,4}-free with 12 edges: the bound is not claimed here and indeed fails
    g = from_edge_list(7, [(0, 1), (0, 2), (0, 3), (0, 4), (1, 3), (1, 5), (1, 6),
                           (2, 3), (3, 5), (4, 5), (4, 6), (5, 6)])
    v = vf.check_star_bound_k2r1(g, 3)
    assert v.exploratory and v.status == "fail"


def test_theta_bound_extremal_and_guards():
    v = vf.check_theorem_1_4(fam.split_star(7, 2))
    assert v.holds and v.details["equality"] and abs(v.margin) < 1e-9
    assert vf.check_theorem_1_4(fam.split_star(5, 2)).status == "inapplicable"  # m = 7
    assert vf.check_theorem_1_4(fam.theta(2, 3, 4)).status == "pass"
    assert vf.check_theorem_1_4(complete_graph(5)).status == "inapplicable"
    assert vf.check_theorem_1_4(from_edge_list(12, [(i, i + 1) for i in range(9)])).status == "inapplicable"


@pytest.mark.parametrize("m", [8, 9])
def test_theta_bound_on_whole_class(m):
    for g in free_levels(m, THETA123)[-1]:
        assert vf.check_theorem_1_4(g).holds


def test_vertex_deletion_verdict():
    v = vf.check_vertex_deletion(complete_graph(5))
    assert v.holds and v.details["equality_vertices"] == [0, 1, 2, 3, 4]
    assert vf.check_vertex_deletion(from_edge_list(3, [])).status == "inapplicable"


@pytest.mark.parametrize("m", [18, 19, 50, 150])
def test_sec3_orderings(m):
    v = vf.check_sec3_orderings(m)
    assert v.status == "pass" and v.details["routes_agree"]
    assert vf.check_sec3_orderings(17).status == "inapplicable"


def test_valid_t():
    assert vf.valid_t(22) == [1, 3, 5, 7, 9, 11, 13, 15, 17, 19]
    assert vf.valid_t(23, 8) == [2, 4, 6, 8]


@pytest.mark.parametrize("m", [22, 23, 31, 60])
def test_pendant_family_ordering(m):
    v = vf.check_lemma_4_3(m)
    assert v.status == "pass" and v.details["routes_agree"]
    assert v.details["f3_at_point"] < 0
    assert vf.check_lemma_4_3(21).status == "inapplicable"


def test_neighbourhood_structure():
    v = vf.check_neighborhood_structure(fam.family_F(23, 2), 0)
    assert v.holds and v.details["components"] == ["isolated", "isolated", "star K_1,10"]
    v = vf.check_neighborhood_structure(fam.split_star(7, 2), 0)
    assert v.holds
    w = fam.star(4).add_edge(1, 2).add_edge(2, 3).add_edge(3, 4)
    assert not vf.check_neighborhood_structure(w, 0).holds


def test_neighbourhood_of_triangle_component():
    g = fam.star(3).add_edge(1, 2).add_edge(2, 3).add_edge(1, 3)
    assert vf.check_neighborhood_structure(g, 0).details["components"] == ["triangle"]


def test_max_perron_vertex():
    assert vf.max_perron_vertex(fam.family_F(22, 1)) == 0
    with pytest.raises(ValueError):
        vf.max_perron_vertex(from_edge_list(4, [(0, 1), (2, 3)]))


@pytest.mark.parametrize("m", [9, 10, 11])
def test_neighbourhood_structure_on_small_maximisers(m):
    from spectral_turan.search import extremal_search
    from spectral_turan.graph import from_graph6
    for code in extremal_search(m, THETA123).argmax:
        g = from_graph6(code)
        assert vf.check_neighborhood_structure(g, vf.max_perron_vertex(g)).holds

"""Independent reference implementations used only by the tests."""
import itertools

import networkx as nx
import numpy as np
from networkx.algorithms import isomorphism

from spectral_turan.graph import Graph, from_edge_list


def to_nx(g: Graph) -> nx.Graph:
    h = nx.Graph()
    h.add_nodes_from(range(g.n))
    h.add_edges_from(g.edges())
    return h


def brute_canonical(g: Graph) -> tuple:
    """Least sorted edge list over all n! relabellings."""
    best = None
    edges = g.edges()
    for perm in itertools.permutations(range(g.n)):
        key = tuple(sorted(tuple(sorted((perm[u], perm[v]))) for u, v in edges))
        if best is None or key < best:
            best = key
    return (g.n, best)


def nx_contains(g: Graph, f: Graph) -> bool:
    gm = isomorphism.GraphMatcher(to_nx(g), to_nx(f))
    return gm.subgraph_is_monomorphic()


def components(g: Graph) -> int:
    return nx.number_connected_components(to_nx(g)) if g.n else 0


def deletion_cut_vertices(g: Graph) -> set:
    base = components(g)
    out = set()
    for v in range(g.n):
        h = to_nx(g)
        h.remove_node(v)
        if nx.number_connected_components(h) > base:
            out.add(v)
    return out


def dense_rho(g: Graph) -> float:
    if g.n == 0:
        return 0.0
    return float(np.linalg.eigvalsh(g.to_numpy())[-1])


def labeled_connected_classes(m: int, pattern_graph: Graph | None = None) -> int:
    """Isomorphism classes of connected graphs with m edges, no isolated vertices,
    found by brute force over labelled edge sets and grouped with networkx."""
    n = m + 1
    pairs = list(itertools.combinations(range(n), 2))
    reps: dict = {}
    count = 0
    for es in itertools.combinations(pairs, m):
        used = sorted({v for e in es for v in e})
        # only edge sets whose vertices are an initial segment, to cut repeats
        if used != list(range(len(used))):
            continue
        g = from_edge_list(len(used), es)
        h = to_nx(g)
        if not nx.is_connected(h):
            continue
        if pattern_graph is not None and nx_contains(g, pattern_graph):
            continue
        key = nx.weisfeiler_lehman_graph_hash(h)
        bucket = reps.setdefault(key, [])
        if any(nx.is_isomorphic(h, o) for o in bucket):
            continue
        bucket.append(h)
        count += 1
    return count


def random_graph(rng, n: int, p: float) -> Graph:
    return from_edge_list(n, [(u, v) for u in range(n) for v in range(u + 1, n) if rng.random() < p])


def random_connected_graph(rng, n: int, p: float) -> Graph:
    # random spanning tree plus extra edges
    edges = {(rng.randrange(v), v) for v in range(1, n)}
    edges |= {(u, v) for u in range(n) for v in range(u + 1, n) if rng.random() < p}
    return from_edge_list(n, edges)


def rotation_triples(rng, count: int, perron):
    """(G, G', u): move edges vw (w in S) over to uw, where x_u >= x_v.

    Then N_G(u) is a proper subset of N_G'(u) and X^T A' X >= X^T A X.
    """
    out = []
    while len(out) < count:
        g = random_connected_graph(rng, rng.randint(4, 14), rng.uniform(0.05, 0.5))
        x = perron(g)
        u, v = rng.sample(range(g.n), 2)
        if x[u] < x[v]:
            u, v = v, u
        cand = [w for w in g.neighbors(v) if w != u and not g.has_edge(u, w)]
        if not cand:
            continue
        s = rng.sample(cand, rng.randint(1, len(cand)))
        h = g
        for w in s:
            h = h.remove_edge(v, w).add_edge(u, w)
        out.append((g, h, u))
    return out

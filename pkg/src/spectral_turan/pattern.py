"""Forbidden-subgraph detection (subgraph containment, not induced)."""
from __future__ import annotations

from dataclasses import dataclass

from .graph import Graph, bits, from_graph6, popcount, to_graph6


@dataclass(frozen=True)
class PatternId:
    kind: str  # "k2r1", "theta123" or "generic"
    r: int = 0
    graph: Graph | None = None

    def __post_init__(self):
        if self.kind not in ("k2r1", "theta123", "generic"):
            raise ValueError(f"unknown pattern kind {self.kind!r}")
        if self.kind == "k2r1" and self.r < 1:
            raise ValueError("K_{2,r+1} needs r >= 1")
        if self.kind == "generic" and self.graph is None:
            raise ValueError("generic pattern needs a graph")

    def __str__(self):
        if self.kind == "k2r1":
            return f"k2r1:{self.r}"
        if self.kind == "theta123":
            return "theta123"
        return "g6:" + to_graph6(self.graph)

    @classmethod
    def parse(cls, text: str) -> "PatternId":
        if text == "theta123":
            return cls("theta123")
        if text.startswith("k2r1:"):
            return cls("k2r1", r=int(text[5:]))
        if text.startswith("g6:"):
            return cls("generic", graph=from_graph6(text[3:]))
        # a bare graph6 string is accepted for generic patterns
        return cls("generic", graph=from_graph6(text))


THETA123 = PatternId("theta123")


def K2R1(r: int) -> PatternId:
    return PatternId("k2r1", r=r)


# -- K_{2,r+1} -----------------------------------------------------------------

def contains_k2r1(g: Graph, r: int) -> bool:
    if r < 1:
        raise ValueError("r must be >= 1")
    adj = g.adj
    need = r + 1
    for u in range(g.n):
        au = adj[u]
        if popcount(au) < need:
            continue
        for v in range(u + 1, g.n):
            if popcount(au & adj[v]) >= need:
                return True
    return False


# -- theta_{1,2,3} -------------------------------------------------------------

def _theta_on_edge(adj, a: int, b: int) -> bool:
    na, nb = adj[a], adj[b]
    common = na & nb
    if not common:
        return False
    for w in bits(common):
        xs = na & ~((1 << b) | (1 << w))
        ys = nb & ~((1 << a) | (1 << w))
        if not ys:
            continue
        for x in bits(xs):
            if adj[x] & ys & ~(1 << x):
                return True
    return False


def contains_theta123(g: Graph) -> bool:
    """Edge ab, common neighbour w, and a path a-x-y-b avoiding w."""
    adj = g.adj
    for a in range(g.n):
        for b in bits(adj[a] >> (a + 1) << (a + 1)):
            if _theta_on_edge(adj, a, b):
                return True
    return False


# -- generic containment -------------------------------------------------------

def contains_subgraph(g: Graph, f: Graph) -> bool:
    """Injective edge-preserving map V(F) -> V(G), by backtracking.

    Pattern vertices are matched in a connected, degree-first order; each
    candidate must have enough degree and be adjacent to the images of all
    already-placed pattern neighbours.
    """
    if f.n == 0:
        return True
    if f.n > g.n or f.size > g.size:
        return False
    fdeg = f.degrees()
    gdeg = g.degrees()
    order: list[int] = []
    placed = 0
    while len(order) < f.n:
        frontier = 0
        for v in order:
            frontier |= f.adj[v]
        frontier &= ~placed
        pool = list(bits(frontier)) or [v for v in range(f.n) if not placed >> v & 1]
        v = max(pool, key=lambda x: (popcount(f.adj[x] & placed), fdeg[x], -x))
        order.append(v)
        placed |= 1 << v
    back = [[j for j in range(i) if f.has_edge(order[i], order[j])] for i in range(f.n)]
    cand = [sum(1 << w for w in range(g.n) if gdeg[w] >= fdeg[order[i]]) for i in range(f.n)]
    image = [0] * f.n

    def extend(i: int, used: int) -> bool:
        if i == f.n:
            return True
        options = cand[i] & ~used
        for j in back[i]:
            options &= g.adj[image[j]]
            if not options:
                return False
        for w in bits(options):
            image[i] = w
            if extend(i + 1, used | (1 << w)):
                return True
        return False

    return extend(0, 0)


def contains(g: Graph, pattern: PatternId | None) -> bool:
    if pattern is None:
        return False
    if pattern.kind == "k2r1":
        return contains_k2r1(g, pattern.r)
    if pattern.kind == "theta123":
        return contains_theta123(g)
    return contains_subgraph(g, pattern.graph)


def incremental_free_check(g: Graph, new_edge: tuple[int, int], pattern: PatternId | None) -> bool:
    """Whether G + new_edge is still pattern-free, given G already is.

    Only occurrences through the new edge are examined.
    """
    a, b = new_edge
    if g.has_edge(a, b):
        raise ValueError(f"edge ({a}, {b}) already present")
    h = g.add_edge(a, b)
    return not occurs_through(h.adj, a, b, pattern)


def occurs_through(adj, a: int, b: int, pattern: PatternId | None) -> bool:
    """Whether the graph with rows ``adj`` has a copy of the pattern using edge ab.

    Assumes the graph minus ab is pattern-free (for generic patterns the whole
    graph is searched instead).
    """
    if pattern is None:
        return False
    if pattern.kind == "k2r1":
        need = pattern.r + 1
        # b became a common neighbour of (a, z) for z in N(b), symmetrically for a
        for x, y in ((a, b), (b, a)):
            ax = adj[x]
            z_set = adj[y] & ~(1 << x)
            while z_set:
                low = z_set & -z_set
                if (ax & adj[low.bit_length() - 1]).bit_count() >= need:
                    return True
                z_set ^= low
        return False
    if pattern.kind == "theta123":
        # theta_{1,2,3} has diameter 2, so the chord of any copy through ab
        # lies in the radius-2 ball around a
        ball = adj[a] | (1 << a)
        for v in bits(adj[a]):
            ball |= adj[v]
        for p in bits(ball):
            for q in bits(adj[p] & ball & ~((1 << (p + 1)) - 1)):
                if _theta_on_edge(adj, p, q):
                    return True
        return False
    return contains_subgraph(Graph(len(adj), tuple(adj)), pattern.graph)

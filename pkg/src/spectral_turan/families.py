"""Constructors for the named extremal graphs.

Vertex order is fixed per constructor (centres first, then R, then T, then the
remaining leaves) and :func:`standard_partition` returns the block structure
that goes with it, so quotient matrices can be formed without searching.
"""
from __future__ import annotations

import json
from dataclasses import dataclass, field

from .graph import Graph, from_edge_list

FAMILIES = (
    "Star",
    "StarMatching",
    "SplitStar",
    "F",
    "Theta",
    "CompleteBipartite",
    "DoubleStar",
    "HFigure1",
    "HtsK1r",
)


def star(m: int) -> Graph:
    """K_{1,m}: centre 0, leaves 1..m."""
    if m < 1:
        raise ValueError("star needs m >= 1")
    return from_edge_list(m + 1, [(0, i) for i in range(1, m + 1)])


def star_matching(n: int, k: int) -> Graph:
    """S_n^k: centre 0 joined to 1..n-1, plus edges (1,2), (3,4), ... k of them."""
    if k < 0 or n < 2 * k + 1 or n < 1:
        raise ValueError(f"star_matching needs n >= 2k+1, got n={n}, k={k}")
    edges = [(0, i) for i in range(1, n)]
    edges += [(2 * i + 1, 2 * i + 2) for i in range(k)]
    return from_edge_list(n, edges)


def split_star(n: int, k: int) -> Graph:
    """S_{n,k} = K_k joined to n-k independent vertices; clique is 0..k-1."""
    if not 1 <= k <= n:
        raise ValueError(f"split_star needs 1 <= k <= n, got n={n}, k={k}")
    edges = [(u, v) for u in range(k) for v in range(u + 1, n)]
    return from_edge_list(n, edges)


def family_F_sizes(m: int, t: int) -> int:
    """|R| for F_{m,t}; raises on parity or range violations."""
    if t < 0:
        raise ValueError("t must be nonnegative")
    if m <= t + 1:
        raise ValueError(f"F_{{m,t}} needs m > t+1, got m={m}, t={t}")
    if (m - t) % 2 == 0:
        raise ValueError(f"F_{{m,t}} needs m-t odd, got m={m}, t={t}")
    return (m - t - 1) // 2


def family_F(m: int, t: int) -> Graph:
    """F_{m,t}: order is v=0, u=1, R=2..|R|+1, T after R.

    v and u are adjacent, both see all of R, and v alone sees the t pendant
    vertices of T.
    """
    r = family_F_sizes(m, t)
    R = range(2, 2 + r)
    T = range(2 + r, 2 + r + t)
    edges = [(0, 1)] + [(0, x) for x in R] + [(1, x) for x in R] + [(0, x) for x in T]
    return from_edge_list(2 + r + t, edges)


def theta(p: int, q: int, r: int) -> Graph:
    """theta_{p,q,r}: endpoints 0 and 1, then internal vertices path by path."""
    if not (1 <= p <= q <= r) or q < 2:
        raise ValueError(f"theta needs 1 <= p <= q <= r and q >= 2, got {(p, q, r)}")
    n = p + q + r - 1
    edges = []
    nxt = 2
    for length in (p, q, r):
        prev = 0
        for _ in range(length - 1):
            edges.append((prev, nxt))
            prev = nxt
            nxt += 1
        edges.append((prev, 1))
    return from_edge_list(n, edges)


def complete_bipartite(a: int, b: int) -> Graph:
    """K_{a,b}: side A is 0..a-1, side B follows."""
    if a < 1 or b < 1:
        raise ValueError("complete_bipartite needs both parts nonempty")
    return from_edge_list(a + b, [(i, a + j) for i in range(a) for j in range(b)])


def double_star(i: int, j: int) -> Graph:
    """D_{i,j}: centres 0 (i leaves) and 1 (j leaves)."""
    if i < 1 or j < 1:
        raise ValueError("double_star needs i, j >= 1")
    edges = [(0, 1)] + [(0, 2 + a) for a in range(i)] + [(1, 2 + i + b) for b in range(j)]
    return from_edge_list(2 + i + j, edges)


def h_figure1(m: int) -> Graph:
    """H: u*=0, u1=1, u2=2, u3=3, S1=4..; path u1-u2-u3 inside N(u*)."""
    if m < 6:
        raise ValueError("h_figure1 needs m >= 6")
    n = m - 1
    edges = [(0, x) for x in range(1, n)] + [(1, 2), (2, 3)]
    return from_edge_list(n, edges)


def hts_k1r(t: int, s: int, r: int, bip_edges=(), require_min_degree: bool = False) -> Graph:
    """H_{t,s} o K_{1,r}.

    Order: v=0, star centre 1, star leaves 2..r+1, then T (t vertices), then S.
    ``bip_edges`` holds (T-index, S-index) pairs, both zero-based.
    """
    if r < 1 or t < 1 or s < 0:
        raise ValueError(f"hts_k1r needs r >= 1, t >= 1, s >= 0, got t={t}, s={s}, r={r}")
    t0 = r + 2
    s0 = t0 + t
    edges = [(0, 1)] + [(0, 2 + a) for a in range(r)] + [(1, 2 + a) for a in range(r)]
    edges += [(0, t0 + a) for a in range(t)]
    for a, b in bip_edges:
        if not (0 <= a < t and 0 <= b < s):
            raise ValueError(f"bipartite edge ({a}, {b}) out of range for t={t}, s={s}")
        edges.append((t0 + a, s0 + b))
    g = from_edge_list(s0 + s, edges)
    if require_min_degree and any(g.degree(s0 + b) < 2 for b in range(s)):
        raise ValueError("every S-vertex must have degree >= 2 in H_{t,s}")
    return g


# -- specs ---------------------------------------------------------------------

@dataclass(frozen=True)
class FamilySpec:
    family: str
    params: dict = field(default_factory=dict)

    def __post_init__(self):
        if self.family not in FAMILIES:
            raise ValueError(f"unknown family {self.family!r}; expected one of {FAMILIES}")

    def to_json(self) -> str:
        return json.dumps({"family": self.family, "params": self.params}, sort_keys=True)

    @classmethod
    def from_json(cls, text: str | dict) -> "FamilySpec":
        obj = json.loads(text) if isinstance(text, str) else text
        if not isinstance(obj, dict) or "family" not in obj:
            raise ValueError("family spec must be an object with a 'family' key")
        return cls(obj["family"], dict(obj.get("params", {})))


def _p(params: dict, *names):
    missing = [k for k in names if k not in params]
    if missing:
        raise ValueError(f"missing parameter(s): {', '.join(missing)}")
    return [params[k] for k in names]


def build(spec: FamilySpec) -> Graph:
    p = spec.params
    f = spec.family
    if f == "Star":
        return star(*_p(p, "m"))
    if f == "StarMatching":
        return star_matching(*_p(p, "n", "k"))
    if f == "SplitStar":
        return split_star(*_p(p, "n", "k"))
    if f == "F":
        return family_F(*_p(p, "m", "t"))
    if f == "Theta":
        return theta(*_p(p, "p", "q", "r"))
    if f == "CompleteBipartite":
        return complete_bipartite(*_p(p, "a", "b"))
    if f == "DoubleStar":
        return double_star(*_p(p, "i", "j"))
    if f == "HFigure1":
        return h_figure1(*_p(p, "m"))
    t, s, r = _p(p, "t", "s", "r")
    return hts_k1r(t, s, r, [tuple(e) for e in p.get("bip_edges", [])])


def standard_partition(spec: FamilySpec) -> list[list[int]]:
    """Equitable partition matching the constructor's vertex order.

    F uses (T, {v}, {u}, R) and HFigure1 uses ({u*}, {u1}, {u2}, {u3}, S1), the
    orders under which the closed-form quotient matrices are written.
    """
    p = spec.params
    f = spec.family
    if f == "F":
        m, t = _p(p, "m", "t")
        r = family_F_sizes(m, t)
        blocks = [list(range(2 + r, 2 + r + t)), [0], [1], list(range(2, 2 + r))]
        return [b for b in blocks if b]
    if f == "HFigure1":
        (m,) = _p(p, "m")
        h_figure1(m)
        return [[0], [1], [2], [3], list(range(4, m - 1))]
    if f == "Star":
        (m,) = _p(p, "m")
        return [[0], list(range(1, m + 1))]
    if f == "StarMatching":
        n, k = _p(p, "n", "k")
        star_matching(n, k)
        blocks = [[0], list(range(1, 2 * k + 1)), list(range(2 * k + 1, n))]
        return [b for b in blocks if b]
    if f == "SplitStar":
        n, k = _p(p, "n", "k")
        split_star(n, k)
        return [b for b in (list(range(k)), list(range(k, n))) if b]
    if f == "CompleteBipartite":
        a, b = _p(p, "a", "b")
        return [list(range(a)), list(range(a, a + b))]
    if f == "DoubleStar":
        i, j = _p(p, "i", "j")
        return [[0], [1], list(range(2, 2 + i)), list(range(2 + i, 2 + i + j))]
    raise ValueError(f"no standard partition for family {f}")

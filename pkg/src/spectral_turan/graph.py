"""Simple undirected graphs stored as bitset adjacency rows.

Each row is a Python int used as a bitset over vertex indices, so neighbourhood
intersections and degree counts are single integer operations.  Graphs are
immutable; every builder returns a new object.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Iterator, Sequence

MAX_VERTICES = 4096


def bits(x: int) -> Iterator[int]:
    """Yield the indices of the set bits of ``x`` in increasing order."""
    while x:
        low = x & -x
        yield low.bit_length() - 1
        x ^= low


popcount = int.bit_count


@dataclass(frozen=True)
class Graph:
    n: int
    adj: tuple[int, ...]

    def __post_init__(self):
        if not 0 <= self.n <= MAX_VERTICES:
            raise ValueError(f"vertex count {self.n} outside [0, {MAX_VERTICES}]")
        if len(self.adj) != self.n:
            raise ValueError("need exactly one adjacency row per vertex")
        full = (1 << self.n) - 1
        for u, row in enumerate(self.adj):
            if row & ~full:
                raise ValueError(f"row {u} references a vertex >= n")
            if row >> u & 1:
                raise ValueError(f"loop at vertex {u}")
            for v in bits(row):
                if not self.adj[v] >> u & 1:
                    raise ValueError(f"asymmetric adjacency between {u} and {v}")

    # -- basic queries -------------------------------------------------------
    @property
    def size(self) -> int:
        return sum(popcount(r) for r in self.adj) // 2

    def degree(self, v: int) -> int:
        return popcount(self.adj[v])

    def degrees(self) -> list[int]:
        return [popcount(r) for r in self.adj]

    def neighbors(self, v: int) -> list[int]:
        return list(bits(self.adj[v]))

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self.adj[u] >> v & 1)

    def edges(self) -> list[tuple[int, int]]:
        return [(u, v) for u in range(self.n) for v in bits(self.adj[u] >> (u + 1) << (u + 1))]

    def isolated_vertices(self) -> list[int]:
        return [v for v, r in enumerate(self.adj) if r == 0]

    # -- builders ------------------------------------------------------------
    def add_edge(self, u: int, v: int) -> "Graph":
        _check_pair(self.n, u, v)
        if self.has_edge(u, v):
            raise ValueError(f"edge ({u}, {v}) already present")
        adj = list(self.adj)
        adj[u] |= 1 << v
        adj[v] |= 1 << u
        return Graph(self.n, tuple(adj))

    def remove_edge(self, u: int, v: int) -> "Graph":
        if not self.has_edge(u, v):
            raise ValueError(f"edge ({u}, {v}) not present")
        adj = list(self.adj)
        adj[u] &= ~(1 << v)
        adj[v] &= ~(1 << u)
        return Graph(self.n, tuple(adj))

    def add_vertex(self) -> "Graph":
        return Graph(self.n + 1, self.adj + (0,))

    def relabel(self, order: Sequence[int]) -> "Graph":
        """Graph whose vertex i is ``order[i]`` of this graph."""
        pos = [0] * self.n
        for i, v in enumerate(order):
            pos[v] = i
        adj = []
        for v in order:
            row = 0
            for w in bits(self.adj[v]):
                row |= 1 << pos[w]
            adj.append(row)
        return Graph(self.n, tuple(adj))

    def to_numpy(self):
        import numpy as np

        a = np.zeros((self.n, self.n))
        for u, v in self.edges():
            a[u, v] = a[v, u] = 1.0
        return a

    def __repr__(self):
        return f"Graph(n={self.n}, edges={self.edges()})"


def _check_pair(n: int, u: int, v: int) -> None:
    if not (0 <= u < n and 0 <= v < n):
        raise ValueError(f"endpoint of ({u}, {v}) out of range for n={n}")
    if u == v:
        raise ValueError(f"loop edge ({u}, {u})")


def _trusted(n: int, adj: Sequence[int]) -> Graph:
    # skips validation; callers guarantee symmetric loopless rows
    g = object.__new__(Graph)
    object.__setattr__(g, "n", n)
    object.__setattr__(g, "adj", tuple(adj))
    return g


def from_edge_list(n: int, edges: Iterable[tuple[int, int]]) -> Graph:
    """Build a graph on ``n`` vertices; repeated pairs collapse to one edge."""
    if not 0 <= n <= MAX_VERTICES:
        raise ValueError(f"vertex count {n} outside [0, {MAX_VERTICES}]")
    adj = [0] * n
    for u, v in edges:
        _check_pair(n, u, v)
        adj[u] |= 1 << v
        adj[v] |= 1 << u
    return _trusted(n, adj)


def empty_graph(n: int) -> Graph:
    return from_edge_list(n, [])


def complete_graph(n: int) -> Graph:
    return from_edge_list(n, [(u, v) for u in range(n) for v in range(u + 1, n)])


def path_graph(n: int) -> Graph:
    return from_edge_list(n, [(i, i + 1) for i in range(n - 1)])


def cycle_graph(n: int) -> Graph:
    if n < 3:
        raise ValueError("cycle needs at least 3 vertices")
    return from_edge_list(n, [(i, (i + 1) % n) for i in range(n)])


def disjoint_union(g: Graph, h: Graph) -> Graph:
    return _trusted(g.n + h.n, list(g.adj) + [r << g.n for r in h.adj])


# -- connectivity --------------------------------------------------------------

def component_masks(g: Graph, within: int | None = None) -> list[int]:
    """Connected components as vertex bitsets, optionally restricted to ``within``."""
    remaining = ((1 << g.n) - 1) if within is None else within
    comps = []
    while remaining:
        seed = remaining & -remaining
        comp = seed
        frontier = seed
        while frontier:
            nxt = 0
            for v in bits(frontier):
                nxt |= g.adj[v]
            nxt &= remaining & ~comp
            comp |= nxt
            frontier = nxt
        comps.append(comp)
        remaining &= ~comp
    return comps


def is_connected(g: Graph) -> bool:
    if g.n == 0:
        raise ValueError("connectivity of the empty graph is undefined")
    return len(component_masks(g)) == 1


def cut_vertices(g: Graph) -> set[int]:
    """Articulation points via iterative Tarjan low-link."""
    if g.n == 0 or not is_connected(g):
        raise ValueError("cut vertices require a connected graph")
    disc = [-1] * g.n
    low = [0] * g.n
    cuts: set[int] = set()
    timer = 0
    disc[0] = low[0] = timer
    root_children = 0
    stack = [(0, -1, iter(bits(g.adj[0])))]
    while stack:
        v, parent, it = stack[-1]
        advanced = False
        for w in it:
            if disc[w] == -1:
                timer += 1
                disc[w] = low[w] = timer
                stack.append((w, v, iter(bits(g.adj[w]))))
                advanced = True
                break
            if w != parent:
                low[v] = min(low[v], disc[w])
        if advanced:
            continue
        stack.pop()
        if parent == -1:
            continue
        low[parent] = min(low[parent], low[v])
        if parent == 0:
            root_children += 1
        elif low[v] >= disc[parent]:
            cuts.add(parent)
    if root_children > 1:
        cuts.add(0)
    return cuts


def induced_subgraph(g: Graph, vertices: Sequence[int]) -> tuple[Graph, list[int]]:
    """Induced subgraph on ``vertices`` (kept in the given order) plus the index map."""
    verts = list(vertices)
    pos = {v: i for i, v in enumerate(verts)}
    adj = []
    for v in verts:
        row = 0
        for w in bits(g.adj[v]):
            if w in pos:
                row |= 1 << pos[w]
        adj.append(row)
    return _trusted(len(verts), adj), verts


def induced_neighborhood(g: Graph, v: int) -> tuple[Graph, list[int]]:
    if not 0 <= v < g.n:
        raise ValueError(f"vertex {v} out of range")
    return induced_subgraph(g, list(bits(g.adj[v])))


def delete_vertex(g: Graph, v: int) -> Graph:
    return induced_subgraph(g, [w for w in range(g.n) if w != v])[0]


def drop_isolated(g: Graph) -> Graph:
    keep = [v for v in range(g.n) if g.adj[v]]
    if len(keep) == g.n:
        return g
    return induced_subgraph(g, keep)[0]


# -- graph6 --------------------------------------------------------------------

def _n_prefix(n: int) -> bytes:
    if n <= 62:
        return bytes([n + 63])
    if n <= 258047:
        return bytes([126] + [((n >> s) & 63) + 63 for s in (12, 6, 0)])
    return bytes([126, 126] + [((n >> s) & 63) + 63 for s in (30, 24, 18, 12, 6, 0)])


def to_graph6(g: Graph) -> str:
    out = bytearray(_n_prefix(g.n))
    acc = nbits = 0
    for j in range(1, g.n):
        row = g.adj[j]
        for i in range(j):
            acc = (acc << 1) | (row >> i & 1)
            nbits += 1
            if nbits == 6:
                out.append(acc + 63)
                acc = nbits = 0
    if nbits:
        out.append((acc << (6 - nbits)) + 63)
    return out.decode("ascii")


def from_graph6(s: str) -> Graph:
    data = s.strip()
    if data.startswith(">>graph6<<"):
        data = data[10:]
    raw = data.encode("ascii")
    if any(not 63 <= c <= 126 for c in raw):
        raise ValueError("graph6 characters must lie in [63, 126]")
    if not raw:
        raise ValueError("empty graph6 string")
    if raw[0] != 126:
        n, body = raw[0] - 63, raw[1:]
    elif len(raw) > 1 and raw[1] == 126:
        n = 0
        for c in raw[2:8]:
            n = (n << 6) | (c - 63)
        body = raw[8:]
    else:
        n = 0
        for c in raw[1:4]:
            n = (n << 6) | (c - 63)
        body = raw[4:]
    need = n * (n - 1) // 2
    if len(body) != (need + 5) // 6:
        raise ValueError(f"graph6 body has {len(body)} bytes, expected {(need + 5) // 6}")
    edges = []
    k = 0
    for j in range(1, n):
        for i in range(j):
            if (body[k // 6] - 63) >> (5 - k % 6) & 1:
                edges.append((i, j))
            k += 1
    return from_edge_list(n, edges)


# -- canonical form ------------------------------------------------------------

def _refine(adj: Sequence[int], cells: list[int]) -> list[int]:
    """Coarsest equitable refinement of an ordered partition (cells as bitsets).

    Cells split by neighbour count into a splitter cell; fragments take the
    old cell's place ordered by that count.  Splitters are consumed in queue
    order, so the ordered result depends only on the isomorphism type of
    (graph, ordered partition).  When a processed cell splits, its largest
    fragment need not be queued again.
    """
    cells = list(cells)
    queue = list(cells)
    queued = set(queue)
    while queue:
        splitter = queue.pop(0)
        queued.discard(splitter)
        i = 0
        while i < len(cells):
            cell = cells[i]
            if cell & (cell - 1) == 0:
                i += 1
                continue
            groups: dict[int, int] = {}
            x = cell
            while x:
                low = x & -x
                v = low.bit_length() - 1
                c = (adj[v] & splitter).bit_count()
                groups[c] = groups.get(c, 0) | low
                x ^= low
            if len(groups) == 1:
                i += 1
                continue
            frags = [groups[c] for c in sorted(groups)]
            cells[i:i + 1] = frags
            if cell in queued:
                queue[queue.index(cell):queue.index(cell) + 1] = frags
                queued.discard(cell)
                queued.update(frags)
            else:
                biggest = max(range(len(frags)), key=lambda j: (frags[j].bit_count(), -j))
                for j, f in enumerate(frags):
                    if j != biggest:
                        queue.append(f)
                        queued.add(f)
            i += len(frags)
    return cells


def _code_for(adj: Sequence[int], order: Sequence[int]) -> int:
    n = len(order)
    pos = [0] * n
    for i, v in enumerate(order):
        pos[v] = i
    # graph6 bit order: column j, rows i < j, read MSB first
    key = 0
    for j in range(1, n):
        row = adj[order[j]]
        col = 0
        for w in bits(row):
            p = pos[w]
            if p < j:
                col |= 1 << (j - 1 - p)
        key = (key << j) | col
    return key


def _twin_classes(adj: Sequence[int], n: int) -> list[int]:
    """Representative of each vertex's twin class (equal open or closed nbhds)."""
    rep = list(range(n))
    seen_open: dict[int, int] = {}
    seen_closed: dict[int, int] = {}
    for v in range(n):
        o = adj[v]
        c = o | (1 << v)
        if o in seen_open:
            rep[v] = seen_open[o]
        elif c in seen_closed:
            rep[v] = seen_closed[c]
        else:
            seen_open[o] = v
            seen_closed[c] = v
    return rep


def canonical_order(g: Graph) -> list[int]:
    """Vertex order giving the lexicographically least graph6 adjacency string.

    Individualise-refine search over the equitable refinement of the degree
    partition.  Branches are pruned by twin classes and by automorphisms
    discovered from coinciding leaves; both only skip branches whose leaf set
    is the image of one already explored, so the minimum is unaffected.
    """
    n = g.n
    if n <= 1:
        return list(range(n))
    adj = g.adj
    by_deg: dict[int, int] = {}
    for v in range(n):
        d = popcount(adj[v])
        by_deg[d] = by_deg.get(d, 0) | (1 << v)
    root = _refine(adj, [by_deg[d] for d in sorted(by_deg)])
    twin = _twin_classes(adj, n)

    best_key: int | None = None
    best_order: list[int] = []
    leaf_by_key: dict[int, list[int]] = {}
    autos: list[list[int]] = []

    def stabilised_orbits(prefix: list[int], cell: int) -> dict[int, int]:
        parent = {v: v for v in bits(cell)}

        def find(x):
            while parent[x] != x:
                parent[x] = parent[parent[x]]
                x = parent[x]
            return x

        for a in autos:
            if all(a[p] == p for p in prefix):
                for v in list(parent):
                    w = a[v]
                    if w in parent:
                        rv, rw = find(v), find(w)
                        if rv != rw:
                            parent[max(rv, rw)] = min(rv, rw)
        return {v: find(v) for v in parent}

    def search(cells: list[int], prefix: list[int]) -> None:
        nonlocal best_key, best_order
        target = -1
        for i, c in enumerate(cells):
            if c & (c - 1):
                if target < 0 or popcount(c) < popcount(cells[target]):
                    target = i
        if target < 0:
            order = [c.bit_length() - 1 for c in cells]
            key = _code_for(adj, order)
            if key in leaf_by_key:
                other = leaf_by_key[key]
                perm = [0] * n
                for a, b in zip(other, order):
                    perm[a] = b
                autos.append(perm)
            else:
                leaf_by_key[key] = order
            if best_key is None or key < best_key:
                best_key, best_order = key, order
            return
        cell = cells[target]
        tried_twins: set[int] = set()
        tried: list[int] = []
        for v in bits(cell):
            if twin[v] in tried_twins:
                continue
            if tried and autos:
                orbit = stabilised_orbits(prefix, cell)
                if any(orbit[u] == orbit[v] for u in tried):
                    continue
            tried_twins.add(twin[v])
            tried.append(v)
            child = cells[:target] + [1 << v, cell & ~(1 << v)] + cells[target + 1:]
            search(_refine(adj, child), prefix + [v])

    search(root, [])
    return best_order


def canonical_form(g: Graph) -> bytes:
    """Isomorphism-class code: graph6 bytes of the canonically relabelled graph."""
    return to_graph6(g.relabel(canonical_order(g))).encode("ascii")


def canonical_graph(g: Graph) -> Graph:
    return g.relabel(canonical_order(g))

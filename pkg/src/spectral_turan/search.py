"""Isomorph-free enumeration of connected pattern-free graphs by edge count,
extremal reporting, and a hill-climbing probe for larger sizes."""
from __future__ import annotations

import json
import os
import random
import time
from dataclasses import asdict, dataclass, field
from typing import Callable, Iterable

import numpy as np

from .graph import Graph, _trusted, bits, canonical_form, from_graph6, to_graph6
from .pattern import PatternId, contains, occurs_through
from .spectral import spectral_radius

MAX_EXHAUSTIVE_M = 12
MAX_HILL_CLIMB_M = 500
TIE_BAND = 1e-9
IMPROVE_TOL = 1e-12


def _children(g: Graph, pattern: PatternId | None) -> Iterable[Graph]:
    """One-edge extensions that stay pattern-free: chords and pendant edges."""
    adj = g.adj
    n = g.n
    for u in range(n):
        non = ~adj[u] & ((1 << n) - 1) & ~((1 << (u + 1)) - 1)
        for v in bits(non):
            new = list(adj)
            new[u] |= 1 << v
            new[v] |= 1 << u
            if not occurs_through(new, u, v, pattern):
                yield _trusted(n, new)
    for u in range(n):
        new = list(adj) + [1 << u]
        new[u] |= 1 << n
        # a pendant edge cannot complete a 2-connected pattern; generic ones may have leaves
        if pattern is not None and pattern.kind == "generic" and occurs_through(new, u, n, pattern):
            continue
        yield _trusted(n + 1, new)


def _expand(parents: list[Graph], pattern: PatternId | None) -> dict[bytes, Graph]:
    level: dict[bytes, Graph] = {}
    for g in parents:
        for child in _children(g, pattern):
            code = canonical_form(child)
            if code not in level:
                level[code] = child
    return level


def _expand_worker(args):
    g6s, pattern_text = args
    pattern = PatternId.parse(pattern_text) if pattern_text else None
    level = _expand([from_graph6(s) for s in g6s], pattern)
    return sorted(level)


def free_levels(m: int, pattern: PatternId | None, threads: int = 1) -> list[list[Graph]]:
    """Isomorphism-class representatives for every edge count 1..m.

    ``result[k-1]`` holds the canonically labelled connected pattern-free
    graphs with k edges, sorted by canonical code.
    """
    if not 1 <= m <= MAX_EXHAUSTIVE_M:
        raise ValueError(f"exhaustive enumeration supports 1 <= m <= {MAX_EXHAUSTIVE_M}, got {m}")
    k2 = _trusted(2, [2, 1])
    levels = [[k2]] if not contains(k2, pattern) else [[]]
    for _ in range(m - 1):
        parents = levels[-1]
        if threads > 1 and len(parents) > 64:
            codes = _parallel_expand(parents, pattern, threads)
        else:
            codes = sorted(_expand(parents, pattern))
        levels.append([from_graph6(c.decode()) for c in codes])
    return levels


def _parallel_expand(parents: list[Graph], pattern: PatternId | None, threads: int) -> list[bytes]:
    from concurrent.futures import ProcessPoolExecutor

    shards = [[to_graph6(g) for g in parents[i::threads]] for i in range(threads)]
    text = str(pattern) if pattern is not None else ""
    merged: set[bytes] = set()
    with ProcessPoolExecutor(max_workers=threads) as pool:
        for codes in pool.map(_expand_worker, [(s, text) for s in shards]):
            merged.update(codes)
    return sorted(merged)


def enumerate_free(
    m: int,
    pattern: PatternId | None,
    visitor: Callable[[Graph], None] | None = None,
    threads: int = 1,
) -> int:
    """Visit one representative of each connected pattern-free graph with m edges."""
    graphs = free_levels(m, pattern, threads)[-1]
    if visitor is not None:
        for g in graphs:
            visitor(g)
    return len(graphs)


# -- reports -------------------------------------------------------------------

@dataclass
class SearchReport:
    m: int
    pattern: str
    exclusions: list[str]
    enumerated: int
    max_rho: float | None
    argmax: list[str]
    runtime_ms: int
    heuristic: bool = False
    exploratory: bool = False
    tie_band: float = TIE_BAND
    max_rho_smaller: float | None = None
    notes: list[str] = field(default_factory=list)

    def to_dict(self) -> dict:
        return asdict(self)

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), sort_keys=True)

    @classmethod
    def from_dict(cls, d: dict) -> "SearchReport":
        return cls(**d)

    def key(self) -> tuple:
        return (self.m, self.pattern, tuple(self.exclusions), self.heuristic)


def _pattern_text(pattern: PatternId | None) -> str:
    return "none" if pattern is None else str(pattern)


def _exclusion_codes(exclusions: Iterable[Graph | bytes]) -> list[bytes]:
    return [e if isinstance(e, bytes) else canonical_form(e) for e in exclusions]


def _threshold_note(m: int, pattern: PatternId | None, excluded: bool) -> tuple[bool, list[str]]:
    if pattern is not None and pattern.kind == "theta123":
        if m < 8:
            return True, ["below m >= 8: no bound is claimed, results are exploratory"]
        if excluded and m < 22:
            return True, ["below m >= 22: results for the non-split-star question are exploratory"]
    if pattern is not None and pattern.kind == "k2r1":
        need = (4 * pattern.r + 2) ** 2 + 1
        if m < need:
            return True, [f"below m >= {need}: results are exploratory, not a proven bound"]
    return False, []


def extremal_search(
    m: int,
    pattern: PatternId | None,
    exclusions: Iterable[Graph | bytes] = (),
    include_smaller: bool = False,
    threads: int = 1,
) -> SearchReport:
    """Maximum spectral radius over connected pattern-free graphs of size m.

    With ``include_smaller`` the report also carries the maximum over every
    m' < m, which covers disconnected members of the full class: their
    spectral radius is that of a component with fewer edges.
    """
    start = time.perf_counter()
    excl = _exclusion_codes(exclusions)
    excl_set = set(excl)
    levels = free_levels(m, pattern, threads)
    best = None
    argmax: list[tuple[float, str]] = []
    scored = []
    for g in levels[-1]:
        code = to_graph6(g).encode()
        if code in excl_set:
            continue
        scored.append((spectral_radius(g).rho, code.decode()))
    if scored:
        best = max(r for r, _ in scored)
        argmax = sorted((c for r, c in scored if r >= best - TIE_BAND))
    smaller = None
    if include_smaller:
        vals = [spectral_radius(g).rho for lvl in levels[:-1] for g in lvl]
        smaller = max(vals) if vals else None
    exploratory, notes = _threshold_note(m, pattern, bool(excl))
    return SearchReport(
        m=m,
        pattern=_pattern_text(pattern),
        exclusions=sorted(c.decode() for c in excl),
        enumerated=len(levels[-1]),
        max_rho=best,
        argmax=list(argmax),
        runtime_ms=int((time.perf_counter() - start) * 1000),
        exploratory=exploratory,
        max_rho_smaller=smaller,
        notes=notes,
    )


# -- hill climbing ---------------------------------------------------------------

def _fast_rho(adj: list[int], n: int) -> tuple[float, np.ndarray]:
    a = np.zeros((n, n))
    for u in range(n):
        for v in bits(adj[u]):
            a[u, v] = 1.0
    w, vecs = np.linalg.eigh(a)
    x = np.abs(vecs[:, -1])
    return float(w[-1]), x


def _support_connected(adj: list[int]) -> bool:
    support = 0
    for v, r in enumerate(adj):
        if r:
            support |= 1 << v
    if not support:
        return False
    seed = support & -support
    comp = frontier = seed
    while frontier:
        nxt = 0
        for v in bits(frontier):
            nxt |= adj[v]
        frontier = nxt & ~comp
        comp |= frontier
    return comp == support


def _compact(adj: list[int]) -> Graph:
    keep = [v for v, r in enumerate(adj) if r]
    pos = {v: i for i, v in enumerate(keep)}
    rows = []
    for v in keep:
        row = 0
        for w in bits(adj[v]):
            row |= 1 << pos[w]
        rows.append(row)
    return _trusted(len(keep), rows)


def _with_spare(g: Graph) -> list[int]:
    # one isolated slot so a pendant edge is just another non-edge
    return list(g.adj) + [0]


def _moves(adj: list[int], x: np.ndarray):
    """Edge rewirings (remove ab, add cd) ordered by first-order rho change."""
    n = len(adj)
    edges = [(u, v) for u in range(n) for v in bits(adj[u]) if v > u]
    spare = next((v for v in range(n) if adj[v] == 0), None)
    cand = []
    for a, b in edges:
        for c in range(n):
            if adj[c] == 0 and c != spare:
                continue
            for d in range(c + 1, n):
                if (adj[d] == 0 and d != spare) or adj[c] >> d & 1 or (c, d) == (a, b):
                    continue
                if adj[c] == 0 and adj[d] == 0:
                    continue
                cand.append((2.0 * (x[c] * x[d] - x[a] * x[b]), a, b, c, d))
    return cand


def _apply(adj: list[int], a: int, b: int, c: int, d: int) -> list[int]:
    new = list(adj)
    new[a] &= ~(1 << b)
    new[b] &= ~(1 << a)
    new[c] |= 1 << d
    new[d] |= 1 << c
    return new


def _improve(
    g: Graph,
    pattern: PatternId | None,
    excl: set[bytes],
    rng: random.Random,
    max_steps: int = 10_000,
) -> Graph:
    adj = _with_spare(g)
    cur, x = _fast_rho(adj, len(adj))
    for _ in range(max_steps):
        cand = _moves(adj, x)
        rng.shuffle(cand)
        cand.sort(key=lambda c: -c[0])
        moved = False
        for _, a, b, c, d in cand:
            new = _apply(adj, a, b, c, d)
            if not _support_connected(new) or occurs_through(new, c, d, pattern):
                continue
            r, y = _fast_rho(new, len(new))
            if r <= cur + IMPROVE_TOL:
                continue
            h = _compact(new)
            if excl and canonical_form(h) in excl:
                continue
            adj = _with_spare(h)
            cur, x = _fast_rho(adj, len(adj))
            moved = True
            break
        if not moved:
            break
    return _compact(adj)


def improving_move(g: Graph, pattern: PatternId | None, exclusions: Iterable[Graph | bytes] = ()):
    """An admissible rewiring that raises rho by more than the tolerance, or None.

    ``None`` certifies that ``g`` is a local maximum of the move set.
    """
    excl = set(_exclusion_codes(exclusions))
    adj = _with_spare(g)
    cur, x = _fast_rho(adj, len(adj))
    for _, a, b, c, d in sorted(_moves(adj, x), key=lambda c: -c[0]):
        new = _apply(adj, a, b, c, d)
        if not _support_connected(new) or occurs_through(new, c, d, pattern):
            continue
        r, _ = _fast_rho(new, len(new))
        if r > cur + IMPROVE_TOL:
            h = _compact(new)
            if excl and canonical_form(h) in excl:
                continue
            return (a, b), (c, d), r
    return None


def random_free_graph(m: int, pattern: PatternId | None, rng: random.Random, chord_bias: float = 0.7) -> Graph:
    """Random connected pattern-free graph with m edges, grown edge by edge from K_2."""
    adj = [2, 1]
    size = 1
    while size < m:
        n = len(adj)
        chords = [(u, v) for u in range(n) for v in range(u + 1, n) if not adj[u] >> v & 1]
        rng.shuffle(chords)
        added = False
        if chords and rng.random() < chord_bias:
            for u, v in chords:
                new = list(adj)
                new[u] |= 1 << v
                new[v] |= 1 << u
                if not occurs_through(new, u, v, pattern):
                    adj = new
                    added = True
                    break
        if not added:
            u = rng.randrange(n)
            new = list(adj) + [1 << u]
            new[u] |= 1 << n
            if pattern is not None and pattern.kind == "generic" and occurs_through(new, u, n, pattern):
                continue
            adj = new
        size += 1
    return _trusted(len(adj), adj)


def family_seeds(m: int, pattern: PatternId | None) -> list[Graph]:
    """Named extremal families of size m that belong to the search space of ``pattern``."""
    from . import families as fam

    seeds: list[Graph] = []
    candidates = []
    for t in range(0, m - 1):
        if (m - t) % 2 == 1 and m > t + 1:
            candidates.append(lambda t=t: fam.family_F(m, t))
    candidates.append(lambda: fam.star(m))
    candidates.append(lambda: fam.star_matching(m, 1))
    candidates.append(lambda: fam.star_matching(m - 1, 2))
    candidates.append(lambda: fam.double_star(m - 2, 1))
    candidates.append(lambda: fam.h_figure1(m))
    for make in candidates:
        try:
            g = make()
        except ValueError:
            continue
        if g.size == m and not contains(g, pattern):
            seeds.append(g)
    return seeds


def hill_climb(
    m: int,
    pattern: PatternId | None,
    exclusions: Iterable[Graph | bytes] = (),
    restarts: int = 50,
    seed: int = 0,
    seeds: list[Graph] | None = None,
) -> SearchReport:
    """Local search over edge rewirings that keep m, connectivity and freeness.

    The first restarts start from the named families (``seeds``), the rest from
    random pattern-free graphs.  A move is taken only if rho rises by more
    than 1e-12.  Deterministic for a fixed seed.
    """
    if not 1 <= m <= MAX_HILL_CLIMB_M:
        raise ValueError(f"hill_climb supports 1 <= m <= {MAX_HILL_CLIMB_M}")
    start = time.perf_counter()
    excl_codes = _exclusion_codes(exclusions)
    excl = set(excl_codes)
    rng = random.Random(seed)
    starts = [g for g in (family_seeds(m, pattern) if seeds is None else seeds)
              if canonical_form(g) not in excl][:restarts]
    while len(starts) < restarts:
        g = random_free_graph(m, pattern, rng)
        if canonical_form(g) in excl:
            continue
        starts.append(g)
    optima: dict[bytes, float] = {}
    for g in starts:
        local = _improve(g, pattern, excl, rng)
        code = canonical_form(local)
        if code not in optima:
            optima[code] = spectral_radius(local).rho
    best = max(optima.values())
    argmax = sorted(c.decode() for c, r in optima.items() if r >= best - TIE_BAND)
    exploratory, notes = _threshold_note(m, pattern, bool(excl_codes))
    notes = notes + [f"{len(optima)} distinct local optima from {len(starts)} restarts"]
    return SearchReport(
        m=m,
        pattern=_pattern_text(pattern),
        exclusions=sorted(c.decode() for c in excl_codes),
        enumerated=len(optima),
        max_rho=best,
        argmax=argmax,
        runtime_ms=int((time.perf_counter() - start) * 1000),
        heuristic=True,
        exploratory=exploratory,
        notes=notes,
    )


# -- JSONL cache -----------------------------------------------------------------

def load_cache(path: str) -> list[SearchReport]:
    if not os.path.exists(path):
        return []
    out = []
    with open(path) as fh:
        for line in fh:
            line = line.strip()
            if line:
                out.append(SearchReport.from_dict(json.loads(line)))
    return out


def cached_report(path: str, m: int, pattern: PatternId | None, exclusions: Iterable[Graph | bytes], heuristic: bool = False):
    key = (m, _pattern_text(pattern), tuple(sorted(c.decode() for c in _exclusion_codes(exclusions))), heuristic)
    for rep in load_cache(path):
        if rep.key() == key:
            return rep
    return None


def append_cache(path: str, report: SearchReport) -> None:
    with open(path, "a") as fh:
        fh.write(report.to_json() + "\n")

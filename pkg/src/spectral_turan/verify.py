"""Certificate checks for the spectral extremal claims.

Each check returns a :class:`Verdict`.  Strict inequalities pass only with a
margin above ``STRICT_TOL``; a margin in [0, STRICT_TOL] is "indeterminate".
Where both exist, the polynomial-root route and the eigenvector route are
computed independently and must agree.
"""
from __future__ import annotations

import json
import math
from dataclasses import asdict, dataclass, field

from . import families as fam
from .graph import (
    Graph,
    bits,
    canonical_form,
    complete_graph,
    component_masks,
    induced_neighborhood,
    popcount,
)
from .pattern import contains_k2r1, contains_subgraph, contains_theta123
from .poly import evaluate, largest_real_root, paper_poly
from .spectral import STRICT_TOL, spectral_radius, vertex_deletion_slack

PASS, FAIL, INDETERMINATE, INAPPLICABLE = "pass", "fail", "indeterminate", "inapplicable"


@dataclass
class Verdict:
    claim_id: str
    params: dict
    holds: bool
    margin: float
    details: dict = field(default_factory=dict)
    status: str = PASS
    exploratory: bool = False

    def to_dict(self) -> dict:
        return asdict(self)

    def to_json(self) -> str:
        return json.dumps(_clean(self.to_dict()), sort_keys=True)


def _clean(obj):
    if isinstance(obj, float) and not math.isfinite(obj):
        return str(obj)
    if isinstance(obj, dict):
        return {k: _clean(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [_clean(v) for v in obj]
    return obj


def _strict(margin: float) -> str:
    if margin > STRICT_TOL:
        return PASS
    if margin >= 0:
        return INDETERMINATE
    return FAIL


def _combine(statuses) -> str:
    statuses = list(statuses)
    if FAIL in statuses:
        return FAIL
    if INDETERMINATE in statuses:
        return INDETERMINATE
    return PASS


def _inapplicable(claim: str, params: dict, why: str) -> Verdict:
    return Verdict(claim, params, False, float("nan"), {"reason": why}, INAPPLICABLE)


def _rho(g: Graph) -> float:
    return spectral_radius(g).rho


def _is_star(g: Graph) -> bool:
    live = [v for v in range(g.n) if g.adj[v]]
    if len(live) < 2:
        return False
    m = g.size
    return any(g.degree(v) == m for v in live) and len(live) == m + 1


# -- graph-level bounds ----------------------------------------------------------

def check_nikiforov_bound(g: Graph, r: int) -> Verdict:
    """rho(G) <= sqrt(2m(1 - 1/r)) for K_{r+1}-free G."""
    params = {"r": r, "m": g.size}
    if r < 2:
        return _inapplicable("nikiforov", params, "needs r >= 2")
    if contains_subgraph(g, complete_graph(r + 1)):
        return _inapplicable("nikiforov", params, f"graph contains K_{r + 1}")
    bound = math.sqrt(2 * g.size * (1 - 1 / r))
    rho = _rho(g)
    margin = bound - rho
    holds = margin >= -STRICT_TOL
    return Verdict("nikiforov", params, holds, margin,
                   {"rho": rho, "bound": bound, "equality": abs(margin) <= STRICT_TOL},
                   PASS if holds else FAIL)


def check_star_bound_k2r1(g: Graph, r: int) -> Verdict:
    """rho(G) <= sqrt(m) for K_{2,r+1}-free G, equality only for stars.

    Claimed for r >= 2 and m >= 16 r^2; other inputs are checked but flagged
    exploratory.
    """
    m = g.size
    params = {"r": r, "m": m}
    if r < 1 or m < 1:
        return _inapplicable("thm12", params, "needs r >= 1 and at least one edge")
    if contains_k2r1(g, r):
        return _inapplicable("thm12", params, f"graph contains K_{{2,{r + 1}}}")
    rho = _rho(g)
    bound = math.sqrt(m)
    margin = bound - rho
    star = _is_star(g)
    equality = abs(margin) <= STRICT_TOL
    holds = margin >= -STRICT_TOL and (equality == star)
    return Verdict("thm12", params, holds, margin,
                   {"rho": rho, "bound": bound, "equality": equality, "is_star": star,
                    "strict": margin > STRICT_TOL, "hypothesis_m_ge_16r2": m >= 16 * r * r},
                   PASS if holds else (INDETERMINATE if 0 <= margin <= STRICT_TOL else FAIL),
                   exploratory=r < 2 or m < 16 * r * r)


def check_theorem_1_4(g: Graph) -> Verdict:
    """rho(G) <= (1 + sqrt(4m-3))/2 for theta_{1,2,3}-free G, m >= 8, no isolated vertices."""
    m = g.size
    params = {"m": m}
    if m < 8:
        return _inapplicable("thm14", params, "needs m >= 8")
    if g.isolated_vertices():
        return _inapplicable("thm14", params, "graph has isolated vertices")
    if contains_theta123(g):
        return _inapplicable("thm14", params, "graph contains theta_{1,2,3}")
    rho = _rho(g)
    bound = (1 + math.sqrt(4 * m - 3)) / 2
    margin = bound - rho
    extremal = m % 2 == 1 and canonical_form(g) == canonical_form(fam.split_star((m + 3) // 2, 2))
    if extremal:
        status = PASS if abs(margin) <= STRICT_TOL else FAIL
    else:
        status = _strict(margin)
    return Verdict("thm14", params, status == PASS, margin,
                   {"rho": rho, "bound": bound, "equality": extremal}, status)


def check_vertex_deletion(g: Graph) -> Verdict:
    """rho(G) <= sqrt(rho(G-v)^2 + 2 d(v) - 1) at every non-isolated v."""
    slacks = {v: vertex_deletion_slack(g, v) for v in range(g.n) if g.adj[v]}
    params = {"m": g.size, "n": g.n}
    if not slacks:
        return _inapplicable("lemma25", params, "graph has no edges")
    margin = min(slacks.values())
    equality = sorted(v for v, s in slacks.items() if abs(s) <= STRICT_TOL)
    holds = margin >= -STRICT_TOL
    return Verdict("lemma25", params, holds, margin,
                   {"equality_vertices": equality}, PASS if holds else FAIL)


# -- polynomial / eigenvalue orderings --------------------------------------------

def _two_routes(poly, graph: Graph) -> tuple[float, float]:
    return largest_real_root(poly), _rho(graph)


def check_sec3_orderings(m: int) -> Verdict:
    """rho(D_{m-2,1}), rho(S_{m-1}^2), rho(H) all below rho(S_m^1), by roots and by eigenvectors."""
    params = {"m": m}
    if m < 18:
        return _inapplicable("sec3", params, "needs m >= 18")
    target_poly, target_graph = paper_poly("F_thm13", m=m), fam.star_matching(m, 1)
    rivals = {
        "D_{m-2,1}": (paper_poly("G_sec3", m=m), fam.double_star(m - 2, 1)),
        "S_{m-1}^2": (paper_poly("F1_sec3", m=m), fam.star_matching(m - 1, 2)),
        "H": (paper_poly("F2_sec3", m=m), fam.h_figure1(m)),
    }
    t_root, t_rho = _two_routes(target_poly, target_graph)
    details = {"rho_S_m^1": {"root": t_root, "eig": t_rho}}
    statuses = []
    margins = []
    agree = abs(t_root - t_rho) < STRICT_TOL
    for name, (p, g) in rivals.items():
        root, rho = _two_routes(p, g)
        agree &= abs(root - rho) < STRICT_TOL
        by_root, by_eig = t_root - root, t_rho - rho
        if (by_root > 0) != (by_eig > 0):
            agree = False
        margin = min(by_root, by_eig)
        margins.append(margin)
        statuses.append(_strict(margin))
        details[name] = {"root": root, "eig": rho, "margin_root": by_root, "margin_eig": by_eig}
    above = t_rho - math.sqrt(m - 1)
    margins.append(above)
    statuses.append(_strict(above))
    details["rho_S_m^1_minus_sqrt(m-1)"] = above
    details["routes_agree"] = agree
    if not agree:
        statuses.append(FAIL)
    status = _combine(statuses)
    return Verdict("sec3", params, status == PASS, min(margins), details, status)


def valid_t(m: int, t_max: int | None = None) -> list[int]:
    top = m - 3 if t_max is None else min(t_max, m - 3)
    return [t for t in range(1, top + 1) if (m - t) % 2 == 1]


def check_lemma_4_3(m: int, t_max: int | None = None) -> Verdict:
    """(i) rho(F_{m,t}) below the t=1 or t=2 member of matching parity;
    (ii) rho(F_{m,t}) > (1 + sqrt(4m-7))/2 for that member."""
    params = {"m": m, "t_max": t_max}
    if m < 22:
        return _inapplicable("lemma43", params, "needs m >= 22")
    ts = valid_t(m, t_max)
    base = 1 if m % 2 == 0 else 2
    routes = {}
    agree = True
    for t in sorted(set(ts) | {base}):
        root = largest_real_root(paper_poly("F3_thm15", m=m, t=t))
        rho = _rho(fam.family_F(m, t))
        agree &= abs(root - rho) < STRICT_TOL
        routes[t] = (root, rho)
    statuses, margins = [], []
    part_i = {}
    for t in ts:
        if t <= 2:
            continue
        by_root = routes[base][0] - routes[t][0]
        by_eig = routes[base][1] - routes[t][1]
        agree &= (by_root > 0) == (by_eig > 0)
        margin = min(by_root, by_eig)
        part_i[t] = margin
        margins.append(margin)
        statuses.append(_strict(margin))
    point = (1 + math.sqrt(4 * m - 7)) / 2
    f3_at_point = evaluate(paper_poly("F3_thm15", m=m, t=base), point)
    above = min(routes[base]) - point
    margins.append(above)
    statuses.append(_strict(above))
    statuses.append(PASS if f3_at_point < 0 else FAIL)
    if not agree:
        statuses.append(FAIL)
    status = _combine(statuses)
    details = {
        "base_t": base,
        "rho_base": {"root": routes[base][0], "eig": routes[base][1]},
        "part_i_margins": {str(t): v for t, v in part_i.items()},
        "part_ii_point": point,
        "part_ii_margin": above,
        "f3_at_point": f3_at_point,
        "routes_agree": agree,
    }
    return Verdict("lemma43", params, status == PASS, min(margins), details, status)


# -- structure -------------------------------------------------------------------

def classify_component(g: Graph, mask: int) -> str:
    k = popcount(mask)
    e = sum(popcount(g.adj[v] & mask) for v in bits(mask)) // 2
    if k == 1:
        return "isolated"
    if k == 3 and e == 3:
        return "triangle"
    if e == k - 1 and any(popcount(g.adj[v] & mask) == k - 1 for v in bits(mask)):
        return f"star K_1,{k - 1}"
    return f"other (n={k}, m={e})"


def check_neighborhood_structure(g: Graph, v: int) -> Verdict:
    """Every component of G[N(v)] is an isolated vertex, a triangle or a star."""
    sub, index = induced_neighborhood(g, v)
    kinds = [classify_component(sub, c) for c in component_masks(sub)] if sub.n else []
    holds = all(not k.startswith("other") for k in kinds)
    return Verdict("lemma42", {"v": v, "degree": len(index)}, holds, 0.0,
                   {"components": sorted(kinds)}, PASS if holds else FAIL)


def max_perron_vertex(g: Graph) -> int:
    x = spectral_radius(g).perron
    if x is None:
        raise ValueError("graph must be connected")
    return int(max(range(g.n), key=lambda i: (x[i], -i)))

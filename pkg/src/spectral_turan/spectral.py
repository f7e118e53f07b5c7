"""Spectral radius, Perron vectors, quadratic forms and equitable quotients."""
from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Sequence

import numpy as np

from .graph import Graph, bits, component_masks, delete_vertex, induced_subgraph, popcount
from .poly import Polynomial

RAYLEIGH_TOL = 1e-13
RESIDUAL_TOL = 1e-10
STRICT_TOL = 1e-9
MAX_ITER = 1_000_000


class ConvergenceError(RuntimeError):
    pass


@dataclass
class SpectralResult:
    rho: float
    perron: np.ndarray | None
    iterations: int
    residual: float

    def to_dict(self, with_perron: bool = False) -> dict:
        out = {"rho": self.rho, "iterations": self.iterations, "residual": self.residual}
        if with_perron:
            out["perron"] = None if self.perron is None else [float(x) for x in self.perron]
        return out


def _power_iteration(a: np.ndarray, max_iter: int = MAX_ITER) -> tuple[float, np.ndarray, int, float]:
    n = a.shape[0]
    shifted = a + np.eye(n)
    x = np.ones(n) / math.sqrt(n)
    prev = math.inf
    for it in range(1, max_iter + 1):
        y = shifted @ x
        lam = float(x @ y)
        x = y / np.linalg.norm(y)
        if abs(lam - prev) < RAYLEIGH_TOL:
            rho = float(x @ (a @ x))
            residual = float(np.max(np.abs(a @ x - rho * x)))
            if residual < RESIDUAL_TOL:
                return rho, x, it, residual
        prev = lam
    raise ConvergenceError(f"power iteration did not converge in {max_iter} iterations")


def spectral_radius(g: Graph, max_iter: int = MAX_ITER) -> SpectralResult:
    """Largest adjacency eigenvalue; the Perron vector is returned only if G is connected."""
    if g.n < 1:
        raise ValueError("spectral radius needs at least one vertex")
    comps = component_masks(g)
    if len(comps) == 1:
        if g.size == 0:
            return SpectralResult(0.0, np.ones(1), 0, 0.0)
        rho, x, it, res = _power_iteration(g.to_numpy(), max_iter)
        return SpectralResult(rho, x, it, res)
    best = SpectralResult(0.0, None, 0, 0.0)
    total = 0
    for comp in comps:
        if popcount(comp) < 2:
            continue
        sub, _ = induced_subgraph(g, list(bits(comp)))
        r = spectral_radius(sub, max_iter)
        total += r.iterations
        if r.rho > best.rho:
            best = SpectralResult(r.rho, None, 0, r.residual)
    best.iterations = total
    return best


def rho(g: Graph) -> float:
    return spectral_radius(g).rho


def quadratic_form(g: Graph, x: Sequence[float]) -> float:
    """X^T A X = sum over edges uv of 2 x_u x_v."""
    if len(x) != g.n:
        raise ValueError(f"vector length {len(x)} != vertex count {g.n}")
    return float(sum(2.0 * x[u] * x[v] for u, v in g.edges()))


def vertex_deletion_bound_holds(g: Graph, v: int, tol: float = STRICT_TOL) -> bool:
    """rho(G) <= sqrt(rho(G-v)^2 + 2 d(v) - 1)."""
    return vertex_deletion_slack(g, v) >= -tol


def vertex_deletion_slack(g: Graph, v: int) -> float:
    d = g.degree(v)
    if d < 1:
        raise ValueError(f"vertex {v} is isolated")
    rest = delete_vertex(g, v)
    r_rest = rho(rest) if rest.n else 0.0
    return math.sqrt(r_rest ** 2 + 2 * d - 1) - rho(g)


# -- equitable partitions --------------------------------------------------------

def _block_masks(g: Graph, blocks: Sequence[Sequence[int]]) -> list[int]:
    masks = []
    seen = 0
    for b in blocks:
        if not b:
            raise ValueError("partition blocks must be nonempty")
        mask = 0
        for v in b:
            if not 0 <= v < g.n:
                raise ValueError(f"vertex {v} out of range")
            mask |= 1 << v
        if mask & seen or popcount(mask) != len(b):
            raise ValueError("partition blocks must be disjoint")
        seen |= mask
        masks.append(mask)
    if seen != (1 << g.n) - 1:
        raise ValueError("partition does not cover every vertex")
    return masks


def _counts(g: Graph, masks: list[int]) -> list[list[int]] | None:
    out = []
    for src in masks:
        row = []
        for dst in masks:
            vals = {popcount(g.adj[u] & dst) for u in bits(src)}
            if len(vals) != 1:
                return None
            row.append(vals.pop())
        out.append(row)
    return out


def is_equitable(g: Graph, blocks: Sequence[Sequence[int]]) -> bool:
    return _counts(g, _block_masks(g, blocks)) is not None


@dataclass(frozen=True)
class QuotientMatrix:
    b: tuple[tuple[int, ...], ...]

    @property
    def k(self) -> int:
        return len(self.b)

    def to_list(self) -> list[list[int]]:
        return [list(r) for r in self.b]

    def largest_eigenvalue(self) -> float:
        return float(max(np.linalg.eigvals(np.array(self.b, dtype=float)).real))


def quotient_matrix(g: Graph, blocks: Sequence[Sequence[int]]) -> QuotientMatrix:
    counts = _counts(g, _block_masks(g, blocks))
    if counts is None:
        raise ValueError("partition is not equitable")
    return QuotientMatrix(tuple(tuple(r) for r in counts))


CHAR_POLY_LIMIT = 1 << 127


def char_poly(b: QuotientMatrix | Sequence[Sequence[int]]) -> Polynomial:
    """det(xI - B) by Faddeev-LeVerrier in exact integer arithmetic.

    M_1 = I, c_{k-1} = -tr(B)/1; M_j = B M_{j-1} + c_{k-j+1} I,
    c_{k-j} = -tr(B M_j)/j.  Every division is exact for integer B.
    """
    rows = b.b if isinstance(b, QuotientMatrix) else b
    k = len(rows)
    if k == 0 or k > 16 or any(len(r) != k for r in rows):
        raise ValueError("char_poly needs a square matrix with 1 <= k <= 16")
    a = [[int(v) for v in r] for r in rows]
    coeffs = [0] * (k + 1)
    coeffs[k] = 1
    m = [[int(i == j) for j in range(k)] for i in range(k)]
    for j in range(1, k + 1):
        am = [[sum(a[i][l] * m[l][c] for l in range(k)) for c in range(k)] for i in range(k)]
        tr = sum(am[i][i] for i in range(k))
        if tr % j:
            raise ArithmeticError("non-exact division in Faddeev-LeVerrier")
        c = -tr // j
        if abs(c) >= CHAR_POLY_LIMIT:
            raise OverflowError("characteristic polynomial coefficient exceeds 128 bits")
        coeffs[k - j] = c
        m = [[am[i][l] + (c if i == l else 0) for l in range(k)] for i in range(k)]
    return Polynomial(coeffs)


def dense_spectral_radius(g: Graph) -> float:
    """Independent check via a symmetric dense eigensolver."""
    if g.n == 0:
        return 0.0
    return float(np.linalg.eigvalsh(g.to_numpy())[-1])

"""Real polynomials with a guaranteed largest-real-root finder, plus the
closed-form characteristic polynomials of the extremal families."""
from __future__ import annotations

import json
from fractions import Fraction
from numbers import Rational
from typing import Iterable, Sequence

ROOT_TOL = 1e-12


def _exact(c):
    if isinstance(c, bool):
        raise TypeError("boolean coefficient")
    if isinstance(c, Rational):
        f = Fraction(c)
        return f.numerator if f.denominator == 1 else f
    return float(c)


class Polynomial:
    """Coefficients in ascending degree order; trailing zeros are stripped.

    Integer and rational coefficients are kept exact so closed forms can be
    compared coefficient for coefficient; evaluation is in floating point.
    """

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable):
        cs = [_exact(c) for c in coeffs]
        while len(cs) > 1 and cs[-1] == 0:
            cs.pop()
        if not cs:
            cs = [0]
        self.coeffs = tuple(cs)

    @classmethod
    def from_descending(cls, coeffs: Sequence) -> "Polynomial":
        return cls(list(coeffs)[::-1])

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1 if any(self.coeffs) else -1

    def __eq__(self, other):
        if not isinstance(other, Polynomial):
            return NotImplemented
        return self.coeffs == other.coeffs

    def __hash__(self):
        return hash(self.coeffs)

    def __add__(self, other: "Polynomial") -> "Polynomial":
        k = max(len(self.coeffs), len(other.coeffs))
        a = self.coeffs + (0,) * (k - len(self.coeffs))
        b = other.coeffs + (0,) * (k - len(other.coeffs))
        return Polynomial(x + y for x, y in zip(a, b))

    def __neg__(self) -> "Polynomial":
        return Polynomial(-c for c in self.coeffs)

    def __sub__(self, other: "Polynomial") -> "Polynomial":
        return self + (-other)

    def __mul__(self, other) -> "Polynomial":
        if not isinstance(other, Polynomial):
            return Polynomial(c * other for c in self.coeffs)
        out = [0] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            for j, b in enumerate(other.coeffs):
                out[i + j] += a * b
        return Polynomial(out)

    __rmul__ = __mul__

    def derivative(self) -> "Polynomial":
        return Polynomial(i * c for i, c in enumerate(self.coeffs) if i) if self.degree > 0 else Polynomial([0])

    def __call__(self, x: float) -> float:
        return evaluate(self, x)

    def __str__(self):
        terms = []
        for d in range(len(self.coeffs) - 1, -1, -1):
            c = self.coeffs[d]
            if c == 0 and len(self.coeffs) > 1:
                continue
            sign = "-" if c < 0 else "+"
            mag = abs(c)
            if d == 0:
                body = f"{mag}"
            else:
                body = ("" if mag == 1 else f"{mag}*") + ("x" if d == 1 else f"x^{d}")
            terms.append((sign, body))
        first_sign, first = terms[0]
        out = ("-" if first_sign == "-" else "") + first
        for sign, body in terms[1:]:
            out += f" {sign} {body}"
        return out

    def __repr__(self):
        return f"Polynomial({list(self.coeffs)!r})"

    def to_json(self) -> str:
        return json.dumps([_jsonable(c) for c in self.coeffs])


def _jsonable(c):
    if isinstance(c, Fraction):
        return float(c)
    return c


X = Polynomial([0, 1])


def evaluate(p: Polynomial, x: float) -> float:
    """Horner's rule in floating point."""
    acc = 0.0
    for c in reversed(p.coeffs):
        acc = acc * x + float(c)
    return acc


def cauchy_bound(p: Polynomial) -> float:
    lead = float(p.coeffs[-1])
    return 1.0 + max(abs(float(c) / lead) for c in p.coeffs[:-1])


def _bisect(p: Polynomial, lo: float, hi: float, rising: bool, tol: float) -> float:
    # p(lo) and p(hi) bracket a root; p monotone on [lo, hi]
    while hi - lo > tol:
        mid = 0.5 * (lo + hi)
        if mid <= lo or mid >= hi:
            break
        v = evaluate(p, mid)
        if v == 0.0:
            return mid
        if (v < 0) == rising:
            lo = mid
        else:
            hi = mid
    return 0.5 * (lo + hi)


def _sign(p: Polynomial, x: float, slack: float = 0.0) -> int:
    """Sign of p(x), or 0 when |p(x)| is within Horner rounding error plus ``slack``."""
    v = evaluate(p, x)
    scale = 0.0
    for c in reversed(p.coeffs):
        scale = scale * abs(x) + abs(float(c))
    if abs(v) <= 16 * 2.2e-16 * scale + slack:
        return 0
    return 1 if v > 0 else -1


def _critical_sign(p: Polynomial, dp: Polynomial, c: float, tol: float) -> int:
    # c is a root of p' only to within tol, so a double root of p may show
    # up at c as a tiny value of either sign
    slack = abs(evaluate(dp, c)) * tol + abs(evaluate(dp.derivative(), c)) * tol * tol
    return _sign(p, c, slack)


def real_roots(p: Polynomial, tol: float = ROOT_TOL) -> list[float]:
    """All distinct real roots, ascending.

    Critical points (real roots of p') cut the line into monotone pieces; each
    piece holds at most one root, located by bisection.  Bounded by the
    Cauchy radius.
    """
    if p.degree < 1:
        raise ValueError("root finding needs degree >= 1")
    if p.degree == 1:
        return [-float(p.coeffs[0]) / float(p.coeffs[1])]
    bound = cauchy_bound(p)
    dp = p.derivative()
    crit = [c for c in real_roots(dp, tol) if -bound < c < bound]
    knots = [-bound] + crit + [bound]
    signs = [_sign(p, -bound)] + [_critical_sign(p, dp, c, tol) for c in crit] + [_sign(p, bound)]
    roots: list[float] = []
    for i, (lo, hi) in enumerate(zip(knots, knots[1:])):
        slo, shi = signs[i], signs[i + 1]
        if slo == 0:
            roots.append(lo)
        elif shi != 0 and slo != shi:
            roots.append(_bisect(p, lo, hi, slo < 0, tol))
    if signs[-1] == 0:
        roots.append(knots[-1])
    out: list[float] = []
    for r in sorted(roots):
        if not out or r - out[-1] > tol:
            out.append(r)
    return out


def largest_real_root(p: Polynomial, tol: float = ROOT_TOL) -> float:
    """Greatest real zero, to absolute accuracy ``tol``.

    The upper bracket is the Cauchy bound 1 + max|a_i/a_d|, where p has the
    sign of its leading coefficient; the lower bracket is the last sign
    change, found by walking down the monotone pieces between critical points.
    """
    if p.degree < 1:
        raise ValueError("largest_real_root needs degree >= 1")
    if float(p.coeffs[-1]) < 0:
        p = -p
    if p.degree == 1:
        return -float(p.coeffs[0]) / float(p.coeffs[1])
    hi = cauchy_bound(p)
    dp = p.derivative()
    crit = sorted((c for c in real_roots(dp, tol) if c < hi), reverse=True)
    upper = hi
    for lo in crit + [-hi]:
        s = _critical_sign(p, dp, lo, tol) if lo > -hi else _sign(p, lo)
        if s == 0:
            return lo
        if s < 0:
            return _bisect(p, lo, upper, True, tol)
        upper = lo
    raise ValueError("no real root found below the Cauchy bound")


# -- closed-form registry --------------------------------------------------------

PAPER_POLYS = (
    "Lemma23", "Lemma24", "F_thm13", "F1_sec3", "G_sec3", "H_sec3",
    "F2_sec3", "H1_sec3", "F3_thm15", "F4_lem43", "H2_lem43",
)


def _desc(*cs) -> Polynomial:
    return Polynomial.from_descending([Fraction(c) for c in cs])


def paper_poly(name: str, **params) -> Polynomial:
    """Closed-form polynomial by registry name.

    Lemma23(n, k): rho(S_n^k).  Lemma24(n, k): rho(S_{n,k}).
    F_thm13(m): rho(S_m^1).  F1_sec3(m): rho(S_{m-1}^2).  G_sec3(m): rho(D_{m-2,1}).
    F2_sec3(m): rho(H).  H_sec3 = G - x F, H1_sec3 = F2 - x F.
    F3_thm15(m, t): rho(F_{m,t}).  F4_lem43(m) = F3 at t = 1.  H2_lem43 = F3 - F4.
    """
    def need(*keys):
        missing = [k for k in keys if k not in params]
        if missing:
            raise ValueError(f"{name} needs parameter(s) {missing}")
        vals = [params[k] for k in keys]
        if any(not isinstance(v, int) for v in vals):
            raise ValueError(f"{name} parameters must be integers")
        return vals

    if name == "Lemma23":
        n, k = need("n", "k")
        if k < 0 or n < 2 * k + 1:
            raise ValueError("Lemma23 needs n >= 2k+1")
        return _desc(1, -1, -(n - 1), n - 1 - 2 * k)
    if name == "Lemma24":
        n, k = need("n", "k")
        if not 1 <= k <= n:
            raise ValueError("Lemma24 needs 1 <= k <= n")
        return _desc(1, -(k - 1), -k * (n - k))
    if name in ("F_thm13", "F1_sec3", "G_sec3", "H_sec3", "F2_sec3", "H1_sec3", "F4_lem43"):
        (m,) = need("m")
        if m < 3:
            raise ValueError(f"{name} needs m >= 3")
        return {
            "F_thm13": lambda: _desc(1, -1, -(m - 1), m - 3),
            "F1_sec3": lambda: _desc(1, -1, -(m - 2), m - 6),
            "G_sec3": lambda: _desc(1, 0, -m, 0, m - 2),
            "H_sec3": lambda: _desc(1, -1, -(m - 3), m - 2),
            "F2_sec3": lambda: _desc(1, 0, -m, -4, 2 * m - 10),
            "H1_sec3": lambda: _desc(1, -1, -(m + 1), 2 * m - 10),
            "F4_lem43": lambda: _desc(1, 0, -m, -(m - 2), Fraction(m - 2, 2)),
        }[name]()
    if name in ("F3_thm15", "H2_lem43"):
        m, t = need("m", "t")
        if t < 0 or m <= t + 1:
            raise ValueError(f"{name} needs m > t+1 and t >= 0")
        if name == "F3_thm15":
            return _desc(1, 0, -m, -(m - t - 1), Fraction(t * (m - t - 1), 2))
        return _desc(t - 1, Fraction(t * (m - t - 1) - (m - 2), 2))
    raise ValueError(f"unknown registry polynomial {name!r}; expected one of {PAPER_POLYS}")

"""Gauss rules by Golub-Welsch and the mapped 2D rules that realize each
family's inner product.

The symmetric tridiagonal eigenproblem is solved in-house by implicit-shift
QL iteration.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import lru_cache
from typing import Callable, Sequence

import numpy as np

from .families import Family, FamilySpec
from .special import ln_beta, ln_gamma

__all__ = [
    "ConvergenceError",
    "Rule1D",
    "Rule2D",
    "tridiagonal_eigen",
    "golub_welsch",
    "jacobi_recurrence",
    "laguerre_recurrence",
    "gauss_jacobi",
    "gauss_laguerre",
    "nodes_for_degree",
    "family_rule",
    "inner_product",
]

DEFLATION_TOL = 1e-14
MAX_SWEEPS = 50


class ConvergenceError(RuntimeError):
    """QL iteration hit the per-eigenvalue sweep cap."""


@dataclass(frozen=True, eq=False)
class Rule1D:
    nodes: np.ndarray
    weights: np.ndarray
    weight_descriptor: tuple  # ("jacobi", a, b) or ("laguerre", a)

    def __len__(self):
        return len(self.nodes)

    def integrate(self, fn: Callable[[np.ndarray], np.ndarray]) -> float:
        return float(np.dot(self.weights, fn(self.nodes)))


@dataclass(frozen=True, eq=False)
class Rule2D:
    family: Family
    outer: Rule1D
    inner: Rule1D
    x: np.ndarray
    y: np.ndarray
    weights: np.ndarray

    def integrate(self, fn: Callable[[np.ndarray, np.ndarray], np.ndarray]) -> float:
        return float(np.dot(self.weights, fn(self.x, self.y)))


def tridiagonal_eigen(diag: Sequence[float], offdiag: Sequence[float]) -> tuple[np.ndarray, np.ndarray]:
    """Eigenvalues (ascending) and first eigenvector components of a symmetric
    tridiagonal matrix, by implicit-shift QL.

    ``offdiag[i]`` couples rows i and i+1.
    """
    d = np.array(diag, dtype=float)
    n = len(d)
    e = np.zeros(n)
    e[: n - 1] = offdiag[: n - 1]
    z = np.zeros(n)
    z[0] = 1.0

    for l in range(n):
        sweeps = 0
        while True:
            m = l
            while m < n - 1 and abs(e[m]) > DEFLATION_TOL * (abs(d[m]) + abs(d[m + 1])):
                m += 1
            if m == l:
                break
            if sweeps == MAX_SWEEPS:
                raise ConvergenceError(f"eigenvalue {l} not converged after {MAX_SWEEPS} sweeps")
            sweeps += 1
            # Wilkinson-type shift from the leading 2x2 block
            g = (d[l + 1] - d[l]) / (2.0 * e[l])
            r = math.hypot(g, 1.0)
            g = d[m] - d[l] + e[l] / (g + math.copysign(r, g))
            s = c = 1.0
            p = 0.0
            i = m - 1
            while i >= l:
                f = s * e[i]
                b = c * e[i]
                r = math.hypot(f, g)
                e[i + 1] = r
                if r == 0.0:
                    d[i + 1] -= p
                    e[m] = 0.0
                    break
                s = f / r
                c = g / r
                g = d[i + 1] - p
                r = (d[i] - g) * s + 2.0 * c * b
                p = s * r
                d[i + 1] = g + p
                g = c * r - b
                f = z[i + 1]
                z[i + 1] = s * z[i] + c * f
                z[i] = c * z[i] - s * f
                i -= 1
            else:
                d[l] -= p
                e[l] = g
                e[m] = 0.0
    order = np.argsort(d, kind="stable")
    return d[order], z[order]


def _orthonormal_sumsq(x: float, a: np.ndarray, sb: np.ndarray) -> tuple[float, float]:
    """Return (ln sum_{j<N} q_j(x)^2, q_N(x)/q_N'(x)) where q_j = sqrt(mu0) p_j
    are the orthonormal polynomials scaled so q_0 = 1.

    ``sb[j]`` is sqrt(b_{j+1}), the off-diagonal linking p_j and p_{j+1}.
    """
    N = len(a)
    p_prev, p = 0.0, 1.0
    dp_prev, dp = 0.0, 0.0
    total = 1.0
    log_scale = 0.0
    for j in range(N):
        off_prev = sb[j - 1] if j > 0 else 0.0
        if j < N - 1:
            off = sb[j]
        else:
            off = 1.0  # p_N up to a constant; only its Newton ratio is used
        p_next = ((x - a[j]) * p - off_prev * p_prev) / off
        dp_next = (p + (x - a[j]) * dp - off_prev * dp_prev) / off
        p_prev, p, dp_prev, dp = p, p_next, dp, dp_next
        if j < N - 1:
            total += p * p
        if abs(p) > 1e100:
            p_prev *= 1e-100
            p *= 1e-100
            dp_prev *= 1e-100
            dp *= 1e-100
            total *= 1e-200
            log_scale += 200 * math.log(10)
    ratio = p / dp if dp != 0 else 0.0
    return math.log(total) + log_scale, ratio


def golub_welsch(recurrence: Sequence[tuple[float, float]], mu0: float, N: int, polish: bool = True) -> Rule1D:
    """N-point Gauss rule from monic recurrence coefficients.

    ``recurrence[i] = (a_i, b_i)`` for p_{i+1} = (x - a_i) p_i - b_i p_{i-1};
    b_0 is ignored.  Nodes are the Jacobi-matrix eigenvalues and each weight
    is mu0 times the squared first component of its normalized eigenvector.

    With ``polish`` (the default) each node takes Newton steps on p_N and the
    first eigenvector component is recomputed from the exact eigenvector
    (p_0(x), ..., p_{N-1}(x)) of the orthonormal polynomials.  Accumulated
    QL rotations only give that component to absolute accuracy, which is
    not enough for the tiny tail weights of large Laguerre rules.
    """
    if N < 1:
        raise ValueError("N must be positive")
    if mu0 <= 0:
        raise ValueError("mu0 must be positive")
    rec = list(recurrence)[:N]
    if len(rec) < N:
        raise ValueError(f"need {N} recurrence coefficients, got {len(rec)}")
    a = np.array([r[0] for r in rec], dtype=float)
    b = np.array([r[1] for r in rec[1:]], dtype=float)
    if np.any(b <= 0):
        raise ValueError("recurrence b_i must be positive for i >= 1")
    sb = np.sqrt(b)
    nodes, z = tridiagonal_eigen(a, sb)
    weights = mu0 * z * z
    if polish and N > 1:
        for i, x in enumerate(nodes):
            for _ in range(3):
                _, ratio = _orthonormal_sumsq(x, a, sb)
                step = ratio
                x -= step
                if abs(step) <= 1e-16 * max(1.0, abs(x)):
                    break
            nodes[i] = x
            log_sum, _ = _orthonormal_sumsq(x, a, sb)
            # v_0^2 = p_0^2 / sum p_j^2 with p_0 = 1, so weight = mu0 / sum
            weights[i] = mu0 * math.exp(-log_sum)
    return Rule1D(nodes, weights, ("custom",))


def jacobi_recurrence(N: int, a: float, b: float) -> list[tuple[float, float]]:
    """Monic recurrence coefficients for (1-x)^a (1+x)^b on [-1, 1]."""
    out = []
    for i in range(N):
        s = 2 * i + a + b
        if i == 0:
            ai = (b - a) / (a + b + 2)
            bi = 0.0
        else:
            ai = (b * b - a * a) / (s * (s + 2))
            if i == 1:
                bi = 4 * (1 + a) * (1 + b) / ((2 + a + b) ** 2 * (3 + a + b))
            else:
                bi = 4 * i * (i + a) * (i + b) * (i + a + b) / (s * s * (s + 1) * (s - 1))
        out.append((ai, bi))
    return out


def laguerre_recurrence(N: int, a: float) -> list[tuple[float, float]]:
    """Monic recurrence coefficients for x^a e^{-x} on [0, inf)."""
    return [(2 * i + a + 1, i * (i + a)) for i in range(N)]


def jacobi_mass(a: float, b: float) -> float:
    return math.exp((a + b + 1) * math.log(2) + ln_beta(a + 1, b + 1))


def laguerre_mass(a: float) -> float:
    return math.exp(ln_gamma(a + 1))


@lru_cache(maxsize=512)
def gauss_jacobi(N: int, a: float, b: float) -> Rule1D:
    """N-point Gauss-Jacobi rule for (1-x)^a (1+x)^b on [-1, 1]."""
    if not (a > -1 and b > -1):
        raise ValueError(f"Gauss-Jacobi needs a, b > -1, got ({a}, {b})")
    r = golub_welsch(jacobi_recurrence(N, a, b), jacobi_mass(a, b), N)
    return _freeze(r.nodes, r.weights, ("jacobi", a, b))


@lru_cache(maxsize=512)
def gauss_laguerre(N: int, a: float) -> Rule1D:
    """N-point generalized Gauss-Laguerre rule for x^a e^{-x} on [0, inf)."""
    if not a > -1:
        raise ValueError(f"Gauss-Laguerre needs a > -1, got {a}")
    r = golub_welsch(laguerre_recurrence(N, a), laguerre_mass(a), N)
    return _freeze(r.nodes, r.weights, ("laguerre", a))


def _freeze(nodes, weights, descriptor) -> Rule1D:
    nodes = np.array(nodes, dtype=float)
    weights = np.array(weights, dtype=float)
    nodes.flags.writeable = False
    weights.flags.writeable = False
    return Rule1D(nodes, weights, descriptor)


def nodes_for_degree(max_total_degree: int) -> int:
    """Points per direction: ceil((max_total_degree + 1) / 2) + 2."""
    if max_total_degree < 0:
        raise ValueError("max_total_degree must be nonnegative")
    return (max_total_degree + 2) // 2 + 2


@lru_cache(maxsize=256)
def family_rule(f: FamilySpec, max_total_degree: int) -> Rule2D:
    """Tensor rule, after the family's change of variables, that is exact for
    <u, v> whenever deg u + deg v <= max_total_degree.

    biangle            y = sqrt(x) t, x-weight (1-x)^a x^(b+1/2) on [0, 1], t-weight (1-t^2)^b
    square             plain tensor product of the two Jacobi weights
    laguerre-jacobi    y = x u, x-weight x^(a+1) e^(-x), u-weight (1-u)^b on [-1, 1]
    laguerre-laguerre  y = x u, x-weight x^(a+1) e^(-x), u-weight u^b e^(-u)
    """
    N = nodes_for_degree(max_total_degree)
    if f.family is Family.SQUARE:
        a, b, c, d = f.params
        outer, inner = gauss_jacobi(N, a, b), gauss_jacobi(N, c, d)
        X, T = np.meshgrid(outer.nodes, inner.nodes, indexing="ij")
        x, y = X, T
    elif f.family is Family.BIANGLE:
        a, b = f.params
        gj = gauss_jacobi(N, a, b + 0.5)
        # x = (1 + z)/2 carries the factor 2^-(a + b + 3/2)
        outer = _freeze((1 + gj.nodes) / 2, gj.weights * 2.0 ** (-(a + b + 1.5)), ("jacobi01", a, b + 0.5))
        inner = gauss_jacobi(N, b, b)
        X, T = np.meshgrid(outer.nodes, inner.nodes, indexing="ij")
        x, y = X, np.sqrt(X) * T
    else:
        a, b = f.params
        outer = gauss_laguerre(N, a + 1)
        inner = gauss_jacobi(N, b, 0.0) if f.family is Family.LAGUERRE_JACOBI else gauss_laguerre(N, b)
        X, U = np.meshgrid(outer.nodes, inner.nodes, indexing="ij")
        x, y = X, X * U
    W = np.outer(outer.weights, inner.weights)
    x, y, W = (np.ascontiguousarray(v).ravel() for v in (x, y, W))
    for v in (x, y, W):
        v.flags.writeable = False
    return Rule2D(f.family, outer, inner, x, y, W)


def inner_product(f: FamilySpec, u, v, max_total_degree: int) -> float:
    """sum over the mapped nodes of weight * u * v.

    ``u`` and ``v`` are callables of (x, y) arrays or precomputed value arrays
    on the nodes of ``family_rule(f, max_total_degree)``.
    """
    rule = family_rule(f, max_total_degree)
    uv = u(rule.x, rule.y) if callable(u) else np.asarray(u)
    vv = v(rule.x, rule.y) if callable(v) else np.asarray(v)
    return float(np.sum(rule.weights * uv * vv))

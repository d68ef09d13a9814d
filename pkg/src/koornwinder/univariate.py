"""Jacobi and generalized Laguerre polynomials: evaluation, norms and
first-order parameter-derivative expansions.

Evaluation uses the forward three-term recurrence and accepts scalars or
numpy arrays for ``x``.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Callable

import numpy as np

from .special import ln_gamma, pochhammer

__all__ = [
    "JacobiParams",
    "LaguerreParams",
    "Expansion1D",
    "jacobi_eval",
    "laguerre_eval",
    "jacobi_norm",
    "laguerre_norm",
    "jacobi_dalpha",
    "jacobi_dbeta",
    "laguerre_dalpha",
]


@dataclass(frozen=True)
class JacobiParams:
    alpha: float
    beta: float

    def __post_init__(self):
        if not (self.alpha > -1 and self.beta > -1):
            raise ValueError(f"Jacobi parameters need alpha, beta > -1, got {self}")


@dataclass(frozen=True)
class LaguerreParams:
    alpha: float

    def __post_init__(self):
        if not self.alpha > -1:
            raise ValueError(f"Laguerre parameter needs alpha > -1, got {self}")


@dataclass(frozen=True)
class Expansion1D:
    """d/d(param) p_n = self_coefficient * p_n + sum(c * p_k for k, c in lower_terms)."""

    n: int
    self_coefficient: float
    lower_terms: tuple[tuple[int, float], ...]

    @property
    def is_empty(self) -> bool:
        return self.self_coefficient == 0 and not self.lower_terms

    def evaluate(self, poly: Callable[[int, np.ndarray], np.ndarray], x):
        """Evaluate against a basis ``poly(degree, x)`` of the same family."""
        out = self.self_coefficient * poly(self.n, x) if self.self_coefficient else 0.0 * np.asarray(x, dtype=float)
        for k, c in self.lower_terms:
            out = out + c * poly(k, x)
        return _as_output(out)


def _as_output(v):
    v = np.asarray(v, dtype=float)
    return float(v) if v.ndim == 0 else v


def _check_degree(n: int) -> None:
    if n < 0 or int(n) != n:
        raise ValueError(f"degree must be a nonnegative integer, got {n!r}")


def jacobi_eval(n: int, p: JacobiParams, x):
    """P_n^{(alpha, beta)}(x) by the three-term recurrence in n."""
    _check_degree(n)
    a, b = p.alpha, p.beta
    x = np.asarray(x, dtype=float)
    prev = np.ones_like(x)
    if n == 0:
        return _as_output(prev)
    cur = 0.5 * (a + b + 2) * x + 0.5 * (a - b)
    for m in range(2, n + 1):
        s = 2 * m + a + b
        c1 = 2 * m * (m + a + b) * (s - 2)
        c2 = (s - 1) * (s * (s - 2) * x + a * a - b * b)
        c3 = 2 * (m + a - 1) * (m + b - 1) * s
        prev, cur = cur, (c2 * cur - c3 * prev) / c1
    return _as_output(cur)


def laguerre_eval(n: int, p: LaguerreParams, x):
    """L_n^{(alpha)}(x) by the three-term recurrence in n."""
    _check_degree(n)
    a = p.alpha
    x = np.asarray(x, dtype=float)
    prev = np.ones_like(x)
    if n == 0:
        return _as_output(prev)
    cur = 1 + a - x
    for m in range(2, n + 1):
        prev, cur = cur, ((2 * m - 1 + a - x) * cur - (m - 1 + a) * prev) / m
    return _as_output(cur)


def ln_jacobi_norm(n: int, p: JacobiParams) -> float:
    _check_degree(n)
    a, b = p.alpha, p.beta
    out = (a + b + 1) * math.log(2) + ln_gamma(a + n + 1) + ln_gamma(b + n + 1) - ln_gamma(n + 1)
    if n == 0:
        # (a+b+1) Gamma(a+b+1) = Gamma(a+b+2); a+b+1 may be <= 0 here
        return out - ln_gamma(a + b + 2)
    return out - math.log(a + b + 2 * n + 1) - ln_gamma(a + b + n + 1)


def jacobi_norm(n: int, p: JacobiParams) -> float:
    """Squared norm of P_n^{(alpha, beta)} under (1-x)^alpha (1+x)^beta on [-1, 1]."""
    return math.exp(ln_jacobi_norm(n, p))


def laguerre_norm(n: int, p: LaguerreParams) -> float:
    """Gamma(alpha + n + 1) / n!, the squared norm under x^alpha e^{-x} on [0, inf)."""
    _check_degree(n)
    return math.exp(ln_gamma(p.alpha + n + 1) - ln_gamma(n + 1))


def _jacobi_lower(n: int, a: float, b: float) -> list[tuple[int, float]]:
    # term_k = (2k+c) r_k / ((n-k)(n+k+c)), r_k = (b+1+k)_{n-k} / (c+k)_{n-k}, c = a+b+1.
    # The k = 0 term is rewritten as (b+1) r_1 / (n (n+c)) so that c = 0 is harmless.
    c = a + b + 1
    r = pochhammer(b + 2, n - 1) / pochhammer(c + 1, n - 1)
    terms = [(0, (b + 1) * r / (n * (n + c)))]
    for k in range(1, n):
        if k > 1:
            r *= (c + k - 1) / (b + k)
        terms.append((k, (2 * k + c) * r / ((n - k) * (n + k + c))))
    return terms


def _jacobi_self(n: int, a: float, b: float) -> float:
    return sum(1.0 / (n + k + a + b + 1) for k in range(n))


def jacobi_dalpha(n: int, p: JacobiParams) -> Expansion1D:
    """Expansion of dP_n^{(alpha,beta)}/d(alpha) in P_0, ..., P_n."""
    _check_degree(n)
    if n == 0:
        return Expansion1D(0, 0.0, ())
    a, b = p.alpha, p.beta
    return Expansion1D(n, _jacobi_self(n, a, b), tuple(_jacobi_lower(n, a, b)))


def jacobi_dbeta(n: int, p: JacobiParams) -> Expansion1D:
    """Expansion of dP_n^{(alpha,beta)}/d(beta); roles of alpha and beta swap and
    lower terms pick up (-1)^(n+k)."""
    _check_degree(n)
    if n == 0:
        return Expansion1D(0, 0.0, ())
    a, b = p.alpha, p.beta
    lower = tuple((k, (-1) ** (n + k) * c) for k, c in _jacobi_lower(n, b, a))
    return Expansion1D(n, _jacobi_self(n, a, b), lower)


def laguerre_dalpha(n: int) -> Expansion1D:
    """dL_n^{(alpha)}/d(alpha) = sum_{k<n} L_k^{(alpha)} / (n - k); independent of alpha."""
    _check_degree(n)
    return Expansion1D(n, 0.0, tuple((k, 1.0 / (n - k)) for k in range(n)))

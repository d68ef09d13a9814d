"""First-order parameter-derivative expansions of the four families as term lists.

Most expansions are finite combinations of same-family polynomials with
constant coefficients.  The beta-derivatives of the two Laguerre families are
not: their lower terms are ``x**(s+1) * P^{(alpha+2s+2, beta)}_{n-s-1,k-s-1}``,
which is encoded here by ``x_power`` and ``alpha_shift`` on each term.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .families import Family, FamilySpec, MultiIndex, family_eval, _index
from .special import pochhammer

__all__ = [
    "UnsupportedParameterError",
    "ExpansionTerm2D",
    "Expansion2D",
    "SUPPORTED_PARAMS",
    "derivative_expansion",
    "eval_expansion",
]


class UnsupportedParameterError(ValueError):
    """No closed-form expansion exists here for this (family, parameter) pair."""


SUPPORTED_PARAMS = {
    Family.BIANGLE: ("alpha",),
    Family.SQUARE: ("alpha", "beta", "gamma", "delta"),
    Family.LAGUERRE_JACOBI: ("alpha", "beta"),
    Family.LAGUERRE_LAGUERRE: ("alpha", "beta"),
}


@dataclass(frozen=True)
class ExpansionTerm2D:
    coefficient: float
    index: MultiIndex
    x_power: int = 0
    alpha_shift: int = 0

    @property
    def is_self(self) -> bool:
        return self.x_power == 0 and self.alpha_shift == 0


@dataclass(frozen=True)
class Expansion2D:
    family: FamilySpec
    base_index: MultiIndex
    parameter: str
    terms: tuple[ExpansionTerm2D, ...]

    @property
    def is_empty(self) -> bool:
        return not self.terms

    @property
    def self_coefficient(self) -> float:
        for t in self.terms:
            if t.index == self.base_index and t.is_self:
                return t.coefficient
        return 0.0

    def records(self) -> list[dict]:
        return [
            {"m": t.index.n, "j": t.index.k, "coefficient": t.coefficient, "x_power": t.x_power, "alpha_shift": t.alpha_shift}
            for t in self.terms
        ]


def _self_sum(count: int, offset: float) -> float:
    # sum_{s=0}^{count-1} 1 / (offset + s)
    return sum(1.0 / (offset + s) for s in range(count))


def _biangle_alpha(a, b, n, k):
    N = n - k
    terms = [ExpansionTerm2D(_self_sum(N, a + b + n + 1.5), MultiIndex(n, k))]
    for s in range(N):
        c = (a + b + 2 * n - k - 2 * s - 0.5) * pochhammer(b + n - s + 0.5, s + 1) / (
            (s + 1) * (a + b + 2 * n - k - s + 0.5) * pochhammer(a + b + n - s + 0.5, s + 1)
        )
        terms.append(ExpansionTerm2D(c, MultiIndex(n - s - 1, k)))
    return terms


def _jacobi_lower_coef(p, q, N, s):
    # coefficient of P_{N-s-1} in d/dp P_N^{(p,q)}; the d/dq case is this with
    # p and q swapped and multiplied by (-1)^(s+1)
    return (p + q + 2 * N - 2 * s - 1) * pochhammer(q + N - s, s + 1) / (
        (s + 1) * (p + q + 2 * N - s) * pochhammer(p + q + N - s, s + 1)
    )


def _square(params, name, n, k):
    a, b, c, d = params
    if name in ("alpha", "beta"):
        N, p, q = n - k, a, b
        target = lambda s: MultiIndex(n - s - 1, k)  # noqa: E731
    else:
        N, p, q = k, c, d
        target = lambda s: MultiIndex(n - s - 1, k - s - 1)  # noqa: E731
    terms = [ExpansionTerm2D(_self_sum(N, p + q + N + 1), MultiIndex(n, k))]
    for s in range(N):
        if name in ("alpha", "gamma"):
            coef = _jacobi_lower_coef(p, q, N, s)
        else:
            coef = (-1) ** (s + 1) * _jacobi_lower_coef(q, p, N, s)
        terms.append(ExpansionTerm2D(coef, target(s)))
    return terms


def _laguerre_alpha(n, k):
    return [ExpansionTerm2D(1.0 / (n - k - s), MultiIndex(k + s, k)) for s in range(n - k)]


def _laguerre_jacobi_beta(b, n, k):
    terms = [ExpansionTerm2D(_self_sum(k, b + k + 1), MultiIndex(n, k))]
    for s in range(k):
        c = (b + 2 * k - 2 * s - 1) * pochhammer(k - s, s + 1) / ((s + 1) * (b + 2 * k - s) * pochhammer(b + k - s, s + 1))
        terms.append(ExpansionTerm2D(c, MultiIndex(n - s - 1, k - s - 1), s + 1, 2 * s + 2))
    return terms


def _laguerre_laguerre_beta(n, k):
    return [ExpansionTerm2D(1.0 / (s + 1), MultiIndex(n - s - 1, k - s - 1), s + 1, 2 * s + 2) for s in range(k)]


def _acts_on_first_factor(f: FamilySpec, param: str) -> bool:
    # parameters of the x-factor only; the derivative vanishes when n = k
    return param == "alpha" or (f.family is Family.SQUARE and param == "beta")


def derivative_expansion(f: FamilySpec, param: str, idx) -> Expansion2D:
    """Closed-form expansion of d P_{n,k} / d(param).

    The term list starts with the self term (m, j) = (n, k) where the family
    has one, followed by the lower terms in increasing s.  Expansions that
    vanish identically (n = k for alpha, k = 0 for the second-factor
    parameters) come back with no terms.
    """
    idx = _index(idx)
    n, k = idx.n, idx.k
    if param not in SUPPORTED_PARAMS[f.family]:
        if param in f.param_names:
            raise UnsupportedParameterError(f"no closed-form {param}-derivative for the {f.family.value} family")
        raise ValueError(f"{f.family.value} has no parameter {param!r}")

    if _acts_on_first_factor(f, param):
        vanishes = n == k
    else:
        vanishes = k == 0
    if vanishes:
        terms = []
    elif f.family is Family.BIANGLE:
        terms = _biangle_alpha(*f.params, n, k)
    elif f.family is Family.SQUARE:
        terms = _square(f.params, param, n, k)
    elif param == "alpha":
        terms = _laguerre_alpha(n, k)
    elif f.family is Family.LAGUERRE_JACOBI:
        terms = _laguerre_jacobi_beta(f.params[1], n, k)
    else:
        terms = _laguerre_laguerre_beta(n, k)
    return Expansion2D(f, idx, param, tuple(terms))


def eval_expansion(e: Expansion2D, x, y):
    """sum over terms of coefficient * x**x_power * P_{m,j}(alpha + alpha_shift)(x, y)."""
    x = np.asarray(x, dtype=float)
    y = np.asarray(y, dtype=float)
    out = np.zeros(np.broadcast(x, y).shape)
    for t in e.terms:
        fam = e.family
        if t.alpha_shift:
            fam = fam.with_param("alpha", fam.get("alpha") + t.alpha_shift)
        v = family_eval(fam, t.index, x, y)
        if t.x_power:
            v = v * x**t.x_power
        out = out + t.coefficient * v
    return float(out) if out.ndim == 0 else out

"""Scalar special functions: log-gamma, gamma ratios, beta and the Pochhammer symbol.

Everything that feeds a norm constant goes through the log domain so that
factors such as Gamma(alpha + n + k + 2) never overflow at moderate degree.
"""

from __future__ import annotations

import math

__all__ = ["ln_gamma", "gamma_ratio", "ln_beta", "pochhammer"]


def _check_positive(*args: float) -> None:
    for a in args:
        if not a > 0:
            raise ValueError(f"gamma-type argument must be positive, got {a!r}")


def ln_gamma(x: float) -> float:
    """ln Gamma(x) for x > 0."""
    _check_positive(x)
    return math.lgamma(x)


def gamma_ratio(a: float, b: float) -> float:
    """Gamma(a) / Gamma(b), evaluated as exp(ln Gamma(a) - ln Gamma(b))."""
    _check_positive(a, b)
    return math.exp(math.lgamma(a) - math.lgamma(b))


def ln_beta(a: float, b: float) -> float:
    _check_positive(a, b)
    return math.lgamma(a) + math.lgamma(b) - math.lgamma(a + b)


def pochhammer(a: float, k: int) -> float:
    """Rising factorial (a)_k = a (a+1) ... (a+k-1), with (a)_0 = 1.

    Computed as a plain product so non-positive bases are exact.
    """
    if k < 0:
        raise ValueError(f"pochhammer order must be nonnegative, got {k}")
    out = 1.0
    for i in range(k):
        out *= a + i
    return out

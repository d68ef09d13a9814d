"""The four Koornwinder families used here.

====================  ================================  =========================
family                P_{n,k}(x, y)                     domain
====================  ================================  =========================
biangle (a, b)        P^{(a,b+k+1/2)}_{n-k}(2x-1)       y^2 < x < 1
                      * x^{k/2} P^{(b,b)}_k(y/sqrt(x))
square (a, b, c, d)   P^{(a,b)}_{n-k}(x) P^{(c,d)}_k(y)  (-1, 1)^2
laguerre-jacobi       L^{(a+2k+1)}_{n-k}(x)             -x < y < x, x > 0
  (a, b)              * x^k P^{(b,0)}_k(y/x)
laguerre-laguerre     L^{(a+2k+1)}_{n-k}(x)             x > 0, y > 0
  (a, b)              * x^k L^{(b)}_k(y/x)
====================  ================================  =========================
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass, replace

import numpy as np

from .special import ln_gamma
from .univariate import (
    JacobiParams,
    LaguerreParams,
    jacobi_eval,
    jacobi_norm,
    laguerre_eval,
    ln_jacobi_norm,
)

__all__ = [
    "Family",
    "FamilySpec",
    "MultiIndex",
    "DomainError",
    "family_eval",
    "family_weight",
    "family_norm",
    "in_domain",
]


class DomainError(ValueError):
    """A point lies outside the region where a family is evaluated."""


class Family(str, enum.Enum):
    BIANGLE = "biangle"
    SQUARE = "square"
    LAGUERRE_JACOBI = "laguerre-jacobi"
    LAGUERRE_LAGUERRE = "laguerre-laguerre"


PARAM_NAMES = {
    Family.BIANGLE: ("alpha", "beta"),
    Family.SQUARE: ("alpha", "beta", "gamma", "delta"),
    Family.LAGUERRE_JACOBI: ("alpha", "beta"),
    Family.LAGUERRE_LAGUERRE: ("alpha", "beta"),
}


@dataclass(frozen=True)
class FamilySpec:
    """A family tag plus its parameter vector; validated once, at construction."""

    family: Family
    params: tuple[float, ...]

    def __post_init__(self):
        object.__setattr__(self, "family", Family(self.family))
        object.__setattr__(self, "params", tuple(float(p) for p in self.params))
        names = PARAM_NAMES[self.family]
        if len(self.params) != len(names):
            raise ValueError(f"{self.family.value} takes {len(names)} parameters {names}, got {len(self.params)}")
        if not all(p > -1 for p in self.params):
            raise ValueError(f"{self.family.value} parameters must all exceed -1, got {self.params}")
        if self.family is Family.LAGUERRE_LAGUERRE and not self.params[0] - self.params[1] > -1:
            raise ValueError(f"laguerre-laguerre needs alpha - beta > -1, got {self.params}")

    @classmethod
    def biangle(cls, alpha, beta):
        return cls(Family.BIANGLE, (alpha, beta))

    @classmethod
    def square(cls, alpha, beta, gamma, delta):
        return cls(Family.SQUARE, (alpha, beta, gamma, delta))

    @classmethod
    def laguerre_jacobi(cls, alpha, beta):
        return cls(Family.LAGUERRE_JACOBI, (alpha, beta))

    @classmethod
    def laguerre_laguerre(cls, alpha, beta):
        return cls(Family.LAGUERRE_LAGUERRE, (alpha, beta))

    @property
    def param_names(self) -> tuple[str, ...]:
        return PARAM_NAMES[self.family]

    def get(self, name: str) -> float:
        return self.params[self._slot(name)]

    def with_param(self, name: str, value: float) -> FamilySpec:
        params = list(self.params)
        params[self._slot(name)] = value
        return replace(self, params=tuple(params))

    def _slot(self, name: str) -> int:
        try:
            return self.param_names.index(name)
        except ValueError:
            raise ValueError(f"{self.family.value} has no parameter {name!r}") from None


@dataclass(frozen=True, order=True)
class MultiIndex:
    n: int
    k: int

    def __post_init__(self):
        if int(self.n) != self.n or int(self.k) != self.k or not 0 <= self.k <= self.n:
            raise ValueError(f"need integers 0 <= k <= n, got (n, k) = ({self.n}, {self.k})")
        object.__setattr__(self, "n", int(self.n))
        object.__setattr__(self, "k", int(self.k))


def _index(idx) -> MultiIndex:
    return idx if isinstance(idx, MultiIndex) else MultiIndex(*idx)


def in_domain(f: FamilySpec, x, y, strict: bool = True):
    """Boolean (array) membership test for the family's region."""
    x = np.asarray(x, dtype=float)
    y = np.asarray(y, dtype=float)
    lt = np.less if strict else np.less_equal
    if f.family is Family.BIANGLE:
        return lt(y * y, x) & lt(x, 1.0)
    if f.family is Family.SQUARE:
        return lt(-1.0, x) & lt(x, 1.0) & lt(-1.0, y) & lt(y, 1.0)
    if f.family is Family.LAGUERRE_JACOBI:
        return lt(0.0, x) & lt(-x, y) & lt(y, x) if strict else (x >= 0) & (np.abs(y) <= x)
    return lt(0.0, x) & lt(0.0, y)


def family_eval(f: FamilySpec, idx, x, y):
    """P_{n,k}(x, y) for the family; ``x`` and ``y`` may be arrays.

    Points outside the closed domain are rejected, as is x = 0 whenever
    k >= 1 and the scaling function vanishes there.
    """
    idx = _index(idx)
    n, k = idx.n, idx.k
    x = np.asarray(x, dtype=float)
    y = np.asarray(y, dtype=float)
    if not np.all(in_domain(f, x, y, strict=False)):
        raise DomainError(f"point outside the {f.family.value} domain")
    if f.family is Family.SQUARE:
        a, b, c, d = f.params
        out = jacobi_eval(n - k, JacobiParams(a, b), x) * jacobi_eval(k, JacobiParams(c, d), y)
        return _scalar(out)
    if k >= 1 and np.any(x <= 0):
        raise DomainError(f"{f.family.value} P_{{{n},{k}}} is not evaluated on the boundary x = 0")
    a, b = f.params
    if f.family is Family.BIANGLE:
        r = np.sqrt(x)
        t = np.divide(y, r, out=np.zeros_like(y + r), where=r > 0)
        out = jacobi_eval(n - k, JacobiParams(a, b + k + 0.5), 2 * x - 1) * r**k * jacobi_eval(k, JacobiParams(b, b), t)
        return _scalar(out)
    u = np.divide(y, x, out=np.zeros_like(y + x), where=x > 0)
    radial = laguerre_eval(n - k, LaguerreParams(a + 2 * k + 1), x) * x**k
    if f.family is Family.LAGUERRE_JACOBI:
        return _scalar(radial * jacobi_eval(k, JacobiParams(b, 0.0), u))
    return _scalar(radial * laguerre_eval(k, LaguerreParams(b), u))


def _scalar(v):
    v = np.asarray(v, dtype=float)
    return float(v) if v.ndim == 0 else v


def family_weight(f: FamilySpec, x, y):
    """Weight function at interior points."""
    x = np.asarray(x, dtype=float)
    y = np.asarray(y, dtype=float)
    if not np.all(in_domain(f, x, y, strict=True)):
        raise DomainError(f"weight is only evaluated strictly inside the {f.family.value} domain")
    if f.family is Family.BIANGLE:
        a, b = f.params
        out = (1 - x) ** a * (x - y * y) ** b
    elif f.family is Family.SQUARE:
        a, b, c, d = f.params
        out = (1 - x) ** a * (1 + x) ** b * (1 - y) ** c * (1 + y) ** d
    elif f.family is Family.LAGUERRE_JACOBI:
        a, b = f.params
        out = x ** (a - b) * np.exp(-x) * (x - y) ** b
    else:
        a, b = f.params
        out = x ** (a - b) * y**b * np.exp(-(x + y / x))
    return _scalar(out)


def ln_family_norm(f: FamilySpec, idx) -> float:
    idx = _index(idx)
    n, k = idx.n, idx.k
    if f.family is Family.SQUARE:
        a, b, c, d = f.params
        return ln_jacobi_norm(n - k, JacobiParams(a, b)) + ln_jacobi_norm(k, JacobiParams(c, d))
    a, b = f.params
    if f.family is Family.BIANGLE:
        num = (2 * b + 1) * math.log(2) + 2 * ln_gamma(b + k + 1) + ln_gamma(a + n - k + 1) + ln_gamma(b + n + 1.5)
        den = ln_gamma(n - k + 1) + ln_gamma(k + 1)
        # (2b+2k+1) Gamma(2b+k+1) and Gamma(a+b+n+3/2) (a+b+2n-k+3/2) each
        # collapse to one Gamma when k = 0, resp. n = k, where the split
        # factors may be non-positive.
        if k == 0:
            den += ln_gamma(2 * b + 2)
        else:
            den += math.log(2 * b + 2 * k + 1) + ln_gamma(2 * b + k + 1)
        if n == k:
            den += ln_gamma(a + b + n + 2.5)
        else:
            den += ln_gamma(a + b + n + 1.5) + math.log(a + b + 2 * n - k + 1.5)
        return num - den
    if f.family is Family.LAGUERRE_JACOBI:
        return (b + 1) * math.log(2) + ln_gamma(a + n + k + 2) - ln_gamma(n - k + 1) - math.log(b + 2 * k + 1)
    return ln_gamma(b + k + 1) + ln_gamma(a + n + k + 2) - ln_gamma(k + 1) - ln_gamma(n - k + 1)


def family_norm(f: FamilySpec, idx) -> float:
    """Closed-form squared norm <P_{n,k}, P_{n,k}>."""
    return math.exp(ln_family_norm(f, idx))


def square_norm_product(f: FamilySpec, idx) -> float:
    """d_{n-k}^{(a,b)} d_k^{(c,d)} computed from the univariate norms directly."""
    idx = _index(idx)
    a, b, c, d = f.params
    return jacobi_norm(idx.n - idx.k, JacobiParams(a, b)) * jacobi_norm(idx.k, JacobiParams(c, d))

"""Independent oracles for the closed forms.

Derivative expansions are checked against central finite differences of
``family_eval``; orthogonality constants and norms against Gauss quadrature.
Every comparison becomes a :class:`VerificationCase` whose ``passed`` flag
is ``abs_error <= max(atol, rtol * |oracle|)``.
"""

from __future__ import annotations

import enum
import math
from dataclasses import asdict, dataclass
from typing import Iterable, Sequence

import mpmath
import numpy as np

from .derivatives import SUPPORTED_PARAMS, UnsupportedParameterError, derivative_expansion, eval_expansion
from .families import Family, FamilySpec, MultiIndex, family_eval, family_norm
from .quadrature import Rule1D, family_rule
from .special import pochhammer

__all__ = [
    "StepError",
    "VerificationCase",
    "OrthoCase",
    "OrthoConstant",
    "ORTHO_PARAMS",
    "fd_derivative",
    "ortho_constant",
    "sample_params",
    "sample_points",
    "verify_derivatives",
    "verify_orthogonality",
    "verify_norms",
    "verify_quadrature",
    "indices",
    "summarize",
    "verify_rule",
    "exact_moment",
]

FD_RTOL, FD_ATOL = 1e-6, 1e-8
PARAM_LO, PARAM_HI = -0.8, 4.0

# parameters with a closed-form table for <P_{m,j}, dP_{n,k}/d(param)>
ORTHO_PARAMS = {
    Family.BIANGLE: ("alpha",),
    Family.SQUARE: ("alpha", "beta"),
    Family.LAGUERRE_JACOBI: ("alpha",),
    Family.LAGUERRE_LAGUERRE: ("alpha",),
}


class StepError(ValueError):
    """A finite-difference step leaves the valid parameter region."""


@dataclass
class VerificationCase:
    kind: str
    family: str
    params: tuple[float, ...]
    parameter: str
    n: int
    k: int
    m: int | None
    j: int | None
    x: float | None
    y: float | None
    computed: float
    oracle: float
    abs_error: float
    rel_error: float
    rtol: float
    atol: float
    passed: bool
    note: str = ""

    @classmethod
    def compare(cls, computed: float, oracle: float, rtol: float, atol: float, **fields) -> "VerificationCase":
        computed, oracle = float(computed), float(oracle)
        err = abs(computed - oracle)
        rel = err / abs(oracle) if oracle != 0 else (0.0 if err == 0 else math.inf)
        passed = bool(err <= max(atol, rtol * abs(oracle)))
        return cls(computed=computed, oracle=oracle, abs_error=err, rel_error=rel, rtol=rtol, atol=atol, passed=passed, **fields)

    @classmethod
    def failure(cls, note: str, **fields) -> "VerificationCase":
        nan = math.nan
        return cls(computed=nan, oracle=nan, abs_error=nan, rel_error=nan, rtol=nan, atol=nan, passed=False, note=note, **fields)

    @property
    def key(self) -> tuple:
        return (
            self.kind,
            self.family,
            self.params,
            self.parameter,
            self.n,
            self.k,
            -1 if self.m is None else self.m,
            -1 if self.j is None else self.j,
            math.inf if self.x is None else self.x,
            math.inf if self.y is None else self.y,
        )

    def record(self) -> dict:
        out = asdict(self)
        out["params"] = ",".join(repr(p) for p in self.params)
        return out


class OrthoCase(str, enum.Enum):
    ZERO = "Zero"
    OFF_DIAGONAL_ZERO = "OffDiagonalZero"
    LOWER_TRIANGULAR = "LowerTriangular"
    DIAGONAL = "Diagonal"


@dataclass(frozen=True)
class OrthoConstant:
    case: OrthoCase
    value: float = 0.0

    def __post_init__(self):
        if self.case in (OrthoCase.ZERO, OrthoCase.OFF_DIAGONAL_ZERO) and self.value != 0:
            raise ValueError("zero cases carry value 0")


def indices(n_max: int) -> list[MultiIndex]:
    return [MultiIndex(n, k) for n in range(n_max + 1) for k in range(n + 1)]


def _default_step(value: float) -> float:
    return 1e-5 * max(1.0, abs(value))


def fd_derivative(f: FamilySpec, param: str, idx, x, y, h: float | None = None):
    """Central difference [P(param + h) - P(param - h)] / (2h) of family_eval."""
    lam = f.get(param)
    h = _default_step(lam) if h is None else h
    if not h > 0:
        raise ValueError("step must be positive")
    try:
        up = f.with_param(param, lam + h)
        down = f.with_param(param, lam - h)
    except ValueError as exc:
        raise StepError(f"step {h} on {param} leaves the valid region: {exc}") from None
    return (np.asarray(family_eval(up, idx, x, y)) - family_eval(down, idx, x, y)) / (2 * h)


def _biangle_A(a, b, n, k, m):
    return (a + b - k + 2 * m + 1.5) * pochhammer(b + m + 1.5, n - m) / (
        (n - m) * (a + b + n - k + m + 1.5) * pochhammer(a + b + m + 1.5, n - m)
    )


def _square_C(a, b, n, k, m):
    return (a + b + 2 * m - 2 * k + 1) * pochhammer(b - k + m + 1, n - m) / (
        (n - m) * (a + b + n + m - 2 * k + 1) * pochhammer(a + b - k + m + 1, n - m)
    )


def _square_E(a, b, n, k, m):
    # sign (-1)^(n-m): the lower term s = n-m-1 of the beta expansion carries (-1)^(s+1)
    return (-1) ** (n - m) * (a + b + 2 * m - 2 * k + 1) * pochhammer(a - k + m + 1, n - m) / (
        (n - m) * (a + b + n + m - 2 * k + 1) * pochhammer(a + b - k + m + 1, n - m)
    )


def ortho_constant(f: FamilySpec, param: str, n: int, k: int, m: int, j: int) -> OrthoConstant:
    """Closed-form <P_{m,j}, dP_{n,k}/d(param)> following each family's case table."""
    MultiIndex(n, k), MultiIndex(m, j)
    if param not in ORTHO_PARAMS[f.family]:
        raise UnsupportedParameterError(f"no closed-form orthogonality table for d/d{param} on {f.family.value}")
    if k != j:
        return OrthoConstant(OrthoCase.OFF_DIAGONAL_ZERO)
    if n == k:
        return OrthoConstant(OrthoCase.ZERO)
    laguerre = f.family in (Family.LAGUERRE_JACOBI, Family.LAGUERRE_LAGUERRE)
    if m > n or (laguerre and m == n):
        return OrthoConstant(OrthoCase.ZERO)
    if m == n:
        if f.family is Family.BIANGLE:
            a, b = f.params
            s = sum(1.0 / (a + b + n + t + 1.5) for t in range(n - k))
        else:
            a, b = f.params[:2]
            s = sum(1.0 / (n - k + t + a + b + 1) for t in range(n - k))
        return OrthoConstant(OrthoCase.DIAGONAL, s * family_norm(f, (n, k)))
    # n > m >= k = j
    norm = family_norm(f, (m, k))
    if f.family is Family.BIANGLE:
        value = _biangle_A(*f.params, n, k, m) * norm
    elif f.family is Family.SQUARE:
        a, b = f.params[:2]
        value = (_square_C if param == "alpha" else _square_E)(a, b, n, k, m) * norm
    else:
        value = norm / (n - m)
    return OrthoConstant(OrthoCase.LOWER_TRIANGULAR, value)


def sample_params(family: Family | str, rng: np.random.Generator) -> FamilySpec:
    """Uniform draw in [-0.8, 4] per parameter; alpha - beta > -0.8 for laguerre-laguerre."""
    family = Family(family)
    count = 4 if family is Family.SQUARE else 2
    while True:
        p = rng.uniform(PARAM_LO, PARAM_HI, size=count)
        if family is Family.LAGUERRE_LAGUERRE and not p[0] - p[1] > PARAM_LO:
            continue
        return FamilySpec(family, tuple(float(v) for v in p))


def sample_points(family: Family | str, rng: np.random.Generator, count: int) -> tuple[np.ndarray, np.ndarray]:
    """Interior points kept away from the singular boundaries."""
    family = Family(family)
    if family is Family.BIANGLE:
        x = rng.uniform(0.1, 0.9, count)
        y = rng.uniform(-0.9, 0.9, count) * np.sqrt(x)
    elif family is Family.SQUARE:
        x = rng.uniform(-0.9, 0.9, count)
        y = rng.uniform(-0.9, 0.9, count)
    elif family is Family.LAGUERRE_JACOBI:
        x = rng.uniform(0.5, 8.0, count)
        y = rng.uniform(-0.9, 0.9, count) * x
    else:
        x = rng.uniform(0.5, 8.0, count)
        y = rng.uniform(0.1, 8.0, count)
    return x, y


def _base(kind, f: FamilySpec, param, idx, other=None, x=None, y=None) -> dict:
    return dict(
        kind=kind,
        family=f.family.value,
        params=f.params,
        parameter=param,
        n=idx.n,
        k=idx.k,
        m=None if other is None else other.n,
        j=None if other is None else other.k,
        x=None if x is None else float(x),
        y=None if y is None else float(y),
    )


def verify_derivatives(
    f: FamilySpec,
    param: str,
    n_max: int,
    points: int | tuple[Sequence[float], Sequence[float]] = 10,
    seed: int = 0,
    rtol: float = FD_RTOL,
    atol: float = FD_ATOL,
) -> list[VerificationCase]:
    """Compare every expansion with n <= n_max against central differences.

    ``points`` is either a count of seeded random interior points or an
    explicit ``(xs, ys)`` pair.  An unsupported parameter yields no cases.
    """
    if param not in SUPPORTED_PARAMS[f.family]:
        f.get(param)
        return []
    if isinstance(points, int):
        xs, ys = sample_points(f.family, np.random.default_rng(seed), points)
    else:
        xs, ys = (np.asarray(v, dtype=float) for v in points)
    cases = []
    for idx in indices(n_max):
        try:
            computed = np.atleast_1d(eval_expansion(derivative_expansion(f, param, idx), xs, ys))
            oracle = np.atleast_1d(fd_derivative(f, param, idx, xs, ys))
        except ValueError as exc:
            cases.extend(VerificationCase.failure(str(exc), **_base("deriv", f, param, idx, x=x, y=y)) for x, y in zip(xs, ys))
            continue
        for x, y, c, o in zip(xs, ys, computed, oracle):
            cases.append(VerificationCase.compare(c, o, rtol, atol, **_base("deriv", f, param, idx, x=x, y=y)))
    return cases


def _basis_on_rule(f: FamilySpec, rule, n_max: int) -> dict[MultiIndex, np.ndarray]:
    return {idx: np.asarray(family_eval(f, idx, rule.x, rule.y)) for idx in indices(n_max)}


def verify_orthogonality(
    f: FamilySpec, param: str, n_max: int, rtol: float = 1e-8, atol: float = 1e-10
) -> list[VerificationCase]:
    """Quadrature value of <P_{m,j}, dP_{n,k}/d(param)> against the closed-form table.

    The derivative is the evaluated expansion.  Zero cases use the absolute
    tolerance ``atol * sqrt(h_{n,k} h_{m,j})``.  Parameters with an expansion
    but no table (gamma, delta on the square; beta on the Laguerre families)
    are compared against the quadrature of the finite-difference derivative
    at FD tolerances instead.
    """
    if param not in SUPPORTED_PARAMS[f.family]:
        f.get(param)
        return []
    closed = param in ORTHO_PARAMS[f.family]
    rule = family_rule(f, 2 * n_max)
    basis = _basis_on_rule(f, rule, n_max)
    cases = []
    for idx in indices(n_max):
        deriv = np.asarray(eval_expansion(derivative_expansion(f, param, idx), rule.x, rule.y))
        fd = None if closed else np.asarray(fd_derivative(f, param, idx, rule.x, rule.y))
        for other in indices(n_max):
            computed = float(np.sum(rule.weights * basis[other] * deriv))
            scale = math.sqrt(family_norm(f, idx) * family_norm(f, other))
            fields = _base("ortho", f, param, idx, other)
            if closed:
                const = ortho_constant(f, param, idx.n, idx.k, other.n, other.k)
                case = VerificationCase.compare(computed, const.value, rtol, atol * scale, note=const.case.value, **fields)
            else:
                oracle = float(np.sum(rule.weights * basis[other] * fd))
                case = VerificationCase.compare(computed, oracle, FD_RTOL, FD_ATOL * scale, note="quadrature-fd", **fields)
            cases.append(case)
    return cases


def verify_norms(f: FamilySpec, n_max: int, rtol: float = 1e-9, atol: float = 1e-10) -> list[VerificationCase]:
    """Quadrature Gram matrix against the closed-form diagonal norms."""
    rule = family_rule(f, 2 * n_max)
    basis = _basis_on_rule(f, rule, n_max)
    cases = []
    for idx in indices(n_max):
        for other in indices(n_max):
            computed = float(np.sum(rule.weights * basis[idx] * basis[other]))
            fields = _base("norms", f, "", idx, other)
            if idx == other:
                cases.append(VerificationCase.compare(computed, family_norm(f, idx), rtol, 0.0, note="Diagonal", **fields))
            else:
                scale = math.sqrt(family_norm(f, idx) * family_norm(f, other))
                cases.append(VerificationCase.compare(computed, 0.0, rtol, atol * scale, note="OffDiagonalZero", **fields))
    return cases


def exact_moment(descriptor: tuple, p: int) -> float:
    """Closed-form moment of degree p, evaluated in high precision.

    For Jacobi weights the moment of (1 + x)^p (resp. x^p on [0, 1]) is used:
    it is a degree-p polynomial with a positive, cancellation-free integral.
    """
    kind = descriptor[0]
    with mpmath.workdps(40):
        if kind == "jacobi":
            a, b = descriptor[1:]
            return float(mpmath.mpf(2) ** (a + b + p + 1) * mpmath.beta(b + p + 1, a + 1))
        if kind == "jacobi01":
            a, b = descriptor[1:]
            return float(mpmath.beta(b + p + 1, a + 1))
        if kind == "laguerre":
            return float(mpmath.gamma(descriptor[1] + p + 1))
    raise ValueError(f"unknown weight {descriptor!r}")


def rule_moment(rule: Rule1D, p: int) -> float:
    x = rule.nodes + 1.0 if rule.weight_descriptor[0] == "jacobi" else rule.nodes
    return float(np.dot(rule.weights, x**p))


def verify_rule(rule: Rule1D, rtol: float = 1e-11, label: str = "") -> list[VerificationCase]:
    """Moments of degree 0 .. 2N-1 of a 1D rule against the closed form."""
    N = len(rule)
    desc = rule.weight_descriptor
    out = []
    for p in range(2 * N):
        fields = dict(
            kind="quadrature", family=label or desc[0], params=tuple(desc[1:]), parameter=desc[0],
            n=N, k=p, m=None, j=None, x=None, y=None,
        )
        out.append(VerificationCase.compare(rule_moment(rule, p), exact_moment(desc, p), rtol, 0.0, note="moment", **fields))
    return out


def verify_quadrature(f: FamilySpec, n_max: int, rtol: float = 1e-11) -> list[VerificationCase]:
    """Moment checks for both 1D rules of the family rule used at degree 2 n_max."""
    rule = family_rule(f, 2 * n_max)
    return verify_rule(rule.outer, rtol, f.family.value + ":outer") + verify_rule(rule.inner, rtol, f.family.value + ":inner")


def summarize(cases: Iterable[VerificationCase]) -> dict:
    cases = list(cases)
    failed = [c for c in cases if not c.passed]
    finite = [c.abs_error for c in cases if math.isfinite(c.abs_error)]
    return {
        "cases": len(cases),
        "passed": len(cases) - len(failed),
        "failed": len(failed),
        "max_abs_error": max(finite, default=0.0),
    }

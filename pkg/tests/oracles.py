"""Reference constructions that share no code with the package.

Rodrigues formulas are differentiated symbolically by sympy; the Leibniz
expansion of the same formulas gives high-precision mpmath values for
non-rational parameters.
"""

from functools import lru_cache

import mpmath
import sympy as sp

X, Y = sp.symbols("x y", positive=True)
T = sp.symbols("t", real=True)


def _exact(v):
    # floats become short rationals; sympy numbers pass through untouched
    return v if isinstance(v, sp.Basic) else sp.nsimplify(v)


@lru_cache(maxsize=None)
def jacobi_rodrigues(n, a, b, var=T):
    """Expanded P_n^{(a,b)}(var) from the Rodrigues formula; a, b rational."""
    a, b = _exact(a), _exact(b)
    e = (-1) ** n / (2**n * sp.factorial(n)) * (1 - var) ** (-a) * (1 + var) ** (-b) * sp.diff(
        (1 - var) ** (n + a) * (1 + var) ** (n + b), var, n
    )
    return sp.expand(sp.simplify(e))


@lru_cache(maxsize=None)
def laguerre_rodrigues(n, a, var=T):
    a = _exact(a)
    e = var ** (-a) * sp.exp(var) / sp.factorial(n) * sp.diff(sp.exp(-var) * var ** (n + a), var, n)
    return sp.expand(sp.simplify(e))


def jacobi_leibniz(n, a, b, x):
    """Leibniz-rule expansion of the Jacobi Rodrigues formula, in mpmath."""
    x = mpmath.mpf(x)
    return sum(
        mpmath.binomial(n + a, n - s) * mpmath.binomial(n + b, s) * ((x - 1) / 2) ** s * ((x + 1) / 2) ** (n - s)
        for s in range(n + 1)
    )


def laguerre_leibniz(n, a, x):
    x = mpmath.mpf(x)
    return sum((-1) ** i * mpmath.binomial(n + a, n - i) * x**i / mpmath.factorial(i) for i in range(n + 1))


def family_symbolic(family, params, n, k):
    """P_{n,k} as a sympy expression in (X, Y), built from Rodrigues formulas."""
    params = [_exact(p) for p in params]
    if family == "square":
        a, b, c, d = params
        return sp.expand(jacobi_rodrigues(n - k, a, b).subs(T, X) * jacobi_rodrigues(k, c, d).subs(T, Y))
    a, b = params
    if family == "biangle":
        e = jacobi_rodrigues(n - k, a, b + k + sp.Rational(1, 2)).subs(T, 2 * X - 1) * sp.sqrt(X) ** k * jacobi_rodrigues(k, b, b).subs(T, Y / sp.sqrt(X))
    elif family == "laguerre-jacobi":
        e = laguerre_rodrigues(n - k, a + 2 * k + 1).subs(T, X) * X**k * jacobi_rodrigues(k, b, 0).subs(T, Y / X)
    else:
        e = laguerre_rodrigues(n - k, a + 2 * k + 1).subs(T, X) * X**k * laguerre_rodrigues(k, b).subs(T, Y / X)
    return sp.expand(e)


def central_difference(fn, lam, h):
    return (fn(lam + h) - fn(lam - h)) / (2 * h)

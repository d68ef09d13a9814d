#!/usr/bin/env python3
"""Sign of the lower terms in the beta-derivative on the square.

For P_N^{(a,b)} the coefficient of P_{N-s-1} in d/db is (-1)^(s+1) times the
d/da coefficient with a and b swapped.  This follows from the reflection
P_N^{(a,b)}(-x) = (-1)^N P_N^{(b,a)}(x).  The alternative sign (-1)^(N-s)
agrees with it only when N is odd.  This script evaluates both candidate
expansions and compares each against a central finite difference.
"""

import numpy as np

from koornwinder.derivatives import derivative_expansion, eval_expansion
from koornwinder.families import FamilySpec, MultiIndex
from koornwinder.verification import fd_derivative


def alt_sign_value(f, idx, x, y):
    e = derivative_expansion(f, "beta", idx)
    N = idx.n - idx.k
    total = 0.0
    for t in e.terms:
        c = t.coefficient
        if t.index != idx:
            s = idx.n - t.index.n - 1
            c = (-1) ** (N - s) * abs(c)
        total += c * eval_expansion(type(e)(f, idx, "beta", (type(t)(1.0, t.index),)), x, y)
    return total


def main():
    f = FamilySpec.square(1.0, 0.5, 0.0, 2.0)
    x, y = 0.37, -0.21
    print(f"params {f.params}, point ({x}, {y})")
    print(f"{'(n,k)':>7} {'n-k':>4} {'fd':>14} {'(-1)^(s+1)':>14} {'(-1)^(n-k-s)':>14}")
    for n, k in [(1, 0), (2, 0), (3, 0), (4, 0), (3, 1), (4, 1), (5, 2), (6, 2)]:
        idx = MultiIndex(n, k)
        fd = float(fd_derivative(f, "beta", idx, x, y))
        ours = eval_expansion(derivative_expansion(f, "beta", idx), x, y)
        alt = alt_sign_value(f, idx, x, y)
        mark = "" if np.isclose(alt, fd, rtol=1e-6, atol=1e-8) else "  <- alternative sign fails"
        print(f"{str((n, k)):>7} {n - k:>4} {fd:>14.8f} {ours:>14.8f} {alt:>14.8f}{mark}")


if __name__ == "__main__":
    main()

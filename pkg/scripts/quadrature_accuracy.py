#!/usr/bin/env python3
"""Worst relative moment error of Golub-Welsch rules, with and without polishing.

Raw weights come from first eigenvector components of the QL iteration;
polished rules take Newton steps on the nodes and recompute the weights from
orthonormal polynomial values.
"""

from dataclasses import replace

import numpy as np

from koornwinder.quadrature import golub_welsch, jacobi_mass, jacobi_recurrence, laguerre_mass, laguerre_recurrence
from koornwinder.verification import exact_moment, rule_moment


def worst_error(rule):
    desc = rule.weight_descriptor
    return max(abs(rule_moment(rule, p) / exact_moment(desc, p) - 1) for p in range(2 * len(rule)))


def main():
    rng = np.random.default_rng(0)
    draws = [(-0.8, -0.8), (4.0, 4.0), (-0.8, 4.0)] + [tuple(rng.uniform(-0.8, 4, 2)) for _ in range(3)]
    print(f"{'N':>3} {'jacobi raw':>11} {'polished':>10} {'laguerre raw':>13} {'polished':>10}")
    for N in (5, 10, 20, 30, 40, 50, 60):
        row = []
        for polish in (False, True):
            row.append(max(worst_error(replace(golub_welsch(jacobi_recurrence(N, a, b), jacobi_mass(a, b), N, polish), weight_descriptor=("jacobi", a, b))) for a, b in draws))
        for polish in (False, True):
            row.append(max(worst_error(replace(golub_welsch(laguerre_recurrence(N, a), laguerre_mass(a), N, polish), weight_descriptor=("laguerre", a))) for a, _ in draws))
        print(f"{N:>3} {row[0]:>11.1e} {row[1]:>10.1e} {row[2]:>13.1e} {row[3]:>10.1e}")


if __name__ == "__main__":
    main()

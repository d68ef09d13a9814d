#!/usr/bin/env python3
"""Run every oracle sweep over seeded random parameter draws and summarize.

    python scripts/run_sweeps.py --draws 3 --nmax 6 --outdir reports/
"""

from __future__ import annotations

import argparse
import time
from dataclasses import dataclass
from pathlib import Path

import numpy as np

from koornwinder.cli import write_records
from koornwinder.derivatives import SUPPORTED_PARAMS
from koornwinder.families import Family
from koornwinder.verification import (
    ORTHO_PARAMS,
    sample_params,
    summarize,
    verify_derivatives,
    verify_norms,
    verify_orthogonality,
    verify_quadrature,
)


@dataclass(frozen=True)
class SweepConfig:
    draws: int = 3
    nmax: int = 6
    points: int = 10
    seed: int = 0
    outdir: Path | None = None


def sweep(cfg: SweepConfig) -> dict[tuple[str, str], list]:
    rng = np.random.default_rng(cfg.seed)
    results: dict[tuple[str, str], list] = {}
    for fam in Family:
        specs = [sample_params(fam, rng) for _ in range(cfg.draws)]
        for kind in ("deriv", "ortho", "norms", "quadrature"):
            cases = []
            for i, f in enumerate(specs):
                if kind == "deriv":
                    for p in SUPPORTED_PARAMS[fam]:
                        cases += verify_derivatives(f, p, cfg.nmax, points=cfg.points, seed=cfg.seed + i)
                elif kind == "ortho":
                    for p in SUPPORTED_PARAMS[fam]:
                        cases += verify_orthogonality(f, p, cfg.nmax)
                elif kind == "norms":
                    cases += verify_norms(f, cfg.nmax)
                else:
                    cases += verify_quadrature(f, cfg.nmax)
            results[(fam.value, kind)] = sorted(cases, key=lambda c: c.key)
    return results


def main() -> int:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--draws", type=int, default=3)
    ap.add_argument("--nmax", type=int, default=6)
    ap.add_argument("--points", type=int, default=10)
    ap.add_argument("--seed", type=int, default=0)
    ap.add_argument("--outdir", type=Path, default=None)
    cfg = SweepConfig(**vars(ap.parse_args()))

    t0 = time.perf_counter()
    results = sweep(cfg)
    print(f"{'family':<18} {'kind':<11} {'cases':>7} {'failed':>6}  {'err/tol':>8}  note")
    failed = 0
    for (fam, kind), cases in results.items():
        s = summarize(cases)
        failed += s["failed"]
        ratio = max((c.abs_error / max(c.atol, c.rtol * abs(c.oracle)) for c in cases if c.passed), default=0.0)
        note = ""
        if kind == "ortho":
            table = set(ORTHO_PARAMS[Family(fam)])
            extra = [p for p in SUPPORTED_PARAMS[Family(fam)] if p not in table]
            note = f"{','.join(extra)} vs quadrature of FD" if extra else ""
        print(f"{fam:<18} {kind:<11} {s['cases']:>7} {s['failed']:>6}  {ratio:>8.2f}  {note}")
        if cfg.outdir:
            cfg.outdir.mkdir(parents=True, exist_ok=True)
            write_records([c.record() for c in cases], "csv", str(cfg.outdir / f"{fam}_{kind}.csv"))
    print(f"total failed: {failed}  ({time.perf_counter() - t0:.1f}s)")
    return 0 if failed == 0 else 1


if __name__ == "__main__":
    raise SystemExit(main())

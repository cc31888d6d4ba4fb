#!/usr/bin/env python3
"""Benchmark the compiled kernel extension against its pure-Python twin.

Times the three hot kernels (dilogarithm, wedge panels, cosine-log panels)
on identical workloads, plus an end-to-end potential evaluation through
whichever backend is active.  Run from the repository root:

    python benchmarks/bench_backends.py [--repeat 5]
"""

from __future__ import annotations

import argparse
import math
import os
import sys
import time

sys.path.insert(0, os.path.join(os.path.dirname(os.path.dirname(os.path.abspath(__file__))), "src"))

import numpy as np

from lunepot import _kernels_py as py_kern

try:
    from lunepot import _kernels_cy as cy_kern
except ImportError:
    cy_kern = None


def _time(fn, repeat: int) -> float:
    best = math.inf
    for _ in range(repeat):
        t0 = time.perf_counter()
        fn()
        best = min(best, time.perf_counter() - t0)
    return best


def _dilog_workload(kern, pts):
    def run():
        f = kern.li2_parts
        for x, y in pts:
            f(x, y)

    return run


def _panel_workload(kern, name, panels):
    def run():
        f = getattr(kern, name)
        for a, lo, hi in panels:
            f(a, lo, hi)

    return run


def _row(label: str, t_py: float, t_cy: float | None, n: int) -> None:
    py_rate = n / t_py
    if t_cy is None:
        print(f"{label:<28} python {t_py*1e3:8.2f} ms ({py_rate/1e3:8.1f} k/s)")
    else:
        print(
            f"{label:<28} python {t_py*1e3:8.2f} ms   compiled {t_cy*1e3:8.2f} ms"
            f"   speedup {t_py/t_cy:6.1f}x"
        )


def main() -> int:
    parser = argparse.ArgumentParser()
    parser.add_argument("--repeat", type=int, default=5)
    parser.add_argument("--n", type=int, default=20000, help="points per workload")
    args = parser.parse_args()

    rng = np.random.default_rng(42)
    r = rng.uniform(0.02, 2.5, args.n)
    th = rng.uniform(-math.pi, math.pi, args.n)
    pts = list(zip(r * np.cos(th), r * np.sin(th)))
    a_vals = rng.uniform(0.0, 1.2, args.n)
    los = rng.uniform(0.0, 1.5, args.n)
    panels = [(float(a), float(lo), float(lo) + 0.3) for a, lo in zip(a_vals, los)]

    print(f"workload size {args.n}, best of {args.repeat} runs")
    if cy_kern is None:
        print("compiled backend not built; timing the pure-Python lane only")

    t_py = _time(_dilog_workload(py_kern, pts), args.repeat)
    t_cy = _time(_dilog_workload(cy_kern, pts), args.repeat) if cy_kern else None
    _row("dilogarithm", t_py, t_cy, args.n)

    for label, name in (("wedge panel (GK 15/7)", "wedge_panel"), ("cos-log panel (GK 15/7)", "cos_log_panel")):
        t_py = _time(_panel_workload(py_kern, name, panels), args.repeat)
        t_cy = _time(_panel_workload(cy_kern, name, panels), args.repeat) if cy_kern else None
        _row(label, t_py, t_cy, args.n)

    # end-to-end: closed-form potential and its oracle through the active backend
    from lunepot import OverlapQuery, backend_name, lune_potential, quad_lune

    queries = [OverlapQuery(float(a), 0.3) for a in np.linspace(0.0, 1.3, 500)]

    def closed():
        for q in queries:
            lune_potential(q)

    def oracle():
        for q in queries[::10]:
            quad_lune(q, 1e-12)

    t_closed = _time(closed, args.repeat)
    t_oracle = _time(oracle, args.repeat)
    print(f"\nactive backend: {backend_name()}")
    print(f"closed-form potential        {t_closed*1e3:8.2f} ms / 500 points")
    print(f"quadrature oracle (1e-12)    {t_oracle*1e3:8.2f} ms / 50 points")
    return 0


if __name__ == "__main__":
    raise SystemExit(main())

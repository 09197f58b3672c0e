#!/usr/bin/env python3
"""Benchmark the compiled kernels against the NumPy fallback.

Times the two hot paths (simplex pivoting, ADMM column iterations) at the
problem sizes the certificate sweeps and toy pipelines actually hit, plus
one end-to-end toy pipeline per backend.

Run after building the extension:  python benchmarks/bench_kernels.py
"""

import time

import numpy as np

from assc._kernels import pure

try:
    from assc._kernels import _core as core
except ImportError:
    core = None


def time_call(fn, repeats=3):
    best = np.inf
    for _ in range(repeats):
        t0 = time.perf_counter()
        fn()
        best = min(best, time.perf_counter() - t0)
    return best


def bench_simplex(mod, m, n, trials, seed=7):
    rng = np.random.default_rng(seed)
    problems = []
    for _ in range(trials):
        A = rng.normal(size=(m, n))
        x0 = np.abs(rng.normal(size=n))
        problems.append((A, A @ x0, rng.normal(size=n)))

    def run():
        for A, b, c in problems:
            mod.simplex_solve(A, b, c, 1e-8, 1e-8, 10000)
    return time_call(run)


def bench_admm_exact(mod, D, m, trials, seed=7):
    rng = np.random.default_rng(seed)
    problems = []
    for _ in range(trials):
        G = rng.normal(size=(D + 1, m))
        G[-1] = 1.0
        h = np.zeros(D + 1)
        h[-1] = 1.0
        problems.append((np.linalg.inv(np.eye(m) + G.T @ G), G, h))

    def run():
        for Minv, G, h in problems:
            mod.admm_exact(Minv, G, h, 10.0, 1.05, 1e8, 2000, 1e-7, 1e-7)
    return time_call(run)


def bench_toy_pipeline(backend_env):
    import importlib
    import os
    import subprocess
    import sys
    code = (
        "import time; t0=time.perf_counter();"
        "from assc.datagen import make_toy;"
        "from assc.solvers import SolverConfig, build_coefficient_matrix;"
        "from assc.certificates import certify;"
        "toy = make_toy('TwoLinesR3');"
        "C = build_coefficient_matrix(toy.arrangement.data, SolverConfig());"
        "certify(toy.arrangement, C);"
        "print(time.perf_counter()-t0)"
    )
    env = dict(os.environ, ASSC_PURE_PYTHON=backend_env)
    out = subprocess.run([sys.executable, "-c", code], capture_output=True,
                         text=True, env=env)
    return float(out.stdout.strip().splitlines()[-1])


def main():
    if core is None:
        print("compiled kernel not available; showing fallback only")
    rows = []
    for label, m, n, trials in [("simplex 6x30 x200", 6, 30, 200),
                                ("simplex 10x60 x100", 10, 60, 100),
                                ("simplex 4x20 x500", 4, 20, 500)]:
        tp = bench_simplex(pure, m, n, trials)
        tc = bench_simplex(core, m, n, trials) if core else np.nan
        rows.append((label, tp, tc))
    for label, D, m, trials in [("admm exact D8 m30 x50", 8, 30, 50),
                                ("admm exact D8 m100 x20", 8, 100, 20)]:
        tp = bench_admm_exact(pure, D, m, trials)
        tc = bench_admm_exact(core, D, m, trials) if core else np.nan
        rows.append((label, tp, tc))
    rows.append(("toy pipeline end-to-end",
                 bench_toy_pipeline("1"),
                 bench_toy_pipeline("0") if core else np.nan))

    print(f"{'case':28s} {'pure [s]':>10s} {'cython [s]':>11s} {'speedup':>8s}")
    for label, tp, tc in rows:
        sp = f"{tp / tc:6.1f}x" if np.isfinite(tc) and tc > 0 else "   n/a"
        print(f"{label:28s} {tp:10.4f} {tc:11.4f} {sp:>8s}")


if __name__ == "__main__":
    main()

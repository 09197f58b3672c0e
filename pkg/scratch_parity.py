import time
import numpy as np
from assc._kernels import pure
from assc._kernels import _core as core

rng = np.random.default_rng(42)

# --- simplex parity on random standard-form problems
mism = 0
for t in range(300):
    m = rng.integers(1, 10)
    n = rng.integers(1, 25)
    A = rng.normal(size=(m, n))
    if rng.random() < 0.75:
        x0 = np.abs(rng.normal(size=n))
        b = A @ x0
    else:
        b = rng.normal(size=m)
    c = rng.normal(size=n)
    rp = pure.simplex_solve(A, b, c, 1e-8, 1e-8, 10000)
    rc = core.simplex_solve(A, b, c, 1e-8, 1e-8, 10000)
    if rp[0] != rc[0]:
        print("status mismatch", t, rp[0], rc[0]); mism += 1
    elif rp[0] == 0 and abs(rp[2] - rc[2]) > 1e-7 * max(1, abs(rp[2])):
        print("obj mismatch", t, rp[2], rc[2]); mism += 1
print("simplex mismatches:", mism)

# --- admm parity
for t in range(50):
    D, m = rng.integers(2, 8), rng.integers(4, 25)
    G = rng.normal(size=(D + 1, m)); G[-1] = 1.0
    h = np.zeros(D + 1); h[-1] = 1.0
    Minv = np.linalg.inv(np.eye(m) + G.T @ G)
    rp = pure.admm_exact(Minv, G, h, 10.0, 1.05, 1e8, 2000, 1e-7, 1e-7)
    rc = core.admm_exact(Minv, G, h, 10.0, 1.05, 1e8, 2000, 1e-7, 1e-7)
    assert rp[3] == rc[3], (t, rp[3], rc[3])
    assert np.allclose(rp[0], rc[0], atol=1e-9), t
    assert rp[4] == rc[4]
print("admm exact parity OK")

for t in range(50):
    D, m = rng.integers(2, 8), rng.integers(4, 25)
    G = rng.normal(size=(D, m)); g = rng.normal(size=D)
    lam, mu = 50.0, 10.0
    F = lam * G.T @ G + mu * (np.eye(m) + np.ones((m, m)))
    Finv = np.linalg.inv(F)
    lin0 = lam * G.T @ g
    rp = pure.admm_noisy(Finv, lin0, True, mu, 2000, 1e-7, 1e-7)
    rc = core.admm_noisy(Finv, lin0, True, mu, 2000, 1e-7, 1e-7)
    assert rp[3] == rc[3], (t, rp[3], rc[3])
    assert np.allclose(rp[0], rc[0], atol=1e-9), t
print("admm noisy parity OK")

# --- speed comparison
def bench_simplex(mod, trials=200):
    r = np.random.default_rng(7)
    t0 = time.perf_counter()
    for _ in range(trials):
        m, n = 6, 30
        A = r.normal(size=(m, n)); x0 = np.abs(r.normal(size=n)); b = A @ x0
        c = r.normal(size=n)
        mod.simplex_solve(A, b, c, 1e-8, 1e-8, 10000)
    return time.perf_counter() - t0

def bench_admm(mod, trials=30):
    r = np.random.default_rng(7)
    t0 = time.perf_counter()
    for _ in range(trials):
        m = 60
        G = r.normal(size=(8, m)); G[-1] = 1.0
        h = np.zeros(8); h[-1] = 1.0
        Minv = np.linalg.inv(np.eye(m) + G.T @ G)
        mod.admm_exact(Minv, G, h, 10.0, 1.05, 1e8, 2000, 1e-7, 1e-7)
    return time.perf_counter() - t0

tp, tc = bench_simplex(pure), bench_simplex(core)
print(f"simplex: pure {tp:.3f}s, cython {tc:.3f}s, speedup {tp/tc:.1f}x")
tp, tc = bench_admm(pure), bench_admm(core)
print(f"admm:    pure {tp:.3f}s, cython {tc:.3f}s, speedup {tp/tc:.1f}x")

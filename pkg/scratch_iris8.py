import numpy as np
from sklearn.datasets import load_iris
from assc.model import DataMatrix, normalize_labels
from assc.solvers import SolverConfig, build_coefficient_matrix, compute_lambda
from assc.clustering import build_affinity, spectral_cluster, clustering_error

iris = load_iris()
raw = iris.data.T.astype(float)
lab = normalize_labels(iris.target)

def prep(name):
    if name == "raw": return raw
    if name == "minmax":
        lo, hi = raw.min(axis=1, keepdims=True), raw.max(axis=1, keepdims=True)
        return (raw - lo) / (hi - lo)
    if name == "unit": return raw / np.linalg.norm(raw, axis=0, keepdims=True)
    if name == "scale-global": return raw / np.abs(raw).max()
    if name == "center":  # center features only
        return raw - raw.mean(axis=1, keepdims=True)
    raise ValueError(name)

alphas = [1, 2, 5, 10, 20, 50, 100, 200, 800]
for name in ["raw", "minmax", "unit", "scale-global", "center"]:
    P = prep(name)
    X = DataMatrix(P, lab)
    row = {}
    for mode in ["ASSC", "SSC"]:
        best, besta = None, None
        for alpha in alphas:
            try:
                lam = compute_lambda(X, alpha)
            except Exception:
                continue
            cfg = SolverConfig(mode=mode, variant="Noisy", lam=lam, max_iters=3000)
            C = build_coefficient_matrix(X, cfg)
            A = build_affinity(C)
            err = clustering_error(spectral_cluster(A, 3, seed=0), lab)
            if best is None or err < best:
                best, besta = err, alpha
        row[mode] = (best, besta)
    print(f"{name:12s}: ASSC best={row['ASSC'][0]:.2f}@a={row['ASSC'][1]}  "
          f"SSC best={row['SSC'][0]:.2f}@a={row['SSC'][1]}")

import time
import numpy as np
from sklearn.datasets import load_iris
from assc.model import DataMatrix, normalize_labels
from assc.solvers import SolverConfig, build_coefficient_matrix, compute_lambda
from assc.clustering import build_affinity, spectral_cluster, clustering_error

iris = load_iris()
X = DataMatrix(iris.data.T, normalize_labels(iris.target))
print("denominator:", 1.0 / compute_lambda(X, 1.0))

for mode in ["ASSC", "SSC"]:
    print(f"--- {mode}(n) ---")
    for alpha in [2, 5, 10, 20, 50, 100, 200, 500]:
        t0 = time.time()
        lam = compute_lambda(X, alpha)
        cfg = SolverConfig(mode=mode, variant="Noisy", lam=lam)
        C = build_coefficient_matrix(X, cfg)
        A = build_affinity(C)
        pred = spectral_cluster(A, 3, seed=0)
        err = clustering_error(pred, X.labels)
        nconv = sum(c.converged for c in C.columns)
        iters = int(np.mean([c.iterations for c in C.columns]))
        print(f"alpha={alpha:5g} lam={lam:.4f} err={err:6.2f}% conv={nconv}/150 "
              f"mean_iters={iters} ({time.time()-t0:.1f}s)")

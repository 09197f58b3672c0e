import numpy as np
from sklearn.datasets import load_iris
from assc.model import DataMatrix, normalize_labels
from assc.solvers import SolverConfig, build_coefficient_matrix, compute_lambda
from assc.clustering import build_affinity, spectral_cluster, clustering_error

iris = load_iris()
X = DataMatrix(iris.data.T, normalize_labels(iris.target))
lab = X.labels

def run(mode, alpha, penalty, tol, iters):
    lam = compute_lambda(X, alpha)
    cfg = SolverConfig(mode=mode, variant="Noisy", lam=lam, max_iters=iters,
                       primal_tol=tol, dual_tol=tol, noisy_penalty=penalty)
    C = build_coefficient_matrix(X, cfg)
    A = build_affinity(C)
    return clustering_error(spectral_cluster(A, 3, seed=0), lab)

print("ASSC raw, fixed penalty 800, thr 2e-4, 150 iters:")
for alpha in [1, 2, 5, 10, 20, 50, 100, 200, 800]:
    e = run("ASSC", alpha, 800.0, 2e-4, 150)
    print(f"  alpha={alpha:5g}: {e:.2f}%")
print("SSC raw, fixed penalty 800, thr 2e-4, 150 iters:")
for alpha in [1, 2, 5, 10, 20, 50, 100, 200, 800]:
    e = run("SSC", alpha, 800.0, 2e-4, 150)
    print(f"  alpha={alpha:5g}: {e:.2f}%")

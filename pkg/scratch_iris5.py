import numpy as np
from sklearn.datasets import load_iris
from assc.model import DataMatrix, normalize_labels
from assc.solvers import SolverConfig, build_coefficient_matrix, compute_lambda
from assc.clustering import build_affinity, spectral_cluster, clustering_error

iris = load_iris()
X = DataMatrix(iris.data.T, normalize_labels(iris.target))

def run(mode, alpha, tol, iters, penalty=None):
    lam = compute_lambda(X, alpha)
    cfg = SolverConfig(mode=mode, variant="Noisy", lam=lam, max_iters=iters,
                       primal_tol=tol, dual_tol=tol, noisy_penalty=penalty)
    C = build_coefficient_matrix(X, cfg)
    A = build_affinity(C)
    errs = [clustering_error(spectral_cluster(A, 3, seed=s), X.labels) for s in range(3)]
    return errs, sum(c.converged for c in C.columns)

for tol, iters in [(2e-4, 200), (1e-5, 1000)]:
    print(f"=== tol={tol} iters={iters} ===")
    for mode in ["ASSC", "SSC"]:
        for alpha in [2, 5, 10, 20, 50, 100, 200, 800]:
            errs, cv = run(mode, alpha, tol, iters)
            print(f"{mode:4s} alpha={alpha:5g} conv={cv:3d}/150 errs={[f'{e:.2f}' for e in errs]}")

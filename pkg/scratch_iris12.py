import numpy as np
from sklearn.datasets import load_iris
from assc.model import DataMatrix, normalize_labels
from assc.solvers import compute_lambda
from assc.clustering import AffinityMatrix, spectral_cluster, clustering_error
from scratch_iris11 import admm_joint

iris = load_iris()
Y = iris.data.T.astype(float)
lab = normalize_labels(iris.target)

def err_of(C, seed=0):
    A = 0.5 * (np.abs(C) + np.abs(C.T)); np.fill_diagonal(A, 0.0)
    return clustering_error(spectral_cluster(AffinityMatrix(0.5*(A+A.T)), 3, seed=seed), lab)

print("robustness of ASSC-joint around alpha=2:")
for alpha in [1.0, 1.5, 2.0, 2.5, 3.0, 4.0]:
    for maxiter in [150, 200, 300, 500]:
        lam = compute_lambda(DataMatrix(Y, lab), alpha)
        C, its = admm_joint(Y, lam, alpha, True, maxiter, 2e-4)
        print(f"  alpha={alpha:4g} maxiter={maxiter:4d} iters={its:4d} err={err_of(C):.2f}%")
print("seeds at alpha=2, maxiter=200:")
lam = compute_lambda(DataMatrix(Y, lab), 2.0)
C, _ = admm_joint(Y, lam, 2.0, True, 200, 2e-4)
print("  ", [f"{err_of(C, s):.2f}" for s in range(6)])

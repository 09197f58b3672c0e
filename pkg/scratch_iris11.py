import numpy as np
from sklearn.datasets import load_iris
from assc.model import DataMatrix, normalize_labels
from assc.solvers import compute_lambda
from assc.clustering import AffinityMatrix, spectral_cluster, clustering_error

iris = load_iris()
Y = iris.data.T.astype(float)   # D x N
lab = normalize_labels(iris.target)
N = Y.shape[1]

def admm_joint(Y, lam, mu2, affine, maxiter, thr):
    """Reference-style joint-matrix ADMM with diag zeroing each iteration."""
    N = Y.shape[1]
    YtY = Y.T @ Y
    if affine:
        Ainv = np.linalg.inv(lam * YtY + mu2 * np.eye(N) + mu2 * np.ones((N, N)))
    else:
        Ainv = np.linalg.inv(lam * YtY + mu2 * np.eye(N))
    C = np.zeros((N, N))
    Lam2 = np.zeros((N, N))
    lam3 = np.zeros(N)
    for it in range(maxiter):
        if affine:
            Z = Ainv @ (lam * YtY + mu2 * (C - Lam2 / mu2)
                        + mu2 * np.outer(np.ones(N), np.ones(N) - lam3 / mu2))
        else:
            Z = Ainv @ (lam * YtY + mu2 * (C - Lam2 / mu2))
        np.fill_diagonal(Z, 0.0)
        V = Z + Lam2 / mu2
        Cn = np.maximum(0, np.abs(V) - 1.0 / mu2) * np.sign(V)
        np.fill_diagonal(Cn, 0.0)
        Lam2 = Lam2 + mu2 * (Z - Cn)
        if affine:
            lam3 = lam3 + mu2 * (np.ones(N) @ Z - np.ones(N))
        err1 = np.abs(Z - Cn).max()
        err3 = np.abs(np.ones(N) @ Z - 1).max() if affine else 0.0
        C = Cn
        if err1 <= thr and err3 <= thr:
            break
    return C, it + 1

for affine, tag, alphas in [(True, "ASSC-joint", [2, 5, 10, 20, 50, 100, 200, 800]),
                            (False, "SSC-joint", [2, 5, 10, 20, 50, 100, 200, 800])]:
    for alpha in alphas:
        lam = compute_lambda(DataMatrix(Y, lab), alpha)
        C, its = admm_joint(Y, lam, alpha, affine, 200, 2e-4)
        A = 0.5 * (np.abs(C) + np.abs(C.T))
        np.fill_diagonal(A, 0.0)
        err = clustering_error(spectral_cluster(AffinityMatrix(0.5*(A+A.T)), 3, seed=0), lab)
        print(f"{tag} alpha={alpha:5g} iters={its:4d} err={err:.2f}%")

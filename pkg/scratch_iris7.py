import numpy as np
from sklearn.datasets import load_iris
from sklearn.cluster import KMeans
from assc.model import DataMatrix, normalize_labels
from assc.solvers import SolverConfig, build_coefficient_matrix, compute_lambda
from assc.clustering import build_affinity, clustering_error
from assc.numerics import symmetric_eig
from scipy.linalg import eigh

iris = load_iris()
X = DataMatrix(iris.data.T, normalize_labels(iris.target))
lab = X.labels

def km(emb, n, seed=0):
    return KMeans(n_clusters=n, n_init=20, max_iter=300, random_state=seed).fit_predict(emb) + 1

def spec_sym(A, n, seed=0, rownorm=True):
    deg = np.maximum(A.sum(axis=1), 1e-12)
    dinv = 1/np.sqrt(deg)
    L = np.eye(len(A)) - dinv[:, None]*A*dinv[None, :]
    _, V = symmetric_eig(L)
    emb = V[:, :n]
    if rownorm:
        nr = np.linalg.norm(emb, axis=1, keepdims=True)
        emb = emb/np.where(nr > 0, nr, 1)
    return km(emb, n, seed)

def spec_rw(A, n, seed=0):
    # generalized eigenproblem L v = lambda D v  (random-walk / Shi-Malik)
    deg = np.maximum(A.sum(axis=1), 1e-12)
    L = np.diag(deg) - A
    vals, V = eigh(L, np.diag(deg))
    return km(V[:, :n], n, seed)

def spec_unnorm(A, n, seed=0):
    deg = A.sum(axis=1)
    L = np.diag(deg) - A
    _, V = symmetric_eig(L)
    return km(V[:, :n], n, seed)

for mode, alphas in [("ASSC", [5, 20, 100]), ("SSC", [5, 10])]:
    for alpha in alphas:
        lam = compute_lambda(X, alpha)
        cfg = SolverConfig(mode=mode, variant="Noisy", lam=lam, max_iters=4000)
        C = build_coefficient_matrix(X, cfg)
        A = build_affinity(C).matrix
        res = {}
        res["sym+rownorm"] = clustering_error(spec_sym(A, 3), lab)
        res["sym-no-rownorm"] = clustering_error(spec_sym(A, 3, rownorm=False), lab)
        res["randomwalk"] = clustering_error(spec_rw(A, 3), lab)
        res["unnormalized"] = clustering_error(spec_unnorm(A, 3), lab)
        print(f"{mode} alpha={alpha:4g}: " + "  ".join(f"{k}={v:.2f}" for k, v in res.items()))

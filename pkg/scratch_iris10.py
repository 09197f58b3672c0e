import numpy as np
from sklearn.datasets import load_iris
from sklearn.cluster import KMeans
from assc.model import DataMatrix, normalize_labels
from assc.solvers import SolverConfig, build_coefficient_matrix, compute_lambda
from assc.clustering import build_affinity, clustering_error
from assc.numerics import symmetric_eig

iris = load_iris()
X = DataMatrix(iris.data.T, normalize_labels(iris.target))
lab = X.labels

def spec(A, n, seed=0, skip=0, extra=0, rownorm=True):
    deg = np.maximum(A.sum(axis=1), 1e-12)
    dinv = 1/np.sqrt(deg)
    L = np.eye(len(A)) - dinv[:, None]*A*dinv[None, :]
    _, V = symmetric_eig(L)
    emb = V[:, skip:skip+n+extra]
    if rownorm:
        nr = np.linalg.norm(emb, axis=1, keepdims=True)
        emb = emb/np.where(nr > 0, nr, 1)
    km = KMeans(n_clusters=n, n_init=20, max_iter=300, random_state=seed)
    return km.fit_predict(emb) + 1

def topk(A, k):
    B = np.zeros_like(A)
    for j in range(A.shape[1]):
        idx = np.argsort(A[:, j])[::-1][:k]
        B[idx, j] = A[idx, j]
    return np.maximum(B, B.T)

for alpha in [5, 20]:
    lam = compute_lambda(X, alpha)
    cfg = SolverConfig(mode="ASSC", variant="Noisy", lam=lam, max_iters=4000)
    C = build_coefficient_matrix(X, cfg)
    A = build_affinity(C).matrix
    out = {
        "base": clustering_error(spec(A, 3), lab),
        "skip-trivial": clustering_error(spec(A, 3, skip=1), lab),
        "4vecs": clustering_error(spec(A, 3, extra=1), lab),
        "top8": clustering_error(spec(topk(A, 8), 3), lab),
        "top5": clustering_error(spec(topk(A, 5), 3), lab),
        "top12": clustering_error(spec(topk(A, 12), 3), lab),
    }
    print(f"ASSC alpha={alpha}: " + "  ".join(f"{k}={v:.2f}" for k, v in out.items()))

print("fine alpha scan (standard config):")
for alpha in [2, 3, 4, 6, 8, 12, 15, 30, 40, 70]:
    lam = compute_lambda(X, alpha)
    cfg = SolverConfig(mode="ASSC", variant="Noisy", lam=lam, max_iters=4000)
    C = build_coefficient_matrix(X, cfg)
    A = build_affinity(C).matrix
    print(f"  alpha={alpha:4g}: err={clustering_error(spec(A, 3), lab):.2f}")

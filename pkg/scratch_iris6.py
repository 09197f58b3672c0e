import numpy as np
from sklearn.datasets import load_iris
from assc.model import DataMatrix, normalize_labels
from assc.solvers import SolverConfig, build_coefficient_matrix, compute_lambda
from assc.clustering import build_affinity, spectral_cluster, clustering_error

iris = load_iris()
X = DataMatrix(iris.data.T, normalize_labels(iris.target))
lab = X.labels

def leakage(C):
    """fraction of |C| mass on wrong-cluster entries, per column avg; and per cluster-pair mass"""
    M = np.abs(C)
    wrong = 0.0; tot = 0.0
    for j in range(150):
        w = M[lab != lab[j], j].sum(); t = M[:, j].sum()
        wrong += w; tot += t
    return wrong / tot

for mode, alpha in [("SSC", 5), ("SSC", 10), ("ASSC", 5), ("ASSC", 20), ("ASSC", 100)]:
    lam = compute_lambda(X, alpha)
    cfg = SolverConfig(mode=mode, variant="Noisy", lam=lam, max_iters=4000)
    C = build_coefficient_matrix(X, cfg)
    A = build_affinity(C)
    err = clustering_error(spectral_cluster(A, 3, seed=0), lab)
    # per-pair affinity block mass
    blocks = np.zeros((3, 3))
    for a in range(3):
        for b in range(3):
            blocks[a, b] = A.matrix[np.ix_(lab == a + 1, lab == b + 1)].mean()
    print(f"{mode} alpha={alpha:4g}: leak={leakage(C.matrix)*100:.2f}% err={err:.2f}%")
    print("  block-mean affinity:\n", np.array_str(blocks, precision=5, suppress_small=True))
    # which points are misclassified?
    pred = spectral_cluster(A, 3, seed=0)
    from scipy.optimize import linear_sum_assignment
    cont = np.zeros((3, 3), dtype=int)
    for p, t in zip(pred, lab): cont[p-1, t-1] += 1
    r, c = linear_sum_assignment(-cont)
    print("  contingency (rows=pred):\n", cont, "assign", list(zip(r, c)))
